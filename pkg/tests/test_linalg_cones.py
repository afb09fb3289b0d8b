from fractions import Fraction

import pytest

from wallchamber import linalg
from wallchamber.cones import Cone, double_description, primitive
from wallchamber.fields import QQ, PrimeField
from wallchamber.linalg import Subspace


def test_rref_rank_nullspace_over_q():
    A = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)], [Fraction(0), Fraction(1), Fraction(1)]]
    assert linalg.rank(A, QQ) == 2
    ns = linalg.nullspace(A, 3, QQ)
    assert len(ns) == 1
    assert all(sum(a * b for a, b in zip(row, ns[0])) == 0 for row in A)


def test_inverse_over_f3():
    F = PrimeField(3)
    A = [[1, 2], [0, 1]]
    inv = linalg.inverse(A, F)
    assert linalg.matmul(A, inv, F, 2) == linalg.identity(2, F)


def test_subspace_canonical():
    F = PrimeField(2)
    S = Subspace([[1, 1, 0], [0, 1, 1]], 3, F)
    T = Subspace([[1, 0, 1], [1, 1, 0]], 3, F)
    assert S == T and hash(S) == hash(T)
    assert S.contains([0, 1, 1]) and not S.contains([1, 0, 0])
    assert len(S.complement_indices()) == 1


def test_enumerate_subspaces_counts():
    F = PrimeField(2)
    # Gaussian binomials: 1, 7, 7, 1 for F_2^3
    counts = [sum(1 for _ in linalg.enumerate_subspaces(3, F, k)) for k in range(4)]
    assert counts == [1, 7, 7, 1]


def test_primitive():
    assert primitive([Fraction(2, 3), Fraction(-4, 3)]) == (1, -2)
    assert primitive([0, 0]) == (0, 0)


def test_double_description_orthant_and_line():
    lin, rays = double_description([(-1, 0), (0, -1)], 2)
    assert lin == [] and rays == [(0, 1), (1, 0)]
    lin, rays = double_description([(1, 0), (-1, 0)], 2)
    assert rays == [] and [abs(x) for x in lin[0]] == [0, 1]


def test_cone_equality_and_dim():
    c1 = Cone.from_generators([(1, 0, 0), (0, 1, 0)])
    c2 = Cone.from_inequalities([(-1, 0, 0), (0, -1, 0)], [(0, 0, 1)])
    assert c1 == c2
    assert c1.dim == 2 and c1.codim == 1
    half = Cone.from_inequalities([(1, 0, 0)], [(2, 0, 1)], n=3)
    assert half.dim == 2
    assert half.contains((-1, 5, 2)) and not half.contains((1, 0, -2))
    assert sorted(half.rays) == [(-1, 0, 2)] and len(half.lineality) == 1


def test_cone_containment():
    big = Cone.from_generators([(1, 0), (0, 1)])
    small = Cone.from_generators([(1, 1)])
    assert big.contains_cone(small) and not small.contains_cone(big)
