"""Exact rational polyhedral cones via the double description method.

A cone carries a V-description (lineality basis plus extreme rays) and an
H-description (rows a with a.x <= 0, rows b with b.x = 0).  Either one is
computed from the other on demand, so equality and containment tests are
always exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd

from . import linalg
from .fields import QQ


def dot(a, b):
    return sum(Fraction(x) * y for x, y in zip(a, b))


def primitive(v):
    """Scale a nonzero rational vector to a primitive integer vector."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints) if g else tuple(ints)


def _orth_complement_project(v, basis):
    """Project v onto the orthogonal complement of span(basis) (exact Gram-Schmidt)."""
    ortho = []
    for b in basis:
        w = [Fraction(x) for x in b]
        for o in ortho:
            c = dot(w, o) / dot(o, o)
            w = [x - c * y for x, y in zip(w, o)]
        if any(w):
            ortho.append(w)
    w = [Fraction(x) for x in v]
    for o in ortho:
        c = dot(w, o) / dot(o, o)
        w = [x - c * y for x, y in zip(w, o)]
    return w


def double_description(ineqs, n):
    """V-description (lineality, rays) of {x in Q^n : a.x <= 0 for a in ineqs}."""
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rays = []  # (vector, zero set)
    for idx, a in enumerate(ineqs):
        a = [Fraction(x) for x in a]
        j = next((k for k, l in enumerate(L) if dot(a, l)), None)
        if j is not None:
            l0 = L.pop(j)
            v0 = dot(a, l0)
            if v0 > 0:
                l0 = [-x for x in l0]
                v0 = -v0
            L = [[x - (dot(a, l) / v0) * y for x, y in zip(l, l0)] for l in L]
            new = []
            for r, z in rays:
                c = dot(a, r) / v0
                new.append(([x - c * y for x, y in zip(r, l0)], z | {idx}))
            new.append((l0, frozenset(range(idx))))
            rays = new
            continue
        pos, neg, zero = [], [], []
        for r, z in rays:
            s = dot(a, r)
            (pos if s > 0 else neg if s < 0 else zero).append((r, z, s))
        out = [(r, z) for r, z, _ in neg] + [(r, z | {idx}) for r, z, _ in zero]
        allz = [z for _, z in rays]
        for p, zp, sp in pos:
            for q, zq, sq in neg:
                common = zp & zq
                if any(common <= zr for zr in allz if zr is not zp and zr is not zq):
                    continue
                w = [sp * y - sq * x for x, y in zip(p, q)]
                if any(w):
                    out.append((w, common | {idx}))
        rays = out
    lin = [primitive(l) for l in L]
    seen, final = set(), []
    for r, _ in rays:
        pr = _orth_complement_project(r, lin)
        if not any(pr):
            continue
        pv = primitive(pr)
        if pv not in seen:
            seen.add(pv)
            final.append(pv)
    return lin, sorted(final)


class Cone:
    def __init__(self, n, rays=None, lineality=None, ineqs=None, eqs=None):
        self.n = n
        self._rays = None if rays is None else [tuple(r) for r in rays]
        self._lin = None if rays is None else [tuple(l) for l in (lineality or [])]
        self._ineqs = None if ineqs is None else [tuple(a) for a in ineqs]
        self._eqs = None if ineqs is None else [tuple(b) for b in (eqs or [])]
        if self._rays is None and self._ineqs is None:
            raise ValueError("cone needs generators or inequalities")

    @classmethod
    def from_generators(cls, gens, n=None, lineality=None):
        n = n if n is not None else len(gens[0])
        return cls(n, rays=list(gens), lineality=lineality or [])

    @classmethod
    def from_inequalities(cls, ineqs, eqs=(), n=None):
        n = n if n is not None else len((list(ineqs) + list(eqs))[0])
        return cls(n, ineqs=list(ineqs), eqs=list(eqs))

    @cached_property
    def vrep(self):
        return double_description(self.hrep_rows, self.n)

    @cached_property
    def hrep_rows(self):
        """All rows a with a.x <= 0 (equalities appear as +-b)."""
        if self._ineqs is not None:
            return self._ineqs + self._eqs + [tuple(-x for x in b) for b in self._eqs]
        # polar: {y : y.r <= 0, y.l = 0}
        rows = [tuple(r) for r in self._rays]
        rows += [tuple(l) for l in self._lin] + [tuple(-x for x in l) for l in self._lin]
        plin, prays = double_description(rows, self.n)
        return [tuple(r) for r in prays] + [tuple(l) for l in plin] + [tuple(-x for x in l) for l in plin]

    @property
    def rays(self):
        return self.vrep[1]

    @property
    def lineality(self):
        return self.vrep[0]

    @cached_property
    def dim(self):
        gens = [list(map(Fraction, v)) for v in self.rays + self.lineality]
        return linalg.rank(gens, QQ) if gens else 0

    @property
    def codim(self):
        return self.n - self.dim

    def contains(self, x):
        return all(dot(a, x) <= 0 for a in self.hrep_rows)

    def contains_cone(self, other):
        gens = other.rays + other.lineality + [tuple(-v for v in l) for l in other.lineality]
        return all(self.contains(g) for g in gens)

    def __eq__(self, other):
        return isinstance(other, Cone) and self.contains_cone(other) and other.contains_cone(self)

    def __hash__(self):
        return hash((self.n, self.dim))

    def span(self):
        """Linear span as an RREF key (used for hyperplane comparisons)."""
        gens = [list(map(Fraction, v)) for v in self.rays + self.lineality]
        return tuple(tuple(r) for r in linalg.rref(gens, QQ, self.n)[0]) if gens else ()

    def __repr__(self):
        return f"Cone(n={self.n}, dim={self.dim}, rays={self.rays}, lineality={self.lineality})"


def solve_coordinates(gens, x):
    """Exact coordinates of x in the basis ``gens`` (square, independent), or None."""
    basis = [[Fraction(v) for v in g] for g in gens]
    return linalg.coordinates(basis, [Fraction(v) for v in x], QQ)
