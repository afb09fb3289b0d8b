import pytest

from wallchamber.rep import (
    BoundExceeded,
    Representation,
    ar_pairing,
    decompose,
    direct_sum,
    hom_basis,
    hom_dim,
    in_fac,
    indecomposable_injective,
    indecomposable_projective,
    is_brick,
    is_indecomposable,
    is_isomorphic,
    is_morphism,
    isomorphic_indecomposables,
    min_projective_presentation,
    pair_pairing,
    quotient,
    radical,
    simple,
    top,
    trace,
    trace_subspaces,
    zero_module,
)

from conftest import algebra


def P(A, i):
    return indecomposable_projective(A, i)


def S(A, i):
    return simple(A, i)


@pytest.fixture(params=[2, 0], ids=["F2", "Q"])
def A2(request):
    return algebra("a2", request.param)


def test_hom_examples(A2):
    assert hom_dim(P(A2, 1), S(A2, 2)) == 0
    assert hom_dim(S(A2, 1), S(A2, 1)) == 1
    assert hom_dim(P(A2, 1), P(A2, 1)) == 1
    for f in hom_basis(P(A2, 2), P(A2, 1)):
        assert is_morphism(f, P(A2, 2), P(A2, 1))


def test_hom_rejects_mixed_algebras():
    with pytest.raises(ValueError):
        hom_basis(S(algebra("a2"), 1), S(algebra("a2", 3), 1))


def test_relations_checked():
    A = algebra("nakayama")
    # a path of length 3 acting nonzero violates rad^3 = 0
    with pytest.raises(ValueError):
        Representation(A, (1, 1, 1), [[[1]], [[1]], [[1]]])


def test_radical_and_top(A2):
    assert radical(P(A2, 1)).dims == (0, 1)
    assert radical(S(A2, 1)).is_zero()
    N = algebra("nakayama")
    assert top(P(N, 1)).dims == (1, 0, 0)


def test_presentations(A2):
    pres = min_projective_presentation(P(A2, 2))
    assert pres.p0 == (0, 1) and pres.p1 == (0, 0)
    pres = min_projective_presentation(S(A2, 1))
    assert pres.p0 == (1, 0) and pres.p1 == (0, 1)
    pres = min_projective_presentation(S(A2, 2))
    assert pres.p0 == (0, 1) and pres.p1 == (0, 0)
    assert min_projective_presentation(zero_module(A2)).empty


def test_tau_examples(A2):
    t = S(A2, 1).tau
    assert t.dims == (0, 1) and isomorphic_indecomposables(t, S(A2, 2))
    assert P(A2, 1).tau.is_zero() and P(A2, 2).tau.is_zero()
    N = algebra("nakayama")
    assert isomorphic_indecomposables(S(N, 1).tau, S(N, 2))


def test_kronecker_tau_of_simple_is_preinjective():
    K = algebra("kronecker")
    t = S(K, 1).tau
    assert t.dims == (3, 2)
    assert is_indecomposable(t)


def test_tau_of_decomposable_is_additive(A2):
    M = direct_sum([S(A2, 1), P(A2, 1)])
    assert M.tau.dims == (0, 1)


def test_g_vectors(A2):
    assert P(A2, 1).g_vector == (1, 0) and P(A2, 2).g_vector == (0, 1)
    assert S(A2, 1).g_vector == (1, -1)
    N = algebra("nakayama")
    assert S(N, 2).g_vector == (0, 1, -1)
    for i in (1, 2, 3):
        assert P(N, i).g_vector == tuple(int(j == i) for j in (1, 2, 3))


def test_g_vector_additive(A2):
    M = direct_sum([S(A2, 1), P(A2, 1), S(A2, 2)])
    assert M.g_vector == tuple(a + b + c for a, b, c in zip(S(A2, 1).g_vector, P(A2, 1).g_vector, S(A2, 2).g_vector))


def test_ar_pairing_examples(A2):
    assert ar_pairing(P(A2, 1), P(A2, 1)) == 1
    assert ar_pairing(S(A2, 1), S(A2, 2)) == -1
    N = direct_sum([S(A2, 1), S(A2, 2)])
    assert ar_pairing(P(A2, 1), N) == hom_dim(P(A2, 1), N)


def test_pair_pairing_examples(A2):
    Z = zero_module(A2)
    assert pair_pairing(Z, (1, 1), S(A2, 1)) == -1
    A = direct_sum([P(A2, 1), P(A2, 2)])
    N = direct_sum([P(A2, 1), S(A2, 1)])
    assert pair_pairing(A, (0, 0), N) == sum(N.dims)
    # hom(S1, P1) = 0, hom(P1, tau S1) = hom(P1, S2) = 1, hom(P2, P1) = 1
    assert pair_pairing(S(A2, 1), (0, 1), P(A2, 1)) == -1


def test_trace_examples(A2):
    assert trace(P(A2, 1), S(A2, 2))[0].is_zero()
    assert trace(S(A2, 1), P(A2, 1))[0].is_zero()
    M = direct_sum([P(A2, 1), P(A2, 2)])
    X = S(A2, 1)
    assert trace(M, X)[0].dims == X.dims and in_fac(X, M)


def test_trace_idempotent_and_quotient_orthogonal():
    N = algebra("nakayama")
    M = S(N, 2)
    X = P(N, 1)
    t, _ = trace(P(N, 2), X)
    tt, _ = trace(P(N, 2), t)
    assert tt.dims == t.dims
    Q, _ = quotient(X, trace_subspaces(P(N, 2), X))
    assert hom_dim(P(N, 2), Q) == 0
    assert hom_dim(M, quotient(X, trace_subspaces(M, X))[0]) == 0


def test_submodule_dim_vectors():
    A2 = algebra("a2")
    for i in (1, 2):
        assert S(A2, i).subdims() == frozenset({(0, 0), S(A2, i).dims})
    assert P(A2, 1).subdims() == frozenset({(0, 0), (0, 1), (1, 1)})
    K = algebra("kronecker")
    assert P(K, 1).dims == (1, 2)
    assert P(K, 1).subdims() == frozenset({(0, 0), (0, 1), (0, 2), (1, 2)})


def test_submodule_enumeration_needs_prime_field():
    with pytest.raises(ValueError, match="prime field"):
        S(algebra("a2", 0), 1).subdims()


def test_submodule_bound_refusal():
    K = algebra("kronecker")
    big = direct_sum([P(K, 1)] * 4)
    with pytest.raises(BoundExceeded):
        big.subdims(10)


def test_decompose_and_bricks(A2):
    A = algebra("a2")
    parts = decompose(direct_sum([S(A, 1), S(A, 1)]))
    assert len(parts) == 2 and all(isomorphic_indecomposables(p, S(A, 1)) for p in parts)
    assert is_indecomposable(P(A, 1))
    K = algebra("kronecker")
    X = Representation(K, (1, 1), [[[1]], [[1]]])
    assert is_brick(X)
    M = direct_sum([P(K, 1), S(K, 2), S(K, 2)])
    parts = decompose(M)
    assert sorted(p.dims for p in parts) == [(0, 1), (0, 1), (1, 2)]
    assert sum(sum(p.dims) for p in parts) == M.total


def test_isomorphism_of_basis_change():
    K = algebra("kronecker")
    X = Representation(K, (1, 2), [[[1], [0]], [[0], [1]]])
    Y = Representation(K, (1, 2), [[[1], [1]], [[0], [1]]])
    assert isomorphic_indecomposables(X, Y)
    Z1 = Representation(K, (1, 1), [[[1]], [[0]]])
    Z2 = Representation(K, (1, 1), [[[0]], [[1]]])
    assert not isomorphic_indecomposables(Z1, Z2)
    assert is_isomorphic(direct_sum([Z1, Z2]), direct_sum([Z2, Z1]))


def test_injectives(A2):
    assert indecomposable_injective(A2, 1).dims == (1, 0)
    assert indecomposable_injective(A2, 2).dims == (1, 1)
