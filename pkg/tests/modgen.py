"""Random modules for property tests.

Free path algebras get uniformly random matrices.  Algebras with relations
get direct sums of catalog indecomposables twisted by a random change of
basis at every vertex, so relations hold by construction.
"""
from wallchamber.linalg import inverse, matmul, rank
from wallchamber.rep import Representation, direct_sum


def random_matrix(rng, r, c, F):
    return [[F(rng.randrange(F.p)) for _ in range(c)] for _ in range(r)]


def random_invertible(rng, n, F):
    while True:
        g = random_matrix(rng, n, n, F)
        if rank(g, F) == n:
            return g


def base_change(M, rng):
    F, Q = M.field, M.algebra.quiver
    gs = [random_invertible(rng, d, F) for d in M.dims]
    mats = []
    for a, m in enumerate(M.mats):
        s, t = Q.src(a) - 1, Q.tgt(a) - 1
        if not M.dims[s] or not M.dims[t]:
            mats.append(m)
            continue
        x = matmul(gs[t], [list(r) for r in m], F)
        mats.append(matmul(x, inverse(gs[s], F), F))
    return Representation(M.algebra, M.dims, mats)


def random_module(A, rng, max_total=4, corpus=None):
    """A random nonzero module of total dimension at most ``max_total``.

    Without ``corpus`` the algebra must have no relations.
    """
    F, Q = A.field, A.quiver
    if corpus is None:
        while True:
            dims = [rng.randrange(max_total + 1) for _ in range(Q.n)]
            if 0 < sum(dims) <= max_total:
                break
        mats = [random_matrix(rng, dims[t - 1], dims[s - 1], F) for _, s, t in Q.arrows]
        return Representation(A, dims, mats)
    parts, total = [], 0
    pool = [X for X in corpus if X.total <= max_total]
    while True:
        X = rng.choice(pool)
        if total + X.total > max_total:
            break
        parts.append(X)
        total += X.total
        if rng.random() < 0.4:
            break
    return base_change(direct_sum(parts), rng)
