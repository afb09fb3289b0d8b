"""Exhaustive enumeration of indecomposable modules over a prime field.

Every indecomposable M of dimension at least two has a simple submodule
S(i) with M/S(i) a direct sum of smaller indecomposables X_j, so M is
obtained from some class in Ext^1(X_1 + ... + X_r, S(i)).  Candidates are
generated per dimension vector from the already known smaller modules and
deduplicated up to isomorphism.  To avoid building each module once per
socle vertex, only the smallest vertex in the socle is used.
"""
from __future__ import annotations

from itertools import product

from . import linalg
from .linalg import Subspace
from .rep import (
    BoundExceeded,
    Representation,
    is_indecomposable,
    isomorphic_indecomposables,
    simple,
)


class BudgetExceeded(BoundExceeded):
    def __init__(self, dimvec, count, budget):
        self.dimvec = dimvec
        super().__init__(
            f"enumeration budget exceeded at dimension vector {dimvec}: {count} candidates > {budget}"
        )


def ext_to_simple(X, i):
    """Representatives of a basis of Ext^1(X, S(i)).

    A class is a family of rows phi_a (one per arrow a ending at i, of length
    dim X_{s(a)}); the result is a list of dicts ``{arrow: row}``.
    """
    A, F = X.algebra, X.field
    Q = A.quiver
    arrows = [a for a in range(len(Q.arrows)) if Q.tgt(a) == i and X.d(Q.src(a))]
    off, tot = {}, 0
    for a in arrows:
        off[a] = tot
        tot += X.d(Q.src(a))
    if tot == 0:
        return []
    eqs = []
    for rel in A.generating_relations():
        p0 = rel[0][1]
        s = p0[0]
        if not X.d(s):
            continue
        from .algebra import path_tgt

        if path_tgt(Q, p0) != i:
            continue
        # rows: for each coordinate c of X_s, sum_p coef * phi_last . X_rest e_c
        block = [[F.zero] * tot for _ in range(X.d(s))]
        for coef, (start, arr) in rel:
            last = arr[-1]
            if last not in off:
                continue
            rest = X.path_matrix((start, arr[:-1]))  # X_{src(last)} x X_s
            for c in range(X.d(s)):
                for k in range(X.d(Q.src(last))):
                    x = rest[k][c]
                    if x:
                        j = off[last] + k
                        block[c][j] = F.norm(block[c][j] + coef * x)
        eqs.extend(block)
    Z = linalg.nullspace(eqs, tot, F)
    B = []
    for r in range(X.d(i)):
        vec = [F.zero] * tot
        for a in arrows:
            row = X.mats[a][r]
            vec[off[a] : off[a] + len(row)] = list(row)
        B.append(vec)
    Bsub = Subspace(B, tot, F)
    reps = []
    for z in Z:
        if not Bsub.contains(z):
            reps.append(z)
            Bsub = Bsub.add([z])
    return [{a: z[off[a] : off[a] + X.d(Q.src(a))] for a in arrows} for z in reps]


def _extension(A, parts, i):
    """Module on (sum of X) + S(i) from [(X, {arrow: row})] with S(i) a submodule."""
    F, Q = A.field, A.quiver
    n = A.n
    xd = [sum(X.dims[v] for X, _ in parts) for v in range(n)]
    dims = list(xd)
    dims[i - 1] += 1
    mats = []
    for a in range(len(Q.arrows)):
        s, t = Q.src(a), Q.tgt(a)
        m = linalg.zeros(dims[t - 1], dims[s - 1], F)
        r0 = c0 = 0
        for X, phi in parts:
            for r, row in enumerate(X.mats[a]):
                for c, val in enumerate(row):
                    m[r0 + r][c0 + c] = val
            if t == i and a in phi:
                for c, val in enumerate(phi[a]):
                    m[dims[t - 1] - 1][c0 + c] = val
            r0 += X.d(t)
            c0 += X.d(s)
        mats.append(m)
    return Representation(A, dims, mats, check=False)


def _combine(basis, coeffs, F):
    out = {}
    for a in basis[0] if basis else []:
        out[a] = [F.norm(sum(c * b[a][k] for c, b in zip(coeffs, basis))) for k in range(len(basis[0][a]))]
    return out


def _dim_vectors(n, bound, total):
    for d in product(range(bound + 1), repeat=n):
        if sum(d) == total:
            yield d


def _invariants(M):
    return (M.top_dims, M.socle_dims, M.end_dim)


class Enumerator:
    """Incremental enumerator; ``modules`` lists every indecomposable found."""

    def __init__(self, A, dim_bound, budget=50000):
        if not A.field.is_finite:
            raise ValueError("indecomposable enumeration needs a prime field")
        self.A = A
        self.bound = dim_bound
        self.budget = budget
        self.by_dim = {}
        self._ext = {}

    def ext(self, X, idx, i):
        key = (idx, i)
        if key not in self._ext:
            self._ext[key] = ext_to_simple(X, i)
        return self._ext[key]

    def run(self):
        A = self.A
        n = A.n
        self.modules = []
        for i in range(1, n + 1):
            if self.bound >= 1:
                S = simple(A, i)
                self._add(S)
        for total in range(2, n * self.bound + 1):
            for d in _dim_vectors(n, self.bound, total):
                self._build_dimvec(d)
        return self.modules

    def _add(self, M):
        inv = _invariants(M)
        bucket = self.by_dim.setdefault(M.dims, [])
        for N, ninv in bucket:
            if ninv == inv and isomorphic_indecomposables(M, N):
                return False
        bucket.append((M, inv))
        self.modules.append(M)
        return True

    def _build_dimvec(self, d):
        A, F = self.A, self.A.field
        added = False
        for i in range(1, A.n + 1):
            if not d[i - 1]:
                continue
            rest = list(d)
            rest[i - 1] -= 1
            cands = []
            for idx, X in enumerate(self.modules):
                if all(x <= r for x, r in zip(X.dims, rest)):
                    e = self.ext(X, idx, i)
                    if e:
                        cands.append((idx, X, e))
            jobs = []
            count = 0
            for multiset in _multisets(cands, tuple(rest)):
                k = 1
                for (idx, X, e), m in multiset:
                    k *= _gauss_binom(len(e), m, F.p)
                count += k
                if count > self.budget:
                    raise BudgetExceeded(tuple(d), count, self.budget)
                jobs.append(multiset)
            for multiset in jobs:
                choice_lists = []
                for (idx, X, e), m in multiset:
                    choice_lists.append([(X, e, rows) for rows in linalg.enumerate_subspaces(len(e), F, m)])
                for combo in product(*choice_lists):
                    parts = []
                    for X, e, rows in combo:
                        for row in rows:
                            parts.append((X, _combine(e, row, F)))
                    M = _extension(A, parts, i)
                    soc = M.socle_dims
                    if min(v for v in range(1, A.n + 1) if soc[v - 1]) != i:
                        continue
                    if is_indecomposable(M):
                        if self._add(M):
                            added = True
        return added


def _multisets(cands, target):
    """Multisets of candidate modules (multiplicity <= dim Ext) with dims summing to target."""
    out = []

    def rec(start, remaining, chosen):
        if not any(remaining):
            out.append(list(chosen))
            return
        for j in range(start, len(cands)):
            idx, X, e = cands[j]
            rem = remaining
            for m in range(1, len(e) + 1):
                rem = tuple(r - x for r, x in zip(rem, X.dims))
                if any(r < 0 for r in rem):
                    break
                chosen.append((cands[j], m))
                rec(j + 1, rem, chosen)
                chosen.pop()

    rec(0, target, [])
    return out


def _gauss_binom(n, k, q):
    if k < 0 or k > n:
        return 0
    num = den = 1
    for j in range(k):
        num *= q ** (n - j) - 1
        den *= q ** (j + 1) - 1
    return num // den


def enumerate_indecomposables(A, dim_bound, budget=50000):
    """All indecomposables with every dimension-vector entry at most ``dim_bound``."""
    return Enumerator(A, dim_bound, budget).run()
