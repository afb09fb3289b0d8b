"""Tau-rigid and tau-tilting pairs, built from an enumerated catalog.

Summands of a pair are referred to by *items*: ``("M", k)`` is the k-th
tau-rigid module of the catalog and ``("P", i)`` is the shifted projective
P(i).  Everything is ordered by g-vector (lexicographically), with a shifted
P(i) contributing the column -e_i.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import linalg
from .enumeration import enumerate_indecomposables
from .fields import QQ
from .rep import (
    EngineError,
    decompose,
    direct_sum,
    hom_basis,
    hom_dim,
    in_fac,
    indecomposable_projective,
    isomorphic_indecomposables,
    quotient,
    submodule_dim_vectors,
    trace_subspaces,
    zero_module,
)


class MutationError(RuntimeError):
    pass


def _unit(n, i, sign=1):
    v = [0] * n
    v[i - 1] = sign
    return tuple(v)


def int_det(M):
    """Determinant of a small square integer matrix (exact)."""
    n = len(M)
    if n == 0:
        return 1
    m = [[QQ(x) for x in r] for r in M]
    det = QQ.one
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return int(det)


@dataclass(frozen=True)
class TauPair:
    """A pair (M, P) given by catalog item tuples, sorted by g-vector."""

    items: tuple
    gvecs: tuple  # one column per item, same order

    @property
    def modules(self):
        return tuple(k for kind, k in self.items if kind == "M")

    @property
    def shifted(self):
        return tuple(i for kind, i in self.items if kind == "P")

    @property
    def size(self):
        return len(self.items)

    def key(self):
        return tuple(sorted(self.gvecs))

    def barycenter(self):
        n = len(self.gvecs[0]) if self.gvecs else 0
        return tuple(sum(g[j] for g in self.gvecs) for j in range(n))

    def without(self, pos):
        items = self.items[:pos] + self.items[pos + 1 :]
        g = self.gvecs[:pos] + self.gvecs[pos + 1 :]
        return TauPair(items, g)


class Catalog:
    """Indecomposable tau-rigid modules and shifted projectives up to a bound."""

    def __init__(self, algebra, dim_bound, corpus=None, budget=50000):
        self.algebra = algebra
        self.bound = dim_bound
        self.field = algebra.field
        A = algebra
        if corpus is None:
            corpus = enumerate_indecomposables(A, dim_bound, budget)
        self.corpus = sorted(corpus, key=lambda M: (M.g_vector, M.dims))
        rigid = [M for M in self.corpus if hom_dim(M, M.tau) == 0]
        self.modules = sorted(rigid, key=lambda M: M.g_vector)
        self.projectives = [indecomposable_projective(A, i) for i in range(1, A.n + 1)]
        n = A.n
        items = [("M", k) for k in range(len(self.modules))] + [("P", i) for i in range(1, n + 1)]
        self.items = sorted(items, key=self.g_of)
        self._compat = {}
        for x in self.items:
            for y in self.items:
                if self.items.index(x) <= self.items.index(y):
                    c = self._compatible(x, y)
                    self._compat[(x, y)] = self._compat[(y, x)] = c
        self.corpus_index = {id(M): k for k, M in enumerate(self.corpus)}

    @property
    def n(self):
        return self.algebra.n

    def module(self, k):
        return self.modules[k]

    def g_of(self, item):
        kind, k = item
        if kind == "M":
            return self.modules[k].g_vector
        return _unit(self.algebra.n, k, -1)

    def _compatible(self, x, y):
        if x[0] == "P" and y[0] == "P":
            return True
        if x[0] == "P":
            x, y = y, x
        if y[0] == "P":
            return self.modules[x[1]].d(y[1]) == 0
        X, Y = self.modules[x[1]], self.modules[y[1]]
        return hom_dim(X, Y.tau) == 0 and hom_dim(Y, X.tau) == 0

    def compatible(self, x, y):
        return self._compat[(x, y)]

    def compatibility_matrix(self):
        return [[self._compat[(x, y)] for y in self.items] for x in self.items]

    def make_pair(self, items):
        items = tuple(sorted(items, key=self.g_of))
        return TauPair(items, tuple(self.g_of(x) for x in items))

    def pair_module(self, pair):
        mods = [self.modules[k] for k in pair.modules]
        return direct_sum(mods) if mods else zero_module(self.algebra)

    def label(self, item):
        kind, k = item
        if kind == "P":
            return f"P({k})[1]"
        return f"M{self.modules[k].dims}"


def is_tau_rigid_pair(M_parts, P_vertices):
    """Hom(M, tau M) = 0 and Hom(P, M) = 0 for lists of summands."""
    if not M_parts:
        return True
    A = M_parts[0].algebra
    for X in M_parts:
        for Y in M_parts:
            if hom_dim(X, Y.tau):
                return False
    for i in P_vertices:
        P = indecomposable_projective(A, i)
        if any(hom_dim(P, X) for X in M_parts):
            return False
    return True


def enumerate_catalog(algebra, dim_bound, budget=50000):
    return Catalog(algebra, dim_bound, budget=budget)


def enumerate_rigid_pairs(catalog, max_size=None):
    """All pairwise compatible item sets (tau-rigid pairs), smallest first."""
    n = catalog.n if max_size is None else max_size
    items = catalog.items
    out = []

    def rec(start, chosen):
        out.append(tuple(chosen))
        if len(chosen) == n:
            return
        for j in range(start, len(items)):
            x = items[j]
            if all(catalog.compatible(x, y) for y in chosen):
                chosen.append(x)
                rec(j + 1, chosen)
                chosen.pop()

    rec(0, [])
    return [catalog.make_pair(c) for c in out]


def assemble_tau_tilting_pairs(catalog):
    """All size-n cliques of the compatibility graph, as verified TauPairs."""
    n = catalog.n
    items = catalog.items
    found = []

    def rec(start, chosen):
        if len(chosen) == n:
            found.append(tuple(chosen))
            return
        for j in range(start, len(items)):
            x = items[j]
            if all(catalog.compatible(x, y) for y in chosen):
                chosen.append(x)
                rec(j + 1, chosen)
                chosen.pop()

    rec(0, [])
    pairs = []
    for c in found:
        pair = catalog.make_pair(c)
        parts = [catalog.modules[k] for k in pair.modules]
        if not is_tau_rigid_pair(parts, pair.shifted):
            raise EngineError("clique is not a tau-rigid pair")
        d = int_det([list(col) for col in pair.gvecs])
        if abs(d) != 1:
            raise EngineError(f"g-vectors of {pair.key()} do not form a basis (det {d})")
        pairs.append(pair)
    pairs.sort(key=lambda p: p.key())
    return pairs


def completions(catalog, almost):
    """Items that extend a pair of size n-1 to a tau-tilting pair."""
    have = set(almost.items)
    return [
        x
        for x in catalog.items
        if x not in have and all(catalog.compatible(x, y) for y in almost.items)
    ]


def mutate(catalog, pair, pos):
    """The other tau-tilting pair containing ``pair`` minus its pos-th summand."""
    if pair.size != catalog.n:
        raise MutationError("mutation needs a tau-tilting pair")
    rest = pair.without(pos)
    cands = [x for x in completions(catalog, rest) if x != pair.items[pos]]
    if len(cands) != 1:
        raise MutationError(
            f"found {len(cands)} exchange candidates: catalog bound too small "
            "or algebra tau-tilting infinite at this bound"
        )
    return catalog.make_pair(rest.items + (cands[0],))


@dataclass
class ExchangeCheck:
    applies: bool
    message: str
    cokernel: object = None  # left-approximation cokernel with add(U) removed
    wall_module: object = None  # X / trace(U, X)
    mutated: object = None


def _left_approx_cokernel(X, U):
    """coker(X -> U^h) for the map assembled from a basis of Hom(X, U)."""
    A, F = X.algebra, X.field
    basis = hom_basis(X, U)
    if not basis:
        return None, basis
    h = len(basis)
    target = direct_sum([U] * h)
    f = []
    for v in range(A.n):
        rows = []
        for b in basis:
            rows.extend(b[v])
        f.append(tuple(tuple(r) for r in rows) if rows else tuple())
    from .rep import image_subspaces

    img = image_subspaces(f, target)
    return quotient(target, img)[0], basis


def exchange_cokernel_check(catalog, pair, pos):
    """Cross-check ``mutate`` through the exchange sequence X -> U' -> Y -> 0.

    Applies when the pos-th summand X is a module not in Fac U, U being the
    remaining module summands; then the left add(U)-approximation of X has
    cokernel Y (the new summand) plus summands from add(U), or only add(U)
    summands when the new summand is a shifted projective.
    """
    kind, k = pair.items[pos]
    new = mutate(catalog, pair, pos)
    if kind == "P":
        return ExchangeCheck(False, "not Fac-decreasing here: summand is a shifted projective", mutated=new)
    A = catalog.algebra
    X = catalog.modules[k]
    rest = pair.without(pos)
    Uparts = [catalog.modules[j] for j in rest.modules]
    U = direct_sum(Uparts) if Uparts else zero_module(A)
    if not U.is_zero() and in_fac(X, U):
        return ExchangeCheck(False, "not Fac-decreasing here: summand lies in Fac of the rest", mutated=new)
    wall = quotient(X, trace_subspaces(U, X))[0] if not U.is_zero() else X
    added = [x for x in new.items if x not in rest.items][0]
    if U.is_zero():
        coker_parts = []
    else:
        Q, _ = _left_approx_cokernel(X, U)
        coker_parts = [] if Q is None else decompose(Q)
    leftover = [Y for Y in coker_parts if not any(isomorphic_indecomposables(Y, Z) for Z in Uparts)]
    if added[0] == "P":
        if leftover:
            raise EngineError("exchange cokernel is nonzero but mutation gives a shifted projective")
        coker = zero_module(A)
    else:
        target = catalog.modules[added[1]]
        if len(leftover) < 1 or not all(isomorphic_indecomposables(Y, target) for Y in leftover):
            raise EngineError("exchange cokernel does not match the mutated summand")
        coker = leftover[0]
    return ExchangeCheck(True, "ok", cokernel=coker, wall_module=wall, mutated=new)


def fac_membership(X, catalog, pair):
    M = catalog.pair_module(pair)
    if M.is_zero():
        return X.is_zero()
    return in_fac(X, M)


@dataclass(frozen=True)
class TorsionClassDescriptor:
    pair_key: tuple
    members: frozenset  # corpus indices


def torsion_class(catalog, pair):
    M = catalog.pair_module(pair)
    if M.is_zero():
        members = frozenset()
    else:
        members = frozenset(k for k, X in enumerate(catalog.corpus) if in_fac(X, M))
    return TorsionClassDescriptor(pair.key(), members)


def semistable_category(catalog, pair):
    """Corpus modules N with Hom(M,N) = 0, Hom(N, tau M) = 0 and Hom(P,N) = 0."""
    M = catalog.pair_module(pair)
    tM = M.tau if not M.is_zero() else M
    out = []
    for N in catalog.corpus:
        if any(N.d(i) for i in pair.shifted):
            continue
        if not M.is_zero() and (hom_dim(M, N) or hom_dim(N, tM)):
            continue
        out.append(N)
    return out


def stable_objects(catalog, pair, theta=None, bound=None):
    """Corpus modules stable at theta (default: the barycenter of the pair)."""
    from .fan import is_stable

    theta = pair.barycenter() if theta is None else theta
    if not pair.items:
        theta = (0,) * catalog.n
    return [N for N in catalog.corpus if is_stable(theta, N, bound)]
