"""King stability, stability spaces, g-vector cones and the fan they form."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cones import Cone, dot, primitive, solve_coordinates
from .rep import EngineError, hom_dim, in_fac, is_brick, quotient, trace_subspaces, zero_module
from .tilting import TauPair, mutate


DEFAULT_BOUND = 10


def pairing(theta, dims):
    return sum(Fraction(t) * d for t, d in zip(theta, dims))


def is_semistable(theta, N, bound=None):
    if N.is_zero():
        return True
    if pairing(theta, N.dims) != 0:
        return False
    return all(pairing(theta, L) <= 0 for L in N.subdims(bound or DEFAULT_BOUND))


def is_stable(theta, N, bound=None):
    if N.is_zero() or pairing(theta, N.dims) != 0:
        return False
    for L in N.subdims(bound or DEFAULT_BOUND):
        if not any(L) or tuple(L) == N.dims:
            continue
        if pairing(theta, L) >= 0:
            return False
    return True


@dataclass
class StabilitySpace:
    module: object
    normal: tuple
    inequalities: list  # submodule dimension vectors L with <theta, L> <= 0
    cone: Cone

    @property
    def codim(self):
        return self.cone.codim

    @property
    def is_wall(self):
        return self.codim == 1

    def contains(self, theta):
        return is_semistable(theta, self.module)

    def __eq__(self, other):
        return isinstance(other, StabilitySpace) and self.cone == other.cone


def stability_space(N, bound=None):
    subs = N.subdims(bound or DEFAULT_BOUND)
    ineqs = sorted({tuple(L) for L in subs if any(L) and tuple(L) != N.dims})
    cone = Cone.from_inequalities(ineqs, [N.dims], n=N.n)
    return StabilitySpace(N, N.dims, ineqs, cone)


def cone_of_pair(pair):
    n = len(pair.gvecs[0]) if pair.gvecs else None
    return Cone.from_generators(list(pair.gvecs), n=n)


@dataclass
class Location:
    pair: object  # containing tau-tilting pair, or None
    alpha: tuple = ()
    face: object = None  # sub-pair spanned by generators with positive coordinate
    interior: bool = False

    @property
    def located(self):
        return self.pair is not None


def locate(theta, pairs):
    """Find a tau-tilting cone containing theta, preferring the smallest face."""
    best = None
    for p in pairs:
        alpha = solve_coordinates(p.gvecs, theta)
        if alpha is None or any(a < 0 for a in alpha):
            continue
        keep = [k for k, a in enumerate(alpha) if a > 0]
        face = TauPair(tuple(p.items[k] for k in keep), tuple(p.gvecs[k] for k in keep))
        loc = Location(p, tuple(alpha), face, len(keep) == len(alpha))
        if loc.interior:
            return loc
        if best is None:
            best = loc
    return best or Location(None)


def _order_completions(catalog, c1, c2):
    """Return (smaller, larger) by Fac inclusion of the module parts."""
    M1, M2 = catalog.pair_module(c1), catalog.pair_module(c2)

    def inside(X_pair, Y):
        return all(Y.total and in_fac(catalog.modules[k], Y) for k in X_pair.modules)

    if inside(c1, M2):
        return c1, c2
    if inside(c2, M1):
        return c2, c1
    raise EngineError("completions are not comparable by Fac inclusion")


def wall_of_facet(catalog, almost, c1, c2, bound=None):
    """The brick N defining the wall through the facet cone of ``almost``."""
    small, large = _order_completions(catalog, c1, c2)
    new = [x for x in large.items if x not in almost.items]
    if len(new) != 1 or new[0][0] != "M":
        raise EngineError("larger completion must add exactly one module summand")
    Mp = catalog.modules[new[0][1]]
    M = catalog.pair_module(almost)
    N = Mp if M.is_zero() else quotient(Mp, trace_subspaces(M, Mp))[0]
    if N.is_zero():
        raise EngineError("wall module vanished")
    if not M.is_zero() and (hom_dim(M, N) or hom_dim(N, M.tau)):
        raise EngineError("wall module is not in the semistable category")
    if any(N.d(i) for i in almost.shifted):
        raise EngineError("wall module is not right orthogonal to P")
    if not is_brick(N):
        raise EngineError("wall module is not a brick")
    space = stability_space(N, bound)
    facet = Cone.from_generators(list(almost.gvecs), n=catalog.n) if almost.gvecs else None
    if facet is not None and not space.cone.contains_cone(facet):
        raise EngineError("facet cone is not contained in the stability space of its wall module")
    return N


def chamber_walls(catalog, pair, bound=None):
    """The n wall modules of the chamber of a tau-tilting pair, one per facet."""
    walls = []
    for pos in range(pair.size):
        other = mutate(catalog, pair, pos)
        walls.append(wall_of_facet(catalog, pair.without(pos), pair, other, bound))
    normals = [primitive(N.dims) for N in walls]
    if len(set(normals)) != len(normals):
        raise EngineError("chamber walls are not pairwise distinct")
    return walls


def torsion_class_T_theta(theta, corpus, bound=None):
    """Indices of corpus modules all of whose quotients pair nonnegatively with theta."""
    out = set()
    for k, M in enumerate(corpus):
        subs = M.subdims(bound or DEFAULT_BOUND)
        if all(pairing(theta, [a - b for a, b in zip(M.dims, L)]) >= 0 for L in subs):
            out.add(k)
    return frozenset(out)


@dataclass
class Fan:
    pairs: list
    cones: list
    facets: dict  # sorted item tuple -> list of pair indices
    complete: bool
    n: int

    @property
    def facet_count(self):
        return len(self.facets)

    def adjacency(self):
        return sorted(tuple(v) for v in self.facets.values() if len(v) == 2)


def assemble_fan(pairs):
    n = len(pairs[0].items) if pairs else 0
    facets = {}
    for idx, p in enumerate(pairs):
        for pos in range(p.size):
            key = tuple(sorted(p.without(pos).items))
            facets.setdefault(key, []).append(idx)
    complete = bool(pairs) and all(len(v) == 2 for v in facets.values())
    return Fan(list(pairs), [cone_of_pair(p) for p in pairs], facets, complete, n)


def interior_samples(pair, count=3, seed=0):
    """Deterministic rational points in the open cone of a pair."""
    import random

    rng = random.Random(seed)
    pts = [pair.barycenter()]
    while len(pts) < count:
        w = [Fraction(rng.randint(1, 9), rng.randint(1, 5)) for _ in pair.gvecs]
        pt = tuple(sum(c * g[j] for c, g in zip(w, pair.gvecs)) for j in range(len(pair.gvecs[0])))
        if pt not in pts:
            pts.append(pt)
    return pts
