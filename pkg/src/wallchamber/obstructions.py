"""The double 3-cycle obstruction to maximal green sequences.

The bundled ``markoff`` algebra has arrows 1 => 2, 2 => 3, 3 => 1 with
rad^2 = 0.  Its three wall families are Kronecker preprojectives supported
on one doubled leg, with the larger space at the leg's sink:

* F1 on 3 => 1, dimension vector (n+1, 0, n)
* F2 on 1 => 2, dimension vector (n, n+1, 0)
* F3 on 2 => 3, dimension vector (0, n, n+1)

On the opposite orientation the same dimension vectors are carried by
preinjective modules and every wall comes out mirrored; see
:func:`orientation_report`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .algebra import bundled_spec, build_algebra
from .cones import Cone
from .fan import chamber_walls, pairing, stability_space
from .fields import PrimeField
from .rep import Representation, indecomposable_projective, is_brick, is_indecomposable, simple

VERDICT = "no maximal green sequence exists (double 3-cycle criterion)"


@dataclass
class MarkoffWitness:
    vertices: tuple  # (v1, v2, v3)
    legs: dict  # (src, tgt) -> (arrow name, arrow name)
    verdict: str = VERDICT
    notice: str = ""


def detect_markoff(quiver):
    """Witness for v1 => v3, v3 => v2, v2 => v1 with two parallel arrows per leg."""
    par = {}
    for name, s, t in quiver.arrows:
        if s != t:
            par.setdefault((s, t), []).append(name)
    for v1, v2, v3 in permutations(range(1, quiver.n + 1), 3):
        legs = [(v1, v3), (v3, v2), (v2, v1)]
        if all(len(par.get(l, [])) >= 2 for l in legs):
            w = MarkoffWitness((v1, v2, v3), {l: tuple(sorted(par[l])[:2]) for l in legs})
            if quiver.n != 3:
                w.verdict = ""
                w.notice = (
                    f"double 3-cycle found inside a quiver with {quiver.n} vertices; "
                    "the criterion needs exactly three vertices, so no verdict is given"
                )
            return w
    return None


# family data: leg (source, sink) on the bundled orientation
FAMILIES = {
    "F1": {"leg": (3, 1), "dims": lambda n: (n + 1, 0, n), "normal": lambda n: (n + 1, 0, n), "sign": (1, 0, 0)},
    "F2": {"leg": (1, 2), "dims": lambda n: (n, n + 1, 0), "normal": lambda n: (n, n + 1, 0), "sign": (0, 1, 0)},
    "F3": {"leg": (2, 3), "dims": lambda n: (0, n, n + 1), "normal": lambda n: (0, n, n + 1), "sign": (0, 0, 1)},
}


def markoff_algebra(p=2, name="markoff"):
    return build_algebra(bundled_spec(name), F=PrimeField(p))


def _kronecker_blocks(n, F, transpose=False):
    """Identity-block and shift-block (n+1) x n matrices."""
    I = [[F.one if (i == j) else F.zero for j in range(n)] for i in range(n + 1)]
    S = [[F.one if (i == j + 1) else F.zero for j in range(n)] for i in range(n + 1)]
    if transpose:
        I = [list(r) for r in zip(*I)] if n else [[] for _ in range(n)]
        S = [list(r) for r in zip(*S)] if n else [[] for _ in range(n)]
    return I, S


def build_family_module(family, n, A=None):
    """The family module with index n, supported on one doubled leg."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 0:
        raise ValueError("family index must be nonnegative")
    A = A or markoff_algebra()
    F, Q = A.field, A.quiver
    dims = FAMILIES[family]["dims"](n)
    small, big = FAMILIES[family]["leg"]
    leg = [a for a in range(len(Q.arrows)) if {Q.src(a), Q.tgt(a)} == {big, small} and Q.src(a) != Q.tgt(a)]
    if len(leg) < 2:
        raise ValueError("algebra has no doubled leg for this family")
    leg = sorted(leg, key=Q.name)[:2]
    forward = Q.src(leg[0]) == small  # small -> big is preprojective
    blocks = _kronecker_blocks(n, F, transpose=not forward)
    mats = []
    for a in range(len(Q.arrows)):
        s, t = Q.src(a), Q.tgt(a)
        if a in leg:
            mats.append(blocks[leg.index(a)])
        else:
            mats.append([[F.zero] * dims[s - 1] for _ in range(dims[t - 1])])
    M = Representation(A, dims, mats)
    if M.dims != tuple(dims):
        raise AssertionError("family module has the wrong dimension vector")
    if not is_indecomposable(M):
        raise AssertionError(f"{family} module with n={n} is not indecomposable")
    return M


def closed_form_wall(family, n):
    f = FAMILIES[family]
    return Cone.from_inequalities([f["sign"]], [f["normal"](n)], n=3)


@dataclass
class WallReport:
    family: str
    n: int
    field: str
    dims: tuple
    matches: bool
    is_wall: bool
    brick: bool
    family_subs_present: bool
    extra_subdims: list
    computed_rays: list = field(default_factory=list)
    computed_lineality: list = field(default_factory=list)

    @property
    def passed(self):
        return self.matches and self.is_wall and self.brick and self.family_subs_present


def verify_wall_formula(family, n, p=2, spec="markoff", bound=12):
    A = markoff_algebra(p, spec)
    M = build_family_module(family, n, A)
    space = stability_space(M, max(bound, M.total))
    closed = closed_form_wall(family, n)
    subs = set(M.subdims(max(bound, M.total)))
    dims_of = FAMILIES[family]["dims"]
    fam = {dims_of(k) for k in range(n)}
    extra = sorted(L for L in subs if any(L) and L != M.dims and L not in fam)
    return WallReport(
        family,
        n,
        repr(A.field),
        M.dims,
        space.cone == closed,
        space.is_wall,
        is_brick(M),
        fam <= subs,
        extra,
        list(space.cone.rays),
        list(space.cone.lineality),
    )


def orientation_report(n_max=3, p=2):
    """Compare the closed forms against the opposite orientation of the double 3-cycle."""
    rows = []
    for fam in FAMILIES:
        for n in range(1, n_max + 1):
            r = verify_wall_formula(fam, n, p, spec="markoff_displayed")
            rows.append(r)
    return rows


BRANCHES = {
    # first simple crossed -> (family, coordinate that turned positive, coordinate bounding it)
    1: ("F2", 0, 1),
    2: ("F3", 1, 2),
    3: ("F1", 2, 0),
}


@dataclass
class DemoReport:
    branch: int
    sample: tuple
    accepted: bool
    reason: str = ""
    separations: list = field(default_factory=list)  # (n, value at sample, value at (1,1,1))
    first_principles: list = field(default_factory=list)  # n values also checked via submodules

    @property
    def passed(self):
        return self.accepted and all(a < 0 < b for _, a, b in self.separations)


def green_path_obstruction_demo(B, sample=None, branch=1, verify_upto=5, p=2):
    """Check that the first B walls of the branch's family separate ``sample`` from (1,1,1)."""
    if B < 1:
        raise ValueError("B must be at least 1")
    fam, pos, neg = BRANCHES[branch]
    if sample is None:
        s = [Fraction(-1)] * 3
        s[pos] = Fraction(1, 10)
        sample = tuple(s)
    sample = tuple(Fraction(x) for x in sample)
    rep = DemoReport(branch, sample, True)
    if not (0 < sample[pos] < -sample[neg]):
        rep.accepted = False
        rep.reason = "sample is not past the first crossing (need 0 < positive coordinate < -bounding coordinate)"
        return rep
    top = (1, 1, 1)
    sign = FAMILIES[fam]["sign"]
    for n in range(1, B + 1):
        normal = FAMILIES[fam]["normal"](n)
        a, b = pairing(sample, normal), pairing(top, normal)
        rep.separations.append((n, a, b))
        # on the hyperplane with the positive coordinate > 0, the sign constraint holds:
        # normal . x = 0 forces x[neg] = -normal[pos] x[pos] / normal[neg] < 0
        if not (normal[pos] > 0 and normal[neg] > 0 and sign[neg] == 1):
            rep.accepted = False
            rep.reason = "closed form does not have the expected shape"
    for n in range(1, min(B, verify_upto) + 1):
        if verify_wall_formula(fam, n, p).passed:
            rep.first_principles.append(n)
        else:
            rep.accepted = False
            rep.reason = f"first-principles wall check failed at n={n}"
    return rep


@dataclass
class LiftReport:
    equal: bool
    quotient_cone: object
    lifted_cone: object


def check_wall_lifting(A, B, N, bound=12):
    """Stability space of a B-module N (B a quotient of A) agrees with that of N inflated to A."""
    if A.quiver != B.quiver:
        raise ValueError("quotient algebra must live on the same quiver")
    lifted = Representation(A, N.dims, N.mats)
    sq = stability_space(N, max(bound, N.total)).cone
    sl = stability_space(lifted, max(bound, N.total)).cone
    return LiftReport(sq == sl, sq, sl)


@dataclass
class SimpleWallReport:
    bottom_walls: list
    top_walls: list
    orthogonality: bool

    @property
    def passed(self):
        n = len(self.bottom_walls)
        simples = sorted(tuple(int(i == j) for j in range(n)) for i in range(n))
        return sorted(self.bottom_walls) == simples and sorted(self.top_walls) == simples and self.orthogonality


def check_simple_walls(catalog, pairs):
    A = catalog.algebra
    n = A.n
    units = sorted(tuple(int(i == j) for j in range(n)) for i in range(n))
    top = next(p for p in pairs if not p.shifted and sorted(p.gvecs) == units)
    bottom = next(p for p in pairs if not p.modules)
    tw = [N.dims for N in chamber_walls(catalog, top)]
    bw = [N.dims for N in chamber_walls(catalog, bottom)]
    orth = all(
        pairing(indecomposable_projective(A, i).g_vector, simple(A, j).dims) == (1 if i == j else 0)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    return SimpleWallReport(bw, tw, orth)
