"""Exchange graph with brick labels, maximal green sequences and PL paths."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .fan import DEFAULT_BOUND, assemble_fan, pairing, torsion_class_T_theta, wall_of_facet
from .rep import EngineError, isomorphic_indecomposables
from .tilting import torsion_class


class IncompleteGraph(RuntimeError):
    pass


@dataclass
class Edge:
    larger: int  # node with the bigger torsion class
    smaller: int
    almost: object
    brick: object

    @property
    def normal(self):
        return self.brick.dims

    @property
    def green(self):
        """(source, target) when walked in the increasing direction."""
        return self.smaller, self.larger


@dataclass
class ExchangeGraph:
    catalog: object
    fan: object
    pairs: list
    classes: list  # TorsionClassDescriptor per node
    edges: list
    complete: bool
    warnings: list = field(default_factory=list)

    def node_of(self, key):
        for k, p in enumerate(self.pairs):
            if p.key() == key:
                return k
        return None

    @property
    def bottom(self):
        """Node with torsion class 0, i.e. the pair (0, A)."""
        return next((k for k, c in enumerate(self.classes) if not c.members and not self.pairs[k].modules), None)

    @property
    def top(self):
        """Node whose pair is (A, 0)."""
        return next((k for k, p in enumerate(self.pairs) if not p.shifted and sorted(p.gvecs) == _units(len(p.gvecs))), None)

    def green_successors(self, k):
        return sorted((e.larger, e) for e in self.edges if e.smaller == k)

    def to_dot(self):
        lines = ["digraph exchange {", "  node [shape=box];"]
        for k, p in enumerate(self.pairs):
            label = " ".join(str(g).replace(" ", "") for g in p.gvecs)
            lines.append(f'  n{k} [label="{label}"];')
        for e in sorted(self.edges, key=lambda e: (min(e.larger, e.smaller), max(e.larger, e.smaller))):
            a, b = sorted((e.larger, e.smaller))
            color = "green" if (a, b) == e.green else "red"
            lab = str(e.normal).replace(" ", "")
            lines.append(f'  n{a} -> n{b} [label="{lab}", color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _units(n):
    return sorted(tuple(int(i == j) for j in range(n)) for i in range(n))


def _representative(catalog, N):
    """The corpus member isomorphic to N (so equal bricks are the same object)."""
    for X in catalog.corpus:
        if X.dims == N.dims and isomorphic_indecomposables(X, N):
            return X
    return N


def build_exchange_graph(catalog, pairs, bound=None):
    fan = assemble_fan(pairs)
    classes = [torsion_class(catalog, p) for p in pairs]
    edges = []
    warnings = []
    if not fan.complete:
        warnings.append("fan is incomplete within the catalog bound: graph is partial")
    for key, owners in sorted(fan.facets.items()):
        if len(owners) != 2:
            continue
        i, j = owners
        Ti, Tj = classes[i].members, classes[j].members
        if Tj < Ti:
            larger, smaller = i, j
        elif Ti < Tj:
            larger, smaller = j, i
        else:
            raise EngineError("adjacent pairs with incomparable torsion classes")
        lo, hi = classes[smaller].members, classes[larger].members
        if any(lo < c.members < hi for c in classes):
            raise EngineError("mutation edge is not a cover among the computed torsion classes")
        almost = pairs[i].without([x for x in range(pairs[i].size) if pairs[i].items[x] not in key][0])
        brick = _representative(catalog, wall_of_facet(catalog, almost, pairs[i], pairs[j], bound))
        edges.append(Edge(larger, smaller, almost, brick))
    return ExchangeGraph(catalog, fan, list(pairs), classes, edges, fan.complete, warnings)


@dataclass
class GreenSequence:
    nodes: tuple
    edges: tuple

    @property
    def length(self):
        return len(self.edges)

    def bricks(self):
        return [e.brick for e in self.edges]


def enumerate_mgs(graph, require_complete=True, limit=None):
    """All increasing chains of cover edges from the (0, A) node to (A, 0)."""
    if require_complete and not graph.complete:
        raise IncompleteGraph("exchange graph is incomplete: maximality of green sequences cannot be certified")
    start, goal = graph.bottom, graph.top
    if start is None or goal is None:
        return []
    out = []
    succ = {k: graph.green_successors(k) for k in range(len(graph.pairs))}

    def dfs(k, nodes, edges):
        if limit is not None and len(out) >= limit:
            return
        if k == goal:
            out.append(GreenSequence(tuple(nodes), tuple(edges)))
            return
        for nxt, e in succ[k]:
            nodes.append(nxt)
            edges.append(e)
            dfs(nxt, nodes, edges)
            nodes.pop()
            edges.pop()

    dfs(start, [start], [])
    out.sort(key=lambda s: (s.length, s.nodes))
    return out


# piecewise-linear paths


@dataclass
class Crossing:
    t: Fraction
    segment: int
    s: Fraction  # local parameter on the segment
    module: object
    green: bool


@dataclass
class PLPath:
    vertices: list  # rational points
    crossings: list = field(default_factory=list)
    stages: list = field(default_factory=list)  # torsion class index per vertex (chamber corners)

    def point(self, seg, s):
        v, w = self.vertices[seg], self.vertices[seg + 1]
        return tuple(Fraction(a) + Fraction(s) * (Fraction(b) - a) for a, b in zip(v, w))

    def reversed(self):
        return PLPath(list(reversed(self.vertices)))

    @property
    def segments(self):
        return len(self.vertices) - 1


def _diff(w, v):
    return tuple(Fraction(a) - b for a, b in zip(w, v))


def crossing_sign(v, w, N):
    """'green' or 'red' for the segment v -> w crossing the hyperplane of [N]."""
    d = pairing(_diff(w, v), N.dims)
    a = pairing(v, N.dims)
    if d == 0:
        raise ValueError("segment is parallel to the wall: not D-generic")
    s = -a / d
    if not (0 <= s <= 1):
        raise ValueError("no crossing: segment does not meet the wall hyperplane")
    return "green" if d > 0 else "red"


def _semistable_interval(v, w, N, bound):
    """Exact sub-interval of [0, 1] of parameters s with v + s(w - v) in D(N), or None."""
    lo, hi = Fraction(0), Fraction(1)
    dv = _diff(w, v)
    a, b = pairing(v, N.dims), pairing(dv, N.dims)
    if b != 0:
        s = -a / b
        if not (0 <= s <= 1):
            return None
        lo = hi = s
    elif a != 0:
        return None
    for L in N.subdims(bound):
        c0, c1 = pairing(v, L), pairing(dv, L)
        # c0 + s c1 <= 0
        if c1 == 0:
            if c0 > 0:
                return None
        elif c1 > 0:
            hi = min(hi, -c0 / c1)
        else:
            lo = max(lo, -c0 / c1)
        if lo > hi:
            return None
    return lo, hi


@dataclass
class DGenericReport:
    passed: bool
    violations: list
    crossings: list  # (t, dims, sign)


def _proportional(a, b):
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(len(a)))


def verify_d_generic(path, corpus, bound=None):
    bound = bound or DEFAULT_BOUND
    violations, events = [], []
    r = path.segments
    for seg in range(r):
        v, w = path.vertices[seg], path.vertices[seg + 1]
        hits = []
        for N in corpus:
            iv = _semistable_interval(v, w, N, bound)
            if iv is None:
                continue
            lo, hi = iv
            d = pairing(_diff(w, v), N.dims)
            if d == 0 or lo != hi:
                violations.append(f"segment {seg}: path runs inside the stability space of {N.dims}")
                continue
            hits.append((lo, N, d))
        for s, N, d in hits:
            if (s == 0 and seg == 0) or (s == 1 and seg == r - 1):
                violations.append(f"endpoint lies in the stability space of {N.dims}")
            elif s in (0, 1):
                violations.append(f"corner {seg + int(s)} lies on the wall of {N.dims}")
        inner = sorted({s for s, _, _ in hits if 0 < s < 1})
        for s in inner:
            mods = [N for t, N, _ in hits if t == s]
            base = mods[0].dims
            if not all(_proportional(base, N.dims) for N in mods):
                violations.append(
                    f"segment {seg}: crossing at s={s} meets non-proportional walls "
                    + ", ".join(str(N.dims) for N in mods)
                )
            if len(inner) > 1:
                violations.append(f"segment {seg}: crosses more than one wall")
            sign = next(d for t, N, d in hits if t == s)
            events.append(((seg + s) / r, base, "green" if sign > 0 else "red"))
    if r == 0 and path.vertices:
        p = path.vertices[0]
        for N in corpus:
            if _semistable_interval(p, p, N, bound) is not None:
                violations.append(f"constant path lies in the stability space of {N.dims}")
    return DGenericReport(not violations, violations, events)


def _segment_clean(v, w, corpus, bound):
    path = PLPath([v, w])
    rep = verify_d_generic(path, corpus, bound)
    return rep.passed and len(rep.crossings) == 1


def mgs_to_path(graph, seq, bound=None, max_halvings=12):
    """PL path through chamber barycenters realising a maximal green sequence."""
    bound = bound or DEFAULT_BOUND
    cat = graph.catalog
    corpus = cat.corpus
    pts = [tuple(Fraction(x) for x in graph.pairs[k].barycenter()) for k in seq.nodes]
    verts = [pts[0]]
    for i, e in enumerate(seq.edges):
        v, w = pts[i], pts[i + 1]
        if _segment_clean(v, w, corpus, bound):
            verts.append(w)
            continue
        b = tuple(Fraction(x) for x in e.almost.barycenter())
        gv = [g for g in graph.pairs[seq.nodes[i]].gvecs if g not in e.almost.gvecs][0]
        gw = [g for g in graph.pairs[seq.nodes[i + 1]].gvecs if g not in e.almost.gvecs][0]
        eps = Fraction(1, 2)
        for _ in range(max_halvings):
            p = tuple(x + eps * y for x, y in zip(b, gv))
            q = tuple(x + eps * y for x, y in zip(b, gw))
            if _segment_clean(p, q, corpus, bound):
                verts.extend([p, q, w])
                break
            eps /= 2
        else:
            raise EngineError("could not route the path across a single wall")
    path = PLPath(verts)
    rep = verify_d_generic(path, corpus, bound)
    if not rep.passed:
        raise EngineError("emitted path is not D-generic: " + "; ".join(rep.violations))
    if len(rep.crossings) != seq.length:
        raise EngineError("emitted path has the wrong number of crossings")
    if any(sign != "green" for _, _, sign in rep.crossings):
        raise EngineError("emitted path has a red crossing")
    for (t, dims, _), e in zip(rep.crossings, seq.edges):
        if tuple(dims) != tuple(e.brick.dims):
            raise EngineError("crossing order does not match the brick labels")
    # torsion classes at the chamber corners match the sequence
    stages = []
    for k, node in enumerate(seq.nodes):
        T = torsion_class_T_theta(pts[k], corpus, bound)
        if T != graph.classes[node].members:
            raise EngineError("torsion class at a chamber corner differs from the sequence")
        stages.append(node)
    path.crossings = [Crossing(t, int(t * path.segments), t * path.segments - int(t * path.segments), d, s == "green") for t, d, s in rep.crossings]
    path.stages = stages
    return path


def one_step_extensions(graph, bound=None):
    """Crossing signs of the segments leaving the (A, 0) chamber into each neighbour."""
    top = graph.top
    v = tuple(Fraction(x) for x in graph.pairs[top].barycenter())
    out = []
    for e in graph.edges:
        if top not in (e.larger, e.smaller):
            continue
        other = e.smaller if e.larger == top else e.larger
        w = tuple(Fraction(x) for x in graph.pairs[other].barycenter())
        rep = verify_d_generic(PLPath([v, w]), graph.catalog.corpus, bound)
        out.append((other, e.brick.dims, [s for _, _, s in rep.crossings], crossing_sign(v, w, e.brick)))
    return out
