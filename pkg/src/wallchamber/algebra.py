"""Quivers with relations and their finite-dimensional path algebras.

A path is stored as ``(start, arrows)`` where ``arrows`` is a tuple of arrow
indices in traversal order; the trivial path at ``v`` is ``(v, ())``.
The product follows composition of maps: ``x * y`` means "first y, then x",
so ``e_i A e_j`` is spanned by paths from j to i and P(i) = A e_i is spanned
by paths starting at i.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources

from . import linalg
from .fields import QQ, FieldError, PrimeField, field_from_descriptor


class SpecError(ValueError):
    """Malformed algebra specification; ``line`` points into the source text."""

    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple  # of (name, src, tgt), vertices 1-based

    def __post_init__(self):
        if self.n < 1:
            raise SpecError("a quiver needs at least one vertex")
        names = set()
        for name, s, t in self.arrows:
            if name in names:
                raise SpecError(f"duplicate arrow id {name!r}")
            names.add(name)
            for v in (s, t):
                if not (1 <= v <= self.n):
                    raise SpecError(f"arrow {name!r} uses unknown vertex {v}")

    def src(self, a):
        return self.arrows[a][1]

    def tgt(self, a):
        return self.arrows[a][2]

    def name(self, a):
        return self.arrows[a][0]

    @cached_property
    def arrow_index(self):
        return {name: i for i, (name, _, _) in enumerate(self.arrows)}

    def out_arrows(self, v):
        return [i for i, (_, s, _) in enumerate(self.arrows) if s == v]

    def in_arrows(self, v):
        return [i for i, (_, _, t) in enumerate(self.arrows) if t == v]

    def paths_of_length(self, k):
        """All paths with exactly k arrows, in a deterministic order."""
        if k == 0:
            return [(v, ()) for v in range(1, self.n + 1)]
        out = []
        for start, arr in self.paths_of_length(k - 1):
            end = self.tgt(arr[-1]) if arr else start
            for a in self.out_arrows(end):
                out.append((start, arr + (a,)))
        return out

    def is_acyclic(self):
        indeg = {v: 0 for v in range(1, self.n + 1)}
        for _, _, t in self.arrows:
            indeg[t] += 1
        stack = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for a in self.out_arrows(v):
                t = self.tgt(a)
                indeg[t] -= 1
                if indeg[t] == 0:
                    stack.append(t)
        return seen == self.n

    def longest_path(self):
        best = {}

        def depth(v):
            if v not in best:
                best[v] = max((1 + depth(self.tgt(a)) for a in self.out_arrows(v)), default=0)
            return best[v]

        return max(depth(v) for v in range(1, self.n + 1))

    def path_word(self, path):
        start, arr = path
        if not arr:
            return f"e{start}"
        return ".".join(self.name(a) for a in arr)


def path_src(quiver, path):
    return path[0]


def path_tgt(quiver, path):
    start, arr = path
    return quiver.tgt(arr[-1]) if arr else start


@dataclass(frozen=True)
class RelationSet:
    """Relations as tuples of ``(coefficient, path)`` plus the nilpotency bound m."""

    relations: tuple
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise SpecError("nilpotency bound must be at least 2")


def expand_shorthand(quiver, m):
    """Monomial relations meaning "every path of length m is zero"."""
    return [((Fraction(1), p),) for p in quiver.paths_of_length(m)]


_TERM = re.compile(r"^\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?(?P<path>[^\s*+-][^\s*+]*)\s*$")


def parse_relation(text, quiver, line=None):
    """Parse ``"a.b - 2*c.d"`` (paths in traversal order) into (coef, path) terms."""
    s = text.strip()
    if not s:
        raise SpecError("empty relation", line)
    pieces = re.split(r"(?=[+-])", s)
    terms = []
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        mt = _TERM.match(piece)
        if not mt:
            raise SpecError(f"cannot parse term {piece!r} in relation {text!r}", line)
        coef = sign * Fraction(mt.group("coef") or 1)
        words = mt.group("path").split(".")
        arr = []
        for w in words:
            if w not in quiver.arrow_index:
                raise SpecError(f"unknown arrow {w!r} in relation {text!r}", line)
            arr.append(quiver.arrow_index[w])
        for a, b in zip(arr, arr[1:]):
            if quiver.tgt(a) != quiver.src(b):
                raise SpecError(
                    f"path {mt.group('path')!r} is not composable in relation {text!r}", line
                )
        if len(arr) < 2:
            raise SpecError(f"relation {text!r} contains a path of length < 2", line)
        terms.append((coef, (quiver.src(arr[0]), tuple(arr))))
    ends = {(p[0], path_tgt(quiver, p)) for _, p in terms}
    if len(ends) > 1:
        raise SpecError(f"relation {text!r} mixes non-parallel paths", line)
    return tuple(terms)


@dataclass(frozen=True)
class AlgebraSpec:
    quiver: Quiver
    relations: RelationSet
    field: object = QQ
    name: str = ""
    nilpotency_given: bool = True


def _line_of(text, needle, default=None):
    for i, ln in enumerate(text.splitlines(), 1):
        if needle in ln:
            return i
    return default


def parse_algebra_spec(text):
    """Parse a JSON algebra spec document into an :class:`AlgebraSpec`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise SpecError("spec must be a JSON object", 1)
    n = doc.get("vertices")
    if not isinstance(n, int) or n < 1:
        raise SpecError("'vertices' must be a positive integer", _line_of(text, '"vertices"'))
    arrows = []
    for item in doc.get("arrows", []):
        line = _line_of(text, json.dumps(item[0]) if item else "arrows")
        if not (isinstance(item, list) and len(item) == 3):
            raise SpecError(f"arrow entry {item!r} must be [name, src, tgt]", line)
        name, s, t = item
        if not isinstance(s, int) or not isinstance(t, int) or not (1 <= s <= n and 1 <= t <= n):
            raise SpecError(f"arrow {name!r} uses unknown vertex", line)
        arrows.append((str(name), s, t))
    try:
        quiver = Quiver(n, tuple(arrows))
    except SpecError as exc:
        raise SpecError(str(exc), _line_of(text, '"arrows"')) from None
    rels = []
    for r in doc.get("relations", []):
        rels.append(parse_relation(r, quiver, _line_of(text, json.dumps(r)[1:-1])))
    short = doc.get("shorthands", {}) or {}
    m = short.get("rad_nilpotency")
    given = m is not None
    line = _line_of(text, "rad_nilpotency")
    if given:
        if not isinstance(m, int) or m < 2:
            raise SpecError("rad_nilpotency must be an integer >= 2", line)
    else:
        m = detect_nilpotency(quiver, rels)
    fdesc = doc.get("field")
    if isinstance(fdesc, str):
        fdesc = {"kind": fdesc}
    try:
        F = field_from_descriptor(fdesc)
    except FieldError as exc:
        raise SpecError(str(exc), _line_of(text, '"field"')) from None
    return AlgebraSpec(quiver, RelationSet(tuple(rels), m), F, str(doc.get("name", "")), given)


def detect_nilpotency(quiver, rels, cap=20):
    """Smallest m with every length-m path in the ideal (homogeneous relations only)."""
    if quiver.is_acyclic():
        return max(2, quiver.longest_path() + 1)
    homogeneous = all(len({len(p[1]) for _, p in r}) == 1 for r in rels)
    if not rels or not homogeneous:
        raise SpecError("cyclic quiver: set shorthands.rad_nilpotency explicitly")
    for d in range(2, cap + 1):
        paths = quiver.paths_of_length(d)
        idx = {p: i for i, p in enumerate(paths)}
        gens = []
        for r in rels:
            k = len(r[0][1][1])
            if k > d:
                continue
            # pad relations on both sides to total length d
            for left in range(0, d - k + 1):
                for pre in quiver.paths_of_length(left):
                    for post in quiver.paths_of_length(d - k - left):
                        vec = [0] * len(paths)
                        ok = False
                        for c, (s, arr) in r:
                            full = _concat(quiver, pre, (s, arr))
                            full = _concat(quiver, full, post) if full else None
                            if full is not None:
                                vec[idx[full]] += c
                                ok = True
                        if ok and any(vec):
                            gens.append([Fraction(x) for x in vec])
        if gens and linalg.rank(gens, QQ) == len(paths):
            return d
    raise SpecError(f"could not detect nilpotency up to {cap}; set shorthands.rad_nilpotency")


def _concat(quiver, first, second):
    """Path ``first`` followed by ``second``, or None if they do not compose."""
    if first is None or second is None:
        return None
    if path_tgt(quiver, first) != second[0]:
        return None
    return (first[0], first[1] + second[1])


class PathAlgebra:
    """kQ/I with a normal-form path basis and exact structure constants."""

    def __init__(self, quiver, relations, F=QQ):
        self.quiver = quiver
        self.relations = relations
        self.field = F
        self.m = relations.m
        self.name = None
        self._build()

    # construction: all paths of length < m span kQ/R^m; the ideal generated
    # by the relations there is row reduced against a column order that
    # prefers long (then lexicographically large) paths as pivots.
    def _build(self):
        Q, F = self.quiver, self.field
        allpaths = []
        for k in range(self.m):
            allpaths.extend(Q.paths_of_length(k))
        order = sorted(range(len(allpaths)), key=lambda i: (-len(allpaths[i][1]), _neg(allpaths[i])))
        col = {allpaths[i]: c for c, i in enumerate(order)}
        cols = [allpaths[i] for i in order]
        N = len(cols)
        gens = []
        for r in self.relations.relations:
            k = len(r[0][1][1])
            for left in range(0, self.m - 1):
                for pre in Q.paths_of_length(left):
                    for right in range(0, self.m - left):
                        for post in Q.paths_of_length(right):
                            vec = [F.zero] * N
                            hit = False
                            for c, p in r:
                                full = _concat(Q, _concat(Q, pre, p), post)
                                if full is not None and len(full[1]) < self.m:
                                    vec[col[full]] = F.norm(vec[col[full]] + F(c))
                                    hit = True
                            if hit and any(vec):
                                gens.append(vec)
        rows, piv = linalg.rref(gens, F, N) if gens else ([], [])
        pivset = set(piv)
        basis_cols = [c for c in range(N) if c not in pivset]
        # basis listed by length then word order
        basis = sorted((cols[c] for c in basis_cols), key=lambda p: (len(p[1]), p[1], p[0]))
        self.basis = basis
        self.index = {p: i for i, p in enumerate(basis)}
        self.dim = len(basis)
        reduce = {}
        pivrow = {p: row for row, p in zip(rows, piv)}
        for c, p in enumerate(cols):
            if c in pivrow:
                row = pivrow[c]
                vec = {}
                for cc in basis_cols:
                    if row[cc]:
                        vec[self.index[cols[cc]]] = F.norm(-row[cc])
                reduce[p] = vec
            else:
                reduce[p] = {self.index[p]: F.one}
        self._reduce = reduce

    def reduce_path(self, path):
        """Normal form of an arbitrary path as ``{basis index: coef}``."""
        if len(path[1]) >= self.m:
            return {}
        return self._reduce[path]

    def src(self, i):
        return self.basis[i][0]

    def tgt(self, i):
        return path_tgt(self.quiver, self.basis[i])

    def length(self, i):
        return len(self.basis[i][1])

    def idempotent(self, v):
        return self.index[(v, ())]

    def mul(self, x, y):
        """Basis product ``x * y`` ("y then x") as a sparse vector."""
        p = _concat(self.quiver, self.basis[y], self.basis[x])
        return {} if p is None else self.reduce_path(p)

    def mul_vec(self, u, v):
        out = {}
        F = self.field
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mul(i, j).items():
                    out[k] = F.norm(out.get(k, F.zero) + a * b * c)
        return {k: c for k, c in out.items() if c}

    @cached_property
    def mult_table(self):
        return {(i, j): self.mul(i, j) for i in range(self.dim) for j in range(self.dim)}

    def paths_between(self, s, t):
        return [i for i, p in enumerate(self.basis) if p[0] == s and self.tgt(i) == t]

    def paths_from(self, s):
        return [i for i, p in enumerate(self.basis) if p[0] == s]

    def radical_basis(self):
        return [i for i in range(self.dim) if self.length(i) >= 1]

    def generating_relations(self):
        """Relations a module must satisfy: the given ones plus all length-m paths."""
        F = self.field
        rels = [[(F(c), p) for c, p in r] for r in self.relations.relations]
        rels += [[(F.one, p)] for p in self.quiver.paths_of_length(self.m)]
        return rels

    @property
    def n(self):
        return self.quiver.n

    def __repr__(self):
        return f"PathAlgebra(n={self.n}, dim={self.dim}, field={self.field!r})"


def _neg(path):
    # larger words first at equal length
    return tuple(-a for a in path[1]) + (-path[0],)


def build_algebra(spec_or_quiver, relations=None, F=None):
    if isinstance(spec_or_quiver, AlgebraSpec):
        spec = spec_or_quiver
        A = PathAlgebra(spec.quiver, spec.relations, F if F is not None else spec.field)
        A.name = spec.name
        return A
    return PathAlgebra(spec_or_quiver, relations, F if F is not None else QQ)


def load_spec(path):
    with open(path, encoding="utf-8") as fh:
        return parse_algebra_spec(fh.read())


BUNDLED = ("a2", "kronecker", "nakayama", "markoff", "markoff_path", "markoff_displayed", "semisimple3")


def bundled_spec_text(name):
    return resources.files("wallchamber.specs").joinpath(f"{name}.json").read_text(encoding="utf-8")


def bundled_spec(name):
    return parse_algebra_spec(bundled_spec_text(name))


def bundled_algebra(name, F=None):
    return build_algebra(bundled_spec(name), F=F)


def enumeration_field(p=2):
    return PrimeField(p)
