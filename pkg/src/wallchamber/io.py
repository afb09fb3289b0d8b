"""Canonical JSON documents for every computed object.

Documents are plain JSON trees.  Rationals are written as integers when
integral and as ``"a/b"`` strings otherwise; keys are sorted and the layout
is fixed, so ``dumps(loads(text)) == text`` for every emitted document.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .fields import field_from_descriptor
from .rep import Representation

FORMAT_VERSION = 1


def num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_num(x):
    return Fraction(x) if isinstance(x, str) else Fraction(int(x))


def vec(v):
    return [num(x) for x in v]


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text):
    return json.loads(text)


def _header(kind, algebra):
    return {
        "document": kind,
        "version": FORMAT_VERSION,
        "algebra": getattr(algebra, "name", None) or "unnamed",
        "field": algebra.field.descriptor(),
    }


# representations


def representation_doc(M):
    A, F = M.algebra, M.field
    arrows = {}
    for a, (name, s, t) in enumerate(A.quiver.arrows):
        arrows[name] = [[F.to_json(x) for x in row] for row in M.mats[a]]
    return {
        "dims": list(M.dims),
        "arrows": arrows,
        "field": F.descriptor(),
    }


def representation_from_doc(doc, algebra):
    F = field_from_descriptor(doc.get("field"))
    if F != algebra.field:
        raise ValueError(f"document field {F!r} differs from algebra field {algebra.field!r}")
    Q = algebra.quiver
    dims = tuple(int(d) for d in doc["dims"])
    mats = []
    for name, s, t in Q.arrows:
        rows = doc["arrows"].get(name)
        if rows is None:
            rows = [[0] * dims[s - 1] for _ in range(dims[t - 1])]
        mats.append([[F(parse_num(x)) for x in r] for r in rows])
    return Representation(algebra, dims, mats)


def module_entry(M):
    d = representation_doc(M)
    d.pop("field")
    d["g_vector"] = list(M.g_vector)
    return d


# catalog and pairs


def catalog_doc(catalog):
    A = catalog.algebra
    doc = _header("catalog", A)
    doc["dim_bound"] = catalog.bound
    doc["corpus_size"] = len(catalog.corpus)
    doc["modules"] = [dict(module_entry(M), index=k) for k, M in enumerate(catalog.modules)]
    doc["shifted_projectives"] = [{"vertex": i, "g_vector": list(catalog.g_of(("P", i)))} for i in range(1, A.n + 1)]
    doc["tau_rigid_pair_count"] = len(catalog.modules) + A.n
    return doc


def _summand(catalog, item):
    kind, k = item
    if kind == "P":
        return {"kind": "shifted_projective", "vertex": k, "g_vector": list(catalog.g_of(item))}
    return {"kind": "module", "index": k, "dims": list(catalog.modules[k].dims), "g_vector": list(catalog.g_of(item))}


def pair_doc(catalog, pair):
    return {
        "g_vectors": [list(g) for g in pair.key()],
        "summands": [_summand(catalog, x) for x in pair.items],
        "barycenter": list(pair.barycenter()),
    }


def pairs_doc(catalog, pairs):
    doc = _header("tau_tilting_pairs", catalog.algebra)
    doc["dim_bound"] = catalog.bound
    doc["count"] = len(pairs)
    doc["pairs"] = [dict(pair_doc(catalog, p), index=k) for k, p in enumerate(pairs)]
    return doc


def gvector_sets(doc):
    """Set of frozensets of g-vector tuples from a pairs document."""
    return {frozenset(tuple(g) for g in p["g_vectors"]) for p in doc["pairs"]}


# fan


def fan_doc(catalog, fan, walls):
    """``walls`` maps facet key -> wall module (or is empty for an incomplete fan)."""
    doc = _header("fan", catalog.algebra)
    doc["dim_bound"] = catalog.bound
    doc["complete"] = fan.complete
    doc["facet_count"] = fan.facet_count
    doc["cones"] = {
        json.dumps([list(g) for g in p.key()]): {"index": k, "rays": [list(g) for g in p.key()]}
        for k, p in enumerate(fan.pairs)
    }
    wl = {}
    for key, owners in fan.facets.items():
        N = walls.get(key)
        gens = sorted(catalog.g_of(x) for x in key)
        entry = {"facet": [list(g) for g in gens], "owners": sorted(owners)}
        if N is not None:
            wkey = json.dumps({"dims": list(N.dims), "normal": list(N.dims)}, sort_keys=True)
            wl.setdefault(wkey, {"dims": list(N.dims), "normal": list(N.dims), "facets": []})
            wl[wkey]["facets"].append(entry)
    for w in wl.values():
        w["facets"].sort(key=lambda e: e["facet"])
    doc["walls"] = wl
    return doc


# exchange graph, sequences, paths


def graph_doc(graph):
    doc = _header("exchange_graph", graph.catalog.algebra)
    doc["complete"] = graph.complete
    doc["warnings"] = list(graph.warnings)
    doc["nodes"] = [
        {"index": k, "g_vectors": [list(g) for g in p.key()], "torsion_class_size": len(graph.classes[k].members)}
        for k, p in enumerate(graph.pairs)
    ]
    doc["edges"] = sorted(
        (
            {"source": e.smaller, "target": e.larger, "brick": list(e.normal)}
            for e in graph.edges
        ),
        key=lambda d: (d["source"], d["target"]),
    )
    return doc


def path_doc(path):
    return {
        "vertices": [vec(v) for v in path.vertices],
        "crossings": [
            {"t": num(c.t), "segment": c.segment, "s": num(c.s), "wall": list(c.module), "sign": "green" if c.green else "red"}
            for c in path.crossings
        ],
    }


def mgs_doc(graph, seqs, paths=None):
    doc = _header("maximal_green_sequences", graph.catalog.algebra)
    doc["count"] = len(seqs)
    doc["lengths"] = sorted({s.length for s in seqs})
    items = []
    for k, s in enumerate(seqs):
        d = {"index": k, "length": s.length, "nodes": list(s.nodes), "bricks": [list(e.normal) for e in s.edges]}
        if paths is not None:
            d["path"] = path_doc(paths[k])
        items.append(d)
    doc["sequences"] = items
    return doc


def markoff_doc(algebra, witness, wall_reports, demos, extra=None):
    doc = _header("markoff_report", algebra)
    if witness is None:
        doc["witness"] = None
        doc["verdict"] = "pattern not found"
    else:
        doc["witness"] = {
            "vertices": list(witness.vertices),
            "legs": [{"source": s, "target": t, "arrows": list(a)} for (s, t), a in sorted(witness.legs.items())],
        }
        doc["verdict"] = witness.verdict
        if witness.notice:
            doc["notice"] = witness.notice
    doc["wall_formulas"] = [
        {
            "family": r.family,
            "n": r.n,
            "field": r.field,
            "dims": list(r.dims),
            "matches_closed_form": r.matches,
            "is_wall": r.is_wall,
            "brick": r.brick,
            "family_submodules_present": r.family_subs_present,
            "extra_submodule_dims": [list(x) for x in r.extra_subdims],
            "pass": r.passed,
        }
        for r in wall_reports
    ]
    doc["all_pass"] = all(r.passed for r in wall_reports) and all(d.passed for d in demos)
    doc["separation"] = [
        {
            "branch": d.branch,
            "sample": vec(d.sample),
            "accepted": d.accepted,
            "reason": d.reason,
            "walls": [{"n": n, "at_sample": num(a), "at_top": num(b)} for n, a, b in d.separations],
            "pass": d.passed,
        }
        for d in demos
    ]
    if extra:
        doc.update(extra)
    return doc
