"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad spec, wrong field, wrong rank),
2 refusal because a budget or bound was exceeded or a result cannot be
certified at the requested bound.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import io
from .algebra import BUNDLED, SpecError, build_algebra, bundled_spec, load_spec
from .enumeration import BudgetExceeded
from .fields import FieldError, PrimeField, QQ
from .rep import BoundExceeded, DecompositionInconclusive, EngineError

EXIT_OK, EXIT_DOMAIN, EXIT_REFUSED = 0, 1, 2


class DomainError(ValueError):
    pass


def _spec(name):
    if os.path.exists(name):
        return load_spec(name)
    if name in BUNDLED:
        return bundled_spec(name)
    raise DomainError(f"no such spec file or bundled algebra: {name!r}")


def _field(args, enumeration=True):
    if args.field == "rational":
        if enumeration:
            raise DomainError("enumeration needs a prime field: use --field fp (optionally with --prime)")
        return QQ
    return PrimeField(args.prime)


def _algebra(args, enumeration=True):
    spec = _spec(args.spec)
    A = build_algebra(spec, F=_field(args, enumeration))
    A.name = spec.name or os.path.splitext(os.path.basename(args.spec))[0]
    return A


def _catalog(args):
    from .tilting import Catalog

    return Catalog(_algebra(args), args.dim_bound, budget=args.budget)


def _structure(args):
    from .paths import build_exchange_graph
    from .tilting import assemble_tau_tilting_pairs

    cat = _catalog(args)
    pairs = assemble_tau_tilting_pairs(cat)
    graph = build_exchange_graph(cat, pairs, args.sub_bound)
    return cat, pairs, graph


def facet_walls(graph):
    return {tuple(sorted(e.almost.items)): e.brick for e in graph.edges}


def _check_format(args, allowed):
    if args.format not in allowed:
        raise DomainError(f"--format {args.format} is not available for {args.command}; choose from {', '.join(allowed)}")


def cmd_catalog(args):
    _check_format(args, ("doc",))
    return io.dumps(io.catalog_doc(_catalog(args)))


def cmd_pairs(args):
    from .tilting import assemble_tau_tilting_pairs

    _check_format(args, ("doc",))
    cat = _catalog(args)
    return io.dumps(io.pairs_doc(cat, assemble_tau_tilting_pairs(cat)))


def cmd_fan(args):
    from .svg import emit_svg

    _check_format(args, ("doc", "svg"))
    cat, pairs, graph = _structure(args)
    walls = facet_walls(graph)
    if args.format == "svg":
        return emit_svg(graph.fan, walls, cat)
    return io.dumps(io.fan_doc(cat, graph.fan, walls))


def cmd_graph(args):
    _check_format(args, ("doc", "dot"))
    cat, pairs, graph = _structure(args)
    for w in graph.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.format == "dot":
        return graph.to_dot()
    return io.dumps(io.graph_doc(graph))


def cmd_mgs(args):
    from .paths import enumerate_mgs, mgs_to_path

    _check_format(args, ("doc",))
    cat, pairs, graph = _structure(args)
    seqs = enumerate_mgs(graph)
    paths = [mgs_to_path(graph, s, args.sub_bound) for s in seqs] if args.paths else None
    return io.dumps(io.mgs_doc(graph, seqs, paths))


def cmd_markoff(args):
    from .obstructions import detect_markoff, green_path_obstruction_demo, verify_wall_formula

    _check_format(args, ("doc",))
    A = _algebra(args)
    w = detect_markoff(A.quiver)
    reports, demos = [], []
    if w is not None and not w.notice:
        primes = sorted({args.prime, 2, 3})
        for p in primes:
            for fam in ("F1", "F2", "F3"):
                for n in range(args.max_n + 1):
                    reports.append(verify_wall_formula(fam, n, p))
        for b in (1, 2, 3):
            demos.append(green_path_obstruction_demo(args.separation_bound, branch=b, verify_upto=0))
    return io.dumps(io.markoff_doc(A, w, reports, demos))


def cmd_rep(args):
    from .rep import decompose, hom_dim

    _check_format(args, ("doc",))
    A = _algebra(args, enumeration=False)
    with open(args.module, encoding="utf-8") as fh:
        M = io.representation_from_doc(io.loads(fh.read()), A)
    pres = M.presentation
    doc = {
        "document": "representation_report",
        "version": io.FORMAT_VERSION,
        "algebra": A.name,
        "field": A.field.descriptor(),
        "module": io.representation_doc(M),
        "g_vector": list(M.g_vector),
        "presentation": {"p0": list(pres.p0), "p1": list(pres.p1)},
        "top_dims": list(M.top_dims),
        "socle_dims": list(M.socle_dims),
        "end_dim": M.end_dim,
        "tau": io.representation_doc(M.tau),
        "tau_rigid": hom_dim(M, M.tau) == 0,
    }
    if A.field.is_finite:
        doc["summand_dims"] = sorted(list(X.dims) for X in decompose(M))
    return io.dumps(doc)


COMMANDS = {
    "catalog": (cmd_catalog, "indecomposable tau-rigid modules up to a dimension bound"),
    "pairs": (cmd_pairs, "tau-tilting pairs with their g-vectors"),
    "fan": (cmd_fan, "g-vector fan with walls (doc or svg)"),
    "graph": (cmd_graph, "exchange graph with brick labels (doc or dot)"),
    "mgs": (cmd_mgs, "maximal green sequences and their PL paths"),
    "markoff": (cmd_markoff, "double 3-cycle obstruction report"),
    "rep": (cmd_rep, "g-vector, presentation and tau of one representation"),
}


def build_parser():
    ap = argparse.ArgumentParser(prog="wallchamber", description="Walls, chambers and green sequences of kQ/I.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext)
        p.add_argument("spec", help=f"algebra spec file or bundled name ({', '.join(BUNDLED)})")
        p.add_argument("--field", choices=("rational", "fp"), default="fp")
        p.add_argument("--prime", type=int, default=2)
        p.add_argument("--dim-bound", type=int, default=3, help="per-vertex dimension bound for enumeration")
        p.add_argument("--sub-bound", type=int, default=10, help="total dimension bound for submodule enumeration")
        p.add_argument("--budget", type=int, default=50000)
        p.add_argument("--out", help="write the output here instead of stdout")
        p.add_argument("--format", choices=("doc", "dot", "svg"), default="doc")
        if name == "mgs":
            p.add_argument("--no-paths", dest="paths", action="store_false", help="skip PL path emission")
        if name == "markoff":
            p.add_argument("--max-n", type=int, default=5)
            p.add_argument("--separation-bound", type=int, default=10)
        if name == "rep":
            p.add_argument("--module", required=True, help="representation document (JSON)")
    return ap


def _validate(args):
    if args.dim_bound < 1:
        raise DomainError("--dim-bound must be positive")
    if args.sub_bound < 1 or args.budget < 1:
        raise DomainError("--sub-bound and --budget must be positive")
    if args.field == "fp":
        PrimeField(args.prime)
    if getattr(args, "max_n", 0) < 0 or getattr(args, "separation_bound", 1) < 1:
        raise DomainError("--max-n must be nonnegative and --separation-bound positive")


def main(argv=None):
    from .paths import IncompleteGraph
    from .tilting import MutationError

    args = build_parser().parse_args(argv)
    try:
        _validate(args)
        text = COMMANDS[args.command][0](args)
    except (DomainError, SpecError, FieldError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (BoundExceeded, DecompositionInconclusive, IncompleteGraph, MutationError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except EngineError as e:
        print(f"internal consistency check failed: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
