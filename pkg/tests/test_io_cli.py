import json
from pathlib import Path

import pytest

from wallchamber import io
from wallchamber.cli import main
from wallchamber.obstructions import VERDICT
from wallchamber.rep import indecomposable_projective, simple
from wallchamber.svg import arc_path, emit_svg, project

from conftest import algebra, catalog, graph, pairs

GOLDEN = Path(__file__).parent / "golden" / "nakayama_pairs.json"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dumps_is_canonical():
    doc = {"b": [1, 2], "a": {"y": "1/2", "x": 0}}
    text = io.dumps(doc)
    assert text.endswith("\n") and text.index('"a"') < text.index('"b"')
    assert io.dumps(io.loads(text)) == text


def test_numbers_round_trip():
    from fractions import Fraction

    for x in (0, 3, -7, Fraction(1, 2), Fraction(-5, 3)):
        assert io.parse_num(io.num(x)) == x
    assert io.num(Fraction(4, 2)) == 2


def test_representation_round_trip():
    A = algebra("nakayama")
    for M in catalog("nakayama").corpus:
        doc = io.representation_doc(M)
        back = io.representation_from_doc(io.loads(io.dumps(doc)), A)
        assert back.dims == M.dims and back.mats == M.mats


def test_representation_field_mismatch():
    doc = io.representation_doc(simple(algebra("a2"), 1))
    with pytest.raises(ValueError):
        io.representation_from_doc(doc, algebra("a2", 3))


@pytest.mark.parametrize("build", ["catalog", "pairs", "fan", "graph", "mgs"])
def test_documents_round_trip(build):
    from wallchamber.cli import facet_walls
    from wallchamber.paths import enumerate_mgs, mgs_to_path

    cat, g = catalog("a2"), graph("a2")
    seqs = enumerate_mgs(g)
    docs = {
        "catalog": lambda: io.catalog_doc(cat),
        "pairs": lambda: io.pairs_doc(cat, list(pairs("a2"))),
        "fan": lambda: io.fan_doc(cat, g.fan, facet_walls(g)),
        "graph": lambda: io.graph_doc(g),
        "mgs": lambda: io.mgs_doc(g, seqs, [mgs_to_path(g, s) for s in seqs]),
    }
    text = io.dumps(docs[build]())
    assert io.dumps(io.loads(text)) == text
    doc = io.loads(text)
    assert doc["field"] == {"kind": "fp", "p": 2} and "version" in doc


def test_cli_pairs_match_golden(capsys):
    code, out, _ = run(capsys, "pairs", "nakayama")
    assert code == 0
    doc = io.loads(out)
    golden = json.loads(GOLDEN.read_text())
    want = {frozenset(tuple(g) for g in row["g_vectors"]) for row in golden["rows"]}
    assert doc["count"] == 20 and io.gvector_sets(doc) == want


def test_cli_output_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        f = tmp_path / f"fan{k}.json"
        assert run(capsys, "fan", "nakayama", "--out", str(f))[0] == 0
        outs.append(f.read_bytes())
    assert outs[0] == outs[1]
    a = run(capsys, "fan", "nakayama", "--format", "svg")[1]
    b = run(capsys, "fan", "nakayama", "--format", "svg")[1]
    assert a == b and "<svg" in a


def test_cli_fan_doc(capsys):
    doc = io.loads(run(capsys, "fan", "a2")[1])
    # S1 and S2 each carry two facets, P1 one
    assert len(doc["cones"]) == 5 and len(doc["walls"]) == 3
    assert sum(len(w["facets"]) for w in doc["walls"].values()) == 5
    assert doc["complete"] is True


def test_cli_mgs(capsys):
    code, out, _ = run(capsys, "mgs", "a2")
    doc = io.loads(out)
    assert code == 0 and doc["count"] == 2
    assert [s["length"] for s in doc["sequences"]] == [2, 3]


def test_cli_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "a2", "--format", "dot")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 5
    assert "color=green" in out and "color=red" in out


def test_cli_markoff(capsys):
    code, out, _ = run(capsys, "markoff", "markoff", "--max-n", "2", "--separation-bound", "4")
    doc = io.loads(out)
    assert code == 0 and doc["verdict"] == VERDICT and doc["all_pass"] is True


def test_cli_markoff_absent(capsys):
    code, out, _ = run(capsys, "markoff", "a2")
    doc = io.loads(out)
    assert code == 0 and doc["verdict"] == "pattern not found" and doc["witness"] is None


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "pairs", "nakayama", "--field", "rational")[0] == 1
    assert run(capsys, "pairs", "no-such-algebra")[0] == 1
    assert run(capsys, "pairs", "a2", "--prime", "4")[0] == 1
    assert run(capsys, "graph", "a2", "--format", "svg")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": 2,\n "arrows": [["a", 1, 3]]}')
    code, _, err = run(capsys, "pairs", str(bad))
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "mgs", "markoff", "--dim-bound", "1")
    assert code == 2 and "refused" in err
    code, _, err = run(capsys, "mgs", "kronecker")
    assert code == 2
    assert run(capsys, "catalog", "kronecker", "--budget", "3")[0] == 2


def test_svg_requires_rank_two_or_three(capsys, tmp_path):
    spec = tmp_path / "a4.json"
    spec.write_text(json.dumps({
        "name": "A4",
        "vertices": 4,
        "arrows": [["a", 1, 2], ["b", 2, 3], ["c", 3, 4]],
        "relations": [],
    }))
    code, _, err = run(capsys, "fan", str(spec), "--dim-bound", "1", "--format", "svg")
    assert code == 1 and "rank 3" in err


def test_stereographic_helpers():
    with pytest.raises(ValueError):
        project((1, 1, 1))
    assert project((2, 2, -1)) != project((-1, -1, -1))
    arc = arc_path((1, 0, 0), (0, 1, 0), 60)
    assert arc.startswith("M ") and " A " in arc


def test_svg_2d_and_3d():
    from wallchamber.cli import facet_walls

    g = graph("a2")
    text = emit_svg(g.fan, facet_walls(g), g.catalog)
    assert text.count("<line") >= 4
    g = graph("nakayama")
    text = emit_svg(g.fan, facet_walls(g), g.catalog)
    assert "outer region" in text and text.count("<circle") == 12


def test_cli_rep_over_rationals(capsys, tmp_path):
    A = algebra("a2", 0)
    f = tmp_path / "p1.json"
    f.write_text(io.dumps(io.representation_doc(indecomposable_projective(A, 1))))
    code, out, _ = run(capsys, "rep", "a2", "--field", "rational", "--module", str(f))
    doc = io.loads(out)
    assert code == 0 and doc["g_vector"] == [1, 0] and doc["tau_rigid"] is True
    assert doc["field"] == {"kind": "rational"} and "summand_dims" not in doc
    f.write_text(io.dumps(io.representation_doc(simple(A, 1))))
    doc = io.loads(run(capsys, "rep", "a2", "--field", "rational", "--module", str(f))[1])
    assert doc["g_vector"] == [1, -1] and doc["tau"]["dims"] == [0, 1]
