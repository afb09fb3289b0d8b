from fractions import Fraction

import pytest

from wallchamber.fan import torsion_class_T_theta
from wallchamber.paths import (
    IncompleteGraph,
    PLPath,
    crossing_sign,
    enumerate_mgs,
    mgs_to_path,
    one_step_extensions,
    verify_d_generic,
)
from wallchamber.rep import simple

from conftest import algebra, catalog, graph, pairs


def _hasse_chain_count(name):
    """Count maximal chains in the poset of T_theta at chamber barycenters.

    Independent of the fan: classes come from King semistability only and
    covers from set inclusion.
    """
    cat = catalog(name)
    classes = {torsion_class_T_theta(p.barycenter(), cat.corpus) for p in pairs(name)}
    classes = sorted(classes, key=len)
    covers = {c: [d for d in classes if c < d and not any(c < e < d for e in classes)] for c in classes}
    full = frozenset(range(len(cat.corpus)))
    memo = {}

    def count(c):
        if c == full:
            return 1
        if c not in memo:
            memo[c] = sum(count(d) for d in covers[c])
        return memo[c]

    return count(frozenset())


def test_graph_sizes():
    g = graph("a2")
    assert len(g.pairs) == 5 and len(g.edges) == 5 and g.complete
    g = graph("nakayama")
    assert len(g.pairs) == 20 and len(g.edges) == 30 and g.complete


def test_bricks_at_top_are_simples():
    for name in ("a2", "nakayama"):
        g = graph(name)
        A = algebra(name)
        bricks = sorted(e.brick.dims for e in g.edges if g.top in (e.larger, e.smaller))
        assert bricks == sorted(simple(A, i).dims for i in range(1, A.n + 1))


def test_oracle_agrees_on_known_counts():
    assert _hasse_chain_count("a2") == 2
    assert _hasse_chain_count("semisimple3") == 6


@pytest.mark.parametrize("name,count", [("a2", 2), ("semisimple3", 6), ("nakayama", 12)])
def test_mgs_counts(name, count):
    seqs = enumerate_mgs(graph(name))
    assert len(seqs) == count == _hasse_chain_count(name)


def test_nakayama_mgs_lengths():
    lengths = sorted(s.length for s in enumerate_mgs(graph("nakayama")))
    assert lengths == [5] * 6 + [6] * 6


def test_a2_sequences_and_paths():
    g = graph("a2")
    seqs = enumerate_mgs(g)
    assert [s.length for s in seqs] == [2, 3]
    assert [b.dims for b in seqs[0].bricks()] == [(0, 1), (1, 0)]
    assert [b.dims for b in seqs[1].bricks()] == [(1, 0), (1, 1), (0, 1)]
    p = mgs_to_path(g, seqs[0])
    assert [(c.t, c.module, c.green) for c in p.crossings] == [
        (Fraction(1, 4), (0, 1), True),
        (Fraction(3, 4), (1, 0), True),
    ]
    p = mgs_to_path(g, seqs[1])
    assert [(c.t, c.module) for c in p.crossings] == [
        (Fraction(1, 6), (1, 0)),
        (Fraction(1, 2), (1, 1)),
        (Fraction(5, 6), (0, 1)),
    ]


def test_paths_realise_every_sequence():
    for name in ("a2", "nakayama", "semisimple3"):
        g = graph(name)
        for s in enumerate_mgs(g):
            p = mgs_to_path(g, s)
            assert len(p.crossings) == s.length and all(c.green for c in p.crossings)
            assert [c.module for c in p.crossings] == [b.dims for b in s.bricks()]
            assert p.stages == list(s.nodes)


def test_reversed_path_all_red():
    g = graph("nakayama")
    corpus = g.catalog.corpus
    for s in enumerate_mgs(g):
        rep = verify_d_generic(mgs_to_path(g, s).reversed(), corpus)
        assert rep.passed and {c[2] for c in rep.crossings} == {"red"}


def test_crossing_sign_examples():
    A = algebra("a2")
    S1, S2 = simple(A, 1), simple(A, 2)
    assert crossing_sign((-1, 0), (1, 0), S1) == "green"
    assert crossing_sign((1, 0), (-1, 0), S1) == "red"
    assert crossing_sign((0, -1), (0, 1), S2) == "green"
    with pytest.raises(ValueError, match="no crossing"):
        crossing_sign((1, 0), (2, 0), S1)
    with pytest.raises(ValueError, match="parallel"):
        crossing_sign((0, -1), (0, 1), S1)


def test_d_generic_checks():
    corpus = catalog("a2").corpus
    bad = verify_d_generic(PLPath([(-1, -1), (1, 1)]), corpus)
    assert not bad.passed
    assert verify_d_generic(PLPath([(1, 1)]), corpus).passed
    assert not verify_d_generic(PLPath([(0, 1)]), corpus).passed
    assert not verify_d_generic(PLPath([(0, -1), (0, 1)]), corpus).passed
    # avoids the origin but crosses three walls on one segment
    many = verify_d_generic(PLPath([(-1, -2), (1, 1)]), corpus)
    assert not many.passed and any("more than one wall" in v for v in many.violations)
    assert [c[2] for c in many.crossings] == ["green"] * 3
    ok = verify_d_generic(PLPath([(-1, -2), (1, -2), (3, -1), (3, 1)]), corpus)
    assert ok.passed and [c[1] for c in ok.crossings] == [(1, 0), (1, 1), (0, 1)]


def test_one_step_extensions_red():
    for name in ("a2", "nakayama"):
        for other, dims, signs, sign in one_step_extensions(graph(name)):
            assert sign == "red" and signs == ["red"]


def test_incomplete_graph_refuses():
    g = graph("kronecker", 2)
    assert not g.complete and g.warnings
    with pytest.raises(IncompleteGraph):
        enumerate_mgs(g)


def test_edges_are_covers():
    for name in ("a2", "nakayama"):
        g = graph(name)
        for e in g.edges:
            lo, hi = g.classes[e.smaller].members, g.classes[e.larger].members
            assert lo < hi
            assert not any(lo < c.members < hi for c in g.classes)
