import json
from fractions import Fraction

import pytest

from wallchamber.algebra import (
    BUNDLED,
    Quiver,
    SpecError,
    build_algebra,
    bundled_spec,
    expand_shorthand,
    parse_algebra_spec,
    parse_relation,
)
from wallchamber.fields import QQ, FieldError, PrimeField
from wallchamber.rep import indecomposable_projective, radical, top

from conftest import algebra


def spec_text(**kw):
    doc = {"vertices": 3, "arrows": [["a", 1, 2], ["b", 2, 3], ["c", 1, 3]], "relations": []}
    doc.update(kw)
    return json.dumps(doc, indent=2)


def test_a2_spec_parses_to_two_vertices_one_arrow():
    s = bundled_spec("a2")
    assert s.quiver.n == 2
    assert s.quiver.arrows == (("a", 1, 2),)
    assert s.relations.m == 2


def test_nonparallel_relation_rejected_with_line():
    text = spec_text(relations=["a.b - c.c"])
    with pytest.raises(SpecError, match="composable|non-parallel"):
        parse_algebra_spec(text)
    q = Quiver(3, (("a", 1, 2), ("b", 2, 3), ("d", 1, 2), ("e", 2, 2)))
    with pytest.raises(SpecError, match="non-parallel"):
        parse_relation("a.b - d.e", q, 7)
    try:
        parse_relation("a.b - d.e", q, 7)
    except SpecError as exc:
        assert exc.line == 7


def test_relation_errors():
    q = Quiver(3, (("a", 1, 2), ("b", 2, 3)))
    with pytest.raises(SpecError, match="unknown arrow"):
        parse_relation("a.z", q)
    with pytest.raises(SpecError, match="length < 2"):
        parse_relation("a", q)
    with pytest.raises(SpecError, match="composable"):
        parse_relation("b.a", q)
    with pytest.raises(SpecError, match="unknown vertex"):
        parse_algebra_spec(json.dumps({"vertices": 2, "arrows": [["a", 1, 5]]}))
    with pytest.raises(SpecError, match="duplicate"):
        parse_algebra_spec(json.dumps({"vertices": 2, "arrows": [["a", 1, 2], ["a", 2, 1]], "shorthands": {"rad_nilpotency": 2}}))


def test_relation_coefficients():
    q = Quiver(3, (("a", 1, 2), ("b", 2, 3), ("c", 1, 2), ("d", 2, 3)))
    terms = parse_relation("a.b - 2*c.d + 1/3*a.d", q)
    assert [t[0] for t in terms] == [1, -2, Fraction(1, 3)]


def test_radical_square_zero_shorthand_on_three_cycle():
    q = Quiver(3, (("a", 1, 2), ("b", 2, 3), ("c", 3, 1)))
    rels = expand_shorthand(q, 2)
    # oracle: every composable pair of arrows
    pairs = [(x, y) for x in range(3) for y in range(3) if q.tgt(x) == q.src(y)]
    assert len(rels) == len(pairs) == 3
    assert all(len(r) == 1 and len(r[0][1][1]) == 2 for r in rels)


@pytest.mark.parametrize("name,dim", [("a2", 3), ("kronecker", 4), ("nakayama", 9), ("markoff", 9), ("semisimple3", 3)])
def test_dimensions(name, dim):
    assert algebra(name).dim == dim


def test_semisimple_basis_is_idempotents():
    A = algebra("semisimple3")
    assert A.basis == [(1, ()), (2, ()), (3, ())]


def test_commutativity_relation_reduces():
    text = json.dumps({"vertices": 4, "arrows": [["a", 1, 2], ["b", 2, 4], ["c", 1, 3], ["d", 3, 4]], "relations": ["a.b - c.d"]})
    A = build_algebra(parse_algebra_spec(text))
    assert A.dim == 4 + 4 + 1
    ab = A.reduce_path((1, (0, 1)))
    cd = A.reduce_path((1, (2, 3)))
    assert ab == cd and len(ab) == 1


@pytest.mark.parametrize("name", ["a2", "kronecker", "nakayama", "markoff"])
def test_associativity_unit_grading(name):
    A = algebra(name)
    F = A.field
    for a in range(A.dim):
        for b in range(A.dim):
            ab = A.mul(a, b)
            for k in ab:
                assert A.length(k) == A.length(a) + A.length(b)
            for c in range(A.dim):
                left = A.mul_vec(ab, {c: F.one})
                right = A.mul_vec({a: F.one}, A.mul(b, c))
                assert left == right
    unit = {A.idempotent(v): F.one for v in range(1, A.n + 1)}
    for a in range(A.dim):
        assert A.mul_vec(unit, {a: F.one}) == {a: F.one}
        assert A.mul_vec({a: F.one}, unit) == {a: F.one}


@pytest.mark.parametrize("name", ["a2", "kronecker", "nakayama", "markoff"])
def test_projective_dims_sum_to_dim(name):
    A = algebra(name)
    assert sum(indecomposable_projective(A, i).total for i in range(1, A.n + 1)) == A.dim


def test_projectives_a2_and_nakayama():
    A = algebra("a2")
    assert indecomposable_projective(A, 1).dims == (1, 1)
    assert indecomposable_projective(A, 2).dims == (0, 1)
    N = algebra("nakayama")
    P1 = indecomposable_projective(N, 1)
    assert P1.dims == (1, 1, 1)
    # Loewy series 1 / 2 / 3
    assert top(P1).dims == (1, 0, 0)
    assert top(radical(P1)).dims == (0, 1, 0)
    assert radical(radical(P1)).dims == (0, 0, 1)
    with pytest.raises(ValueError):
        indecomposable_projective(N, 4)


def test_cyclic_without_bound_needs_explicit_nilpotency():
    text = json.dumps({"vertices": 1, "arrows": [["x", 1, 1]]})
    with pytest.raises(SpecError, match="rad_nilpotency"):
        parse_algebra_spec(text)
    text = json.dumps({"vertices": 1, "arrows": [["x", 1, 1]], "relations": ["x.x"]})
    assert parse_algebra_spec(text).relations.m == 2


def test_field_descriptor_in_spec():
    text = json.dumps({"vertices": 2, "arrows": [["a", 1, 2]], "field": {"kind": "fp", "p": 5}})
    assert parse_algebra_spec(text).field == PrimeField(5)
    with pytest.raises(SpecError):
        parse_algebra_spec(json.dumps({"vertices": 2, "arrows": [], "field": {"kind": "fp", "p": 4}}))


def test_invalid_json_reports_line():
    with pytest.raises(SpecError) as exc:
        parse_algebra_spec('{\n"vertices": 2,\n"arrows": [}')
    assert exc.value.line == 3


def test_bundled_specs_all_load():
    for name in BUNDLED:
        assert build_algebra(bundled_spec(name), F=PrimeField(3)).dim > 0


def test_fields():
    F = PrimeField(5)
    assert F(Fraction(1, 2)) == 3
    assert F.inv(2) == 3
    with pytest.raises(FieldError):
        PrimeField(9)
    with pytest.raises(FieldError):
        F(Fraction(1, 5))
    assert QQ.to_json(Fraction(3, 6)) == "1/2"
    assert QQ.to_json(4) == 4
