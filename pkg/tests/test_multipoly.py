import pytest
from hypothesis import given
from hypothesis import strategies as st

from germkit.multipoly import MultiPoly
from germkit.scalars import Scalar, ZERO, scalar

VARS = ("t1", "t2", "t3")

fractions_st = st.fractions(min_value=-4, max_value=4, max_denominator=6)
scalars_st = st.builds(Scalar, fractions_st, fractions_st)
exps_st = st.tuples(*(st.integers(0, 3) for _ in range(3)))
polys_st = st.builds(
    lambda terms: MultiPoly(VARS, terms),
    st.dictionaries(exps_st, scalars_st, max_size=4),
)
points_st = st.tuples(*(scalars_st for _ in range(3)))


def p_var(i):
    return MultiPoly.variable(VARS, i)


def test_product_examples():
    t1, t2 = p_var(0), p_var(1)
    assert t1 * t2 == MultiPoly(VARS, {(1, 1, 0): scalar(1)})
    assert (t1 + t2) * (t1 - t2) == MultiPoly(
        VARS, {(2, 0, 0): scalar(1), (0, 2, 0): scalar(-1)}
    )
    assert t1 * ZERO == MultiPoly.zero(VARS)


def test_eval_examples():
    t1, t2 = p_var(0), p_var(1)
    assert (t1 * t2).eval([scalar(2), scalar(3), ZERO]) == scalar(6)
    sym = t1 * t1 - t2 * t2
    assert sym.eval([scalar(1), scalar(1), ZERO]) == ZERO
    p = t1 * t2 + MultiPoly.constant(VARS, scalar("5/7"))
    assert p.eval([ZERO, ZERO, ZERO]) == scalar("5/7")


def test_homogeneous_components_examples():
    t1, t2 = p_var(0), p_var(1)
    comps = (t1 + t1 * t2).homogeneous_components()
    assert [(d, str(c)) for d, c in comps] == [(1, "t1"), (2, "t1*t2")]
    assert MultiPoly.zero(VARS).homogeneous_components() == []
    cubed = t1 * t1 * t1
    assert cubed.homogeneous_components() == [(3, cubed)]


def test_variable_mismatch_rejected():
    p = MultiPoly.variable(("a", "b"), 0)
    q = MultiPoly.variable(("c",), 0)
    with pytest.raises(ValueError):
        p + q
    # constants pass through
    assert p + MultiPoly.constant(("c",), scalar(1)) == p + scalar(1)


@given(polys_st, polys_st, polys_st)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(polys_st, polys_st)
def test_degree_of_products(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).total_degree() == p.total_degree() + q.total_degree()


@given(polys_st, points_st)
def test_eval_is_a_ring_map(p, point):
    q = p * p + p
    direct = q.eval(list(point))
    via = p.eval(list(point))
    assert direct == via * via + via


@given(polys_st)
def test_homogeneous_components_sum_back(p):
    total = MultiPoly.zero(VARS)
    for degree, comp in p.homogeneous_components():
        assert comp.is_homogeneous()
        assert comp.is_zero() or comp.total_degree() == degree
        total = total + comp
    assert total == p


@given(polys_st)
def test_records_round_trip(p):
    assert MultiPoly.from_records(VARS, p.to_records()) == p


def test_string_form_is_graded_lex():
    t1, t2, t3 = (p_var(i) for i in range(3))
    poly = t3 + t1 * t1 + t1 * t2 + scalar(2) * t1
    assert str(poly) == "t1^2 + t1*t2 + 2*t1 + t3"


def test_eval_length_mismatch():
    with pytest.raises(ValueError):
        p_var(0).eval([scalar(1)])
