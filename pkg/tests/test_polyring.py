import json
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from multitoric.errors import FieldMismatch, LengthMismatch
from multitoric.finite_field import build_field
from multitoric.graph import build_graph, edge_index
from multitoric.polyring import (
    Binomial, MonomialOrder, Polynomial, add, compare, default_order, leading_term,
    multiply_by_term, scale, unit_vector, vanishes_on_X, vertex_weights, weighted_subgraph,
)
from multitoric.toric_set import enumerate_X, evaluate

GRAPHS = [(1, 1, 1), (1, 1, 2), (2, 2), (2, 3), (2, 2, 1), (1, 1, 1, 1)]


def exps(s, hi=4):
    return st.lists(st.integers(0, hi), min_size=s, max_size=s).map(tuple)


# -- weighted subgraphs ---------------------------------------------------------

def test_weighted_subgraph_examples():
    g = build_graph((1, 1, 1))
    w = weighted_subgraph(unit_vector(3, 1, 2), g)
    assert w.vertex_weights == (2, 2, 0)
    assert w.edge_weights == {1: 2}

    g = build_graph((1, 1, 2))
    m = [0] * g.s
    m[g.var(2, 0)] = m[g.var(3, 1)] = 1
    assert weighted_subgraph(m, g).vertex_weights == (1, 1, 1, 1)
    assert weighted_subgraph((0,) * g.s, g).vertex_weights == (0, 0, 0, 0)


def test_weighted_subgraph_length_check():
    with pytest.raises(LengthMismatch):
        weighted_subgraph((1, 0), build_graph((1, 1, 1)))


@settings(max_examples=200)
@given(st.sampled_from(GRAPHS), st.data())
def test_weighted_subgraph_properties(parts, data):
    g = build_graph(parts)
    a = data.draw(exps(g.s))
    b = data.draw(exps(g.s))
    wa, wb = vertex_weights(a, g), vertex_weights(b, g)
    wab = vertex_weights(tuple(x + y for x, y in zip(a, b)), g)
    assert wab == [x + y for x, y in zip(wa, wb)]  # additivity
    assert sum(wa) == 2 * sum(a)
    h = weighted_subgraph(a, g)
    assert set(h.edge_weights) == {i + 1 for i, x in enumerate(a) if x}
    # brute force weighted degree from the edge list
    for v in g.vertices:
        assert h.vertex_weights[v] == sum(x for i, x in enumerate(a) if v in g.edge(i + 1))


# -- vanishing criterion --------------------------------------------------------

def test_vanishing_examples():
    q = 3
    g = build_graph((1, 1, 1))
    assert vanishes_on_X(Binomial(unit_vector(3, 2, q - 1), unit_vector(3, 1, q - 1)), g, q)
    f = Binomial(unit_vector(3, edge_index(g, 0, 1)), unit_vector(3, edge_index(g, 0, 2)))
    assert not vanishes_on_X(f, g, q)
    X = enumerate_X(g, build_field(q))
    assert len(X) == 4
    assert any(evaluate(f.plus, p, X.field) != evaluate(f.minus, p, X.field) for p in X.points)

    g = build_graph((2, 2))
    e = lambda u, v: g.var(u, v)  # noqa: E731
    plus, minus = [0] * 4, [0] * 4
    plus[e(0, 2)] = plus[e(1, 3)] = 1
    minus[e(1, 2)] = minus[e(0, 3)] = 1
    assert vanishes_on_X(Binomial(plus, minus), g, 5)


def test_vanishing_length_mismatch():
    with pytest.raises(LengthMismatch):
        vanishes_on_X(Binomial((1, 0), (0, 1)), build_graph((1, 1, 1)), 3)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([((1, 1, 1), 4), ((1, 1, 2), 3), ((2, 2), 5), ((1, 1, 1), 7)]), st.data())
def test_vanishing_matches_evaluation_homogeneous(inst, data):
    parts, q = inst
    g, F = build_graph(parts), build_field(q)
    X = enumerate_X(g, F)
    d = data.draw(st.integers(1, 4))

    def mono():
        e = [0] * g.s
        for i in data.draw(st.lists(st.integers(0, g.s - 1), min_size=d, max_size=d)):
            e[i] += 1
        return e

    f = Binomial.from_monomials(mono(), mono())
    pointwise = all(evaluate(f.plus, p, F) == evaluate(f.minus, p, F) for p in X.points)
    assert vanishes_on_X(f, g, q) == pointwise


# -- orders ---------------------------------------------------------------------

def _reference_compare(kind, priority, a, b):
    """Textbook definitions over the variables listed most significant first."""
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    diffs = [a[v - 1] - b[v - 1] for v in priority]
    if kind == "grlex":
        for d in diffs:
            if d:
                return 1 if d > 0 else -1
        return 0
    for d in reversed(diffs):
        if d:
            return 1 if d < 0 else -1
    return 0


@settings(max_examples=300)
@given(st.integers(1, 5).flatmap(lambda s: st.tuples(
    st.sampled_from(["grlex", "grevlex"]), st.permutations(range(1, s + 1)), exps(s, 3), exps(s, 3))))
def test_compare_matches_reference(args):
    kind, priority, a, b = args
    order = MonomialOrder(kind, tuple(priority))
    assert compare(order, a, b) == _reference_compare(kind, priority, a, b)
    assert compare(order, a, b) == -compare(order, b, a)
    assert (compare(order, a, b) == 0) == (a == b)


def test_compare_examples():
    order = default_order(3)
    assert order.priority == (3, 2, 1)
    t1, t2, t3 = (unit_vector(3, i) for i in (1, 2, 3))
    assert compare(order, t3, t2) == 1 and compare(order, t2, t1) == 1
    assert compare(order, (1, 1, 0), (0, 0, 1)) == 1  # degree dominates
    assert compare(order, (1, 0, 1), (1, 0, 1)) == 0
    with pytest.raises(LengthMismatch):
        compare(order, (1, 0), (0, 1))


def test_grevlex_vs_grlex_differ():
    # x1 = t_3 > x2 = t_2 > x3 = t_1: t_2^2 vs t_3 t_1
    a, b = (0, 2, 0), (1, 0, 1)
    assert compare(MonomialOrder("grlex", (3, 2, 1)), b, a) == 1
    assert compare(MonomialOrder("grevlex", (3, 2, 1)), a, b) == 1


def test_order_validation_and_json():
    with pytest.raises(ValueError):
        MonomialOrder("lex", (1, 2))
    with pytest.raises(ValueError):
        MonomialOrder("grlex", (1, 1))
    o = MonomialOrder("grlex", (2, 3, 1))
    assert MonomialOrder.from_json(json.loads(json.dumps(o.to_json()))) == o


# -- polynomials ----------------------------------------------------------------

F5 = build_field(5)


def polys(s=3, F=F5):
    terms = st.dictionaries(exps(s, 3), st.integers(1, F.q - 1), max_size=5)
    return terms.map(lambda t: Polynomial(t, s, F))


def test_poly_examples():
    F = build_field(3)
    t1, t2 = Polynomial.monomial((1, 0), F), Polynomial.monomial((0, 1), F)
    p = t1 - t2
    assert (p + (-p)).is_zero
    assert p * t2 == Polynomial({(1, 1): 1, (0, 2): 2}, 2, F)
    assert multiply_by_term(p, (0, 1)) == p * t2
    assert scale(p, 2) == t2 - t1
    assert add(p, t2) == t1
    b = Binomial((2, 0), (0, 2)).to_polynomial(F)
    for kind in ("grlex", "grevlex"):
        lt, c = leading_term(b, MonomialOrder(kind, (1, 2)))
        assert lt in {(2, 0), (0, 2)} and c in (1, 2)


@settings(max_examples=100)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    zero = Polynomial.zero(3, F5)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + zero == a and (a - a).is_zero
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100)
@given(polys(), polys(), st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_evaluation_is_a_ring_map(a, b, point):
    assert (a * b).evaluate(point) == F5.mul(a.evaluate(point), b.evaluate(point))
    assert (a + b).evaluate(point) == F5.add(a.evaluate(point), b.evaluate(point))


@given(polys())
def test_leading_term_is_maximal(p):
    if p.is_zero:
        return
    order = default_order(3)
    lt, c = p.leading_term(order)
    assert p.terms[lt] == c
    assert all(compare(order, lt, e) >= 0 for e in p.terms)
    assert p.monic(order).leading_term(order) == (lt, 1)


def test_mismatch_errors():
    p3 = Polynomial.monomial((1, 0), build_field(3))
    p5 = Polynomial.monomial((1, 0), F5)
    with pytest.raises(FieldMismatch):
        p3 + p5
    with pytest.raises(LengthMismatch):
        p5 + Polynomial.monomial((1, 0, 0), F5)
    with pytest.raises(ValueError):
        Polynomial({(1,): 7}, 1, F5)


def test_no_zero_coefficients_stored():
    p = Polynomial({(1, 0): 0, (0, 1): 3}, 2, F5)
    assert p.terms == {(0, 1): 3}
    assert (p + p.scale(4)).terms == {}


# -- binomials and JSON ---------------------------------------------------------

def test_binomial_invariants():
    with pytest.raises(ValueError):
        Binomial((1, 1), (1, 0))
    b = Binomial.from_monomials((2, 1, 0), (1, 0, 3))
    assert (b.plus, b.minus) == ((1, 1, 0), (0, 0, 3))
    assert not b.is_homogeneous and Binomial((1, 1), (0, 0)).degrees == (2, 0)
    assert Binomial((1, 0), (0, 1)).is_homogeneous
    assert Binomial((0, 0), (0, 0)).is_zero


@given(st.integers(1, 6).flatmap(lambda s: st.tuples(exps(s), exps(s))))
def test_binomial_json_round_trip(pair):
    b = Binomial.from_monomials(*pair)
    text = json.dumps(b.to_json())
    assert Binomial.from_json(json.loads(text)) == b
    assert json.dumps(Binomial.from_json(json.loads(text)).to_json()) == text


@given(polys())
def test_polynomial_json_round_trip(p):
    text = json.dumps(p.to_json())
    back = Polynomial.from_json(json.loads(text), 3, F5)
    assert back == p
    assert json.dumps(back.to_json()) == text
    assert all(0 <= t["coeff"] < 5 for t in p.to_json())


def test_binomial_to_polynomial():
    F = build_field(7)
    p = Binomial((1, 0), (0, 1)).to_polynomial(F)
    assert p.terms == {(1, 0): 1, (0, 1): 6}
    for x, y in product(range(7), repeat=2):
        assert p.evaluate((x, y)) == (x - y) % 7
