import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from eqsw.charclass import (
    VirtualRep,
    chern_class,
    chern_classes,
    euler_class,
    segre_classes,
    sw_classes_z2,
    twisted_segre,
    untwisted_euler,
)
from eqsw.cohring import CoeffMode, CohClass, EquivPoly
from eqsw.errors import InvalidDataError


def v(mode, c, k):
    return CohClass.monomial(mode, c, 0, k)


Z3 = CoeffMode.integral(3)


def test_euler_examples():
    assert euler_class(VirtualRep.of(3, {0: 2, 1: 1}), Z3).render() == "x^3 + v*x^2"
    assert untwisted_euler(VirtualRep.of(3, {1: 1, 2: 1}), Z3) == v(Z3, 2, 2)
    assert untwisted_euler(VirtualRep.of(3, {0: 1, 2: 1}), Z3).is_zero()
    with pytest.raises(InvalidDataError):
        euler_class(VirtualRep.of(3, {1: -1}), Z3)


def test_segre_examples():
    assert [s.render() for s in segre_classes(VirtualRep.of(3, {1: 1}), 3, Z3)] == ["1", "2*v", "v^2", "2*v^3"]
    assert [s.render() for s in segre_classes(VirtualRep.of(3, {1: -1}), 3, Z3)] == ["1", "v", "0", "0"]
    assert all(s.is_zero() for s in segre_classes(VirtualRep.of(3, {0: 4}), 4, Z3)[1:])


def test_chern_examples():
    assert chern_class(VirtualRep.of(5, {2: 1}), 1, CoeffMode.integral(5)) == v(CoeffMode.integral(5), 2, 1)
    w = VirtualRep.of(4, {1: 2, 3: 1})
    assert all(c.is_zero() for c in chern_classes(w - w, 4, CoeffMode.integral(4))[1:])
    # (1 + v) / (1 + 2v) mod 3
    c = chern_classes(VirtualRep.of(3, {1: 1, 2: -1}), 3, Z3)
    assert c[1] == v(Z3, 2, 1)
    assert c[2] == v(Z3, 2, 2)


def test_twisted_segre_examples():
    assert twisted_segre(VirtualRep.of(3, {1: 2}), 0, Z3) == EquivPoly.one(Z3)
    assert twisted_segre(VirtualRep.of(3, {1: -1}), 1, Z3).render() == "x + v"
    assert twisted_segre(VirtualRep.of(3, {0: -2}), 1, Z3) == EquivPoly.x(Z3)


def test_stiefel_whitney_examples():
    p2 = CoeffMode.mod_p(2)
    assert sw_classes_z2(5, 0) == CohClass.one(p2)
    assert sw_classes_z2(2, 1).is_zero()
    u = CohClass.monomial(p2, 1, 1, 0)
    assert sw_classes_z2(3, 2) == u * u


def weights(n):
    return st.lists(st.integers(-3, 3), min_size=n, max_size=n).map(lambda w: VirtualRep(n, tuple(w)))


def _product(a, b, k):
    total = a[0] * 0
    for i in range(k + 1):
        total = total + a[i] * b[k - i]
    return total


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.data())
def test_chern_times_segre_is_one(n, data):
    mode = CoeffMode.integral(n)
    w = data.draw(weights(n))
    c, s = chern_classes(w, 6, mode), segre_classes(w, 6, mode)
    assert _product(c, s, 0) == CohClass.one(mode)
    for k in range(1, 7):
        assert _product(c, s, k).is_zero()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.data())
def test_whitney_sum(n, data):
    mode = CoeffMode.integral(n)
    a, b = data.draw(weights(n)), data.draw(weights(n))
    sa, sb, sab = segre_classes(a, 5, mode), segre_classes(b, 5, mode), segre_classes(a + b, 5, mode)
    ca, cb, cab = chern_classes(a, 5, mode), chern_classes(b, 5, mode), chern_classes(a + b, 5, mode)
    for k in range(6):
        assert sab[k] == _product(sa, sb, k)
        assert cab[k] == _product(ca, cb, k)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.data())
def test_euler_monic_and_untwisted_product(n, data):
    mode = CoeffMode.integral(n)
    w = VirtualRep(n, tuple(data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))))
    e = euler_class(w, mode)
    assert e.x_degree == w.rank
    assert e.coefficient(w.rank) == CohClass.one(mode)
    expected = CohClass.one(mode)
    for i, a in enumerate(w.weights):
        expected = expected * v(mode, i, 1) ** a
    assert untwisted_euler(w, mode) == expected


X, V, T = sympy.symbols("x v t")


def _sympy_twisted_segre(w: VirtualRep, k: int) -> sympy.Poly:
    """Degree-k part of prod_i (1 + (x + i v) t)^{-a_i}, expanded by sympy."""
    expr = sympy.Integer(1)
    for i, a in enumerate(w.weights):
        expr *= (1 + (X + i * V) * T) ** (-a)
    series = sympy.series(expr, T, 0, k + 1).removeO()
    return sympy.Poly(sympy.expand(series).coeff(T, k), X, V)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.data())
def test_twisted_segre_at_minus_rank_matches_sympy(n, data):
    mode = CoeffMode.integral(n)
    w = VirtualRep(n, tuple(data.draw(st.lists(st.integers(-2, 1), min_size=n, max_size=n))))
    k = -w.rank
    if k < 0 or k > 4:
        return
    ours = twisted_segre(w, k, mode)
    oracle = _sympy_twisted_segre(w, k)
    expected = {}
    for (ex, ev), c in oracle.terms():
        expected.setdefault(ex, CohClass.zero(mode))
        expected[ex] = expected[ex] + v(mode, int(c), ev)
    assert ours == EquivPoly.build(mode, expected)
