import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqsw.algebra import CyclotomicNumber
from eqsw.errors import LocalisationPoleError
from eqsw.reptheory import RepRingElem, char_at, k_euler_char, k_euler_class, palindrome_check


def test_character_examples():
    assert char_at(RepRingElem.trivial(5, 3), 2) == 3
    for k in range(1, 6):
        assert char_at(RepRingElem.regular(6), k) == 0
    assert char_at(RepRingElem.from_weights(3, {1: 1, 2: 1}), 1) == -1


def test_k_euler_examples():
    assert k_euler_char([0, 1], 1, 0) == 2
    for n in (3, 4, 5, 6):
        assert k_euler_char([0] + [1] * (n - 1), 1, 0) == n


def test_free_shape_weights():
    n, d, j = 5, 2, 3
    weights = [0 if i == j else d for i in range(n)]
    expected = CyclotomicNumber.rational(n, 1)
    for i in range(n):
        if i != j:
            expected = expected * (1 - CyclotomicNumber.root_power(n, j - i)) ** d
    assert k_euler_char(weights, 1, j) == expected


def test_pole_is_reported():
    with pytest.raises(LocalisationPoleError):
        k_euler_char([1, 1, 0], 1, 0)


def test_palindromes():
    assert palindrome_check(RepRingElem.from_weights(5, {1: 1, -1: 1}))
    assert not palindrome_check(RepRingElem.from_weights(3, {1: 1}))
    assert palindrome_check(RepRingElem.from_weights(5, {0: 2, 1: 3, 4: 3}))


def reps(n):
    return st.lists(st.integers(-4, 4), min_size=n, max_size=n).map(lambda c: RepRingElem(n, tuple(c)))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 9), st.data())
def test_character_is_ring_homomorphism(n, data):
    a, b = data.draw(reps(n)), data.draw(reps(n))
    k = data.draw(st.integers(0, n - 1))
    assert char_at(a * b, k) == char_at(a, k) * char_at(b, k)
    assert char_at(a + b, k) == char_at(a, k) + char_at(b, k)
    assert char_at(a, 0) == a.rank


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_palindromes_closed_under_product(n, data):
    def palindrome():
        c = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
        return RepRingElem(n, tuple(c[j] + c[(-j) % n] for j in range(n)))
    assert palindrome_check(palindrome() * palindrome())


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.data())
def test_negated_exponents_give_reciprocal(n, data):
    j = data.draw(st.integers(0, n - 1))
    k = data.draw(st.sampled_from([k for k in range(1, n) if (k * 1) % n]))
    weights = [0 if (j - i) * k % n == 0 else data.draw(st.integers(0, 3)) for i in range(n)]
    pos = k_euler_char(weights, k, j)
    neg = k_euler_char([-a for a in weights], k, j)
    assert pos * neg == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.data())
def test_formal_class_evaluates_to_character(n, data):
    weights = data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    k = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    formal = k_euler_class(weights).evaluate(k, CyclotomicNumber.root_power(n, -j * k))
    try:
        direct = k_euler_char(weights, k, j)
    except LocalisationPoleError:
        assert formal == 0
    else:
        assert formal == direct
