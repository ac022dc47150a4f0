"""Exact base arithmetic.

Generalised binomial coefficients, power-sum residues, elementary number
theory and the cyclotomic field Q(w_n) stored as vectors modulo the n-th
cyclotomic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence

Poly = tuple  # coefficient tuple, lowest degree first


def _as_fraction(value: int | Fraction) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@lru_cache(maxsize=65536)
def _gen_binom_int(a: int, b: int) -> int:
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


def gen_binom(a: int, b: int | Fraction) -> int:
    """Falling-factorial binomial a(a-1)...(a-b+1)/b!.

    Zero when ``b`` is negative or non-integral, so that half-integer
    bookkeeping can be passed straight through.
    """
    b = _as_fraction(b)
    if b.denominator != 1 or b < 0:
        return 0
    return _gen_binom_int(int(a), int(b))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorisation of a positive integer."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient_mobius(n: int) -> tuple[int, int]:
    """Euler totient and number-theoretic Moebius value of ``n``."""
    fac = factorize(n)
    phi = n
    for q in fac:
        phi = phi // q * (q - 1)
    mu = 0 if any(e > 1 for e in fac.values()) else (-1) ** len(fac)
    return phi, mu


def sum_powers_mod_p(m: int, p: int) -> int:
    """Residue of 0^m + 1^m + ... + (p-1)^m modulo p (with 0^0 = 1)."""
    require_prime(p)
    if m < 0:
        raise ValueError("exponent must be non-negative")
    if m > 0 and m % (p - 1) == 0:
        return p - 1
    return 0


# ---------------------------------------------------------------- polynomials


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Quotient and remainder of polynomials over Q (b nonzero)."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    _trim(rem)
    lead = Fraction(b[-1])
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = rem[-1] / lead
        quot[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        _trim(rem)
    return _trim(quot), rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Poly:
    """Integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    num: list = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num, rem = poly_divmod(num, cyclotomic_poly(d))
        assert not rem
    return tuple(int(c) for c in num)


def _poly_ext_gcd(a: list, b: list) -> tuple[list, list]:
    """Return (g, s) with s*a = g (mod b), g the monic gcd."""
    r0, r1 = [Fraction(x) for x in a], [Fraction(x) for x in b]
    s0: list = [Fraction(1)]
    s1: list = []
    _trim(r0)
    _trim(r1)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs = poly_mul(q, s1)
        width = max(len(s0), len(qs))
        s_next = [
            (s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)
            for i in range(width)
        ]
        s0, s1 = s1, _trim(s_next)
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


# ---------------------------------------------------------- cyclotomic field


@dataclass(frozen=True)
class CyclotomicNumber:
    """Exact element of Q(w_n), coefficients of 1, t, ..., t^(phi(n)-1)."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        width = len(cyclotomic_poly(self.order)) - 1
        if len(self.coeffs) != width:
            raise ValueError("coefficient vector is not reduced")

    @classmethod
    def from_poly(cls, order: int, poly: Iterable) -> CyclotomicNumber:
        """Reduce a polynomial in t modulo the cyclotomic polynomial."""
        phi = cyclotomic_poly(order)
        _, rem = poly_divmod(list(poly), phi)
        width = len(phi) - 1
        rem = rem + [Fraction(0)] * (width - len(rem))
        return cls(order, tuple(Fraction(c) for c in rem))

    @classmethod
    def from_group_ring(cls, order: int, coeffs: Sequence[int]) -> CyclotomicNumber:
        """Image of sum a_k t^k from Z[t]/(t^n - 1)."""
        folded = [0] * order
        for k, a in enumerate(coeffs):
            folded[k % order] += a
        return cls.from_poly(order, folded)

    @classmethod
    def rational(cls, order: int, value: int | Fraction) -> CyclotomicNumber:
        return cls.from_poly(order, [value])

    @classmethod
    def root_power(cls, order: int, k: int) -> CyclotomicNumber:
        """w_n^k."""
        poly = [0] * (k % order) + [1]
        return cls.from_poly(order, poly)

    def _check(self, other: CyclotomicNumber) -> None:
        if self.order != other.order:
            raise ValueError(
                f"mismatched cyclotomic orders {self.order} and {other.order}"
            )

    def _coerce(self, other) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            self._check(other)
            return other
        if isinstance(other, Rational):
            return CyclotomicNumber.rational(self.order, Fraction(other))
        return NotImplemented

    def __add__(self, other) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> CyclotomicNumber:
        return (-self) + other

    def __mul__(self, other) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber.from_poly(
            self.order, poly_mul(self.coeffs, other.coeffs)
        )

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        g, s = _poly_ext_gcd(list(self.coeffs), list(cyclotomic_poly(self.order)))
        assert g == [1], "cyclotomic polynomial is irreducible"
        return CyclotomicNumber.from_poly(self.order, s)

    def __truediv__(self, other) -> CyclotomicNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> CyclotomicNumber:
        return self.inverse() * other

    def __pow__(self, e: int) -> CyclotomicNumber:
        base = self if e >= 0 else self.inverse()
        out = CyclotomicNumber.rational(self.order, 1)
        for _ in range(abs(e)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "w" if k == 1 else f"w^{k}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


def cyc_ops(lhs: CyclotomicNumber, rhs: CyclotomicNumber, op: str) -> CyclotomicNumber:
    """Field arithmetic dispatch by name (``add``, ``mul`` or ``div``)."""
    lhs._check(rhs)
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown cyclotomic operation {op!r}")
