"""Cohomology of cyclic groups at a point, with the equivariant variable x.

Three coefficient models are supported:

* ``CoeffMode.integral(n)``: Z[v]/(nv).  Degree zero carries an integer,
  every other degree a residue mod n.
* ``CoeffMode.mod_p(p)``, p odd: Z_p[u, v]/(u^2) with deg u = 1, deg v = 2.
* ``CoeffMode.mod_p(2)``: Z_2[u] with v = u^2.

A term is keyed by ``(e, k)`` meaning ``u^e v^k`` with ``e`` in {0, 1}.
Negative ``k`` is allowed so that Laurent intermediates of localisation
can be carried; :attr:`CohClass.is_laurent` flags them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import gen_binom, is_prime, require_prime
from .errors import InsufficientTruncationError, InvalidDataError

Key = tuple[int, int]


@dataclass(frozen=True)
class CoeffMode:
    kind: str  # "int" or "p"
    modulus: int

    def __post_init__(self) -> None:
        if self.kind not in ("int", "p"):
            raise InvalidDataError(f"unknown coefficient kind {self.kind!r}")
        if self.modulus < 1:
            raise InvalidDataError("modulus must be positive")
        if self.kind == "p" and not is_prime(self.modulus):
            raise InvalidDataError(f"mod-p coefficients need a prime, got {self.modulus}")

    @classmethod
    def integral(cls, n: int) -> CoeffMode:
        return cls("int", n)

    @classmethod
    def mod_p(cls, p: int) -> CoeffMode:
        return cls("p", p)

    @property
    def has_u(self) -> bool:
        return self.kind == "p"

    def reduce(self, key: Key, c: int) -> int:
        if self.kind == "int" and key == (0, 0):
            return c
        return c % self.modulus

    def __str__(self) -> str:
        return f"Z[v]/({self.modulus}v)" if self.kind == "int" else f"Z_{self.modulus}"


def _mul_keys(mode: CoeffMode, a: Key, b: Key) -> Key | None:
    e = a[0] + b[0]
    k = a[1] + b[1]
    if e < 2:
        return (e, k)
    if mode.modulus == 2:
        return (0, k + 1)
    return None


@dataclass(frozen=True)
class CohClass:
    mode: CoeffMode
    terms: tuple[tuple[Key, int], ...]

    # construction ---------------------------------------------------------

    @classmethod
    def build(cls, mode: CoeffMode, terms: Mapping[Key, int] | Iterable[tuple[Key, int]]) -> CohClass:
        acc: dict[Key, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            e, k = key
            if e not in (0, 1):
                raise InvalidDataError(f"u-exponent must be 0 or 1, got {e}")
            if e and not mode.has_u:
                raise InvalidDataError("integral mode has no class u")
            acc[(e, k)] = acc.get((e, k), 0) + int(c)
        clean = []
        for key, c in acc.items():
            c = mode.reduce(key, c)
            if c:
                clean.append((key, c))
        clean.sort(key=lambda kc: (2 * kc[0][1] + kc[0][0], kc[0]))
        return cls(mode, tuple(clean))

    @classmethod
    def zero(cls, mode: CoeffMode) -> CohClass:
        return cls(mode, ())

    @classmethod
    def const(cls, mode: CoeffMode, c: int) -> CohClass:
        return cls.build(mode, {(0, 0): c})

    @classmethod
    def one(cls, mode: CoeffMode) -> CohClass:
        return cls.const(mode, 1)

    @classmethod
    def monomial(cls, mode: CoeffMode, c: int, u_exp: int, v_exp: int) -> CohClass:
        return cls.build(mode, {(u_exp, v_exp): c})

    @classmethod
    def v_power(cls, mode: CoeffMode, k: int | Fraction, c: int = 1) -> CohClass:
        """c * v^k; half-integral k is only meaningful when v = u^2."""
        k = Fraction(k)
        if k.denominator == 1:
            return cls.monomial(mode, c, 0, int(k))
        if k.denominator == 2 and mode.kind == "p" and mode.modulus == 2:
            return cls.monomial(mode, c, 1, int(k - Fraction(1, 2)))
        raise InvalidDataError(f"v^{k} is not representable in {mode}")

    # queries ----------------------------------------------------------------

    def as_dict(self) -> dict[Key, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_laurent(self) -> bool:
        return any(k < 0 for (_, k), _ in self.terms)

    def degrees(self) -> set[int]:
        return {2 * k + e for (e, k), _ in self.terms}

    def coefficient(self, u_exp: int, v_exp: int) -> int:
        return self.as_dict().get((u_exp, v_exp), 0)

    def degree_zero_part(self) -> CohClass:
        return CohClass.build(self.mode, {k: c for k, c in self.terms if k == (0, 0)})

    # arithmetic -------------------------------------------------------------

    def _same(self, other: CohClass) -> None:
        if self.mode != other.mode:
            raise InvalidDataError(f"mode mismatch: {self.mode} vs {other.mode}")

    def __add__(self, other: CohClass | int) -> CohClass:
        if isinstance(other, int):
            other = CohClass.const(self.mode, other)
        self._same(other)
        return CohClass.build(self.mode, list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> CohClass:
        return CohClass.build(self.mode, [(k, -c) for k, c in self.terms])

    def __sub__(self, other: CohClass | int) -> CohClass:
        return self + (-other if isinstance(other, CohClass) else -other)

    def __rsub__(self, other: int) -> CohClass:
        return (-self) + other

    def __mul__(self, other: CohClass | int) -> CohClass:
        if isinstance(other, int):
            return CohClass.build(self.mode, [(k, c * other) for k, c in self.terms])
        if isinstance(other, EquivPoly):
            return other * self
        self._same(other)
        out: list[tuple[Key, int]] = []
        for ka, ca in self.terms:
            for kb, cb in other.terms:
                key = _mul_keys(self.mode, ka, kb)
                if key is not None:
                    out.append((key, ca * cb))
        return CohClass.build(self.mode, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CohClass:
        if e < 0:
            raise InvalidDataError("negative powers are not defined in cohomology")
        out = CohClass.one(self.mode)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CohClass.const(self.mode, other)
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.mode, self.terms))

    # rendering --------------------------------------------------------------

    def render(self) -> str:
        """Canonical text: ascending degree, ``c*u*v^k``, ``0`` for zero."""
        if not self.terms:
            return "0"
        return " + ".join(_render_term(key, c) for key, c in self.terms)

    __str__ = render

    def __repr__(self) -> str:
        return f"CohClass({self.mode}, {self.render()!r})"


def _render_term(key: Key, c: int) -> str:
    e, k = key
    parts = []
    if e:
        parts.append("u")
    if k == 1:
        parts.append("v")
    elif k:
        parts.append(f"v^{k}")
    if not parts:
        return str(c)
    if c != 1:
        parts.insert(0, str(c))
    return "*".join(parts)


@dataclass(frozen=True)
class EquivPoly:
    """Polynomial in x (degree 2) with coefficients in a :class:`CohClass` ring."""

    mode: CoeffMode
    coeffs: tuple[tuple[int, CohClass], ...]

    @classmethod
    def build(cls, mode: CoeffMode, coeffs: Mapping[int, CohClass] | Iterable[tuple[int, CohClass]]) -> EquivPoly:
        acc: dict[int, CohClass] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for k, c in items:
            if k < 0:
                raise InvalidDataError("x-exponents must be non-negative")
            if c.mode != mode:
                raise InvalidDataError("coefficient mode mismatch")
            acc[k] = acc[k] + c if k in acc else c
        return cls(mode, tuple(sorted((k, c) for k, c in acc.items() if not c.is_zero())))

    @classmethod
    def zero(cls, mode: CoeffMode) -> EquivPoly:
        return cls(mode, ())

    @classmethod
    def constant(cls, c: CohClass) -> EquivPoly:
        return cls.build(c.mode, {0: c})

    @classmethod
    def one(cls, mode: CoeffMode) -> EquivPoly:
        return cls.constant(CohClass.one(mode))

    @classmethod
    def x(cls, mode: CoeffMode) -> EquivPoly:
        return cls.build(mode, {1: CohClass.one(mode)})

    @classmethod
    def x_plus(cls, mode: CoeffMode, c: CohClass) -> EquivPoly:
        """The linear form x + c."""
        return cls.build(mode, {1: CohClass.one(mode), 0: c})

    def as_dict(self) -> dict[int, CohClass]:
        return dict(self.coeffs)

    def coefficient(self, k: int) -> CohClass:
        return self.as_dict().get(k, CohClass.zero(self.mode))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def x_degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else -1

    def _lift(self, other) -> EquivPoly:
        if isinstance(other, EquivPoly):
            if other.mode != self.mode:
                raise InvalidDataError("mode mismatch")
            return other
        if isinstance(other, CohClass):
            return EquivPoly.constant(other)
        if isinstance(other, int):
            return EquivPoly.constant(CohClass.const(self.mode, other))
        return NotImplemented

    def __add__(self, other) -> EquivPoly:
        other = self._lift(other)
        return EquivPoly.build(self.mode, list(self.coeffs) + list(other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> EquivPoly:
        return EquivPoly.build(self.mode, [(k, -c) for k, c in self.coeffs])

    def __sub__(self, other) -> EquivPoly:
        return self + (-self._lift(other))

    def __mul__(self, other) -> EquivPoly:
        other = self._lift(other)
        out = []
        for ka, ca in self.coeffs:
            for kb, cb in other.coeffs:
                out.append((ka + kb, ca * cb))
        return EquivPoly.build(self.mode, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> EquivPoly:
        if e < 0:
            raise InvalidDataError("negative powers of polynomials are not defined")
        out = EquivPoly.one(self.mode)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (CohClass, int)):
            other = self._lift(other)
        if not isinstance(other, EquivPoly):
            return NotImplemented
        return self.mode == other.mode and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.mode, self.coeffs))

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in reversed(self.coeffs):
            if k == 0:
                parts.append(c.render())
                continue
            xs = "x" if k == 1 else f"x^{k}"
            if c == CohClass.one(self.mode):
                parts.append(xs)
            elif len(c.terms) == 1:
                parts.append(f"{c.render()}*{xs}")
            else:
                parts.append(f"({c.render()})*{xs}")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"EquivPoly({self.mode}, {self.render()!r})"


def coh_arith(lhs, rhs, op: str):
    """Ring operation by name on classes or x-polynomials."""
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "pow":
        if not isinstance(rhs, int) or rhs < 0:
            raise InvalidDataError("pow needs a non-negative integer exponent")
        return lhs**rhs
    raise InvalidDataError(f"unknown operation {op!r}")


# --------------------------------------------------------------- c_j kernel

# Coefficient of (x+jv)^n in prod_i (x+iv)^{n_i}.  Each factor with i != j
# expands at x = -jv as sum_k C(n_i, k) ((i-j)v)^{n_i-k} (x+jv)^k, so the
# coefficient is the sum over compositions of n - n_j of the product of
# those binomial terms.  The composition sum is evaluated as an iterated
# convolution and cached per (factors, j, p), so sweeping n is cheap.

_CJ_CACHE: dict[tuple, list[int]] = {}


def _composition_sums(factors: tuple[tuple[int, int], ...], p: int, upto: int) -> list[int]:
    key = (factors, p)
    cached = _CJ_CACHE.get(key)
    if cached is not None and len(cached) > upto:
        return cached
    width = max(upto + 1, 2 * len(cached) if cached else 8)
    acc = [1] + [0] * (width - 1)
    for offset, n_i in factors:
        seq = [gen_binom(n_i, k) * pow(offset, n_i - k, p) % p for k in range(width)]
        nxt = [0] * width
        for a, ca in enumerate(acc):
            if ca:
                for b in range(width - a):
                    if seq[b]:
                        nxt[a + b] += ca * seq[b]
        acc = [c % p for c in nxt]
    _CJ_CACHE[key] = acc
    return acc


def laurent_cj(n: int | Fraction, nvec: Sequence[int], j: int, p: int) -> CohClass:
    """Coefficient c_j(n; n_0, ..., n_{p-1}) as a Laurent monomial in v mod p."""
    _check_prime_cached(p)
    mode = CoeffMode.mod_p(p)
    if len(nvec) != p:
        raise InvalidDataError(f"exponent vector must have length {p}")
    n = Fraction(n)
    if n.denominator != 1:
        return CohClass.zero(mode)
    n = int(n)
    j %= p
    target = n - nvec[j]
    if target < 0:
        return CohClass.zero(mode)
    factors = tuple(((i - j) % p, int(nvec[i])) for i in range(p) if i != j)
    coeff = _composition_sums(factors, p, target)[target]
    return CohClass.monomial(mode, coeff, 0, sum(nvec) - n)


@lru_cache(maxsize=None)
def _check_prime_cached(p: int) -> None:
    require_prime(p)


# ------------------------------------------------------ series-based oracle

# Elements of Z_p[v, 1/v] are tuples of (exponent, coefficient) pairs; a
# series in y = x + jv is a tuple of those, truncated at a fixed length.

LPoly = tuple[tuple[int, int], ...]


def _lp(d: dict[int, int], p: int) -> LPoly:
    return tuple(sorted((e, c % p) for e, c in d.items() if c % p))


def _lp_mul(a: LPoly, b: LPoly, p: int) -> LPoly:
    out: dict[int, int] = {}
    for ea, ca in a:
        for eb, cb in b:
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return _lp(out, p)


def _lp_add(a: LPoly, b: LPoly, p: int) -> LPoly:
    out = dict(a)
    for e, c in b:
        out[e] = out.get(e, 0) + c
    return _lp(out, p)


def _lp_inverse(a: LPoly, p: int) -> LPoly:
    if len(a) != 1:
        raise ArithmeticError("only monomials are units of the Laurent ring")
    (e, c), = a
    return ((-e, pow(c, -1, p)),)


def _series_mul(a: tuple[LPoly, ...], b: tuple[LPoly, ...], p: int) -> tuple[LPoly, ...]:
    width = len(a)
    out: list[LPoly] = [()] * width
    for i, ai in enumerate(a):
        if not ai:
            continue
        for k in range(width - i):
            if b[k]:
                out[i + k] = _lp_add(out[i + k], _lp_mul(ai, b[k], p), p)
    return tuple(out)


def _series_inverse(a: tuple[LPoly, ...], p: int) -> tuple[LPoly, ...]:
    width = len(a)
    inv0 = _lp_inverse(a[0], p)
    out: list[LPoly] = [inv0]
    for k in range(1, width):
        acc: LPoly = ()
        for i in range(1, k + 1):
            if a[i] and out[k - i]:
                acc = _lp_add(acc, _lp_mul(a[i], out[k - i], p), p)
        out.append(_lp_mul(_lp_mul(acc, inv0, p), ((0, p - 1),), p))
    return tuple(out)


@lru_cache(maxsize=None)
def _factor_series(offset: int, power: int, p: int, width: int) -> tuple[LPoly, ...]:
    """(y + offset*v)^power truncated to ``width`` terms."""
    linear: tuple[LPoly, ...] = (((1, offset),), ((0, 1),)) + ((),) * (width - 2)
    base = linear if power >= 0 else _series_inverse(linear, p)
    out: tuple[LPoly, ...] = (((0, 1),),) + ((),) * (width - 1)
    for _ in range(abs(power)):
        out = _series_mul(out, base, p)
    return out


@lru_cache(maxsize=None)
def _product_series(factors: tuple[tuple[int, int], ...], p: int, width: int) -> tuple[LPoly, ...]:
    if not factors:
        return (((0, 1),),) + ((),) * (width - 1)
    head = _product_series(factors[:-1], p, width)
    return _series_mul(head, _factor_series(*factors[-1], p, width), p)


def series_cj_oracle(
    n: int | Fraction, nvec: Sequence[int], j: int, p: int, truncation: int
) -> CohClass:
    """Same coefficient as :func:`laurent_cj` by truncated series arithmetic.

    Each factor (x+iv)^{n_i}, i != j, is expanded as a power series in
    y = x + jv over Z_p(v) by repeated multiplication (and series inversion
    for negative powers); the (x+jv)^{n_j} factor only shifts the order.
    """
    require_prime(p)
    if truncation < 2:
        raise InvalidDataError("truncation must be at least 2")
    mode = CoeffMode.mod_p(p)
    n = Fraction(n)
    if n.denominator != 1:
        return CohClass.zero(mode)
    j %= p
    index = int(n) - nvec[j]
    if index < 0:
        return CohClass.zero(mode)
    if index >= truncation:
        raise InsufficientTruncationError(
            f"coefficient y^{index} needs truncation > {index}, got {truncation}"
        )
    factors = tuple(((i - j) % p, int(nvec[i])) for i in range(p) if i != j)
    series = _product_series(factors, p, truncation)
    return CohClass.build(mode, {(0, e): c for e, c in series[index]})
