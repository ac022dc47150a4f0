"""Representation rings of Z_n and of S^1 x Z_n, evaluated through characters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import CyclotomicNumber
from .errors import InvalidDataError, LocalisationPoleError


@dataclass(frozen=True)
class RepRingElem:
    """sum_j a_j t^j in Z[t]/(t^n - 1), where t is the weight-one character."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1 or len(self.coeffs) != self.order:
            raise InvalidDataError("coefficient vector length must equal the group order")

    @classmethod
    def from_weights(cls, order: int, weights: Mapping[int, int]) -> RepRingElem:
        coeffs = [0] * order
        for i, a in weights.items():
            coeffs[i % order] += a
        return cls(order, tuple(coeffs))

    @classmethod
    def trivial(cls, order: int, rank: int = 1) -> RepRingElem:
        return cls.from_weights(order, {0: rank})

    @classmethod
    def regular(cls, order: int, copies: int = 1) -> RepRingElem:
        return cls(order, (copies,) * order)

    @property
    def rank(self) -> int:
        return sum(self.coeffs)

    def _same(self, other: RepRingElem) -> None:
        if self.order != other.order:
            raise InvalidDataError("group order mismatch")

    def __add__(self, other: RepRingElem) -> RepRingElem:
        self._same(other)
        return RepRingElem(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RepRingElem:
        return RepRingElem(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: RepRingElem) -> RepRingElem:
        return self + (-other)

    def __mul__(self, other: RepRingElem | int) -> RepRingElem:
        if isinstance(other, int):
            return RepRingElem(self.order, tuple(a * other for a in self.coeffs))
        self._same(other)
        n = self.order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[(i + j) % n] += a * b
        return RepRingElem(n, tuple(out))

    __rmul__ = __mul__

    def dual(self) -> RepRingElem:
        n = self.order
        return RepRingElem(n, tuple(self.coeffs[(-j) % n] for j in range(n)))

    def char_at(self, k: int) -> CyclotomicNumber:
        return char_at(self, k)

    def render(self) -> str:
        parts = []
        for j, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if j == 0:
                parts.append(str(a))
            else:
                mono = "t" if j == 1 else f"t^{j}"
                parts.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(parts) if parts else "0"

    __str__ = render


def char_at(rep: RepRingElem, k: int) -> CyclotomicNumber:
    """Character of ``rep`` at g^k, i.e. sum_j a_j w^{jk}."""
    n = rep.order
    folded = [0] * n
    for j, a in enumerate(rep.coeffs):
        folded[(j * k) % n] += a
    return CyclotomicNumber.from_group_ring(n, folded)


def palindrome_check(rep: RepRingElem) -> bool:
    """True iff a_j = a_{-j}, i.e. ``rep`` is restricted from the dihedral group."""
    n = rep.order
    return all(rep.coeffs[j] == rep.coeffs[(-j) % n] for j in range(n))


@dataclass(frozen=True)
class KLaurent:
    """Element of R(Z_n)[xi, 1/xi] as a finitely supported map xi-power -> R(Z_n)."""

    order: int
    terms: tuple[tuple[int, RepRingElem], ...]

    @classmethod
    def build(cls, order: int, terms: Mapping[int, RepRingElem]) -> KLaurent:
        clean = tuple(sorted((k, r) for k, r in terms.items() if any(r.coeffs)))
        return cls(order, clean)

    @classmethod
    def one(cls, order: int) -> KLaurent:
        return cls.build(order, {0: RepRingElem.trivial(order)})

    def __mul__(self, other: KLaurent) -> KLaurent:
        acc: dict[int, RepRingElem] = {}
        for ka, ra in self.terms:
            for kb, rb in other.terms:
                prod = ra * rb
                acc[ka + kb] = acc[ka + kb] + prod if ka + kb in acc else prod
        return KLaurent.build(self.order, acc)

    def evaluate(self, k: int, xi: CyclotomicNumber) -> CyclotomicNumber:
        """Character at g^k with xi set to the given root of unity."""
        out = CyclotomicNumber.rational(self.order, 0)
        for e, rep in self.terms:
            out = out + char_at(rep, k) * xi**e
        return out


def k_euler_class(weights: Sequence[int]) -> KLaurent:
    """prod_i (1 - t^{-i} xi^{-1})^{a_i} for a genuine S^1-twisted representation."""
    n = len(weights)
    out = KLaurent.one(n)
    for i, a in enumerate(weights):
        if a < 0:
            raise InvalidDataError("the K-theory Euler class needs non-negative multiplicities")
        factor = KLaurent.build(
            n,
            {0: RepRingElem.trivial(n), -1: -RepRingElem.from_weights(n, {-i: 1})},
        )
        for _ in range(a):
            out = out * factor
    return out


def k_euler_char(weights: Sequence[int], g_power: int, xi_power: int) -> CyclotomicNumber:
    """prod_i (1 - w^{(j - i) g})^{a_i} with j = ``xi_power``.

    This is the character of prod_i (1 - t^{-i} xi^{-1})^{a_i} at the element
    g^{g_power} with xi evaluated at w^{-j g}.  Negative a_i divide exactly.
    """
    n = len(weights)
    if n < 1:
        raise InvalidDataError("weights must be indexed by Z_n with n >= 1")
    out = CyclotomicNumber.rational(n, 1)
    one = CyclotomicNumber.rational(n, 1)
    for i, a in enumerate(weights):
        if a == 0:
            continue
        exponent = ((xi_power - i) * g_power) % n
        if exponent == 0:
            raise LocalisationPoleError(
                f"factor for weight {i} vanishes at xi_power {xi_power}, g_power {g_power}"
            )
        out = out * (one - CyclotomicNumber.root_power(n, exponent)) ** a
    return out
