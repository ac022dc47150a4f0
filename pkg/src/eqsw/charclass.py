"""Equivariant characteristic classes of weight representations of Z_n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import gen_binom
from .cohring import CoeffMode, CohClass, EquivPoly
from .errors import InvalidDataError


@dataclass(frozen=True)
class VirtualRep:
    """Virtual complex representation sum_i a_i C_i of Z_n.

    ``s1_twist`` records that the circle acts with weight one, as it does on
    the spinor pieces of a monopole map.
    """

    order: int
    weights: tuple[int, ...]
    s1_twist: bool = True

    def __post_init__(self) -> None:
        if self.order < 1 or len(self.weights) != self.order:
            raise InvalidDataError(
                f"weight vector of length {len(self.weights)} does not match order {self.order}"
            )

    @classmethod
    def of(cls, order: int, weights: Mapping[int, int] | None = None, s1_twist: bool = True) -> VirtualRep:
        vec = [0] * order
        for i, a in (weights or {}).items():
            vec[i % order] += a
        return cls(order, tuple(vec), s1_twist)

    @classmethod
    def from_list(cls, weights: Sequence[int], s1_twist: bool = True) -> VirtualRep:
        return cls(len(weights), tuple(int(a) for a in weights), s1_twist)

    @property
    def rank(self) -> int:
        return sum(self.weights)

    @property
    def trivial_part(self) -> int:
        return self.weights[0]

    def _same(self, other: VirtualRep) -> None:
        if self.order != other.order:
            raise InvalidDataError("group order mismatch")

    def __add__(self, other: VirtualRep) -> VirtualRep:
        self._same(other)
        return VirtualRep(self.order, tuple(a + b for a, b in zip(self.weights, other.weights)), self.s1_twist)

    def __neg__(self) -> VirtualRep:
        return VirtualRep(self.order, tuple(-a for a in self.weights), self.s1_twist)

    def __sub__(self, other: VirtualRep) -> VirtualRep:
        return self + (-other)

    def conjugate(self) -> VirtualRep:
        """Weights negated: the complex conjugate representation."""
        n = self.order
        return VirtualRep(n, tuple(self.weights[(-i) % n] for i in range(n)), self.s1_twist)

    def untwisted(self) -> VirtualRep:
        return VirtualRep(self.order, self.weights, False)


def _check_mode(rep: VirtualRep, mode: CoeffMode) -> None:
    if rep.order != mode.modulus:
        raise InvalidDataError(
            f"representation of Z_{rep.order} evaluated in coefficients {mode}"
        )


def _total_chern_series(rep: VirtualRep, upto: int) -> list[int]:
    """Integer coefficients of prod_i (1 + i z)^{a_i} up to z^upto."""
    series = [1] + [0] * upto
    for i, a in enumerate(rep.weights):
        if a == 0 or i == 0:
            continue
        # (1 + i z)^a = sum_k C(a, k) i^k z^k, valid for negative a as well
        factor = [gen_binom(a, k) * i**k for k in range(upto + 1)]
        series = [
            sum(series[s] * factor[k - s] for s in range(k + 1)) for k in range(upto + 1)
        ]
    return series


def chern_classes(rep: VirtualRep, upto: int, mode: CoeffMode) -> list[CohClass]:
    """c_0, ..., c_upto of prod_i (1 + i v)^{a_i}."""
    _check_mode(rep, mode)
    series = _total_chern_series(rep, upto)
    return [CohClass.monomial(mode, c, 0, k) for k, c in enumerate(series)]


def segre_classes(rep: VirtualRep, upto: int, mode: CoeffMode) -> list[CohClass]:
    """s_0, ..., s_upto, the inverse of the total Chern class."""
    return chern_classes(-rep, upto, mode)


def segre_class(rep: VirtualRep, k: int, mode: CoeffMode) -> CohClass:
    """Single Segre class, zero for negative index."""
    if k < 0:
        _check_mode(rep, mode)
        return CohClass.zero(mode)
    return segre_classes(rep, k, mode)[k]


def chern_class(rep: VirtualRep, k: int, mode: CoeffMode) -> CohClass:
    if k < 0:
        _check_mode(rep, mode)
        return CohClass.zero(mode)
    return chern_classes(rep, k, mode)[k]


def euler_class(rep: VirtualRep, mode: CoeffMode) -> EquivPoly:
    """prod_i (x + i v)^{a_i}, or prod_i (i v)^{a_i} without the circle twist."""
    _check_mode(rep, mode)
    if any(a < 0 for a in rep.weights):
        raise InvalidDataError("the Euler class of a virtual representation is undefined")
    out = EquivPoly.one(mode)
    for i, a in enumerate(rep.weights):
        root = CohClass.monomial(mode, i, 0, 1)
        base = EquivPoly.x_plus(mode, root) if rep.s1_twist else EquivPoly.constant(root)
        out = out * base**a
    return out


def untwisted_euler(rep: VirtualRep, mode: CoeffMode) -> CohClass:
    """Euler class in H*_G with the circle ignored."""
    return euler_class(rep.untwisted(), mode).coefficient(0)


def twisted_segre(rep: VirtualRep, k: int, mode: CoeffMode) -> EquivPoly:
    """sum_{l=0}^{k} x^l s_{k-l}(rep); zero for negative k."""
    _check_mode(rep, mode)
    if k < 0:
        return EquivPoly.zero(mode)
    s = segre_classes(rep, k, mode)
    return EquivPoly.build(mode, {l: s[k - l] for l in range(k + 1)})


def sw_classes_z2(b_neg: int, k: int) -> CohClass:
    """w_k of b_neg copies of the sign representation of Z_2."""
    mode = CoeffMode.mod_p(2)
    if b_neg < 0 or k < 0:
        return CohClass.zero(mode)
    return CohClass.monomial(mode, gen_binom(b_neg, k), k % 2, k // 2)
