"""Closed-form equivariant invariants of Kähler surfaces with b_1 = 0.

Sign convention for K3 surfaces: the weight k of the canonical line is the
weight of its space of sections H^0(K_X) = C_k, and s_1(K_X) = +k v.  For
L = C_w with c_1(L) = 0 this makes H^2(L) = C_{w+k}, so the two chambers
differ by exactly the wall-crossing term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import gen_binom
from .charclass import VirtualRep, chern_class, segre_class, untwisted_euler
from .cohring import CoeffMode, CohClass
from .errors import InvalidDataError

K3_CASES = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class KahlerData:
    """Cohomology of an equivariant line bundle L as G-representations.

    V0, V1, V2 are H^i(X, L) and H2O is H^2(X, O).  Dimensions are read off
    the ranks.
    """

    V0: VirtualRep
    V1: VirtualRep
    V2: VirtualRep
    H2O: VirtualRep
    holomorphic: bool = True

    def __post_init__(self) -> None:
        reps = (self.V0, self.V1, self.V2, self.H2O)
        if len({r.order for r in reps}) != 1:
            raise InvalidDataError("all representations must be over the same group")
        for name, rep in zip(("V0", "V1", "V2", "H2O"), reps):
            if any(a < 0 for a in rep.weights):
                raise InvalidDataError(f"{name} must be a genuine representation")

    @classmethod
    def of(cls, order: int, V0=None, V1=None, V2=None, H2O=None, holomorphic: bool = True) -> KahlerData:
        return cls(*(VirtualRep.of(order, w or {}, False) for w in (V0, V1, V2, H2O)), holomorphic)

    @property
    def order(self) -> int:
        return self.V0.order

    @property
    def h0(self) -> int:
        return self.V0.rank

    @property
    def h1(self) -> int:
        return self.V1.rank

    @property
    def h2(self) -> int:
        return self.V2.rank

    @property
    def pg(self) -> int:
        return self.H2O.rank

    @property
    def d(self) -> int:
        return self.h0 - self.h1 + self.h2

    @property
    def r(self) -> int:
        return self.h1 - self.h2 + self.pg

    @property
    def D(self) -> VirtualRep:
        return self.V0 - self.V1 + self.V2


def sw_kahler(data: KahlerData, m: int, mode: CoeffMode) -> CohClass:
    """SW^omega(x^m) from the obstruction-bundle formula.

    sum_{i+j=r} sum_{l<=i} C(h1 - h2 - l, i - l) s_{i-l+m-(h0-1)}(V0) c_l(V1 - V2) c_j(H2O).
    """
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    if not data.holomorphic or data.h0 == 0:
        return CohClass.zero(mode)
    total = CohClass.zero(mode)
    diff = data.V1 - data.V2
    for i in range(data.r + 1):
        j = data.r - i
        cj = chern_class(data.H2O, j, mode)
        if cj.is_zero():
            continue
        for l in range(i + 1):
            coeff = gen_binom(data.h1 - data.h2 - l, i - l)
            if coeff == 0:
                continue
            term = segre_class(data.V0, i - l + m - (data.h0 - 1), mode) * chern_class(diff, l, mode) * cj
            total = total + term * coeff
    return total


def sw_kahler_bplus1(data: KahlerData, m: int, mode: CoeffMode) -> tuple[CohClass, CohClass]:
    """(SW^omega, SW^-omega) of x^m when b_+ = 1."""
    if data.pg != 0:
        raise InvalidDataError("b_+ = 1 forces H^2(X, O) = 0")
    if data.h0 > 0 and data.h2 > 0:
        raise InvalidDataError("h0 and h2 cannot both be positive when b_+ = 1")
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    zero = CohClass.zero(mode)
    if data.h0 > 0:
        return segre_class(data.D, m - (data.d - 1), mode), zero
    if data.h2 > 0:
        return zero, -segre_class(data.D, m - (data.d - 1), mode)
    return zero, zero


def k3_trivial_class_index(order: int, line_weight: int, canonical_weight: int) -> tuple[VirtualRep, VirtualRep]:
    """(D, H_0) for L = C_w with c_1(L) = 0: D = C_w + C_{w+k} and H_0 = C_k."""
    w, k = line_weight % order, canonical_weight % order
    D = VirtualRep.of(order, {w: 1, w + k: 1})
    H0 = VirtualRep.of(order, {k: 1} if k else {}, False)
    return D, H0


def k3_case(c1_is_11: bool, c1_zero: bool, acts_trivially_on_k: bool) -> int:
    """Which of the five K3 branches applies."""
    if c1_zero and not c1_is_11:
        raise InvalidDataError("c_1(L) = 0 is a (1,1) class")
    if not c1_is_11:
        return 1
    if c1_zero:
        return 3 if acts_trivially_on_k else 4
    return 2 if acts_trivially_on_k else 5


def sw_k3(
    c1_is_11: bool,
    c1_zero: bool,
    acts_trivially_on_k: bool,
    m: int,
    mode: CoeffMode,
    order: int,
    line_weight: int = 0,
    canonical_weight: int = 0,
    D: VirtualRep | None = None,
    h0: int | None = None,
) -> dict[str, CohClass]:
    """Per-chamber invariants of x^m for a K3 surface.

    Returns {"unique": value} when G fixes K_X, else {"plus": ..., "minus": ...}.
    """
    case = k3_case(c1_is_11, c1_zero, acts_trivially_on_k)
    k = canonical_weight % order
    if acts_trivially_on_k != (k == 0):
        raise InvalidDataError("the canonical weight must vanish exactly when G acts trivially on K_X")
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    zero = CohClass.zero(mode)
    if case == 1:
        return {"plus": zero, "minus": zero} if k else {"unique": zero}
    if case == 2:
        return {"unique": zero}
    if case in (3, 4):
        w = line_weight % order
        sections = KahlerData(
            VirtualRep.of(order, {w: 1}, False),
            VirtualRep.of(order, {}, False),
            VirtualRep.of(order, {w + k: 1}, False),
            VirtualRep.of(order, {-k: 1}, False),
        )
        plus = sw_kahler(sections, m, mode)
        if case == 3:
            return {"unique": plus}
        s1_l = CohClass.monomial(mode, -w, 0, 1)
        s1_k = CohClass.monomial(mode, k, 0, 1)
        return {"plus": plus, "minus": (s1_l - s1_k) ** m}
    if D is None or h0 is None:
        raise InvalidDataError("case (5) needs the index D and h0(L)")
    e = untwisted_euler(VirtualRep.of(order, {k: 1}, False), mode)
    value = e * segre_class(D, m - (D.rank - 1), mode)
    if h0 > 0:
        return {"plus": value, "minus": zero}
    return {"plus": zero, "minus": -value}
