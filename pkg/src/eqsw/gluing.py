"""Equivariant degree, smash-product gluing and connected sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import is_prime
from .charclass import VirtualRep, segre_class, twisted_segre, untwisted_euler
from .cohring import CoeffMode, CohClass, EquivPoly
from .errors import InvalidDataError
from .swcalc import ActionData, hplus_euler
from .verdicts import Verdict

# SW functional on x-powers; extended H*_G-linearly to polynomials in x.
Evaluator = Callable[[int], CohClass]


def apply_sw(evaluator: Evaluator, theta: EquivPoly) -> CohClass:
    total = CohClass.zero(theta.mode)
    for k, c in theta.coeffs:
        total = total + c * evaluator(k)
    return total


def table_evaluator(table: Mapping[int, CohClass], mode: CoeffMode) -> Evaluator:
    """Evaluator from finitely many values SW(x^k); missing powers read as 0."""
    zero = CohClass.zero(mode)
    return lambda k: table.get(k, zero)


@dataclass(frozen=True)
class SummandData:
    data: ActionData
    evaluator: Evaluator | None = None


def equivariant_degree(D: VirtualRep, hplus: VirtualRep, mode: CoeffMode) -> EquivPoly:
    """e(H+) s_{-d}(D) in the circle-twisted ring; zero when e(H+) vanishes."""
    e = untwisted_euler(hplus.untwisted(), mode)
    if e.is_zero():
        return EquivPoly.zero(mode)
    if D.rank > 0:
        raise InvalidDataError(f"nonzero e(H+) forces d <= 0, got d = {D.rank}")
    return twisted_segre(D, -D.rank, mode) * EquivPoly.constant(e)


def degree_side_identity(D: VirtualRep, hplus: VirtualRep, mode: CoeffMode, upto: int) -> Verdict:
    """Check e(H+) s_j(D) = 0 for -d < j <= upto, which holds for genuine monopole maps."""
    e = untwisted_euler(hplus.untwisted(), mode)
    for j in range(-D.rank + 1, upto + 1):
        if not (e * segre_class(D, j, mode)).is_zero():
            return Verdict("violated", f"e(H+) s_{j}(D) is nonzero", {"j": j})
    return Verdict("holds", f"checked up to j = {upto}", {"upto": upto})


def induce_rep(sub_order: int, order: int, W: VirtualRep) -> VirtualRep:
    """Induction from Z_m to Z_n: weight i gets the multiplicity of i mod m."""
    if sub_order < 1 or order % sub_order:
        raise InvalidDataError(f"{sub_order} does not divide {order}")
    if W.order != sub_order:
        raise InvalidDataError("representation is not over the subgroup")
    return VirtualRep(order, tuple(W.weights[i % sub_order] for i in range(order)), W.s1_twist)


def glue_smash(side1: SummandData, side2: SummandData, theta: EquivPoly) -> CohClass:
    """SW of the smash product: sum_{k+l=-d2} s_l(D2) SW_1(x^k e(H+_2) theta)."""
    if (side1.evaluator is None) == (side2.evaluator is None):
        raise InvalidDataError("exactly one side must carry an evaluator")
    if side1.evaluator is None:
        side1, side2 = side2, side1
    if side1.data.order != side2.data.order:
        raise InvalidDataError("both sides must carry the same group")
    mode = theta.mode
    if side1.data.b0 == 0:
        raise InvalidDataError("the evaluated side needs an invariant H+ direction")
    if side2.data.b0 > 0:
        return CohClass.zero(mode)
    e2 = hplus_euler(side2.data, mode)
    d2 = side2.data.d
    if e2.is_zero():
        return CohClass.zero(mode)
    if d2 > 0:
        raise InvalidDataError(f"nonzero e(H+) on the second side forces d <= 0, got d = {d2}")
    base = theta * EquivPoly.constant(e2)
    total = CohClass.zero(mode)
    for l in range(-d2 + 1):
        s = segre_class(side2.data.D, l, mode)
        if s.is_zero():
            continue
        shifted = base * EquivPoly.x(mode) ** (-d2 - l)
        total = total + s * apply_sw(side1.evaluator, shifted)
    return total


def _check_zero_dim(d_y: int, b_plus_y: int) -> None:
    if b_plus_y <= 0:
        raise InvalidDataError("the permuted summand needs b_+ > 0")
    if 2 * d_y - b_plus_y - 1 != 0:
        raise InvalidDataError(
            f"the permuted summand needs expected dimension 0, got {2 * d_y - b_plus_y - 1}"
        )


def _h_factor(p: int, b_plus_y: int) -> int:
    h = 1
    for j in range(1, (p - 1) // 2 + 1):
        h = h * pow(j, b_plus_y, p) % p
    return h


def _copies_value(p: int, d_y: int, b_plus_y: int, sw_y: int, n: int, mode: CoeffMode) -> CohClass:
    """(-1)^{d_Y+1} h SW v^{n-(p-1)/2} when n > 0 and (p-1) | n, else 0."""
    if n <= 0 or n % (p - 1):
        return CohClass.zero(mode)
    coeff = (-1) ** (d_y + 1) * _h_factor(p, b_plus_y) * sw_y
    return CohClass.v_power(mode, Fraction(2 * n - (p - 1), 2), coeff)


def p_copies(d_y: int, b_plus_y: int, sw_y: int, p: int, m: int) -> CohClass:
    """Invariant of x^m for Z_p cyclically permuting p copies of Y."""
    if not is_prime(p):
        raise InvalidDataError(f"{p} is not prime")
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    _check_zero_dim(d_y, b_plus_y)
    return _copies_value(p, d_y, b_plus_y, sw_y, m, CoeffMode.mod_p(p))


def p_copies_evaluator(d_y: int, b_plus_y: int, sw_y: int, p: int) -> Evaluator:
    _check_zero_dim(d_y, b_plus_y)
    mode = CoeffMode.mod_p(p)
    return lambda n: _copies_value(p, d_y, b_plus_y, sw_y, n, mode)


def p_copies_action(d_y: int, b_plus_y: int, p: int) -> ActionData:
    """Action data of the induced free summand: d_j = d_Y and H+ = b_+(Y) copies of R[Z_p]."""
    _check_zero_dim(d_y, b_plus_y)
    quotient = None
    if p != 2:
        quotient = VirtualRep.of(p, {j: b_plus_y for j in range(1, (p - 1) // 2 + 1)}, False)
    return ActionData(
        order=p,
        b_plus=p * b_plus_y,
        b0=b_plus_y,
        D=VirtualRep(p, (d_y,) * p),
        hplus_quotient=quotient,
    )


def connect_sum_zp(x_side: ActionData, d_y: int, b_plus_y: int, sw_y: int, m: int) -> CohClass:
    """Invariant of x^m for X # ind(Y) with H+(X)^G = 0."""
    p = x_side.order
    if not is_prime(p):
        raise InvalidDataError(f"{p} is not prime")
    if x_side.b0 != 0:
        raise InvalidDataError("the X side must have no invariant H+")
    if x_side.d > 0:
        raise InvalidDataError("the X side must have d <= 0")
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    _check_zero_dim(d_y, b_plus_y)
    mode = CoeffMode.mod_p(p)
    e = hplus_euler(x_side, mode)
    total = CohClass.zero(mode)
    for l in range(-x_side.d + 1):
        term = _copies_value(p, d_y, b_plus_y, sw_y, m + l, mode)
        if term.is_zero():
            continue
        total = total + e * segre_class(x_side.D, -x_side.d - l, mode) * term
    return total
