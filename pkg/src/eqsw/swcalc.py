"""Equivariant Seiberg-Witten calculus on topological input data.

Covers the structural identities (trivial group, wall-crossing, charge
conjugation, mod 2 spin formula, positive scalar curvature), the
transversality test for Z_p, and the two localisation engines: cohomology
mod p for Z_p and K-theory characters for Z_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .algebra import CyclotomicNumber, is_prime
from .charclass import VirtualRep, segre_class, sw_classes_z2, untwisted_euler
from .cohring import CoeffMode, CohClass, laurent_cj
from .errors import DataInconsistencyError, InvalidDataError
from .reptheory import k_euler_char
from .verdicts import Verdict

CHAMBERS = ("plus", "minus", "unique")


@dataclass(frozen=True)
class ActionData:
    """Topological input of a Z_n action with an invariant spin^c structure.

    ``D`` carries the weights d_j of the index of the Dirac operator.
    ``hplus_quotient`` gives H+/(H+)^G as complex weights; it may be left
    out for n = 2, where the Euler factor is taken mod 2.
    """

    order: int
    b_plus: int
    b0: int
    D: VirtualRep
    hplus_quotient: VirtualRep | None = None
    chamber: str | None = None
    orientation_preserved: bool = True

    def __post_init__(self) -> None:
        if self.D.order != self.order:
            raise InvalidDataError("index weights do not match the group order")
        if not 0 <= self.b0 <= self.b_plus:
            raise InvalidDataError(f"need 0 <= b0 <= b_plus, got b0={self.b0}, b_plus={self.b_plus}")
        if self.order == 1 and self.b0 != self.b_plus:
            raise InvalidDataError("for the trivial group b0 must equal b_plus")
        chamber = self.chamber
        if chamber is None:
            object.__setattr__(self, "chamber", "plus" if self.b0 == 1 else "unique")
        elif chamber not in CHAMBERS:
            raise InvalidDataError(f"unknown chamber {chamber!r}")
        elif (chamber == "unique") == (self.b0 == 1):
            raise InvalidDataError("a chamber sign is needed exactly when b0 = 1")
        q = self.hplus_quotient
        if q is not None:
            if q.order != self.order:
                raise InvalidDataError("H+ weights do not match the group order")
            if q.weights[0] != 0:
                raise InvalidDataError("H+/(H+)^G cannot contain the trivial weight")
            if any(a < 0 for a in q.weights):
                raise InvalidDataError("H+ weights must be non-negative")
            if 2 * q.rank != self.b_plus - self.b0:
                raise InvalidDataError(
                    f"H+ quotient has real dimension {2 * q.rank}, expected {self.b_plus - self.b0}"
                )

    @property
    def d(self) -> int:
        return self.D.rank

    @property
    def delta(self) -> int:
        """Expected dimension 2d - b_plus - 1."""
        return 2 * self.d - self.b_plus - 1


def hplus_euler(data: ActionData, mode: CoeffMode) -> CohClass:
    """Euler class of H+/(H+)^G: u^(b+ - b0) mod 2, else from complex weights."""
    if mode.kind == "p" and mode.modulus == 2 and data.order == 2:
        return CohClass.monomial(mode, 1, (data.b_plus - data.b0) % 2, (data.b_plus - data.b0) // 2)
    if data.b_plus == data.b0:
        return CohClass.one(mode)
    if data.hplus_quotient is None:
        raise InvalidDataError("H+ quotient weights are required for this Euler class")
    return untwisted_euler(data.hplus_quotient.untwisted(), mode)


@dataclass(frozen=True)
class ReducedSWData:
    """Reduced invariants S_j per splitting, with the zero-forcing rule applied."""

    p: int
    b0: int
    d: tuple[int, ...]
    supplied: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.d) != self.p or len(self.supplied) != self.p:
            raise InvalidDataError(f"need {self.p} weights and {self.p} reduced invariants")

    @property
    def deltas(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(dj) - Fraction(self.b0 + 1, 2) for dj in self.d)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(
            s if (dl.denominator == 1 and dl >= 0) else 0
            for s, dl in zip(self.supplied, self.deltas)
        )


def reduced_data(data: ActionData, supplied: Sequence[int]) -> ReducedSWData:
    return ReducedSWData(data.order, data.b0, data.D.weights, tuple(int(s) for s in supplied))


# ---------------------------------------------------------------- identities


def sw_trivial_group(sw_scalar: int, data: ActionData, m: int) -> int:
    """Invariant of x^m for the trivial group: the scalar when 2m equals the dimension."""
    if data.order != 1:
        raise InvalidDataError("the trivial-group formula needs order 1")
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    return sw_scalar if 2 * m == data.delta else 0


def wall_cross(data: ActionData, m: int, mode: CoeffMode) -> CohClass:
    """SW^phi(x^m) - SW^-phi(x^m) = e(H_0) s_{m-(d-1)}(D)."""
    if data.b0 != 1:
        raise InvalidDataError("wall-crossing needs exactly one invariant H+ direction")
    if not data.orientation_preserved and not (mode.kind == "p" and mode.modulus == 2):
        raise InvalidDataError("without an invariant orientation work with Z_2 coefficients")
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    return hplus_euler(data, mode) * segre_class(data.D, m - (data.d - 1), mode)


Request = tuple[int, ...]


def _normalise_request(key: int | Sequence[int], order: int) -> Request:
    if isinstance(key, int):
        return (key,) + (0,) * (order - 1)
    key = tuple(int(k) for k in key)
    if len(key) != order:
        raise InvalidDataError(f"request {key} must have {order} exponents")
    return key


def charge_conjugate(
    table: Mapping[int | Sequence[int], CohClass], d: int, b_plus: int, order: int
) -> dict[Request, CohClass]:
    """Table of the conjugate structure in the opposite chamber.

    The monomial prod_j (x + jv)^{m_j} maps to prod_j (x - jv)^{m_j} up to
    the sign (-1)^{sum m_j}, so weights are reindexed j -> -j and the value
    picks up (-1)^{d + b_plus + 1 + sum m_j}.
    """
    out: dict[Request, CohClass] = {}
    for key, value in table.items():
        req = _normalise_request(key, order)
        conj = tuple(req[(-j) % order] for j in range(order))
        sign = (-1) ** (d + b_plus + 1 + sum(req))
        out[conj] = value * sign
    return out


def psc_vanishing(b0: int, pairing_phi_cs: int | None = None, convention: str = "le") -> Verdict:
    """Which invariants a G-invariant positive scalar curvature metric kills.

    With ``convention="le"`` the chamber phi vanishes when <phi, c(s)> <= 0;
    ``"ge"`` flips the inequality.
    """
    if convention not in ("le", "ge"):
        raise InvalidDataError("convention must be 'le' or 'ge'")
    if b0 > 1:
        return Verdict("vanishes", "all equivariant invariants vanish", {"chambers": ["unique"]})
    if b0 == 0:
        return Verdict("no_chamber", "no invariant self-dual direction, invariants undefined", {})
    if pairing_phi_cs is None:
        raise InvalidDataError("b0 = 1 needs the pairing <phi, c(s)>")
    chambers = []
    plus_vanishes = pairing_phi_cs <= 0 if convention == "le" else pairing_phi_cs >= 0
    minus_vanishes = -pairing_phi_cs <= 0 if convention == "le" else -pairing_phi_cs >= 0
    if plus_vanishes:
        chambers.append("plus")
    if minus_vanishes:
        chambers.append("minus")
    return Verdict(
        "vanishes",
        "invariants vanish in chamber(s) " + ", ".join(chambers),
        {"chambers": chambers, "pairing": pairing_phi_cs, "convention": convention},
    )


def mod2_spin_sw(data: ActionData, m: int, b_neg: int) -> CohClass:
    """w_{b+ - 3}(H+) s_{m-(d-2)}(D) mod 2 for a spin structure.

    ``b_neg`` counts the sign representations in H+ for Z_2.  For odd
    order the positive-degree cohomology with Z_2 coefficients vanishes and
    only the degree zero part is returned.
    """
    mode = CoeffMode.mod_p(2)
    if m < 0 or m % 2:
        raise InvalidDataError("the mod 2 spin formula needs an even non-negative m")
    index = m - (data.d - 2)
    if data.order % 2 == 1:
        value = 1 if (data.b_plus == 3 and index == 0) else 0
        return CohClass.const(mode, value)
    if data.order != 2:
        raise InvalidDataError("the mod 2 spin formula is implemented for Z_2 only")
    return sw_classes_z2(b_neg, data.b_plus - 3) * segre_class(data.D, index, mode)


def transversality_zp(
    p: int,
    d_weights: Sequence[int],
    b_weights: Sequence[int] | None = None,
    b_plus: int | None = None,
    b0: int | None = None,
) -> Verdict:
    """Numeric test for equivariant transversality of a Z_p monopole map.

    For odd p, ``b_weights[i]`` is the multiplicity of C_i in the
    complexified H+ quotient.  For p = 2 the single count b_plus - b0 is used.
    """
    if not is_prime(p):
        raise InvalidDataError(f"{p} is not prime")
    if len(d_weights) != p:
        raise InvalidDataError(f"need {p} index weights")
    if p == 2 and b_weights is None:
        if b_plus is None or b0 is None:
            raise InvalidDataError("p = 2 needs b_plus and b0")
        b_weights = (0, b_plus - b0)
    if b_weights is None or len(b_weights) != p:
        raise InvalidDataError(f"need {p} H+ weights")
    strict_needed = p == 2
    well_defined = True
    for j in range(p):
        for i in range(1, p):
            lhs = d_weights[(j - i) % p] + d_weights[(j + i) % p]
            rhs = b_weights[i]
            if lhs < rhs:
                return Verdict(
                    "fails",
                    f"d_{(j - i) % p} + d_{(j + i) % p} = {lhs} < b_{i} = {rhs}",
                    {"j": j, "i": i, "lhs": lhs, "rhs": rhs, "well_defined": False},
                )
            if strict_needed and lhs == rhs:
                well_defined = False
    return Verdict(
        "achievable",
        "all inequalities hold" + ("" if well_defined else "; equality prevents a well-defined cobordism class"),
        {"well_defined": well_defined},
    )


# -------------------------------------------------------------- localisation


def localize_zp(
    data: ActionData,
    reduced: ReducedSWData | Sequence[int],
    request: Sequence[int] | int,
    allow_laurent: bool = False,
) -> CohClass:
    """SW(prod_j (x + jv)^{m_j}) in Z_p coefficients from reduced invariants.

    e(H+/(H+)^g) * sum_j c_j(-(b0+1)/2; m_0 - d_0, ..., m_{p-1} - d_{p-1}) S_j.
    A surviving negative power of v raises :class:`DataInconsistencyError`
    unless ``allow_laurent`` is set.
    """
    p = data.order
    if not is_prime(p):
        raise InvalidDataError(f"cohomological localisation is implemented for prime order, got {p}")
    if data.b0 == 0:
        raise InvalidDataError("no chamber: b0 = 0")
    if not isinstance(reduced, ReducedSWData):
        reduced = reduced_data(data, reduced)
    req = _normalise_request(request, p)
    if any(mj < 0 for mj in req):
        raise InvalidDataError("request exponents must be non-negative")
    mode = CoeffMode.mod_p(p)
    n = Fraction(-(data.b0 + 1), 2)
    shifted = [mj - dj for mj, dj in zip(req, data.D.weights)]
    total = CohClass.zero(mode)
    for j, s in enumerate(reduced.values):
        if s % p:
            total = total + laurent_cj(n, shifted, j, p) * s
    value = hplus_euler(data, mode) * total
    if value.is_laurent and not allow_laurent:
        raise DataInconsistencyError(
            f"localised value {value.render()} has negative powers of v; "
            "the reduced invariants cannot come from an actual action"
        )
    return value


def localize_k_char(
    order: int,
    d_weights: Sequence[int],
    hplus_weights: Sequence[int],
    reduced: Sequence[int],
    k: int = 1,
    m: int = 0,
) -> CyclotomicNumber:
    """Character of SW^K(xi^m) at g^k via K-theoretic localisation.

    ``hplus_weights`` are the complex weights of R + H+ (trivial ones are
    dropped automatically).  ``reduced`` lists the reduced invariants for
    the splittings of the cyclic subgroup generated by g^k, so it has
    order/gcd(k, order) entries.
    """
    n = order
    if len(d_weights) != n or len(hplus_weights) != n:
        raise InvalidDataError(f"weights must be indexed by Z_{n}")
    sub = n // gcd(k, n)
    if len(reduced) != sub:
        raise InvalidDataError(f"g^{k} generates a subgroup of order {sub}; need {sub} reduced invariants")
    moved_h = [b if i % sub else 0 for i, b in enumerate(hplus_weights)]
    euler_h = k_euler_char(moved_h, k, 0)
    total = CyclotomicNumber.rational(n, 0)
    for j, s in enumerate(reduced):
        if s == 0:
            continue
        moved_d = [dw if (i - j) % sub else 0 for i, dw in enumerate(d_weights)]
        residue = k_euler_char(moved_d, k, j).inverse()
        total = total + residue * CyclotomicNumber.root_power(n, -j * m * k) * s
    return euler_h * total
