"""Decision procedures that turn invariant data into existence verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence

from .algebra import divisors, is_prime, totient_mobius
from .cohring import CoeffMode, CohClass
from .errors import InvalidDataError
from .gluing import p_copies
from .grouptheory import SubgroupLattice, subgroup_mobius
from .reptheory import RepRingElem, palindrome_check
from .verdicts import Verdict


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidDataError(f"{p} is not prime")


def divisibility_check(b_plus: int, d: int, p: int) -> Verdict:
    """Whether SW(f) != 0 mod p is compatible with b_+ and d.

    With 2d - b_+ - 1 = 2m, a nonzero invariant mod p needs p^{e+1} to
    divide (b_+ - 1)/2 for every e with p^e <= floor(m/(p-1)).
    """
    _require_prime(p)
    delta = 2 * d - b_plus - 1
    if delta < 0 or delta % 2:
        return Verdict("not_applicable", f"expected dimension {delta} is odd or negative", {"delta": delta})
    m = delta // 2
    half = (b_plus - 1) // 2
    bound = m // (p - 1)
    corollary = {
        "b_plus_is_1_mod_2p": b_plus % (2 * p) == 1,
        "m": m,
        "m_at_most_p_minus_2": m <= p - 2,
    }
    e, pe = 0, 1
    while pe <= bound:
        if half % (pe * p):
            return Verdict(
                "forced_congruence",
                f"SW = 0 mod {p}: {p}^{e + 1} does not divide (b_+ - 1)/2 = {half}",
                {"e": e, "modulus": pe * p, "half_b_plus_minus_1": half, "corollary": corollary},
            )
        e, pe = e + 1, pe * p
    return Verdict("consistent", "all divisibility conditions hold", {"checked_up_to_e": e - 1, "corollary": corollary})


def constraint_zp(b0: int, d_weights: Sequence[int], p: int, sw_mod_p_nonzero: bool) -> Verdict:
    """A Z_p action with SW != 0 mod p needs some 0 <= 2 d_i - b0 - 1 <= 2(p - 2)."""
    _require_prime(p)
    if len(d_weights) != p:
        raise InvalidDataError(f"need {p} index weights")
    if not sw_mod_p_nonzero:
        return Verdict("consistent", "the invariant vanishes mod p, nothing to check", {})
    if b0 % (2 * p) == 1:
        return Verdict("consistent", f"b0 = 1 mod {2 * p}, the constraint does not bind", {"b0": b0})
    # 0 <= 2 d - b0 - 1 <= 2(p - 2) as an integer interval for d
    lo = -(-(b0 + 1) // 2)
    hi = (2 * (p - 2) + b0 + 1) // 2
    hits = [i for i, di in enumerate(d_weights) if lo <= di <= hi]
    if hits:
        return Verdict("consistent", f"d_{hits[0]} = {d_weights[hits[0]]} lies in [{lo}, {hi}]", {"indices": hits, "interval": [lo, hi]})
    return Verdict(
        "obstructed",
        f"no i with d_i in [{lo},{hi}]",
        {"interval": [lo, hi], "d": list(d_weights), "b0": b0, "p": p},
    )


def fang_check(pairs: Sequence[tuple[int, int]], group_order: int) -> Verdict:
    """Pairs (2 dim_C D^{sH}, dim_R (H+)^H) over nontrivial cyclic subgroups and splittings."""
    if group_order > 1 and not pairs:
        raise InvalidDataError("a nontrivial group has a nontrivial cyclic subgroup; supply its data")
    for idx, (twice_dim_d, dim_h) in enumerate(pairs):
        if twice_dim_d > dim_h:
            return Verdict("consistent", f"pair {idx} has {twice_dim_d} > {dim_h}", {"pair": idx})
    return Verdict(
        "forced_congruence",
        f"SW(X,s) = 0 mod {group_order}",
        {"modulus": group_order, "pairs": [list(p) for p in pairs]},
    )


def free_congruence_check(
    group: int | SubgroupLattice,
    quotient_sums: Mapping[int, int],
    form: str = "cyclic",
) -> Verdict:
    """Congruences satisfied by fixed-point counts M^H of a finite G-set.

    For a cyclic group given by its order, keys are subgroup orders a | n.
    For a lattice, keys are subgroup indices.  ``form`` selects
    sum_(H) phi(|H|) |G/N_G H| M^H or sum_H mu(1, H) M^H.
    """
    if form not in ("cyclic", "mobius"):
        raise InvalidDataError("form must be 'cyclic' or 'mobius'")
    if isinstance(group, int):
        n = group
        subs = divisors(n)
        missing = [a for a in subs if a not in quotient_sums]
        if missing:
            raise InvalidDataError(f"missing quotient data for subgroup orders {missing}")
        if form == "cyclic":
            terms = {a: totient_mobius(a)[0] * quotient_sums[a] for a in subs}
        else:
            terms = {a: totient_mobius(a)[1] * quotient_sums[a] for a in subs}
    else:
        n = group.group.order
        terms = {}
        if form == "cyclic":
            for cls in group.conj_classes:
                h = cls[0]
                if not group.is_cyclic(h):
                    continue
                key = next((k for k in cls if k in quotient_sums), None)
                if key is None:
                    raise InvalidDataError(f"missing quotient data for the class of subgroup {h}")
                size = len(group.subgroups[h])
                terms[h] = totient_mobius(size)[0] * group.normaliser_index[h] * quotient_sums[key]
        else:
            for h in range(len(group.subgroups)):
                mu = subgroup_mobius(group, h)
                if mu == 0:
                    continue
                if h not in quotient_sums:
                    raise InvalidDataError(f"missing quotient data for subgroup {h}")
                terms[h] = mu * quotient_sums[h]
    total = sum(terms.values())
    witness = {"form": form, "total": total, "modulus": n, "residue": total % n}
    if total % n:
        return Verdict("obstructed", f"weighted fixed-point sum {total} is not 0 mod {n}", witness)
    return Verdict("consistent", f"weighted fixed-point sum {total} = 0 mod {n}", witness)


def _degree_obstructed(delta_deg: int, orientation: str) -> bool:
    if delta_deg <= 0:
        return False
    return delta_deg % 4 == (2 if orientation == "preserves" else 0)


def extension_check_dp(
    p: int,
    sw_values: Mapping[int, CohClass],
    delta_xs: int,
    orientation: str,
    k_values: Iterable[RepRingElem] = (),
) -> Verdict:
    """Can a Z_p action extend to the dihedral group D_p?

    A nonzero SW(x^m) in degree 2m - delta that is positive and 2 mod 4
    (reflection preserving orientation on H+) or 0 mod 4 (reversing) is an
    obstruction, as is a K-theoretic value outside the span of t^j + t^-j.
    """
    _require_prime(p)
    if p == 2:
        raise InvalidDataError("the dihedral check needs an odd prime")
    if orientation not in ("preserves", "reverses"):
        raise InvalidDataError("orientation must be 'preserves' or 'reverses'")
    for m, value in sorted(sw_values.items()):
        if value.is_zero():
            continue
        deg = 2 * m - delta_xs
        if _degree_obstructed(deg, orientation):
            return Verdict(
                "obstructed",
                f"SW(x^{m}) = {value.render()} is nonzero in degree {deg}",
                {"m": m, "degree": deg, "value": value.render(), "orientation": orientation},
            )
    for idx, rep in enumerate(k_values):
        if rep.order != p:
            raise InvalidDataError("K-theoretic values must live in R(Z_p)")
        if not palindrome_check(rep):
            return Verdict(
                "obstructed",
                f"K-theoretic value {rep.render()} is not restricted from D_{p}",
                {"k_index": idx, "value": rep.render()},
            )
    return Verdict("consistent", "no degree or palindrome condition fires", {"orientation": orientation})


def dihedral_copies_pipeline(p: int, d_y: int, b_plus_y: int, sw_y: int, orientation: str, m_max: int | None = None) -> Verdict:
    """Extension test for Z_p cyclically permuting p copies of Y."""
    m_max = 2 * (p - 1) if m_max is None else m_max
    values = {m: p_copies(d_y, b_plus_y, sw_y, p, m) for m in range(m_max + 1)}
    return extension_check_dp(p, values, p - 1, orientation)


def decomposition_check(values: Iterable[CohClass]) -> Verdict:
    """A nonzero equivariant invariant rules out X = X_1 # X_2 with both b_+^G > 0."""
    for value in values:
        if not value.is_zero():
            return Verdict(
                "obstructed",
                "nonzero invariant: no splitting with invariant H+ on both sides",
                {"value": value.render()},
            )
    return Verdict("consistent", "all supplied invariants vanish", {})


def psc_obstruction(b0: int, values: Iterable[CohClass]) -> Verdict:
    """A nonzero invariant with b0 > 1 rules out an invariant positive scalar curvature metric."""
    if b0 <= 1:
        return Verdict("not_applicable", "needs b0 > 1 so that the invariant is chamber independent", {"b0": b0})
    for value in values:
        if not value.is_zero():
            return Verdict(
                "obstructed",
                "nonzero invariant: no invariant metric of positive scalar curvature",
                {"value": value.render()},
            )
    return Verdict("consistent", "all supplied invariants vanish", {})


@dataclass(frozen=True)
class BurnsideElem:
    """Integer combination of orbits Z_n/Z_a carrying a character c of Z_a.

    Keys are (a, c) with a | n the stabiliser order and c mod a.
    """

    order: int
    coeffs: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def build(cls, order: int, coeffs: Mapping[tuple[int, int], int]) -> BurnsideElem:
        acc: dict[tuple[int, int], int] = {}
        for (a, c), k in coeffs.items():
            if a < 1 or order % a:
                raise InvalidDataError(f"{a} does not divide {order}")
            key = (a, c % a)
            acc[key] = acc.get(key, 0) + k
        return cls(order, tuple(sorted((key, k) for key, k in acc.items() if k)))

    @classmethod
    def basis(cls, order: int, a: int, c: int = 0) -> BurnsideElem:
        return cls.build(order, {(a, c): 1})

    @classmethod
    def one(cls, order: int) -> BurnsideElem:
        return cls.basis(order, order, 0)

    def _same(self, other: BurnsideElem) -> None:
        if self.order != other.order:
            raise InvalidDataError("group order mismatch")

    def __add__(self, other: BurnsideElem) -> BurnsideElem:
        self._same(other)
        acc = dict(self.coeffs)
        for key, k in other.coeffs:
            acc[key] = acc.get(key, 0) + k
        return BurnsideElem.build(self.order, acc)

    def __mul__(self, other: BurnsideElem | int) -> BurnsideElem:
        if isinstance(other, int):
            return BurnsideElem.build(self.order, {key: k * other for key, k in self.coeffs})
        self._same(other)
        n = self.order
        acc: dict[tuple[int, int], int] = {}
        for (a, c1), k1 in self.coeffs:
            for (b, c2), k2 in other.coeffs:
                g = gcd(a, b)
                orbits = n * g // (a * b)
                key = (g, (c1 + c2) % g)
                acc[key] = acc.get(key, 0) + k1 * k2 * orbits
        return BurnsideElem.build(n, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BurnsideElem:
        out = BurnsideElem.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def to_dict(self) -> dict[str, int]:
        return {f"{a}:{c}": k for (a, c), k in self.coeffs}


def burnside_ops(a: BurnsideElem, b: BurnsideElem, op: str) -> BurnsideElem:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise InvalidDataError(f"unknown Burnside operation {op!r}")


def burnside_sw(elem: BurnsideElem, m: int) -> CohClass:
    """Transfer of c_1(chi)^m, i.e. [G:H] c^m v^m in H*(Z_n; Z), extended linearly."""
    if m < 0:
        raise InvalidDataError("m must be non-negative")
    mode = CoeffMode.integral(elem.order)
    total = CohClass.zero(mode)
    for (a, c), k in elem.coeffs:
        total = total + CohClass.monomial(mode, k * (elem.order // a) * c**m, 0, m)
    return total
