"""Built-in cross-checks run by ``--verify`` before any job executes."""

from __future__ import annotations

from itertools import product
from typing import Callable

from .charclass import VirtualRep
from .cohring import CoeffMode, CohClass, EquivPoly, laurent_cj, series_cj_oracle
from .gluing import SummandData, connect_sum_zp, glue_smash, p_copies, p_copies_action, p_copies_evaluator
from .kahler import k3_trivial_class_index, sw_k3
from .obstruct import BurnsideElem
from .swcalc import ActionData, localize_k_char, localize_zp, wall_cross


def _cj_oracle() -> str | None:
    for p in (2, 3):
        for nvec in product(range(-2, 3), repeat=p):
            for n in range(-3, 4):
                for j in range(p):
                    if laurent_cj(n, nvec, j, p) != series_cj_oracle(n, nvec, j, p, truncation=12):
                        return f"p={p} n={n} nvec={nvec} j={j}"
    return None


def _connected_sums() -> str | None:
    for p in (2, 3, 5):
        trivial = ActionData(p, 0, 0, VirtualRep(p, (0,) * p), None if p == 2 else VirtualRep(p, (0,) * p, False))
        for d_y in (1, 2):
            b_y = 2 * d_y - 1
            action = p_copies_action(d_y, b_y, p)
            side1 = SummandData(action, p_copies_evaluator(d_y, b_y, 1, p))
            for m in range(2 * p):
                routes = (
                    p_copies(d_y, b_y, 1, p, m),
                    connect_sum_zp(trivial, d_y, b_y, 1, m),
                    localize_zp(action, [1] * p, m),
                    glue_smash(side1, SummandData(trivial), EquivPoly.x(CoeffMode.mod_p(p)) ** m),
                )
                if len(set(routes)) != 1:
                    return f"p={p} d_Y={d_y} m={m}"
    return None


def _k3_wall() -> str | None:
    for n in (2, 3):
        mode = CoeffMode.integral(n)
        for w, k, m in product(range(n), range(1, n), range(4)):
            values = sw_k3(True, True, False, m, mode, n, w, k)
            D, H0 = k3_trivial_class_index(n, w, k)
            if values["plus"] - values["minus"] != wall_cross(ActionData(n, 3, 1, D, H0), m, mode):
                return f"n={n} w={w} k={k} m={m}"
    return None


def _free_k_character() -> str | None:
    for n in range(2, 7):
        reduced = list(range(1, n + 1))
        if localize_k_char(n, [1] * n, [0] + [1] * (n - 1), reduced) != sum(reduced):
            return f"n={n}"
    return None


def _burnside() -> str | None:
    for p in (2, 3, 5):
        x, y = BurnsideElem.basis(p, p, 1), BurnsideElem.basis(p, 1)
        if x**p != BurnsideElem.one(p) or x * y != y or y * y != y * p:
            return f"p={p}"
    return None


CHECKS: dict[str, Callable[[], str | None]] = {
    "laurent coefficients match series oracle": _cj_oracle,
    "connected-sum routes agree": _connected_sums,
    "K3 chamber difference equals wall-crossing": _k3_wall,
    "free K-character cancels to the sum": _free_k_character,
    "Burnside relations for Z_p": _burnside,
}


def run_self_checks() -> list[tuple[str, bool, str]]:
    out = []
    for name, check in CHECKS.items():
        failure = check()
        out.append((name, failure is None, failure or ""))
    return out
