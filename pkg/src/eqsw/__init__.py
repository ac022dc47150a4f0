"""Exact calculator for equivariant Seiberg-Witten invariants of cyclic group actions."""

from .algebra import CyclotomicNumber, gen_binom
from .charclass import VirtualRep, chern_classes, euler_class, segre_classes, twisted_segre
from .cohring import CoeffMode, CohClass, EquivPoly, laurent_cj, series_cj_oracle
from .errors import DataInconsistencyError, InsufficientTruncationError, InvalidDataError, LocalisationPoleError
from .swcalc import ActionData, ReducedSWData, localize_k_char, localize_zp, wall_cross
from .verdicts import Verdict

__all__ = [
    "ActionData",
    "CoeffMode",
    "CohClass",
    "CyclotomicNumber",
    "DataInconsistencyError",
    "EquivPoly",
    "InsufficientTruncationError",
    "InvalidDataError",
    "LocalisationPoleError",
    "ReducedSWData",
    "Verdict",
    "VirtualRep",
    "chern_classes",
    "euler_class",
    "gen_binom",
    "laurent_cj",
    "localize_k_char",
    "localize_zp",
    "segre_classes",
    "series_cj_oracle",
    "twisted_segre",
    "wall_cross",
]
