"""Job document schema and dispatch to the computation modules."""

from __future__ import annotations

from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from .charclass import VirtualRep
from .cohring import CoeffMode, CohClass, EquivPoly
from .errors import DataInconsistencyError, InsufficientTruncationError
from .gluing import SummandData, connect_sum_zp, glue_smash, p_copies, table_evaluator
from .kahler import KahlerData, sw_k3, sw_kahler, sw_kahler_bplus1
from .obstruct import (
    BurnsideElem,
    burnside_ops,
    burnside_sw,
    constraint_zp,
    dihedral_copies_pipeline,
    divisibility_check,
    extension_check_dp,
    fang_check,
    free_congruence_check,
)
from .reptheory import RepRingElem
from .swcalc import (
    ActionData,
    charge_conjugate,
    localize_k_char,
    localize_zp,
    mod2_spin_sw,
    psc_vanishing,
    reduced_data,
    transversality_zp,
    wall_cross,
)

SCHEMA_VERSION = "1.0"

# [u_exp, v_exp, coefficient]
Terms = list[tuple[int, int, int]]


class _Job(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def group_size(self) -> int:
        return 1

    def run(self) -> dict[str, Any]:
        raise NotImplementedError


def _mode(order: int, kind: str) -> CoeffMode:
    return CoeffMode.mod_p(order) if kind == "mod_p" else CoeffMode.integral(order)


def _terms(mode: CoeffMode, terms: Terms) -> CohClass:
    return CohClass.build(mode, {(u, v): c for u, v, c in terms})


def _class_out(value: CohClass) -> dict[str, Any]:
    return {"value": value.render(), "degrees": sorted(value.degrees())}


def _quotient(order: int, weights: Optional[list[int]]) -> VirtualRep | None:
    return None if weights is None else VirtualRep(order, tuple(weights), False)


class ActionFields(BaseModel):
    model_config = ConfigDict(extra="forbid")

    b_plus: int
    b0: int
    d: list[int]
    hplus_weights: Optional[list[int]] = None
    chamber: Optional[Literal["plus", "minus", "unique"]] = None

    def build(self, order: int) -> ActionData:
        return ActionData(
            order=order,
            b_plus=self.b_plus,
            b0=self.b0,
            D=VirtualRep(order, tuple(self.d)),
            hplus_quotient=_quotient(order, self.hplus_weights),
            chamber=self.chamber,
        )


class LocalizeZpJob(_Job):
    task: Literal["localize_zp"]
    p: int
    action: ActionFields
    reduced: list[int]
    request: Union[int, list[int]]
    allow_laurent: bool = False

    def group_size(self) -> int:
        return self.p

    def run(self) -> dict[str, Any]:
        data = self.action.build(self.p)
        red = reduced_data(data, self.reduced)
        value = localize_zp(data, red, self.request if isinstance(self.request, int) else tuple(self.request), self.allow_laurent)
        return {
            **_class_out(value),
            "meta": {
                "delta": data.delta,
                "delta_j": [str(x) for x in red.deltas],
                "effective_reduced": list(red.values),
            },
        }


class LocalizeKJob(_Job):
    task: Literal["localize_k"]
    n: int
    d: list[int]
    hplus_weights: list[int]
    reduced: list[int]
    k: int = 1
    m: int = 0

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        value = localize_k_char(self.n, self.d, self.hplus_weights, self.reduced, self.k, self.m)
        out: dict[str, Any] = {"value": str(value)}
        if value.is_rational():
            out["rational"] = str(value.to_rational())
        return out


class WallCrossJob(_Job):
    task: Literal["wall_cross"]
    n: int
    action: ActionFields
    m: int
    coefficients: Literal["integral", "mod_p"] = "integral"

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        data = self.action.build(self.n)
        out = _class_out(wall_cross(data, self.m, _mode(self.n, self.coefficients)))
        out["meta"] = {"delta": data.delta}
        return out


class TableEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    request: Union[int, list[int]]
    terms: Terms


class ChargeConjugateJob(_Job):
    task: Literal["charge_conjugate"]
    n: int
    d: int
    b_plus: int
    table: list[TableEntry]
    coefficients: Literal["integral", "mod_p"] = "integral"

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        mode = _mode(self.n, self.coefficients)
        table = {
            (e.request if isinstance(e.request, int) else tuple(e.request)): _terms(mode, e.terms)
            for e in self.table
        }
        out = charge_conjugate(table, self.d, self.b_plus, self.n)
        return {"table": [{"request": list(k), "value": v.render()} for k, v in sorted(out.items())]}


class Mod2SpinJob(_Job):
    task: Literal["mod2_spin"]
    n: int = 2
    action: ActionFields
    m: int
    b_neg: int

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        return _class_out(mod2_spin_sw(self.action.build(self.n), self.m, self.b_neg))


class PscJob(_Job):
    task: Literal["psc"]
    b0: int
    pairing: Optional[int] = None
    convention: Literal["le", "ge"] = "le"

    def run(self) -> dict[str, Any]:
        return {"verdict": psc_vanishing(self.b0, self.pairing, self.convention).to_dict()}


class TransversalityJob(_Job):
    task: Literal["transversality"]
    p: int
    d: list[int]
    b_weights: Optional[list[int]] = None
    b_plus: Optional[int] = None
    b0: Optional[int] = None

    def group_size(self) -> int:
        return self.p

    def run(self) -> dict[str, Any]:
        return {"verdict": transversality_zp(self.p, self.d, self.b_weights, self.b_plus, self.b0).to_dict()}


class KahlerJob(_Job):
    task: Literal["kahler"]
    n: int
    V0: list[int]
    V1: list[int]
    V2: list[int]
    H2O: list[int]
    holomorphic: bool = True
    m: int
    b_plus_one: bool = False
    coefficients: Literal["integral", "mod_p"] = "integral"

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        reps = [VirtualRep(self.n, tuple(w), False) for w in (self.V0, self.V1, self.V2, self.H2O)]
        data = KahlerData(*reps, holomorphic=self.holomorphic)
        mode = _mode(self.n, self.coefficients)
        meta = {"d": data.d, "r": data.r}
        if self.b_plus_one:
            plus, minus = sw_kahler_bplus1(data, self.m, mode)
            return {"chambers": {"plus": plus.render(), "minus": minus.render()}, "meta": meta}
        return {**_class_out(sw_kahler(data, self.m, mode)), "meta": meta}


class K3Job(_Job):
    task: Literal["k3"]
    n: int
    c1_is_11: bool
    c1_zero: bool
    acts_trivially_on_k: bool
    m: int
    line_weight: int = 0
    canonical_weight: int = 0
    d: Optional[list[int]] = None
    h0: Optional[int] = None
    coefficients: Literal["integral", "mod_p"] = "integral"

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        D = None if self.d is None else VirtualRep(self.n, tuple(self.d))
        values = sw_k3(
            self.c1_is_11, self.c1_zero, self.acts_trivially_on_k, self.m,
            _mode(self.n, self.coefficients), self.n, self.line_weight, self.canonical_weight, D, self.h0,
        )
        return {"chambers": {k: v.render() for k, v in values.items()}}


class GlueSide(ActionFields):
    table: Optional[dict[int, Terms]] = None


class GlueJob(_Job):
    task: Literal["glue"]
    n: int
    side1: GlueSide
    side2: GlueSide
    theta: int = 0
    coefficients: Literal["integral", "mod_p"] = "integral"

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        mode = _mode(self.n, self.coefficients)

        def summand(side: GlueSide) -> SummandData:
            data = ActionFields.model_validate(side.model_dump(exclude={"table"})).build(self.n)
            if side.table is None:
                return SummandData(data)
            table = {k: _terms(mode, t) for k, t in side.table.items()}
            return SummandData(data, table_evaluator(table, mode))

        theta = EquivPoly.x(mode) ** self.theta
        return _class_out(glue_smash(summand(self.side1), summand(self.side2), theta))


class ConnectSumJob(_Job):
    task: Literal["connect_sum_zp"]
    p: int
    x_side: ActionFields
    d_y: int
    b_plus_y: int
    sw_y: int
    m: int

    def group_size(self) -> int:
        return self.p

    def run(self) -> dict[str, Any]:
        return _class_out(connect_sum_zp(self.x_side.build(self.p), self.d_y, self.b_plus_y, self.sw_y, self.m))


class PCopiesJob(_Job):
    task: Literal["p_copies"]
    p: int
    d_y: int
    b_plus_y: int
    sw_y: int
    m: int

    def group_size(self) -> int:
        return self.p

    def run(self) -> dict[str, Any]:
        return _class_out(p_copies(self.d_y, self.b_plus_y, self.sw_y, self.p, self.m))


class DivisibilityJob(_Job):
    task: Literal["divisibility"]
    b_plus: int
    d: int
    p: int

    def run(self) -> dict[str, Any]:
        return {"verdict": divisibility_check(self.b_plus, self.d, self.p).to_dict()}


class ConstraintZpJob(_Job):
    task: Literal["constraint_zp"]
    p: int
    b0: int
    d: list[int]
    sw_mod_p_nonzero: bool

    def group_size(self) -> int:
        return self.p

    def run(self) -> dict[str, Any]:
        return {"verdict": constraint_zp(self.b0, self.d, self.p, self.sw_mod_p_nonzero).to_dict()}


class FangJob(_Job):
    task: Literal["fang"]
    group_order: int
    pairs: list[tuple[int, int]]

    def group_size(self) -> int:
        return self.group_order

    def run(self) -> dict[str, Any]:
        return {"verdict": fang_check(self.pairs, self.group_order).to_dict()}


class FreeCongruenceJob(_Job):
    task: Literal["free_congruence"]
    n: int
    quotient_sums: dict[int, int]
    form: Literal["cyclic", "mobius"] = "cyclic"

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        return {"verdict": free_congruence_check(self.n, self.quotient_sums, self.form).to_dict()}


class CopiesFields(BaseModel):
    model_config = ConfigDict(extra="forbid")

    d_y: int
    b_plus_y: int
    sw_y: int
    m_max: Optional[int] = None


class ExtensionJob(_Job):
    task: Literal["extension_dp"]
    p: int
    orientation: Literal["preserves", "reverses"]
    delta: Optional[int] = None
    values: dict[int, Terms] = Field(default_factory=dict)
    k_values: list[list[int]] = Field(default_factory=list)
    copies: Optional[CopiesFields] = None

    def group_size(self) -> int:
        return 2 * self.p

    def run(self) -> dict[str, Any]:
        if self.copies is not None:
            c = self.copies
            verdict = dihedral_copies_pipeline(self.p, c.d_y, c.b_plus_y, c.sw_y, self.orientation, c.m_max)
            return {"verdict": verdict.to_dict()}
        mode = CoeffMode.mod_p(self.p)
        values = {m: _terms(mode, t) for m, t in self.values.items()}
        reps = [RepRingElem(self.p, tuple(k)) for k in self.k_values]
        delta = 0 if self.delta is None else self.delta
        return {"verdict": extension_check_dp(self.p, values, delta, self.orientation, reps).to_dict()}


class BurnsideJob(_Job):
    task: Literal["burnside"]
    n: int
    op: Literal["add", "mul", "sw"]
    a: list[tuple[int, int, int]]
    b: list[tuple[int, int, int]] = Field(default_factory=list)
    m: int = 0

    def group_size(self) -> int:
        return self.n

    def run(self) -> dict[str, Any]:
        def elem(items: list[tuple[int, int, int]]) -> BurnsideElem:
            acc: dict[tuple[int, int], int] = {}
            for a, c, k in items:
                acc[(a, c)] = acc.get((a, c), 0) + k
            return BurnsideElem.build(self.n, acc)

        if self.op == "sw":
            return _class_out(burnside_sw(elem(self.a), self.m))
        return {"element": burnside_ops(elem(self.a), elem(self.b), self.op).to_dict()}


Job = Annotated[
    Union[
        LocalizeZpJob, LocalizeKJob, WallCrossJob, ChargeConjugateJob, Mod2SpinJob, PscJob,
        TransversalityJob, KahlerJob, K3Job, GlueJob, ConnectSumJob, PCopiesJob, DivisibilityJob,
        ConstraintZpJob, FangJob, FreeCongruenceJob, ExtensionJob, BurnsideJob,
    ],
    Field(discriminator="task"),
]


class JobDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    jobs: list[Job]


DOCUMENT = TypeAdapter(JobDocument)

# exit statuses for job-level failures
STATUS_INVALID = 2
STATUS_INCONSISTENT = 3


def run_job(job: _Job) -> tuple[dict[str, Any], int]:
    record: dict[str, Any] = {"task": job.task, "input": job.model_dump(mode="json")}  # type: ignore[attr-defined]
    try:
        record["result"] = job.run()
        record["ok"] = True
        return record, 0
    except (DataInconsistencyError, InsufficientTruncationError) as exc:
        status, error = STATUS_INCONSISTENT, exc
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        status, error = STATUS_INVALID, exc
    record["ok"] = False
    record["error"] = {"kind": type(error).__name__, "message": str(error)}
    return record, status


def run_jobs(doc: JobDocument) -> tuple[dict[str, Any], int]:
    results, status = [], 0
    for idx, job in enumerate(doc.jobs):
        record, job_status = run_job(job)
        record["index"] = idx
        results.append(record)
        status = max(status, job_status)
    return {"schema_version": SCHEMA_VERSION, "results": results, "status": status}, status

