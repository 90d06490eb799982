"""Parameter sweeps over eta / delta and canned reproduction targets.

A sweep fixes a construction family and evaluation-point shape, then walks
a candidate set (the twist coefficient eta or the Roth-Lempel corner
delta), recording per candidate: LCD under the family's inner product, MDS
by the maximal-minor test, and the non-RS verdict on MDS rows.  Rows are
sorted by candidate index and individually fault-isolated: a budget error
lands in that row's error field instead of aborting the sweep.

The reproduction targets package the published example sweeps with
representation-independent expectations (counts, universal claims, coset
membership), so they pass or fail identically under any primitive modulus.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import classify, codes as codes_mod, linalg
from ._version import __version__
from .codes import CodeVerdict, DEFAULT_CODEWORD_BUDGET, DEFAULT_MINOR_BUDGET, LinearCode
from .construct import (
    ALPHA_KINDS,
    ROOTS_UNION_GAMMA_R_SCALED,
    ROOTS_UNION_GAMMA_SCALED,
    ROOTS_WITH_ZERO,
    RothLempelParams,
    TwistedRSParams,
    roth_lempel_generator,
    structured_alpha,
    twisted_rs_generator,
)
from .errors import BudgetExceeded, CodingError, NotAQuadraticExtension, ParamViolation
from .gf import FiniteField, make_field

TWISTED_EUCLIDEAN = "twisted_euclidean"
TWISTED_HERMITIAN = "twisted_hermitian"
RL_EUCLIDEAN = "rl_euclidean"
RL_HERMITIAN = "rl_hermitian"
FAMILIES = (TWISTED_EUCLIDEAN, TWISTED_HERMITIAN, RL_EUCLIDEAN, RL_HERMITIAN)

CANDIDATES_ALL_NONZERO = "all_nonzero"
CANDIDATES_ALL = "all"
CANDIDATES_COSET = "coset_outside_subfield"
CANDIDATES_EXPLICIT = "explicit"


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: family, field, code shape, and the candidate set."""

    family: str
    p: int
    m: int
    k: int
    alpha_kind: str
    t: Optional[int] = None
    h: Optional[int] = None
    modulus: Optional[Tuple[int, ...]] = None
    subfield_order: Optional[int] = None
    candidate_kind: str = CANDIDATES_ALL_NONZERO
    explicit_candidates: Tuple[int, ...] = ()
    allow_unchecked: bool = False
    max_combinations: int = DEFAULT_MINOR_BUDGET

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParamViolation(f"unknown family {self.family!r}")
        if self.alpha_kind not in ALPHA_KINDS:
            raise ParamViolation(f"unknown alpha kind {self.alpha_kind!r}")
        if self.family in (TWISTED_EUCLIDEAN, TWISTED_HERMITIAN):
            if self.t is None or self.h is None:
                raise ParamViolation("twisted sweeps need t and h")
        if self.candidate_kind == CANDIDATES_COSET and self.subfield_order is None:
            raise ParamViolation("coset candidates need subfield_order")
        if self.candidate_kind == CANDIDATES_EXPLICIT and not self.explicit_candidates:
            raise ParamViolation("explicit candidate set is empty")

    @property
    def inner(self) -> str:
        return "hermitian" if self.family.endswith("hermitian") else "euclidean"

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["modulus"] = list(self.modulus) if self.modulus is not None else None
        d["explicit_candidates"] = list(self.explicit_candidates)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "SweepSpec":
        d = dict(d)
        if d.get("modulus") is not None:
            d["modulus"] = tuple(d["modulus"])
        d["explicit_candidates"] = tuple(d.get("explicit_candidates") or ())
        return cls(**d)


@dataclass
class SweepRow:
    candidate: int
    lcd: Optional[bool] = None
    mds: Optional[bool] = None
    non_grs: Optional[str] = None
    error: Optional[str] = None
    runtime: float = 0.0


@dataclass
class SweepReport:
    spec: SweepSpec
    rows: List[SweepRow]
    summary: Dict[str, int]
    env: Dict[str, object]

    def row_for(self, candidate: int) -> SweepRow:
        for row in self.rows:
            if row.candidate == candidate:
                return row
        raise KeyError(f"no row for candidate {candidate}")

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "rows": [asdict(r) for r in self.rows],
            "summary": dict(self.summary),
            "env": dict(self.env),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SweepReport":
        return cls(
            spec=SweepSpec.from_json_dict(d["spec"]),
            rows=[SweepRow(**r) for r in d["rows"]],
            summary=dict(d["summary"]),
            env=dict(d["env"]),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["candidate", "lcd", "mds", "non_grs", "error", "runtime"])
        for r in self.rows:
            w.writerow([
                r.candidate,
                "" if r.lcd is None else str(r.lcd).lower(),
                "" if r.mds is None else str(r.mds).lower(),
                r.non_grs or "",
                r.error or "",
                repr(r.runtime),
            ])
        return buf.getvalue()


def _field_for_spec(spec: SweepSpec) -> FiniteField:
    return make_field(spec.p, spec.m, modulus=spec.modulus)


def _check_construction_hypotheses(spec: SweepSpec, field: FiniteField):
    """Gate a sweep on the hypotheses of the construction it exercises."""
    hermitian = spec.inner == "hermitian"
    if hermitian:
        linalg._base_q(field, None)  # raises NotAQuadraticExtension if not a square
    if spec.family in (TWISTED_EUCLIDEAN, TWISTED_HERMITIAN):
        if spec.h == 0:
            raise ParamViolation("the LCD constructions need h > 0 (override with allow_unchecked)")
    if spec.family in (RL_EUCLIDEAN, RL_HERMITIAN) and spec.alpha_kind == ROOTS_WITH_ZERO:
        base = spec.subfield_order or field.q
        gcd_base = math.isqrt(field.q) if hermitian else base
        if math.gcd(spec.k + 1, gcd_base) != 1:
            raise ParamViolation(
                f"gcd(k+1, {gcd_base}) != 1 (override with allow_unchecked)"
            )


def _candidates(spec: SweepSpec, field: FiniteField) -> List[int]:
    if spec.candidate_kind == CANDIDATES_ALL_NONZERO:
        return list(range(1, field.q))
    if spec.candidate_kind == CANDIDATES_ALL:
        return list(range(field.q))
    if spec.candidate_kind == CANDIDATES_COSET:
        s = spec.subfield_order
        return [i for i in range(field.q) if field.pow_idx(i, s) != i]
    return sorted(set(spec.explicit_candidates))


def _evaluate_candidate(spec: SweepSpec, field: FiniteField, base, candidate: int) -> SweepRow:
    row = SweepRow(candidate=candidate)
    start = time.perf_counter()
    try:
        elem = field.element(candidate)
        if spec.family in (TWISTED_EUCLIDEAN, TWISTED_HERMITIAN):
            gen = twisted_rs_generator(base.with_eta(elem))
        else:
            gen = roth_lempel_generator(base.with_delta(elem))
        code = LinearCode(gen)
        row.lcd = codes_mod.is_lcd(code, spec.inner)
        row.mds = codes_mod.is_mds(code, max_combinations=spec.max_combinations)
        if row.mds:
            row.non_grs = classify.non_grs_check(
                code, max_combinations=spec.max_combinations
            ).verdict
        else:
            row.non_grs = classify.VERDICT_INAPPLICABLE
    except CodingError as exc:
        row.error = f"{type(exc).__name__}: {exc}"
    row.runtime = time.perf_counter() - start
    return row


def run_sweep(spec: SweepSpec) -> SweepReport:
    """Evaluate every candidate in the spec's set; never aborts on row errors."""
    field = _field_for_spec(spec)
    if not spec.allow_unchecked:
        _check_construction_hypotheses(spec, field)
    sa = structured_alpha(spec.alpha_kind, field, spec.k,
                          subfield_order=spec.subfield_order)
    if spec.family in (TWISTED_EUCLIDEAN, TWISTED_HERMITIAN):
        base = TwistedRSParams(sa.alphas, spec.k, spec.t, spec.h, field.gamma)
    else:
        base = RothLempelParams(sa.alphas, spec.k, field.zero)
    rows = [
        _evaluate_candidate(spec, field, base, c)
        for c in sorted(_candidates(spec, field))
    ]
    summary = {
        "rows": len(rows),
        "lcd_true": sum(1 for r in rows if r.lcd is True),
        "mds_true": sum(1 for r in rows if r.mds is True),
        "non_grs_true": sum(1 for r in rows if r.non_grs == classify.VERDICT_NON_GRS),
        "errors": sum(1 for r in rows if r.error),
    }
    env = {
        "q": field.q,
        "modulus": list(field.modulus),
        "gamma_index": field.gamma_index,
        "version": __version__,
    }
    return SweepReport(spec=spec, rows=rows, summary=summary, env=env)


def persist_report(report: SweepReport, path: str, fmt: str = "json") -> None:
    """Write a report as deterministic JSON or fixed-header CSV."""
    if fmt == "json":
        payload = json.dumps(report.to_json_dict(), sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        payload = report.to_csv()
    else:
        raise ParamViolation(f"unknown format {fmt!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)


def load_report(path: str) -> SweepReport:
    with open(path, "r", encoding="utf-8") as fh:
        return SweepReport.from_json_dict(json.load(fh))


# -- property evaluation shared by the CLI --------------------------------

PROPS = ("lcd-e", "lcd-h", "mds", "non-grs", "distance")


def evaluate_code(code: LinearCode, props: Sequence[str],
                  max_combinations: int = DEFAULT_MINOR_BUDGET,
                  max_codewords: int = DEFAULT_CODEWORD_BUDGET) -> CodeVerdict:
    """Run the requested property checks, capturing per-property errors."""
    verdict = CodeVerdict(q=code.field.q, n=code.n, k=code.k)
    for prop in props:
        if prop not in PROPS:
            raise ParamViolation(f"unknown property {prop!r}")
        try:
            if prop == "lcd-e":
                verdict.hull_dim_euclidean = codes_mod.hull_dimension(code, "euclidean")
                verdict.is_euclidean_lcd = verdict.hull_dim_euclidean == 0
            elif prop == "lcd-h":
                verdict.hull_dim_hermitian = codes_mod.hull_dimension(code, "hermitian")
                verdict.is_hermitian_lcd = verdict.hull_dim_hermitian == 0
            elif prop == "mds":
                verdict.is_mds = codes_mod.is_mds(code, max_combinations=max_combinations)
            elif prop == "non-grs":
                ev = classify.non_grs_check(code, max_combinations=max_combinations)
                verdict.non_grs_verdict = ev.verdict
                if ev.verdict == classify.VERDICT_NON_GRS:
                    verdict.is_non_grs = True
                elif ev.verdict == classify.VERDICT_GRS_COMPATIBLE:
                    verdict.is_non_grs = False
                verdict.evidence = ev.to_json_dict()
            else:
                verdict.min_distance = codes_mod.min_distance_bruteforce(
                    code, max_codewords=max_codewords
                )
                verdict.min_distance_method = "bruteforce"
        except (BudgetExceeded, NotAQuadraticExtension) as exc:
            verdict.errors[prop] = f"{type(exc).__name__}: {exc}"
    if verdict.min_distance is None and verdict.is_mds:
        verdict.min_distance = code.n - code.k + 1
        verdict.min_distance_method = "mds_implied"
    verdict.validate()
    return verdict


# -- canned reproduction targets ------------------------------------------

EXAMPLE_IDS = ("ex3.3", "ex3.7a", "ex3.7b", "ex3.10", "ex3.13a", "ex3.13b")


@dataclass
class ReproduceResult:
    example_id: str
    passed: bool
    metric_name: str
    metric_value: int
    expected_value: int
    failures: List[str]
    details: Dict[str, object]
    report: SweepReport
    zero_row: Optional[SweepRow] = None

    def summary_line(self) -> str:
        word = "PASS" if self.passed else "FAIL"
        line = f"{word} {self.metric_name}={self.metric_value}"
        if not self.passed:
            line += f" (expected {self.expected_value}; {'; '.join(self.failures)})"
        return line


def _example_spec(example_id: str, modulus: Optional[Sequence[int]] = None) -> SweepSpec:
    mod = tuple(modulus) if modulus is not None else None
    if example_id == "ex3.3":
        return SweepSpec(TWISTED_EUCLIDEAN, 3, 4, 4, ROOTS_UNION_GAMMA_SCALED,
                         t=1, h=3, modulus=mod)
    if example_id == "ex3.7a":
        return SweepSpec(RL_EUCLIDEAN, 3, 2, 4, ROOTS_WITH_ZERO, modulus=mod)
    if example_id == "ex3.7b":
        return SweepSpec(RL_EUCLIDEAN, 3, 4, 4, ROOTS_WITH_ZERO, modulus=mod,
                         subfield_order=9)
    if example_id == "ex3.10":
        return SweepSpec(TWISTED_HERMITIAN, 11, 2, 5, ROOTS_UNION_GAMMA_R_SCALED,
                         t=1, h=3, modulus=mod)
    if example_id == "ex3.13a":
        return SweepSpec(RL_HERMITIAN, 5, 2, 6, ROOTS_WITH_ZERO, modulus=mod)
    if example_id == "ex3.13b":
        return SweepSpec(RL_HERMITIAN, 7, 2, 8, ROOTS_WITH_ZERO, modulus=mod)
    raise ParamViolation(f"unknown example id {example_id!r}")


def reproduce(example_id: str,
              modulus: Optional[Sequence[int]] = None) -> ReproduceResult:
    """Run a published example sweep and judge its intrinsic expectations.

    Expectations are representation-independent: flag counts, universal LCD
    claims, subfield-coset characterizations, and the eta = 1 witness.  For
    the Roth-Lempel targets the (excluded) delta = 0 candidate is evaluated
    as a separate labeled row.
    """
    spec = _example_spec(example_id, modulus)
    report = run_sweep(spec)
    field = _field_for_spec(spec)
    failures: List[str] = []
    details: Dict[str, object] = dict(report.summary)

    zero_row = None
    if spec.family in (RL_EUCLIDEAN, RL_HERMITIAN):
        zero_spec = SweepSpec(
            spec.family, spec.p, spec.m, spec.k, spec.alpha_kind,
            modulus=spec.modulus, subfield_order=spec.subfield_order,
            candidate_kind=CANDIDATES_EXPLICIT, explicit_candidates=(0,),
        )
        zero_row = run_sweep(zero_spec).rows[0]
        details["delta_zero"] = asdict(zero_row)

    def expect(cond: bool, message: str):
        if not cond:
            failures.append(message)

    qualifying = sum(
        1 for r in report.rows
        if r.lcd is True and r.mds is True and r.non_grs == classify.VERDICT_NON_GRS
    )
    details["qualifying_count"] = qualifying

    if example_id == "ex3.3":
        metric = ("mds_count", report.summary["mds_true"], 40)
        expect(report.summary["lcd_true"] == len(report.rows),
               "some eta is not Euclidean LCD")
        expect(report.summary["mds_true"] == 40,
               f"mds count {report.summary['mds_true']} != 40")
        one = report.row_for(1)
        details["eta_one_non_grs"] = one.non_grs
        expect(one.mds is True and one.non_grs == classify.VERDICT_NON_GRS,
               "eta = 1 is not an MDS non-RS witness")
    elif example_id == "ex3.7a":
        metric = ("mds_count", report.summary["mds_true"], 0)
        expect(report.summary["mds_true"] == 0, "an MDS delta exists over GF(9)")
    elif example_id == "ex3.7b":
        metric = ("qualifying_count", qualifying, 72)
        expect(report.summary["lcd_true"] == len(report.rows),
               "some delta is not Euclidean LCD")
        for r in report.rows:
            inside = field.pow_idx(r.candidate, 9) == r.candidate
            good = r.mds is True and r.non_grs == classify.VERDICT_NON_GRS
            if good == inside:
                expect(False, f"delta index {r.candidate}: MDS&non-RS != outside-GF(9)")
                break
        expect(qualifying == 72, f"qualifying count {qualifying} != 72")
    elif example_id == "ex3.10":
        metric = ("mds_count", report.summary["mds_true"], 7)
        expect(report.summary["lcd_true"] == len(report.rows),
               "some eta is not Hermitian LCD")
        expect(report.summary["mds_true"] == 7,
               f"mds count {report.summary['mds_true']} != 7")
        expect(
            all(r.non_grs == classify.VERDICT_NON_GRS for r in report.rows if r.mds),
            "an MDS eta is not non-RS",
        )
    elif example_id == "ex3.13a":
        metric = ("qualifying_count", qualifying, 12)
        expect(qualifying == 12, f"qualifying count {qualifying} != 12")
    else:  # ex3.13b
        metric = ("qualifying_count", qualifying, 8)
        expect(qualifying == 8, f"qualifying count {qualifying} != 8")

    name, value, expected = metric
    return ReproduceResult(
        example_id=example_id,
        passed=not failures,
        metric_name=name,
        metric_value=value,
        expected_value=expected,
        failures=failures,
        details=details,
        report=report,
        zero_row=zero_row,
    )
