"""Report assembly: three trace computations and their comparison.

For an analyzed curve the trace of the tame monodromy operator is
computed three independent ways:

* ``trace_table``: Euler characteristic of the Serre class plus the error
  term, both straight from the per-type tables;
* ``trace_snc``: smooth-locus chi plus wild-locus chi on the SNC fiber of
  the computed type;
* ``trace_monodromy``: from the monodromy eigenvalues of the type.

The first two compute the same geometric quantity along different routes
and must agree unconditionally; a mismatch means a table bug, so it is a
hard failure.  The third agrees whenever the curve is
cohomologically tame; the trace formula itself holds exactly when the
error term vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import kodaira, motivic, snc
from .localfield import UnsupportedBackend
from .tate import (
    KodairaType,
    LocalInvariants,
    ReductionClass,
    error_term,
    is_cohomologically_tame,
    tate_algorithm,
)
from .weierstrass import WeierstrassModel


class NotCoprime(ValueError):
    """Base-change degree shares a factor with the residue characteristic."""


class ParseError(ValueError):
    """Bad corpus or report input; carries a line number when available."""


class TableInconsistency(AssertionError):
    """The table route and the SNC route disagreed: a table bug."""


@dataclass(frozen=True)
class Report:
    field: str
    coefficients: dict
    type: KodairaType
    v_delta_min: int
    n_components: int
    reduction: ReductionClass
    p: int
    serre_class: str
    serre_euler: int
    tame: bool
    error_term: int
    trace_table: int
    trace_snc: int
    trace_monodromy: int
    holds: bool
    consistent: bool
    warnings: tuple = ()


def _build_report(field: str, coefficients: dict, inv: LocalInvariants) -> Report:
    serre = kodaira.serre_class(inv.type)
    serre_chi = motivic.euler(serre)
    e = error_term(inv)
    tame = is_cohomologically_tame(inv)
    via_table = serre_chi + e
    via_snc = snc.tame_trace(kodaira.snc_configuration(inv.type), inv.p)
    via_monodromy = kodaira.monodromy_trace(inv.type, 1)
    if via_table != via_snc:
        raise TableInconsistency(
            f"type {inv.type} at p={inv.p}: table trace {via_table} != snc trace {via_snc}"
        )
    consistent = via_table == via_snc and (not tame or via_monodromy == via_table)
    if inv.type.kind == "I0":
        class_desc = "C(1)"
    elif inv.type.kind == "I":
        class_desc = "0"
    else:
        class_desc = str(inv.n_components)
    return Report(
        field=field,
        coefficients=dict(coefficients),
        type=inv.type,
        v_delta_min=inv.v_delta_min,
        n_components=inv.n_components,
        reduction=inv.reduction_class,
        p=inv.p,
        serre_class=class_desc,
        serre_euler=serre_chi,
        tame=tame,
        error_term=e,
        trace_table=via_table,
        trace_snc=via_snc,
        trace_monodromy=via_monodromy,
        holds=(e == 0),
        consistent=consistent,
    )


def analyze(model: WeierstrassModel) -> Report:
    """Full local analysis of one integral Weierstrass model."""
    inv = tate_algorithm(model)
    coeffs = {
        name: str(value)
        for name, value in zip(("a1", "a2", "a3", "a4", "a6"), model.coefficients())
    }
    return _build_report(str(model.spec), coeffs, inv)


@dataclass(frozen=True)
class BaseChangeCheck:
    original: Report
    substituted: Report
    degree: int
    serre_euler_after: int
    predicted_trace: int
    agrees: bool


def base_change_check(model: WeierstrassModel, d: int) -> BaseChangeCheck:
    """Compare Tate on the t -> t^d model against the monodromy prediction.

    The Serre side of the base-changed curve is computed from scratch by
    running the classification on the substituted equation; the predicted
    value is the trace of the d-th monodromy power of the *original*
    type.  For a tame curve the two must agree for every d prime to p.
    """
    if model.spec.kind != "laurent":
        raise UnsupportedBackend("base change is only implemented for laurent backends")
    if d < 1:
        raise ValueError("base-change degree must be >= 1")
    p = model.spec.residue_char
    if p > 0 and gcd(d, p) != 1:
        raise NotCoprime(f"degree {d} is not prime to the residue characteristic {p}")
    original = analyze(model)
    substituted = analyze(model.base_change_substitute(d))
    predicted = kodaira.monodromy_trace(original.type, d)
    agrees = substituted.serre_euler == predicted
    if original.tame and not agrees:
        raise TableInconsistency(
            f"tame curve of type {original.type}: base change d={d} gave Serre side "
            f"{substituted.serre_euler}, monodromy predicts {predicted}"
        )
    return BaseChangeCheck(
        original=original,
        substituted=substituted,
        degree=d,
        serre_euler_after=substituted.serre_euler,
        predicted_trace=predicted,
        agrees=agrees,
    )


@dataclass(frozen=True)
class TorsorReport:
    jacobian_type: KodairaType
    p: int
    m: int
    serre_euler: int  # of the torsor: always 0 for m >= 2
    error_term: int
    scaled_smooth_chi: int
    holds: bool
    warnings: tuple


def torsor_analyze(jacobian: Report, m: int) -> TorsorReport:
    """Trace-formula bookkeeping for an order-m torsor over the curve.

    The torsor has no rational point, so its Serre invariant vanishes and
    the error term is the whole Jacobian-side trace.  The reduction of
    the torsor is the Jacobian's with multiplicities scaled by m, which
    the SNC route cross-checks: no multiplicity-1 components survive.
    The trace formula holds exactly in residue characteristic zero or
    when the Jacobian is semi-stable.
    """
    if m < 1:
        raise ValueError("torsor order must be >= 1")
    if m == 1:
        return TorsorReport(
            jacobian_type=jacobian.type,
            p=jacobian.p,
            m=1,
            serre_euler=jacobian.serre_euler,
            error_term=jacobian.error_term,
            scaled_smooth_chi=snc.smooth_locus_chi(
                kodaira.snc_configuration(jacobian.type)
            ),
            holds=jacobian.holds,
            warnings=(),
        )
    e_torsor = jacobian.serre_euler + jacobian.error_term
    scaled = snc.scale_multiplicities(kodaira.snc_configuration(jacobian.type), m)
    scaled_smooth = snc.smooth_locus_chi(scaled)
    if scaled_smooth != 0:
        raise TableInconsistency(
            f"scaled fiber of {jacobian.type} by {m} kept a multiplicity-1 stratum"
        )
    additive = jacobian.reduction == ReductionClass.ADDITIVE
    holds = jacobian.p == 0 or not additive
    warnings = []
    if additive and (jacobian.p == 0 or gcd(m, jacobian.p) == 1):
        warnings.append(
            "no torsor of order prime to p exists over an additive-reduction "
            "Jacobian (the Weil-Chatelet group is a p-group); this is a formal answer"
        )
    return TorsorReport(
        jacobian_type=jacobian.type,
        p=jacobian.p,
        m=m,
        serre_euler=0,
        error_term=e_torsor,
        scaled_smooth_chi=scaled_smooth,
        holds=holds,
        warnings=tuple(warnings),
    )


# ---- structured-text serialization -------------------------------------------

_REPORT_KEYS = (
    "field",
    "a1",
    "a2",
    "a3",
    "a4",
    "a6",
    "p",
    "type",
    "v_delta_min",
    "n_components",
    "reduction",
    "serre_class",
    "serre_euler",
    "tame",
    "error_term",
    "trace_table",
    "trace_snc",
    "trace_monodromy",
    "holds",
    "consistent",
)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_report(report: Report) -> str:
    values = {
        "field": report.field,
        **report.coefficients,
        "p": report.p,
        "type": report.type,
        "v_delta_min": report.v_delta_min,
        "n_components": report.n_components,
        "reduction": report.reduction.value,
        "serre_class": report.serre_class,
        "serre_euler": report.serre_euler,
        "tame": report.tame,
        "error_term": report.error_term,
        "trace_table": report.trace_table,
        "trace_snc": report.trace_snc,
        "trace_monodromy": report.trace_monodromy,
        "holds": report.holds,
        "consistent": report.consistent,
    }
    lines = [f"{key} = {_fmt(values[key])}" for key in _REPORT_KEYS]
    for warning in report.warnings:
        lines.append(f"warning = {warning}")
    return "\n".join(lines)


def format_torsor_report(report: TorsorReport) -> str:
    lines = [
        f"jac_type = {report.jacobian_type}",
        f"p = {report.p}",
        f"m = {report.m}",
        f"serre_euler = {report.serre_euler}",
        f"error_term = {report.error_term}",
        f"scaled_smooth_chi = {report.scaled_smooth_chi}",
        f"holds = {_fmt(report.holds)}",
    ]
    for warning in report.warnings:
        lines.append(f"warning = {warning}")
    return "\n".join(lines)


def parse_report_file(text: str) -> dict:
    """Read back a ``key = value`` report emitted by format_report."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def report_from_parsed(values: dict) -> Report:
    """Reconstruct the Report fields torsor analysis needs."""
    try:
        type_ = KodairaType.parse(values["type"])
        p = int(values["p"])
        serre_euler = int(values["serre_euler"])
        e = int(values["error_term"])
    except KeyError as exc:
        raise ParseError(f"report file is missing key {exc}") from None
    if type_.kind == "I0":
        reduction = ReductionClass.GOOD
    elif type_.kind == "I":
        reduction = ReductionClass.MULTIPLICATIVE
    else:
        reduction = ReductionClass.ADDITIVE
    coeffs = {k: values.get(k, "") for k in ("a1", "a2", "a3", "a4", "a6")}
    return Report(
        field=values.get("field", ""),
        coefficients=coeffs,
        type=type_,
        v_delta_min=int(values.get("v_delta_min", 0)),
        n_components=int(values.get("n_components", 1)),
        reduction=reduction,
        p=p,
        serre_class=values.get("serre_class", ""),
        serre_euler=serre_euler,
        tame=values.get("tame", "true") == "true",
        error_term=e,
        trace_table=int(values.get("trace_table", serre_euler + e)),
        trace_snc=int(values.get("trace_snc", serre_euler + e)),
        trace_monodromy=int(values.get("trace_monodromy", 0)),
        holds=values.get("holds", "true") == "true",
        consistent=values.get("consistent", "true") == "true",
    )


# ---- corpus runs ---------------------------------------------------------------

@dataclass(frozen=True)
class CorpusSummary:
    reports: tuple
    type_counts: dict
    holds_count: int
    fails_count: int
    consistency_failures: int

    @property
    def total(self) -> int:
        return len(self.reports)


def parse_corpus_line(line: str, lineno: int) -> WeierstrassModel:
    parts = [part.strip() for part in line.split(";")]
    if len(parts) != 6:
        raise ParseError(
            f"line {lineno}: expected '<fieldspec>;a1;a2;a3;a4;a6', got {len(parts)} fields"
        )
    try:
        return WeierstrassModel.from_literals(*parts)
    except Exception as exc:
        raise ParseError(f"line {lineno}: {exc}") from None


def corpus_run(text: str) -> CorpusSummary:
    """Analyze every curve in a corpus file; deterministic input ordering."""
    reports = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        model = parse_corpus_line(line, lineno)
        reports.append(analyze(model))
    type_counts = {}
    for report in reports:
        key = str(report.type)
        type_counts[key] = type_counts.get(key, 0) + 1
    holds = sum(report.holds for report in reports)
    inconsistent = sum(not report.consistent for report in reports)
    return CorpusSummary(
        reports=tuple(reports),
        type_counts=dict(sorted(type_counts.items())),
        holds_count=holds,
        fails_count=len(reports) - holds,
        consistency_failures=inconsistent,
    )


def format_corpus_summary(summary: CorpusSummary) -> str:
    lines = []
    for index, report in enumerate(summary.reports, start=1):
        lines.append(f"# curve {index}")
        lines.append(format_report(report))
        lines.append("")
    lines.append("# summary")
    lines.append(f"curves = {summary.total}")
    lines.append(
        "types = " + ",".join(f"{k}:{v}" for k, v in summary.type_counts.items())
    )
    lines.append(f"holds = {summary.holds_count}")
    lines.append(f"fails = {summary.fails_count}")
    lines.append(f"consistency_failures = {summary.consistency_failures}")
    return "\n".join(lines)
