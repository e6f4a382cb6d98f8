from semiquant.backend.engine.algebra import Observable, Scalar
from semiquant.backend.engine.exprio import format_observable, format_scalar
from semiquant.backend.engine.nogo import NOGO_DIMS, NoGoReport, StepRecord, UnknownId, run_verification
from semiquant.backend.schemas import reports


def _monomial_text(m) -> str:
    return format_observable(Observable.from_monomial(m, NOGO_DIMS))


def _entry_label(u: UnknownId) -> str:
    return f"({_monomial_text(u.left)}, {_monomial_text(u.right)})"


def summarize_step(record: StepRecord) -> reports.StepSummary:
    certificate = None
    if record.certificate is not None:
        cert = record.certificate
        certificate = reports.CertificateModel(
            triple_class=cert.triple_class,
            triple=[_monomial_text(m) for m in cert.triple],
            monomial=_monomial_text(cert.monomial),
            witness_value=format_scalar(Scalar.of(cert.witness_value)),
            residual=format_observable(cert.residual),
        )
    return reports.StepSummary(
        step=record.step,
        pair_class=list(record.pair_class),
        unknowns=record.unknowns,
        expected_unknowns=record.expected_unknowns,
        determining_classes=list(record.determining_classes),
        check_class=record.check_class,
        determining_triples=record.determining_triples,
        check_triples=record.check_triples,
        equations=record.equations,
        rank=record.rank,
        determining_outcome=record.determining_outcome.value,
        outcome=record.outcome.value,
        as_predicted=record.as_predicted,
        matches_standard_hybrid=record.matches_standard_hybrid,
        assignment={
            _entry_label(u): format_scalar(v)
            for u, v in sorted(record.assignment.items(), key=lambda kv: kv[0].sort_key())
        },
        free=[_entry_label(u) for u in record.free],
        certificate=certificate,
    )


def summarize(report: NoGoReport) -> reports.NoGoReport:
    return reports.NoGoReport(
        steps=report.steps,
        unknown_counts=report.unknown_counts,
        verdict=report.verdict,
        records=[summarize_step(r) for r in report.records],
    )


def run_nogo(steps: int = 4) -> reports.NoGoReport:
    return summarize(run_verification(steps))
