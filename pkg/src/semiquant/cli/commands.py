"""Command handlers. Each returns (exit code, report envelope or None) and prints the human summary."""
from __future__ import annotations

import sys
from argparse import Namespace
from typing import Optional, Tuple

from semiquant.backend.core.config import get_settings
from semiquant.backend.core.constants import EXIT_DEVIATION, EXIT_OK
from semiquant.backend.engine.hybridfield import FieldParams
from semiquant.backend.helpers.utils import read_k_grid
from semiquant.backend.schemas.reports import ReportEnvelope
from semiquant.backend.services.reports.bracket_service import evaluate_bracket
from semiquant.backend.services.reports.envelope import build_envelope
from semiquant.backend.services.reports.field_service import (
    default_sim_config,
    positivity_report,
    simulate_report,
    spectrum_report,
)
from semiquant.backend.services.reports.nogo_service import run_nogo
from semiquant.backend.services.reports.planewave_service import planewave_report

Outcome = Tuple[int, Optional[ReportEnvelope]]


def _echo(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def cmd_bracket(args: Namespace) -> Outcome:
    payload = evaluate_bracket(
        args.a, args.b, kind=args.kind, jacobi=args.jacobi, leibniz=args.leibniz, dims=tuple(args.dims)
    )
    _echo(payload.result)
    if payload.jacobi is not None:
        _echo(f"jacobi defect: {payload.jacobi.defect}")
    if payload.leibniz is not None:
        _echo(f"leibniz defect: {payload.leibniz.defect}")
    params = {"a": args.a, "b": args.b, "kind": args.kind, "jacobi": args.jacobi,
              "leibniz": args.leibniz, "dims": list(args.dims)}
    return EXIT_OK, build_envelope("bracket", params, payload)


def cmd_nogo(args: Namespace) -> Outcome:
    payload = run_nogo(args.steps)
    for record in payload.records:
        _echo(
            f"step {record.step} (M{record.pair_class[0]},M{record.pair_class[1]}): "
            f"{record.unknowns} unknowns, {record.outcome}"
            + ("" if record.as_predicted else "  [unexpected]")
        )
        if record.certificate is not None:
            cert = record.certificate
            _echo(f"  certificate {cert.triple_class} ({', '.join(cert.triple)}): {cert.residual}")
    _echo(f"unknown counts: {payload.unknown_counts}  verdict: {payload.verdict}")
    code = EXIT_OK if payload.verdict == "reproduced" else EXIT_DEVIATION
    return code, build_envelope("nogo", {"steps": args.steps}, payload)


def _field_params(args: Namespace) -> FieldParams:
    return FieldParams(m1sq=args.m1sq, m2sq=args.m2sq, g=args.g, hbar1=args.hbar1, hbar2=args.hbar2)


def cmd_field(args: Namespace) -> Outcome:
    params = _field_params(args)
    parameters = params.model_dump()
    command = f"field {args.field_command}"

    if args.field_command == "spectrum":
        payload = spectrum_report(params)
        s = payload.spectrum
        _echo(f"R={s.R:.12g} m+^2={s.mplussq:.12g} m-^2={s.mminussq:.12g} m3^2={s.m3sq:.12g}")
        for name in ("Qplus", "Qminus", "Q3"):
            _echo(f"{name} = {getattr(s, name)}")
        return EXIT_OK, build_envelope(command, parameters, payload)

    if args.field_command == "positivity":
        payload = positivity_report(params)
        pos = payload.positivity
        _echo(pos.verdict)
        if pos.witness_residue is not None:
            _echo(f"witness: {pos.witness_residue} eigenvalue {pos.witness_eigenvalue:.6g} "
                  f"vector {pos.witness_vector}")
        return EXIT_OK, build_envelope(command, parameters, payload)

    k_grid = read_k_grid(args.grid_file) if args.grid_file else args.k2
    cfg = default_sim_config(
        k_grid=k_grid,
        dtau=args.dtau,
        n_steps=args.n_steps,
        n_burnin=args.n_burnin,
        seed=args.seed,
        workers=args.workers,
    )
    payload = simulate_report(params, cfg, bias=args.bias)
    for mode in payload.simulation.modes:
        _echo(f"k^2={mode.ksq:g} z={['%.2f' % z for z in mode.z_scores]}")
    _echo(f"agreement: {payload.simulation.agreement:.3f}")
    # workers only changes scheduling, not the numbers
    parameters.update(cfg.model_dump(exclude={"workers"}))
    return EXIT_OK, build_envelope(command, parameters, payload)


def cmd_planewave(args: Namespace) -> Outcome:
    seed = args.seed if args.seed is not None else get_settings().seed
    payload = planewave_report(args.h_grid, n_samples=args.samples, seed=seed)
    for v in payload.violations:
        _echo(f"{v.f_kind}: max |jacobi residual| = {v.max_residual:.3e}")
    _echo(f"postulate scan: min max error {payload.min_max_error:.4f} ({payload.best_member})")

    by_kind = {v.f_kind: v.violated for v in payload.violations}
    reproduced = (
        payload.incompatible
        and by_kind.get("standard_s", False)
        and not by_kind.get("quantum_quantum", True)
        and not by_kind.get("linear", True)
    )
    parameters = {"h_grid": args.h_grid, "samples": args.samples, "seed": seed}
    return (EXIT_OK if reproduced else EXIT_DEVIATION), build_envelope("planewave-check", parameters, payload)
