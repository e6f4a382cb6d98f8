import argparse

from semiquant.backend.core.constants import TOOL_VERSION


def _output_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="json_out", metavar="PATH", help="also write the JSON report to PATH")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    return common


def _field_options() -> argparse.ArgumentParser:
    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--m1sq", type=float, required=True)
    field.add_argument("--m2sq", type=float, required=True)
    field.add_argument("--g", type=float, default=0.0)
    field.add_argument("--hbar1", type=float, default=1.0)
    field.add_argument("--hbar2", type=float, default=1.0)
    return field


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiquant",
        description="Verifiers for hybrid quantum-classical bracket algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _output_options()

    bracket = sub.add_parser("bracket", parents=[common], help="evaluate a bracket and its defects")
    bracket.add_argument("a")
    bracket.add_argument("b")
    bracket.add_argument("--kind", default="s", choices=["q", "c", "s", "a"])
    bracket.add_argument("--jacobi", metavar="C", help="third argument for the Jacobi defect")
    bracket.add_argument("--leibniz", metavar="H", help="the Leibniz defect of (a*b, H)")
    bracket.add_argument("--dims", nargs=2, type=int, default=[1, 1], metavar=("NQ", "NC"))

    nogo = sub.add_parser("nogo", parents=[common], help="run the inductive no-go verification")
    nogo.add_argument("--steps", type=int, default=4, choices=[1, 2, 3, 4])

    field = sub.add_parser("field", help="two-field hybrid theory")
    field_sub = field.add_subparsers(dest="field_command", required=True)
    field_opts = _field_options()
    field_sub.add_parser("spectrum", parents=[common, field_opts], help="masses and residues")
    field_sub.add_parser("positivity", parents=[common, field_opts], help="reflection positivity verdict")
    simulate = field_sub.add_parser("simulate", parents=[common, field_opts], help="mode-wise Langevin sampling")
    grid = simulate.add_mutually_exclusive_group()
    grid.add_argument("--k2", type=float, nargs="+", help="k^2 grid values")
    grid.add_argument("--grid-file", help="file with one k^2 value per line")
    simulate.add_argument("--seed", type=int)
    simulate.add_argument("--dtau", type=float)
    simulate.add_argument("--n-steps", type=int)
    simulate.add_argument("--n-burnin", type=int)
    simulate.add_argument("--workers", type=int)
    simulate.add_argument("--bias", action="store_true", help="also rerun at dtau/2 and report the difference")

    planewave = sub.add_parser("planewave-check", parents=[common], help="plane-wave Jacobi and postulate checks")
    planewave.add_argument("--h", type=float, nargs="+", dest="h_grid", help="sine-family parameters to scan")
    planewave.add_argument("--samples", type=int, default=1000)
    planewave.add_argument("--seed", type=int)

    schema = sub.add_parser("schema", help="print the report JSON schema")
    schema.add_argument("--out", metavar="PATH", help="write the schema to PATH instead of stdout")

    serve = sub.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int)

    return parser
