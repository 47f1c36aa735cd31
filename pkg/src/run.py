# -*- coding: utf-8 -*-

import argparse
import logging
import sys
from typing import List, Optional

from errors import AmaciError, InvalidParameters
from model import ScanFilter, ScanModel
from params_core import AciParams
from reports import analyze_report, evaluate_formula, tilings_report
from utils import configure_logging, dumps, error_payload, output_path, store_json

logger = logging.getLogger(__name__)


class Parser(argparse.ArgumentParser):
    """Argument errors become InvalidParameters so that they share exit code 1 and the JSON error document."""

    def error(self, message):
        raise InvalidParameters(message)


def build_parser() -> Parser:
    # shared by every subcommand so the flags may follow the positional arguments
    common = Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON document instead of a summary")
    common.add_argument("--quiet", action="store_true", help="only warnings on stderr, no progress bars")
    common.add_argument("--budget", type=int, default=None, help="node budget of the tiling search")
    common.add_argument("--permanent-cap", type=int, default=None, help="largest Z whose permanent is computed")
    common.add_argument("--workers", type=int, default=None, help="worker processes for scans and signed enumeration")

    parser = Parser(prog="amaci-wlp",
                    description="Weak Lefschetz property of monomial almost complete intersections in three variables.")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="full report for one sextuple")
    analyze.add_argument("params", type=int, nargs=6, metavar="N", help="a b c alpha beta gamma")
    analyze.add_argument("--char", type=int, action="append", default=None,
                         help="characteristic, 0 or a prime; may be repeated")
    analyze.add_argument("--no-oracle", action="store_true", help="skip the rank oracle on S/J")
    analyze.add_argument("--output", type=str, default=None,
                         help="also store the report in this file; a bare name goes to the reports directory")

    scan = commands.add_parser("scan", parents=[common], help="exhaustive search over a bounded parameter space")
    scan.add_argument("--min-s-plus-2", type=int, default=None)
    scan.add_argument("--max-s-plus-2", type=int, default=None)
    scan.add_argument("--type", type=int, choices=[2, 3], default=None, dest="cm_type")
    levels = scan.add_mutually_exclusive_group()
    levels.add_argument("--level", action="store_const", const=True, dest="level", default=None)
    levels.add_argument("--nonlevel", action="store_const", const=False, dest="level")
    scan.add_argument("--det-zero", action="store_true")
    scan.add_argument("--det-one", action="store_true")
    scan.add_argument("--det-equals", type=int, default=None, help="keep |det N| = n")
    scan.add_argument("--prime-divisor", type=int, default=None)
    scan.add_argument("--axis-central", action="store_true")
    scan.add_argument("--gravity-central", action="store_true")
    scan.add_argument("--max-multiplicity", type=int, default=None)
    scan.add_argument("--minimize", choices=["multiplicity"], default=None)
    scan.add_argument("--csv", type=str, default=None,
                      help="write the matching rows as CSV; a bare name goes to the scans directory")

    tilings = commands.add_parser("tilings", parents=[common], help="enumerate or draw the lozenge tilings of the region")
    tilings.add_argument("params", type=int, nargs=6, metavar="N", help="a b c alpha beta gamma")
    modes = tilings.add_mutually_exclusive_group(required=True)
    modes.add_argument("--count", action="store_const", const="count", dest="mode")
    modes.add_argument("--signed", action="store_const", const="signed", dest="mode")
    modes.add_argument("--list", action="store_const", const="list", dest="mode")
    modes.add_argument("--render", type=str, default=None, metavar="FILE")

    formula = commands.add_parser("formula", parents=[common], help="evaluate a closed formula")
    formula.add_argument("name", type=str)
    formula.add_argument("args", type=int, nargs="*")
    return parser


def _summary(args, payload: dict) -> str:
    if args.command == "formula":
        if "value" in payload:
            return str(payload["value"])
        if "factors" in payload:
            return payload["factors"]
        return dumps(payload)
    if args.command == "tilings":
        if "count" in payload:
            return payload["count"]
        if "enumeration" in payload:
            e = payload["enumeration"]
            buckets = " ".join(f"k={k}:{v}" for k, v in e["per_lambda_counts"].items())
            return f"signed {e['signed_total_paths']} unsigned {e['unsigned_total']} {buckets}".strip()
        if "render" in payload:
            return payload["render"]["path"]
        return "\n".join(" ".join(f"{r}-{c}" for r, c in t) for t in payload["tilings"])
    if args.command == "scan":
        return "\n".join(f"{','.join(map(str, r['params']))} multiplicity={r['multiplicity']} det_N={r['det_N']}"
                         for r in payload["matches"])
    lines = [f"params {','.join(map(str, payload['params']))}",
             f"h-vector {' '.join(map(str, payload['hilbert']['h_vector']))}",
             f"splitting {payload['splitting']['type']}"]
    if "determinants" in payload:
        lines.append(f"det N {payload['determinants']['det_N']} = {payload['determinants']['factorization']['text']}")
    for verdict in payload["verdicts"]:
        lines.append(f"WLP in characteristic {verdict['characteristic']}: {'holds' if verdict['wlp'] else 'fails'}")
    return "\n".join(lines)


def run_command(args) -> dict:
    if args.command == "analyze":
        payload = analyze_report(AciParams(*args.params), args.char or [0], args.permanent_cap,
                                 oracle=False if args.no_oracle else None)
        if args.output:
            store_json(payload, output_path(args.output, "reports"))
        return payload
    if args.command == "scan":
        scan_filter = ScanFilter(min_s_plus_2=args.min_s_plus_2, max_s_plus_2=args.max_s_plus_2,
                                 cm_type=args.cm_type, level=args.level, det_zero=args.det_zero,
                                 det_one=args.det_one, det_equals=args.det_equals,
                                 prime_divisor=args.prime_divisor, axis_central=args.axis_central,
                                 gravity_central=args.gravity_central, max_multiplicity=args.max_multiplicity,
                                 minimize=args.minimize)
        scan_model = ScanModel(scan_filter, workers=args.workers, quiet=args.quiet)
        records = scan_model.run_model()
        if args.csv:
            scan_model.to_csv(output_path(args.csv, "scans"))
        return {"visited": scan_model.visited, "matches": [r.to_dict() for r in records]}
    if args.command == "tilings":
        mode = "render" if args.render else args.mode
        render = output_path(args.render, "figures") if args.render else None
        return tilings_report(AciParams(*args.params), mode, args.budget, args.workers or 1, render)
    return evaluate_formula(args.name, args.args)


def main(argv: Optional[List[str]] = None) -> int:
    """

    :param argv: list of str arguments, defaults to the process arguments.
    :return: int exit code: 0 success, 1 invalid input, 2 budget exceeded, 3 invariant violation.
    """
    argv = sys.argv[1:] if argv is None else argv
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
        if args.quiet:
            configure_logging("WARNING")
        payload = run_command(args)
    except AmaciError as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(dumps(error_payload(exc)) + "\n")
        return exc.exit_code
    sys.stdout.write((dumps(payload) if args.json else _summary(args, payload)) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
