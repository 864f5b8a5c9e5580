"""``conley-kit`` command line.

Exit status: 0 success, 1 usage or input error, 2 no admissible connection
matrix, 3 variable budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .chain_complex import NotAComplex, from_cw, homology
from .io import (
    FormatError,
    complex_from_json,
    load_json,
    report_to_dot,
    report_to_json,
    report_to_text,
    scenario_from_json,
    scenario_to_json,
    ses_from_json,
)
from .morse import validate
from .scenarios import generate
from .solver import SolverOptions, VariableBudgetExceeded, solve
from .zigzag import check_exactness, connecting_homomorphism, long_exact_sequence, validate_ses

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_ADMISSIBLE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    format: str = "text"
    max_vars: int = 24
    no_symmetry: bool = False
    list_admissible: bool = False

    def __post_init__(self):
        if self.format == "dot" and self.command != "connect":
            raise UsageError("--format dot is only available for 'connect'")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conley-kit", description="Homology, zig-zag maps and connection matrices over GF(2).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("homology", help="Betti numbers of a CW complex file")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("zigzag", help="connecting homomorphisms of a short exact sequence file")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("connect", help="enumerate connection matrices of a scenario file")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--max-vars", type=int, default=24)
    p.add_argument("--no-symmetry", action="store_true", help="ignore declared symmetry pairs")
    p.add_argument("--list-admissible", action="store_true")

    p = sub.add_parser("scenario", help="generate bundled scenarios")
    scen = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    g = scen.add_parser("gen", help="write a scenario as JSON")
    g.add_argument("name", choices=["delay", "chafee-infante"])
    g.add_argument("--n", type=int, default=1, help="number of pitchfork bifurcations (chafee-infante)")
    g.add_argument("--no-symmetry", action="store_true")
    g.add_argument("-o", "--output", help="output file (default: stdout)")
    return parser


def cmd_homology(path: str, fmt: str = "text") -> tuple[int, str]:
    cw = complex_from_json(load_json(path))
    hom = homology(from_cw(cw))
    top = max(cw.dimension, 0)
    betti = [hom.betti[k] for k in range(top + 1)]
    if fmt == "json":
        return EXIT_OK, json.dumps({"betti": {str(k): b for k, b in enumerate(betti)}}) + "\n"
    return EXIT_OK, " ".join(f"H_{k}={b}" for k, b in enumerate(betti)) + "\n"


def cmd_zigzag(path: str, fmt: str = "text") -> tuple[int, str]:
    ses = ses_from_json(load_json(path))
    verdict = validate_ses(ses)
    if not verdict:
        raise FormatError(f"{path}: not a short exact sequence ({verdict})")
    maps = {k: connecting_homomorphism(ses, k) for k in range(1, ses.top_degree + 1)}
    exact = check_exactness(long_exact_sequence(ses))
    if fmt == "json":
        doc = {
            "connecting": {str(k): {"shape": list(m.shape), "rows": m.to_rows()} for k, m in maps.items()},
            "exact": exact.exact,
        }
        return EXIT_OK, json.dumps(doc) + "\n"
    lines = ["ses: valid"]
    for k, m in maps.items():
        body = m.to_rows() if m.nrows and m.ncols else f"{m.nrows}x{m.ncols} (empty)"
        lines.append(f"delta_{k}: H_{k}(c) -> H_{k - 1}(a) = {body}")
    lines.append(f"long exact sequence: {'exact' if exact else 'NOT exact'}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_connect(config: RunConfig) -> tuple[int, str]:
    d, constraints = scenario_from_json(load_json(config.input))
    check = validate(d)
    if not check:
        raise FormatError(f"{config.input}: invalid Morse decomposition: " + "; ".join(check.errors))
    options = SolverOptions(max_vars=config.max_vars, use_symmetry=not config.no_symmetry)
    report = solve(d, constraints, options)
    if config.format == "json":
        out = json.dumps(report_to_json(report), indent=2) + "\n"
    elif config.format == "dot":
        out = report_to_dot(report)
    else:
        out = report_to_text(report, list_admissible=config.list_admissible)
    return (EXIT_NO_ADMISSIBLE if report.inconsistent else EXIT_OK), out


def cmd_scenario(name: str, n: int = 1, with_symmetry: bool = True) -> str:
    if name == "chafee-infante":
        d, constraints = generate(name, n=n, with_symmetry=with_symmetry)
    else:
        d, constraints = generate(name)
    return json.dumps(scenario_to_json(d, constraints), indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "homology":
            code, out = cmd_homology(args.file, args.format)
        elif args.command == "zigzag":
            code, out = cmd_zigzag(args.file, args.format)
        elif args.command == "connect":
            config = RunConfig(
                command="connect",
                input=args.file,
                format=args.format,
                max_vars=args.max_vars,
                no_symmetry=args.no_symmetry,
                list_admissible=args.list_admissible,
            )
            code, out = cmd_connect(config)
        else:
            if args.n < 0:
                raise UsageError(f"--n must be non-negative, got {args.n}")
            out = cmd_scenario(args.name, args.n, not args.no_symmetry)
            code = EXIT_OK
            if args.output:
                Path(args.output).write_text(out)
                out = ""
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except (FormatError, NotAComplex) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VariableBudgetExceeded as exc:
        print(f"error: {exc.count} free unknowns exceed --max-vars {exc.max_vars}; "
              f"rerun with --max-vars {exc.count} or more", file=sys.stderr)
        return EXIT_BUDGET
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
