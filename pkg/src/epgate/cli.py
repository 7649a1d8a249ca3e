"""Command-line surface.

Subcommands:

* ``gen``       print one generated matrix (Hamiltonians at exact rational
                parameters, transition matrices, intertwiner and its core,
                binomial matrix, Jordan block),
* ``verify``    run exact identity checks over a dimension range,
* ``spectrum``  numeric spectra of one family over an exact parameter grid,
* ``scenario``  sample one exceptional-point crossing path,
* ``condition`` Frobenius condition estimates of the transition matrices.

Exit codes: 0 when everything requested passed, 1 when some exact check
failed, 2 on usage or domain errors.  Parameters are exact rationals
("3/4"); decimal shorthand is accepted only inside ``spectrum --grid`` and
is converted by exact base-10 parsing, so binary floats never touch the
exact layer.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import sqrt

from . import models, scenarios, serialize, spectra, verify
from .models import DimensionError, DomainError, ModelId, NonPositiveRadicand


class UsageError(ValueError):
    pass


def _parse_rational(text: str, allow_decimal: bool = False) -> Fraction:
    text = text.strip()
    if "." in text and not allow_decimal:
        raise UsageError(
            f"{text!r}: decimal parameters are only accepted in the "
            "spectrum grid; use an exact rational like 3/4")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{text!r} is not an exact rational")


def _parse_n_range(text: str) -> list[int]:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"{text!r} is not an N or N range like 2..6")


def _parse_grid(text: str) -> list[Fraction]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:step, got {text!r}")
    start, stop, step = (_parse_rational(p, allow_decimal=True) for p in parts)
    if step <= 0:
        raise UsageError("grid step must be positive")
    out = []
    v = start
    while v <= stop:
        out.append(v)
        v += step
    if not out:
        raise UsageError(f"grid {text!r} is empty")
    return out


def _parse_t_list(text: str) -> list[Fraction]:
    return [_parse_rational(p) for p in text.split(",") if p.strip()]


_GEN_BUILDERS = {
    "q-bh": lambda n, p: models.bh_transition(n),
    "q-ao": lambda n, p: models.ao_transition(n),
    "s-rc": lambda n, p: models.intertwiner(n),
    "r": lambda n, p: models.intertwiner_core(n),
    "pascal": lambda n, p: models.pascal_matrix(n),
    "jordan": lambda n, p: models.jordan_block(n, 0),
}


def _cmd_gen(args) -> int:
    if args.model == "bh":
        if getattr(args, "lambda_") is not None:
            raise UsageError("--lambda does not apply to the bh model")
        z = Fraction(1) if args.z is None else _parse_rational(args.z)
        matrix = models.bh_hamiltonian(args.N, z)
    elif args.model == "ao":
        if args.z is not None:
            raise UsageError("--z does not apply to the ao model")
        lam = (Fraction(0) if args.lambda_ is None
               else _parse_rational(args.lambda_))
        matrix = models.ao_hamiltonian(args.N, lam)
    else:
        if args.z is not None or args.lambda_ is not None:
            raise UsageError(f"--z/--lambda do not apply to {args.model}")
        matrix = _GEN_BUILDERS[args.model](args.N, None)
    serialize.emit(matrix, args.format, args.out)
    return 0


def _cmd_verify(args) -> int:
    n_values = _parse_n_range(args.N)
    if args.checks == "all":
        checks = None
    else:
        try:
            checks = [verify.CheckId(c.strip())
                      for c in args.checks.split(",") if c.strip()]
        except ValueError as exc:
            raise UsageError(str(exc))
    reports = verify.run_suite(n_values, checks,
                               literal_zero_ep=args.literal_zero_ep)
    serialize.emit(reports, args.format, args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_spectrum(args) -> int:
    model = ModelId(args.model)
    grid = _parse_grid(args.grid)
    reports = spectra.reality_scan(args.N, model, grid)
    if args.format == "json":
        payload = serialize.to_jsonable(reports)
        if model is ModelId.BH:
            for item, report in zip(payload, reports):
                item["exploratory_equidistant_deviation"] = \
                    _equidistant_deviation(report)
        text = json.dumps(payload, indent=2)
    else:
        blocks = []
        for report in reports:
            block = serialize.render_text(report)
            if model is ModelId.BH:
                block += ("\n  exploratory equidistant-pattern deviation: "
                          f"{_equidistant_deviation(report)!r}")
            blocks.append(block)
        text = "\n\n".join(blocks)
    _write(text, args.out)
    return 0


def _equidistant_deviation(report: spectra.SpectrumReport) -> float:
    """Max distance of the numeric roots from the evenly spaced ladder
    (N-1-2n)*sqrt(1-z^2).  Exploratory only: reported, never asserted."""
    n = report.N
    z = report.param
    unit = sqrt(max(1.0 - z * z, 0.0))
    ladder = sorted((n - 1 - 2 * k) * unit for k in range(n))
    roots = sorted(report.roots, key=lambda r: r.real)
    return max(abs(r - l) for r, l in zip(roots, ladder))


def _cmd_scenario(args) -> int:
    t_values = _parse_t_list(args.t)
    samples = scenarios.sample_path(args.row, args.N, t_values)
    serialize.emit(samples, args.format, args.out)
    return 0


def _cmd_condition(args) -> int:
    entries = spectra.condition_report(_parse_n_range(args.N))
    serialize.emit(entries, args.format, args.out)
    return 0


def _write(text: str, destination) -> None:
    if destination is None or destination == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(destination, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epgate",
        description="Exact exceptional-point model constructions and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("gen", help="generate one model matrix")
    p.add_argument("--model", required=True,
                   choices=("bh", "ao", "q-bh", "q-ao", "s-rc", "r",
                            "pascal", "jordan"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--z", default=None, help="bh parameter (exact rational)")
    p.add_argument("--lambda", dest="lambda_", default=None,
                   help="ao parameter (exact rational)")
    add_common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run exact identity checks")
    p.add_argument("--N", required=True, help="dimension or range, e.g. 2..6")
    p.add_argument("--checks", default="all",
                   help="comma list of check ids, or 'all'")
    p.add_argument("--literal-zero-ep", action="store_true",
                   help="read the scenario interface tables literally "
                        "(z = 0); fails by design")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectrum", help="numeric spectra over a parameter grid")
    p.add_argument("--model", required=True, choices=("bh", "ao"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--grid", required=True, help="start:stop:step rationals")
    add_common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("scenario", help="sample a crossing path")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--t", required=True, help="comma list of exact times")
    add_common(p)
    p.set_defaults(func=_cmd_scenario)

    p = sub.add_parser("condition", help="transition-matrix conditioning")
    p.add_argument("--N", required=True, help="dimension or range, e.g. 2..12")
    add_common(p)
    p.set_defaults(func=_cmd_condition)

    return parser


_VALUE_FLAGS = ("--t", "--z", "--lambda", "--grid")


def _join_negative_values(argv: list[str]) -> list[str]:
    # "--t -1/4,0" would be read as a second flag; fold the value into
    # "--t=-1/4,0" so negative rationals pass through argparse
    out = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and \
                argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_negative_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except (UsageError, DomainError, DimensionError, NonPositiveRadicand,
            spectra.ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
