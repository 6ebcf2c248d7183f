"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain or
envelope error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .errors import DomainError
from .minkowski import dispersion
from .observables import longitudinal_density, moments_quadrature, parton_summary, second_moments
from .oscillator import OscillatorState, SampledField, grid_axis, sample_psi
from .spectral import sample_phi
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _grid(text: str) -> tuple[int, int]:
    try:
        w, h = (int(p) for p in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like WxH, got {text!r}") from None
    if w < 2 or h < 2:
        raise argparse.ArgumentTypeError("grid needs at least 2 points per axis")
    return w, h


def _json_safe(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def _dump(obj) -> str:
    return json.dumps(_json_safe(obj), indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    suite = args.suite_opt or args.suite or "all"
    ok = True
    for report in run_suite(suite):
        ok &= report.passed
        sys.stdout.write(json.dumps(report.to_dict()) + "\n")
        sys.stdout.flush()
    return EXIT_OK if ok else EXIT_FAILED


def cmd_wavefunction(args) -> int:
    eta = args.eta
    extent = args.range if args.range is not None else 4.0 * math.exp(abs(eta))
    if args.momentum:
        field = sample_phi(eta, extent, args.grid, n=args.n)
    else:
        field = sample_psi(OscillatorState(args.n, eta), extent, args.grid)
    _emit(field.to_csv(), args.out)
    return EXIT_OK


def cmd_density(args) -> int:
    extent = args.range if args.range is not None else 4.0 * math.sqrt(math.cosh(2 * args.eta))
    x = grid_axis(extent, args.points)
    rho = longitudinal_density(args.eta, args.axis, x)
    lines = ["x,rho\n"] + [f"{format(a, '.17g')},{format(r, '.17g')}\n" for a, r in zip(x, rho)]
    _emit("".join(lines), args.out)
    return EXIT_OK


def cmd_moments(args) -> int:
    rows = [
        {
            "eta": eta,
            "analytic": second_moments(eta).to_dict(),
            "quadrature": moments_quadrature(eta).to_dict(),
        }
        for eta in args.eta
    ]
    _emit(_dump(rows), args.out)
    return EXIT_OK


def cmd_parton(args) -> int:
    if args.eta is not None:
        summary = parton_summary(eta=args.eta)
    elif args.energy is not None and args.mass is not None:
        summary = parton_summary(energy=args.energy, mass=args.mass)
    else:
        raise _Usage("parton needs --eta or both --energy and --mass")
    _emit(_dump(summary.to_dict()), args.out)
    return EXIT_OK


def cmd_dispersion(args) -> int:
    d = dispersion(args.m, args.p)
    _emit(_dump({
        "mass": d.mass,
        "momentum": d.momentum,
        "energy": d.energy,
        "nonrelativistic": d.nonrelativistic,
        "ultrarelativistic": d.ultrarelativistic,
    }), args.out)
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wignerlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite, one JSON report per line")
    p.add_argument("suite", nargs="?", choices=SUITES + ("all",))
    p.add_argument("--suite", dest="suite_opt", choices=SUITES + ("all",))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wavefunction", help="sample psi (or phi with --momentum) to CSV")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--grid", type=_grid, default=(101, 101), metavar="WxH")
    p.add_argument("--range", type=float, default=None, metavar="R")
    p.add_argument("--momentum", action="store_true")
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("density", help="longitudinal ground-state density to CSV")
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--axis", choices=("z", "q_z"), default="z")
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--range", type=float, default=None, metavar="R")
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("moments", help="analytic and quadrature moment table as JSON")
    p.add_argument("--eta", type=float, nargs="+", default=[0.0])
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("parton", help="time-dilation ratio and widths of a fast hadron")
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--energy", type=float, default=None)
    p.add_argument("--mass", type=float, default=None)
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_parton)

    p = sub.add_parser("dispersion", help="Einstein energy and its two limits")
    p.add_argument("m", type=float)
    p.add_argument("p", type=float)
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_dispersion)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except DomainError as exc:
        print(f"wignerlab: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
