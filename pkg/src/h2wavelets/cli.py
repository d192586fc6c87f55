"""Command-line front end.

Exit codes: 0 success / check passed, 1 check failed, 2 usage or input
error.  All rational arguments are coefficients of pi (``3/2`` is
``3pi/2``).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .characterize import classify, verify_wavelet
from .constructions import (
    DEFAULT_DEPTH,
    in_kxy_triangle,
    k_xy_pieces,
    kr_eps_tail_defect,
    make_K_r,
    make_K_r_eps,
    make_K_rk,
    make_K_xy,
    shannon_set,
)
from .errors import DomainError, ParameterError
from .exact import as_fraction
from .numeric import gram, origin_probe, sample_time
from .serialize import (
    FormatError,
    dumps,
    interval_set_doc,
    load_doc,
    parse_interval_set,
    parse_step_function,
    step_function_doc,
)
from .step_wavelet import StepFunction, make_psi_0, make_psi_r
from .tiling import dilation_equivalent, is_wavelet_set, tiling_report, tau_profile, translation_equivalent

FAMILIES = ("krk", "kr", "kxy", "kreps", "shannon")


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    params: dict
    artifact_version: str = __version__
    outputs: list[str] = field(default_factory=list)


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(t) for t in text.split(",") if t.strip()]


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} needs --" + ", --".join(missing))


# construct -----------------------------------------------------------------

def cmd_construct(args) -> tuple[str, int]:
    family = args.family
    if family is None:
        raise UsageError("construct needs a family")
    params: dict = {"family": family}
    extra: dict = {}
    wavelet: StepFunction | None = None
    if family == "shannon":
        s = shannon_set()
    elif family == "kr":
        _require(args, "r")
        s = make_K_r(args.r).set
        wavelet = make_psi_r(args.r) if args.wavelet else None
        params["r"] = args.r
    elif family == "krk":
        _require(args, "r", "k")
        s = make_K_rk(args.r, args.k)
        params.update(r=args.r, k=args.k)
    elif family == "kxy":
        _require(args, "x", "y")
        s = make_K_xy(args.x, args.y)
        wavelet = make_psi_0(args.x, args.y) if args.wavelet else None
        params.update(x=str(args.x), y=str(args.y))
    else:
        _require(args, "r", "eps")
        depth = DEFAULT_DEPTH if args.depth is None else args.depth
        build = make_K_r_eps(args.r, args.eps, depth)
        s = build.set
        extra["certificate"] = build.to_json()
        params.update(r=args.r, eps=str(args.eps), depth=depth)
    if args.wavelet:
        f = wavelet if wavelet is not None else StepFunction.indicator(s)
        return dumps(step_function_doc(f, params=params)), 0
    return dumps(interval_set_doc(s, params=params, **extra)), 0


# verify / classify / equiv -------------------------------------------------

def _verify_target(args) -> tuple[str, str]:
    if args.set_path:
        return args.set_path, "set"
    if args.wavelet_path:
        return args.wavelet_path, "wavelet"
    if args.path is None:
        raise UsageError("verify needs an input file")
    if args.mode is not None:
        return args.path, args.mode
    kind = load_doc(args.path)["kind"]
    return args.path, "set" if kind == "interval_set" else "wavelet"


def cmd_verify(args) -> tuple[str, int]:
    path, mode = _verify_target(args)
    doc = load_doc(path)
    if mode == "set":
        check = is_wavelet_set(parse_interval_set(doc))
        out = {"mode": "set", **check.to_json()}
        return dumps(out), 0 if check.ok else 1
    verdict = verify_wavelet(parse_step_function(doc))
    return dumps({"mode": "wavelet", **verdict.to_json()}), 0 if verdict.ok else 1


def cmd_classify(args) -> tuple[str, int]:
    f = parse_step_function(load_doc(args.path))
    verdict = verify_wavelet(f)
    if not verdict.ok:
        return dumps({"error": "not a wavelet", "verdict": verdict.to_json()}), 1
    return dumps(classify(f, verdict).to_json()), 0


def cmd_equiv(args) -> tuple[str, int]:
    a = parse_interval_set(load_doc(args.a))
    b = parse_interval_set(load_doc(args.b))
    out: dict = {}
    ok = True
    if args.kind in ("translation", "both"):
        res = translation_equivalent(a, b)
        out["translation"] = {"equivalent": res.equivalent, "witness": res.witness.to_json() if res.witness else None}
        ok &= res.equivalent
    if args.kind in ("dilation", "both"):
        res = dilation_equivalent(a, b)
        out["dilation"] = {"equivalent": res.equivalent, "witness": res.witness.to_json() if res.witness else None}
        ok &= res.equivalent
    return dumps(out), 0 if ok else 1


# numerics ------------------------------------------------------------------

def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_sample(args) -> tuple[str, int]:
    f = parse_step_function(load_doc(args.wavelet_path))
    rows = [(repr(s.x), repr(s.value.real), repr(s.value.imag)) for s in sample_time(f, args.xs)]
    return _csv(["x", "re", "im"], rows), 0


def cmd_gram(args) -> tuple[str, int]:
    f = parse_step_function(load_doc(args.wavelet_path))
    if args.jmin > args.jmax or args.kmin > args.kmax:
        raise UsageError("empty index range")
    report = gram(f, (args.jmin, args.jmax), (args.kmin, args.kmax))
    return dumps(report.to_json()), 0


def cmd_probe(args) -> tuple[str, int]:
    s = parse_interval_set(load_doc(args.set_path))
    if any(d <= 0 for d in args.deltas):
        raise UsageError("deltas must be positive")
    result = [{"delta": str(d), "nonvanishing": hit} for d, hit in origin_probe(s, args.deltas)]
    return dumps(result), 0


# sweep ---------------------------------------------------------------------

def kxy_grid(n: int) -> list[tuple[Fraction, Fraction]]:
    """``n x n`` midpoint grid over the bounding box ``[1, 2] x [3/2, 2]``.

    The y offsets use denominator ``4n + 2``; a parity argument then keeps
    every grid point off the edges of the triangle, for every ``n``.
    """
    xs = [1 + Fraction(2 * i + 1, 2 * n) for i in range(n)]
    ys = [Fraction(3, 2) + Fraction(2 * j + 1, 4 * n + 2) for j in range(n)]
    return [(x, y) for x in xs for y in ys]


def _on_triangle_edge(x, y) -> bool:
    return x == y or x + 2 == 2 * y or x == 1 or y == 2


def sweep_kxy(n: int) -> list[tuple]:
    rows = []
    for x, y in kxy_grid(n):
        inside = in_kxy_triangle(x, y)
        # outside the triangle the five pieces overlap or reverse; count them
        # with multiplicity instead of letting a union hide the overlap
        check = is_wavelet_set(k_xy_pieces(x, y))
        region = "inside" if inside else ("edge" if _on_triangle_edge(x, y) else "outside")
        rows.append((
            str(x), str(y), region, "pass" if check.ok else "fail",
            str(check.translation.overlap_defect.coeff), str(check.translation.gap_defect.coeff),
            str(check.dilation.overlap_defect.coeff), str(check.dilation.gap_defect.coeff),
        ))
    return rows


def sweep_krk(r_max: int) -> list[tuple]:
    rows = []
    for r in range(1, r_max + 1):
        for k in range(1, 2 * (2**r - 1)):
            check = is_wavelet_set(make_K_rk(r, k))
            rows.append((r, k, "pass" if check.ok else "fail",
                         str(check.translation.overlap_defect.coeff), str(check.translation.gap_defect.coeff),
                         str(check.dilation.overlap_defect.coeff), str(check.dilation.gap_defect.coeff)))
    return rows


def sweep_kreps(r: int, eps: Fraction, depth_max: int) -> list[tuple]:
    rows = []
    k_r = make_K_r(r).set
    for depth in range(depth_max + 1):
        build = make_K_r_eps(r, eps, depth)
        rep = tiling_report(tau_profile(build.set))
        d_eq = dilation_equivalent(build.set, k_r).equivalent
        rows.append((depth, str(build.tail_defect.coeff), str(kr_eps_tail_defect(r, eps, depth).coeff),
                     str(rep.overlap_defect.coeff), str(rep.gap_defect.coeff), "yes" if d_eq else "no"))
    return rows


SWEEP_HEADERS = {
    "kxy": ["x", "y", "region", "result", "tau_overlap", "tau_gap", "d_overlap", "d_gap"],
    "krk": ["r", "k", "result", "tau_overlap", "tau_gap", "d_overlap", "d_gap"],
    "kreps": ["depth", "tail_defect", "closed_form", "tau_overlap", "tau_gap", "dilation_equivalent"],
}


def cmd_sweep(args) -> tuple[str, int]:
    if args.family == "kxy":
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        rows = sweep_kxy(args.n)
    elif args.family == "krk":
        if args.r_max < 1:
            raise UsageError("--r-max must be at least 1")
        rows = sweep_krk(args.r_max)
    else:
        if args.depth_max < 0:
            raise UsageError("--depth-max must be nonnegative")
        rows = sweep_kreps(args.r, args.eps, args.depth_max)
    return _csv(SWEEP_HEADERS[args.family], rows), 0


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed recorded in the run manifest")
    common.add_argument("--manifest", help="also write a run manifest to this path")

    parser = argparse.ArgumentParser(prog="h2wavelets", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a wavelet set")
    p.add_argument("family_pos", nargs="?", choices=FAMILIES, metavar="FAMILY")
    p.add_argument("--family", dest="family_opt", choices=FAMILIES)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=_rational)
    p.add_argument("--y", type=_rational)
    p.add_argument("--eps", type=_rational)
    p.add_argument("--depth", type=int)
    p.add_argument("--wavelet", action="store_true",
                   help="emit the step-function wavelet (psi_r for kr, psi_0 for kxy, indicator otherwise)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a wavelet set or a wavelet")
    p.add_argument("path", nargs="?")
    p.add_argument("--mode", choices=("set", "wavelet"))
    p.add_argument("--set", dest="set_path")
    p.add_argument("--wavelet", dest="wavelet_path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="equivalence class of a wavelet")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equiv", parents=[common], help="translation/dilation equivalence of two sets")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--kind", choices=("translation", "dilation", "both"), default="both")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("sample", parents=[common], help="time-domain samples as CSV")
    p.add_argument("--wavelet", dest="wavelet_path", required=True)
    p.add_argument("--xs", type=_float_list, required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix deviation from the identity")
    p.add_argument("--wavelet", dest="wavelet_path", required=True)
    p.add_argument("--jmin", type=int, default=-2)
    p.add_argument("--jmax", type=int, default=2)
    p.add_argument("--kmin", type=int, default=-3)
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("probe", parents=[common], help="support near the origin")
    p.add_argument("--set", dest="set_path", required=True)
    p.add_argument("--deltas", type=_rational_list, required=True)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("sweep", parents=[common], help="parameter sweep as CSV")
    p.add_argument("family", choices=("kxy", "krk", "kreps"))
    p.add_argument("--n", type=int, default=20, help="kxy grid resolution")
    p.add_argument("--r-max", type=int, default=6, help="krk: largest r")
    p.add_argument("--r", type=int, default=1, help="kreps: r")
    p.add_argument("--eps", type=_rational, default=Fraction(1, 4), help="kreps: epsilon")
    p.add_argument("--depth-max", type=int, default=DEFAULT_DEPTH, help="kreps: largest depth")
    p.set_defaults(func=cmd_sweep)
    return parser


def _plain(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, list):
        return [_plain(x) for x in v]
    return v


def _params(args) -> dict:
    skip = {"func", "command", "json", "out", "manifest"}
    return {k: _plain(v) for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        if args.family_pos and args.family_opt and args.family_pos != args.family_opt:
            parser.error("conflicting family arguments")
        args.family = args.family_pos or args.family_opt
    try:
        text, code = args.func(args)
    except (ParameterError, DomainError, FormatError, UsageError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 2
    outputs = []
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        outputs.append(args.out)
    else:
        sys.stdout.write(text)
    if args.manifest:
        manifest = RunManifest(args.command, _params(args), outputs=outputs)
        with open(args.manifest, "w") as fh:
            fh.write(dumps(asdict(manifest)))
    return code


if __name__ == "__main__":
    sys.exit(main())
