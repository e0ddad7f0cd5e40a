"""Command-line front end: one subcommand per toolkit surface, CSV out.

All numeric output uses 17 significant digits and Unix newlines, so values
round-trip exactly through text. Exit codes: 0 success, 2 usage/config
error, 3 numerical failure (the structured error name goes to stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from .asymptotics import fit_contact, irrational_slope, slopes
from .errors import TongueLabError
from .families import FamilySpec, ParamPoint
from .guided import degree_check
from .raster import RasterConfig, render
from .rotation import semiconjugacy_profile, staircase, trans_enclosure
from .series import guide_series, parabolic_data, width_coefficient
from .tongue import TongueSample, boundary_at, trace_boundary

SUBCOMMANDS = ("trans", "staircase", "boundary", "trace", "slopes", "width-fit",
               "series", "parabolic", "degree-check", "render", "profile")


def _fmt(v) -> str:
    return "%.17g" % v


def _emit(opt, lines) -> None:
    text = "\n".join(lines) + "\n"
    out = opt.get("out")
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_from(opt) -> FamilySpec:
    rec = {}
    fam = opt.get("family")
    if isinstance(fam, dict):
        rec.update(fam)
    elif fam is not None:
        rec["kind"] = fam
    if opt.get("fourier") is not None:
        val = opt["fourier"]
        if isinstance(val, str):
            val = json.loads(val)
        rec["fourier"] = val
    if opt.get("angle_terms") is not None:
        rec["angle_terms"] = int(opt["angle_terms"])
    rec.setdefault("kind", "standard")
    return FamilySpec.from_config(rec)


def _require(opt, *names):
    for name in names:
        if opt.get(name) is None:
            raise ValueError(f"missing required option --{name.replace('_', '-')}")
    return [opt[name] for name in names]


def _apply_threads(opt) -> None:
    threads = opt.get("threads")
    if threads is None:
        threads = os.environ.get("TONGUE_LAB_THREADS")
    if threads is None:
        return
    threads = int(threads)
    if threads < 1:
        raise ValueError("--threads must be >= 1")
    import numba

    numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))


# -- subcommand handlers ----------------------------------------------------

def _cmd_trans(opt):
    fam = _family_from(opt)
    t, a = _require(opt, "t", "a")
    n = int(opt.get("n") or 100000)
    enc = trans_enclosure(fam, ParamPoint(float(t), float(a)), n)
    est = 0.5 * (enc.lo + enc.hi)
    _emit(opt, ["lo,hi,estimate,iterations",
                f"{_fmt(enc.lo)},{_fmt(enc.hi)},{_fmt(est)},{enc.iterations}"])
    return 0


def _cmd_staircase(opt):
    fam = _family_from(opt)
    a, t_lo, t_hi = _require(opt, "a", "t_lo", "t_hi")
    steps = int(opt.get("steps") or 1000)
    n = int(opt.get("n") or 100000)
    rows = staircase(fam, float(a), float(t_lo), float(t_hi), steps, n)
    _emit(opt, ["t,trans"] + [f"{_fmt(t)},{_fmt(v)}" for t, v in rows])
    return 0


def _cmd_boundary(opt):
    fam = _family_from(opt)
    p, q, a = _require(opt, "p", "q", "a")
    s = boundary_at(fam, int(p), int(q), float(a))
    _emit(opt, ["p,q,a,t_left,t_right,x_left,x_right,width",
                f"{s.p},{s.q},{_fmt(s.a)},{_fmt(s.t_left)},{_fmt(s.t_right)},"
                f"{_fmt(s.x_left)},{_fmt(s.x_right)},{_fmt(s.width)}"])
    return 0


def _cmd_trace(opt):
    fam = _family_from(opt)
    p, q, a_values = _require(opt, "p", "q", "a_values")
    if isinstance(a_values, str):
        a_values = [float(v) for v in a_values.split(",") if v.strip()]
    rows = trace_boundary(fam, int(p), int(q), a_values)
    _emit(opt, ["a,t_left,t_right,width"] +
          [f"{_fmt(s.a)},{_fmt(s.t_left)},{_fmt(s.t_right)},{_fmt(s.width)}"
           for s in rows])
    return 0


def _cmd_slopes(opt):
    fam = _family_from(opt)
    p, q = _require(opt, "p", "q")
    r = slopes(fam, int(p), int(q))
    _emit(opt, ["p,q,M_A,m_A,mean_phi,slope_minus,slope_plus,angle_geometric,"
                "angle_paper,irrational_slope",
                f"{r.p},{r.q},{_fmt(r.M_A)},{_fmt(r.m_A)},{_fmt(r.mean_phi)},"
                f"{_fmt(r.slope_minus)},{_fmt(r.slope_plus)},"
                f"{_fmt(r.angle_geometric)},{_fmt(r.angle_paper)},"
                f"{_fmt(irrational_slope(fam))}"])
    return 0


def _cmd_width_fit(opt):
    (path,) = _require(opt, "input")
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", newline="") as fh:
            text = fh.read()
    samples = []
    for row in csv.DictReader(io.StringIO(text)):
        a = float(row["a"])
        width = float(row["width"])
        t_left = float(row.get("t_left", "nan"))
        t_right = float(row.get("t_right", "nan"))
        samples.append(TongueSample(p=0, q=1, a=a, t_left=t_left, t_right=t_right,
                                    x_left=math.nan, x_right=math.nan, width=width))
    fit = fit_contact(samples)
    if opt.get("csv_out"):
        with open(opt["csv_out"], "w", newline="") as fh:
            fh.write("a,width,log_a,log_width\n")
            for s in samples:
                if s.a != 0.0 and s.width > 0.0:
                    fh.write(f"{_fmt(s.a)},{_fmt(s.width)},"
                             f"{_fmt(math.log(abs(s.a)))},{_fmt(math.log(s.width))}\n")
    _emit(opt, ["exponent,coefficient,residual,samples_used",
                f"{_fmt(fit.exponent)},{_fmt(fit.coefficient)},"
                f"{_fmt(fit.residual)},{fit.samples_used}"])
    return 0


def _cmd_series(opt):
    p, q = _require(opt, "p", "q")
    guide = opt.get("guide") or "standard"
    order = int(opt.get("order") or 32)
    s = guide_series(guide, int(p), int(q), order)
    _emit(opt, ["k,re,im"] +
          [f"{k},{_fmt(c.real)},{_fmt(c.imag)}" for k, c in enumerate(s.coeffs)])
    return 0


def _cmd_parabolic(opt):
    p, q = _require(opt, "p", "q")
    guide = opt.get("guide") or "standard"
    order = int(opt.get("order") or 32)
    pd = parabolic_data(guide_series(guide, int(p), int(q), order), int(q))
    wc = width_coefficient(pd) if pd.nu == 1 else math.nan
    _emit(opt, ["p,q,multiplier_re,multiplier_im,nu,C_re,C_im,leading_index,"
                "width_coefficient",
                f"{pd.p},{pd.q},{_fmt(pd.multiplier.real)},{_fmt(pd.multiplier.imag)},"
                f"{pd.nu},{_fmt(pd.C.real)},{_fmt(pd.C.imag)},{pd.leading_index},"
                f"{_fmt(wc)}"])
    return 0


def _cmd_degree_check(opt):
    fam = _family_from(opt)
    (n,) = _require(opt, "n")
    t = float(opt.get("t") or 0.0)
    tol = float(opt.get("tol") or 1e-6)
    kw = {}
    if opt.get("k_max") is not None:
        kw["k_max"] = int(opt["k_max"])
    rep = degree_check(fam, t, int(n), tol, **kw)
    lines = ["k,|c_k|"]
    lines += [f"{int(k)},{_fmt(abs(c))}" for k, c in zip(rep.ks, rep.coeffs)]
    lines.append(f"# degree_bound_satisfied={str(rep.degree_bound_satisfied).lower()} "
                 f"worst_k={rep.worst_violation[0]} "
                 f"worst_magnitude={_fmt(rep.worst_violation[1])}")
    _emit(opt, lines)
    return 0


def _cmd_render(opt):
    fam = _family_from(opt)
    mode, t_lo, t_hi, a_lo, a_hi, out = _require(
        opt, "mode", "t_lo", "t_hi", "a_lo", "a_hi", "out")
    width = int(opt.get("width") or 800)
    height = int(opt.get("height") or 400)
    n = int(opt.get("n") or 30000)
    tongues = ()
    if opt.get("tongues"):
        raw = opt["tongues"]
        if isinstance(raw, str):
            raw = [part for part in raw.split(",") if part.strip()]
        parsed = []
        for item in raw:
            if isinstance(item, str):
                num, den = item.split("/")
                parsed.append((int(num), int(den)))
            else:
                parsed.append((int(item[0]), int(item[1])))
        tongues = tuple(parsed)
    cfg = RasterConfig(fam, (float(t_lo), float(t_hi)), (float(a_lo), float(a_hi)),
                       width, height, n, str(mode), tongues)
    data = render(cfg)
    with open(out, "wb") as fh:
        fh.write(data)
    return 0


def _cmd_profile(opt):
    fam = _family_from(opt)
    t, a = _require(opt, "t", "a")
    N = int(opt.get("big_n") or 2000)
    grid = int(opt.get("grid") or 256)
    rows = semiconjugacy_profile(fam, ParamPoint(float(t), float(a)), N, grid)
    _emit(opt, ["x,phi"] + [f"{_fmt(x)},{_fmt(v)}" for x, v in rows])
    return 0


_HANDLERS = {
    "trans": _cmd_trans,
    "staircase": _cmd_staircase,
    "boundary": _cmd_boundary,
    "trace": _cmd_trace,
    "slopes": _cmd_slopes,
    "width-fit": _cmd_width_fit,
    "series": _cmd_series,
    "parabolic": _cmd_parabolic,
    "degree-check": _cmd_degree_check,
    "render": _cmd_render,
    "profile": _cmd_profile,
}


def _add_common(sp):
    sp.add_argument("--config", help="JSON file with option values; flags override")
    sp.add_argument("--family", help="family kind: standard|blaschke|angle|fourier")
    sp.add_argument("--fourier", help='JSON [[k, re, im], ...] for the fourier kind')
    sp.add_argument("--angle-terms", type=int, help="truncation for the angle kind")
    sp.add_argument("--threads", type=int,
                    help="thread cap (default: env TONGUE_LAB_THREADS, else serial)")
    sp.add_argument("--out", help="output path (default: stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tongue-lab",
        description="Translation numbers, tongue boundaries, and asymptotics "
                    "for two-parameter circle-lift families.")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("trans", help="certified enclosure of Trans(F_{t,a})")
    sp.add_argument("--t", type=float)
    sp.add_argument("--a", type=float)
    sp.add_argument("--n", type=int, help="orbit length (default 100000)")
    _add_common(sp)

    sp = subs.add_parser("staircase", help="devil's-staircase samples along t")
    sp.add_argument("--a", type=float)
    sp.add_argument("--t-lo", type=float)
    sp.add_argument("--t-hi", type=float)
    sp.add_argument("--steps", type=int)
    sp.add_argument("--n", type=int)
    _add_common(sp)

    sp = subs.add_parser("boundary", help="both boundary points of a tongue at one a")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--a", type=float)
    _add_common(sp)

    sp = subs.add_parser("trace", help="tongue boundaries along an a-ladder")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--a-values", help="comma-separated ascending a values")
    _add_common(sp)

    sp = subs.add_parser("slopes", help="first-order boundary slopes at a=0")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    _add_common(sp)

    sp = subs.add_parser("width-fit", help="power-law fit of widths from a trace CSV")
    sp.add_argument("--input", help="trace CSV path, or - for stdin")
    sp.add_argument("--csv-out", help="also write a,width,log_a,log_width rows here")
    _add_common(sp)

    sp = subs.add_parser("series", help="Taylor coefficients of a guiding map")
    sp.add_argument("--guide", choices=["standard", "blaschke"])
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--order", type=int)
    _add_common(sp)

    sp = subs.add_parser("parabolic", help="parabolic data of a guiding map at p/q")
    sp.add_argument("--guide", choices=["standard", "blaschke"])
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--order", type=int)
    _add_common(sp)

    sp = subs.add_parser("degree-check", help="Fourier degree bound for Xi_n")
    sp.add_argument("--t", type=float)
    sp.add_argument("--n", type=int, help="coefficient order (1..6)")
    sp.add_argument("--tol", type=float)
    sp.add_argument("--k-max", type=int)
    _add_common(sp)

    sp = subs.add_parser("render", help="raster image of the parameter plane")
    sp.add_argument("--mode", choices=["transgray", "tonguemask"])
    sp.add_argument("--t-lo", type=float)
    sp.add_argument("--t-hi", type=float)
    sp.add_argument("--a-lo", type=float)
    sp.add_argument("--a-hi", type=float)
    sp.add_argument("--width", type=int)
    sp.add_argument("--height", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--tongues", help='comma-separated p/q list, e.g. "0/1,1/2"')
    _add_common(sp)

    sp = subs.add_parser("profile", help="semiconjugacy averages Phi_N on [0,1]")
    sp.add_argument("--t", type=float)
    sp.add_argument("--a", type=float)
    sp.add_argument("--big-n", dest="big_n", type=int, help="number of averaged iterates")
    sp.add_argument("--grid", type=int)
    _add_common(sp)

    return parser


def run(argv) -> int:
    """Parse argv, dispatch, and map failures to exit codes (0/2/3)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    opt = vars(args)
    try:
        if opt.get("config"):
            with open(opt["config"]) as fh:
                overrides = json.load(fh)
            if not isinstance(overrides, dict):
                raise ValueError("config file must hold a JSON object")
            for key, value in overrides.items():
                dest = key.replace("-", "_")
                if opt.get(dest) is None:
                    opt[dest] = value
        _apply_threads(opt)
        return _HANDLERS[args.command](opt)
    except TongueLabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
