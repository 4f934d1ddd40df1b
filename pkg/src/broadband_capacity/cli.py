"""Command-line front end: sweeps, profiles, reports, figure data, checks.

Subcommands
-----------
sweep    capacity factors over an eta grid -> CSV
         (columns model,quantity,eta,nbar,rho_t,y0,f,factor,error)
profile  occupation profile of one quantity -> CSV (columns x,n,clamped)
report   factors and absolute rates for physical inputs -> text table
figure   data behind one of the seven standard figures -> CSV files
verify   self-check suites; with --out also writes all figure data

All numeric CSV cells use %.10g formatting and rows are emitted in
deterministic order, so identical configurations produce byte-identical
files.  Flags override an optional key=value config file (--config); there
are no environment-variable knobs.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .broadband import (
    analytic_K,
    capacity_factor,
    capacity_report,
    q_alt_bound,
    rate_rc,
    solve_y0,
)
from .channels import (
    ChannelSpec,
    NoiseModel,
    PhysicalInputs,
    critical_temperature,
    thermal_ratio,
)
from .kernels import Quantity, kernel_ce, kernel_k, kernel_q
from .oracle import thermal_state, mutual_information, coherent_information, verify_no_squeezing
from .special import gamma_fn, lambda_fn
from .spectrum import analytic_occupation_k, occupation_solver

_FMT = "%.10g"
SWEEP_HEADER = "model,quantity,eta,nbar,rho_t,y0,f,factor,error"
PROFILE_HEADER = "x,n,clamped"
SCAN_HEADER = "lambda_diff,mutual_info_bits"

_SOLVED_QUANTITIES = (Quantity.CE, Quantity.C_LOWER, Quantity.Q_LOWER)


class CliError(Exception):
    pass


def _fmt(value):
    return _FMT % value


def _parse_eta_range(text):
    """'a:b:step' -> inclusive grid; a bare number -> one-point grid."""
    parts = text.split(":")
    if len(parts) == 1:
        return [_checked_eta(float(parts[0]))]
    if len(parts) != 3:
        raise CliError(f"bad eta range {text!r}, expected a:b:step or a single value")
    a, b, step = (float(p) for p in parts)
    if step <= 0.0:
        raise CliError(f"eta step must be > 0, got {step}")
    if b < a:
        raise CliError(f"bad eta range {text!r}: end before start")
    count = int(round((b - a) / step))
    grid = [a + i * step for i in range(count + 1)]
    grid = [x for x in grid if x <= b + 1e-12]
    return [_checked_eta(min(x, 1.0) if x <= 1.0 + 1e-12 else x) for x in grid]


def _checked_eta(eta):
    if not 0.0 <= eta <= 1.0:
        raise CliError(f"eta must be in [0, 1], got {eta}")
    return eta


def _build_spec(model, eta, nbar, rho):
    model = NoiseModel(model)
    if model is NoiseModel.LOSS:
        return ChannelSpec.loss(eta)
    if model is NoiseModel.WHITE:
        return ChannelSpec.white(eta, nbar)
    if model is NoiseModel.THERMAL:
        return ChannelSpec.thermal(eta, rho)
    return ChannelSpec.dephasing(eta)


def _expand_quantities(selection):
    if selection == "all":
        return ["ce", "c_lower", "q_lower", "q_alt"]
    return [selection]


def _solve_sweep_point(task):
    """(model, eta, nbar, rho, quantity) -> solved row dict.  Failures land
    in the row's error cell instead of propagating, so one bad grid point
    cannot take down a sweep (also keeps --jobs workers exception-free)."""
    model, eta, nbar, rho, quantity = task
    try:
        spec = _build_spec(model, eta, nbar, rho)
        sol = capacity_factor(Quantity(quantity), spec)
        return {
            "model": model,
            "quantity": quantity,
            "eta": eta,
            "nbar": spec.nbar,
            "rho_t": spec.rho_t,
            "y0": sol.y0,
            "f": sol.f_value,
            "factor": sol.factor,
            "error": "",
        }
    except Exception as exc:
        return {
            "model": model,
            "quantity": quantity,
            "eta": eta,
            "nbar": nbar,
            "rho_t": rho,
            "y0": math.nan,
            "f": math.nan,
            "factor": math.nan,
            "error": str(exc).replace(",", ";").replace("\n", " "),
        }


def sweep_rows(model, etas, nbar, rho, quantities, jobs=1):
    """Solved sweep rows in deterministic (quantity, eta) order.

    The derived 'q_alt' quantity is assembled from the 'ce' solution at the
    same eta rather than re-solved.
    """
    base = [q for q in quantities if q != "q_alt"]
    need_ce = "q_alt" in quantities and "ce" not in base
    solved_quantities = base + (["ce"] if need_ce else [])
    tasks = [(model, eta, nbar, rho, q) for q in solved_quantities for eta in etas]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            solved = list(pool.map(_solve_sweep_point, tasks))
    else:
        solved = [_solve_sweep_point(task) for task in tasks]
    results = {(task[4], task[1]): row for task, row in zip(tasks, solved)}
    rows = []
    for quantity in quantities:
        for eta in etas:
            row = dict(results[("ce", eta) if quantity == "q_alt" else (quantity, eta)])
            if quantity == "q_alt":
                row["quantity"] = "q_alt"
                if not row["error"]:
                    row["factor"] = q_alt_bound(row["factor"])
            rows.append(row)
    return rows


def _write_sweep_csv(path, rows):
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r["model"],
                    r["quantity"],
                    _fmt(r["eta"]),
                    _fmt(r["nbar"]),
                    _fmt(r["rho_t"]),
                    _fmt(r["y0"]),
                    _fmt(r["f"]),
                    _fmt(r["factor"]),
                    r["error"],
                ]
            )
        )
    Path(path).write_text("\n".join(lines) + "\n")


def profile_rows(model, eta, nbar, rho, quantity, points, xmax):
    spec = _build_spec(model, eta, nbar, rho)
    quantity = Quantity(quantity)
    y0 = solve_y0(quantity, spec)
    solve = occupation_solver(quantity, spec, y0)
    rows = []
    for i in range(1, points + 1):
        x = xmax * i / points
        pt = solve(x)
        rows.append((x, pt.n, 1 if pt.clamped else 0))
    return rows


def _write_profile_csv(path, rows):
    lines = [PROFILE_HEADER]
    for x, n, clamped in rows:
        lines.append(f"{_fmt(x)},{_fmt(n)},{clamped}")
    Path(path).write_text("\n".join(lines) + "\n")


def _write_scan_csv(path, scan):
    lines = [SCAN_HEADER]
    for d, v in zip(scan.diffs, scan.mutual_bits):
        lines.append(f"{_fmt(d)},{_fmt(v)}")
    Path(path).write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# figure data

def _eta_grid(points, lo=0.1, hi=1.0):
    if points < 2:
        raise CliError(f"need at least 2 grid points, got {points}")
    return [lo + (hi - lo) * i / (points - 1) for i in range(points)]


def write_figure_data(fig, out_dir, points=9, jobs=1):
    """CSV data behind one standard figure; returns the files written.

    fig1  loss factors vs eta (fixed 0:1:0.05 grid)
    fig2  white-noise factors vs eta for nbar in {0.1, 1, 10}
    fig3  white-noise occupation profiles (eta=0.8, nbar=1)
    fig4  thermal factors vs eta for rho_t in {0.41, 1.5}
    fig5  thermal occupation profiles (eta=0.8, rho_t=0.41)
    fig6  dephasing factors vs eta (fixed 0:1:0.05 grid)
    fig7  mutual information vs eigenvalue splitting (nbar=0.1, eta=0.8)
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    all_q = ["ce", "c_lower", "q_lower", "q_alt"]
    written = []

    if fig == "fig1":
        etas = [i * 0.05 for i in range(21)]
        rows = sweep_rows("loss", etas, 0.0, 0.0, all_q, jobs)
        path = out / "fig1.csv"
        _write_sweep_csv(path, rows)
        written.append(path)
    elif fig == "fig2":
        rows = []
        for nbar in (0.1, 1.0, 10.0):
            rows += sweep_rows("white", _eta_grid(points), nbar, 0.0, all_q, jobs)
        path = out / "fig2.csv"
        _write_sweep_csv(path, rows)
        written.append(path)
    elif fig == "fig3":
        for quantity in _SOLVED_QUANTITIES:
            path = out / f"fig3_{quantity.value}.csv"
            _write_profile_csv(path, profile_rows("white", 0.8, 1.0, 0.0, quantity, 200, 8.0))
            written.append(path)
    elif fig == "fig4":
        rows = []
        for rho in (0.41, 1.5):
            rows += sweep_rows("thermal", _eta_grid(points), 0.0, rho, all_q, jobs)
        path = out / "fig4.csv"
        _write_sweep_csv(path, rows)
        written.append(path)
    elif fig == "fig5":
        for quantity in _SOLVED_QUANTITIES:
            path = out / f"fig5_{quantity.value}.csv"
            _write_profile_csv(path, profile_rows("thermal", 0.8, 0.0, 0.41, quantity, 200, 8.0))
            written.append(path)
    elif fig == "fig6":
        etas = [i * 0.05 for i in range(21)]
        rows = sweep_rows("dephasing", etas, 0.0, 0.0, all_q, jobs)
        path = out / "fig6.csv"
        _write_sweep_csv(path, rows)
        written.append(path)
    elif fig == "fig7":
        for n in (0.5, 1.0, 2.0):
            scan = verify_no_squeezing(n, 0.1, 0.8, 101)
            path = out / f"fig7_sum{_fmt(2 * n + 1)}.csv"
            _write_scan_csv(path, scan)
            written.append(path)
    else:
        raise CliError(f"unknown figure {fig!r} (expected fig1..fig7)")
    return written


# ---------------------------------------------------------------------------
# verify suites

def _suite_special(report):
    ok = True
    ok &= report("gamma at infinity", gamma_fn(math.inf), math.pi**2 / 6.0, 1e-8)
    ok &= report("lambda at 1", lambda_fn(1.0), math.pi**2 / 3.0, 1e-6)
    from .broadband import f_integral

    for eta in (0.25, 0.5, 1.0):
        ok &= report(
            f"loss energy integral eta={eta}",
            f_integral(Quantity.C_LOWER, ChannelSpec.loss(eta)),
            eta * math.pi**2 / 6.0,
            1e-6,
        )
    return ok


def _suite_analytic(report):
    ok = True
    for eta in (0.25, 0.64, 1.0):
        spec = ChannelSpec.loss(eta)
        ok &= report(
            f"loss classical factor eta={eta}",
            capacity_factor(Quantity.C_LOWER, spec).factor,
            math.sqrt(eta),
            1e-5,
        )
    spec = ChannelSpec.white(0.5, 1.0)
    ok &= report(
        "white classical factor eta=0.5 nbar=1",
        capacity_factor(Quantity.C_LOWER, spec).factor,
        analytic_K(spec),
        1e-5,
    )
    spec = ChannelSpec.thermal(0.7, 0.5)
    ok &= report(
        "thermal classical factor eta=0.7 rho=0.5",
        capacity_factor(Quantity.C_LOWER, spec).factor,
        analytic_K(spec),
        1e-4,
    )
    return ok


def _suite_oracle(report):
    ok = True
    for n in (0.5, 2.0):
        for nbar in (0.0, 1.0):
            for eta in (0.3, 0.9):
                st = thermal_state(n)
                ok &= report(
                    f"mutual info vs kernel n={n} nbar={nbar} eta={eta}",
                    mutual_information(st, nbar, eta),
                    kernel_ce(n, nbar, eta),
                    1e-9,
                )
                ok &= report(
                    f"coherent info vs kernel n={n} nbar={nbar} eta={eta}",
                    coherent_information(st, nbar, eta),
                    kernel_q(n, nbar, eta),
                    1e-9,
                )
    return ok


def _suite_ordering(report):
    ok = True
    inputs = PhysicalInputs(power=1e-9)
    specs = [
        ChannelSpec.loss(0.7),
        ChannelSpec.white(0.7, 1.0),
        ChannelSpec.thermal(0.7, 0.41),
        ChannelSpec.dephasing(0.7),
    ]
    for spec in specs:
        rep = capacity_report(spec, inputs)
        label = spec.model.value
        ok &= report(f"{label}: q_alt identity", rep.q_alt_factor, max(rep.ce_factor - 1.0, 0.0), 1e-12)
        ok &= report(f"{label}: qe identity", rep.qe_factor, rep.ce_factor / 2.0, 1e-12)
        ok &= report_bool(report, f"{label}: c_lower <= min(ce, 1)", rep.c_lower_factor <= min(rep.ce_factor, 1.0) + 1e-9)
        ok &= report_bool(
            report,
            f"{label}: q bounds below qe",
            max(rep.q_lower_factor, rep.q_alt_factor) <= rep.qe_factor + 1e-9,
        )
    return ok


def report_bool(report, name, condition):
    return report(name, 1.0 if condition else 0.0, 1.0, 0.5)


def _suite_limits(report):
    ok = True
    for quantity in _SOLVED_QUANTITIES:
        loss = capacity_factor(quantity, ChannelSpec.loss(0.7)).factor
        white = capacity_factor(quantity, ChannelSpec.white(0.7, 1e-6)).factor
        ok &= report(f"white nbar->0 vs loss ({quantity.value})", white, loss, 1e-3)
    loss = capacity_factor(Quantity.C_LOWER, ChannelSpec.loss(0.6)).factor
    thermal = capacity_factor(Quantity.C_LOWER, ChannelSpec.thermal(0.6, 1e-4)).factor
    ok &= report("thermal rho->0 vs loss (c_lower)", thermal, loss, 1e-3)
    return ok


def _suite_no_squeezing(report):
    ok = True
    for n in (0.5, 1.0, 2.0):
        scan = verify_no_squeezing(n, 0.1, 0.8, 101)
        ok &= report_bool(report, f"squeezing never helps (n={n})", scan.optimal_at_zero)
    return ok


_SUITES = {
    "special": _suite_special,
    "analytic": _suite_analytic,
    "oracle": _suite_oracle,
    "ordering": _suite_ordering,
    "limits": _suite_limits,
    "no-squeezing": _suite_no_squeezing,
}


def run_verify(suites=None, out_dir=None, points=7, jobs=1, stream=None):
    stream = stream or sys.stdout
    failures = 0

    def report(name, got, want, tol):
        good = abs(got - want) <= tol
        nonlocal failures
        if not good:
            failures += 1
        status = "PASS" if good else "FAIL"
        print(f"{status} {name}: got {_fmt(got)} want {_fmt(want)} (tol {tol:g})", file=stream)
        return good

    names = suites or list(_SUITES)
    for name in names:
        if name not in _SUITES:
            raise CliError(f"unknown suite {name!r} (have {', '.join(_SUITES)})")
        _SUITES[name](report)
    if out_dir is not None:
        for fig in ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"):
            files = write_figure_data(fig, out_dir, points=points, jobs=jobs)
            for f in files:
                print(f"wrote {f}", file=stream)
    print(("FAILED (%d checks)" % failures) if failures else "OK", file=stream)
    return failures


# ---------------------------------------------------------------------------
# argument plumbing

def _read_config(path):
    values = {}
    for line_no, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CliError(f"{path}:{line_no}: expected key=value")
        key, _, value = line.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


_CONFIG_CASTS = {
    "model": str,
    "quantity": str,
    "eta": str,
    "nbar": float,
    "rho": float,
    "temp": float,
    "power": float,
    "time": float,
    "points": int,
    "xmax": float,
    "jobs": int,
    "out": str,
}


def _apply_config(args):
    if not getattr(args, "config", None):
        return args
    values = _read_config(args.config)
    for key, raw in values.items():
        if key not in _CONFIG_CASTS:
            raise CliError(f"unknown config key {key!r}")
        if getattr(args, key, None) is None:
            setattr(args, key, _CONFIG_CASTS[key](raw))
    return args


def _common_channel_flags(sub):
    sub.add_argument("--model", choices=[m.value for m in NoiseModel], default=None)
    sub.add_argument("--eta", default=None, help="single value or a:b:step grid")
    sub.add_argument("--nbar", type=float, default=None, help="white-noise occupation")
    sub.add_argument("--rho", type=float, default=None, help="thermal ratio R_T/R_C")
    sub.add_argument("--temp", type=float, default=None, help="bath temperature [K]")
    sub.add_argument("--power", type=float, default=None, help="input power [W]")
    sub.add_argument("--config", default=None, help="key=value config file (flags win)")
    sub.add_argument("--jobs", type=int, default=None, help="parallel workers")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="broadband-capacity",
        description="Broadband bosonic channel capacities under a power constraint.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sweep = subs.add_parser("sweep", help="capacity factors over an eta grid -> CSV")
    _common_channel_flags(sweep)
    sweep.add_argument("--quantity", default=None, choices=["ce", "c_lower", "q_lower", "q_alt", "all"])
    sweep.add_argument("--out", default=None)

    profile = subs.add_parser("profile", help="occupation profile -> CSV")
    _common_channel_flags(profile)
    profile.add_argument("--quantity", default=None, choices=["ce", "c_lower", "q_lower"])
    profile.add_argument("--points", type=int, default=None)
    profile.add_argument("--xmax", type=float, default=None)
    profile.add_argument("--out", default=None)

    rep = subs.add_parser("report", help="factors and absolute rates")
    _common_channel_flags(rep)
    rep.add_argument("--time", type=float, default=None, help="transmission time [s]")

    fig = subs.add_parser("figure", help="figure data -> CSV files")
    fig.add_argument("figure", choices=[f"fig{i}" for i in range(1, 8)])
    fig.add_argument("--out", default=None)
    fig.add_argument("--points", type=int, default=None)
    fig.add_argument("--jobs", type=int, default=None)
    fig.add_argument("--config", default=None)

    ver = subs.add_parser("verify", help="run self-check suites")
    ver.add_argument("--suite", action="append", default=None, choices=list(_SUITES))
    ver.add_argument("--out", default=None, help="also write figure CSVs here")
    ver.add_argument("--points", type=int, default=None)
    ver.add_argument("--jobs", type=int, default=None)
    ver.add_argument("--config", default=None)

    return parser


def _require(args, name):
    value = getattr(args, name, None)
    if value is None:
        raise CliError(f"missing required option --{name.replace('_', '-')}")
    return value


def _channel_args(args):
    model = _require(args, "model")
    nbar = args.nbar if args.nbar is not None else 0.0
    rho = args.rho
    if NoiseModel(model) is NoiseModel.THERMAL and rho is None:
        if args.temp is not None and args.power is not None:
            rho = thermal_ratio(PhysicalInputs(power=args.power, temperature=args.temp))
        else:
            raise CliError("thermal model needs --rho or both --temp and --power")
    return model, nbar, (rho if rho is not None else 0.0)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args = _apply_config(args)
        if args.command == "sweep":
            model, nbar, rho = _channel_args(args)
            etas = _parse_eta_range(_require(args, "eta"))
            quantities = _expand_quantities(args.quantity or "all")
            rows = sweep_rows(model, etas, nbar, rho, quantities, jobs=args.jobs or 1)
            out = _require(args, "out")
            _write_sweep_csv(out, rows)
            print(f"wrote {out} ({len(rows)} rows)")
            if any(r["error"] for r in rows):
                return 1
        elif args.command == "profile":
            model, nbar, rho = _channel_args(args)
            etas = _parse_eta_range(_require(args, "eta"))
            if len(etas) != 1:
                raise CliError("profile takes a single --eta value")
            rows = profile_rows(
                model,
                etas[0],
                nbar,
                rho,
                args.quantity or "c_lower",
                args.points or 200,
                args.xmax or 8.0,
            )
            out = _require(args, "out")
            _write_profile_csv(out, rows)
            print(f"wrote {out} ({len(rows)} rows)")
        elif args.command == "report":
            model, nbar, rho = _channel_args(args)
            etas = _parse_eta_range(_require(args, "eta"))
            if len(etas) != 1:
                raise CliError("report takes a single --eta value")
            spec = _build_spec(model, etas[0], nbar, rho)
            inputs = PhysicalInputs(
                power=_require(args, "power"),
                temperature=args.temp,
                transmission_time=args.time if args.time is not None else 1.0,
            )
            _print_report(spec, inputs)
        elif args.command == "figure":
            files = write_figure_data(
                args.figure,
                _require(args, "out"),
                points=args.points or 9,
                jobs=args.jobs or 1,
            )
            for f in files:
                print(f"wrote {f}")
        elif args.command == "verify":
            return run_verify(
                suites=args.suite,
                out_dir=args.out,
                points=args.points or 7,
                jobs=args.jobs or 1,
            )
    except (CliError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _print_report(spec, inputs):
    rep = capacity_report(spec, inputs)
    rc = rep.rc_bits_per_sec
    print(f"model={spec.model.value} eta={_fmt(spec.eta)} nbar={_fmt(spec.nbar)} rho_t={_fmt(rep.rho_t)}")
    print(f"power={_fmt(inputs.power)} W  transmission_time={_fmt(inputs.transmission_time)} s")
    print(f"R_C = {_fmt(rc)} bits/s  (scales as sqrt(power))")
    if spec.model is NoiseModel.THERMAL:
        print(f"T_c = {_fmt(critical_temperature(inputs.power))} K")
    print(f"{'quantity':<10} {'factor':>14} {'rate (bits)':>16}")
    for name in ("ce", "c_lower", "c_upper", "q_lower", "q_alt", "qe"):
        factor = getattr(rep, f"{name}_factor")
        print(f"{name:<10} {_fmt(factor):>14} {_fmt(rep.rates[name]):>16}")
    for quantity, sol in rep.solutions.items():
        print(f"# {quantity.value}: y0={_fmt(sol.y0)} f={_fmt(sol.f_value)}")


if __name__ == "__main__":
    raise SystemExit(main())
