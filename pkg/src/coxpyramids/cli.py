"""Command-line interface: ``coxpyramids <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .coxeter import CoxeterDiagram
from .exactpoly import IntPolynomial, series_coefficients
from .geometry import InvalidPyramid, PyramidQuadruple, canonicalize, enumerate_pyramids, parse_quadruple
from .growth import DEFAULT_J_MAX, DEFAULT_ROOT_EPS, growth_report, steinberg_growth
from .order import build_order, monotonicity_report
from .volume import DEFAULT_LOB_EPS, DEFAULT_ORACLE_EPS, pyramid_volume

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_INVARIANT = 4

CSV_COLUMNS = ["k", "l", "m", "n", "growth_rate", "volume", "perron_j", "denominator"]


class InvariantFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class RunConfig:
    root_eps: Fraction = DEFAULT_ROOT_EPS
    lob_eps: float = DEFAULT_LOB_EPS
    oracle_eps: float = DEFAULT_ORACLE_EPS
    fmt: str | None = None
    output: str | None = None
    verify_perron_numeric: bool = False
    oracle_volume: bool = False
    series_depth: int = 30
    j_max: int = DEFAULT_J_MAX
    jobs: int = 1

    def __post_init__(self):
        if self.root_eps <= 0 or self.lob_eps <= 0 or self.oracle_eps <= 0:
            raise ValueError("eps values must be positive")
        if self.series_depth < 2:
            raise ValueError("series depth must be at least 2")


def _g10(x: float) -> str:
    # 10 significant digits, round-half-even as done by float formatting
    return f"{x:.10g}"


def check_series(f, depth: int, rank: int = 5) -> list[int]:
    """Coefficients a_0..a_depth, checked to be a_0 = 1, a_1 = rank, a_k >= 0."""
    a = series_coefficients(f, depth + 1)
    if a[0] != 1:
        raise InvariantFailure(f"growth series a0 = {a[0]}, expected 1")
    if a[1] != rank:
        raise InvariantFailure(f"growth series a1 = {a[1]}, expected {rank}")
    bad = [k for k, x in enumerate(a) if not isinstance(x, int) or x < 0]
    if bad:
        raise InvariantFailure(f"growth series coefficient a{bad[0]} = {a[bad[0]]} is not a non-negative integer")
    return a


def growth_payload(q, cfg: RunConfig) -> dict:
    rep = growth_report(q, cfg.root_eps, cfg.j_max, numeric=cfg.verify_perron_numeric)
    if rep.perron is None:
        raise InvariantFailure(f"no Perron certificate for {q} with j <= {cfg.j_max}")
    if cfg.verify_perron_numeric and not rep.numeric_check:
        raise InvariantFailure(f"numeric root check failed for {q}")
    out = rep.to_json()
    out["series"] = check_series(rep.f, cfg.series_depth)
    return out


def volume_payload(q, cfg: RunConfig) -> dict:
    rep = pyramid_volume(q, cfg.lob_eps, oracle=cfg.oracle_volume, oracle_eps=cfg.oracle_eps)
    if rep.oracle is not None and abs(rep.oracle - rep.total) > 1e-5:
        raise InvariantFailure(f"volume {rep.total} and quadrature {rep.oracle} disagree for {q}")
    return rep.to_json()


def report_row(q, cfg: RunConfig) -> dict:
    g = growth_payload(q, cfg)
    v = volume_payload(q, cfg)
    row = {
        "quadruple": list(q),
        "growth_rate": float(g["tau"]),
        "growth_rate_error_bound": float(g["tau_error_bound"]),
        "volume": v["total"],
        "perron_j": g["perron"]["j"],
        "denominator": g["denominator"],
        "g": g["g"],
        "denominator_text": g["denominator_text"],
    }
    if "oracle" in v:
        row["volume_oracle"] = v["oracle"]
    if "numeric_root_check" in g:
        row["numeric_root_check"] = g["numeric_root_check"]
    return row


def _row_job(args):
    q, cfg = args
    return report_row(q, cfg)


def _write(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _canonical(q) -> PyramidQuadruple:
    c = canonicalize(q)
    if tuple(c) != tuple(q):
        print(f"coxpyramids: using canonical form {c} of {PyramidQuadruple(*q)}", file=sys.stderr)
    return c


def _poly_text(coeffs):
    return IntPolynomial(coeffs).to_text()


def cmd_enumerate(args, cfg: RunConfig) -> str:
    qs = enumerate_pyramids()
    fmt = cfg.fmt or "text"
    if fmt == "json":
        return _json([list(q) for q in qs])
    if fmt == "csv":
        return _csv(["k", "l", "m", "n"], [list(q) for q in qs])
    return "".join(f"{q}\n" for q in qs)


def cmd_growth(args, cfg: RunConfig) -> str:
    if args.diagram:
        with open(args.diagram, encoding="utf-8") as fh:
            d = CoxeterDiagram.from_json(json.load(fh))
        f = steinberg_growth(d)
        out = {"diagram": d.to_json(), "numerator": f.num.to_list(), "denominator": f.den.to_list(),
               "series": check_series(f, cfg.series_depth, d.rank)}
        return _json(out)
    if args.quadruple is None:
        raise argparse.ArgumentTypeError("growth needs a quadruple k,l,m,n or --diagram FILE")
    q = _canonical(args.quadruple)
    out = growth_payload(q, cfg)
    if (cfg.fmt or "json") == "text":
        return (f"pyramid {q}\n"
                f"numerator   {_poly_text(out['numerator'])}\n"
                f"denominator {out['denominator_text']}\n"
                f"perron j    {out['perron']['j']}\n"
                f"tau         {out['tau']} (+- {out['tau_error_bound']})\n")
    return _json(out)


def cmd_volume(args, cfg: RunConfig) -> str:
    q = _canonical(args.quadruple)
    out = volume_payload(q, cfg)
    if (cfg.fmt or "json") == "text":
        lines = [f"pyramid {q}"]
        for p in out["pieces"]:
            lines.append(f"  {p['corner']} sign {p['sign']:+d} a={p['a']:.12g} b={p['b']:.12g} vol={p['value']:.12g}")
        lines.append(f"volume {out['total']:.12g}")
        if "oracle" in out:
            lines.append(f"oracle {out['oracle']:.12g}")
        return "\n".join(lines) + "\n"
    return _json(out)


def cmd_perron(args, cfg: RunConfig) -> str:
    q = _canonical(args.quadruple)
    rep = growth_report(q, cfg.root_eps, cfg.j_max, numeric=cfg.verify_perron_numeric)
    if rep.perron is None:
        raise InvariantFailure(f"no Perron certificate for {q} with j <= {cfg.j_max}")
    c = rep.perron
    out = {
        "quadruple": list(q),
        "g": rep.g.to_list(),
        "j": c.multiplier_power,
        "h_coeffs": list(c.h_coeffs),
        "support": c.support,
        "support_gcd": c.support_gcd,
        "expanded": c.expanded().to_list(),
    }
    if rep.numeric_check is not None:
        if not rep.numeric_check:
            raise InvariantFailure(f"numeric root check failed for {q}")
        out["numeric_root_check"] = rep.numeric_check
    if (cfg.fmt or "json") == "text":
        return (f"pyramid {q}\ng = {rep.g.to_text()}\nj = {c.multiplier_power}\n"
                f"(t+1)^j g = {c.expanded().to_text()}\nsupport gcd = {c.support_gcd}\n")
    return _json(out)


def cmd_order(args, cfg: RunConfig) -> str:
    order = build_order()
    rates = {q: growth_report(q, cfg.root_eps, cfg.j_max).tau for q in order.elements}
    mono = monotonicity_report(order, rates, args.tol)
    if not mono.ok:
        a, b, va, vb = mono.violations[0]
        raise InvariantFailure(f"growth rate decreases along {a} <= {b}: {va} > {vb}")
    fmt = cfg.fmt or "dot"
    if fmt == "json":
        out = order.to_json(rates)
        out["monotonicity"] = mono.to_json()
        return _json(out)
    return order.to_dot(rates)


def report_rows(cfg: RunConfig) -> list[dict]:
    qs = enumerate_pyramids()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            return list(ex.map(_row_job, [(q, cfg) for q in qs]))
    return [report_row(q, cfg) for q in qs]


def cmd_report(args, cfg: RunConfig) -> str:
    rows = report_rows(cfg)
    fmt = cfg.fmt or "csv"
    if fmt == "json":
        return _json(rows)
    if fmt == "text":
        lines = [f"{'(k,l,m,n)':<12}{'growth':>14}{'volume':>14}{'j':>3}  denominator"]
        for r in rows:
            q = "({},{},{},{})".format(*r["quadruple"])
            lines.append(f"{q:<12}{_g10(r['growth_rate']):>14}{_g10(r['volume']):>14}{r['perron_j']:>3}  "
                         f"{r['denominator_text']}")
        return "\n".join(lines) + "\n"
    return _csv(CSV_COLUMNS, [[*r["quadruple"], _g10(r["growth_rate"]), _g10(r["volume"]), r["perron_j"],
                               r["denominator_text"]] for r in rows])


def _quadruple_arg(text: str):
    try:
        return parse_quadruple(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        # accept float spellings like 1e-12
        try:
            value = Fraction(float(text))
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["json", "csv", "text", "dot"])
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--eps", type=_fraction_arg, default=DEFAULT_ROOT_EPS,
                        help="bracket width for the smallest denominator root (default 2^-40)")
    common.add_argument("--lob-eps", type=float, default=DEFAULT_LOB_EPS,
                        help="absolute error per Lobachevsky evaluation (default 1e-12)")
    common.add_argument("--oracle-eps", type=float, default=DEFAULT_ORACLE_EPS,
                        help="quadrature oracle tolerance (default 1e-8)")
    common.add_argument("--verify-perron-numeric", action="store_true",
                        help="cross-check the certified root against all complex roots")
    common.add_argument("--oracle-volume", action="store_true",
                        help="also compute volumes by direct 2-D quadrature")
    common.add_argument("--series-depth", type=int, default=30,
                        help="check growth series coefficients a_0..a_N (default 30)")
    common.add_argument("--j-max", type=int, default=DEFAULT_J_MAX)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for `report`")

    p = argparse.ArgumentParser(prog="coxpyramids", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="list the canonical pyramid quadruples")
    g = sub.add_parser("growth", parents=[common], help="growth function and growth rate")
    g.add_argument("quadruple", nargs="?", type=_quadruple_arg, help="k,l,m,n")
    g.add_argument("--diagram", help="JSON Coxeter diagram instead of a pyramid")
    v = sub.add_parser("volume", parents=[common], help="hyperbolic volume")
    v.add_argument("quadruple", type=_quadruple_arg)
    pc = sub.add_parser("perron", parents=[common], help="Perron certificate of the growth rate")
    pc.add_argument("quadruple", type=_quadruple_arg)
    o = sub.add_parser("order", parents=[common], help="Hasse diagram of the containment order")
    o.add_argument("--tol", type=float, default=1e-9)
    sub.add_parser("report", parents=[common], help="growth rate, volume and certificate for every pyramid")
    return p


COMMANDS = {
    "enumerate": cmd_enumerate,
    "growth": cmd_growth,
    "volume": cmd_volume,
    "perron": cmd_perron,
    "order": cmd_order,
    "report": cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            root_eps=args.eps, lob_eps=args.lob_eps, oracle_eps=args.oracle_eps, fmt=args.fmt,
            output=args.output, verify_perron_numeric=args.verify_perron_numeric,
            oracle_volume=args.oracle_volume, series_depth=args.series_depth, j_max=args.j_max,
            jobs=args.jobs,
        )
    except ValueError as exc:
        parser.error(str(exc))
    try:
        text = COMMANDS[args.command](args, cfg)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except InvalidPyramid as exc:
        print(f"coxpyramids: invalid pyramid: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvariantFailure as exc:
        print(f"coxpyramids: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    _write(text, cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
