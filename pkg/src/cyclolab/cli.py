"""Command-line interface: one verb per artifact.

Exit status: 0 on success, 1 when a verification subcommand finds a
claimed invariant violated, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds as bounds_mod
from . import nearmiss as nearmiss_mod
from . import ordering as ordering_mod
from . import rationalcheck as rational_mod
from . import roots as roots_mod
from .polycore import cyclotomic, difference, eval_rational, poly_to_json


@dataclass
class RunConfig:
    digits: int = 15
    jobs: int | None = None
    format: str = "text"
    out_path: str | None = None
    resume: bool = False

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("digits must be >= 1")
        if self.jobs is not None and self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def _parse_point(s: str) -> Fraction:
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(s)


def _emit(line: str, out) -> None:
    out.write(line + "\n")


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_poly(args, out) -> int:
    p = cyclotomic(args.n)
    if args.format == "json":
        _emit(poly_to_json(p, args.n), out)
    else:
        _emit(str(p), out)
    return 0


def _cmd_eval(args, out) -> int:
    x = _parse_point(args.x)
    val = eval_rational(cyclotomic(args.n), x)
    _emit(str(val), out)
    return 0


def _cmd_order(args, out) -> int:
    if args.what == "class":
        members = ordering_mod.phi_class_sorted(args.k)
        _emit_list(members, args.format, out)
    elif args.what == "prefix":
        members = ordering_mod.ordered_prefix(args.k)
        _emit_list(members, args.format, out)
    elif args.what == "gap":
        _emit(str(ordering_mod.gap(args.k)), out)
    else:  # consecutive
        cert = ordering_mod.certify_consecutive(args.k, args.n2)
        if args.format == "json":
            _emit(
                json.dumps(
                    {
                        "m": cert.m,
                        "n": cert.n,
                        "consecutive": cert.consecutive,
                        "between": list(cert.between),
                        "classes": {str(k): list(v) for k, v in cert.classes},
                    }
                ),
                out,
            )
        else:
            _emit("consecutive" if cert.consecutive else
                  "not consecutive; between: " + " ".join(map(str, cert.between)), out)
    return 0


def _emit_list(members, fmt, out) -> None:
    if fmt == "json":
        _emit(json.dumps(members), out)
    else:
        for m in members:
            _emit(str(m), out)


def _root_record_obj(rec: roots_mod.RootRecord, digits: int) -> dict:
    if rec.kind == "real":
        value = rec.value.decimal(digits)
    else:
        value = [rec.value[0].decimal(digits), rec.value[1].decimal(digits)]
    return {
        "kind": rec.kind,
        "value": value,
        "modulus": rec.modulus.decimal(digits),
        "residual": rec.residual.decimal(digits),
        "multiplicity": rec.multiplicity,
    }


def _record_line(rec: roots_mod.CoincidenceRecord, digits: int) -> str:
    obj = {"m": rec.m, "n": rec.n, "roots": [_root_record_obj(r, digits) for r in rec.roots]}
    if rec.max_abs_real is not None:
        obj["max_abs_real"] = rec.max_abs_real.decimal(digits)
    if rec.window_violations:
        obj["window_violations"] = list(rec.window_violations)
    return json.dumps(obj)


def _cmd_roots(args, out) -> int:
    digits = args.digits
    rec = roots_mod.real_coincidence_roots(args.m, args.n, digits)
    if args.complex:
        d = difference(args.m, args.n)
        if d.degree >= 1:
            cplx = [r for r in roots_mod.complex_roots(d, 256) if r.kind == "complex"]
            rec = roots_mod.CoincidenceRecord(
                m=rec.m, n=rec.n, roots=rec.roots + tuple(cplx), max_abs_real=rec.max_abs_real
            )
    _emit(_record_line(rec, digits), out)
    return 0


def _cmd_scan(args, out) -> int:
    cfg = RunConfig(digits=args.digits, jobs=args.jobs, out_path=args.out, resume=args.resume)
    if cfg.resume and not cfg.out_path:
        print("scan: --resume requires --out", file=sys.stderr)
        return 2
    M = args.max_index
    done: dict[tuple[int, int], str] = {}
    if cfg.resume and cfg.out_path and os.path.exists(cfg.out_path):
        done = _load_cache(cfg.out_path)
    if args.complex:
        lines, summary, ok = _scan_complex_lines(M, args.coprime, cfg, done)
    else:
        lines, summary, ok = _scan_real_lines(M, cfg, done)
    if cfg.out_path:
        with open(cfg.out_path, "w") as fh:
            for line in lines:
                fh.write(line + "\n")
            fh.write(summary + "\n")
    else:
        for line in lines:
            _emit(line, out)
        _emit(summary, out)
    return 0 if ok else 1


def _scan_real_lines(M, cfg, done):
    if done:
        pairs = [
            (m, n) for m in range(1, M + 1) for n in range(m + 1, M + 1) if (m, n) not in done
        ]
        fresh = {
            (r.m, r.n): _record_line(r, cfg.digits)
            for r in (roots_mod.real_coincidence_roots(m, n, cfg.digits) for m, n in pairs)
        }
        window = roots_mod.verify_root_window(M, cfg.jobs)
        merged = {**done, **fresh}
        lines = [merged[key] for key in sorted(merged)]
        return lines, _window_summary(window), window.holds
    rep = roots_mod.scan_real(M, cfg.digits, cfg.jobs)
    lines = [_record_line(rec, cfg.digits) for rec in rep.records]
    summary = _window_summary(
        rep.window,
        max_abs=rep.max_nonzero_abs,
        min_abs=rep.min_nonzero_abs,
        digits=cfg.digits,
    )
    return lines, summary, rep.window.holds


def _complex_pair_line(rec, boundary, outside, digits) -> str:
    obj = json.loads(_record_line(rec, digits))
    if boundary:
        obj["sqrt2_attained"] = True
    if outside:
        obj["outside"] = [o[2] for o in outside]
    return json.dumps(obj)


def _scan_complex_lines(M, coprime, cfg, done):
    from math import gcd

    pairs = [
        (m, n)
        for m in range(1, M + 1)
        for n in range(m + 1, M + 1)
        if not coprime or gcd(m, n) == 1
    ]
    if done:
        merged: dict[tuple[int, int], str] = dict(done)
        for m, n in pairs:
            if (m, n) in merged:
                continue
            rec, boundary, outside = roots_mod._complex_scan_worker((m, n, 256))
            merged[(m, n)] = _complex_pair_line(rec, boundary, outside, cfg.digits)
        lines = [merged[key] for key in sorted(merged)]
        boundary_pairs = []
        outside_pairs = []
        for key in sorted(merged):
            obj = json.loads(merged[key])
            if obj.get("sqrt2_attained"):
                boundary_pairs.append(list(key))
            for why in obj.get("outside", ()):
                outside_pairs.append([key[0], key[1], why])
        summary = json.dumps(
            {
                "summary": "complex",
                "max_index": M,
                "coprime_only": coprime,
                "boundary_upper": boundary_pairs,
                "outside": outside_pairs,
            }
        )
        return lines, summary, not outside_pairs
    report = roots_mod.scan_complex(M, coprime_only=coprime, jobs=cfg.jobs)
    boundary_set = set(report.boundary_upper)
    outside_map: dict[tuple[int, int], list] = {}
    for m, n, why in report.outside:
        outside_map.setdefault((m, n), []).append((m, n, why))
    lines = [
        _complex_pair_line(
            rec, (rec.m, rec.n) in boundary_set, outside_map.get((rec.m, rec.n), ()), cfg.digits
        )
        for rec in report.records
    ]
    summary = json.dumps(
        {
            "summary": "complex",
            "max_index": M,
            "coprime_only": coprime,
            "boundary_upper": [list(p) for p in report.boundary_upper],
            "outside": [list(p) for p in report.outside],
        }
    )
    return lines, summary, not report.outside


def _window_summary(window, max_abs=None, min_abs=None, digits=15) -> str:
    obj = {
        "summary": "real",
        "max_index": window.max_index,
        "pairs_checked": window.pairs_checked,
        "window_holds": window.holds,
        "exception_found": window.exception_found,
        "violations": [list(v) for v in window.violations],
    }
    if max_abs is not None:
        obj["max_nonzero_abs_root"] = max_abs.decimal(digits)
    if min_abs is not None:
        obj["min_nonzero_abs_root"] = min_abs.decimal(digits)
    return json.dumps(obj)


def _load_cache(path: str) -> dict[tuple[int, int], str]:
    done: dict[tuple[int, int], str] = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                continue  # interrupted write
            if "m" in obj and "n" in obj:
                done[(obj["m"], obj["n"])] = line
    return done


def _cmd_nearmiss(args, out) -> int:
    triples = nearmiss_mod.find_triples(args.p, args.qmax)
    for q, r in triples:
        beta = nearmiss_mod.near_miss_root(args.p, q, args.digits)
        _emit(
            json.dumps({"p": args.p, "q": q, "r": r, "beta": beta.decimal(args.digits)}), out
        )
    return 0


def _cmd_table1(args, out) -> int:
    records = nearmiss_mod.table1(digits=args.digits)
    sig = args.digits
    if args.format == "json":
        for rec in records:
            _emit(
                json.dumps(
                    {
                        "p": rec.p,
                        "q": rec.q,
                        "r": rec.r,
                        "beta": rec.beta.significant(sig),
                        "alpha": rec.alpha.significant(sig),
                        "inv_gap": rec.inv_gap.significant(sig),
                        "scaled_gap": rec.scaled_gap.significant(sig),
                    }
                ),
                out,
            )
    else:
        _emit("p,q,r,beta,alpha,inv_gap,scaled_gap", out)
        for rec in records:
            _emit(
                ",".join(
                    [
                        str(rec.p),
                        str(rec.q),
                        str(rec.r),
                        rec.beta.significant(sig),
                        rec.alpha.significant(sig),
                        rec.inv_gap.significant(sig),
                        rec.scaled_gap.significant(sig),
                    ]
                ),
                out,
            )
    return 0


def _cmd_bounds(args, out) -> int:
    xs = [_parse_point(s) for s in args.xs.split(",")]
    all_hold = True
    for report in bounds_mod.real_bounds_grid(args.n_max, xs):
        all_hold &= report.holds
        _emit(
            json.dumps(
                {
                    "n": report.n,
                    "point": str(report.point),
                    "ratio": str(report.ratio.value),
                    "holds": report.holds,
                    "equality": report.equality,
                }
            ),
            out,
        )
    return 0 if all_hold else 1


def _cmd_bang(args, out) -> int:
    res = rational_mod.primitive_prime_divisor(args.a, args.b, args.n)
    _emit(str(res.prime) if res.prime is not None else res.exception, out)
    return 0


def _cmd_verify_rational(args, out) -> int:
    int_report = rational_mod.verify_integer_coincidences(args.height, args.max_index)
    rat_report = rational_mod.verify_rational_coincidences(args.height, args.max_index)
    _emit(
        json.dumps(
            {
                "integers": {
                    "a_max": int_report.a_max,
                    "coincidences": [list(c) for c in int_report.coincidences],
                    "holds": int_report.holds,
                },
                "fractions": {
                    "height": rat_report.height,
                    "coincidences": [list(c) for c in rat_report.coincidences],
                    "holds": rat_report.holds,
                },
            }
        ),
        out,
    )
    return 0 if int_report.holds and rat_report.holds else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclolab")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("poly", help="coefficients of the n-th cyclotomic polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="exact value of the n-th cyclotomic polynomial")
    p.add_argument("n", type=int)
    p.add_argument("x", help="integer or a/b")
    p.add_argument("--digits", type=int, default=15)

    p = sub.add_parser("order", help="total order queries")
    p.add_argument("what", choices=("class", "prefix", "consecutive", "gap"))
    p.add_argument("k", type=int)
    p.add_argument("n2", type=int, nargs="?")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("roots", help="certified roots of one difference")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--digits", type=int, default=15)
    p.add_argument("--complex", action="store_true")

    p = sub.add_parser("scan", help="scan all pairs up to an index bound")
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--complex", action="store_true")
    p.add_argument("--coprime", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--digits", type=int, default=15)

    p = sub.add_parser("nearmiss", help="prime triples and their near-miss roots")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--digits", type=int, default=15)

    p = sub.add_parser("table1", help="near-miss reference table")
    p.add_argument("--digits", type=int, default=15)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("bounds", help="value-envelope checks on a grid")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--xs", required=True, help="comma-separated rationals, e.g. 2,5/2,3")

    p = sub.add_parser("bang", help="primitive prime divisor of a^n - b^n")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("verify-rational", help="exhaustive coincidence check at rational points")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)

    return ap


_HANDLERS = {
    "poly": _cmd_poly,
    "eval": _cmd_eval,
    "order": _cmd_order,
    "roots": _cmd_roots,
    "scan": _cmd_scan,
    "nearmiss": _cmd_nearmiss,
    "table1": _cmd_table1,
    "bounds": _cmd_bounds,
    "bang": _cmd_bang,
    "verify-rational": _cmd_verify_rational,
}


def dispatch(argv: list[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmd == "order" and args.what == "consecutive" and args.n2 is None:
            parser.error("order consecutive requires two indices")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.cmd](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
