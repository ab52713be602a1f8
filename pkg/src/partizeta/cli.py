"""Command-line front end.

Subcommands: pzeta, fixedlen, mzv, padic, modular, selftest. Global flags
--prec/--tol/--out/--format control precision policy and emission. Reports
are deterministic: identical invocations produce byte-identical output
(sorted keys, fixed digit counts, no timestamps), and every report embeds
the run configuration, a build identifier, and per-value route provenance.

Exit codes: 0 success, 1 selftest failure, 2 invalid parameters/spec,
3 numeric failure (non-convergence, unattainable tolerance).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath as mp

from . import __version__, acceptance, build_id, fixedlen, modular, padic, pzeta
from .numerics import digits_for, poly_roots
from .partitions import DivergentPartSetError, parse_part_set

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_INVALID = 2
EXIT_NUMERIC = 3


class RunConfig:
    def __init__(self, args):
        self.precision_bits = args.prec
        if self.precision_bits < 64:
            raise ValueError("--prec must be at least 64")
        self.tolerance = args.tol if args.tol is not None else 2.0 ** -200
        if not self.tolerance > 0:
            raise ValueError("--tol must be positive")
        self.fmt = args.format
        self.out = args.out
        self.digits = digits_for(self.precision_bits)

    def header(self) -> dict:
        return {
            "build": build_id(),
            "version": __version__,
            "precision_bits": self.precision_bits,
            "tolerance": repr(self.tolerance),
            "format": self.fmt,
        }


def _numstr(cfg, x) -> str:
    with mp.workprec(cfg.precision_bits):
        return mp.nstr(mp.mpmathify(x), cfg.digits)


def _emit(cfg: RunConfig, payload: dict, rows_csv=None) -> None:
    payload = {"config": cfg.header(), **payload}
    if cfg.fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        rows = rows_csv if rows_csv is not None else _flatten_csv(payload)
        for row in rows:
            writer.writerow(row)
        text = buf.getvalue()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flatten_csv(payload, prefix=""):
    rows = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            rows.extend(_flatten_csv(payload[key], f"{prefix}{key}."))
    elif isinstance(payload, (list, tuple)):
        for i, item in enumerate(payload):
            rows.extend(_flatten_csv(item, f"{prefix}{i}."))
    else:
        rows.append([prefix.rstrip("."), payload])
    return rows


def _write_roots_csv(path, roots, residuals, cfg):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["re", "im", "residual"])
        for r, e in zip(roots, residuals):
            writer.writerow([_numstr(cfg, mp.re(r)), _numstr(cfg, mp.im(r)), _numstr(cfg, e)])


# ----------------------------------------------------------------------
def _pzeta_routes_at(spec, s, wanted, cfg):
    """Evaluate every applicable route at one argument; returns {name: value}
    (values may be PoleReports) and {name: tail bound}."""
    routes = {}
    tails = {}
    if wanted in ("product", "all") and mp.re(s) > 1:
        val, bound = pzeta.euler_product(spec, s, tol=cfg.tolerance,
                                         prec=cfg.precision_bits)
        routes["product"] = val
        tails["product"] = bound
    single_class = (len(spec.classes) == 1 and not spec.explicit_parts
                    and not spec.distinct and spec.min_part == 1)
    if wanted in ("gamma", "all") and single_class and mp.im(s) == 0 \
            and s == mp.floor(s) and int(s) >= 2:
        a, m = spec.classes[0]
        routes["gamma"] = pzeta.closed_form_gamma(a, m, int(s), prec=cfg.precision_bits)
    if wanted in ("logseries", "all") and single_class and spec.classes[0][0] == 0:
        m = spec.classes[0][1]
        out = pzeta.log_eval_multiples(m, s, prec=cfg.precision_bits, tol=cfg.tolerance)
        if isinstance(out, pzeta.PoleReport):
            routes["logseries"] = out
        else:
            with mp.workprec(cfg.precision_bits + 20):
                routes["logseries"] = mp.exp(out)
    return routes, tails


def cmd_pzeta(args, cfg: RunConfig) -> int:
    try:
        spec = parse_part_set(args.spec)
    except ValueError as exc:
        print(f"invalid part-set spec: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if spec.is_divergent_for_zeta():
        print(f"divergent part set {spec.spec_string()!r}: part 1 with "
              "unbounded multiplicity", file=sys.stderr)
        return EXIT_INVALID
    with mp.workprec(cfg.precision_bits + 20):
        grid = sorted((mp.mpmathify(tok) for tok in args.s.split(",") if tok.strip()),
                      key=lambda z: (mp.re(z), mp.im(z)))
    if not grid:
        print("no s values given", file=sys.stderr)
        return EXIT_INVALID

    results = []
    deviations = {}
    produced = 0
    for s in grid:  # sorted by parameter: order-stable aggregation
        try:
            routes, tails = _pzeta_routes_at(spec, s, args.routes, cfg)
        except (DivergentPartSetError, ValueError) as exc:
            print(f"invalid request at s={mp.nstr(s, 8)}: {exc}", file=sys.stderr)
            return EXIT_INVALID
        except ArithmeticError as exc:
            print(f"numeric failure at s={mp.nstr(s, 8)}: {exc}", file=sys.stderr)
            return EXIT_NUMERIC
        produced += len(routes)
        for name in sorted(routes):
            val = routes[name]
            if isinstance(val, pzeta.PoleReport):
                results.append({"route": name, "spec": spec.spec_string(),
                                "s": _numstr(cfg, s), "pole_at_k": val.pole_at_k,
                                "message": val.message})
                continue
            rec = {
                "route": name,
                "spec": spec.spec_string(),
                "s": _numstr(cfg, s),
                "value_re": _numstr(cfg, mp.re(val)),
                "value_im": _numstr(cfg, mp.im(val)),
                "precision_bits": cfg.precision_bits,
            }
            if name in tails:
                rec["tail_bound"] = _numstr(cfg, tails[name])
            results.append(rec)
        with mp.workprec(cfg.precision_bits + 20):
            names = [n for n in sorted(routes)
                     if not isinstance(routes[n], pzeta.PoleReport)]
            for i, ni in enumerate(names):
                for nj in names[i + 1:]:
                    key = f"{ni}-vs-{nj}" if len(grid) == 1 \
                        else f"s={mp.nstr(s, 8)}:{ni}-vs-{nj}"
                    deviations[key] = _numstr(cfg, abs(routes[ni] - routes[nj]))
    if not produced:
        print(f"no applicable route {args.routes!r} for spec "
              f"{spec.spec_string()!r}", file=sys.stderr)
        return EXIT_INVALID
    _emit(cfg, {"command": "pzeta", "results": results,
                "pairwise_deviation": deviations})
    return EXIT_OK


def cmd_fixedlen(args, cfg: RunConfig) -> int:
    try:
        if args.exact:
            r = fixedlen.fixedlen_zeta_exact(args.m, args.k)
            payload = {
                "command": "fixedlen", "kind": "fixedlen", "m": args.m, "k": args.k,
                "route": "determinant-exact",
                "exact_rational": f"{r.numerator}/{r.denominator}",
                "pi_power": args.m * args.k,
                "rendered": f"{r.numerator}/{r.denominator} * pi^{args.m * args.k}",
            }
        else:
            v = fixedlen.fixedlen_zeta(args.m, args.k, prec=cfg.precision_bits)
            payload = {"command": "fixedlen", "kind": "fixedlen", "m": args.m,
                       "k": args.k, "route": "series-exp", "value": _numstr(cfg, v)}
    except ValueError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(cfg, payload)
    return EXIT_OK


def cmd_mzv(args, cfg: RunConfig) -> int:
    try:
        if args.equal_args:
            n, k = args.equal_args
            if args.exact:
                r = fixedlen.mzv_equal_args_exact(n, k)
                payload = {"command": "mzv", "kind": "mzv", "index": [n] * k,
                           "route": "determinant-exact",
                           "exact_rational": f"{r.numerator}/{r.denominator}",
                           "pi_power": n * k}
            else:
                v = fixedlen.mzv_equal_args(n, k, prec=cfg.precision_bits)
                payload = {"command": "mzv", "kind": "mzv", "index": [n] * k,
                           "route": "series-exp", "value": _numstr(cfg, v)}
        else:
            idx = tuple(int(x) for x in args.index.split(","))
            v, tail = fixedlen.mzv_bruteforce(idx, args.bound)
            payload = {"command": "mzv", "kind": "mzv", "index": list(idx),
                       "route": "bruteforce", "bound": args.bound,
                       "value": repr(v), "tail_estimate": repr(tail)}
    except ValueError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(cfg, payload)
    return EXIT_OK


def cmd_padic(args, cfg: RunConfig) -> int:
    try:
        m2 = args.m2 if args.m2 is not None else padic.suggest_m2(args.p, args.a, args.k, args.m1)
        ok = padic.interpolation_check(args.p, args.a, args.k, args.m1, m2)
        ctx = padic.PadicContext(p=args.p, a=args.a, k=args.k)
        diff = padic.padic_fixedlen(ctx, args.m1) - padic.padic_fixedlen(ctx, m2)
        v = padic.padic_valuation(diff, args.p)
    except ValueError as exc:
        print(f"invalid request: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(cfg, {
        "command": "padic",
        "p": args.p, "a": args.a, "k": args.k, "m1": args.m1, "m2": m2,
        "valuation_observed": "inf" if v == padic.INFINITE_VALUATION else v,
        "required": args.a + 1,
        "pass": ok,
    })
    return EXIT_OK if ok else EXIT_NUMERIC


def cmd_modular(args, cfg: RunConfig) -> int:
    if args.action != "delta":
        print("only the 'delta' pipeline is built in; level N>1 profiles are "
              "ingested from JSON via --profile", file=sys.stderr)
        return EXIT_INVALID
    try:
        if args.profile:
            with open(args.profile) as fh:
                prof = modular.LProfile.from_json(fh.read(), prec=cfg.precision_bits)
        else:
            prof = modular.build_delta_profile(prec=cfg.precision_bits)
        with mp.workprec(cfg.precision_bits):
            prof.validate(tol=mp.mpf(2) ** (-(cfg.precision_bits // 3)))
        tau = modular.tau_recursive(30)
        Z = modular.zeta_polynomial(prof, cfg.precision_bits)
        fe = modular.functional_eq_check(Z, prof.sign, cfg.precision_bits)
        roots, dev = modular.rh_check(Z, cfg.precision_bits)
        R = modular.period_polynomial(prof, cfg.precision_bits)
        rroots, rres = poly_roots(R, prec=cfg.precision_bits)
        with mp.workprec(cfg.precision_bits):
            zres = [abs(Z(r)) for r in roots]
        gen = modular.generating_check(prof, 12, cfg.precision_bits)
    except (ValueError, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    lam_digits = max(40, cfg.digits)  # profile decimals carry >= 40 digits
    payload = {
        "command": "modular",
        "profile": {"weight": prof.weight, "level": prof.level, "sign": prof.sign,
                    "source": prof.source,
                    "lambda": [mp.nstr(v, lam_digits) for v in prof.lam]},
        "functional_eq_residual": _numstr(cfg, fe),
        "critical_line_max_dev": _numstr(cfg, dev),
        "generating_check_mismatch": _numstr(cfg, gen),
    }
    if args.report:
        payload.update({
            "tau_head": tau[:10],
            "zeta_poly_coeffs": [_numstr(cfg, c) for c in Z.coeffs],
            "zeta_poly_roots": [[_numstr(cfg, mp.re(r)), _numstr(cfg, mp.im(r))]
                                for r in roots],
            "period_poly_roots": [[_numstr(cfg, mp.re(r)), _numstr(cfg, mp.im(r))]
                                  for r in rroots],
        })
    _emit(cfg, payload)
    if args.roots_csv:
        # two scatter files: zeta-polynomial roots, and the period-polynomial
        # roots alongside (suffix .period.csv)
        _write_roots_csv(args.roots_csv, roots, zres, cfg)
        base = args.roots_csv
        period_path = (base[:-4] + ".period.csv") if base.endswith(".csv") \
            else base + ".period.csv"
        _write_roots_csv(period_path, rroots, rres, cfg)
    return EXIT_OK


def cmd_selftest(args, cfg: RunConfig) -> int:
    results = acceptance.run_all(prec=cfg.precision_bits, report=print)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} acceptance criteria passed")
    return EXIT_OK if not failed else EXIT_SELFTEST


# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="partizeta",
                                 description="partition zeta / zeta polynomial engine")
    ap.add_argument("--prec", type=int, default=256, help="working precision in bits (>= 64)")
    ap.add_argument("--tol", type=float, default=None, help="target tolerance")
    ap.add_argument("--out", default=None, help="write the report to this path")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pzeta", help="restricted-part-set zeta values")
    p.add_argument("--spec", required=True, help="part-set grammar, e.g. 2N, 3+4N, geq:2, distinct")
    p.add_argument("--s", required=True,
                   help="argument s, or a comma grid (e.g. 0.2,0.25,0.5,1,2) for scans")
    p.add_argument("--routes", choices=("product", "gamma", "logseries", "all"), default="all")
    p.set_defaults(func=cmd_pzeta)

    p = sub.add_parser("fixedlen", help="fixed-length partition zeta values")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_fixedlen)

    p = sub.add_parser("mzv", help="multiple zeta values")
    p.add_argument("--index", help="comma list, e.g. 4,2")
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--equal-args", nargs=2, type=int, metavar=("N", "K"), default=None)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_mzv)

    p = sub.add_parser("padic", help="p-adic interpolation congruence checks")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, default=None)
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("modular", help="zeta-polynomial pipeline")
    p.add_argument("action", choices=("delta",))
    p.add_argument("--report", action="store_true", help="emit the full pipeline report")
    p.add_argument("--profile", default=None, help="LProfile JSON to ingest instead of delta")
    p.add_argument("--roots-csv", default=None, help="write root scatter data here")
    p.set_defaults(func=cmd_modular)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(args)
    except ValueError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.command == "mzv" and not args.equal_args and not args.index:
        print("mzv needs --index or --equal-args", file=sys.stderr)
        return EXIT_INVALID
    return args.func(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
