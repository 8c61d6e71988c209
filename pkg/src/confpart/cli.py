"""Command-line front end.

Every command prints one JSON record (or CSV with --csv).  Integer counts are
written as decimal strings so that big values survive any JSON consumer.

Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 resource ceiling.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction
from typing import Any, Sequence

from . import algebra, closed_forms, genfunc, groups, partitions, roots, toeplitz, verify
from .errors import ConfpartError, ResourceCeilingError

SCHEMA = "confpart.cli/1"
EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CEILING = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _pairs(text: str) -> list[tuple[int, int]]:
    vals = _ints(text)
    if len(vals) % 2 or not vals:
        raise argparse.ArgumentTypeError("--pairs needs n1,m1,n2,m2,...")
    return list(zip(vals[::2], vals[1::2]))


def _coeff_spec(items: Sequence[str] | None) -> dict[tuple[int, int], str]:
    """Parse repeated ``s,l=value`` items."""
    out = {}
    for item in items or ():
        try:
            key, val = item.split("=", 1)
            s, l = (int(v) for v in key.split(","))
        except ValueError:
            raise UsageError(f"bad coefficient {item!r}; expected s,l=value")
        out[(s, l)] = val.strip()
    return out


def _count(v: int) -> str:
    return str(int(v))


# ---------------------------------------------------------------------------
# commands; each returns (params, result, status)

def cmd_partition(a) -> tuple[dict, dict, int]:
    n, m = a.n, a.m
    params = {"n": n, "m": m, "s": a.s, "method": a.method}
    if a.method == "closed":
        if a.s is not None:
            res = closed_forms.eval_piecewise(n, m, a.s)
            return params, {"count": _count(res.value), "regime": res.regime,
                            "reflected": res.reflected, "boundary_checked": list(res.boundary_checked)}, EXIT_OK
        rs = [closed_forms.eval_piecewise(n, m, s) for s in range(n * m + 1)]
        return params, {"row": [_count(r.value) for r in rs], "regimes": [r.regime for r in rs]}, EXIT_OK
    if a.s is not None:
        value = {
            "dp": lambda: partitions.conformal_count_dp(n, m, a.s),
            "oracle": lambda: partitions.conformal_count_oracle(n, m, a.s),
            "gauss": lambda: (genfunc.gaussian_poly(n, m) + (0,) * (a.s + 1))[a.s],
            "toeplitz": lambda: toeplitz.conformal_via_toeplitz(n, m, a.s),
        }[a.method]()
        return params, {"count": _count(value)}, EXIT_OK
    row = {
        "dp": lambda: partitions.conformal_row_dp(n, m),
        "oracle": lambda: [partitions.conformal_count_oracle(n, m, s) for s in range(n * m + 1)],
        "gauss": lambda: genfunc.gaussian_poly(n, m),
        "toeplitz": lambda: toeplitz.conformal_row_toeplitz(n, m),
    }[a.method]()
    return params, {"row": [_count(v) for v in row]}, EXIT_OK


def cmd_gauss(a) -> tuple[dict, dict, int]:
    if a.pairs:
        row = genfunc.product_gaussian(a.pairs)
        return {"pairs": [list(p) for p in a.pairs]}, {"row": [_count(v) for v in row]}, EXIT_OK
    if a.n is None or a.m is None:
        raise UsageError("gauss needs --n and --m, or --pairs")
    ok = genfunc.gaussian_ratio_check(a.n, a.m)
    row = genfunc.gaussian_poly(a.n, a.m)
    return {"n": a.n, "m": a.m}, {"row": [_count(v) for v in row], "ratio_check": ok}, (
        EXIT_OK if ok else EXIT_VERIFY
    )


def cmd_mu(a) -> tuple[dict, dict, int]:
    status = EXIT_OK
    if a.pairs:
        params = {"pairs": [list(p) for p in a.pairs]}
        result = {k: _count(algebra.mu_product_closed(a.pairs, k)) for k in ("R", "S")}
        if a.check:
            counted = {k: _count(algebra.assemble_product(a.pairs, k).independent_count()) for k in ("R", "S")}
            result["by_count"] = counted
            if counted != {"R": result["R"], "S": result["S"]}:
                status = EXIT_VERIFY
        return params, result, status
    if a.n is None or a.m is None:
        raise UsageError("mu needs --n and --m, or --pairs")
    params = {"n": a.n, "m": a.m}
    result = {
        "R": _count(algebra.mu_closed(a.n, a.m, "R")),
        "S": _count(algebra.mu_closed(a.n, a.m, "S")),
        "Q": _count(algebra.q_closed(a.n, a.m)),
    }
    if a.check:
        counted = {k: _count(algebra.mu_by_count(a.n, a.m, k)) for k in ("R", "S")}
        counted["Q"] = _count(algebra.q_by_count(a.n, a.m))
        result["by_count"] = counted
        if {k: result[k] for k in counted} != counted:
            status = EXIT_VERIFY
    return params, result, status


def _load_poly(path: str) -> algebra.SelfDualPoly:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return algebra.SelfDualPoly.from_json(data.get("result", {}).get("poly", data))


def cmd_selfdual(a) -> tuple[dict, dict, int]:
    if a.action == "build":
        if a.pairs:
            poly = algebra.assemble_product(a.pairs, a.kind, symmetrized=a.symmetrized)
            params = {"pairs": [list(p) for p in a.pairs], "kind": poly.kind}
        else:
            if a.n is None or a.m is None:
                raise UsageError("selfdual build needs --n and --m, or --pairs")
            poly = algebra.assemble(a.n, a.m, a.kind)
            params = {"n": a.n, "m": a.m, "kind": poly.kind}
        values = {k: Fraction(v) for k, v in _coeff_spec(a.coeff).items()}
        if a.random is not None:
            rng = random.Random(a.random)
            values = {sym: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for sym in poly.symbols()} | values
        default = Fraction(a.default) if a.default is not None else None
        if values or default is not None:
            poly = poly.bind(values, default)
        result = {"poly": poly.to_json(), "terms": len(poly)}
        if poly.symbolic:
            result["independent"] = _count(poly.independent_count())
        return params, result, EXIT_OK
    if a.action == "print":
        poly = _load_poly(a.file)
        return {"file": a.file}, {"text": poly.pretty()}, EXIT_OK
    if a.action == "multiply":
        p, q = _load_poly(a.file), _load_poly(a.other)
        r = algebra.multiply(p, q)
        return {"file": a.file, "other": a.other}, {"poly": r.to_json(), "kind": r.kind}, EXIT_OK
    # dualcheck
    poly = _load_poly(a.file)
    if a.x is None or a.lam is None:
        raise UsageError("dualcheck needs --x and --lam")
    left, right, scale = algebra.conformal_transform_sides(poly, a.x, a.lam)
    ok = algebra.conformal_transform_check(poly, a.x, a.lam, a.tol)
    return ({"file": a.file, "x": a.x, "lam": a.lam, "tol": a.tol},
            {"ok": ok, "left": float(left), "right": float(right), "scale": float(scale)},
            EXIT_OK if ok else EXIT_VERIFY)


def cmd_roots(a) -> tuple[dict, dict, int]:
    x = a.x
    n = a.n if a.n is not None else len(x)
    coeffs = {k: float(v) for k, v in _coeff_spec(a.coeff).items()}
    params = {"n": n, "m": a.m, "x": x, "coeffs": {f"{s},{l}": v for (s, l), v in sorted(coeffs.items())}}
    res = roots.positive_root(n, a.m, coeffs, x)
    result: dict[str, Any] = {
        "lambda": res.lam,
        "residual": res.residual,
        "iterations": res.iterations,
        "bounds_basic": list(roots.bounds_basic(x)),
    }
    if a.bounds:
        result["mean_chain"] = [float(v) for v in roots.mean_chain(x)]
        if n in (3, 4):
            result["bounds_enhanced"] = [float(v) for v in roots.bounds_enhanced(n, x)]
    result["duality_check"] = roots.root_duality_check(n, a.m, coeffs, x)
    result["pairing_condition"] = roots.pairing_condition_check(x)
    return params, result, EXIT_OK


def cmd_groups(a) -> tuple[dict, dict, int]:
    cat = [groups.lookup_group(name) for name in a.name] if a.name else groups.builtin_catalog()
    rows = []
    for g in cat:
        c = groups.classify(g)
        rows.append({
            "name": c.name,
            "degrees": list(c.degrees),
            "duality_raw": c.duality_raw,
            "duality_effective": c.duality_effective,
            "top_monomializable": c.top_monomializable,
            "admits": c.admits,
            "expected": c.expected_admits,
            "dependent_extra": g.dependent_extra,
        })
    return {"names": a.name or "catalog"}, {"groups": rows}, EXIT_OK


def cmd_verify(a) -> tuple[dict, dict, int]:
    checks = verify.run(a.suite, a.max_n, a.max_m, a.jobs)
    failures = [c.as_dict() for c in checks if not c.ok]
    summary = {}
    for c in checks:
        row = summary.setdefault(c.suite, {"passed": 0, "failed": 0})
        row["passed" if c.ok else "failed"] += 1
    result = {"summary": summary, "failures": failures}
    if a.verbose:
        result["checks"] = [c.as_dict() for c in checks]
    params = {"suite": a.suite, "max_n": a.max_n, "max_m": a.max_m}
    return params, result, EXIT_VERIFY if failures else EXIT_OK


COMMANDS = {
    "partition": cmd_partition,
    "gauss": cmd_gauss,
    "mu": cmd_mu,
    "selfdual": cmd_selfdual,
    "roots": cmd_roots,
    "groups": cmd_groups,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="confpart", description=__doc__.splitlines()[0])
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
    p.add_argument("--no-timing", action="store_true", help="omit the timing field")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("partition", help="conformal partition numbers P_n^m(s)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--s", type=int)
    sp.add_argument("--method", choices=("dp", "oracle", "gauss", "toeplitz", "closed"), default="dp")

    sp = sub.add_parser("gauss", help="Gaussian polynomial coefficients")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--pairs", type=_pairs)

    sp = sub.add_parser("mu", help="unimodality indices")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--pairs", type=_pairs)
    sp.add_argument("--check", action="store_true", help="cross-check by symbolic assembly")

    sp = sub.add_parser("selfdual", help="build and manipulate self-dual polynomials")
    sp.add_argument("action", choices=("build", "print", "multiply", "dualcheck"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--pairs", type=_pairs)
    sp.add_argument("--kind", default="R", help="R (reciprocal) or S (skew)")
    sp.add_argument("--symmetrized", action="store_true")
    sp.add_argument("--coeff", action="append", help="bind s,l=value (repeatable)")
    sp.add_argument("--default", help="value for unbound coefficients")
    sp.add_argument("--random", type=int, metavar="SEED", help="bind random rationals")
    sp.add_argument("--file", default="-", help="polynomial JSON (default stdin)")
    sp.add_argument("--other", help="second polynomial for multiply")
    sp.add_argument("--x", type=_floats)
    sp.add_argument("--lam", type=float)
    sp.add_argument("--tol", type=float, default=1e-10)

    sp = sub.add_parser("roots", help="positive root of a monic skew equation")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--x", type=_floats, required=True)
    sp.add_argument("--coeff", action="append", help="C s,l=value (repeatable); default 0")
    sp.add_argument("--bounds", action="store_true", help="also report the mean chain and enhanced bounds")

    sp = sub.add_parser("groups", help="group admissibility gate")
    sp.add_argument("name", nargs="*", help="group names such as S_4, I_{2,5}, O_h")

    sp = sub.add_parser("verify", help="run validation suites")
    sp.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--max-m", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--verbose", action="store_true", help="list every check")
    return p


def _flatten(prefix: str, value, rows: list) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, list) and value and all(not isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            rows.append((f"{prefix}[{i}]", v))
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, value))


def render(record: dict, as_csv: bool) -> str:
    if not as_csv:
        return json.dumps(record, indent=2)
    rows: list = []
    _flatten("", record["result"], rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("key", "value"))
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    start = time.perf_counter()
    try:
        params, result, status = COMMANDS[args.command](args)
    except ResourceCeilingError as exc:
        print(f"confpart: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"confpart {args.command}: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except ConfpartError as exc:
        # failed internal cross-check, bracket or tolerance check
        print(f"confpart {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    record = {"schema": SCHEMA, "command": args.command, "params": params, "result": result}
    if not args.no_timing:
        record["timing_s"] = round(time.perf_counter() - start, 6)
    print(render(record, args.csv))
    return status


if __name__ == "__main__":
    sys.exit(main())
