"""Command-line interface.

Examples:
  gcns show --a 50 --d 1 --u 4 --s 2,2,3 --p 5
  gcns frobenius --a 243 --d 2 --u 3 --s 3,4,4 --p 9
  gcns genus --a 5 --d 1 --u 2 --s 2 --p 1 --method auto --format json
  gcns greedy --b 1,3,10 --m 9
  gcns verify --a 4-60 --d=-1,1,2 --patterns "2;2,3" --format csv --output report.csv

Exit codes: 0 ok, 1 verification mismatch, 2 validation error,
3 formula requested outside its hypotheses.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import ConditionNotMet, GcnsError, ParameterDomain
from .formulas import apery_quotient_formula, frobenius_quotient, genus_quotient
from .greedy import greedy_presentation, weight
from .model import (GcnsSpec, QuotientSpec, b_sequence, build_spec, check_conditions,
                    s_from_b)
from .oracle import gcns_oracle, quotient_apery_oracle, quotient_oracle
from .verify import QUANTITIES, Grid, composites, run_grid

EXIT_MISMATCH, EXIT_INVALID, EXIT_CONDITION = 1, 2, 3


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_range(text: str) -> tuple[int, ...]:
    """Comma-separated integers and ``lo-hi`` ranges, e.g. ``4-10,12``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        try:
            if sep and lo:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad integer or range {part!r}")
    return tuple(out)


def pattern_list(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(int_list(chunk) for chunk in text.split(";") if chunk.strip())


def _steps(args) -> tuple[int, ...]:
    if args.b is not None:
        return s_from_b(args.b)
    return args.s


def _spec(args) -> GcnsSpec:
    return build_spec(args.a, args.d, args.u, _steps(args))


def _payload(spec: GcnsSpec, p, result=None) -> dict:
    conditions = None
    if p is not None:
        try:
            conditions = check_conditions(spec, p).to_dict()
        except ParameterDomain:
            pass
    return {"spec": spec.to_dict(), "p": p, "conditions": conditions, "result": result}


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "d", "u", "s", "p", "quantity", "value", "path"])
        spec, res = payload["spec"], payload["result"] or {}
        value = res.get("value")
        if isinstance(value, list):
            value = " ".join(map(str, value))
        w.writerow([spec["a"], spec["d"], spec["u"], ",".join(map(str, spec["s"])),
                    payload["p"], res.get("quantity"), value, res.get("path")])
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def cmd_show(args) -> int:
    spec = _spec(args)
    p = args.p if args.p is not None else 1
    cond = check_conditions(spec, p)
    lines = [
        f"a={spec.a} d={spec.d} u={spec.u} k={spec.k}",
        f"s={spec.s}",
        f"B={spec.B}",
        f"H={spec.H}",
        f"A={spec.A}",
        f"p={p} monotonicity_ok={cond.monotonicity_ok} "
        f"frobenius_ok={cond.frobenius_ok} cns={cond.cns}",
    ]
    lines += [f"  - {r}" for r in cond.reasons]
    _emit(args, _payload(spec, p), "\n".join(lines))
    return 0


def _by_formula(quantity: str, qs: QuotientSpec):
    if quantity == "frobenius":
        return frobenius_quotient(qs)
    if quantity == "genus":
        return genus_quotient(qs)
    return list(apery_quotient_formula(qs).entries)


def _by_oracle(quantity: str, spec: GcnsSpec, p: int):
    oracle = gcns_oracle(spec)
    if quantity == "frobenius":
        return quotient_oracle(oracle, p).frobenius()
    if quantity == "genus":
        return quotient_oracle(oracle, p).genus()
    return list(quotient_apery_oracle(oracle, p, spec.a).entries)


def compute(quantity: str, spec: GcnsSpec, p: int, method: str):
    """Return ``(value, path)`` where path is "formula" or "oracle"."""
    if method == "oracle":
        return _by_oracle(quantity, spec, p), "oracle"
    if method == "formula":
        return _by_formula(quantity, QuotientSpec(spec, p)), "formula"
    try:
        return _by_formula(quantity, QuotientSpec(spec, p)), "formula"
    except ConditionNotMet:
        return _by_oracle(quantity, spec, p), "oracle"
    except ParameterDomain:
        # p outside the formula domain; the oracle accepts any p >= 1
        if quantity == "apery" or p < 1:
            raise
        return _by_oracle(quantity, spec, p), "oracle"


def cmd_quantity(args) -> int:
    spec = _spec(args)
    value, path = compute(args.command, spec, args.p, args.method)
    result = {"quantity": args.command, "value": value, "path": path}
    if args.command == "apery":
        text = f"Ape(<A>/{args.p}, {spec.a // args.p}) = {value} (path={path})"
    else:
        text = f"{value} (path={path})"
    _emit(args, _payload(spec, args.p, result), text)
    return 0


def cmd_greedy(args) -> int:
    s = _steps(args)
    B = b_sequence(s)
    X = greedy_presentation(B, s, args.m)
    payload = {"B": list(B), "s": list(s), "M": args.m, "x": list(X.x), "opt": X.coeff_sum}
    text = f"X({args.m}) = {X.x} over B={B}, opt={X.coeff_sum}"
    if args.u is not None:
        payload["u"] = args.u
        payload["weight"] = weight(X, args.u, B)
        text += f", weight={payload['weight']}"
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        print("M,x,opt")
        print(f"{args.m},{' '.join(map(str, X.x))},{X.coeff_sum}")
    else:
        print(text)
    return 0


def cmd_verify(args) -> int:
    grid = Grid(
        a_values=args.a if args.a is not None else tuple(composites(120)),
        d_values=args.d if args.d is not None else Grid.d_values,
        u_values=args.u if args.u is not None else Grid.u_values,
        patterns=args.patterns if args.patterns is not None else Grid.patterns,
        p_values=None if args.p in (None, "proper") else int_range(args.p),
        quantities=args.quantities,
    )
    rep = run_grid(grid, jobs=args.jobs)
    out = {"json": rep.to_json, "csv": rep.to_csv, "text": rep.to_text}[args.format]()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out if out.endswith("\n") else out + "\n")
    else:
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
    if args.format != "text":
        print(f"elapsed {rep.elapsed_time:.2f}s", file=sys.stderr)
    return 0 if rep.ok else EXIT_MISMATCH


def _quantities(text: str) -> tuple[str, ...]:
    qs = tuple(q.strip() for q in text.split(",") if q.strip())
    bad = [q for q in qs if q not in QUANTITIES]
    if bad or not qs:
        raise argparse.ArgumentTypeError(f"quantities must be from {QUANTITIES}")
    return qs


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gcns", description=__doc__.split("\n")[0])
    ap.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ap.add_argument("--method", choices=("formula", "oracle", "auto"), default="auto")

    # same flags on every subcommand; SUPPRESS keeps the top-level value unless repeated
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--method", choices=("formula", "oracle", "auto"),
                        default=argparse.SUPPRESS)

    def spec_args(p, need_a=True):
        if need_a:
            p.add_argument("--a", type=int, required=True)
            p.add_argument("--d", type=int, required=True)
            p.add_argument("--u", type=int, required=True)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--s", type=int_list, help="steps s_1,...,s_{k-1}")
        g.add_argument("--b", type=int_list, help="explicit base sequence 1,b_2,...,b_k")

    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", parents=[common], help="derived sequences and conditions")
    spec_args(p)
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("greedy", parents=[common], help="greedy presentation X(M)")
    spec_args(p, need_a=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--u", type=int, default=None, help="also report the weight")
    p.set_defaults(func=cmd_greedy)

    for name in ("frobenius", "genus", "apery"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of <A>/p")
        spec_args(p)
        p.add_argument("--p", type=int, default=1)
        p.set_defaults(func=cmd_quantity)

    p = sub.add_parser("verify", parents=[common], help="formula vs oracle over a grid")
    p.add_argument("--a", type=int_range, default=None, help="default: composites <= 120")
    p.add_argument("--d", type=int_list, default=None, help="use --d=-3,-1,1 for negatives")
    p.add_argument("--u", type=int_range, default=None)
    p.add_argument("--patterns", type=pattern_list, default=None,
                   help='s-patterns separated by ";", e.g. "2;2,3;3,4,4"')
    p.add_argument("--p", default=None, help='"proper" (default) or a list of p values')
    p.add_argument("--quantities", type=_quantities, default=QUANTITIES)
    p.add_argument("--output", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConditionNotMet as e:
        print(f"ConditionNotMet: {e}", file=sys.stderr)
        return EXIT_CONDITION
    except GcnsError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
