"""Formula-vs-oracle sweeps over parameter grids."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import GcnsError
from .formulas import apery_quotient_formula, frobenius_quotient, genus_quotient
from .model import QuotientSpec, build_spec, check_conditions, proper_divisors
from .oracle import gcns_oracle, quotient_apery_oracle, quotient_oracle

QUANTITIES = ("frobenius", "genus", "apery")
CSV_COLUMNS = ("a", "d", "u", "s", "p", "quantity", "formula", "oracle", "match")

DEFAULT_PATTERNS = ((2,), (3,), (2, 2), (2, 3), (3, 4), (2, 2, 3), (2, 2, 4), (3, 4, 4))
DEFAULT_D = (-3, -1, 1, 2, 3, 5)
DEFAULT_U = (1, 2, 3, 4, 5)


def composites(upto: int) -> list[int]:
    return [a for a in range(4, upto + 1) if proper_divisors(a) != [1]]


@dataclass(frozen=True)
class Grid:
    a_values: tuple[int, ...] = tuple(composites(120))
    d_values: tuple[int, ...] = DEFAULT_D
    u_values: tuple[int, ...] = DEFAULT_U
    patterns: tuple[tuple[int, ...], ...] = DEFAULT_PATTERNS
    # None means "every proper divisor of a"
    p_values: tuple[int, ...] | None = None
    quantities: tuple[str, ...] = QUANTITIES

    def describe(self) -> dict:
        return {"a": list(self.a_values), "d": list(self.d_values),
                "u": list(self.u_values), "s": [list(s) for s in self.patterns],
                "p": "proper" if self.p_values is None else list(self.p_values),
                "quantities": list(self.quantities)}

    def base_points(self):
        for a in self.a_values:
            for d in self.d_values:
                for u in self.u_values:
                    for s in self.patterns:
                        yield a, d, u, tuple(s)

    def p_for(self, a: int) -> list[int]:
        return proper_divisors(a) if self.p_values is None else list(self.p_values)


@dataclass(frozen=True)
class Check:
    a: int
    d: int
    u: int
    s: tuple[int, ...]
    p: int
    quantity: str
    status: str  # "match", "mismatch" or "skipped"
    formula: object = None
    oracle: object = None
    reason: str = ""

    def sort_key(self):
        return (self.a, self.d, self.u, self.s, self.p, QUANTITIES.index(self.quantity))

    def row(self) -> dict:
        def fmt(v):
            return " ".join(map(str, v)) if isinstance(v, (list, tuple)) else v
        return {"a": self.a, "d": self.d, "u": self.u, "s": ",".join(map(str, self.s)),
                "p": self.p, "quantity": self.quantity, "formula": fmt(self.formula),
                "oracle": fmt(self.oracle), "match": self.status == "match"}


@dataclass
class VerificationReport:
    grid_description: dict
    grid_points: int = 0
    total_instances: int = 0
    agreements: int = 0
    mismatches: list[Check] = field(default_factory=list)
    skipped_condition_failures: int = 0
    elapsed_time: float = 0.0
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def by_quantity(self) -> dict:
        out = {q: {"agreements": 0, "mismatches": 0, "skipped": 0}
               for q in self.grid_description["quantities"]}
        key = {"match": "agreements", "mismatch": "mismatches", "skipped": "skipped"}
        for c in self.checks:
            out[c.quantity][key[c.status]] += 1
        return out

    def to_dict(self) -> dict:
        # no timing here so repeated runs serialize identically
        return {
            "grid": self.grid_description,
            "grid_points": self.grid_points,
            "total_instances": self.total_instances,
            "agreements": self.agreements,
            "skipped_condition_failures": self.skipped_condition_failures,
            "by_quantity": self.by_quantity(),
            "mismatches": [
                {"spec": {"a": c.a, "d": c.d, "u": c.u, "s": list(c.s)}, "p": c.p,
                 "quantity": c.quantity, "formula": c.formula, "oracle": c.oracle}
                for c in self.mismatches],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for c in self.checks:
            if c.status != "skipped":
                w.writerow(c.row())
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"grid points:   {self.grid_points}",
            f"checks:        {self.total_instances}",
            f"agreements:    {self.agreements}",
            f"mismatches:    {len(self.mismatches)}",
            f"skipped:       {self.skipped_condition_failures}",
        ]
        for q, counts in self.by_quantity().items():
            lines.append(f"  {q:<10} agree={counts['agreements']} "
                         f"mismatch={counts['mismatches']} skipped={counts['skipped']}")
        for c in self.mismatches:
            lines.append(f"MISMATCH a={c.a} d={c.d} u={c.u} s={c.s} p={c.p} "
                         f"{c.quantity}: formula={c.formula} oracle={c.oracle}")
        lines.append(f"elapsed:       {self.elapsed_time:.2f}s")
        return "\n".join(lines)


def _compare(quantity: str, qs: QuotientSpec, oracle) -> tuple[object, object]:
    p = qs.p
    if quantity == "frobenius":
        return frobenius_quotient(qs), quotient_oracle(oracle, p).frobenius()
    if quantity == "genus":
        return genus_quotient(qs), quotient_oracle(oracle, p).genus()
    return (list(apery_quotient_formula(qs).entries),
            list(quotient_apery_oracle(oracle, p, qs.base.a).entries))


def verify_point(a: int, d: int, u: int, s: tuple[int, ...], ps: Sequence[int],
                 quantities: Sequence[str]) -> list[Check]:
    """All checks for one (a, d, u, s) and each p in ``ps``; one oracle is shared."""
    def skip(p, q, why):
        return Check(a, d, u, s, p, q, "skipped", reason=why)

    try:
        spec = build_spec(a, d, u, s)
    except GcnsError as e:
        return [skip(p, q, type(e).__name__) for p in ps for q in quantities]

    oracle = None
    out = []
    for p in ps:
        try:
            qs = QuotientSpec(spec, p)
        except GcnsError as e:
            out.extend(skip(p, q, type(e).__name__) for q in quantities)
            continue
        cond = check_conditions(spec, p)
        for q in quantities:
            ok = cond.frobenius_ok if q == "frobenius" else cond.monotonicity_ok
            if not ok:
                out.append(skip(p, q, "ConditionNotMet"))
                continue
            if oracle is None:
                oracle = gcns_oracle(spec)
            fv, ov = _compare(q, qs, oracle)
            out.append(Check(a, d, u, s, p, q, "match" if fv == ov else "mismatch", fv, ov))
    return out


def _verify_chunk(args):
    grid, points = args
    out = []
    for a, d, u, s in points:
        out.extend(verify_point(a, d, u, s, grid.p_for(a), grid.quantities))
    return out


def run_grid(grid: Grid, jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    points = list(grid.base_points())
    if jobs > 1:
        chunks = [(grid, points[i::jobs * 8]) for i in range(jobs * 8)]
        with ProcessPoolExecutor(jobs) as ex:
            checks = [c for part in ex.map(_verify_chunk, chunks) for c in part]
    else:
        checks = _verify_chunk((grid, points))
    checks.sort(key=Check.sort_key)

    rep = VerificationReport(grid.describe(), checks=checks)
    rep.grid_points = len({(c.a, c.d, c.u, c.s, c.p) for c in checks})
    rep.total_instances = len(checks)
    rep.agreements = sum(c.status == "match" for c in checks)
    rep.mismatches = [c for c in checks if c.status == "mismatch"]
    rep.skipped_condition_failures = sum(c.status == "skipped" for c in checks)
    rep.elapsed_time = time.perf_counter() - start
    return rep


