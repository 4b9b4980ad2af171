"""Closed and half-closed formulas for quotients of GCNS semigroups.

Everything here is computed from greedy presentations only; nothing in this
module touches semigroup membership. Each formula refuses to evaluate
(ConditionNotMet) outside the hypotheses it is proven under.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .apery import AperyTable
from .errors import ConditionNotMet, IntegralityViolation, ParameterDomain
from .greedy import greedy_presentation, opt_B, weight
from .model import (GcnsSpec, QuotientSpec, build_cns_spec, build_spec,
                    check_conditions, cns_hypothesis)


def _require(qs: QuotientSpec, frobenius: bool = False) -> None:
    report = check_conditions(qs.base, qs.p)
    ok = report.frobenius_ok if frobenius else report.monotonicity_ok
    if not ok:
        why = [r for r in report.reasons if not r.startswith("not a CNS")]
        raise ConditionNotMet("; ".join(why))


def apery_quotient_formula(qs: QuotientSpec) -> AperyTable:
    """Apery set of a/p in <A>/p.

    The element for residue d*r mod a/p is ``w(r*p) * a/p + r*d`` where
    w is the H-weight of the greedy presentation of r*p.
    """
    _require(qs)
    spec, p, q = qs.base, qs.p, qs.q
    entries = [0] * q
    for r in range(q):
        X = greedy_presentation(spec.B, spec.s, r * p)
        entries[(spec.d * r) % q] = weight(X, spec.u, spec.B) * q + r * spec.d
    return AperyTable(q, tuple(entries))


def frobenius_quotient(qs: QuotientSpec) -> int:
    _require(qs, frobenius=True)
    spec, q = qs.base, qs.q
    top = greedy_presentation(spec.B, spec.s, spec.a - qs.p).coeff_sum
    return top * q + (q - 1) * (spec.u * spec.a + spec.d) - q


def genus_quotient(qs: QuotientSpec) -> int:
    _require(qs)
    spec, p, q = qs.base, qs.p, qs.q
    opt_total = sum(opt_B(spec.B, spec.s, r * p) for r in range(1, q))
    twice = 2 * opt_total + (spec.u * spec.a + spec.d - 1) * (q - 1)
    if twice % 2:
        raise IntegralityViolation(f"genus doubled is odd ({twice}) for {spec}, p={p}")
    return twice // 2


def _check_common(a: int, d: int, p: int) -> None:
    if a < 2:
        raise ParameterDomain(f"a must be >= 2, got {a}")
    if d <= 0:
        raise ParameterDomain(f"closed forms need d > 0, got {d}")
    if gcd(a, d) != 1:
        raise ParameterDomain(f"gcd(a, d) = {gcd(a, d)} != 1")
    if p < 1 or a % p or p == a:
        raise ParameterDomain(f"p={p} must be a proper divisor of a={a}")


def closed_form_k3(a: int, d: int, u: int, s: int, p: int) -> tuple[int, int]:
    """Frobenius number and genus of ``<a, (u+1)a+d, ((s+1)u+1)a+(s+1)d> / p``."""
    _check_common(a, d, p)
    if u < 1 or not 1 <= s <= u + 1:
        raise ParameterDomain(f"need u >= 1 and 1 <= s <= u+1, got u={u}, s={s}")
    q = a // p
    F = (a - p - s * ((a - p) // (s + 1))) * q + (q - 1) * (u * a + d) - q
    twice = (q - 1) * (u * a + a + d - 1)
    if twice % 2:
        raise IntegralityViolation(f"(a/p - 1)(ua + a + d - 1) = {twice} is odd")
    g = twice // 2 - s * sum((r * p) // (s + 1) for r in range(1, q))
    return F, g


@dataclass(frozen=True)
class PhiTable:
    """Correction table: ``M // modulus + values[M % modulus] + 1 == opt_B(M)``."""

    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.modulus:
            raise ValueError("PhiTable needs one value per residue")

    def __call__(self, i: int) -> int:
        return self.values[i % self.modulus]


@dataclass(frozen=True)
class PhiVariant:
    s: tuple[int, ...]
    min_u: int
    table: PhiTable


PHI_VARIANTS = {
    "phi10": PhiVariant((2, 3), 2, PhiTable(10, (-1, 0, 1, 0, 1, 2, 1, 2, 3, 2))),
    "phi17": PhiVariant((3, 4), 3, PhiTable(
        17, (-1, 0, 1, 2, 0, 1, 2, 3, 1, 2, 3, 4, 2, 3, 4, 5, 3))),
    "phi29": PhiVariant((2, 2, 4), 3, PhiTable(
        29, (-1, 0, 1, 0, 1, 2, 1, 0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3,
             4, 3, 4, 5, 4, 3))),
}


def closed_form_phi(a: int, d: int, u: int, p: int, variant: str) -> int:
    try:
        v = PHI_VARIANTS[variant]
    except KeyError:
        raise ParameterDomain(
            f"unknown variant {variant!r}; choose from {sorted(PHI_VARIANTS)}") from None
    _check_common(a, d, p)
    if u < v.min_u:
        raise ParameterDomain(f"{variant} needs u >= {v.min_u}, got {u}")
    q, m = a // p, v.table.modulus
    c = u * a + d
    return q * ((a - p) // m + c + v.table(a - p)) - c


def _cns_quotient(a: int, d: int, b: int, k: int, p: int) -> QuotientSpec:
    if d <= 0:
        raise ParameterDomain(f"CNS corollaries need d > 0, got {d}")
    spec = build_cns_spec(a, d, b, k)
    qs = QuotientSpec(spec, p)
    if not cns_hypothesis(a, d, b, k):
        raise ConditionNotMet(f"a={a} < k - 1 - (d-1)/(b-1)")
    return qs


def cns_frobenius(a: int, d: int, b: int, k: int, p: int) -> int:
    return frobenius_quotient(_cns_quotient(a, d, b, k, p))


def cns_genus(a: int, d: int, b: int, k: int, p: int) -> int:
    return genus_quotient(_cns_quotient(a, d, b, k, p))


def phi_spec(a: int, d: int, u: int, variant: str) -> GcnsSpec:
    """The GCNS spec a ``closed_form_phi`` variant describes."""
    return build_spec(a, d, u, PHI_VARIANTS[variant].s)
