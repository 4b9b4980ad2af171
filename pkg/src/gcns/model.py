"""GCNS parameter model.

A GCNS semigroup is generated by ``a`` together with ``h_i*a + d*b_i`` where

    b_1 = 1,  b_{i+1} = s_i*b_i + 1   (s nondecreasing, s_i >= 1)
    h_i = u*b_i + 1

CNS is the special case ``s_i = b`` for all i and ``u = b - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import GcdViolation, NonpositiveGenerator, ParameterDomain


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def b_sequence(s: Sequence[int]) -> tuple[int, ...]:
    """Return ``(b_1, ..., b_k)`` for the step list ``s`` of length k-1."""
    b = [1]
    for si in s:
        b.append(si * b[-1] + 1)
    return tuple(b)


def s_from_b(B: Sequence[int]) -> tuple[int, ...]:
    """Recover the step list from an explicit base sequence.

    Raises ParameterDomain unless B has the GCNS shape: b_1 = 1, every
    b_{i+1} - 1 divisible by b_i, and the quotients nondecreasing and >= 1.
    """
    B = tuple(B)
    if len(B) < 2 or not all(_is_int(b) for b in B):
        raise ParameterDomain(f"B must list at least two integers, got {B!r}")
    if B[0] != 1:
        raise ParameterDomain(f"B must start with 1, got {B!r}")
    s = []
    for lo, hi in zip(B, B[1:]):
        step, rem = divmod(hi - 1, lo)
        if rem or step < 1:
            raise ParameterDomain(f"{hi} is not of the form s*{lo}+1 with s >= 1")
        s.append(step)
    if any(x > y for x, y in zip(s, s[1:])):
        raise ParameterDomain(f"B={B!r} gives decreasing steps {tuple(s)!r}")
    return tuple(s)


def proper_divisors(a: int) -> list[int]:
    """Positive divisors of ``a`` other than ``a`` itself, ascending."""
    return [p for p in range(1, a) if a % p == 0]


@dataclass(frozen=True)
class GcnsSpec:
    a: int
    d: int
    u: int
    s: tuple[int, ...]
    B: tuple[int, ...] = field(init=False)
    H: tuple[int, ...] = field(init=False)
    A: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        a, d, u = self.a, self.d, self.u
        s = tuple(self.s)
        object.__setattr__(self, "s", s)

        # structural checks first, then gcd, then generator positivity
        if not (_is_int(a) and _is_int(d) and _is_int(u)):
            raise ParameterDomain("a, d and u must be integers")
        if a < 2:
            raise ParameterDomain(f"a must be >= 2, got {a}")
        if d == 0:
            raise ParameterDomain("d must be nonzero")
        if u < 1:
            raise ParameterDomain(f"u must be >= 1, got {u}")
        if not s:
            raise ParameterDomain("s must have at least one entry (k >= 2)")
        if not all(_is_int(x) and x >= 1 for x in s):
            raise ParameterDomain(f"s entries must be integers >= 1, got {s!r}")
        if any(x > y for x, y in zip(s, s[1:])):
            raise ParameterDomain(f"s must be nondecreasing, got {s!r}")
        if gcd(a, d) != 1:
            raise GcdViolation(f"gcd(a, d) = gcd({a}, {d}) = {gcd(a, d)} != 1")

        B = b_sequence(s)
        H = tuple(u * b + 1 for b in B)
        gens = tuple(h * a + d * b for h, b in zip(H, B))
        if d < 0:
            bad = [g for g in gens if g <= 1]
            if bad:
                raise NonpositiveGenerator(
                    f"d < 0 requires h_i*a + d*b_i > 1 for all i; got {gens!r}")
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "A", (a,) + gens)

    @property
    def k(self) -> int:
        return len(self.B)

    def to_dict(self) -> dict:
        return {"a": self.a, "d": self.d, "u": self.u, "s": list(self.s),
                "B": list(self.B), "H": list(self.H), "A": list(self.A)}


def build_spec(a: int, d: int, u: int, s: Sequence[int]) -> GcnsSpec:
    return GcnsSpec(a, d, u, tuple(s))


def build_cns_spec(a: int, d: int, b: int, k: int) -> GcnsSpec:
    """CNS semigroup ``(a, b*a + d, b^2*a + (b^2-1)/(b-1)*d, ...)``."""
    if not (_is_int(b) and _is_int(k)):
        raise ParameterDomain("b and k must be integers")
    if b < 2:
        raise ParameterDomain(f"b must be >= 2, got {b}")
    if k < 2:
        raise ParameterDomain(f"k must be >= 2, got {k}")
    return build_spec(a, d, b - 1, (b,) * (k - 1))


@dataclass(frozen=True)
class QuotientSpec:
    """The quotient ``<A>/p`` for a proper divisor p of a."""

    base: GcnsSpec
    p: int

    def __post_init__(self):
        a, p = self.base.a, self.p
        if not _is_int(p) or p < 1:
            raise ParameterDomain(f"p must be a positive integer, got {p!r}")
        if a % p:
            raise ParameterDomain(f"p={p} does not divide a={a}")
        if p == a:
            raise ParameterDomain("p = a gives the trivial quotient N")

    @property
    def q(self) -> int:
        return self.base.a // self.p


def quotient(spec: GcnsSpec, p: int) -> QuotientSpec:
    return QuotientSpec(spec, p)


@dataclass(frozen=True)
class ConditionReport:
    monotonicity_ok: bool
    frobenius_ok: bool
    cns: bool
    reasons: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"monotonicity_ok": self.monotonicity_ok,
                "frobenius_ok": self.frobenius_ok,
                "cns": self.cns,
                "reasons": list(self.reasons)}


def is_cns(spec: GcnsSpec) -> bool:
    b = spec.s[0]
    return b >= 2 and all(x == b for x in spec.s) and spec.u == b - 1


def check_conditions(spec: GcnsSpec, p: int) -> ConditionReport:
    """Evaluate the hypotheses under which the quotient formulas hold.

    monotonicity_ok:  u*a + d + k - 2 >= sum(s)
    frobenius_ok:     monotonicity_ok and either
                      (d > 0 and every s_i <= u + 1) or
                      (every s_i < u + 1 and a + p*d >= 0)
    """
    QuotientSpec(spec, p)  # domain check on p
    a, d, u, s = spec.a, spec.d, spec.u, spec.s
    reasons = []

    lhs, rhs = u * a + d + spec.k - 2, sum(s)
    mono = lhs >= rhs
    if not mono:
        reasons.append(f"u*a + d + k - 2 = {lhs} < sum(s) = {rhs}")

    weak = d > 0 and all(x <= u + 1 for x in s)
    strict = all(x < u + 1 for x in s) and a + p * d >= 0
    frob = mono and (weak or strict)
    if mono and not frob:
        if d > 0:
            reasons.append(f"some s_i > u + 1 = {u + 1}")
        elif not all(x < u + 1 for x in s):
            reasons.append(f"d < 0 requires every s_i < u + 1 = {u + 1}")
        else:
            reasons.append(f"a + p*d = {a + p * d} < 0")
    elif not mono:
        reasons.append("Frobenius formula needs the monotonicity condition")

    cns = is_cns(spec)
    if not cns:
        reasons.append("not a CNS specialization (needs all s_i = b >= 2, u = b - 1)")
    return ConditionReport(mono, frob, cns, tuple(reasons))


def cns_hypothesis(a: int, d: int, b: int, k: int) -> bool:
    """``a >= k - 1 - (d-1)/(b-1)``, evaluated exactly."""
    return Fraction(a) >= k - 1 - Fraction(d - 1, b - 1)
