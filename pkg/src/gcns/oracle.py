"""Brute-force numerical semigroup oracle.

Membership is decided by an explicit reachability table over [0, bound]. The
bound comes from a shortest-path computation on residues modulo the smallest
generator (the Apery set of that generator), so no guessing is involved. The
table itself is then the ground truth: Apery sets, Frobenius numbers and
genera are read off it directly, never from a closed formula.
"""

from __future__ import annotations

import heapq
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .apery import AperyTable
from .errors import EmptyGenerators, GcdViolation, ParameterDomain, WNotMember
from .greedy import o_bh
from .model import GcnsSpec


def residue_apery(generators: Sequence[int]) -> list[int]:
    """Apery set of the smallest generator via Dijkstra on residue classes."""
    m = min(generators)
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        n, r = heapq.heappop(heap)
        if n > dist[r]:
            continue
        for g in generators:
            nn = n + g
            rr = nn % m
            if dist[rr] is None or nn < dist[rr]:
                dist[rr] = nn
                heapq.heappush(heap, (nn, rr))
    return dist


def reachability_table(generators: Iterable[int], length: int) -> np.ndarray:
    """Boolean table t with t[n] true iff n is a nonnegative combination."""
    t = np.zeros(length, dtype=bool)
    t[0] = True
    for g in sorted(set(generators)):
        if g >= length or t[g]:
            continue  # out of range, or already generated by smaller ones
        for start in range(g, length, g):
            end = min(start + g, length)
            t[start:end] |= t[start - g:end - g]
    return t


class SemigroupOracle:
    """Numerical semigroup given by an explicit membership table.

    Every integer above ``bound`` is a member; ``oracle_build`` certifies this
    by checking that the table ends in a run of members at least as long as
    the smallest nonzero member.
    """

    def __init__(self, table: np.ndarray, generators: tuple[int, ...] | None = None):
        self.table = table
        self.generators = generators
        self.bound = len(table) - 1

    def __repr__(self):
        gens = self.generators if self.generators is not None else "derived"
        return f"SemigroupOracle(generators={gens}, bound={self.bound})"

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero member."""
        nz = np.flatnonzero(self.table[1:])
        return int(nz[0]) + 1 if len(nz) else self.bound + 1

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.bound:
            return True
        return bool(self.table[n])

    def quotient_contains(self, p: int, n: int) -> bool:
        return self.contains(p * n)

    def gaps(self) -> np.ndarray:
        return np.flatnonzero(~self.table)

    def frobenius(self) -> int:
        g = self.gaps()
        return int(g[-1]) if len(g) else -1

    def genus(self) -> int:
        return int(np.count_nonzero(~self.table))

    def apery(self, w: int) -> AperyTable:
        if w <= 0 or not self.contains(w):
            raise WNotMember(f"{w} is not a nonzero member")
        entries = []
        for r in range(w):
            column = self.table[r::w]
            hits = np.flatnonzero(column)
            if len(hits):
                entries.append(r + int(hits[0]) * w)
            else:
                # everything past the bound is a member
                first = r + ((self.bound + 1 - r + w - 1) // w) * w
                entries.append(first)
        return AperyTable(w, tuple(entries))


def oracle_build(generators: Sequence[int]) -> SemigroupOracle:
    gens = tuple(sorted(int(g) for g in generators))
    if not gens:
        raise EmptyGenerators("need at least one generator")
    if gens[0] <= 0:
        raise ParameterDomain(f"generators must be positive, got {gens}")
    if reduce(gcd, gens) != 1:
        raise GcdViolation(f"gcd of generators {gens} is {reduce(gcd, gens)}")

    m = gens[0]
    dist = residue_apery(gens)
    bound = max(dist) + m
    table = reachability_table(gens, bound + 1)

    from_table = SemigroupOracle(table, gens).apery(m).entries
    if list(from_table) != dist:
        raise AssertionError(f"Apery mismatch for {gens}: table {from_table} vs {dist}")
    if not table[bound - m + 1:].all():
        raise AssertionError(f"table for {gens} is not cofinal at bound {bound}")
    return SemigroupOracle(table, gens)


def frobenius_oracle(oracle: SemigroupOracle) -> int:
    return oracle.frobenius()


def genus_oracle(oracle: SemigroupOracle) -> int:
    return oracle.genus()


def apery_oracle(oracle: SemigroupOracle, w: int) -> AperyTable:
    return oracle.apery(w)


def quotient_oracle(oracle: SemigroupOracle, p: int) -> SemigroupOracle:
    """Oracle for ``{n : p*n in S}``; any p >= 1 is allowed."""
    if p < 1:
        raise ParameterDomain(f"p must be positive, got {p}")
    return SemigroupOracle(oracle.table[::p].copy())


def quotient_apery_oracle(oracle: SemigroupOracle, p: int, a: int | None = None) -> AperyTable:
    """Apery set of a/p in S/p, found by direct search of quotient members.

    ``a`` defaults to the smallest generator.
    """
    if a is None:
        if not oracle.generators:
            raise ParameterDomain("oracle has no generator list; pass a explicitly")
        a = oracle.generators[0]
    if p < 1 or a % p or p == a:
        raise ParameterDomain(f"p={p} must be a proper divisor of a={a}")
    return quotient_oracle(oracle, p).apery(a // p)


def gcns_oracle(spec: GcnsSpec) -> SemigroupOracle:
    return oracle_build(spec.A)


def ndrp_m(spec: GcnsSpec, p: int, r: int, m: int) -> int:
    """``O_B^H(m*a + r*p) * a/p + (m*a/p + r)*d``; its minimum over m is N_{dr,p}."""
    a = spec.a
    if p < 1 or a % p or p == a:
        raise ParameterDomain(f"p={p} must be a proper divisor of a={a}")
    q = a // p
    if not 0 <= r < q:
        raise ParameterDomain(f"r={r} outside [0, {q - 1}]")
    if m < 0:
        raise ParameterDomain(f"m must be nonnegative, got {m}")
    return o_bh(spec.B, spec.s, spec.u, m * a + r * p) * q + (m * q + r) * spec.d


def opt_oracle_table(B: Sequence[int], M: int) -> list[int]:
    """Minimum coin counts for every amount 0..M (unbounded knapsack DP)."""
    best = [0] + [None] * M
    for n in range(1, M + 1):
        cands = [best[n - b] for b in B if b <= n and best[n - b] is not None]
        best[n] = min(cands) + 1 if cands else None
    return best


def opt_oracle(B: Sequence[int], M: int) -> int:
    return opt_oracle_table(B, M)[M]
