from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class AperyTable:
    """Apery set of ``modulus`` in a numerical semigroup.

    ``entries[r]`` is the least semigroup element congruent to r mod modulus.
    """

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.modulus:
            raise ValueError(f"expected {self.modulus} entries, got {len(self.entries)}")

    def frobenius(self) -> int:
        """Brauer-Shockley: largest Apery element minus the modulus."""
        return max(self.entries) - self.modulus

    def genus(self) -> int:
        """Selmer: ``sum(entries)/w - (w-1)/2``."""
        g = Fraction(sum(self.entries), self.modulus) - Fraction(self.modulus - 1, 2)
        if g.denominator != 1:
            raise ValueError(f"non-integral genus {g} from Apery table")
        return int(g)

    def to_list(self) -> list[int]:
        return list(self.entries)
