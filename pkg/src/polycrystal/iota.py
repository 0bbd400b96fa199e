"""Periodic index sequences and their occurrence accessors.

The infinite sequence iota = (i_1, i_2, ...) is stored by one period;
``period[0]`` is i_1.  The conventional display prints sequences
right-to-left ("..., i_2, i_1"), which is what
:meth:`IotaSequence.from_display` and the CLI --iota flag accept.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .cartan import CartanData


@dataclass(frozen=True)
class IotaSequence:
    cartan: CartanData
    period: tuple[int, ...]

    def __post_init__(self):
        m = len(self.period)
        if m == 0:
            raise ValueError("period must be nonempty")
        present = set(self.period)
        valid = set(self.cartan.indices)
        if not present <= valid:
            raise ValueError(f"period uses indices {sorted(present - valid)} outside 1..{self.cartan.rank}")
        if present != valid:
            raise ValueError(f"every index must occur in the period; missing {sorted(valid - present)}")
        if m == 1:
            # Only possible at rank 1; the no-immediate-repeat condition cannot hold.
            warnings.warn("period of length 1 repeats its index consecutively", stacklevel=3)
            return
        for t in range(m):
            if self.period[t] == self.period[(t + 1) % m]:
                raise ValueError(f"indices repeat consecutively at period offset {t + 1}")

    @classmethod
    def from_display(cls, cartan: CartanData, period) -> "IotaSequence":
        """Build from right-to-left display order (leftmost entry applied last)."""
        if isinstance(period, str):
            period = [int(v) for v in period.split(",")]
        return cls(cartan, tuple(reversed([int(v) for v in period])))

    @property
    def period_len(self) -> int:
        return len(self.period)

    def index(self, k: int) -> int:
        """The index i_k, k >= 1."""
        if k < 1:
            raise ValueError("positions are 1-based")
        return self.period[(k - 1) % len(self.period)]

    def k_plus(self, k: int) -> int:
        """Least l > k with i_l = i_k; exists by periodicity."""
        i = self.index(k)
        for l in range(k + 1, k + len(self.period) + 1):
            if self.index(l) == i:
                return l
        raise AssertionError("unreachable: every index recurs within one period")

    def k_minus(self, k: int) -> int:
        """Greatest l < k with i_l = i_k, or 0 if k is the first occurrence."""
        i = self.index(k)
        for l in range(k - 1, max(0, k - len(self.period) - 1), -1):
            if l >= 1 and self.index(l) == i:
                return l
        return 0

    def first(self, i: int) -> int:
        """The first position carrying index i; lies within the first period."""
        for k in range(1, len(self.period) + 1):
            if self.index(k) == i:
                return k
        raise ValueError(f"index {i} does not occur")


def standard_iota(cartan: CartanData) -> IotaSequence:
    """The cyclic sequence 1,2,...,n,1,2,... (display: ...,n,...,2,1)."""
    return IotaSequence(cartan, tuple(cartan.indices))
