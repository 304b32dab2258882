"""Symbolic arithmetic of finite cardinals and alephs.

Supported values: Finite(n) for n >= 0 and Aleph(i) with i a natural
number or omega.  The continuum is pinned by a ContinuumSetting asserting
2^aleph_0 = aleph_c for a finite c >= 1 (uncountable cofinality rules out
aleph_omega).  Successor arithmetic beyond these indices is rejected
rather than guessed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Union

from .errors import IndexOutOfRange, UnsupportedIndex

OMEGA = "omega"
AlephIndex = Union[int, str]  # int or OMEGA


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    finite: int | None = None
    aleph: AlephIndex | None = None

    def __post_init__(self):
        if (self.finite is None) == (self.aleph is None):
            raise UnsupportedIndex("exactly one of finite/aleph must be set")
        if self.finite is not None and self.finite < 0:
            raise UnsupportedIndex(f"finite cardinal must be >= 0, got {self.finite}")
        if self.aleph is not None and self.aleph != OMEGA:
            if not isinstance(self.aleph, int) or self.aleph < 0:
                raise UnsupportedIndex(f"unsupported aleph index {self.aleph!r}")

    @property
    def is_finite(self) -> bool:
        return self.finite is not None

    def _key(self) -> tuple[int, int, int]:
        if self.finite is not None:
            return (0, 0, self.finite)
        if self.aleph == OMEGA:
            return (1, 1, 0)
        return (1, 0, self.aleph)  # type: ignore[arg-type]

    def __lt__(self, other: "Cardinal") -> bool:
        return self._key() < other._key()

    def render(self) -> str:
        if self.finite is not None:
            return str(self.finite)
        return f"aleph_{self.aleph}"

    def __str__(self) -> str:
        return self.render()


def finite(n: int) -> Cardinal:
    return Cardinal(finite=n)


def aleph(index: AlephIndex) -> Cardinal:
    return Cardinal(aleph=index)


ALEPH_0 = aleph(0)
ALEPH_OMEGA = aleph(OMEGA)

_CARDINAL_RE = re.compile(r"^(?:(\d+)|aleph_(?:(\d+)|(omega)))$")


def parse_cardinal(text: str) -> Cardinal:
    """Inverse of render: "5", "aleph_3", "aleph_omega"."""
    m = _CARDINAL_RE.match(text.strip())
    if not m:
        raise UnsupportedIndex(f"cannot parse cardinal {text!r}", text=text)
    if m.group(1) is not None:
        return finite(int(m.group(1)))
    if m.group(3) is not None:
        return ALEPH_OMEGA
    return aleph(int(m.group(2)))


@dataclass(frozen=True)
class ContinuumSetting:
    """The assumption 2^aleph_0 = aleph_c."""

    c: int

    def __post_init__(self):
        if self.c < 1:
            raise IndexOutOfRange(f"continuum index must be >= 1, got {self.c}", c=self.c)

    @property
    def continuum(self) -> Cardinal:
        return aleph(self.c)


def compare(a: Cardinal, b: Cardinal) -> int:
    """-1, 0, or 1 under the total order."""
    if a < b:
        return -1
    if b < a:
        return 1
    return 0


def successor_n(kappa: Cardinal, n: AlephIndex) -> Cardinal:
    """n-fold cardinal successor; aleph_a ^{+n} = aleph_{a+n}.

    n may be a natural number or OMEGA (a + omega = omega for finite a).
    Successors of finite cardinals and of aleph_omega are unsupported.
    """
    if kappa.is_finite:
        raise UnsupportedIndex("successor of a finite cardinal is not supported")
    if n == OMEGA:
        if kappa.aleph == OMEGA:
            raise UnsupportedIndex("aleph_omega^{+omega} is outside the supported indices")
        return ALEPH_OMEGA
    if not isinstance(n, int) or n < 0:
        raise UnsupportedIndex(f"successor count must be a natural number, got {n!r}")
    if n == 0:
        return kappa
    if kappa.aleph == OMEGA:
        raise UnsupportedIndex("successors of aleph_omega are outside the supported indices")
    return aleph(kappa.aleph + n)  # type: ignore[operator]


def card_sum(a: Cardinal, b: Cardinal) -> Cardinal:
    """Cardinal addition: ordinary sum when both finite, max otherwise."""
    if a.is_finite and b.is_finite:
        return finite(a.finite + b.finite)  # type: ignore[operator]
    return max(a, b)


def least_aleph_reaching(setting: ContinuumSetting, steps: int) -> Cardinal:
    """Least kappa with kappa^{+steps} >= 2^aleph_0 = aleph_c.

    No finite cardinal qualifies; aleph_m qualifies iff m + steps >= c.
    """
    if steps < 0:
        raise IndexOutOfRange(f"steps must be >= 0, got {steps}", steps=steps)
    return aleph(max(0, setting.c - steps))
