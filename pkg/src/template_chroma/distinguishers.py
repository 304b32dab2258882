"""Exact minimum distinguishers.

A coordinate set distinguishes a template when every pair of points
differs somewhere inside it.  Finding the least such set is a hitting-set
instance over the pairwise difference sets, solved exactly by scanning
subset sizes upward (at most C(k,2) sets over dim elements).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import IndexOutOfRange
from .templates import Point, Template


@dataclass(frozen=True)
class DistinguisherResult:
    size: int
    witness: frozenset[int]
    all_minimum: Optional[tuple[frozenset[int], ...]] = None


def is_distinguisher(template: Template, coords: set[int] | frozenset[int]) -> bool:
    """True iff the coordinates in ``coords`` jointly separate all points."""
    index = set(coords)
    for i in index:
        if i < 0 or i >= template.dim:
            raise IndexOutOfRange(
                f"coordinate {i} out of range for dim {template.dim}", coord=i
            )
    return _hits_all(_difference_sets(template.points), index)


def _difference_sets(points: Sequence[Point]) -> list[frozenset[int]]:
    d = len(points[0])
    return [
        frozenset(i for i in range(d) if x[i] != y[i])
        for x, y in itertools.combinations(points, 2)
    ]


def _hits_all(diff_sets: Sequence[frozenset[int]], index: set[int]) -> bool:
    return all(ds & index for ds in diff_sets)


def min_distinguisher(template: Template, include_all: bool = False) -> DistinguisherResult:
    """Exact minimum distinguisher; ties broken by lexicographically least
    witness (subsets scanned in combinations order, sizes ascending)."""
    diff_sets = _difference_sets(template.points)
    d = template.dim
    for size in range(1, d + 1):
        found: list[frozenset[int]] = []
        for combo in itertools.combinations(range(d), size):
            if _hits_all(diff_sets, set(combo)):
                found.append(frozenset(combo))
                if not include_all:
                    break
        if found:
            return DistinguisherResult(
                size=size,
                witness=found[0],
                all_minimum=tuple(found) if include_all else None,
            )
    raise AssertionError("full coordinate set always distinguishes")


def min_distinguisher_size(template: Template) -> int:
    return min_distinguisher(template).size
