"""Shared brute-force oracles, deliberately independent of the library
internals they check."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from template_chroma import Template, validate_template


def brute_canonical(points) -> tuple[tuple[int, ...], ...]:
    """Minimum over all k! orderings of the relabel-by-first-occurrence
    flattened point list."""
    pts = [tuple(p) for p in points]
    k, d = len(pts), len(pts[0])
    best = None
    for perm in itertools.permutations(range(k)):
        maps: list[dict] = [{} for _ in range(d)]
        out = []
        for i in perm:
            lab = []
            for c in range(d):
                m = maps[c]
                if pts[i][c] not in m:
                    m[pts[i][c]] = len(m)
                lab.append(m[pts[i][c]])
            out.append(tuple(lab))
        flat = tuple(v for p in out for v in p)
        if best is None or flat < best[0]:
            best = (flat, tuple(out))
    return best[1]


def brute_min_distinguisher(points) -> tuple[int, frozenset[int]]:
    """Scan subsets by size; first subset separating all pairs wins."""
    pts = [tuple(p) for p in points]
    d = len(pts[0])
    for size in range(1, d + 1):
        for combo in itertools.combinations(range(d), size):
            if all(
                any(x[i] != y[i] for i in combo)
                for x, y in itertools.combinations(pts, 2)
            ):
                return size, frozenset(combo)
    raise AssertionError("unreachable")


def brute_chromatic(vertex_count: int, edges, max_colors: int = 8) -> int:
    """Exhaustive chromatic number over all colorings; tiny instances only."""
    if vertex_count == 0:
        return 0
    if not edges:
        return 1
    for c in range(1, max_colors + 1):
        for coloring in itertools.product(range(c), repeat=vertex_count):
            if all(len({coloring[v] for v in e}) > 1 for e in edges):
                return c
    raise AssertionError(f"no coloring with <= {max_colors} colors")


def brute_simplest_rational(lo: Fraction, hi: Fraction, max_den: int = 64) -> Fraction:
    """Smallest denominator, then smallest magnitude (positive on ties)."""
    for q in range(1, max_den + 1):
        lo_p = lo.numerator * q // lo.denominator
        candidates = []
        p = lo_p
        while Fraction(p, q) <= lo:
            p += 1
        while Fraction(p, q) < hi:
            candidates.append(Fraction(p, q))
            p += 1
        if candidates:
            return min(candidates, key=lambda f: (abs(f.numerator), -f.numerator))
    raise AssertionError(f"no rational with denominator <= {max_den} in ({lo},{hi})")


def random_relabel(points, rng: random.Random):
    """Shuffle point order and apply random injective value maps per
    coordinate; the isomorphism class is unchanged."""
    pts = [tuple(p) for p in points]
    d = len(pts[0])
    out = []
    value_maps = []
    for c in range(d):
        values = sorted({p[c] for p in pts})
        fresh = rng.sample(range(100), len(values))
        value_maps.append(dict(zip(values, fresh)))
    for p in pts:
        out.append(tuple(value_maps[c][p[c]] for c in range(d)))
    rng.shuffle(out)
    return out


@pytest.fixture
def corner_template() -> Template:
    return validate_template([[0, 0], [0, 1], [1, 1]])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
