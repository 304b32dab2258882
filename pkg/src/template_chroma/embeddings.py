"""Constructive dimension shifts between template hypergraphs.

Two constructions: projection onto a minimum distinguisher (dimension
drops to the distinguisher size) and the lift recursion raising dimension
by one while preserving that size.  The lift is certified at desk scale
by sampling: the pairing-based map must carry edges to edges and
non-edges to non-edges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .distinguishers import is_distinguisher, min_distinguisher, min_distinguisher_size
from .errors import DimensionMismatch, IndexOutOfRange, SamplerExhausted
from .templates import (
    _components,
    find_structure_map,
    is_simple,
    partition_of_column,
    Point,
    project,
    Template,
)


@dataclass(frozen=True)
class DistinguisherReduction:
    """Projection onto a minimum distinguisher, with the padding map from
    reduced tuples back to full-dimension tuples that embeds the reduced
    hypergraph into the original one."""

    reduced: Template
    witness: tuple[int, ...]  # kept coordinates, ascending
    source_dim: int
    fill: int = 0

    @property
    def simple(self) -> bool:
        return is_simple(self.reduced)

    def map_point(self, point: Sequence[int]) -> Point:
        if len(point) != len(self.witness):
            raise DimensionMismatch(
                f"expected {len(self.witness)} coordinates, got {len(point)}"
            )
        out = [self.fill] * self.source_dim
        for value, coord in zip(point, self.witness):
            out[coord] = value
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "template": self.reduced.to_json(),
            "witness": sorted(self.witness),
            "source_dim": self.source_dim,
            "fill": self.fill,
            "simple": self.simple,
            "map": f"place coordinates at positions {sorted(self.witness)}, "
            f"fill the rest with {self.fill}",
        }


def reduce_to_distinguisher(template: Template) -> DistinguisherReduction:
    witness = tuple(sorted(min_distinguisher(template).witness))
    return DistinguisherReduction(
        reduced=project(template, witness), witness=witness, source_dim=template.dim
    )


@dataclass(frozen=True)
class LiftResult:
    """Lift of a base template to a higher dimension with e preserved and
    the projection onto the original coordinates recovering the base."""

    template: Template
    base: Template
    trace: tuple[str, ...]

    def __post_init__(self):
        assert project(self.template, range(self.base.dim)) == self.base
        assert min_distinguisher_size(self.template) == min_distinguisher_size(self.base)

    def to_json(self) -> dict:
        return {
            "template": self.template.to_json(),
            "base": self.base.to_json(),
            "trace": list(self.trace),
        }


def _lift_points(points: list[Point]) -> tuple[list[Point], list[str]]:
    if len(points) == 1:
        return [points[0] + (0,)], ["single"]
    comps = _components(points)
    if len(comps) == 1:
        return [p + (0,) for p in points], [f"connected k={len(points)}"]
    first = comps[0]
    rest = sorted(i for comp in comps[1:] for i in comp)
    lift0, trace0 = _lift_points([points[i] for i in first])
    lift1, trace1 = _lift_points([points[i] for i in rest])
    # make the new coordinate disjoint across the two parts
    offset = max(p[-1] for p in lift0) + 1
    lift1 = [p[:-1] + (p[-1] + offset,) for p in lift1]
    out: list[Optional[Point]] = [None] * len(points)
    for slot, i in enumerate(first):
        out[i] = lift0[slot]
    for slot, i in enumerate(rest):
        out[i] = lift1[slot]
    trace = [f"split k0={len(first)} k1={len(rest)}"] + trace0 + trace1
    return out, trace  # type: ignore[return-value]


def lift_once(template: Template) -> LiftResult:
    """One-dimension lift: connected templates get a constant new
    coordinate; disconnected ones recurse on {first component} vs {rest}
    with disjoint new-coordinate labels."""
    lifted, trace = _lift_points(list(template.points))
    return LiftResult(
        template=Template(dim=template.dim + 1, points=tuple(lifted)),
        base=template,
        trace=tuple(trace),
    )


def lift_to_dim(template: Template, target_dim: int) -> LiftResult:
    if target_dim < template.dim:
        raise DimensionMismatch(
            f"target dim {target_dim} below dim {template.dim}", target=target_dim
        )
    current = template
    trace: list[str] = []
    for step in range(target_dim - template.dim):
        lifted = lift_once(current)
        trace.append(f"step {step + 1}: " + "; ".join(lifted.trace))
        current = lifted.template
    return LiftResult(template=current, base=template, trace=tuple(trace))


def distinguisher_restriction_check(base: Template, lifted: Template) -> bool:
    """Experimental: every distinguisher of the lift, restricted to the base
    coordinates and extended by any single base coordinate, distinguishes
    the base.  Reported, not asserted."""
    import itertools

    d = base.dim
    if lifted.dim != d + 1:
        raise DimensionMismatch(f"expected dim {d + 1}, got {lifted.dim}")
    for size in range(1, lifted.dim + 1):
        for combo in itertools.combinations(range(lifted.dim), size):
            if not is_distinguisher(lifted, set(combo)):
                continue
            restricted = set(combo) & set(range(d))
            for j in range(d):
                if not is_distinguisher(base, restricted | {j}):
                    return False
    return True


# ---------------------------------------------------------------------------
# the pairing-based embedding map


def cantor_pair(a: int, n: int) -> int:
    return (a + n) * (a + n + 1) // 2 + n


def cantor_unpair(z: int) -> tuple[int, int]:
    w = int(((8 * z + 1) ** 0.5 - 1) // 2)
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    while w * (w + 1) // 2 > z:
        w -= 1
    n = z - w * (w + 1) // 2
    return w - n, n


def pairing_map(d: int) -> Callable[[Sequence[int]], Point]:
    """Injective map from (d+1)-tuples to d-tuples: the last coordinate
    selects a block, pair(a, .) relabels the first d coordinates into it."""
    if d < 1:
        raise IndexOutOfRange(f"need d >= 1, got {d}", d=d)

    def g(t: Sequence[int]) -> Point:
        if len(t) != d + 1:
            raise DimensionMismatch(f"expected {d + 1} coordinates, got {len(t)}")
        return tuple(cantor_pair(t[d], t[i]) for i in range(d))

    return g


def pairing_map_chain(high_dim: int, low_dim: int) -> Callable[[Sequence[int]], Point]:
    """Composition of one-step maps taking high_dim-tuples to low_dim-tuples."""
    if not 1 <= low_dim <= high_dim:
        raise DimensionMismatch(f"need 1 <= {low_dim} <= {high_dim}")
    steps = [pairing_map(dim) for dim in range(high_dim - 1, low_dim - 1, -1)]

    def chain(t: Sequence[int]) -> Point:
        out = tuple(t)
        for step in steps:
            out = step(out)
        return out

    return chain


# ---------------------------------------------------------------------------
# sampled verification


@dataclass(frozen=True)
class SamplerSpec:
    seed: int = 0
    bound: int = 50
    count: int = 1000
    edge_fraction: float = 0.5  # fraction of samples drawn as copies of the lift


@dataclass(frozen=True)
class EmbeddingReport:
    samples_checked: int
    edge_agreements: int
    failures: tuple[tuple[Point, ...], ...]
    seed: int
    bound: int

    def __post_init__(self):
        assert bool(self.failures) == (self.edge_agreements < self.samples_checked)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "samples_checked": self.samples_checked,
            "edge_agreements": self.edge_agreements,
            "failures": [[list(p) for p in fail] for fail in self.failures],
            "seed": self.seed,
            "bound": self.bound,
        }


def _random_copy_of(template: Template, rng: random.Random, bound: int) -> list[Point]:
    """Isomorphic copy of the template inside [0, bound)^dim: per
    coordinate, an injective assignment of values to blocks."""
    points: list[list[int]] = [[0] * template.dim for _ in range(template.k)]
    for c in range(template.dim):
        blocks = partition_of_column(template.points, c)
        if len(blocks) > bound:
            raise SamplerExhausted(
                f"bound {bound} below {len(blocks)} blocks in coordinate {c}"
            )
        values = rng.sample(range(bound), len(blocks))
        for value, block in zip(values, blocks):
            for j in block:
                points[j][c] = value
    return [tuple(p) for p in points]


def _random_subset(
    k: int, dim: int, rng: random.Random, bound: int, attempts: int = 1000
) -> list[Point]:
    for _ in range(attempts):
        pts = [tuple(rng.randrange(bound) for _ in range(dim)) for _ in range(k)]
        if len(set(pts)) == k:
            return pts
    raise SamplerExhausted(f"could not draw {k} distinct points below {bound}")


def verify_embedding(
    base: Template,
    lifted: Template,
    mapping: Callable[[Sequence[int]], Point],
    sampler: SamplerSpec = SamplerSpec(),
) -> EmbeddingReport:
    """Draw k-subsets of the mapping's domain grid and check that each is
    an edge of the lifted hypergraph iff its image is an edge of the base
    hypergraph; both sides decided by the structure-map search."""
    if lifted.k != base.k:
        raise DimensionMismatch(f"point counts differ: {base.k} vs {lifted.k}")
    rng = random.Random(sampler.seed)
    agreements = 0
    failures: list[tuple[Point, ...]] = []
    for _ in range(sampler.count):
        if rng.random() < sampler.edge_fraction:
            subset = _random_copy_of(lifted, rng, sampler.bound)
        else:
            subset = _random_subset(lifted.k, lifted.dim, rng, sampler.bound)
        subset_is_edge = find_structure_map(lifted.points, subset) is not None
        image = [mapping(t) for t in subset]
        if len(set(image)) != base.k:
            image_is_edge = False
        else:
            image_is_edge = find_structure_map(base.points, image) is not None
        if subset_is_edge == image_is_edge:
            agreements += 1
        else:
            failures.append(tuple(subset))
    return EmbeddingReport(
        samples_checked=sampler.count,
        edge_agreements=agreements,
        failures=tuple(failures),
        seed=sampler.seed,
        bound=sampler.bound,
    )
