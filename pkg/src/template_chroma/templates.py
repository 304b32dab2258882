"""Canonical representation, enumeration, and structural predicates for
d-dimensional k-templates.

A template is a set of k distinct d-tuples; only the per-coordinate
equality pattern matters.  Coordinate positions are fixed: an isomorphism
may relabel values within a coordinate but never permutes coordinates.

Canonical form: over all point orderings, relabel each coordinate's values
0,1,2,... by first occurrence and keep the ordering whose flattened point
list is lexicographically least.  The resulting point list is sorted, the
representative is unique per isomorphism class, and every ``Template``
instance stores it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .budget import Budget, default_budget
from .errors import (
    BudgetExceeded,
    CollapseError,
    DimensionMismatch,
    DuplicatePoint,
    IndexOutOfRange,
    RaggedTuple,
    TooFewPoints,
)

Point = tuple[int, ...]
Partition = tuple[frozenset[int], ...]


# ---------------------------------------------------------------------------
# set-partition helpers (indices 0..k-1)


def all_set_partitions(n: int) -> Iterator[Partition]:
    """All partitions of {0..n-1}, blocks sorted by least element."""
    if n == 0:
        yield ()
        return

    def rec(i: int, blocks: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    for raw in rec(0, []):
        yield tuple(frozenset(b) for b in raw)


def partition_of_column(points: Sequence[Point], coord: int) -> Partition:
    """Group point indices by equal value in the given coordinate."""
    by_value: dict[int, list[int]] = {}
    for idx, pt in enumerate(points):
        by_value.setdefault(pt[coord], []).append(idx)
    return tuple(sorted((frozenset(g) for g in by_value.values()), key=min))


def meet_is_discrete(partitions: Sequence[Partition], k: int) -> bool:
    """True iff the common refinement of the partitions separates all indices."""
    signature: list[list[int]] = [[] for _ in range(k)]
    for part in partitions:
        block_of = {}
        for bi, block in enumerate(part):
            for j in block:
                block_of[j] = bi
        for j in range(k):
            signature[j].append(block_of[j])
    return len({tuple(s) for s in signature}) == k


def coarsenings_of(partition: Partition) -> Iterator[Partition]:
    """All partitions coarser than (or equal to) the given one."""
    blocks = list(partition)
    for grouping in all_set_partitions(len(blocks)):
        merged = []
        for group in grouping:
            union: frozenset[int] = frozenset()
            for bi in group:
                union |= blocks[bi]
            merged.append(union)
        yield tuple(sorted(merged, key=min))


# ---------------------------------------------------------------------------
# canonical labeling


def canonical_points(points: Sequence[Point]) -> tuple[Point, ...]:
    """Unique representative of the isomorphism class of ``points``.

    Greedy lexicographic minimization over point orderings: at every depth
    all orderings achieving the minimal relabeled prefix are kept, so the
    result equals the brute-force minimum over all k! orderings.
    """
    k = len(points)
    d = len(points[0])
    # frontier entries: (used index set, per-coordinate value->label maps)
    frontier: list[tuple[frozenset[int], tuple[dict[int, int], ...]]] = [
        (frozenset(), tuple({} for _ in range(d)))
    ]
    out: list[Point] = []
    for _ in range(k):
        best: Optional[Point] = None
        winners: list[tuple[frozenset[int], tuple[dict[int, int], ...], int]] = []
        for used, maps in frontier:
            for idx in range(k):
                if idx in used:
                    continue
                pt = points[idx]
                lab = tuple(maps[c].get(pt[c], len(maps[c])) for c in range(d))
                if best is None or lab < best:
                    best = lab
                    winners = [(used, maps, idx)]
                elif lab == best:
                    winners.append((used, maps, idx))
        assert best is not None
        out.append(best)
        next_frontier = []
        seen = set()
        for used, maps, idx in winners:
            pt = points[idx]
            new_maps = []
            for c in range(d):
                m = maps[c]
                if pt[c] in m:
                    new_maps.append(m)
                else:
                    grown = dict(m)
                    grown[pt[c]] = len(grown)
                    new_maps.append(grown)
            state = (
                used | {idx},
                tuple(new_maps),
            )
            key = (state[0], tuple(tuple(sorted(m.items())) for m in state[1]))
            if key in seen:
                continue
            seen.add(key)
            next_frontier.append(state)
        frontier = next_frontier
    return tuple(out)


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class Template:
    """k distinct d-tuples, stored in canonical form."""

    dim: int
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        if len(pts) < 2:
            raise TooFewPoints(f"need at least 2 points, got {len(pts)}", k=len(pts))
        if self.dim < 1:
            raise DimensionMismatch(f"dimension must be >= 1, got {self.dim}", dim=self.dim)
        for idx, p in enumerate(pts):
            if len(p) != self.dim:
                raise RaggedTuple(
                    f"point {idx} has length {len(p)}, expected {self.dim}", index=idx
                )
            if not all(isinstance(v, int) for v in p):
                raise RaggedTuple(
                    f"point {idx} has a non-integer coordinate", index=idx
                )
        seen: dict[Point, int] = {}
        for idx, p in enumerate(pts):
            if p in seen:
                raise DuplicatePoint(
                    f"points {seen[p]} and {idx} are identical", index=idx, first=seen[p]
                )
            seen[p] = idx
        object.__setattr__(self, "points", canonical_points(pts))

    @property
    def k(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {"dim": self.dim, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, obj: dict) -> "Template":
        points = obj["points"]
        tpl = validate_template(points)
        if "dim" in obj and obj["dim"] != tpl.dim:
            raise DimensionMismatch(
                f"declared dim {obj['dim']} != point length {tpl.dim}", dim=obj["dim"]
            )
        return tpl


@dataclass(frozen=True)
class PartitionTuple:
    """Per-coordinate partitions of the point indices; the isomorphism core."""

    parts: tuple[Partition, ...]

    def __post_init__(self):
        if not self.parts:
            return
        k = sum(len(b) for b in self.parts[0])
        for part in self.parts:
            covered = sorted(j for block in part for j in block)
            if covered != list(range(k)):
                raise IndexOutOfRange("partition blocks must cover the index set exactly")
        if not meet_is_discrete(self.parts, k):
            raise DuplicatePoint("common refinement of the partitions is not discrete")


def validate_template(raw: Sequence[Sequence[int]]) -> Template:
    """Canonicalize a raw point list; rejects duplicates, ragged tuples, k < 2."""
    if not raw:
        raise TooFewPoints("empty point list", k=0)
    dim = len(raw[0])
    return Template(dim=dim, points=tuple(tuple(p) for p in raw))


def coordinate_partitions(template: Template) -> PartitionTuple:
    """Partition i groups the indices of points sharing coordinate-i value."""
    return PartitionTuple(
        parts=tuple(partition_of_column(template.points, c) for c in range(template.dim))
    )


def canonical_form(template: Template) -> Template:
    """Unique representative of the isomorphism class (identity on Templates,
    which canonicalize on construction)."""
    return Template(dim=template.dim, points=template.points)


def is_isomorphic(left: Template, right: Template) -> bool:
    """Bijection preserving per-coordinate equality both ways exists?"""
    if left.dim != right.dim or left.k != right.k:
        return False
    return left.points == right.points


def is_simple(template: Template) -> bool:
    """Every coordinate m has two points equal everywhere except exactly m."""
    return _points_simple(template.points, template.dim)


def _points_simple(points: Sequence[Point], dim: int) -> bool:
    for m in range(dim):
        found = False
        for x, y in itertools.combinations(points, 2):
            if all((x[i] == y[i]) == (i != m) for i in range(dim)):
                found = True
                break
        if not found:
            return False
    return True


def connected_components(template: Template) -> list[list[int]]:
    """Components of the 'shares some coordinate value' graph, by least index."""
    return _components(template.points)


def _components(points: Sequence[Point]) -> list[list[int]]:
    k = len(points)
    d = len(points[0])
    seen = [False] * k
    comps = []
    for start in range(k):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in range(k):
                if not seen[v] and any(points[u][c] == points[v][c] for c in range(d)):
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(template: Template) -> bool:
    return len(connected_components(template)) == 1


def find_structure_map(
    source_points: Sequence[Point], image_points: Sequence[Point]
) -> Optional[tuple[int, ...]]:
    """First (lexicographically least) bijection f with x_i = y_i implying
    f(x)_i = f(y)_i, as a tuple mapping source index -> image index; None
    if absent.

    Raw-point form so callers can keep their own labeling (grid subsets).
    """
    k = len(source_points)
    if len(image_points) != k:
        return None
    d = len(source_points[0])
    # quick reject: image partitions only coarsen, so per coordinate the
    # image cannot have more distinct values than the source
    for c in range(d):
        if len({q[c] for q in image_points}) > len({p[c] for p in source_points}):
            return None
    source_block = [
        {
            idx: bi
            for bi, block in enumerate(partition_of_column(source_points, c))
            for idx in block
        }
        for c in range(d)
    ]
    n_blocks = [len(set(sb.values())) for sb in source_block]
    assignment: list[int] = []
    used = [False] * k
    block_value: list[list[Optional[int]]] = [[None] * n_blocks[c] for c in range(d)]

    def backtrack(u: int) -> bool:
        if u == k:
            return True
        for qi in range(k):
            if used[qi]:
                continue
            touched = []
            ok = True
            for c in range(d):
                b = source_block[c][u]
                v = image_points[qi][c]
                current = block_value[c][b]
                if current is None:
                    block_value[c][b] = v
                    touched.append((c, b))
                elif current != v:
                    ok = False
                    break
            if ok:
                used[qi] = True
                assignment.append(qi)
                if backtrack(u + 1):
                    return True
                assignment.pop()
                used[qi] = False
            for c, b in touched:
                block_value[c][b] = None
        return False

    if backtrack(0):
        return tuple(assignment)
    return None


def is_homomorphic_image(source: Template, image: Template) -> Optional[tuple[int, ...]]:
    """Witness bijection showing the second template is a homomorphic image
    of the first, or None."""
    if source.dim != image.dim:
        raise DimensionMismatch(
            f"dimensions differ: {source.dim} vs {image.dim}",
            left=source.dim,
            right=image.dim,
        )
    if source.k != image.k:
        raise DimensionMismatch(
            f"point counts differ: {source.k} vs {image.k}",
            left=source.k,
            right=image.k,
        )
    return find_structure_map(source.points, image.points)


def _points_from_partitions(parts: Sequence[Partition], k: int) -> tuple[Point, ...]:
    block_of = []
    for part in parts:
        m = {}
        for bi, block in enumerate(part):
            for j in block:
                m[j] = bi
        block_of.append(m)
    return tuple(tuple(block_of[c][j] for c in range(len(parts))) for j in range(k))


def homomorphic_images(template: Template, budget: Budget | None = None) -> list[Template]:
    """All canonical k-templates that are homomorphic images of the input.

    Equivalently: all d-tuples of partitions coarsening the coordinate
    partitions whose common refinement is still discrete.
    """
    budget = budget or default_budget()
    k = template.k
    per_coord = [
        list(coarsenings_of(partition_of_column(template.points, c)))
        for c in range(template.dim)
    ]
    total = 1
    for options in per_coord:
        total *= len(options)
    if total > budget.max_scan:
        raise BudgetExceeded(
            f"{total} coarsening combinations exceed scan cap {budget.max_scan}",
            combinations=total,
        )
    images: dict[tuple[Point, ...], Template] = {}
    for combo in itertools.product(*per_coord):
        if not meet_is_discrete(combo, k):
            continue
        tpl = Template(dim=template.dim, points=_points_from_partitions(combo, k))
        images[tpl.points] = tpl
    return sorted(images.values(), key=lambda t: t.points)


def enumerate_templates(
    d: int, k: int, simple_only: bool = False, budget: Budget | None = None
) -> list[Template]:
    """All isomorphism classes of d-dimensional k-templates, canonical order."""
    budget = budget or default_budget()
    if d < 1 or k < 2:
        raise IndexOutOfRange(f"need d >= 1 and k >= 2, got d={d}, k={k}", d=d, k=k)
    if d > budget.max_dim or k > budget.max_points:
        raise BudgetExceeded(
            f"(d={d}, k={k}) outside enumeration budget "
            f"(d <= {budget.max_dim}, k <= {budget.max_points})",
            d=d,
            k=k,
        )
    partitions = list(all_set_partitions(k))
    if len(partitions) ** d > budget.max_scan:
        raise BudgetExceeded(
            f"{len(partitions) ** d} partition tuples exceed scan cap {budget.max_scan}",
            combinations=len(partitions) ** d,
        )
    classes: dict[tuple[Point, ...], Template] = {}
    for combo in itertools.product(partitions, repeat=d):
        if not meet_is_discrete(combo, k):
            continue
        tpl = Template(dim=d, points=_points_from_partitions(combo, k))
        classes.setdefault(tpl.points, tpl)
    result = sorted(classes.values(), key=lambda t: t.points)
    if simple_only:
        result = [t for t in result if is_simple(t)]
    return result


def project(template: Template, coords: Iterable[int]) -> Template:
    """Restrict every point to the given coordinates (re-indexed ascending).

    Raises CollapseError when two points become identical, i.e. the
    coordinate set is not a distinguisher.
    """
    index = sorted(set(coords))
    if not index:
        raise IndexOutOfRange("coordinate set must be nonempty")
    if index[0] < 0 or index[-1] >= template.dim:
        raise IndexOutOfRange(
            f"coordinates {index} out of range for dim {template.dim}", coords=index
        )
    restricted = [tuple(p[i] for i in index) for p in template.points]
    seen: dict[Point, int] = {}
    for idx, p in enumerate(restricted):
        if p in seen:
            raise CollapseError(
                f"points {seen[p]} and {idx} collapse under projection onto {index}",
                index=idx,
                first=seen[p],
                coords=index,
            )
        seen[p] = idx
    return Template(dim=len(index), points=tuple(restricted))


def pad_with_constant(template: Template, d_target: int, fill: int = 0) -> Template:
    """Extend every point with the constant fill value up to d_target."""
    if d_target < template.dim:
        raise DimensionMismatch(
            f"target dim {d_target} below current dim {template.dim}", target=d_target
        )
    extra = (fill,) * (d_target - template.dim)
    return Template(dim=d_target, points=tuple(p + extra for p in template.points))


def basis_template(d: int, k: int) -> Template:
    """Simple d-dimensional k-template: zero vector, the d standard basis
    vectors, plus k-d-1 constant filler tuples (requires k >= d+1)."""
    if k < d + 1:
        raise IndexOutOfRange(f"simple template needs k >= d+1, got d={d}, k={k}")
    pts: list[Point] = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    pts.append((0,) * d)
    for extra in range(k - d - 1):
        pts.append((extra + 2,) * d)
    return Template(dim=d, points=tuple(pts))
