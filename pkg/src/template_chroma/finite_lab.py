"""Finite template hypergraphs over product grids and exact chromatic
numbers, plus the shift graph and its dense-interval coloring.

The solver is exact: iterative deepening on the color count with
backtracking, high-degree vertices first, first vertex pinned to color 0
and new colors introduced in order.  Exceeding the node cap is an error,
never a silent approximation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .budget import Budget, default_budget
from .errors import BudgetExceeded, DimensionMismatch, DuplicatePoint, IndexOutOfRange
from .templates import find_structure_map, Template

Label = tuple
Rational = Union[int, str, Fraction]


@dataclass(frozen=True)
class GridSpec:
    """Product grid X_0 x ... x X_{d-1} with |X_i| = sizes[i]."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if not self.sizes:
            raise IndexOutOfRange("grid needs at least one coordinate")
        if any(s < 1 for s in self.sizes):
            raise IndexOutOfRange(f"grid sizes must be >= 1, got {self.sizes}")
        cap = default_budget().max_vertices
        if math.prod(self.sizes) > cap:
            raise BudgetExceeded(
                f"{math.prod(self.sizes)} vertices exceed cap {cap}",
                vertices=math.prod(self.sizes),
            )

    @property
    def dim(self) -> int:
        return len(self.sizes)

    def vertices(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(s) for s in self.sizes)))


@dataclass(frozen=True)
class FiniteHypergraph:
    """Explicit vertex list with k-element edges (index sets, deduplicated)."""

    k: int
    vertices: tuple[Label, ...]
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = []
        for edge in self.edges:
            ids = tuple(sorted(edge))
            if len(set(ids)) != self.k:
                raise DuplicatePoint(f"edge {edge} must have {self.k} distinct vertices")
            if ids and (ids[0] < 0 or ids[-1] >= len(self.vertices)):
                raise IndexOutOfRange(f"edge {edge} references missing vertices")
            norm.append(ids)
        object.__setattr__(self, "edges", tuple(sorted(set(norm))))
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vertices": [render_label(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }


def render_label(label) -> list:
    out = []
    for part in label:
        if isinstance(part, Fraction):
            out.append(str(part.numerator) if part.denominator == 1 else str(part))
        else:
            out.append(part)
    return out


def build_template_hypergraph(
    grid: GridSpec, template: Template, budget: Budget | None = None
) -> FiniteHypergraph:
    """Hypergraph on the grid whose edges are the k-subsets that are
    homomorphic images of the template."""
    budget = budget or default_budget()
    if grid.dim != template.dim:
        raise DimensionMismatch(
            f"grid dim {grid.dim} != template dim {template.dim}",
            grid=grid.dim,
            template=template.dim,
        )
    verts = grid.vertices()
    k = template.k
    n_subsets = math.comb(len(verts), k)
    if n_subsets > budget.max_scan:
        raise BudgetExceeded(
            f"{n_subsets} candidate subsets exceed scan cap {budget.max_scan}",
            subsets=n_subsets,
        )
    # cheap necessary condition: an image never has more distinct values
    # per coordinate than the template does
    widths = [len({p[c] for p in template.points}) for c in range(template.dim)]
    edges = []
    for combo in itertools.combinations(range(len(verts)), k):
        pts = [verts[i] for i in combo]
        if any(len({q[c] for q in pts}) > widths[c] for c in range(template.dim)):
            continue
        if find_structure_map(template.points, pts) is not None:
            edges.append(combo)
    return FiniteHypergraph(k=k, vertices=tuple(verts), edges=tuple(edges))


def is_proper_coloring(
    H: FiniteHypergraph, coloring: Sequence[int] | Mapping[int, int]
) -> bool:
    """True iff the total coloring is constant on no edge."""
    if isinstance(coloring, Mapping):
        lookup = coloring
        if len(lookup) < H.vertex_count:
            raise IndexOutOfRange("coloring must cover every vertex")
    else:
        if len(coloring) != H.vertex_count:
            raise IndexOutOfRange("coloring must cover every vertex")
        lookup = {i: c for i, c in enumerate(coloring)}
    for edge in H.edges:
        first = lookup[edge[0]]
        if all(lookup[v] == first for v in edge[1:]):
            return False
    return True


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    coloring: tuple[int, ...]


def _edges_by_vertex(H: FiniteHypergraph) -> list[list[tuple[int, ...]]]:
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(H.vertex_count)]
    for edge in H.edges:
        for v in edge:
            incident[v].append(edge)
    return incident


def _degree_order(H: FiniteHypergraph) -> list[int]:
    degree = [0] * H.vertex_count
    for edge in H.edges:
        for v in edge:
            degree[v] += 1
    return sorted(range(H.vertex_count), key=lambda v: (-degree[v], v))


def _greedy(H: FiniteHypergraph, order: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    incident = _edges_by_vertex(H)
    color = [-1] * H.vertex_count
    used = 0
    for v in order:
        col = 0
        while any(
            all(color[u] == col for u in edge if u != v) for edge in incident[v]
        ):
            col += 1
        color[v] = col
        used = max(used, col + 1)
    return used, tuple(color)


def greedy_bound(H: FiniteHypergraph) -> int:
    """Proper-coloring size from the degree-order greedy; >= chromatic_exact."""
    if H.vertex_count == 0:
        return 0
    if not H.edges:
        return 1
    return _greedy(H, _degree_order(H))[0]


def _clique_lower_bound(H: FiniteHypergraph) -> int:
    if H.k != 2:
        return 2
    adjacency: list[set[int]] = [set() for _ in range(H.vertex_count)]
    for a, b in H.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    clique: list[int] = []
    for v in sorted(range(H.vertex_count), key=lambda u: -len(adjacency[u])):
        if all(u in adjacency[v] for u in clique):
            clique.append(v)
    return max(2, len(clique))


def chromatic_exact(H: FiniteHypergraph, budget: Budget | None = None) -> ColoringResult:
    """Least color count admitting a proper coloring, with a witness."""
    budget = budget or default_budget()
    n = H.vertex_count
    if n == 0:
        return ColoringResult(0, ())
    if not H.edges:
        return ColoringResult(1, (0,) * n)
    order = _degree_order(H)
    incident = _edges_by_vertex(H)
    upper, greedy_coloring = _greedy(H, order)
    nodes = 0

    def try_colors(c: int) -> Optional[tuple[int, ...]]:
        nonlocal nodes
        color = [-1] * n
        next_col = [0] * n
        max_used = [-1] * (n + 1)
        pos = 0
        while True:
            if pos == n:
                return tuple(color)
            v = order[pos]
            limit = min(c - 1, max_used[pos] + 1)
            col = next_col[pos]
            advanced = False
            while col <= limit:
                nodes += 1
                if nodes > budget.solver_nodes:
                    raise BudgetExceeded(
                        f"solver exceeded {budget.solver_nodes} nodes", nodes=nodes
                    )
                conflict = any(
                    all(color[u] == col for u in edge if u != v)
                    for edge in incident[v]
                )
                if not conflict:
                    color[v] = col
                    next_col[pos] = col + 1
                    max_used[pos + 1] = max(max_used[pos], col)
                    pos += 1
                    if pos < n:
                        next_col[pos] = 0
                    advanced = True
                    break
                col += 1
            if not advanced:
                next_col[pos] = 0
                pos -= 1
                if pos < 0:
                    return None
                color[order[pos]] = -1

    for c in range(_clique_lower_bound(H), upper):
        witness = try_colors(c)
        if witness is not None:
            return ColoringResult(c, witness)
    return ColoringResult(upper, greedy_coloring)


# ---------------------------------------------------------------------------
# shift graph: finite restriction of the zero graph of the 4-ary x_1 - y_0


def build_shift_graph(n: int) -> FiniteHypergraph:
    """Vertices: pairs (a,b) with 0 <= a < b < n; edges join (a,b),(b,c)."""
    if n < 2:
        raise IndexOutOfRange(f"need n >= 2, got {n}", n=n)
    verts = [(a, b) for a in range(n) for b in range(a + 1, n)]
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for (a, b) in verts:
        for c in range(b + 1, n):
            edges.append((index[(a, b)], index[(b, c)]))
    return FiniteHypergraph(k=2, vertices=tuple(verts), edges=tuple(edges))


# ---------------------------------------------------------------------------
# canonical rational in an open interval (Stern-Brocot descent)


def to_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Unique smallest-denominator rational strictly inside (lo, hi);
    denominator ties (integers) resolved toward smallest magnitude."""
    if not lo < hi:
        raise IndexOutOfRange(f"need lo < hi, got {lo} >= {hi}")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_rational_between(-hi, -lo)
    return _simplest_nonneg(lo, hi)


def _simplest_nonneg(lo: Fraction, hi: Fraction) -> Fraction:
    # 0 <= lo < hi
    floor_lo = lo.numerator // lo.denominator
    candidate = Fraction(floor_lo + 1)
    if candidate < hi:
        return candidate
    if lo == floor_lo:
        # interval (floor_lo, hi): fractional part is 1/q for the least
        # q with 1/q < hi - floor_lo
        span = hi - floor_lo
        q = span.denominator // span.numerator + 1
        return floor_lo + Fraction(1, q)
    inner = _simplest_nonneg(1 / (hi - floor_lo), 1 / (lo - floor_lo))
    return floor_lo + 1 / inner


@dataclass(frozen=True)
class ShiftColorToken:
    """Color of a point (a,b): a canonical rational strictly between the
    coordinates plus an orientation tag; the diagonal gets the zero token
    (tag None)."""

    value: Fraction
    tag: Optional[int]

    def to_json(self) -> dict:
        value = (
            str(self.value.numerator)
            if self.value.denominator == 1
            else str(self.value)
        )
        return {"value": value, "tag": self.tag}


ZERO_TOKEN = ShiftColorToken(value=Fraction(0), tag=None)


def shift_color(point: Sequence[Rational]) -> ShiftColorToken:
    """Proper coloring of the x_1 - y_0 zero graph restricted to rational
    pairs.  Orientation tags stand in for two disjoint dense rational sets."""
    if len(point) != 2:
        raise DimensionMismatch(f"expected a pair, got {len(point)} coordinates")
    a, b = (to_fraction(v) for v in point)
    if a == b:
        return ZERO_TOKEN
    if a < b:
        return ShiftColorToken(value=simplest_rational_between(a, b), tag=0)
    return ShiftColorToken(value=simplest_rational_between(b, a), tag=1)
