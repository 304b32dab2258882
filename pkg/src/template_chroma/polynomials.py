"""Bridge between templates and polynomial zero hypergraphs.

The polynomial fragment: sums and products whose atoms are squared
coordinate differences (x{a}_{i} - x{b}_{j})^2, plus the constant 0.  A
template's coordinate equalities become a sum of atoms; symmetrization
multiplies all k! permutation copies; the reflexivity factor multiplies
squared-distance terms that vanish whenever two variable tuples coincide.
All evaluation is exact over rationals.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .budget import Budget, default_budget
from .errors import (
    BudgetExceeded,
    DegenerateTemplate,
    DuplicatePoint,
    IndexOutOfRange,
    NotConjunctive,
    PolynomialSyntaxError,
)
from .finite_lab import FiniteHypergraph, Rational, to_fraction
from .templates import Template

Number = Union[int, Fraction]


@dataclass(frozen=True)
class SquaredDiff:
    """(x{a_var}_{a_coord} - x{b_var}_{b_coord})^2, operands in sorted order."""

    a_var: int
    a_coord: int
    b_var: int
    b_coord: int

    def __post_init__(self):
        if (self.a_var, self.a_coord) > (self.b_var, self.b_coord):
            a_var, a_coord = self.a_var, self.a_coord
            object.__setattr__(self, "a_var", self.b_var)
            object.__setattr__(self, "a_coord", self.b_coord)
            object.__setattr__(self, "b_var", a_var)
            object.__setattr__(self, "b_coord", a_coord)


@dataclass(frozen=True)
class Sum:
    terms: tuple["Node", ...]


@dataclass(frozen=True)
class Product:
    factors: tuple["Node", ...]


Node = Union[SquaredDiff, Sum, Product]

ZERO = Sum(terms=())


def make_sum(terms: Sequence[Node]) -> Node:
    """Sum node, unwrapped when there is a single term (normal form)."""
    if len(terms) == 1:
        return terms[0]
    return Sum(terms=tuple(terms))


def make_product(factors: Sequence[Node]) -> Node:
    if len(factors) == 1:
        return factors[0]
    return Product(factors=tuple(factors))


@dataclass(frozen=True)
class TemplatePolynomial:
    k: int  # number of variable tuples
    n: int  # tuple arity
    body: Node
    symmetrized: bool = False
    reflexive: bool = False

    def __post_init__(self):
        for var, coord in _atom_indices(self.body):
            if not 0 <= var < self.k:
                raise IndexOutOfRange(f"variable x{var} out of range for k={self.k}", var=var)
            if not 0 <= coord < self.n:
                raise IndexOutOfRange(
                    f"coordinate {coord} out of range for n={self.n}", coord=coord
                )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "symmetrized": self.symmetrized,
            "reflexive": self.reflexive,
            "body": node_to_json(self.body),
        }


def _atom_indices(node: Node):
    if isinstance(node, SquaredDiff):
        yield node.a_var, node.a_coord
        yield node.b_var, node.b_coord
    elif isinstance(node, Sum):
        for t in node.terms:
            yield from _atom_indices(t)
    else:
        for f in node.factors:
            yield from _atom_indices(f)


def node_to_json(node: Node) -> dict:
    if isinstance(node, SquaredDiff):
        return {
            "op": "sqdiff",
            "a": [node.a_var, node.a_coord],
            "b": [node.b_var, node.b_coord],
        }
    if isinstance(node, Sum):
        return {"op": "sum", "terms": [node_to_json(t) for t in node.terms]}
    return {"op": "product", "factors": [node_to_json(f) for f in node.factors]}


def node_from_json(obj: dict) -> Node:
    op = obj.get("op")
    if op == "sqdiff":
        return SquaredDiff(obj["a"][0], obj["a"][1], obj["b"][0], obj["b"][1])
    if op == "sum":
        return Sum(terms=tuple(node_from_json(t) for t in obj["terms"]))
    if op == "product":
        return Product(factors=tuple(node_from_json(f) for f in obj["factors"]))
    raise IndexOutOfRange(f"unknown AST op {op!r}", op=op)


# ---------------------------------------------------------------------------
# evaluation (exact)


def evaluate(node: Node, points: Sequence[Sequence[Number]]) -> Number:
    if isinstance(node, SquaredDiff):
        diff = points[node.a_var][node.a_coord] - points[node.b_var][node.b_coord]
        return diff * diff
    if isinstance(node, Sum):
        total: Number = 0
        for term in node.terms:
            total += evaluate(term, points)
        return total
    result: Number = 1
    for factor in node.factors:
        result *= evaluate(factor, points)
        if result == 0:
            return 0
    return result


def vanishes_unordered(poly: TemplatePolynomial, points: Sequence[Sequence[Number]]) -> bool:
    """Unordered-edge semantics: some ordering of the points is a zero."""
    if len(points) != poly.k:
        raise IndexOutOfRange(f"expected {poly.k} points, got {len(points)}")
    return any(
        evaluate(poly.body, [points[i] for i in perm]) == 0
        for perm in itertools.permutations(range(poly.k))
    )


# ---------------------------------------------------------------------------
# template <-> polynomial


def _substitute_vars(node: Node, perm: Sequence[int]) -> Node:
    if isinstance(node, SquaredDiff):
        return SquaredDiff(perm[node.a_var], node.a_coord, perm[node.b_var], node.b_coord)
    if isinstance(node, Sum):
        return Sum(terms=tuple(_substitute_vars(t, perm) for t in node.terms))
    return Product(factors=tuple(_substitute_vars(f, perm) for f in node.factors))


def _distance_factor(i: int, j: int, n: int) -> Node:
    return make_sum([SquaredDiff(i, c, j, c) for c in range(n)])


def template_to_polynomial(
    template: Template, symmetrize: bool = False, reflexive: bool = False
) -> TemplatePolynomial:
    """Sum of squared differences over the template's coordinate equalities;
    optional product over all variable permutations and reflexivity factors."""
    if symmetrize and template.k > 5:
        raise BudgetExceeded(
            f"symmetrization over k={template.k} variables refused", k=template.k
        )
    atoms = []
    for u, v in itertools.combinations(range(template.k), 2):
        for c in range(template.dim):
            if template.points[u][c] == template.points[v][c]:
                atoms.append(SquaredDiff(u, c, v, c))
    base: Node = Sum(terms=tuple(atoms)) if len(atoms) != 1 else atoms[0]
    factors: list[Node] = []
    if symmetrize:
        factors.extend(
            _substitute_vars(base, perm)
            for perm in itertools.permutations(range(template.k))
        )
    else:
        factors.append(base)
    if reflexive:
        factors.extend(
            _distance_factor(i, j, template.dim)
            for i, j in itertools.combinations(range(template.k), 2)
        )
    body: Node = make_product(factors)
    return TemplatePolynomial(
        k=template.k,
        n=template.dim,
        body=body,
        symmetrized=symmetrize,
        reflexive=reflexive,
    )


def polynomial_to_template(poly: TemplatePolynomial) -> Template:
    """Inverse direction for conjunctive bodies: the transitive closure of
    the atoms' forced equalities becomes the coordinate-equality pattern."""
    if isinstance(poly.body, SquaredDiff):
        atoms_in = (poly.body,)
    elif isinstance(poly.body, Sum) and all(
        isinstance(t, SquaredDiff) for t in poly.body.terms
    ):
        atoms_in = poly.body.terms
    else:
        raise NotConjunctive("body must be a plain sum of squared-difference atoms")
    k, n = poly.k, poly.n
    parent: dict[tuple[int, int], tuple[int, int]] = {
        (u, c): (u, c) for u in range(k) for c in range(n)
    }

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for atom in atoms_in:
        a = find((atom.a_var, atom.a_coord))
        b = find((atom.b_var, atom.b_coord))
        if a != b:
            parent[a] = b
    labels: dict[tuple[int, int], int] = {}
    points = []
    for u in range(k):
        pt = []
        for c in range(n):
            root = find((u, c))
            labels.setdefault(root, len(labels))
            pt.append(labels[root])
        points.append(tuple(pt))
    for u, v in itertools.combinations(range(k), 2):
        if points[u] == points[v]:
            raise DegenerateTemplate(
                f"forced equalities collapse variables x{u} and x{v}", left=u, right=v
            )
    return Template(dim=n, points=tuple(points))


# ---------------------------------------------------------------------------
# rendering and parsing


def _render_atom(atom: SquaredDiff) -> str:
    return (
        f"(x{atom.a_var}_{atom.a_coord} - x{atom.b_var}_{atom.b_coord})^2"
    )


def render_polynomial(node: Node) -> str:
    if isinstance(node, SquaredDiff):
        return _render_atom(node)
    if isinstance(node, Sum):
        if not node.terms:
            return "0"
        return " + ".join(
            _render_in_sum(term) for term in node.terms
        )
    return " * ".join(_render_in_product(f) for f in node.factors)


def _render_in_sum(node: Node) -> str:
    if isinstance(node, SquaredDiff):
        return _render_atom(node)
    if isinstance(node, Product):
        return render_polynomial(node)
    return f"({render_polynomial(node)})"


def _render_in_product(node: Node) -> str:
    if isinstance(node, SquaredDiff):
        return _render_atom(node)
    return f"({render_polynomial(node)})"


_TOKEN_RE = re.compile(
    r"\s*(?P<tok>\(|\)|\+|-|\*|\^2|0|[a-zA-Z][a-zA-Z0-9]*_[0-9]+)"
)


class _Parser:
    def __init__(self, text: str, k: int, n: int):
        self.text = text
        self.k = k
        self.n = n
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                raise PolynomialSyntaxError(
                    f"unexpected input at position {pos}",
                    position=pos,
                    expected="'(', ')', '+', '-', '*', '^2', '0' or a variable",
                )
            self.tokens.append((m.group("tok"), m.start("tok")))
            pos = m.end()
        self.idx = 0

    def peek(self) -> str | None:
        if self.idx < len(self.tokens):
            return self.tokens[self.idx][0]
        return None

    def position(self) -> int:
        if self.idx < len(self.tokens):
            return self.tokens[self.idx][1]
        return len(self.text)

    def expect(self, token: str):
        if self.peek() != token:
            raise PolynomialSyntaxError(
                f"expected {token!r} at position {self.position()}",
                position=self.position(),
                expected=token,
            )
        self.idx += 1

    def parse(self) -> Node:
        node = self.parse_expr()
        if self.peek() is not None:
            raise PolynomialSyntaxError(
                f"trailing input at position {self.position()}",
                position=self.position(),
                expected="end of input",
            )
        return node

    def parse_expr(self) -> Node:
        terms = [self.parse_term()]
        while self.peek() == "+":
            self.idx += 1
            terms.append(self.parse_term())
        return make_sum(terms)

    def parse_term(self) -> Node:
        factors = [self.parse_factor()]
        while self.peek() == "*":
            self.idx += 1
            factors.append(self.parse_factor())
        return make_product(factors)

    def parse_factor(self) -> Node:
        tok = self.peek()
        if tok == "0":
            self.idx += 1
            return ZERO
        if tok == "(":
            mark = self.idx
            try:
                return self.parse_sqdiff()
            except PolynomialSyntaxError:
                self.idx = mark
            self.expect("(")
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise PolynomialSyntaxError(
            f"expected a factor at position {self.position()}",
            position=self.position(),
            expected="'(', '0' or a squared difference",
        )

    def parse_sqdiff(self) -> SquaredDiff:
        self.expect("(")
        a_var, a_coord = self.parse_variable()
        self.expect("-")
        b_var, b_coord = self.parse_variable()
        self.expect(")")
        self.expect("^2")
        return SquaredDiff(a_var, a_coord, b_var, b_coord)

    def parse_variable(self) -> tuple[int, int]:
        tok = self.peek()
        if tok is None or not re.fullmatch(r"[a-zA-Z][a-zA-Z0-9]*_[0-9]+", tok):
            raise PolynomialSyntaxError(
                f"expected a variable at position {self.position()}",
                position=self.position(),
                expected="variable like x0_0",
            )
        name, _, coord_text = tok.rpartition("_")
        coord = int(coord_text)
        var = self._variable_index(name)
        if not 0 <= var < self.k:
            raise IndexOutOfRange(f"variable {name!r} out of range for k={self.k}", var=name)
        if not 0 <= coord < self.n:
            raise IndexOutOfRange(
                f"coordinate {coord} out of range for n={self.n}", coord=coord
            )
        self.idx += 1
        return var, coord

    _ALIASES = {"x": 0, "y": 1, "z": 2}

    def _variable_index(self, name: str) -> int:
        m = re.fullmatch(r"x([0-9]+)", name)
        if m:
            return int(m.group(1))
        if name in self._ALIASES and self.k <= 3:
            return self._ALIASES[name]
        raise PolynomialSyntaxError(
            f"unknown variable {name!r} at position {self.position()}",
            position=self.position(),
            expected="x<index>_<coord>" + (" or x/y/z aliases" if self.k <= 3 else ""),
        )


def parse_polynomial(text: str, k: int, n: int) -> TemplatePolynomial:
    body = _Parser(text, k, n).parse()
    return TemplatePolynomial(k=k, n=n, body=body)


# ---------------------------------------------------------------------------
# zero hypergraphs over explicit point sets


def zero_hypergraph_on_grid(
    poly: TemplatePolynomial,
    points: Sequence[Sequence[Rational]],
    budget: Budget | None = None,
) -> FiniteHypergraph:
    """Edges: k-subsets of the given points for which some ordering makes
    the polynomial vanish.  Exact rational arithmetic throughout."""
    budget = budget or default_budget()
    verts: list[tuple[Fraction, ...]] = []
    for idx, point in enumerate(points):
        if len(point) != poly.n:
            raise IndexOutOfRange(
                f"point {idx} has arity {len(point)}, expected {poly.n}", index=idx
            )
        verts.append(tuple(to_fraction(v) for v in point))
    seen: dict[tuple[Fraction, ...], int] = {}
    for idx, v in enumerate(verts):
        if v in seen:
            raise DuplicatePoint(f"points {seen[v]} and {idx} are identical", index=idx)
        seen[v] = idx
    if len(verts) > budget.max_vertices:
        raise BudgetExceeded(
            f"{len(verts)} points exceed vertex cap {budget.max_vertices}"
        )
    n_subsets = math.comb(len(verts), poly.k)
    if n_subsets > budget.max_scan:
        raise BudgetExceeded(
            f"{n_subsets} candidate subsets exceed scan cap {budget.max_scan}"
        )
    edges = []
    for combo in itertools.combinations(range(len(verts)), poly.k):
        if vanishes_unordered(poly, [verts[i] for i in combo]):
            edges.append(combo)
    return FiniteHypergraph(k=poly.k, vertices=tuple(verts), edges=tuple(edges))
