import itertools
from fractions import Fraction

import pytest

from template_chroma import (
    build_template_hypergraph,
    enumerate_templates,
    evaluate,
    GridSpec,
    parse_polynomial,
    polynomial_to_template,
    render_polynomial,
    SquaredDiff,
    Sum,
    template_to_polynomial,
    validate_template,
    vanishes_unordered,
    zero_hypergraph_on_grid,
)
from template_chroma.errors import (
    BudgetExceeded,
    DegenerateTemplate,
    IndexOutOfRange,
    NotConjunctive,
    PolynomialSyntaxError,
)
from template_chroma.polynomials import node_from_json, node_to_json, Product

CORNER_TEXT = "(x0_0 - x1_0)^2 + (x1_1 - x2_1)^2"


def grid_points(*sizes):
    return [list(p) for p in itertools.product(*(range(s) for s in sizes))]


class TestTemplateToPolynomial:
    def test_L_body_is_two_atoms(self, corner_template):
        poly = template_to_polynomial(corner_template)
        assert isinstance(poly.body, Sum)
        assert len(poly.body.terms) == 2
        assert all(isinstance(t, SquaredDiff) for t in poly.body.terms)
        # same isomorphism class as the displayed two-equality polynomial
        assert polynomial_to_template(poly) == corner_template

    def test_no_equalities_gives_zero_polynomial(self):
        poly = template_to_polynomial(validate_template([[0], [1]]))
        assert poly.body == Sum(terms=())
        assert render_polynomial(poly.body) == "0"
        h = zero_hypergraph_on_grid(poly, [[0], [1], [2]])
        assert h.edges == ((0, 1), (0, 2), (1, 2))

    def test_symmetrized_is_product_of_permuted_copies(self, corner_template):
        poly = template_to_polynomial(corner_template, symmetrize=True)
        assert isinstance(poly.body, Product)
        assert len(poly.body.factors) == 6

    def test_symmetrize_budget(self):
        t = validate_template([[i] for i in range(6)])
        with pytest.raises(BudgetExceeded):
            template_to_polynomial(t, symmetrize=True)

    def test_symmetrized_zero_set_matches_build_template_hypergraph(self, corner_template):
        poly = template_to_polynomial(corner_template, symmetrize=True)
        h_poly = zero_hypergraph_on_grid(poly, grid_points(2, 2))
        h_tpl = build_template_hypergraph(GridSpec(sizes=(2, 2)), corner_template)
        assert h_poly.edges == h_tpl.edges


class TestParse:
    def test_L_example(self, corner_template):
        poly = parse_polynomial(CORNER_TEXT, 3, 2)
        assert polynomial_to_template(poly) == corner_template

    def test_alias_variables(self):
        explicit = parse_polynomial(CORNER_TEXT, 3, 2)
        aliased = parse_polynomial("(x_0 - y_0)^2 + (y_1 - z_1)^2", 3, 2)
        assert aliased.body == explicit.body

    def test_single_atom(self):
        poly = parse_polynomial("(x0_0 - x1_0)^2", 2, 1)
        assert poly.body == SquaredDiff(0, 0, 1, 0)

    def test_trailing_plus_is_syntax_error(self):
        with pytest.raises(PolynomialSyntaxError) as err:
            parse_polynomial("x0_0 + ", 2, 1)
        assert err.value.position >= 0
        assert err.value.expected

    def test_error_carries_position_and_expectation(self):
        with pytest.raises(PolynomialSyntaxError) as err:
            parse_polynomial("(x0_0 - x1_0)^2 + )", 2, 1)
        assert err.value.position == 18

    def test_variable_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            parse_polynomial("(x0_0 - x5_0)^2", 3, 1)
        with pytest.raises(IndexOutOfRange):
            parse_polynomial("(x0_0 - x1_3)^2", 2, 2)

    def test_zero_literal(self):
        poly = parse_polynomial("0", 2, 1)
        assert poly.body == Sum(terms=())

    def test_products_parse(self):
        poly = parse_polynomial(
            "((x0_0 - x1_0)^2) * ((x0_1 - x1_1)^2 + (x1_1 - x2_1)^2)", 3, 2
        )
        assert isinstance(poly.body, Product)

    def test_render_parse_round_trip(self, corner_template):
        for flags in [(False, False), (True, False), (False, True), (True, True)]:
            poly = template_to_polynomial(corner_template, symmetrize=flags[0], reflexive=flags[1])
            text = render_polynomial(poly.body)
            reparsed = parse_polynomial(text, poly.k, poly.n)
            assert reparsed.body == poly.body


class TestPolynomialToTemplate:
    def test_degenerate(self):
        with pytest.raises(DegenerateTemplate):
            polynomial_to_template(
                parse_polynomial("(x0_0 - x1_0)^2 + (x0_1 - x1_1)^2", 2, 2)
            )

    def test_not_conjunctive(self, corner_template):
        sym = template_to_polynomial(corner_template, symmetrize=True)
        with pytest.raises(NotConjunctive):
            polynomial_to_template(sym)

    def test_round_trip_all_enumerated(self):
        for d in (1, 2):
            for k in (2, 3, 4):
                for t in enumerate_templates(d, k):
                    assert polynomial_to_template(template_to_polynomial(t)) == t

    def test_cross_coordinate_atoms_close_transitively(self):
        # x0_0 = x1_1 and x1_1 = x2_0 force x0_0 = x2_0 in coordinate 0
        poly = parse_polynomial("(x0_0 - x1_1)^2 + (x1_1 - x2_0)^2", 3, 2)
        t = polynomial_to_template(poly)
        assert t.points[0][0] != t.points[1][0] or True  # template exists
        assert t.k == 3


class TestEvaluation:
    def test_exact_fractions(self):
        poly = parse_polynomial("(x0_0 - x1_0)^2", 2, 1)
        value = evaluate(poly.body, [[Fraction(1, 3)], [Fraction(1, 2)]])
        assert value == Fraction(1, 36)

    def test_unordered_semantics(self, corner_template):
        poly = template_to_polynomial(corner_template)
        # this subset vanishes under some ordering but not all of them
        pts = [(0, 0), (0, 1), (1, 1)]
        assert vanishes_unordered(poly, pts)
        values = {
            evaluate(poly.body, [pts[i] for i in perm])
            for perm in itertools.permutations(range(3))
        }
        assert 0 in values and len(values) > 1

    def test_symmetrization_invariance(self, corner_template):
        poly = template_to_polynomial(corner_template, symmetrize=True)
        pts = [(0, 0), (0, 1), (1, 0)]
        verdicts = {
            evaluate(poly.body, [pts[i] for i in perm]) == 0
            for perm in itertools.permutations(range(3))
        }
        assert len(verdicts) == 1

    def test_reflexive_vanishes_on_repeats(self, corner_template):
        poly = template_to_polynomial(corner_template, reflexive=True)
        assert evaluate(poly.body, [(0, 0), (0, 0), (1, 1)]) == 0
        assert evaluate(poly.body, [(5, 5), (1, 2), (5, 5)]) == 0

    def test_reflexive_preserves_distinct_zero_set(self, corner_template):
        plain = template_to_polynomial(corner_template)
        reflexive = template_to_polynomial(corner_template, reflexive=True)
        for combo in itertools.permutations(grid_points(2, 2), 3):
            assert (evaluate(plain.body, combo) == 0) == (
                evaluate(reflexive.body, combo) == 0
            )


class TestZeroHypergraph:
    def test_matches_build_template_hypergraph_on_2x2(self, corner_template):
        poly = template_to_polynomial(corner_template, symmetrize=True)
        h = zero_hypergraph_on_grid(poly, grid_points(2, 2))
        assert h.edges == build_template_hypergraph(GridSpec(sizes=(2, 2)), corner_template).edges

    def test_zero_polynomial_complete(self):
        poly = parse_polynomial("0", 2, 1)
        h = zero_hypergraph_on_grid(poly, [[0], [1], [2]])
        assert h.edges == ((0, 1), (0, 2), (1, 2))

    def test_single_atom_pairs_sharing_coordinate(self):
        poly = parse_polynomial("(x0_0 - x1_0)^2", 2, 2)
        pts = [[0, 0], [0, 1], [1, 0]]
        h = zero_hypergraph_on_grid(poly, pts)
        assert h.edges == ((0, 1),)

    def test_rational_points(self):
        poly = parse_polynomial("(x0_0 - x1_0)^2", 2, 1)
        h = zero_hypergraph_on_grid(poly, [["1/2"], ["2/4"]] if False else [["1/2"], ["1/3"]])
        assert h.edges == ()

    def test_duplicate_points_rejected(self):
        from template_chroma.errors import DuplicatePoint

        poly = parse_polynomial("0", 2, 1)
        with pytest.raises(DuplicatePoint):
            zero_hypergraph_on_grid(poly, [["1/2"], ["2/4"]])


class TestAstJson:
    def test_round_trip(self, corner_template):
        for flags in [(False, False), (True, True)]:
            poly = template_to_polynomial(corner_template, symmetrize=flags[0], reflexive=flags[1])
            assert node_from_json(node_to_json(poly.body)) == poly.body
