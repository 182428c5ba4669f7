from fractions import Fraction as F

import pytest

from realdelpezzo.corpus import three_parabolas
from realdelpezzo.exact import BiPoly, UniPoly
from realdelpezzo.plane_model import (
    Bisection,
    ConfigPoint,
    Configuration,
    ConfigurationError,
    InvalidTrisection,
    Section,
    Trisection,
    UnsupportedSingularity,
    chart_swap,
    classify_singularity,
    complex_singular_count,
    delta_budget,
    delta_invariant,
    factor_trisection,
    from_sections,
    intersection_multiplicity,
    milnor_number,
    singular_points,
    trisection_from_json,
)
from realdelpezzo.plane_model.fibers import delta_multiplicity_at_infinity, real_critical_values

U = UniPoly
x, y = BiPoly.x(), BiPoly.y()


class TestTrisection:
    def test_degree_bounds(self):
        with pytest.raises(InvalidTrisection):
            Trisection(U([0, 0, 0, 1]), U([]), U([]))
        with pytest.raises(InvalidTrisection):
            Trisection(U([]), U([]), U([0] * 7 + [1]))
        with pytest.raises(InvalidTrisection):
            Trisection(U([]), U([]), U([1]), chart="V")

    def test_chart_swap_is_an_involution(self):
        t = Trisection(U([1, 2, 3]), U([0, 1, 0, 0, -2]), U([5, 0, 0, 0, 0, 0, 1]))
        s = chart_swap(t)
        assert s.chart == "infinity"
        assert chart_swap(s) == t

    def test_chart_swap_reverses_coefficients(self):
        # x' = 1/x, y' = y / x^2: a_k is reversed in degree 2k
        t = Trisection(U([1, 2]), U([3]), U([0, 0, 0, 0, 0, 0, 7]))
        s = chart_swap(t)
        assert s.a == U([0, 2, 1]) and s.b == U([0, 0, 0, 0, 3]) and s.c == U([7])

    def test_reflect(self):
        t = three_parabolas()
        r = t.reflect()
        for xv, yv in [(F(1), F(2)), (F(-3, 2), F(1, 3))]:
            assert r.poly(xv, yv) == -t.poly(xv, -yv)

    def test_from_sections_and_factor(self):
        t = three_parabolas()
        # oracle: the product (y)(y - x^2)(y - 2(x-1)^2) expanded by hand
        want = y * (y - x * x) * (y - (x - 1) * (x - 1) * 2)
        assert t.poly == want
        parts = factor_trisection(t)
        assert sorted(p.s.coeffs for p in parts) == sorted(
            [U([]).coeffs, U([0, 0, 1]).coeffs, U([2, -4, 2]).coeffs])

    def test_bisection_product(self):
        t = from_sections([Section(U([1])), Bisection(U([0, 1]), U([-1, 0, 0, 0, 1]))])
        assert t.poly == (y - 1) * (y * y + x * y + x ** 4 - 1)
        assert len(factor_trisection(t)) == 2

    def test_json(self):
        t = three_parabolas()
        assert trisection_from_json(t.to_json()) == t
        doc = {"sections": [{"kind": "section", "s": ["0"]}, {"kind": "bisection", "p": [], "q": ["-1", "0", "1"]}]}
        assert trisection_from_json(doc).poly == y * (y * y + x * x - 1)
        with pytest.raises(InvalidTrisection):
            trisection_from_json({"a": ["0.5"], "b": [], "c": []})

    def test_total_delta_is_twelve(self):
        t = three_parabolas()
        disc = t.discriminant()
        assert disc.degree + delta_multiplicity_at_infinity(t) == 12


class TestMilnor:
    @pytest.mark.parametrize("k", range(1, 9))
    def test_a_k_normal_form(self, k):
        # y^2 - x^(k+1) has an A_k point at the origin
        assert milnor_number(y * y - x ** (k + 1), 0, 0) == k

    def test_intersection_examples(self):
        assert intersection_multiplicity(y, y - x * x) == 2
        assert intersection_multiplicity(y - x, y + x, 0, 0) == 1
        assert intersection_multiplicity(y - 1, y - x, 1, 1) == 1
        assert intersection_multiplicity(y, y * (x + 1)) == -1


class TestSingularities:
    def test_three_parabolas(self):
        sings = singular_points(three_parabolas())
        assert [s.name for s in sings] == ["A3+", "A1", "A3+", "A1"]
        assert [(s.x, s.y) for s in sings if s.mu == 3] == [(0, 0), (1, 0)]
        # nodes at x^2 = 2 (x - 1)^2, i.e. x = 2 -+ sqrt 2
        for s in sings:
            if s.mu == 1:
                assert s.x.sign_of(U([2, -4, 1])) == 0
                assert s.real_branches == 2
        assert all(s.mu_route == "discriminant+intersection" for s in sings if s.x.is_rational)

    def test_cusp_sign_flips_under_reflection(self):
        t = from_sections([Section(U([5])), Bisection(U([]), U([0, 0, 0, -1]))])  # (y - 5)(y^2 - x^3)
        (cusp,) = [s for s in singular_points(t) if s.mu == 2]
        assert cusp.name == "A2+"
        (cusp_r,) = [s for s in singular_points(t.reflect()) if s.mu == 2]
        assert cusp_r.name == "A2-"

    def test_solitary_node(self):
        # y^2 + x^2 + x^4 = 0: an isolated real point at the origin
        t = from_sections([Section(U([7])), Bisection(U([]), U([0, 0, 1, 0, 1]))])
        (node,) = [s for s in singular_points(t) if s.chart == "U" and s.y == 0]
        assert node.mu == 1 and node.real_branches == 0
        (node_r,) = [s for s in singular_points(t.reflect()) if s.chart == "U" and s.y == 0]
        assert node_r.real_branches == 0 and {node.sign, node_r.sign} == {"+", "o"}

    def test_classify_point(self):
        t = three_parabolas()
        assert classify_singularity(t, 0, 0).name == "A3+"
        with pytest.raises(ValueError):
            classify_singularity(t, F(1, 2), 0)

    def test_triple_point_is_out_of_scope(self):
        t = from_sections([Section(U([0])), Section(U([0, 1])), Section(U([0, -1]))])
        with pytest.raises(UnsupportedSingularity):
            singular_points(t)

    def test_complex_pairs_reported(self):
        # y (y - x^2 - 1) (y + x^2 + 1) meets only over x^2 = -1: complex nodes
        t = from_sections([Section(U([0])), Section(U([1, 0, 1])), Section(U([-1, 0, -1]))])
        assert complex_singular_count(t) >= 2
        assert [s for s in singular_points(t) if s.chart == "U"] == []

    def test_critical_values_sorted(self):
        vals = real_critical_values(three_parabolas())
        assert vals == sorted(vals)


class TestConfiguration:
    def test_labels_and_json(self):
        c = Configuration.of(1, 3, 2, 1)
        assert c.label() == "A3+A2+2A1"
        assert Configuration.from_json(c.to_json()).sorted() == c.sorted()
        mixed = Configuration((ConfigPoint(2, "-"), ConfigPoint(2, "+")))
        assert mixed.label() == "A2++A2-"

    def test_validation(self):
        with pytest.raises(ConfigurationError):
            ConfigPoint(0)
        with pytest.raises(ConfigurationError):
            ConfigPoint(1, "?")
        with pytest.raises(ConfigurationError):
            Configuration.from_json([{"mu": "2"}])

    def test_delta_budget(self):
        assert [delta_invariant(m) for m in range(1, 7)] == [1, 1, 2, 2, 3, 3]
        assert delta_budget(Configuration.of(2, 2, 2, 2)) == (4, 4, True)
        assert delta_budget(Configuration.of(3, 3, 3)) == (6, 4, False)
        assert delta_budget(Configuration.of(3, 3, 3), components=3)[2]
