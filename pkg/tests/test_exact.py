from fractions import Fraction as F

import pytest

from realdelpezzo.exact import (
    AlgebraicNumber,
    BiPoly,
    RationalFormatError,
    UniPoly,
    count_roots,
    cubic_discriminant,
    depressed_coefficients,
    ext_gcd,
    format_rat,
    isolate_real_roots,
    parse_rat,
    poly_gcd,
    rational_between,
    real_roots_with_multiplicity,
    resultant,
    root_multiplicity,
    sort_algebraic,
    squarefree_part,
    sylvester_matrix,
    univariate_resultant,
    yun_factors,
)


def sqrt(n):
    (r,) = [a for a in isolate_real_roots(UniPoly([-n, 0, 1])) if a > 0]
    return r


class TestRationals:
    def test_round_trip(self):
        for v in [F(0), F(3), F(-7, 3), F(22, 7)]:
            assert parse_rat(format_rat(v)) == v

    def test_canonical_form(self):
        assert format_rat(F(4, 6)) == "2/3"
        assert format_rat(F(-6, 3)) == "-2"
        assert parse_rat(" 10/4 ") == F(5, 2)

    @pytest.mark.parametrize("bad", ["1.5", "1e3", "", "x", True, 1.5, None, "1/0"])
    def test_rejects_inexact(self, bad):
        with pytest.raises(RationalFormatError):
            parse_rat(bad)


class TestUniPoly:
    def test_arithmetic(self):
        p = UniPoly([1, 1])
        assert p * p == UniPoly([1, 2, 1])
        assert (p ** 3).coeffs == tuple(F(c) for c in (1, 3, 3, 1))
        assert (p ** 3 - p ** 3).is_zero()
        assert UniPoly([0, 0, 0]).degree == -1 or UniPoly([0, 0, 0]).is_zero()

    def test_divmod(self):
        a = UniPoly([-1, 0, 0, 1])
        b = UniPoly([-1, 1])
        q, r = a.divmod(b)
        assert r.is_zero() and q == UniPoly([1, 1, 1])
        q, r = UniPoly([1, 0, 1]).divmod(UniPoly([0, 2]))
        assert q * UniPoly([0, 2]) + r == UniPoly([1, 0, 1])

    def test_gcd_and_squarefree(self):
        p = UniPoly.from_roots([1, 1, 2, 3, 3, 3])
        assert poly_gcd(p, p.derivative()).monic() == UniPoly.from_roots([1, 3, 3]).monic()
        assert squarefree_part(p).monic() == UniPoly.from_roots([1, 2, 3]).monic()
        factors = yun_factors(p)
        assert [f.monic() for f in factors[:3]] == [
            UniPoly([-2, 1]), UniPoly([-1, 1]), UniPoly([-3, 1])]

    def test_ext_gcd_bezout(self):
        p, q = UniPoly.from_roots([1, 2, 5]), UniPoly.from_roots([2, 7])
        g, s, t = ext_gcd(p, q)
        assert s * p + t * q == g
        assert g.monic() == UniPoly([-2, 1])

    def test_compose_and_shift(self):
        p = UniPoly([1, 2, 3])
        assert p.taylor_shift(1)(F(0)) == p(F(1))
        assert p.compose(UniPoly([0, 2]))(F(1)) == p(F(2))


class TestResultants:
    def test_univariate_against_root_products(self):
        # oracle: Res(f, g) = lc(f)^deg g * prod g(roots of f)
        f = UniPoly.from_roots([1, 2])
        g = UniPoly([-3, 0, 1])
        assert univariate_resultant(f, g) == g(F(1)) * g(F(2))
        assert univariate_resultant(f, UniPoly.from_roots([2, 9])) == 0

    def test_sylvester_shape(self):
        m = sylvester_matrix([UniPoly([1])] * 3, [UniPoly([1])] * 4)
        assert len(m) == 5 and all(len(row) == 5 for row in m)

    def test_bivariate_eliminates_y(self):
        x, y = BiPoly.x(), BiPoly.y()
        # circle and line y = x meet where 2x^2 = 1
        r = resultant(x * x + y * y - 1, y - x, "y")
        assert r.monic() == UniPoly([F(-1, 2), 0, 1])


class TestDiscriminant:
    def test_matches_classical_formula(self):
        # oracle: a^2 b^2 - 4 b^3 - 4 a^3 c - 27 c^2 + 18 a b c at sample points
        a, b, c = UniPoly([1, 2]), UniPoly([0, -1, 3]), UniPoly([5, 0, 0, 1])
        d = cubic_discriminant(a, b, c)
        for x in [F(0), F(1), F(-2, 3), F(5)]:
            A, B, C = a(x), b(x), c(x)
            want = A * A * B * B - 4 * B ** 3 - 4 * A ** 3 * C - 27 * C * C + 18 * A * B * C
            assert d(x) == want

    def test_depressed_form_keeps_discriminant(self):
        a, b, c = UniPoly([3]), UniPoly([0, 1]), UniPoly([1, 0, 2])
        P, Q = depressed_coefficients(a, b, c)
        assert cubic_discriminant(UniPoly(), P, Q) == cubic_discriminant(a, b, c)


class TestRoots:
    def test_isolation(self):
        p = UniPoly.from_roots([-3, F(1, 2), 4]) * UniPoly([1, 0, 1])
        roots = isolate_real_roots(p)
        assert [r.value for r in roots] == [-3, F(1, 2), 4]

    def test_count_roots_half_open(self):
        p = UniPoly.from_roots([0, 1, 2])
        assert count_roots(p) == 3
        assert count_roots(p, 0, 2) == 2  # (0, 2]
        assert count_roots(p, F(-1, 2), F(1, 2)) == 1

    def test_irrational_comparisons(self):
        r2, r3 = sqrt(2), sqrt(3)
        assert not r2.is_rational
        assert F(7, 5) < r2 < F(3, 2) < r3
        assert r2 == sqrt(2)
        assert sort_algebraic([r3, AlgebraicNumber.rational(1), r2])[1] == r2

    def test_rational_detection(self):
        a = AlgebraicNumber(UniPoly.from_roots([F(1, 3), 5]), 0, 1)
        assert a.is_rational and a.value == F(1, 3)

    def test_sign_of(self):
        r2 = sqrt(2)
        assert r2.sign_of(UniPoly([-2, 0, 1])) == 0
        assert r2.sign_of(UniPoly([F(-141, 100), 1])) == 1
        assert r2.sign_of(UniPoly([F(-142, 100), 1])) == -1

    def test_multiplicities(self):
        p = UniPoly.from_roots([1, 1, 1, 2])
        assert [(r.value, k) for r, k in real_roots_with_multiplicity(p)] == [(1, 3), (2, 1)]
        assert root_multiplicity(p, 1) == 3 and root_multiplicity(p, 5) == 0

    def test_rational_between(self):
        r2, r3 = sqrt(2), sqrt(3)
        q = rational_between(r2, r3)
        assert r2 < q < r3
        assert rational_between(None, r2) < r2 < rational_between(r2, None)

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            AlgebraicNumber(UniPoly([-2, 0, 1]), -2, 2)
