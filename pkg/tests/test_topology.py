import pytest

from realdelpezzo.analysis import analyze_cover
from realdelpezzo.corpus import named_curves, three_parabolas
from realdelpezzo.topology import (
    ADMISSIBLE_TYPES,
    Component,
    ComponentModel,
    IllegalSmoothing,
    PointRecord,
    SmoothedProfile,
    SmoothingChoice,
    SweepError,
    apply_all,
    apply_smoothing,
    euler_double_cover,
    euler_doubled,
    identify_M_infinity,
    in_P_X,
    is_globally_separating,
    positivity_regions,
    region_monotonicity,
    smoothing_admissible,
    smoothing_menu,
    sweep_decompose,
)

CURVES = {c.name: c for c in named_curves()}


def run(name):
    c = CURVES[name]
    return analyze_cover(c.trisection, c.sign)


class TestCells:
    def test_torus(self):
        cx = sweep_decompose(three_parabolas())
        assert cx.euler_characteristic() == 0

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            sweep_decompose(three_parabolas(), 2)

    def test_section_and_oval_by_hand(self):
        # f = (y - 3)(y^2 + x^4 - 1): the band above y = 3 doubles to a torus or Klein
        # bottle (chi 0), the disk inside the oval doubles to a sphere (chi 2)
        a = run("section-and-oval")
        assert sorted(c.chi for c in a.model.components) == [0, 2]
        assert a.euler_cells == 2
        assert euler_doubled(a.regions.complex) == 2

    def test_smooth_curve_with_empty_real_part_of_b_below(self):
        a = run("flexes")
        assert [c.chi for c in a.model.components] == [0] and a.euler_cells == 0


class TestComponents:
    def test_three_parabolas(self):
        a = run("three-parabolas")
        m = a.model
        assert sorted(c.chi for c in m.components) == [0, 2, 2]
        assert m.M_infinity.chi == 0
        assert sorted(p.mu for p in m.points) == [1, 1, 3, 3]
        assert all(p.separating for p in m.points)
        assert m.euler() == a.euler_cells == 0

    def test_cusps_on_the_top_component(self):
        m = run("deformed-X").model
        assert [p.sheets for p in m.points] == [(m.M_infinity.name,)] * 2
        assert sorted(c.chi for c in m.components) == [0, 2, 2]

    def test_M_infinity_prediction(self):
        assert identify_M_infinity(run("three-parabolas").model).klein_prediction
        a = run("smooth-returns")
        rep = identify_M_infinity(a.model, a.regions)
        assert not rep.klein_prediction and rep.white_returns == 2

    def test_region_monotonicity_even(self):
        for name in ("three-parabolas", "smooth-returns", "deformed-X", "branch-curve-Y"):
            for per_region in region_monotonicity(run(name).regions):
                assert all(v % 2 == 0 for v in per_region)

    def test_euler_double_cover_accepts_both_inputs(self):
        cx = sweep_decompose(three_parabolas())
        assert euler_double_cover(cx) == euler_double_cover(positivity_regions(cx))


def model():
    return ComponentModel(
        (Component("A", 2), Component("B", 0, True)),
        (PointRecord("n", 1, "+", ("A", "B")), PointRecord("t", 3, "+", ("A", "A")),
         PointRecord("c", 2, "+", ("B",)), PointRecord("m", 2, "-", ("B",))),
    )


class TestSmoothing:
    def test_menu(self):
        assert smoothing_menu(1, "+") == (SmoothingChoice.Cut, SmoothingChoice.Cylinder)
        assert smoothing_menu(2, "+") == (SmoothingChoice.PlusSphere,)
        assert smoothing_menu(3, "+") == (SmoothingChoice.CutPlusSphere, SmoothingChoice.Cylinder)
        assert smoothing_menu(2, "-") == () and smoothing_menu(4, "+") == ()

    def test_cylinder_merges_components(self):
        m = apply_smoothing(model(), "n", "Cylinder")
        assert [(c.name, c.chi, c.is_M_infinity) for c in m.components] == [("A", 0, True)]
        assert m.point("c").sheets == ("A",)

    def test_cylinder_on_one_component_is_flagged(self):
        m = apply_smoothing(model(), "t", SmoothingChoice.Cylinder)
        a = m.component("A")
        assert a.chi == 0 and a.flags

    def test_spheres(self):
        m = apply_all(model(), [("c", "PlusSphere"), ("t", "CutPlusSphere"), ("n", "Cut")])
        assert sorted(c.chi for c in m.components) == [0, 2, 2, 2]
        assert m.profile() == SmoothedProfile(4, 2)

    def test_illegal(self):
        with pytest.raises(IllegalSmoothing):
            apply_smoothing(model(), "m", "PlusSphere")
        with pytest.raises(IllegalSmoothing):
            apply_smoothing(model(), "n", "PlusSphere")

    def test_separation_and_filter(self):
        m = model()
        assert is_globally_separating(m, "n") and not is_globally_separating(m, "t")
        with pytest.raises(ValueError):
            is_globally_separating(m, "c")
        assert in_P_X(m.point("c")) and not in_P_X(m.point("m"))
        assert in_P_X(PointRecord("x", 1, "-", ("A", "B")))
        assert not in_P_X(PointRecord("x", 1, "-", ("A", "A")))


class TestAdmissibility:
    def test_types(self):
        assert (2, 4) in ADMISSIBLE_TYPES and (5, 2) in ADMISSIBLE_TYPES and (1, 10) in ADMISSIBLE_TYPES
        assert (6, 2) not in ADMISSIBLE_TYPES and (3, 4) not in ADMISSIBLE_TYPES

    @pytest.mark.parametrize("b0,b1,ok", [(2, 4, True), (3, 2, True), (1, 6, True),
                                          (3, 4, False), (2, 6, False), (6, 2, False)])
    def test_exact_profiles(self, b0, b1, ok):
        assert bool(smoothing_admissible(SmoothedProfile(b0, b1))) is ok

    def test_bounded_profiles(self):
        rep = smoothing_admissible(SmoothedProfile(2, 6, b0_exact=False, b1_exact=False))
        assert not rep and rep.violations
        assert smoothing_admissible(SmoothedProfile(1, 2, b0_exact=False, b1_exact=False))

    def test_profile_validation(self):
        with pytest.raises(ValueError):
            SmoothedProfile(0, 2)


def test_sweep_error_is_a_value_error():
    assert issubclass(SweepError, ValueError)
