"""
Tests for the reduction parameters, Möbius-simplex coordinates, metrics and colouring.
"""

from fractions import Fraction

import pytest

from conftest import antipodal_colour_table, small_reduction_params, toy_colour_table
from mobius.colouring import (
    BlanketState,
    ColourVector,
    RegionKind,
    blanket_active,
    blanket_state_from_cuts,
    borsuk_F,
    classify_region,
    colour_f,
    comb_blocks,
    consistent_colour,
    encoder_sample_points,
    f_prime,
    increasing_label,
    label_share,
    override_entry,
    piece_counts,
    sensor_block,
)
from mobius.metrics import metric_d, metric_dtilde
from mobius.params import ReductionParams
from mobius.transform import SimplexPoint, TransformedPoint, direction_vector, from_transformed, origin, to_transformed
from numerics.errors import DomainError, InstanceError, ParameterError
from numerics.measures import Label, LabelledCutSet
from numerics.nvhdt import NVHDTInstance

hypothesis = pytest.importorskip("hypothesis")
from hypothesis import given, settings, strategies as st

F = Fraction


def _point(tau, *alphas):
    return TransformedPoint(F(tau), tuple(F(a) for a in alphas))


# Parameters and antipodal colourings per dimension, shared by the property suites.
CASES = {
    2: (small_reduction_params(), NVHDTInstance.from_table(toy_colour_table())),
    3: (ReductionParams.for_dimension(3), NVHDTInstance.from_table(antipodal_colour_table(3, seed=7))),
}


# ============================================
# PARAMETERS
# ============================================

class TestParams:

    def test_defaults_for_two_dimensions(self):
        params = ReductionParams.for_dimension(2)
        assert (params.delta_tiny, params.delta_t, params.delta_w) == (F(1, 400), F(1, 40), F(1, 8))
        assert (params.p_c, params.p_large, params.p_huge) == (8, 100, 800)
        assert params.kappa == F(1, 80)

    def test_small_params(self, small_params):
        assert small_params.p_huge == 400
        assert small_params.kappa == F(1, 100)
        assert small_params.comb_blocks == 400
        assert small_params.sensor_width == F(1, 1600)
        assert small_params.shift(3) == F(1, 800)

    @pytest.mark.parametrize("overrides", [
        {'delta_t': F(1, 500)},
        {'delta_w': F(1, 2)},
        {'p_c': 7},
        {'p_large': 0},
        {'delta_tiny': F(3, 1000)},
    ])
    def test_rejects_bad_values(self, overrides):
        with pytest.raises(ParameterError):
            ReductionParams.for_dimension(2, **overrides)

    def test_needs_dimension_two(self):
        with pytest.raises(ValueError):
            ReductionParams.for_dimension(1)

    def test_to_dict(self):
        data = ReductionParams.for_dimension(2).to_dict()
        assert data['p_huge'] == 800
        assert data['epsilon'] == '1/4000'
        assert data['delta_w'] == '1/8'


# ============================================
# COORDINATES
# ============================================

class TestTransform:

    def test_origin_and_direction(self):
        assert origin(2, F(1, 2)) == (F(1, 4), F(1, 2), F(1, 4))
        assert direction_vector(2, F(1, 2), 2) == (F(-1, 2), F(1), F(-1, 2))
        assert direction_vector(2, F(1, 2), -2) == (F(1, 2), F(-1), F(1, 2))
        with pytest.raises(DomainError):
            direction_vector(2, F(1, 2), 1)

    def test_forward_map(self):
        assert from_transformed(_point(F(1, 2), F(1, 10))).coords == (F(1, 5), F(3, 5), F(1, 5))

    def test_inverse_near_the_axis(self):
        p = to_transformed(SimplexPoint.of([F(49, 200), F(102, 200), F(49, 200)]))
        assert p.tau == F(1, 2)
        assert p.alphas == (F(1, 100),)
        assert p.reliable and p.exact

    def test_far_points_are_flagged(self):
        p = to_transformed(SimplexPoint.of([F(1, 5), F(3, 5), F(1, 5)]))
        assert p.alphas == (F(1, 10),)
        assert not p.reliable

    def test_axis_point_in_three_dimensions(self):
        p = to_transformed(SimplexPoint(origin(3, F(1, 3))))
        assert p.tau == F(1, 3)
        assert p.alphas == (0, 0)

    def test_undefined_face(self):
        with pytest.raises(DomainError):
            to_transformed(SimplexPoint.of([0, 1, 0]))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 50), st.integers(1, 50), st.integers(-10, 10))
    def test_two_dimensional_round_trip(self, p, q, r):
        tau = F(min(p, q), q)
        point = _point(tau, F(r, 200))
        back = to_transformed(from_transformed(point))
        assert back.tau == point.tau
        assert back.alphas == point.alphas
        assert back.exact

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    @settings(max_examples=2000, deadline=None)
    @given(st.integers(0, 50), st.integers(1, 50), st.lists(st.integers(-10, 10), min_size=5, max_size=5))
    def test_round_trip_near_the_axis(self, n, p, q, steps):
        point = TransformedPoint(F(min(p, q), q), tuple(F(r, 1000 * n * n) for r in steps[:n - 1]))
        back = to_transformed(from_transformed(point))
        assert back.exact
        assert back.reliable
        assert (back.tau, back.alphas) == (point.tau, point.alphas)

    @settings(max_examples=1000, deadline=None)
    @given(st.lists(st.integers(1, 20), min_size=2, max_size=6))
    def test_identified_facets_negate_alphas(self, weights):
        x = tuple(F(w, sum(weights)) for w in weights)
        left = to_transformed(SimplexPoint((F(0),) + x))
        right = to_transformed(SimplexPoint(x + (F(0),)))
        assert (left.tau, right.tau) == (0, 1)
        assert right.alphas == tuple(-a for a in left.alphas)

    def test_simplex_point_checks(self):
        with pytest.raises(DomainError):
            SimplexPoint.of([F(1, 2), F(1, 2), F(1, 2)])
        with pytest.raises(DomainError):
            SimplexPoint.of([F(3, 2), F(-1, 2), 0])
        with pytest.raises(InstanceError):
            SimplexPoint.of([F(1, 2), F(1, 2)])

    def test_points_from_cuts(self):
        x = SimplexPoint.from_cuts([F(1, 2)], 2)
        assert x.coords == (F(1, 4), F(3, 4), 0)
        assert x.cuts() == (F(1, 2), F(2))

    def test_seam_image(self):
        assert _point(0, F(1, 10)).seam_image() == _point(1, F(-1, 10))
        with pytest.raises(DomainError):
            _point(F(1, 2), 0).seam_image()


class TestMetrics:

    def test_seam_points_coincide(self):
        assert metric_dtilde(_point(0, F(1, 10)), _point(1, F(-1, 10))) == 0

    def test_direct_distance(self):
        assert metric_dtilde(_point(F(1, 4), 0), _point(F(1, 2), F(1, 10))) == F(7, 20)

    def test_identified_facets(self):
        x = SimplexPoint.of([0, F(1, 2), F(1, 2)])
        y = SimplexPoint.of([F(1, 2), F(1, 2), 0])
        assert metric_d(x, y) == 0
        assert metric_d(y, x) == 0
        assert metric_d(x, x) == 0

    def test_plain_distance(self):
        x = SimplexPoint.of([F(1, 4), F(1, 2), F(1, 4)])
        y = SimplexPoint.of([F(1, 4), F(1, 4), F(1, 2)])
        assert metric_d(x, y) == F(1, 2)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    @settings(max_examples=2000, deadline=None)
    @given(
        st.tuples(st.integers(0, 50), st.integers(1, 50)),
        st.tuples(st.integers(0, 50), st.integers(1, 50)),
        st.lists(st.integers(-10, 10), min_size=10, max_size=10),
        st.booleans(),
    )
    def test_metrics_agree_near_the_axis(self, n, tau_p, tau_q, steps, mirrored):
        scale = 1000 * n * n
        alphas = tuple(F(r, scale) for r in steps[:n - 1])
        p = TransformedPoint(F(min(tau_p), tau_p[1]), alphas)
        if mirrored:
            p = TransformedPoint(F(0), alphas)
            q = p.seam_image()
        else:
            q = TransformedPoint(F(min(tau_q), tau_q[1]), tuple(F(r, scale) for r in steps[5:4 + n]))
        d = metric_d(from_transformed(p), from_transformed(q))
        dtilde = metric_dtilde(p, q)
        if dtilde == 0:
            assert d == 0
        else:
            bound = 10 * n * n
            assert F(1, bound) <= d / dtilde <= bound

    def test_dimension_mismatch(self):
        with pytest.raises(InstanceError):
            metric_d(SimplexPoint.of([F(1, 3)] * 3), SimplexPoint.of([F(1, 4)] * 4))


# ============================================
# COLOURING
# ============================================

class TestColouring:

    @pytest.mark.parametrize("alpha,kind,colours", [
        (F(1, 100), RegionKind.TWISTED_TUNNEL, ()),
        (F(1, 10), RegionKind.OUTER, (-2,)),
        (F(-1, 10), RegionKind.OUTER, (2,)),
        (F(3, 10), RegionKind.OUTSIDE_SIGNIFICANT, (-2,)),
    ])
    def test_regions(self, small_params, alpha, kind, colours):
        region = classify_region(_point(F(1, 2), alpha), small_params)
        assert region.kind is kind
        assert region.colours == colours

    def test_tunnel_colour_comes_from_the_cube(self, small_params, toy_nvhdt):
        assert colour_f(_point(F(1, 2), 0), toy_nvhdt, small_params).entries == (1, 0)
        assert colour_f(_point(F(1, 2), F(1, 100)), toy_nvhdt, small_params).entries == (0, -1)

    def test_outer_colour(self, small_params, toy_nvhdt):
        assert colour_f(_point(F(1, 2), F(1, 10)), toy_nvhdt, small_params).entries == (0, -1)
        with pytest.raises(DomainError):
            colour_f(_point(F(1, 2), F(3, 10)), toy_nvhdt, small_params)

    def test_seam_points_on_cubelet_faces(self, small_params, toy_nvhdt):
        p = _point(0, small_params.delta_t / 7)
        assert colour_f(p, toy_nvhdt, small_params).entries == (1, 0)
        assert colour_f(p.seam_image(), toy_nvhdt, small_params).entries == (-1, 0)

    @pytest.mark.parametrize("n", [2, 3])
    @settings(max_examples=1000, deadline=None)
    @given(st.lists(st.integers(-21, 21), min_size=2, max_size=2))
    def test_seam_points_get_opposite_colours(self, n, steps):
        params, inst = CASES[n]
        p = TransformedPoint(F(0), tuple(params.delta_t * F(s, 21) for s in steps[:n - 1]))
        assert colour_f(p.seam_image(), inst, params) == colour_f(p, inst, params).negated()

    def test_colour_vectors(self):
        assert ColourVector.unit(2, -1).entries == (-1, 0)
        assert ColourVector((1, -1)).colours() == (1, -2)
        with pytest.raises(DomainError):
            ColourVector.unit(2, 3)
        with pytest.raises(InstanceError):
            ColourVector((2, 0))

    def test_increasing_labels_and_overrides(self):
        assert [increasing_label(j) for j in (3, -3, 2, -2)] == [Label.PLUS, Label.MINUS, Label.MINUS, Label.PLUS]
        assert override_entry(3, BlanketState.PLUS) == 1
        assert override_entry(2, BlanketState.PLUS) == -1
        assert override_entry(2, BlanketState.MINUS) == 1
        with pytest.raises(InstanceError):
            override_entry(2, BlanketState.INACTIVE)

    def test_sensor_geometry(self, small_params):
        assert sensor_block(1, 1, small_params) == (0, F(1, 1600))
        assert sensor_block(3, 2, small_params) == (F(1, 160), F(11, 1600))
        with pytest.raises(DomainError):
            sensor_block(9, 1, small_params)
        blocks = comb_blocks(1, 2, small_params)
        assert len(blocks) == 400
        assert blocks[-1][0] == F(399, 200)

    @pytest.mark.parametrize("cuts,state", [
        ([], BlanketState.PLUS),
        ([0], BlanketState.MINUS),
        ([1], BlanketState.INACTIVE),
        ([F(11, 10)], BlanketState.PLUS),
        ([F(219, 200)], BlanketState.INACTIVE),
    ])
    def test_blanket_threshold(self, small_params, cuts, state):
        assert blanket_active(LabelledCutSet.of(cuts), 2, 1, small_params) is state

    def test_blanket_states_for_all_sensors(self, small_params):
        assert blanket_state_from_cuts(LabelledCutSet.of([]), small_params) == (BlanketState.PLUS,)

    def test_f_prime(self, small_params, toy_nvhdt):
        p = _point(F(1, 2), 0)
        inactive = (BlanketState.INACTIVE,)
        assert f_prime(p, inactive, toy_nvhdt, small_params).entries == (1, 0)
        assert f_prime(p, inactive, toy_nvhdt, small_params, reference=True).entries == (-1, 0)
        assert f_prime(p, (BlanketState.PLUS,), toy_nvhdt, small_params).entries == (1, -1)
        with pytest.raises(InstanceError):
            f_prime(p, (), toy_nvhdt, small_params)

    def test_piece_counts(self):
        assert piece_counts([False, False, True, True, False], 2) == (2, 2, 1)
        assert piece_counts([False] * 4, 2) == (4, 0, 0)


class TestEncoderSamples:

    @pytest.fixture
    def cuts(self):
        return LabelledCutSet.of([F(203, 400), F(301, 200)])

    def test_shifted_rows_see_different_points(self, small_params, cuts):
        samples = encoder_sample_points(cuts, small_params)
        assert len(samples) == 8
        for sample in samples[:4]:
            assert sample.point.coords == (F(102, 400), F(199, 400), F(99, 400))
        for sample in samples[4:]:
            assert sample.point.coords == (F(101, 400), F(200, 400), F(99, 400))
        first = samples[0]
        assert first.transformed.tau == F(102, 201)
        assert first.transformed.alphas == (F(-1, 400),)
        assert first.reliable
        assert not first.reference
        assert first.blanket == (BlanketState.INACTIVE,)

    def test_averaged_colours_cancel(self, small_params, toy_nvhdt, cuts):
        x = SimplexPoint.from_cuts(cuts.cuts, 2)
        assert borsuk_F(x, toy_nvhdt, small_params) == (0, 0)


class TestConsistentColour:

    def test_label_share(self):
        assert label_share(LabelledCutSet.of([F(1, 2)]), 0, 2, Label.MINUS) == F(3, 4)

    def test_consistent_colour(self, small_params):
        p = _point(F(1, 2), F(3, 20))
        assert consistent_colour(p, LabelledCutSet.of([F(1, 2)]), small_params) == 2
        assert consistent_colour(p, LabelledCutSet.of([]), small_params) is None
        assert consistent_colour(_point(F(1, 2), 0), LabelledCutSet.of([F(1, 2)]), small_params) is None

    @pytest.mark.parametrize("n", [2, 3])
    @settings(max_examples=1000, deadline=None)
    @given(
        st.integers(0, 100),
        st.integers(2, 3),
        st.booleans(),
        st.integers(0, 99),
        st.lists(st.integers(-100, 100), min_size=2, max_size=2),
    )
    def test_outer_points_near_the_boundary(self, n, t, k, negative, depth, others):
        params, _ = CASES[n]
        k = min(k, n)
        top = min(params.delta_w, F(1, 2 * n))
        largest = top - (top - 2 * params.delta_t) * F(depth, 100)
        alphas = [largest * F(r, 100) for r in others[:n - 1]]
        alphas[k - 2] = -largest if negative else largest
        p = TransformedPoint(F(t, 100), tuple(alphas))
        assert classify_region(p, params).kind is RegionKind.OUTER
        labelling = LabelledCutSet.of(from_transformed(p).cuts())
        assert consistent_colour(p, labelling, params) is not None
