"""
Tests for padding, folding, fold composition, the cubelet form and solution pull-back.
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from numerics.errors import InstanceError
from numerics.generators import make_rng, random_tucker2d
from numerics.instances import TuckerGridND
from oracles.brute_force import brute_force_tucker, complementary_pairs
from oracles.verifiers import verify_tucker, verify_tucker2d
from snake.compose import FoldTrace, check_def34, compose_folds, pull_back_solution
from snake.cubelets import grid_to_cubelets, grid_to_cubelets_traced, nvhdt_solution_to_pair, prepare_cubelet_grid
from snake.fold import fold_once, fold_preimage
from snake.padding import (
    extend_to_strip,
    lex_above_reflection,
    pad_axis,
    pad_preimage,
    pad_to_multiple_of_3,
    padded_index,
    strip_preimage,
)


def _points(shape):
    return itertools.product(*(range(1, m + 1) for m in shape))


# ============================================
# PADDING
# ============================================

class TestPadding:

    def test_lex_above_reflection(self):
        assert lex_above_reflection((3,)).tolist() == [False, False, True]
        assert lex_above_reflection((2, 2)).tolist() == [[False, False], [True, True]]

    def test_even_deficit_duplicates_outer_layers(self):
        assert [padded_index(x, 4, 2, False) for x in range(1, 7)] == [1, 1, 2, 3, 4, 4]

    def test_odd_axis_doubles_centre(self):
        assert [padded_index(x, 3, 1, False) for x in range(1, 5)] == [1, 2, 2, 3]

    @pytest.mark.parametrize("m,deficit", [(4, 1), (4, 2), (5, 1), (5, 2), (6, 3)])
    def test_padding_keeps_labels_and_antipodality(self, m, deficit):
        g = random_tucker2d(m, make_rng(m * 10 + deficit)).to_nd()
        for axis in (0, 1):
            padded = pad_axis(g, axis, deficit)
            assert padded.dims[axis] == m + deficit
            for point in _points(padded.dims):
                source = pad_preimage(point, g.dims, axis, deficit)
                assert padded.label(point) == g.label(source)

    def test_pad_to_multiple_of_3(self, toy_grid):
        assert pad_to_multiple_of_3(toy_grid.to_nd(), 0).dims == (6, 4)

    def test_strip_keeps_original_in_the_middle(self, toy_grid):
        strip, swap = extend_to_strip(toy_grid.to_nd())
        assert strip.dims == (12, 4)
        assert swap
        for point in _points(strip.dims):
            source = strip_preimage(point, 4)
            label = toy_grid.label(source)
            assert strip.label(point) == int(np.sign(label)) * (3 - abs(label))
        assert check_def34(strip) == ["side longer than 7: (12, 4)"]


# ============================================
# FOLDING
# ============================================

class TestFold:

    def test_needs_multiple_of_three(self, toy_grid):
        with pytest.raises(InstanceError):
            fold_once(toy_grid.to_nd(), 0)

    def test_fold_point_has_three_copies(self):
        g = pad_to_multiple_of_3(random_tucker2d(5, make_rng(1)).to_nd(), 0)
        folded = fold_once(g, 0)
        assert folded.dims == (4, 5, 7)
        for y in range(1, 6):
            copies = [(3, y, z) for z in (2, 3, 4)]
            assert {fold_preimage(c, 0, 6) for c in copies} == {(3, y)}
            assert {folded.label(c) for c in copies} == {g.label((3, y))}

    def test_fold_preserves_labels(self):
        g = pad_to_multiple_of_3(random_tucker2d(7, make_rng(3)).to_nd(), 1)
        folded = fold_once(g, 1)
        flood = 0
        for point in _points(folded.dims):
            source = fold_preimage(point, 1, g.dims[1])
            if source is None:
                assert abs(folded.label(point)) == 3
                flood += 1
            else:
                assert folded.label(point) == g.label(source)
        assert flood > 0

    def test_folded_pairs_pull_back(self):
        g = pad_to_multiple_of_3(random_tucker2d(6, make_rng(5)).to_nd(), 0)
        folded = fold_once(g, 0)
        for p, q in complementary_pairs(folded.labels):
            sp, sq = fold_preimage(p, 0, 6), fold_preimage(q, 0, 6)
            assert sp is not None and sq is not None
            assert verify_tucker(g, sp, sq)


# ============================================
# COMPOSITION
# ============================================

class TestCompose:

    def test_small_grid_needs_no_folds(self, toy_grid):
        grid, trace = compose_folds(toy_grid, extend=False)
        assert grid.dims == (4, 4)
        assert trace.steps == ()
        assert trace.map_point((2, 3)) == (2, 3)

    @pytest.mark.parametrize("m", [3, 5])
    def test_one_fold_meets_constraints(self, m):
        grid, trace = compose_folds(random_tucker2d(m, make_rng(m)))
        assert max(grid.dims) <= 7
        assert grid.dimension == 3
        assert len(trace.folds) == 1
        assert check_def34(grid) == []

    def test_folded_axis_shrinks(self):
        grid, trace = compose_folds(random_tucker2d(7, make_rng(0)))
        assert max(grid.dims) <= 7
        lengths = [step.dims_before[step.axis] for step in trace.steps if step.kind == 'fold']
        assert all(r.dims_after[r.axis] < r.dims_before[r.axis] for r in trace.steps if r.kind == 'fold')
        assert lengths[0] == 21

    def test_trace_replays_from_dict(self):
        grid, trace = compose_folds(random_tucker2d(5, make_rng(2)))
        replay = FoldTrace.from_dict(trace.to_dict())
        np.testing.assert_array_equal(replay.source, trace.source)
        for point in [(1, 1, 2), (3, 2, 6), (7, 5, 1)]:
            assert replay.map_point(point) == trace.map_point(point)

    @pytest.mark.parametrize("seed", range(4))
    @pytest.mark.parametrize("m", [4, 5, 6])
    def test_round_trip(self, m, seed):
        source = random_tucker2d(m, make_rng(seed))
        grid, trace = compose_folds(source)
        p, q = pull_back_solution(trace, brute_force_tucker(grid))
        assert verify_tucker2d(source, p, q)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(50))
    def test_soundness_sweep(self, seed):
        rng = make_rng(1000 + seed)
        m = int(rng.integers(4, 10))
        source = random_tucker2d(m, rng)
        grid, trace = compose_folds(source)
        assert check_def34(grid) == []
        p, q = pull_back_solution(trace, brute_force_tucker(grid))
        assert verify_tucker2d(source, p, q)


# ============================================
# CUBELET FORM
# ============================================

class TestCubelets:

    def test_needs_facet_colours(self):
        g = TuckerGridND(random_tucker2d(4, make_rng(0)).labels)
        with pytest.raises(InstanceError):
            prepare_cubelet_grid(g)

    def test_cubelet_form_is_valid(self):
        grid, trace = compose_folds(random_tucker2d(5, make_rng(4)))
        inst, full_trace = grid_to_cubelets_traced(grid, trace)
        assert inst.dimension == 3
        inst.validate()
        assert len(full_trace.steps) > len(trace.steps)
        assert grid_to_cubelets(grid).table().table.tolist() == inst.table().table.tolist()

    def test_prepared_grid_uses_default_facets(self, toy_grid):
        prepared, _ = prepare_cubelet_grid(toy_grid.to_nd())
        assert prepared.dims == (7, 7)
        assert prepared.facet_colours == ((-1, 1), (-2, 2))
        assert check_def34(prepared) == []

    def test_solution_to_pair(self, toy_nvhdt):
        points = [(Fraction(1, 7), Fraction(0)), (Fraction(1, 7) + Fraction(1, 300), Fraction(0))]
        assert nvhdt_solution_to_pair(toy_nvhdt, points) == ((4, 4), (5, 4))
