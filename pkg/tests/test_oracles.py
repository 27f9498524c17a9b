"""
Tests for the verifiers and the brute-force oracles.
"""

from fractions import Fraction

import pytest

from numerics.errors import DomainError, InstanceError, SearchBoundError
from numerics.generators import make_rng, random_necklace, random_sandwich
from numerics.instances import HamSandwichInstance, Hyperplane, NecklaceInstance, NecklaceSplit
from numerics.measures import CHInstance, LabelledCutSet, StepMeasure
from oracles.brute_force import (
    brute_force_ham_sandwich,
    brute_force_necklace,
    brute_force_tucker,
    complementary_pairs,
    hyperplane_through,
)
from oracles.verifiers import (
    balancing_cut,
    eval_ch,
    find_side_assignment,
    verify_ham_sandwich,
    verify_necklace,
    verify_nvhdt,
    verify_tucker,
    verify_tucker2d,
)

hypothesis = pytest.importorskip("hypothesis")
from hypothesis import given, settings, strategies as st


# ============================================
# CONSENSUS HALVING
# ============================================

class TestEvalCH:

    def _instance(self, epsilon=Fraction(0)):
        left = StepMeasure.from_blocks([(0, 2, Fraction(1))], 4)
        flat = StepMeasure.uniform(4)
        return CHInstance(Fraction(4), (left, flat), epsilon, 0)

    def test_exact_solution(self):
        report = eval_ch(self._instance(), LabelledCutSet.of([1, 3]))
        assert report.per_agent == [Fraction(0), Fraction(0)]
        assert report.is_epsilon_solution

    def test_discrepancy_against_epsilon(self):
        cuts = LabelledCutSet.of([1])
        report = eval_ch(self._instance(Fraction(1, 2)), cuts)
        assert report.per_agent == [Fraction(0), Fraction(-1, 2)]
        assert report.max_abs == Fraction(1, 2)
        assert report.is_epsilon_solution
        assert not eval_ch(self._instance(Fraction(1, 3)), cuts).is_epsilon_solution

    def test_too_many_cuts(self):
        with pytest.raises(InstanceError):
            eval_ch(self._instance(), LabelledCutSet.of([1, 2, 3]))

    def test_cut_outside_domain(self):
        with pytest.raises(DomainError):
            eval_ch(self._instance(), LabelledCutSet.of([5]))

    def test_report_serialises(self):
        data = eval_ch(self._instance(), LabelledCutSet.of([1, 3])).to_dict()
        assert data == {'per_agent': ['0', '0'], 'max_abs': '0', 'is_epsilon_solution': True}


class TestBalancingCut:

    def test_uniform_without_other_cuts(self):
        assert balancing_cut(StepMeasure.uniform(4), [], 0, 4) == 2

    def test_flips_everything_to_the_right(self):
        cut = balancing_cut(StepMeasure.uniform(4), [Fraction(1)], 2, 4)
        assert cut == 3
        plus, minus = StepMeasure.uniform(4).label_masses((Fraction(1), cut))
        assert plus == minus

    def test_no_balance_in_window(self):
        measure = StepMeasure.from_blocks([(0, 1, Fraction(1))], 4)
        assert balancing_cut(measure, [], 2, 4) is None

    def test_rejects_cut_inside_window(self):
        with pytest.raises(InstanceError):
            balancing_cut(StepMeasure.uniform(4), [Fraction(3)], 2, 4)


# ============================================
# NECKLACE AND HAM SANDWICH
# ============================================

class TestNecklace:

    def test_brute_force_split_verifies(self, small_necklace):
        split = brute_force_necklace(small_necklace)
        assert split is not None
        assert len(split.cut_positions) <= small_necklace.max_cuts
        assert verify_necklace(small_necklace, split)

    def test_lex_smallest_split(self):
        inst = NecklaceInstance((1, 2, 1, 2), 2)
        assert brute_force_necklace(inst) == NecklaceSplit((1, 3), (0, 1, 0))

    def test_one_thief_takes_everything(self, small_necklace):
        assert not verify_necklace(small_necklace, NecklaceSplit((), (0,)))

    def test_malformed_splits(self, small_necklace):
        with pytest.raises(InstanceError):
            verify_necklace(small_necklace, NecklaceSplit((0,), (0, 1)))
        with pytest.raises(InstanceError):
            verify_necklace(small_necklace, NecklaceSplit((3,), (0, 2)))

    def test_bounds(self, small_necklace):
        with pytest.raises(SearchBoundError):
            brute_force_necklace(small_necklace, max_beads=4)
        with pytest.raises(InstanceError):
            brute_force_necklace(NecklaceInstance((1, 1, 1), 3))

    def test_worker_count_does_not_change_answer(self, small_necklace):
        assert brute_force_necklace(small_necklace, jobs=2) == brute_force_necklace(small_necklace, jobs=1)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 3))
    def test_necklace_theorem(self, seed, colours):
        inst = random_necklace(colours, 4, make_rng(seed))
        split = brute_force_necklace(inst)
        assert split is not None
        assert verify_necklace(inst, split)


class TestHamSandwich:

    def test_hyperplane_through_two_points(self):
        h = hyperplane_through([(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))])
        assert h.normal == (Fraction(1, 2), Fraction(-1, 2))
        assert h.offset == 0

    def test_side_assignment_for_on_plane_points(self):
        inst = HamSandwichInstance.of([[(0, 0), (2, 0)], [(0, 2), (2, 2)]])
        h = Hyperplane.normalized([1, 0], 1)
        assignment = find_side_assignment(inst, h)
        assert assignment == {}
        assert verify_ham_sandwich(inst, h, assignment)

    def test_rejects_assignment_for_off_plane_point(self):
        inst = HamSandwichInstance.of([[(0, 0), (2, 0)], [(0, 2), (2, 2)]])
        h = Hyperplane.normalized([1, 0], 1)
        with pytest.raises(InstanceError):
            verify_ham_sandwich(inst, h, {(0, 0): 1})

    def test_non_bisecting_hyperplane(self):
        inst = HamSandwichInstance.of([[(0, 0), (2, 0)], [(0, 2), (2, 2)]])
        h = Hyperplane.normalized([1, 0], 5)
        assert find_side_assignment(inst, h) is None
        assert not verify_ham_sandwich(inst, h, {})

    @pytest.mark.parametrize("seed", range(5))
    def test_brute_force_cut_verifies(self, seed):
        inst = random_sandwich(2, 3, make_rng(seed))
        h = brute_force_ham_sandwich(inst)
        assignment = find_side_assignment(inst, h)
        assert assignment is not None
        assert verify_ham_sandwich(inst, h, assignment)

    def test_dimension_bound(self):
        inst = random_sandwich(4, 1, make_rng(0))
        with pytest.raises(SearchBoundError):
            brute_force_ham_sandwich(inst, max_dimension=3)


# ============================================
# TUCKER AND NVHDT
# ============================================

class TestTucker:

    def test_lex_smallest_pair(self, toy_grid):
        assert brute_force_tucker(toy_grid) == ((2, 2), (3, 2))

    def test_pairs_all_verify(self, toy_grid):
        pairs = complementary_pairs(toy_grid.labels)
        assert ((2, 3), (3, 3)) in pairs
        assert all(verify_tucker2d(toy_grid, p, q) for p, q in pairs)

    def test_non_adjacent_pair(self, toy_grid):
        assert not verify_tucker2d(toy_grid, (1, 3), (3, 3))
        assert not verify_tucker2d(toy_grid, (1, 1), (1, 2))

    def test_point_outside_grid(self, toy_grid):
        with pytest.raises(DomainError):
            verify_tucker(toy_grid, (0, 1), (1, 1))

    def test_cell_bound(self, toy_grid):
        with pytest.raises(SearchBoundError):
            brute_force_tucker(toy_grid, max_cells=4)


class TestVerifyNVHDT:

    def test_close_opposite_points(self, toy_nvhdt):
        points = [(Fraction(1, 7), Fraction(0)), (Fraction(1, 7) + Fraction(1, 300), Fraction(0))]
        assert verify_nvhdt(toy_nvhdt, points, 2)

    def test_far_points(self, toy_nvhdt):
        points = [(Fraction(-1), Fraction(0)), (Fraction(1), Fraction(0))]
        assert not verify_nvhdt(toy_nvhdt, points, 2)

    def test_same_colour(self, toy_nvhdt):
        points = [(Fraction(0), Fraction(0)), (Fraction(1, 300), Fraction(0))]
        assert not verify_nvhdt(toy_nvhdt, points, 2)

    def test_point_count(self, toy_nvhdt):
        with pytest.raises(InstanceError):
            verify_nvhdt(toy_nvhdt, [(0, 0)], 2)
