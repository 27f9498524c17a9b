"""
Tests for gate and sensor gadgets, circuit arithmetic, the encoder, the reduction and extraction.
"""

import itertools
from fractions import Fraction

import pytest

from conftest import antipodal_colour_table, small_reduction_params, toy_colour_table
from gadgets.arithmetic import (
    add,
    fixed_divide,
    fixed_multiply,
    popcount,
    ratio_to_fixed,
    signed_greater,
    subtract,
    unsigned_less,
)
from gadgets.blocks import GateKind, build_gate_gadget, run_gate_gadget
from gadgets.encoder import (
    EncoderCircuit,
    build_encoder_circuit,
    entry_to_outputs,
    output_gate_transform,
    outputs_to_entry,
)
from gadgets.extract import extract_solution
from gadgets.reduction import SlotRole, build_reduction
from gadgets.sensors import build_blanket_sensor, build_sensor_agent
from gadgets.simulate import simulate_cuts
from mobius.colouring import BlanketState, RegionKind, encoder_sample_points, f_prime
from mobius.params import ReductionParams
from numerics.circuits import CircuitBuilder
from numerics.errors import CircuitError, DomainError, ExtractionError, InstanceError
from numerics.measures import Label, LabelledCutSet
from numerics.nvhdt import NVHDTInstance
from oracles.verifiers import balancing_cut, eval_ch

F = Fraction

WORKED_CUTS = (F(203, 400), F(301, 200))
TUNNEL_CUTS = (F(211, 400), F(587, 400))
REFERENCE_CUTS = (F(0), F(587, 400))


@pytest.fixture(scope='module')
def params():
    return small_reduction_params()


@pytest.fixture(scope='module')
def toy():
    return NVHDTInstance.from_table(toy_colour_table())


@pytest.fixture(scope='module')
def encoder(toy, params):
    return build_encoder_circuit(toy, params)


def tiny_encoder(params) -> EncoderCircuit:
    b = CircuitBuilder()
    sensors = b.inputs(params.p_huge)
    blanket_plus, _ = b.input(), b.input()
    outputs = [
        b.and_(sensors[0], sensors[200]),
        b.or_(sensors[150], b.not_(sensors[250])),
        b.not_(sensors[300]),
        b.or_(blanket_plus, b.true),
    ]
    return EncoderCircuit(b.build(outputs), params.n, params.p_huge, params.frac_bits)


def sparse_encoder(params) -> EncoderCircuit:
    """Any dimension: output pair j reads sensors j and -1 - j and the first blanket wire."""
    b = CircuitBuilder()
    sensors = b.inputs(params.p_huge)
    blanket = b.inputs(2 * (params.n - 1))
    outputs = []
    for j in range(params.n):
        outputs.append(b.and_(sensors[j], sensors[-1 - j]))
        outputs.append(b.or_(blanket[0], b.not_(sensors[j])))
    return EncoderCircuit(b.build(outputs), params.n, params.p_huge, params.frac_bits)


# ============================================
# GATE GADGETS
# ============================================

class TestGateGadgets:

    @pytest.mark.parametrize("kind,inputs,expected", [
        (GateKind.NOT, (False,), True),
        (GateKind.NOT, (True,), False),
    ] + [
        (GateKind.OR, (x, y), x or y) for x, y in itertools.product((False, True), repeat=2)
    ] + [
        (GateKind.AND, (x, y), x and y) for x, y in itertools.product((False, True), repeat=2)
    ])
    def test_truth_tables(self, kind, inputs, expected):
        run = run_gate_gadget(kind, inputs)
        assert run.output is expected
        lo = run.instance.length - 1
        assert lo <= run.output_cut <= run.instance.length
        report = eval_ch(run.instance, run.cuts)
        assert report.max_abs == 0

    def test_gadget_masses(self):
        blocks = build_gate_gadget(GateKind.OR, [(0, 1), (2, 3)], (4, 5))
        assert sum(b.mass for b in blocks) == 1
        assert [b.mass for b in blocks] == [F(1, 8), F(1, 8), F(5, 16), F(7, 16)]

    def test_interval_checks(self):
        with pytest.raises(InstanceError):
            build_gate_gadget(GateKind.NOT, [(0, 2)], (3, 4))
        with pytest.raises(InstanceError):
            build_gate_gadget(GateKind.AND, [(0, 1), (F(1, 2), F(3, 2))], (3, 4))
        with pytest.raises(InstanceError):
            build_gate_gadget(GateKind.AND, [(0, 1)], (3, 4))
        with pytest.raises(InstanceError):
            run_gate_gadget(GateKind.NOT, (True, False))


# ============================================
# SENSORS
# ============================================

class TestSensors:

    @pytest.mark.parametrize("cuts,block_in_minus", [([], False), ([0], True), ([F(1, 2)], False)])
    def test_sensor_tap_reads_block_label(self, params, cuts, block_in_minus):
        measure = build_sensor_agent(1, 1, params, F(2), 3)
        assert measure.total() == 1
        cut = balancing_cut(measure, [F(c) for c in cuts], 2, 3)
        assert cut is not None
        labels = LabelledCutSet.of(list(cuts) + [cut])
        assert (labels.label_at(2 + F(7, 16)) is Label.PLUS) == block_in_minus

    @pytest.mark.parametrize("cuts,block", [
        ([], (F(1, 16), F(3, 16))),
        ([0], (F(1, 16), F(3, 16))),
        ([1], (F(3, 8), F(5, 8))),
        ([F(43, 40)], (F(3, 8), F(5, 8))),
        ([F(11, 10)], (F(13, 16), F(15, 16))),
    ])
    def test_blanket_detector_block(self, params, cuts, block):
        measure = build_blanket_sensor(1, 2, params, F(2), 3)
        assert measure.total() == 1
        cut = balancing_cut(measure, [F(c) for c in cuts], 2, 3)
        assert 2 + block[0] <= cut <= 2 + block[1]


# ============================================
# ARITHMETIC
# ============================================

def _bits(value, width):
    return [bool((value >> k) & 1) for k in range(width)]


def _value(bits, signed=False):
    v = sum(1 << k for k, bit in enumerate(bits) if bit)
    if signed and bits[-1]:
        v -= 1 << len(bits)
    return v


def _difference(b, x, y):
    diff, no_borrow = subtract(b, x, y)
    return list(diff) + [no_borrow]


def _run(widths, make, *values):
    b = CircuitBuilder()
    words = [b.inputs(w) for w in widths]
    out = make(b, *words)
    circuit = b.build(out if isinstance(out, list) else [out])
    feed = [bit for v, w in zip(values, widths) for bit in _bits(v, w)]
    return list(circuit.evaluate(feed))


class TestArithmetic:

    def test_popcount(self):
        for pattern in range(64):
            bits = _run([6], lambda b, x: popcount(b, x), pattern)
            assert _value(bits) == bin(pattern).count('1')

    def test_add_and_subtract(self):
        for x, y in itertools.product(range(16), repeat=2):
            assert _value(_run([4, 4], lambda b, p, q: add(b, p, q), x, y)) == (x + y) % 16
            out = _run([4, 4], _difference, x, y)
            assert _value(out[:4]) == (x - y) % 16
            assert out[4] == (x >= y)

    def test_comparators(self):
        for x, y in itertools.product(range(8), range(16)):
            assert _run([3, 4], lambda b, p, q: unsigned_less(b, p, q), x, y) == [x < y]
        for x, y in itertools.product(range(-8, 8), repeat=2):
            assert _run([4, 4], lambda b, p, q: signed_greater(b, p, q), x, y) == [x > y]

    def test_ratio_to_fixed(self):
        for n, d in itertools.product(range(8), range(1, 8)):
            bits = _run([3, 3], lambda b, p, q: ratio_to_fixed(b, p, q, 4, 8), n, d)
            assert _value(bits) == n * 16 // d

    @pytest.mark.parametrize("x,y,product", [(-24, 40, -60), (24, 40, 60), (16, 16, 16), (-8, -8, 4)])
    def test_fixed_multiply(self, x, y, product):
        bits = _run([8, 8], lambda b, p, q: fixed_multiply(b, p, q, 4), x, y)
        assert _value(bits, signed=True) == product

    @pytest.mark.parametrize("x,y,quotient", [(-24, 40, -9), (48, 32, 24), (5, 16, 5)])
    def test_fixed_divide(self, x, y, quotient):
        bits = _run([8, 8], lambda b, p, q: fixed_divide(b, p, q, 4), x, y)
        assert _value(bits, signed=True) == quotient


# ============================================
# ENCODER
# ============================================

class TestOutputTransform:

    @pytest.mark.parametrize("g_pos,g_neg,reference,entry", [
        (False, False, False, 0),
        (False, False, True, 0),
        (True, False, False, 1),
        (True, False, True, -1),
        (False, True, False, -1),
        (False, True, True, 1),
    ])
    def test_transform(self, g_pos, g_neg, reference, entry):
        out = output_gate_transform(g_pos, g_neg, reference)
        assert outputs_to_entry(*out) == entry
        assert entry_to_outputs(entry) == out

    def test_rejects_both_colours(self):
        with pytest.raises(CircuitError):
            output_gate_transform(True, True, False)
        with pytest.raises(InstanceError):
            entry_to_outputs(2)


class TestEncoderCircuit:

    def test_shape(self, encoder, params):
        assert encoder.circuit.num_inputs == params.p_huge + 2 * (params.n - 1)
        assert len(encoder.circuit.outputs) == 2 * params.n
        with pytest.raises(InstanceError):
            encoder.evaluate([False] * 3, (BlanketState.INACTIVE,))
        with pytest.raises(CircuitError):
            encoder.feedback_vector((True,))

    @pytest.mark.parametrize("cuts", [TUNNEL_CUTS, REFERENCE_CUTS])
    def test_agrees_with_f_prime(self, encoder, toy, params, cuts):
        for sample in encoder_sample_points(LabelledCutSet.of(cuts), params):
            expected = f_prime(sample.transformed, sample.blanket, toy, params, reference=sample.reference)
            assert encoder.feedback_vector(encoder.evaluate_sample(sample)) == expected.entries
            assert expected.entries == (0, 1)

    def test_blanket_override(self, encoder, toy, params):
        sample = encoder_sample_points(LabelledCutSet.of(TUNNEL_CUTS), params)[0]
        for state, entries in [(BlanketState.PLUS, (0, -1)), (BlanketState.MINUS, (0, 1))]:
            outputs = encoder.evaluate(sample.bits, (state,))
            assert encoder.feedback_vector(outputs) == entries
            assert f_prime(sample.transformed, (state,), toy, params).entries == entries

    def test_rejects_wrong_dimension(self, toy):
        with pytest.raises(InstanceError):
            build_encoder_circuit(toy, ReductionParams.for_dimension(3))


# ============================================
# REDUCTION
# ============================================

class TestReduction:

    @pytest.fixture(scope='class')
    def reduction(self, toy, params):
        return build_reduction(toy, params, encoder=tiny_encoder(params))

    def test_layout(self, reduction, params):
        plan = reduction.plan
        assert plan.size % 2 == 0
        roles = [a.role for a in plan.agents]
        assert roles[:params.p_huge] == [SlotRole.SENSOR] * params.p_huge
        assert roles[params.p_huge] == SlotRole.BLANKET
        assert plan.parity_slot == params.p_huge + 1
        assert reduction.ch.num_agents == params.n + params.p_c * plan.size
        assert reduction.ch.length == params.n + params.p_c * plan.size
        assert reduction.ch.epsilon == params.epsilon
        assert len(reduction.feedback) == params.n * params.p_c
        assert all(spec.mass == F(1, 16) for spec in reduction.feedback)
        assert reduction.encoder_of_position(F(1)) is None
        assert reduction.encoder_of_position(F(params.n) + plan.size) == 2

    def test_simulated_gadgets_balance(self, reduction, params):
        cuts = simulate_cuts(reduction, WORKED_CUTS)
        report = eval_ch(reduction.ch, cuts)
        assert all(d == 0 for d in report.per_agent[params.n:])

    def test_output_taps_compute_the_encoder(self, reduction, params):
        cuts = simulate_cuts(reduction, WORKED_CUTS)
        samples = encoder_sample_points(LabelledCutSet.of(WORKED_CUTS), params)
        for layout, sample in zip(reduction.layouts, samples):
            assert tuple(w.value(cuts) for w in layout.outputs) == reduction.encoder.evaluate_sample(sample)

    def test_simulation_needs_n_cuts(self, reduction):
        with pytest.raises(DomainError):
            simulate_cuts(reduction, [F(1)])
        with pytest.raises(DomainError):
            simulate_cuts(reduction, [F(1), F(3)])

    def test_mismatched_encoder(self, toy, params):
        b = CircuitBuilder()
        b.inputs(4)
        wrong = EncoderCircuit(b.build([b.true] * 4), params.n, 2, params.frac_bits)
        with pytest.raises(CircuitError):
            build_reduction(toy, params, encoder=wrong)

    @pytest.mark.slow
    def test_three_dimensional_agents_have_unit_mass(self):
        params = ReductionParams.for_dimension(3, delta_tiny=F(1, 100), delta_t=F(1, 20), delta_w=F(1, 8))
        inst = NVHDTInstance.from_table(antipodal_colour_table(3, seed=3))
        reduction = build_reduction(inst, params, encoder=sparse_encoder(params))
        assert reduction.ch.num_agents == params.n + params.p_c * reduction.plan.size
        assert len(reduction.feedback) == params.n * params.p_c
        assert all(agent.total() == 1 for agent in reduction.ch.agents)

    def test_to_dict(self, reduction, params):
        data = reduction.to_dict()
        assert data['num_agents'] == reduction.ch.num_agents
        assert len(data['layouts']) == params.p_c

    @pytest.mark.slow
    def test_full_reduction_feeds_back_f_prime(self, toy, params):
        reduction = build_reduction(toy, params)
        cuts = simulate_cuts(reduction, TUNNEL_CUTS)
        for layout in reduction.layouts:
            outputs = tuple(w.value(cuts) for w in layout.outputs)
            assert reduction.encoder.feedback_vector(outputs) == (0, 1)


# ============================================
# EXTRACTION
# ============================================

class TestExtraction:

    def test_worked_example(self, toy, params):
        result = extract_solution(toy, None, LabelledCutSet.of(WORKED_CUTS), params)
        assert result.unreliable == []
        assert result.stray_encoder is None
        assert result.parity_flipped == [False] * params.p_c
        assert result.region.kind is RegionKind.TWISTED_TUNNEL
        assert result.points[:4] == [(F(10, 67), F(-1, 20))] * 4
        assert result.points[4:] == [(F(1, 10), F(0))] * 4
        assert result.pair == (1, 5)
        assert result.spread == F(1, 20)
        assert result.delta == F(1, 200)
        assert not result.verified

    def test_verified_against_given_distance(self, toy, params):
        cuts = LabelledCutSet.of(WORKED_CUTS)
        assert extract_solution(toy, None, cuts, params, delta=F(1, 20)).verified
        assert not extract_solution(toy, None, cuts, params, delta=F(1, 21)).verified
        assert extract_solution(toy, None, cuts, params).to_dict()['delta'] == '1/200'

    def test_too_many_coordinate_cuts(self, toy, params):
        with pytest.raises(ExtractionError):
            extract_solution(toy, None, LabelledCutSet.of([F(1, 2), 1, F(3, 2)]), params)

    def test_outside_significant_region(self, toy, params):
        with pytest.raises(ExtractionError):
            extract_solution(toy, None, LabelledCutSet.of([F(1, 10), F(1, 5)]), params)
