"""
Tests for the command-line runner: reports, exit codes and file handling.
"""

import io
import json
from fractions import Fraction

import pytest

from cli.commands import EXIT_IO, EXIT_MALFORMED, EXIT_NO, EXIT_OK, build_parser, run
from conftest import TOY_GRID
from numerics.measures import CHInstance, StepMeasure
from numerics.serialization import CHInstanceModel, NVHDTModel, Tucker2DModel


def _call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    report = json.loads(out.getvalue())
    assert report['exit_code'] == code
    return code, report


@pytest.fixture
def write(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        if hasattr(payload, 'model_dump_json'):
            path.write_text(payload.model_dump_json(), encoding='utf-8')
        elif isinstance(payload, str):
            path.write_text(payload, encoding='utf-8')
        else:
            path.write_text(json.dumps(payload), encoding='utf-8')
        return str(path)
    return _write


@pytest.fixture
def necklace_file(write):
    return write('necklace.json', {'beads': [1, 2, 1, 2], 'k': 2})


class TestParser:

    def test_defaults(self):
        args = build_parser().parse_args(['gen', 'tucker2d'])
        assert (args.seed, args.m, args.jobs, args.out) == (0, 5, None, None)


class TestReports:

    def test_params_check(self):
        code, report = _call('params-check', '--n', '2')
        assert code == EXIT_OK
        assert report['command'] == 'params-check'
        assert report['status'] == 'ok'
        assert report['result']['p_huge'] == 800

    def test_params_file(self, write):
        path = write('params.json', {'n': 2, 'delta_tiny': '1/200', 'delta_t': '1/20', 'delta_w': '1/5',
                                     'p_large': 40})
        code, report = _call('params-check', '--params', path)
        assert code == EXIT_OK
        assert report['result']['p_huge'] == 400

    def test_bad_params(self, write):
        code, report = _call('params-check', '--params', write('params.json', {'n': 2, 'delta_t': '1/500'}))
        assert code == EXIT_MALFORMED
        assert report['status'] == 'error'
        assert 'delta_tiny' in report['error']

    def test_schema(self):
        code, report = _call('schema')
        assert code == EXIT_OK
        assert 'exit_code' in report['result']['properties']


class TestGenerate:

    def test_tucker_to_file(self, tmp_path):
        path = str(tmp_path / 'grid.json')
        code, report = _call('gen', 'tucker2d', '--m', '4', '--seed', '1', '--out', path)
        assert code == EXIT_OK
        assert report['result'] == {'written': path}
        with open(path, encoding='utf-8') as f:
            grid = Tucker2DModel.model_validate_json(f.read()).to_domain()
        assert grid.labels.shape == (4, 4)

    def test_same_seed_same_instance(self):
        first = _call('gen', 'necklace', '--seed', '7')[1]['result']
        second = _call('gen', 'necklace', '--seed', '7')[1]['result']
        assert first == second

    def test_nvhdt_carries_trace(self):
        code, report = _call('gen', 'nvhdt', '--m', '3')
        assert code == EXIT_OK
        assert report['result']['instance']['dimension'] == 3
        assert 'trace' in report['result']


class TestVerify:

    def test_necklace(self, write, necklace_file):
        good = write('good.json', {'cut_positions': [1, 3], 'piece_owner': [0, 1, 0]})
        bad = write('bad.json', {'cut_positions': [], 'piece_owner': [0]})
        assert _call('verify', 'necklace', '--inst', necklace_file, '--solution', good)[0] == EXIT_OK
        code, report = _call('verify', 'necklace', '--inst', necklace_file, '--solution', bad)
        assert code == EXIT_NO
        assert report['status'] == 'no'
        assert report['result'] == {'verified': False}

    def test_tucker2d(self, write):
        grid = write('grid.json', {'labels': TOY_GRID})
        good = write('good.json', {'p1': [2, 2], 'p2': [3, 2]})
        bad = write('bad.json', {'p1': [1, 3], 'p2': [3, 3]})
        assert _call('verify', 'tucker2d', '--inst', grid, '--solution', good)[0] == EXIT_OK
        assert _call('verify', 'tucker2d', '--inst', grid, '--solution', bad)[0] == EXIT_NO

    def test_consensus_halving(self, write):
        left = StepMeasure.from_blocks([(0, 2, Fraction(1))], 4)
        inst = CHInstance(Fraction(4), (left, StepMeasure.uniform(4)), Fraction(0), 0)
        path = write('ch.json', CHInstanceModel.from_domain(inst))
        exact = write('exact.json', {'cuts': ['1', '3']})
        off = write('off.json', {'cuts': ['1']})
        code, report = _call('verify', 'ch', '--inst', path, '--cuts', exact)
        assert code == EXIT_OK
        assert report['result']['max_abs'] == '0'
        assert _call('verify', 'ch', '--inst', path, '--cuts', off)[0] == EXIT_NO

    def test_nvhdt(self, write, toy_nvhdt):
        inst = write('nvhdt.json', NVHDTModel.from_domain(toy_nvhdt))
        sol = write('sol.json', {'points': [['1/7', '0'], ['307/2100', '0']]})
        assert _call('verify', 'nvhdt', '--inst', inst, '--solution', sol)[0] == EXIT_OK


class TestSolveAndRoundTrip:

    def test_solve_necklace(self, necklace_file):
        code, report = _call('solve', 'necklace', '--in', necklace_file)
        assert code == EXIT_OK
        assert report['result']['verified'] is True

    def test_necklace_round_trip(self, necklace_file):
        code, report = _call('roundtrip', 'ns-dhs', '--in', necklace_file)
        assert code == EXIT_OK
        assert report['result']['roundtrip'] == 'pass'

    def test_tucker_round_trip(self, write):
        code, report = _call('roundtrip', 'tucker', '--in', write('grid.json', {'labels': TOY_GRID}))
        assert code == EXIT_OK
        assert report['result']['problems'] == []

    def test_reduce_inline(self, necklace_file):
        code, report = _call('reduce', 'ns-to-dhs', '--in', necklace_file)
        assert code == EXIT_OK
        assert len(report['result']['instance']['point_sets']) == 2
        assert report['result']['embedding']['dimension'] == 2

    def test_search_bound_is_a_no(self, write):
        path = write('long.json', {'beads': [1, 2] * 14, 'k': 2})
        code, report = _call('solve', 'necklace', '--in', path)
        assert code == EXIT_NO
        assert report['status'] == 'no'
        assert report['error']


class TestFailures:

    def test_missing_flag(self):
        code, report = _call('solve', 'necklace')
        assert code == EXIT_MALFORMED
        assert '--in' in report['error']

    def test_invalid_json(self, write):
        assert _call('solve', 'necklace', '--in', write('broken.json', '{'))[0] == EXIT_MALFORMED

    def test_invalid_instance(self, write):
        path = write('odd.json', {'beads': [1, 2, 1], 'k': 2})
        assert _call('solve', 'necklace', '--in', path)[0] == EXIT_MALFORMED

    def test_missing_file(self, tmp_path):
        code, report = _call('solve', 'necklace', '--in', str(tmp_path / 'absent.json'))
        assert code == EXIT_IO
        assert report['status'] == 'error'

    @pytest.mark.parametrize("argv", [['explode'], ['verify', 'nothing'], ['gen', 'tucker2d', '--m', 'x']])
    def test_unknown_commands(self, argv):
        assert _call(*argv)[0] == EXIT_MALFORMED
