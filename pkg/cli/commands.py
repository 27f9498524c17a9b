"""
PPA Reductions Toolkit - Command Line
Verb/subject grammar over the generators, reductions, verifiers and brute-force oracles.
Every command prints exactly one JSON report on stdout; logs go to stderr.
"""

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ValidationError

from config import get_logger
from gadgets.reduction import build_reduction
from mobius.params import ReductionParams
from numerics.errors import (
    CircuitError,
    DomainError,
    InstanceError,
    ParameterError,
    ReductionToolkitError,
)
from numerics.generators import make_rng, random_necklace, random_sandwich, random_tucker2d
from numerics.serialization import (
    CHInstanceModel,
    CutSetModel,
    GridPairModel,
    HamSandwichModel,
    HyperplaneModel,
    NecklaceModel,
    NecklaceSplitModel,
    NVHDTModel,
    NVHDTSolutionModel,
    ReductionParamsModel,
    Report,
    Tucker2DModel,
    TuckerNDModel,
)
from oracles.brute_force import brute_force_ham_sandwich, brute_force_necklace, brute_force_tucker
from oracles.verifiers import (
    eval_ch,
    find_side_assignment,
    verify_ham_sandwich,
    verify_necklace,
    verify_nvhdt,
    verify_tucker,
    verify_tucker2d,
)
from sandwich.moment import necklace_to_sandwich, sandwich_to_necklace_solution
from sandwich.thieves import solve_power_of_two
from snake.compose import check_def34, compose_folds, pull_back_solution
from snake.cubelets import grid_to_cubelets_traced

logger = get_logger('CLI')

EXIT_OK = 0
EXIT_NO = 1
EXIT_MALFORMED = 2
EXIT_IO = 3

MALFORMED = (ValidationError, json.JSONDecodeError, InstanceError, ParameterError, DomainError, CircuitError)

Outcome = Tuple[bool, Dict]
Handler = Callable[[argparse.Namespace], Outcome]


# ============================================
# FILE HELPERS
# ============================================

def _read(path: Optional[str], model, flag: str):
    if path is None:
        raise InstanceError(f"{flag} is required for this command")
    with open(path, encoding='utf-8') as f:
        return model.model_validate_json(f.read())


def _emit(args: argparse.Namespace, payload: BaseModel, key: str = 'instance') -> Dict:
    """Write the payload to --out when given, otherwise inline it in the report."""
    data = payload.model_dump()
    if args.out is None:
        return {key: data}
    with open(args.out, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2)
        f.write('\n')
    logger.info(f"wrote {args.out}")
    return {'written': args.out}


def _params(args: argparse.Namespace, n: int) -> ReductionParams:
    if args.params is None:
        return ReductionParams.for_dimension(n)
    model = _read(args.params, ReductionParamsModel, '--params')
    if model.n != n:
        raise ParameterError(f"params are for dimension {model.n}, instance has dimension {n}")
    return model.to_domain()


def _assignment_list(assignment) -> List[List[int]]:
    return [[s, k, side] for (s, k), side in sorted(assignment.items())]


# ============================================
# GEN
# ============================================

def gen_tucker2d(args) -> Outcome:
    grid = random_tucker2d(args.m, make_rng(args.seed))
    return True, _emit(args, Tucker2DModel.from_domain(grid))


def gen_necklace(args) -> Outcome:
    inst = random_necklace(args.colours, args.max_per_colour, make_rng(args.seed), k=args.k)
    return True, _emit(args, NecklaceModel.from_domain(inst))


def gen_sandwich(args) -> Outcome:
    inst = random_sandwich(args.dimension, args.points, make_rng(args.seed))
    return True, _emit(args, HamSandwichModel.from_domain(inst))


def gen_nvhdt(args) -> Outcome:
    grid = random_tucker2d(args.m, make_rng(args.seed))
    folded, trace = compose_folds(grid)
    inst, trace = grid_to_cubelets_traced(folded, trace)
    result = _emit(args, NVHDTModel.from_domain(inst))
    result['trace'] = trace.to_dict()
    return True, result


# ============================================
# REDUCE
# ============================================

def reduce_ns_to_dhs(args) -> Outcome:
    inst = _read(args.input, NecklaceModel, '--in').to_domain()
    dhs, embedding = necklace_to_sandwich(inst)
    result = _emit(args, HamSandwichModel.from_domain(dhs))
    result['embedding'] = embedding.to_dict()
    return True, result


def reduce_tucker_to_nvhdt(args) -> Outcome:
    grid = _read(args.input, Tucker2DModel, '--in').to_domain()
    folded, trace = compose_folds(grid)
    inst, trace = grid_to_cubelets_traced(folded, trace)
    result = _emit(args, NVHDTModel.from_domain(inst))
    result['trace'] = trace.to_dict()
    return True, result


def reduce_nvhdt_to_ch(args) -> Outcome:
    inst = _read(args.input, NVHDTModel, '--in').to_domain()
    reduction = build_reduction(inst, _params(args, inst.dimension))
    result = _emit(args, CHInstanceModel.from_domain(reduction.ch))
    result['reduction'] = reduction.to_dict()
    return True, result


# ============================================
# VERIFY
# ============================================

def verify_ch(args) -> Outcome:
    ch = _read(args.inst, CHInstanceModel, '--inst').to_domain()
    cuts = _read(args.cuts, CutSetModel, '--cuts').to_domain()
    report = eval_ch(ch, cuts)
    return report.is_epsilon_solution, report.to_dict()


def verify_necklace_cmd(args) -> Outcome:
    inst = _read(args.inst, NecklaceModel, '--inst').to_domain()
    split = _read(args.solution, NecklaceSplitModel, '--solution').to_domain()
    ok = verify_necklace(inst, split)
    return ok, {'verified': ok}


def verify_sandwich(args) -> Outcome:
    inst = _read(args.inst, HamSandwichModel, '--inst').to_domain()
    h = _read(args.solution, HyperplaneModel, '--solution').to_domain()
    assignment = find_side_assignment(inst, h)
    if assignment is None:
        return False, {'verified': False, 'side_assignment': None}
    ok = verify_ham_sandwich(inst, h, assignment)
    return ok, {'verified': ok, 'side_assignment': _assignment_list(assignment)}


def verify_tucker2d_cmd(args) -> Outcome:
    grid = _read(args.inst, Tucker2DModel, '--inst').to_domain()
    p1, p2 = _read(args.solution, GridPairModel, '--solution').to_domain()
    ok = verify_tucker2d(grid, p1, p2)
    return ok, {'verified': ok}


def verify_tuckernd(args) -> Outcome:
    grid = _read(args.inst, TuckerNDModel, '--inst').to_domain()
    p1, p2 = _read(args.solution, GridPairModel, '--solution').to_domain()
    ok = verify_tucker(grid, p1, p2)
    return ok, {'verified': ok}


def verify_nvhdt_cmd(args) -> Outcome:
    inst = _read(args.inst, NVHDTModel, '--inst').to_domain()
    sol = _read(args.solution, NVHDTSolutionModel, '--solution')
    points = sol.to_domain()
    p_c = _params(args, inst.dimension).p_c if args.params else len(points)
    ok = verify_nvhdt(inst, points, p_c, delta=sol.delta)
    return ok, {'verified': ok}


# ============================================
# SOLVE
# ============================================

def solve_necklace(args) -> Outcome:
    inst = _read(args.input, NecklaceModel, '--in').to_domain()
    if inst.k == 2:
        split = brute_force_necklace(inst, jobs=args.jobs)
    else:
        split = solve_power_of_two(inst, jobs=args.jobs)
    if split is None:
        return False, {'split': None}
    return True, {'split': split.to_dict(), 'verified': verify_necklace(inst, split)}


def solve_sandwich(args) -> Outcome:
    inst = _read(args.input, HamSandwichModel, '--in').to_domain()
    h = brute_force_ham_sandwich(inst, jobs=args.jobs)
    assignment = find_side_assignment(inst, h)
    return True, {
        'hyperplane': HyperplaneModel.from_domain(h).model_dump(),
        'side_assignment': _assignment_list(assignment or {}),
    }


def _solve_grid(grid) -> Outcome:
    p1, p2 = brute_force_tucker(grid)
    return True, {'p1': list(p1), 'p2': list(p2)}


def solve_tucker2d(args) -> Outcome:
    return _solve_grid(_read(args.input, Tucker2DModel, '--in').to_domain())


def solve_tuckernd(args) -> Outcome:
    return _solve_grid(_read(args.input, TuckerNDModel, '--in').to_domain())


# ============================================
# ROUND TRIPS
# ============================================

def roundtrip_ns_dhs(args) -> Outcome:
    """Necklace -> ham sandwich -> brute-force cut -> necklace split -> verify."""
    inst = _read(args.input, NecklaceModel, '--in').to_domain()
    dhs, embedding = necklace_to_sandwich(inst)
    h = brute_force_ham_sandwich(dhs, jobs=args.jobs)
    split = sandwich_to_necklace_solution(embedding, h)
    ok = verify_necklace(inst, split)
    return ok, {'roundtrip': 'pass' if ok else 'fail', 'split': split.to_dict()}


def roundtrip_tucker(args) -> Outcome:
    """Tucker grid -> folded grid -> brute-force pair -> pull back -> verify."""
    grid = _read(args.input, Tucker2DModel, '--in').to_domain()
    folded, trace = compose_folds(grid)
    problems = check_def34(folded)
    pair = brute_force_tucker(folded)
    p1, p2 = pull_back_solution(trace, pair)
    ok = not problems and verify_tucker2d(grid, p1, p2)
    return ok, {
        'roundtrip': 'pass' if ok else 'fail',
        'folded_dims': list(folded.dims),
        'problems': problems,
        'p1': list(p1),
        'p2': list(p2),
    }


# ============================================
# PARAMETERS AND SCHEMA
# ============================================

def params_check(args) -> Outcome:
    if args.params is not None:
        params = _read(args.params, ReductionParamsModel, '--params').to_domain()
    else:
        params = ReductionParams.for_dimension(args.n)
    return True, params.to_dict()


def schema(args) -> Outcome:
    return True, Report.model_json_schema()


COMMANDS: Dict[Tuple[str, Optional[str]], Handler] = {
    ('gen', 'tucker2d'): gen_tucker2d,
    ('gen', 'necklace'): gen_necklace,
    ('gen', 'sandwich'): gen_sandwich,
    ('gen', 'nvhdt'): gen_nvhdt,
    ('reduce', 'ns-to-dhs'): reduce_ns_to_dhs,
    ('reduce', 'tucker-to-nvhdt'): reduce_tucker_to_nvhdt,
    ('reduce', 'nvhdt-to-ch'): reduce_nvhdt_to_ch,
    ('verify', 'ch'): verify_ch,
    ('verify', 'necklace'): verify_necklace_cmd,
    ('verify', 'sandwich'): verify_sandwich,
    ('verify', 'tucker2d'): verify_tucker2d_cmd,
    ('verify', 'tuckernd'): verify_tuckernd,
    ('verify', 'nvhdt'): verify_nvhdt_cmd,
    ('solve', 'necklace'): solve_necklace,
    ('solve', 'sandwich'): solve_sandwich,
    ('solve', 'tucker2d'): solve_tucker2d,
    ('solve', 'tuckernd'): solve_tuckernd,
    ('roundtrip', 'ns-dhs'): roundtrip_ns_dhs,
    ('roundtrip', 'tucker'): roundtrip_tucker,
    ('params-check', None): params_check,
    ('schema', None): schema,
}


# ============================================
# PARSER AND RUNNER
# ============================================

class _Parser(argparse.ArgumentParser):
    """Argument errors surface as malformed input instead of exiting."""

    def error(self, message):
        raise InstanceError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog='run_reductions.py', description="PPA reductions toolkit")
    ap.add_argument('verb', choices=sorted({verb for verb, _ in COMMANDS}))
    ap.add_argument('subject', nargs='?')
    ap.add_argument('--seed', type=int, default=0, help="Seed for every random generator.")
    ap.add_argument('--params', help="JSON file with ReductionParams overrides.")
    ap.add_argument('--jobs', type=int, default=None, help="Worker cap for the brute-force oracles.")
    ap.add_argument('--in', dest='input', help="Input instance file.")
    ap.add_argument('--out', help="Write the produced instance here instead of into the report.")
    ap.add_argument('--inst', help="Instance file to verify against.")
    ap.add_argument('--cuts', help="Cut-set file for `verify ch`.")
    ap.add_argument('--solution', help="Solution file to verify.")
    ap.add_argument('--m', type=int, default=5, help="Side of a generated Tucker grid.")
    ap.add_argument('--n', type=int, default=2, help="Dimension for `params-check` without --params.")
    ap.add_argument('--colours', type=int, default=3)
    ap.add_argument('--max-per-colour', type=int, default=4)
    ap.add_argument('--k', type=int, default=2, help="Number of thieves.")
    ap.add_argument('--dimension', type=int, default=2)
    ap.add_argument('--points', type=int, default=3, help="Points per set of a generated sandwich.")
    return ap


def run(argv: Optional[List[str]] = None, stdout=None) -> int:
    """Parse, dispatch and print one report. Returns the exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = sys.stdout if stdout is None else stdout
    command = ' '.join(a for a in argv[:2] if not a.startswith('-'))
    try:
        args = build_parser().parse_args(argv)
        command = f"{args.verb} {args.subject}" if args.subject else args.verb
        handler = COMMANDS.get((args.verb, args.subject))
        if handler is None:
            raise InstanceError(f"unsupported command: {command}")
        logger.debug(f"running {command}")
        positive, result = handler(args)
        code = EXIT_OK if positive else EXIT_NO
        report = Report(command=command, status='ok' if positive else 'no', exit_code=code, result=result)
    except MALFORMED as e:
        logger.error(f"malformed input: {e}")
        report = Report(command=command, status='error', exit_code=EXIT_MALFORMED, error=str(e))
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        report = Report(command=command, status='error', exit_code=EXIT_IO, error=str(e))
    except ReductionToolkitError as e:
        logger.warning(f"{type(e).__name__}: {e}")
        report = Report(command=command, status='no', exit_code=EXIT_NO, error=str(e))
    stdout.write(report.model_dump_json(indent=2))
    stdout.write('\n')
    return report.exit_code


def main():
    sys.exit(run())
