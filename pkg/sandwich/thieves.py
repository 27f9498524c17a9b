"""
PPA Reductions Toolkit - Power-of-Two Thieves
Splits among k = 2^j thieves by repeated two-thief halving.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional

import config
from config import get_logger
from numerics.errors import InstanceError, OracleBugError
from numerics.instances import NecklaceInstance, NecklaceSplit
from oracles.brute_force import brute_force_necklace

logger = get_logger('Sandwich')

TwoThiefSolver = Callable[[NecklaceInstance], Optional[NecklaceSplit]]


def _bead_owners(inst: NecklaceInstance, solver: TwoThiefSolver, jobs: int) -> List[int]:
    if inst.k == 2:
        split = solver(inst)
        if split is None:
            raise OracleBugError(f"two-thief solver found no split for {inst.beads}")
        owners = [0] * len(inst.beads)
        for (start, stop), owner in zip(split.pieces(len(inst.beads)), split.piece_owner):
            owners[start:stop] = [owner] * (stop - start)
        return owners

    halves = _bead_owners(NecklaceInstance(inst.beads, 2, inst.num_colours), solver, jobs)
    # glue each thief's pieces, in necklace order, into a child necklace
    members = [[j for j, o in enumerate(halves) if o == t] for t in (0, 1)]
    children = [NecklaceInstance(tuple(inst.beads[j] for j in m), inst.k // 2, inst.num_colours) for m in members]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=2) as pool:
            child_owners = list(pool.map(lambda c: _bead_owners(c, solver, jobs), children))
    else:
        child_owners = [_bead_owners(c, solver, jobs) for c in children]

    owners = [0] * len(inst.beads)
    for t in (0, 1):
        for j, child_owner in zip(members[t], child_owners[t]):
            owners[j] = t * (inst.k // 2) + child_owner
    return owners


def solve_power_of_two(inst: NecklaceInstance, two_thief_solver: Optional[TwoThiefSolver] = None,
                       jobs: Optional[int] = None) -> NecklaceSplit:
    """Cuts fall only where ownership changes, so at most (k-1)n of them."""
    if inst.k & (inst.k - 1):
        raise InstanceError(f"k={inst.k} is not a power of two")
    solver = two_thief_solver or brute_force_necklace
    jobs = config.JOBS if jobs is None else jobs
    owners = _bead_owners(inst, solver, jobs)
    cuts = tuple(j for j in range(1, len(owners)) if owners[j] != owners[j - 1])
    piece_owner = tuple(owners[s] for s in (0,) + cuts)
    logger.debug(f"{inst.k} thieves: {len(cuts)} cuts")
    return NecklaceSplit(cuts, piece_owner)
