"""
PPA Reductions Toolkit - Forward Simulation
Given the n coordinate-encoding cuts, places every gadget agent's cut at its exact balancing
position, slot by slot, so the constructed instance computes what its circuits say.
"""

from fractions import Fraction
from typing import List, Sequence

from config import get_logger
from gadgets.reduction import Reduction
from numerics.errors import DomainError, OracleBugError
from numerics.measures import LabelledCutSet
from numerics.rational import as_rational
from oracles.verifiers import balancing_cut

logger = get_logger('Reduction')


def simulate_cuts(reduction: Reduction, ce_cuts: Sequence) -> LabelledCutSet:
    n = reduction.params.n
    cuts: List[Fraction] = sorted(as_rational(c, 'cut') for c in ce_cuts)
    if len(cuts) != n:
        raise DomainError(f"expected {n} coordinate-encoding cuts, got {len(cuts)}")
    if any(not 0 <= c <= n for c in cuts):
        raise DomainError(f"coordinate-encoding cuts must lie in [0, {n}]")
    names = reduction.ch.agent_names
    for k in range(n, reduction.ch.num_agents):
        lo, hi = reduction.agent_slots[k]
        cut = balancing_cut(reduction.ch.agents[k], cuts, lo, hi, presorted=True)
        if cut is None:
            raise OracleBugError(f"agent {names[k] if names else k} has no balancing cut in its slot")
        cuts.append(cut)
    logger.debug(f"placed {len(cuts) - n} gadget cuts")
    return LabelledCutSet(tuple(cuts))
