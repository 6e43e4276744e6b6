import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from acyclic_coloring.data.structures import RunStats, StepOutcome
from acyclic_coloring.engine.coloring import PartialColoring
from acyclic_coloring.engine.extend import extend_step
from acyclic_coloring.engine.rng import Pcg32, Sampler
from acyclic_coloring.errors import InvariantViolation
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.graph.dangerous import DangerousSets, dangerous_set
from acyclic_coloring.params.algo_params import AlgoParams, record_bound_holds
from acyclic_coloring.records.catalog import CycleCatalog
from acyclic_coloring.records.record import Record, log_step
from acyclic_coloring.utils.log_icon import icon

DEFAULT_STEP_CAP_FACTOR = 50


@dataclass
class RunResult:
    coloring: PartialColoring
    record: Record
    stats: RunStats
    outcomes: List[StepOutcome] = field(default_factory=list)

    @property
    def terminated(self) -> bool:
        return self.stats.terminated


def default_step_cap(g: Graph, factor: int = DEFAULT_STEP_CAP_FACTOR) -> int:
    return max(factor * g.n, 1)


def check_record_invariants(rec: Record, c: PartialColoring, params: AlgoParams):
    """Shape of r1, the colored-vertex balance and the r2 size bounds.

    Raises:
        InvariantViolation: on the first failure
    """
    if not rec.is_well_formed():
        raise InvariantViolation(f"r1 {rec.r1_text} is not a partial Dyck word with even descents")
    if rec.zeros - rec.ones != c.colored_count:
        raise InvariantViolation(f"zeros - ones = {rec.zeros - rec.ones} but {c.colored_count} vertices are colored")
    if rec.t and rec.u_total >= rec.t:
        raise InvariantViolation(f"U_t = {rec.u_total} is not below t = {rec.t}")
    if rec.product_radix is not None and not rec.r2 < rec.product_radix:
        raise InvariantViolation(f"r2 = {rec.r2} is not below the radix product {rec.product_radix}")
    if not record_bound_holds(params, rec.r2, rec.u_total):
        raise InvariantViolation(f"r2 = {rec.r2} is not below X^{rec.u_total}")


def run_until_colored(
    g: Graph,
    params: AlgoParams,
    seed: int = 0,
    step_cap: Optional[int] = None,
    dsets: Optional[DangerousSets] = None,
    catalog: Optional[CycleCatalog] = None,
    sampler: Optional[Sampler] = None,
    audit: bool = False,
    on_step: Optional[Callable[[StepOutcome, PartialColoring, Record], None]] = None,
) -> RunResult:
    """Repeat EXTEND and LOG from the empty coloring until every vertex is colored.

    Reaching ``step_cap`` is not an error: the partial state comes back with
    ``stats.terminated`` false.

    Args:
        seed: seeds a Pcg32 unless ``sampler`` is given
        audit: check every coloring and record invariant after each step
        on_step: called after each step with the outcome, coloring and record
    """
    step_cap = default_step_cap(g) if step_cap is None else step_cap
    if step_cap < 1:
        raise ValueError(f"step_cap must be at least 1, got {step_cap}")
    dsets = dsets if dsets is not None else dangerous_set(g, params.kappa, params.delta)
    catalog = catalog if catalog is not None else CycleCatalog(g, dsets)
    rng = sampler if sampler is not None else Pcg32(seed)

    c = PartialColoring(g.n)
    rec = Record()
    stats = RunStats()
    outcomes: List[StepOutcome] = []

    while not c.complete and stats.steps < step_cap:
        c, outcome = extend_step(c, rng, params, dsets, g, catalog)
        log_step(rec, outcome, params)
        stats.steps += 1
        if not outcome.kept:
            stats.record_uncoloring(2 * outcome.k)
        outcomes.append(outcome)
        if audit:
            c.audit(g, dsets)
            check_record_invariants(rec, c, params)
        if on_step is not None:
            on_step(outcome, c, rec)

    stats.terminated = c.complete
    if stats.terminated:
        logging.info(
            f"{icon['check']} Colored {g.n} vertices in {stats.steps} steps "
            f"({stats.uncolorings} uncolorings, {c.colors_used()} colors of {params.palette})"
        )
    else:
        logging.warning(
            f"{icon['hourglass']} Step cap {step_cap} reached with {g.n - c.colored_count} vertices uncolored"
        )
    return RunResult(coloring=c, record=rec, stats=stats, outcomes=outcomes)
