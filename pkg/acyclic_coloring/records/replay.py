"""Inverting a run: from (final coloring, record) back to the empty coloring.

The record alone fixes which vertices are uncolored after every step; together with the
current coloring it fixes the previous coloring and the color that was sampled.
"""

import logging
from typing import List, Optional, Set, Tuple

from acyclic_coloring.data.structures import CycleId, OutcomeKind, ReplayFrame
from acyclic_coloring.engine.coloring import PartialColoring
from acyclic_coloring.engine.extend import candidate_list, find_bichromatic_cycles, select_uncolor_target
from acyclic_coloring.errors import CandidateListError, InvariantViolation, RecordCorruptionError
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.graph.dangerous import DangerousSets
from acyclic_coloring.params.algo_params import AlgoParams
from acyclic_coloring.records.catalog import CycleCatalog
from acyclic_coloring.records.record import Record, pop_last_step
from acyclic_coloring.utils.log_icon import icon

# (vertex, identifier of the uncolored cycle or None)
ScheduledStep = Tuple[int, Optional[CycleId]]


def decode_schedule(rec: Record, params: AlgoParams) -> List[Tuple[int, Optional[int]]]:
    """(q, z) of every step in forward order, read off a copy of ``rec``."""
    work = rec.copy()
    steps = []
    while work.t > 0:
        _, q, z = pop_last_step(work, params)
        steps.append((q, z))
    if work.r1 or work.r2:
        raise RecordCorruptionError(f"record does not reduce to empty (r2 leftover {work.r2})", 0)
    steps.reverse()
    return steps


def _simulate(
    schedule: List[Tuple[int, Optional[int]]], g: Graph, catalog: CycleCatalog
) -> Tuple[List[ScheduledStep], Set[int]]:
    """Forward pass over the schedule tracking only the set of uncolored vertices."""
    uncolored = set(g.vertices)
    steps: List[ScheduledStep] = []
    for i, (q, z) in enumerate(schedule, start=1):
        if not uncolored:
            raise RecordCorruptionError("step recorded after every vertex was colored", i)
        v = min(uncolored)
        if q == 0:
            uncolored.discard(v)
            steps.append((v, None))
            continue
        k = (q + 2) // 2
        ident = catalog.identifier_at(v, k, z - 1)
        if ident is None:
            raise RecordCorruptionError(f"index z={z} outside C_{2 * k}({v}) of size {catalog.size(v, k)}", i)
        for w in ident[2:]:
            if w in uncolored:
                raise RecordCorruptionError(f"cycle {ident} uncolors vertex {w} which was not colored", i)
        uncolored.update(ident[2:])
        steps.append((v, ident))
    return steps, uncolored


def reconstruct_uncolored_set(
    rec: Record, g: Graph, params: AlgoParams, dsets: DangerousSets, catalog: Optional[CycleCatalog] = None
) -> Set[int]:
    """The set of vertices left uncolored after the steps in ``rec``."""
    catalog = catalog or CycleCatalog(g, dsets)
    _, uncolored = _simulate(decode_schedule(rec, params), g, catalog)
    return uncolored


def restore_coloring(c: PartialColoring, identifier: CycleId) -> int:
    """Undo an uncoloring in place: recolor w4..w2k alternately with the colors of w2 and w3.

    Returns the color x that was sampled for v (the color of w3).

    Raises:
        RecordCorruptionError: the coloring does not look like the result of that uncoloring
    """
    w2, w3 = identifier[0], identifier[1]
    y, x = c[w2], c[w3]
    if y is None or x is None:
        raise RecordCorruptionError(f"cycle {identifier}: w2={w2} and w3={w3} must both be colored")
    for i, w in enumerate(identifier[2:], start=2):
        if c.is_colored(w):
            raise RecordCorruptionError(f"cycle {identifier}: vertex {w} should be uncolored")
        c.set(w, y if i % 2 == 0 else x)
    return x


def _undo_step(c: PartialColoring, v: int, ident: Optional[CycleId], step_index: int) -> ReplayFrame:
    if ident is None:
        x = c[v]
        if x is None:
            raise RecordCorruptionError(f"kept step at vertex {v} but the vertex is uncolored", step_index)
        c.unset(v)
        return ReplayFrame(vertex=v, color=x, kind=OutcomeKind.KEPT)
    if c.is_colored(v):
        raise RecordCorruptionError(f"uncolored step at vertex {v} but the vertex is colored", step_index)
    try:
        x = restore_coloring(c, ident)
    except RecordCorruptionError as e:
        raise RecordCorruptionError(str(e), step_index) from None
    return ReplayFrame(vertex=v, color=x, kind=OutcomeKind.UNCOLORED, cycle_identifier=ident)


def check_undone_step(
    c_prev: PartialColoring,
    frame: ReplayFrame,
    g: Graph,
    params: AlgoParams,
    dsets: DangerousSets,
    step_index: int,
):
    """Re-run the step forward from ``c_prev`` and compare with ``frame``.

    ``c_prev`` must satisfy every invariant, ``frame.color`` must be in L_c(v), and the
    cycles it closes must select exactly the recorded identifier (none for a kept step).

    Raises:
        RecordCorruptionError: the step cannot have happened on ``g``
    """
    v, x = frame.vertex, frame.color
    try:
        c_prev.audit(g, dsets)
        colors = candidate_list(c_prev, v, params, dsets, g)
        if x not in colors:
            raise RecordCorruptionError(f"color {x} is not among the candidates {colors} of vertex {v}", step_index)
        cycles = find_bichromatic_cycles(c_prev, v, x, g)
    except (InvariantViolation, CandidateListError) as e:
        raise RecordCorruptionError(f"coloring before this step is invalid: {e}", step_index) from None
    expected = select_uncolor_target(cycles) if cycles else None
    recorded = tuple(frame.cycle_identifier) if frame.cycle_identifier is not None else None
    if expected != recorded:
        raise RecordCorruptionError(
            f"vertex {v} with color {x} uncolors {expected}, but the record says {recorded}", step_index
        )


def reconstruct_previous(
    rec_t: Record,
    c_t: PartialColoring,
    g: Graph,
    params: AlgoParams,
    dsets: DangerousSets,
    catalog: Optional[CycleCatalog] = None,
) -> Tuple[Record, PartialColoring, ReplayFrame]:
    """Undo the last step: returns new (record, coloring) objects and the frame of that step."""
    catalog = catalog or CycleCatalog(g, dsets)
    step_index = rec_t.t
    prev, q, z = pop_last_step(rec_t.copy(), params)
    uncolored = reconstruct_uncolored_set(prev, g, params, dsets, catalog)
    if not uncolored:
        raise RecordCorruptionError("no uncolored vertex before the last step", step_index)
    v = min(uncolored)
    ident = None
    if q:
        k = (q + 2) // 2
        ident = catalog.identifier_at(v, k, z - 1)
        if ident is None:
            raise RecordCorruptionError(f"index z={z} outside C_{2 * k}({v})", step_index)
    c_prev = c_t.copy()
    frame = _undo_step(c_prev, v, ident, step_index)
    check_undone_step(c_prev, frame, g, params, dsets, step_index)
    return prev, c_prev, frame


def replay_full(
    final: PartialColoring,
    rec: Record,
    g: Graph,
    params: AlgoParams,
    dsets: DangerousSets,
    catalog: Optional[CycleCatalog] = None,
) -> List[ReplayFrame]:
    """Every frame of the run, in forward order, recovered from its end state alone.

    Raises:
        RecordCorruptionError: the record and coloring are inconsistent; ``step_index`` names the step
    """
    catalog = catalog or CycleCatalog(g, dsets)
    steps, uncolored = _simulate(decode_schedule(rec, params), g, catalog)
    if uncolored != set(final.uncolored_vertices()):
        raise RecordCorruptionError(
            f"record leaves {sorted(uncolored)} uncolored but the coloring leaves {final.uncolored_vertices()}",
            rec.t,
        )
    try:
        final.audit(g, dsets)
    except InvariantViolation as e:
        raise RecordCorruptionError(f"final coloring is invalid: {e}", rec.t) from None

    c = final.copy()
    frames: List[ReplayFrame] = []
    for i in range(len(steps), 0, -1):
        v, ident = steps[i - 1]
        frame = _undo_step(c, v, ident, i)
        check_undone_step(c, frame, g, params, dsets, i)
        frames.append(frame)
        if i % 1000 == 0:
            logging.debug(f"Replay reached step {i}")
    if c.colored_count:
        raise RecordCorruptionError(f"{c.colored_count} vertices still colored after undoing every step", 0)
    frames.reverse()
    logging.debug(f"{icon['repeat']} Replayed {len(frames)} steps back to the empty coloring")
    return frames
