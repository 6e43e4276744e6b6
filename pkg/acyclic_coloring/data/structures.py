from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

CycleId = Tuple[int, ...]


class PaletteMode(str, Enum):
    """Palette rounding mode."""

    SAFE = "safe"
    TIGHT = "tight"


class GraphFamily(str, Enum):
    CYCLE = "cycle"
    PATH = "path"
    EMPTY = "empty"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    HYPERCUBE = "hypercube"
    RANDOM_REGULAR = "random_regular"
    ERDOS_RENYI = "erdos_renyi"


class OutcomeKind(str, Enum):
    KEPT = "kept"
    UNCOLORED = "uncolored"


class TrialStatus(str, Enum):
    """Bench trial status enumeration."""

    PENDING = "pending"
    RUNNING = "running"
    TERMINATED = "terminated"
    STEP_CAPPED = "step_capped"
    FAILED = "failed"


class StepOutcome(BaseModel):
    """What one EXTEND step did: the vertex, the sampled color and, on failure, the cycle."""

    model_config = ConfigDict(frozen=True)

    vertex: int
    color: int
    kind: OutcomeKind = OutcomeKind.KEPT
    cycle_identifier: Optional[CycleId] = None
    k: Optional[int] = None
    z: Optional[int] = None

    @property
    def kept(self) -> bool:
        return self.kind == OutcomeKind.KEPT


class ReplayFrame(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex: int
    color: int
    kind: OutcomeKind
    cycle_identifier: Optional[CycleId] = None

    @classmethod
    def from_outcome(cls, outcome: StepOutcome) -> "ReplayFrame":
        return cls(
            vertex=outcome.vertex,
            color=outcome.color,
            kind=outcome.kind,
            cycle_identifier=outcome.cycle_identifier,
        )

    def to_row(self) -> str:
        ident = "" if self.cycle_identifier is None else " ".join(str(w) for w in self.cycle_identifier)
        return f"{self.vertex},{self.color},{self.kind.value},{ident}"


class RunStats(BaseModel):
    """Counters gathered while a run executes."""

    steps: int = 0
    uncolorings: int = 0
    # cycle length 2k -> number of uncolorings of that length
    histogram: Dict[int, int] = Field(default_factory=dict)
    terminated: bool = False

    def record_uncoloring(self, cycle_length: int):
        self.uncolorings += 1
        self.histogram[cycle_length] = self.histogram.get(cycle_length, 0) + 1


class VerifyReport(BaseModel):
    proper: bool
    acyclic: bool
    # monochromatic edge (u, v), or the vertices of a bichromatic cycle in order
    witness: Optional[List[int]] = None
    colors_used: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()


class RunReport(BaseModel):
    """Summary of one run, emitted by the run command."""

    source: str
    n: int
    m: int
    delta: int
    kappa: str
    mode: PaletteMode
    palette: int
    list_size: int
    seed: int
    terminated: bool
    steps: int
    uncolorings: int
    u_total: int = 0
    histogram: Dict[int, int] = Field(default_factory=dict)
    colors_used: int = 0
    r1_bits: int = 0
    r2_bits: int = 0
    record_bytes: Optional[int] = None
    wall_time: Optional[float] = None
    # entry i is the color of vertex i+1
    coloring: Optional[List[Optional[int]]] = None

    def to_dict(self) -> Dict[str, Any]:
        data = self.model_dump(mode="json", exclude_none=True)
        data["histogram"] = {str(k): v for k, v in sorted(self.histogram.items())}
        return data


class BenchTrialConfig(BaseModel):
    trial_index: int
    seed: int
    step_cap: int
    audit: bool = False


class BenchTrialResult(BaseModel):
    """Result of one bench trial, one CSV row."""

    trial_index: int
    seed: int
    status: TrialStatus = TrialStatus.PENDING
    steps: int = 0
    uncolorings: int = 0
    # ones in r1
    u_total: int = 0
    colors_used: int = 0
    record_bits: int = 0
    # t * log2(l): bits of randomness consumed by the sampler
    entropy_bits: float = 0.0
    error_message: Optional[str] = ""
    start_time: Optional[datetime] = None
    end_time: Optional[datetime] = None

    @property
    def terminated(self) -> bool:
        return self.status == TrialStatus.TERMINATED

    def start_execution(self):
        self.start_time = datetime.now().replace(microsecond=0)
        self.status = TrialStatus.RUNNING

    def complete_execution(self, status: TrialStatus, error_message: str = ""):
        self.end_time = datetime.now().replace(microsecond=0)
        self.status = status
        self.error_message = error_message

    def to_row(self) -> List[Any]:
        return [
            self.seed,
            self.steps,
            self.u_total,
            self.colors_used,
            self.record_bits,
            f"{self.entropy_bits:.3f}",
            self.status.value,
        ]


class BenchSession(BaseModel):
    """A batch of trials over one graph and one parameter set."""

    session_id: str
    source: str
    trial_configs: List[BenchTrialConfig] = Field(default_factory=list)
    results: Dict[int, BenchTrialResult] = Field(default_factory=dict)
    start_time: Optional[datetime] = None
    end_time: Optional[datetime] = None
    aggregated_results: Optional[Dict[str, Any]] = None

    def add_trial(self, config: BenchTrialConfig):
        self.trial_configs.append(config)
        self.results[config.trial_index] = BenchTrialResult(trial_index=config.trial_index, seed=config.seed)

    def start_session(self):
        self.start_time = datetime.now().replace(microsecond=0)

    def complete_session(self):
        self.end_time = datetime.now().replace(microsecond=0)

    def update_trial_result(self, result: BenchTrialResult):
        self.results[result.trial_index] = result

    def ordered_results(self) -> List[BenchTrialResult]:
        return [self.results[i] for i in sorted(self.results)]

    def get_summary_stats(self) -> Dict[str, Any]:
        results = self.ordered_results()
        total = len(results)
        terminated = sum(1 for r in results if r.status == TrialStatus.TERMINATED)
        capped = sum(1 for r in results if r.status == TrialStatus.STEP_CAPPED)
        failed = sum(1 for r in results if r.status == TrialStatus.FAILED)
        duration = None
        if self.start_time and self.end_time:
            duration = (self.end_time - self.start_time).total_seconds()
        return {
            "session_id": self.session_id,
            "source": self.source,
            "total_trials": total,
            "terminated": terminated,
            "step_capped": capped,
            "failed": failed,
            "termination_rate": (terminated / total) if total else 0,
            "duration": duration,
        }
