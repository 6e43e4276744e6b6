from acyclic_coloring.data.structures import (
    BenchSession,
    BenchTrialConfig,
    BenchTrialResult,
    CycleId,
    GraphFamily,
    OutcomeKind,
    PaletteMode,
    ReplayFrame,
    RunReport,
    RunStats,
    StepOutcome,
    TrialStatus,
    VerifyReport,
)

__all__ = [
    "BenchSession",
    "BenchTrialConfig",
    "BenchTrialResult",
    "CycleId",
    "GraphFamily",
    "OutcomeKind",
    "PaletteMode",
    "ReplayFrame",
    "RunReport",
    "RunStats",
    "StepOutcome",
    "TrialStatus",
    "VerifyReport",
]
