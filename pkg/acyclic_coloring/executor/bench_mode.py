import logging
import uuid
from typing import Any, Dict, List, Optional, Tuple

from acyclic_coloring.data.structures import BenchSession, BenchTrialConfig
from acyclic_coloring.engine.rng import derive_trial_seed
from acyclic_coloring.executor.bench_executor import BenchExecutor
from acyclic_coloring.executor.result_aggregator import ResultAggregator
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.params.algo_params import AlgoParams
from acyclic_coloring.utils.get_log import GetLog
from acyclic_coloring.utils.log_icon import icon


class BenchMode:
    """Bench mode - runs seeded trials of the algorithm concurrently over one graph."""

    def __init__(self, max_concurrent_trials: int = 4):
        self.max_concurrent_trials = max_concurrent_trials
        self.executor = BenchExecutor(max_concurrent_trials)

    async def run(
        self,
        g: Graph,
        params: AlgoParams,
        source: str,
        seed: int = 0,
        trials: int = 1,
        seeds: Optional[List[int]] = None,
        step_cap: Optional[int] = None,
        audit: bool = False,
        log_cfg: Optional[Dict[str, Any]] = None,
        report_dir: Optional[str] = None,
    ) -> Tuple[BenchSession, Dict[str, Any], str]:
        """Run the bench.

        Args:
            seed: base seed; trial i runs with derive_trial_seed(seed, i)
            seeds: explicit run seeds, overriding ``seed`` and ``trials``
            report_dir: when set, a JSON report is written there

        Returns:
            Tuple of (session, aggregated summary, report path or "")
        """
        log_cfg = log_cfg or {}
        GetLog.get_log(log_level=log_cfg.get("level", "info"), save_locally=log_cfg.get("save_locally", False))
        logging.info(f"{icon['rocket']} Starting bench on {source}: n={g.n}, parallel mode {self.max_concurrent_trials}")

        session = BenchSession(session_id=str(uuid.uuid4()), source=source)
        run_seeds = list(seeds) if seeds else [derive_trial_seed(seed, i) for i in range(trials)]
        cap = step_cap if step_cap is not None else max(50 * g.n, 1)
        for i, s in enumerate(run_seeds):
            session.add_trial(BenchTrialConfig(trial_index=i, seed=s, step_cap=cap, audit=audit))

        try:
            session = await self.executor.execute_trials(session, g, params)
        except Exception as e:
            logging.error(f"Error in bench mode: {e}")
            raise

        aggregator = ResultAggregator(params)
        summary = aggregator.aggregate_results(session)
        session.aggregated_results = summary
        report_path = aggregator.generate_json_report(session, summary, report_dir) if report_dir else ""
        return session, summary, report_path
