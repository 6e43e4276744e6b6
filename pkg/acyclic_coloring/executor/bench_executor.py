import asyncio
import logging
import math
from typing import List, Optional

from acyclic_coloring.data.structures import BenchSession, BenchTrialConfig, BenchTrialResult, TrialStatus
from acyclic_coloring.engine.runner import run_until_colored
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.graph.dangerous import DangerousSets, dangerous_set
from acyclic_coloring.params.algo_params import AlgoParams
from acyclic_coloring.records.catalog import CycleCatalog
from acyclic_coloring.utils.log_icon import icon


class BenchExecutor:
    """Runs independent trials over one graph in a bounded worker pool.

    Trials execute in worker threads; the graph, parameters, dangerous sets and the cycle
    catalog are shared read-only (the catalog cache locks its own inserts).
    """

    def __init__(self, max_concurrent_trials: int = 4):
        self.max_concurrent_trials = max(1, max_concurrent_trials)
        self.running_trials: dict = {}

    async def execute_trials(
        self,
        session: BenchSession,
        g: Graph,
        params: AlgoParams,
        dsets: Optional[DangerousSets] = None,
        catalog: Optional[CycleCatalog] = None,
    ) -> BenchSession:
        """Execute every trial of the session; results are stored by trial index.

        Args:
            session: session holding the trial configurations
            g: graph shared by all trials
            params: parameter set shared by all trials

        Returns:
            The same session with results filled in
        """
        logging.debug(f"Starting bench session {session.session_id} with {len(session.trial_configs)} trials")
        session.start_session()
        dsets = dsets if dsets is not None else dangerous_set(g, params.kappa, params.delta)
        catalog = catalog if catalog is not None else CycleCatalog(g, dsets)

        try:
            if not session.trial_configs:
                logging.warning("No trials configured")
                return session
            await self._execute_in_batches(session, g, params, dsets, catalog)
        except asyncio.CancelledError:
            logging.warning("Bench cancelled; keeping the trials that finished.")
            raise
        finally:
            session.complete_session()
        return session

    async def _execute_in_batches(
        self, session: BenchSession, g: Graph, params: AlgoParams, dsets: DangerousSets, catalog: CycleCatalog
    ):
        configs = session.trial_configs
        semaphore = asyncio.Semaphore(self.max_concurrent_trials)
        for start in range(0, len(configs), self.max_concurrent_trials):
            batch: List[BenchTrialConfig] = configs[start:start + self.max_concurrent_trials]
            tasks = []
            for config in batch:
                task = asyncio.create_task(self._execute_single_trial(config, g, params, dsets, catalog, semaphore))
                self.running_trials[config.trial_index] = task
                tasks.append(task)
            try:
                results = await asyncio.gather(*tasks, return_exceptions=True)
            finally:
                for config in batch:
                    self.running_trials.pop(config.trial_index, None)

            for config, result in zip(batch, results):
                if isinstance(result, BaseException):
                    logging.error(f"Trial {config.trial_index} failed with exception: {result}")
                    failed = BenchTrialResult(trial_index=config.trial_index, seed=config.seed)
                    failed.complete_execution(TrialStatus.FAILED, str(result))
                    session.update_trial_result(failed)
                else:
                    session.update_trial_result(result)

    async def _execute_single_trial(
        self,
        config: BenchTrialConfig,
        g: Graph,
        params: AlgoParams,
        dsets: DangerousSets,
        catalog: CycleCatalog,
        semaphore: asyncio.Semaphore,
    ) -> BenchTrialResult:
        async with semaphore:
            result = BenchTrialResult(trial_index=config.trial_index, seed=config.seed)
            result.start_execution()
            try:
                run = await asyncio.to_thread(
                    run_until_colored,
                    g,
                    params,
                    seed=config.seed,
                    step_cap=config.step_cap,
                    dsets=dsets,
                    catalog=catalog,
                    audit=config.audit,
                )
            except Exception as e:
                result.complete_execution(TrialStatus.FAILED, f"Trial execution failed: {e}")
                return result

            result.steps = run.stats.steps
            result.uncolorings = run.stats.uncolorings
            result.u_total = run.record.u_total
            result.colors_used = run.coloring.colors_used()
            result.record_bits = run.record.r1_bits + run.record.r2_bits
            result.entropy_bits = run.stats.steps * math.log2(params.list_size)
            status = TrialStatus.TERMINATED if run.terminated else TrialStatus.STEP_CAPPED
            result.complete_execution(status)
            logging.debug(f"{icon['check']} Trial {config.trial_index} (seed {config.seed}): {status.value}")
            return result
