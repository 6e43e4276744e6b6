import json
import logging
import os
from datetime import datetime
from statistics import mean
from typing import Any, Dict, Optional

from acyclic_coloring.data.structures import BenchSession, TrialStatus
from acyclic_coloring.params.algo_params import AlgoParams


class ResultAggregator:
    """Summarizes bench trials and writes the JSON report."""

    def __init__(self, params: Optional[AlgoParams] = None):
        self.params = params

    def aggregate_results(self, session: BenchSession) -> Dict[str, Any]:
        """Aggregate all trial results into a summary.

        Returns:
            Summary with per-status counts under ``count`` and averages over terminated trials
        """
        results = session.ordered_results()
        done = [r for r in results if r.status == TrialStatus.TERMINATED]
        summary: Dict[str, Any] = {
            "session": session.get_summary_stats(),
            "count": {
                "total": len(results),
                "terminated": len(done),
                "step_capped": sum(1 for r in results if r.status == TrialStatus.STEP_CAPPED),
                "failed": sum(1 for r in results if r.status == TrialStatus.FAILED),
            },
        }
        if done:
            summary["terminated_stats"] = {
                "mean_steps": mean(r.steps for r in done),
                "mean_uncolorings": mean(r.uncolorings for r in done),
                "max_colors_used": max(r.colors_used for r in done),
                "mean_record_bits": mean(r.record_bits for r in done),
                "mean_entropy_bits": mean(r.entropy_bits for r in done),
            }
        if self.params is not None:
            summary["params"] = self.params.to_dict()
        logging.info(
            f"Aggregated {len(results)} trials: {summary['count']['terminated']} terminated, "
            f"{summary['count']['step_capped']} step-capped, {summary['count']['failed']} failed"
        )
        return summary

    def generate_json_report(self, session: BenchSession, summary: Dict[str, Any], report_dir: Optional[str] = None) -> str:
        """Write ``bench_results.json``; returns its absolute path, or "" when writing failed."""
        try:
            if report_dir is None:
                timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
                report_dir = f"./reports/bench_{timestamp}"
            os.makedirs(report_dir, exist_ok=True)

            json_path = os.path.join(report_dir, "bench_results.json")
            payload = {
                "summary": summary,
                "trials": [r.model_dump(mode="json") for r in session.ordered_results()],
            }
            with open(json_path, "w", encoding="utf-8") as f:
                json.dump(payload, f, indent=2, ensure_ascii=False, default=str)

            absolute_path = os.path.abspath(json_path)
            logging.debug(f"JSON report generated: {absolute_path}")
            return absolute_path
        except Exception as e:
            logging.error(f"Failed to generate JSON report: {e}")
            return ""
