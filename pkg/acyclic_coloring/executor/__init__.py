from acyclic_coloring.executor.bench_executor import BenchExecutor
from acyclic_coloring.executor.bench_mode import BenchMode
from acyclic_coloring.executor.result_aggregator import ResultAggregator

__all__ = ["BenchExecutor", "BenchMode", "ResultAggregator"]
