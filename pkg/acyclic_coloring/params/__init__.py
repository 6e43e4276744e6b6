from acyclic_coloring.params.algo_params import (
    DEFAULT_KAPPA,
    AlgoParams,
    RadixTable,
    catalog_bound_holds,
    catalog_bound_value,
    growth_coefficient,
    kappa_constraint_holds,
    make_params,
    minimal_kappa,
    radix,
    record_bound_holds,
    resolve_kappa,
)
from acyclic_coloring.params.arith import floor_nth_root, format_fraction, integer_nth_root, parse_kappa

__all__ = [
    "DEFAULT_KAPPA",
    "AlgoParams",
    "RadixTable",
    "catalog_bound_holds",
    "catalog_bound_value",
    "floor_nth_root",
    "format_fraction",
    "growth_coefficient",
    "integer_nth_root",
    "kappa_constraint_holds",
    "make_params",
    "minimal_kappa",
    "parse_kappa",
    "radix",
    "record_bound_holds",
    "resolve_kappa",
]
