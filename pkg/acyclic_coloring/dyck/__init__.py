from acyclic_coloring.dyck.counting import (
    DyckCountTable,
    catalan_even_descent_closed_form,
    count_dyck_even,
    count_partial_dyck_even,
    enumerate_partial_dyck_even,
    growth_ratio,
    is_partial_dyck_even,
)

__all__ = [
    "DyckCountTable",
    "catalan_even_descent_closed_form",
    "count_dyck_even",
    "count_partial_dyck_even",
    "enumerate_partial_dyck_even",
    "growth_ratio",
    "is_partial_dyck_even",
]
