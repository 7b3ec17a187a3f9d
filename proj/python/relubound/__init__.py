"""Exact upper bounds on the number of linear regions of ReLU networks."""

from ._core import (
    Error,
    asymptotic_report,
    binomial,
    bound_matrix,
    clip,
    closed_form_norm,
    compose_bound_histogram,
    connector,
    decomposition,
    evaluate_bound,
    exact_count,
    figure_one_network,
    gamma,
    leq,
    max_of,
    montufar_bound,
    montufar_lower_bound,
    naive_bound,
    parse_widths,
    phi,
    power_B,
    random_network,
    selfcheck,
    serra_sum,
    stirling_weakened,
    verify_network,
)

__all__ = [
    "Error",
    "asymptotic_report",
    "binomial",
    "bound_matrix",
    "clip",
    "closed_form_norm",
    "compose_bound_histogram",
    "connector",
    "decomposition",
    "evaluate_bound",
    "exact_count",
    "figure_one_network",
    "gamma",
    "leq",
    "max_of",
    "montufar_bound",
    "montufar_lower_bound",
    "naive_bound",
    "parse_widths",
    "phi",
    "power_B",
    "random_network",
    "selfcheck",
    "serra_sum",
    "stirling_weakened",
    "verify_network",
]
