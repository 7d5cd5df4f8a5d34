"""PPM coherent-state receiver toolkit.

Closed-form error bounds, exact greedy-receiver evaluation, backward-induction
optimal adaptive policies, and seeded Monte Carlo simulation for M-ary pulse
position modulation with displacement receivers.
"""

from .channel import ChannelParams, ClickModel, PoissonClickModel, p_prob, q_prob
from .bounds import (BoundResult, cpn_error, cpn_error_optimized, dd_error,
                     greedy_strong_pulse_limit, helstrom_error)
from .errors import CapacityError, ConfigError, NumericalDiagnosticError
from .exact import (brute_force_tree_error, greedy_exact_error,
                    greedy_exact_optimized, optimal_adaptive_error)
from .greedy import (GreedyAction, GreedyState, PolicyTable,
                     branch_multipliers, build_policy_table, greedy_choice,
                     initial_state, lookup, run_frame, update_state)
from .montecarlo import SimConfig, SimResult, cpn_decide, dd_decide, simulate
from .optimize import GridConfig, ScalarSearchConfig, search_interval

__version__ = "0.1.0"

__all__ = [
    "ChannelParams", "ClickModel", "PoissonClickModel", "q_prob", "p_prob",
    "BoundResult", "helstrom_error", "dd_error", "cpn_error",
    "cpn_error_optimized", "greedy_strong_pulse_limit",
    "GreedyState", "GreedyAction", "PolicyTable", "branch_multipliers",
    "greedy_choice", "initial_state", "update_state", "build_policy_table",
    "lookup", "run_frame",
    "greedy_exact_error", "greedy_exact_optimized", "optimal_adaptive_error",
    "brute_force_tree_error",
    "SimConfig", "SimResult", "simulate", "dd_decide", "cpn_decide",
    "ScalarSearchConfig", "GridConfig", "search_interval",
    "ConfigError", "CapacityError", "NumericalDiagnosticError",
]
