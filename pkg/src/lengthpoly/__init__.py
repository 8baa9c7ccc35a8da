"""Length polyhedra of interval orders: key graphs, cycle inequalities and their minimal TDI system."""

from .circulation import (
    Circulation,
    Decomposition,
    classify_cycles,
    integral_decomposition,
    rational_decomposition,
    resolve_circulation,
    sublimation_step,
    two_cycle_resolve,
    weight,
    witness,
)
from .cycles import (
    CycleInequality,
    DirectedCycle,
    WeakOrder,
    build_weak_list,
    cycle_weight,
    enumerate_cycles,
    weak_compare,
)
from .errors import *  # noqa: F401,F403
from .keygraph import Arc, Color, KeyGraph, build_key_graph, check_diamond_closure, export_dot, slack
from .order import (
    IntervalOrder,
    IntervalRepresentation,
    ascent_sequences,
    canonical_representation,
    from_ascent_sequence,
    from_intervals,
    from_relations,
    generate_pm,
)
from .ratlp import basic_feasible_point, nonneg_combination
from .schrijver import SchrijverSystem, is_redundant, minimality_audit, schrijver_system

__version__ = "0.1.0"
