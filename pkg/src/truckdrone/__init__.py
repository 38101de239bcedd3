"""Drone-from-truck delivery scheduling on the line."""

from .geometry import (
    INFEASIBLE,
    Envelope,
    StartWindow,
    reach_envelope,
    return_position,
    return_positions,
    round_trip_time,
    start_window,
    vertical_delivery_time,
    window_arrays,
)
from .model import (
    Delivery,
    DeliveryPoint,
    FeasibilityReport,
    InfeasibleScheduleError,
    Instance,
    InvalidScheduleError,
    Schedule,
    earliest_start_pack,
    instance_scale,
    schedule_completion,
    verify_schedule,
)
from .proper import NotProperError, ProperReport, check_proper, interval_order_check
from .solvers import (
    BudgetError,
    DpTable,
    dp_table,
    solve_dp_proper,
    solve_exact,
    solve_greedy,
)
from .generators import (
    GenerationError,
    ThreePartitionSpec,
    TightnessCertificate,
    gen_greedy_tightness,
    gen_random_band,
    gen_random_proper,
    gen_three_partition,
)
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Delivery",
    "DeliveryPoint",
    "DpTable",
    "Envelope",
    "FeasibilityReport",
    "GenerationError",
    "INFEASIBLE",
    "InfeasibleScheduleError",
    "Instance",
    "InvalidScheduleError",
    "NotProperError",
    "ProperReport",
    "Schedule",
    "StartWindow",
    "ThreePartitionSpec",
    "TightnessCertificate",
    "__version__",
    "check_proper",
    "dp_table",
    "earliest_start_pack",
    "gen_greedy_tightness",
    "gen_random_band",
    "gen_random_proper",
    "gen_three_partition",
    "instance_scale",
    "interval_order_check",
    "reach_envelope",
    "render_svg",
    "return_position",
    "return_positions",
    "round_trip_time",
    "schedule_completion",
    "solve_dp_proper",
    "solve_exact",
    "solve_greedy",
    "start_window",
    "verify_schedule",
    "vertical_delivery_time",
    "window_arrays",
]
