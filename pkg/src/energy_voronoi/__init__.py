"""Energy-metric Voronoi cells for vehicles in a uniform flow."""

from .approximation import (
    HalfLine, Wedge, asymptote_lines, augment_lower_bound, disk_radius,
    lower_bound_neighbors, wedge_contains, wedge_lower, wedge_upper,
)
from .bisector import (
    DownstreamHalfLine, HyperbolaBranch, PerpendicularLine, bisector, bisector_contains,
    closest_boundary_point, sample_bisector,
)
from .demo import InvalidEventError, dynamic_demo
from .dominance import (
    DominanceOutcome, Scenario, check_assumption, classify, compare, dominance_matrix, dominates,
)
from .dominance_graph import DominanceGraph
from .estimators import EnergyVoronoiPartition, NeighborBounds
from .exceptions import (
    AssumptionViolation, CapacityError, DegeneratePairError, EnergyVoronoiError,
)
from .geometry import Point, Rect
from .metric import (
    UNIT_FLOW, FlowField, OptimalControl, energy, optimal_control, simulate_trajectory,
    weighted_distance, weighted_distances,
)
from .neighbor_bounds import CandidateSet, CountingDominance, upper_bound_simple, upper_bound_sorted
from .simulation import SimConfig, SimStats, emit_stats, generate_points, load_stats, run_trials
from .svg import emit_cell_svg
from .voronoi_cell import (
    Arc, VoronoiCell, cell_contains, compute_cell, compute_cell_prefiltered, exact_neighbors,
    neighbors_from_cell,
)

__version__ = "0.1.0"
