"""Poissonized longest increasing subsequences.

Sampling, longest chains and maximal-chain geometry, Tracy-Widom numerics,
and Monte Carlo estimates of the fluctuation exponents.
"""

from .airy import airy, airy_pair, airy_prime
from .campaign import ExperimentConfig, TrialRecord, read_campaign_csv, run_campaign, run_trial, write_campaign_csv
from .chains import (
    ChainAnalysis,
    TransversalSummary,
    analyze_chains,
    event_A,
    longest_chain,
    longest_chain_restricted,
    max_cell_count,
    transversal_summary,
    write_analysis_csv,
)
from .errors import InvalidArgument, PersistenceError, SolverFailure
from .estimators import (
    ScalingFit,
    estimate_chi,
    estimate_xi,
    ks_distance,
    lattice_distance,
    probability_A,
    tw_comparison,
)
from .lemmas import check_cell_tail, check_lemma_2_3, check_lemma_3_2
from .point_process import (
    CylinderSpec,
    Point,
    PointConfig,
    Rect,
    contains,
    count_in,
    read_points_csv,
    sample_poisson,
    write_points_csv,
)
from .tracy_widom import (
    ScalingInput,
    TWSolution,
    sample_tw,
    scaled_statistic,
    scaling_map,
    solve_hastings_mcleod,
    tw_cdf,
    tw_sf,
    write_tw_table,
)

__version__ = "0.1.0"
