"""Exact hook-length formulas for skew and cylindric skew diagrams."""

from .diagrams import (
    Cell,
    GeneralizedPartition,
    Omega,
    SkewShape,
    canonicalize,
    contains_periodic,
    hook_cells_periodic,
    hook_length_cyl,
    hook_length_periodic,
    poset_leq_cyl,
    render_window,
    shift_partition,
    skew_cells,
    validate_partition,
)
from .errors import CylHookError
from .excited import (
    CylExcitedDiagram,
    CylExcitedEnumerator,
    ExcitedDiagram,
    WindowTooSmall,
    active_cells_cyl,
    active_cells_finite,
    enumerate_excited_cyl,
    enumerate_excited_finite,
    excite_cyl,
    excite_finite,
)
from .formulas import (
    Verdict,
    VerificationReport,
    bar_formula_check,
    cyl_partial_sum,
    cyl_tail_estimate,
    f_lms,
    f_lmst,
    h_ml,
    h_st,
    hook_formula_check,
    naruse_check,
    naruse_rhs,
    shift_invariance_check,
    tagawa_identity_check,
    verify_conjecture,
)
from .paths import (
    BarTuple,
    LatticePath,
    enumerate_bar_tuples,
    enumerate_paths,
    loop_decomposition,
    path_to_excited,
    psi_bar,
)
from .tableaux import (
    Tableau,
    count_linear_extensions,
    count_restricted,
    enumerate_linear_extensions,
    is_restricted_extension,
)

__version__ = "0.1.0"
