import os
import sys

from errors import InvalidParameter

BUDGET_ENV_VAR = "LATTICE_WALKS_BUDGET"

# Balls larger than this are refused, never silently truncated.
DEFAULT_VERTEX_BUDGET = 5_000_000

# Caps on the walk length accepted by the `walks` command.
MMAX_CAP_3D = 24
MMAX_CAP_LOW_DIM = 40

PATH_SPECTRUM_MAX_N = 24
PATH_SPECTRUM_WARN_N = 12
PATH_SPECTRUM_RESIDUAL_TOL = 1e-9

# a few ulps; a and b can settle one ulp apart and never meet
AGM_TOLERANCE = 4 * sys.float_info.epsilon
AGM_MAX_ITERATIONS = 64

QUADRATURE_TOL = 1e-9
QUADRATURE_PANEL_LIMIT = 500
SINGULAR_PANEL_EPS = 1e-6

WEAK_EQUALITY_MMAX = 30
WEAK_EQUALITY_TOL = 1e-9

DISCRETE_WEIGHT_TOL = 1e-12
DISCRETE_SYMMETRY_TOL = 1e-9


def vertex_budget(override: int | None = None) -> int:
    """
    Resolve the ball vertex budget: explicit override, then the
    LATTICE_WALKS_BUDGET environment variable, then the default.
    """
    if override is not None:
        budget = override
    else:
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None or raw.strip() == "":
            return DEFAULT_VERTEX_BUDGET
        try:
            budget = int(raw)
        except ValueError:
            raise InvalidParameter(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None

    if budget < 1:
        raise InvalidParameter(f"Vertex budget must be positive, got {budget}")
    return budget


def mmax_cap(dimension: int) -> int:
    return MMAX_CAP_3D if dimension >= 3 else MMAX_CAP_LOW_DIM
