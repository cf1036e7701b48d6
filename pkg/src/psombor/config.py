"""Numerical tolerances used across the package, surfaced in one place.

All spectral tolerances are relative to max(1, scale) where the scale is the
Frobenius norm of the matrix (eigensolver) or the magnitude of the compared
value (bound checks).
"""

import os

# Jacobi eigensolver: sweep until off-diagonal Frobenius norm falls below
# OFF_DIAG_FACTOR * max(1, ||M||_F); give up after MAX_SWEEPS sweeps.
OFF_DIAG_FACTOR = 1e-12
MAX_SWEEPS = 100

# Eigenvalue classification.
ZERO_TOL_FACTOR = 1e-8        # inertia: |eigenvalue| below this counts as zero
CLUSTER_GAP_FACTOR = 1e-7     # distinct-eigenvalue clustering gap
VECTOR_RESIDUAL_FACTOR = 1e-10  # ||M v - lambda v|| acceptance when vectors built

# Bound verification.
HOLDS_REL_TOL = 1e-8          # slack >= -HOLDS_REL_TOL * max(1, |value|)
EQUALITY_REL_TOL = 1e-8       # |slack| below this counts as an attained equality

# Regression reproduction (published values carry ~4 significant figures).
COEFF_REL_TOL = 0.005         # slope / intercept
CORR_ABS_TOL = 5e-4           # Pearson R
OCTANE_MATCH_ATOL = 1e-3      # per-component (radius, energy) match

# Estrada index overflow guard: exp() of a larger radius overflows float64.
ESTRADA_EXP_LIMIT = 700.0


def default_holds_tol() -> float:
    """Bound-check tolerance, overridable through PSOMBOR_TOL."""
    raw = os.environ.get("PSOMBOR_TOL", "")
    if raw:
        try:
            return float(raw)
        except ValueError:
            pass
    return HOLDS_REL_TOL
