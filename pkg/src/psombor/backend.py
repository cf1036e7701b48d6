"""Kernel backend selection: compiled extension when importable, pure Python
otherwise. Set PSOMBOR_PURE=1 to force the pure kernel."""

import os

if os.environ.get("PSOMBOR_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl
    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "pure"

jacobi_sweeps = _impl.jacobi_sweeps
off_diagonal_norm = _impl.off_diagonal_norm


def backend_name() -> str:
    return BACKEND
