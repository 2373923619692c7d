"""Kernel backend selection.

The compiled extension is preferred when it is importable; otherwise the
pure-Python mirror is used.  Set ``BOHRAD_PURE=1`` in the environment to
force the fallback (useful for benchmarking and debugging).
"""

import os

if os.environ.get("BOHRAD_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

CESARO = _impl.CESARO
BERNARDI = _impl.BERNARDI
series_tail = _impl.series_tail


def backend() -> str:
    """Name of the active kernel backend, ``"cython"`` or ``"python"``."""
    return BACKEND
