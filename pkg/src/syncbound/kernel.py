"""Eigensolver kernel selection.

The compiled Cython kernel is preferred when the extension was built;
otherwise the pure-Python kernel takes over with identical semantics.
Setting SYNCBOUND_PURE_PYTHON=1 forces the fallback, which is mainly
useful for benchmarking and for testing the selection itself.
"""

from __future__ import annotations

import os

if os.environ.get("SYNCBOUND_PURE_PYTHON") == "1":
    from . import _pykernel as _impl
else:
    try:
        from . import _speckernel as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernel as _impl  # type: ignore[no-redef]

jacobi_sweeps = _impl.jacobi_sweeps


def kernel_name() -> str:
    """Which kernel is active: 'compiled' or 'python'."""
    return _impl.kernel_name()
