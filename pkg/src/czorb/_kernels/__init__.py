"""Numeric kernel selection.

The compiled extension is used when it was built; otherwise the pure-Python
fallback takes over transparently. Set CZORB_PURE_PYTHON=1 to force the
fallback even when the extension is available.
"""

import os

from . import fallback as _fallback

_impl = _fallback
if not os.environ.get("CZORB_PURE_PYTHON"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

chart_radial = _impl.chart_radial
unwrapped_winding_phase = _impl.unwrapped_winding_phase


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return "python" if _impl is _fallback else "compiled"
