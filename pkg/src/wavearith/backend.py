"""Backend selection for the array kernels.

The compiled extension ``wavearith._native`` is preferred when it imported
successfully; ``wavearith._fallback`` (pure NumPy) is used otherwise.
Setting the environment variable ``WAVEARITH_PURE=1`` before import forces
the fallback. Both expose the same seven functions and agree to rounding.
"""

import os

from . import _fallback

__all__ = [
    "USING_NATIVE",
    "antideriv_series",
    "bump_raw",
    "comb_eval",
    "cos2pi",
    "discrete_sum",
    "get_backend",
    "sin2pi",
    "trapezoid_sq_sum",
]

_impl = _fallback
USING_NATIVE = False

if os.environ.get("WAVEARITH_PURE", "").strip().lower() not in {"1", "true", "yes"}:
    try:
        from . import _native

        _impl = _native
        USING_NATIVE = True
    except ImportError:
        pass


def get_backend(pure: bool = False):
    """Return the fallback module (pure=True) or the active backend."""
    return _fallback if pure else _impl


bump_raw = _impl.bump_raw
comb_eval = _impl.comb_eval
sin2pi = _impl.sin2pi
cos2pi = _impl.cos2pi
antideriv_series = _impl.antideriv_series
discrete_sum = _impl.discrete_sum
trapezoid_sq_sum = _impl.trapezoid_sq_sum
