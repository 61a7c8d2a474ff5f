"""Select the polynomial kernel backend at import time.

The compiled ``_ckernel`` is used when it was built; setting
``QH_PURE_PYTHON=1`` in the environment forces the pure-Python fallback.
"""
import os

from qhyper import _pykernel

if os.environ.get("QH_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernel
else:
    try:
        from qhyper import _ckernel as _impl
    except ImportError:
        _impl = _pykernel

BACKEND = _impl.BACKEND

p_trim = _impl.p_trim
p_add = _impl.p_add
p_sub = _impl.p_sub
p_neg = _impl.p_neg
p_scale = _impl.p_scale
p_mul = _impl.p_mul
p_content = _impl.p_content
p_divexact = _impl.p_divexact
p_divexact_int = _impl.p_divexact_int
p_primitive = _impl.p_primitive
p_prem = _impl.p_prem
p_gcd = _impl.p_gcd


def available_backends():
    """Names and modules of every backend importable in this environment."""
    out = {"python": _pykernel}
    try:
        from qhyper import _ckernel
        out["cython"] = _ckernel
    except ImportError:
        pass
    return out
