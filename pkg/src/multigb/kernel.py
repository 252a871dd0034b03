"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``MULTIGB_PURE_PYTHON=1`` to force the fallback (useful for debugging
and for the kernel benchmark).
"""

import os

if os.environ.get("MULTIGB_PURE_PYTHON") == "1":
    from multigb import _purekernel as _impl
else:
    try:
        from multigb import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from multigb import _purekernel as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

order_key = _impl.order_key
compare = _impl.compare
sort_terms = _impl.sort_terms
poly_neg = _impl.poly_neg
poly_scale = _impl.poly_scale
poly_mul_term = _impl.poly_mul_term
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_mul = _impl.poly_mul
spoly = _impl.spoly
normal_form = _impl.normal_form
