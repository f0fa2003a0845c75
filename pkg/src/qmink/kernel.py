"""Rewriting backend selection.

The compiled kernel (_nf_cy) is preferred; the pure-Python twin is the
fallback and can be forced with QMINK_PURE=1.  Both export the same
two functions and are interchangeable term by term.
"""

import os

if os.environ.get("QMINK_PURE"):
    from . import _nf_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _nf_cy as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _nf_py as _impl
        BACKEND = "python"

nf_word = _impl.nf_word
normal_form_terms = _impl.normal_form_terms
BudgetExceeded = _impl.BudgetExceeded


def backend_name():
    return BACKEND
