"""Backend selection for the canonical-labeling kernel.

The compiled extension is preferred; CHECKERSURF_PURE_PYTHON=1 forces the
pure-Python twin. Both expose the same canonical_code and must agree
exactly (tests/test_kernel_parity.py).
"""

import os

if os.environ.get("CHECKERSURF_PURE_PYTHON"):
    from checkersurf._kernel_py import canonical_code

    BACKEND = "python"
else:
    try:
        from checkersurf._kernel import canonical_code  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from checkersurf._kernel_py import canonical_code  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["canonical_code", "BACKEND"]
