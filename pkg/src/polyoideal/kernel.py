"""Select the reduction kernel at import time.

The compiled Cython kernel is used when it was built; otherwise, or when
the environment variable ``POLYOIDEAL_PURE_PYTHON`` is set to a non-empty
value, the pure-Python kernel is used. Both give identical results.
"""

import os

if os.environ.get("POLYOIDEAL_PURE_PYTHON"):
    from ._pykernel import NAME, LeadTable, poly_nf
else:
    try:
        from ._ckernel import NAME, LeadTable, poly_nf
    except ImportError:  # extension not built
        from ._pykernel import NAME, LeadTable, poly_nf

__all__ = ["NAME", "LeadTable", "poly_nf"]
