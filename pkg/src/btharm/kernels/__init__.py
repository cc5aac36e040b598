"""Kernel backend selection.

The compiled extension is preferred when present; set BTHARM_KERNELS=py or
BTHARM_KERNELS=c to force a backend.  `Kernel` is the selected class,
`BACKEND` the name actually in use.
"""

import os

from . import ops_py

_choice = os.environ.get("BTHARM_KERNELS", "auto")

Kernel = None
if _choice in ("auto", "c"):
    try:
        from . import _ops_c

        Kernel = _ops_c.Kernel
        BACKEND = "c"
    except ImportError:
        if _choice == "c":
            raise
if Kernel is None:
    Kernel = ops_py.Kernel
    BACKEND = "py"
