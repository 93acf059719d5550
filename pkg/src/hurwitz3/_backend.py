"""Kernel selection: compiled extension when available, pure Python otherwise.

Set HURWITZ3_KERNEL=py or HURWITZ3_KERNEL=c to force a backend (the latter
raises ImportError if the extension was not built).
"""

import os

_forced = os.environ.get("HURWITZ3_KERNEL")

if _forced == "py":
    from . import _kernel_py as kernel
elif _forced == "c":
    from . import _kernel as kernel  # type: ignore[no-redef]
else:
    try:
        from . import _kernel as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as kernel  # type: ignore[no-redef]

KERNEL_NAME = "c" if kernel.__name__.endswith("._kernel") else "py"

normalize = kernel.normalize
multiply = kernel.multiply
invert = kernel.invert
evaluate_signed = kernel.evaluate_signed
tau_word = kernel.tau_word
hurwitz_step = kernel.hurwitz_step
