"""Kernel selection.

The compiled kernel is used when the extension built; the pure-Python one
otherwise.  ``IDEALIS_KERNEL=slow`` or ``=fast`` forces the choice (forcing
``fast`` raises if the extension is missing, so CI can assert it built).
"""

import os

from . import _slow

_forced = os.environ.get("IDEALIS_KERNEL", "")
if _forced == "slow":
    impl = _slow
elif _forced == "fast":
    from . import _fast as impl
elif _forced:
    raise ValueError(f"IDEALIS_KERNEL must be 'slow' or 'fast', got {_forced!r}")
else:
    try:
        from . import _fast as impl
    except ImportError:
        impl = _slow

IMPL = impl.IMPL
BudgetExceeded = impl.BudgetExceeded
member1 = impl.member1
contains = impl.contains
divides = impl.divides
divisible_any = impl.divisible_any
reduce_gens = impl.reduce_gens
module_gens_1d = impl.module_gens_1d
inverse_gens = impl.inverse_gens
v_close_gens = impl.v_close_gens
sum_gens = impl.sum_gens
intersect_gens = impl.intersect_gens
radical_gens = impl.radical_gens
box_members = impl.box_members
modular_close_gens = impl.modular_close_gens
primary_violation = impl.primary_violation

__all__ = [
    "IMPL", "BudgetExceeded", "member1", "contains", "divides",
    "divisible_any", "reduce_gens", "module_gens_1d", "inverse_gens",
    "v_close_gens", "sum_gens", "intersect_gens", "radical_gens",
    "box_members", "modular_close_gens", "primary_violation",
]
