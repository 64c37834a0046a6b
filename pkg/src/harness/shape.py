"""
Shape of closed normal forms

A closed L-normal term is either 0v or a combination
    a1.l1 + ... + an.ln + m1 + ... + mk
of pairwise distinct abstractions, with every weight outside {0, 1}.
"""

from typing import Optional

from ..rewrite import DEFAULT_SYSTEM, RewriteSystem
from ..terms import Lam, Scaled, Sum, Term, Zero


def shape_violation(t: Term, system: RewriteSystem = DEFAULT_SYSTEM) -> Optional[str]:
    """Reason why t is not a closed normal form of the expected shape, or None"""
    if t.free_vars:
        return f"not closed: {sorted(t.free_vars)}"
    if not system.is_normal(t):
        return "not normal"
    if isinstance(t, (Zero, Lam)):
        return None

    addends = t.addends if isinstance(t, Sum) else (t,)
    seen = set()
    for addend in addends:
        base = addend
        if isinstance(addend, Scaled):
            if addend.scalar.is_zero() or addend.scalar.is_one():
                return f"weight {addend.scalar} on an addend"
            base = addend.body
        if not isinstance(base, Lam):
            return f"addend {type(base).__name__} is not an abstraction"
        if base in seen:
            return "the same abstraction occurs twice"
        seen.add(base)
    return None


def normal_form_shape_ok(t: Term, system: RewriteSystem = DEFAULT_SYSTEM) -> bool:
    return shape_violation(t, system) is None
