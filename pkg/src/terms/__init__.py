"""AC-canonical vector terms"""

from .nodes import Term, Var, Lam, App, Zero, Scaled, Sum, make_sum, VAR_NAME, RESERVED_NAMES
from .operations import (
    Path, free_vars, is_closed, is_base, fresh_name, substitute,
    alpha_ac_equal, canonicalize, size, subterm_at, replace_at,
    binder_depth, positions,
)

__all__ = [
    'Term', 'Var', 'Lam', 'App', 'Zero', 'Scaled', 'Sum', 'make_sum', 'VAR_NAME', 'RESERVED_NAMES',
    'Path', 'free_vars', 'is_closed', 'is_base', 'fresh_name', 'substitute',
    'alpha_ac_equal', 'canonicalize', 'size', 'subterm_at', 'replace_at',
    'binder_depth', 'positions',
]
