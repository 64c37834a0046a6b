"""
Structural operations on terms: free variables, substitution, canonical
forms and addressing by paths.

A path is a tuple of child selectors from the root: Lam 0 is the body,
App 0/1 are function/argument, Scaled 0 is the body and Sum i is the i-th
addend in canonical order.
"""

from typing import Dict, FrozenSet, Iterable, Iterator, Sequence, Tuple

from .nodes import App, Lam, Scaled, Sum, Term, Var, Zero, make_sum

Path = Tuple[int, ...]


def free_vars(t: Term) -> FrozenSet[str]:
    return t.free_vars


def is_closed(t: Term) -> bool:
    return not t.free_vars


def is_base(t: Term) -> bool:
    """Abstractions and variables are the base vectors"""
    return isinstance(t, (Lam, Var))


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    """Prime `base` until it is not in `avoid`"""
    taken = set(avoid)
    name = base
    while name in taken:
        name += "'"
    return name


def substitute(t: Term, x: str, b: Term) -> Term:
    """Capture-avoiding t[b/x]"""
    if x not in t.free_vars:
        return t
    if isinstance(t, Var):
        return b
    if isinstance(t, Lam):
        var, body = t.var, t.body
        if var in b.free_vars:
            renamed = fresh_name(var, b.free_vars | body.free_vars | {x})
            body = substitute(body, var, Var(renamed))
            var = renamed
        return Lam(var, substitute(body, x, b))
    if isinstance(t, App):
        return App(substitute(t.fun, x, b), substitute(t.arg, x, b))
    if isinstance(t, Scaled):
        return Scaled(t.scalar, substitute(t.body, x, b))
    if isinstance(t, Sum):
        return make_sum(substitute(addend, x, b) for addend in t.addends)
    return t


def alpha_ac_equal(t: Term, u: Term) -> bool:
    return t.key == u.key


def canonicalize(t: Term) -> Term:
    """Deterministic representative: binders renamed x0, x1, ... by depth"""
    return _canonical(t, {}, 0, t.free_vars)


def _canonical(t: Term, renaming: Dict[str, str], depth: int, avoid: FrozenSet[str]) -> Term:
    if isinstance(t, Var):
        return Var(renaming.get(t.name, t.name))
    if isinstance(t, Lam):
        name = fresh_name(f"x{depth}", avoid)
        body = _canonical(t.body, {**renaming, t.var: name}, depth + 1, avoid)
        return Lam(name, body)
    if isinstance(t, Zero):
        return t
    return t.with_children(tuple(_canonical(child, renaming, depth, avoid)
                                 for child in t.children()))


def size(t: Term) -> int:
    return 1 + sum(size(child) for child in t.children())


def subterm_at(t: Term, path: Sequence[int]) -> Term:
    """Raises IndexError when the path leaves the term"""
    node = t
    for index in path:
        children = node.children()
        if not 0 <= index < len(children):
            raise IndexError(f"Path {tuple(path)} does not address a node")
        node = children[index]
    return node


def replace_at(t: Term, path: Sequence[int], u: Term) -> Term:
    """t with the node at `path` replaced by u; Sums are re-flattened"""
    spine = [t]
    for index in path:
        children = spine[-1].children()
        if not 0 <= index < len(children):
            raise IndexError(f"Path {tuple(path)} does not address a node")
        spine.append(children[index])

    result = u
    for node, index in zip(reversed(spine[:-1]), reversed(path)):
        children = list(node.children())
        children[index] = result
        result = node.with_children(tuple(children))
    return result


def binder_depth(t: Term, path: Sequence[int]) -> int:
    """Number of abstractions strictly above the node at `path`"""
    depth = 0
    node = t
    for index in path:
        if isinstance(node, Lam):
            depth += 1
        node = node.children()[index]
    return depth


def positions(t: Term, path: Path = ()) -> Iterator[Tuple[Path, Term]]:
    """Pre-order walk yielding (path, subterm)"""
    yield path, t
    for index, child in enumerate(t.children()):
        yield from positions(child, path + (index,))
