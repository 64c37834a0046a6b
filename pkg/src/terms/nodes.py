"""
Vector terms

    t ::= x | \\x.t | (t t) | 0v | a.t | t + t

Nodes are frozen dataclasses. A Sum is kept flattened with at least two
addends stored in canonical order, so + is associative and commutative by
construction. Equality and hashing go through `key`, a nameless structural
key, which makes `==` alpha-equivalence modulo AC.

`depth`, `free_vars` and `key` are filled in when a node is built. Children
always exist before their parent, so each of them only looks one level down
and no analysis recurses through a long spine.
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Tuple

from ..scalars import Scalar

VAR_NAME = re.compile(r"[a-zA-Z][a-zA-Z0-9_']*\Z")

# The keyword and the scalar constants of the surface syntax
RESERVED_NAMES = frozenset({'let', 'sqrt2', 'i', 'omega8'})


def _check_name(name: str, role: str):
    if not VAR_NAME.match(name):
        raise ValueError(f"Invalid {role} name: {name!r}")
    if name in RESERVED_NAMES:
        raise ValueError(f"Reserved name used as a {role}: {name!r}")


class Term(ABC):
    """Base class of all vector terms"""

    def __post_init__(self):
        for name in ('depth', 'free_vars', 'key'):
            getattr(self, name)

    @abstractmethod
    def children(self) -> Tuple["Term", ...]:
        pass

    @abstractmethod
    def with_children(self, children: Tuple["Term", ...]) -> "Term":
        """Same node kind over new children"""
        pass

    @abstractmethod
    def _compute_key(self) -> Tuple:
        pass

    @abstractmethod
    def _compute_free_vars(self) -> FrozenSet[str]:
        pass

    @cached_property
    def key(self) -> Tuple:
        return self._compute_key()

    @cached_property
    def free_vars(self) -> FrozenSet[str]:
        return self._compute_free_vars()

    @cached_property
    def depth(self) -> int:
        """Nodes on the longest root-to-leaf path"""
        return 1 + max((child.depth for child in self.children()), default=0)

    @cached_property
    def _hash(self) -> int:
        return hash(self.key)

    @cached_property
    def memo(self) -> dict:
        """Per-node scratch space for analyses such as normality"""
        return {}

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Term") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        from ..parser.printer import print_term
        return print_term(self)


@dataclass(frozen=True, eq=False)
class Var(Term):
    name: str

    def __post_init__(self):
        _check_name(self.name, 'variable')
        super().__post_init__()

    def children(self):
        return ()

    def with_children(self, children):
        return self

    def _compute_key(self):
        return ('v', self.name)

    def _compute_free_vars(self):
        return frozenset((self.name,))


@dataclass(frozen=True, eq=False)
class Lam(Term):
    var: str
    body: Term

    def __post_init__(self):
        _check_name(self.var, 'binder')
        super().__post_init__()

    def children(self):
        return (self.body,)

    def with_children(self, children):
        (body,) = children
        return Lam(self.var, body)

    def _compute_key(self):
        if self.var not in self.body.free_vars:
            return ('l', self.body.key)
        return ('l', abstract_key(self.body.key, self.var, 0))

    def _compute_free_vars(self):
        return self.body.free_vars - {self.var}


@dataclass(frozen=True, eq=False)
class App(Term):
    fun: Term
    arg: Term

    def children(self):
        return (self.fun, self.arg)

    def with_children(self, children):
        fun, arg = children
        return App(fun, arg)

    def _compute_key(self):
        return ('a', self.fun.key, self.arg.key)

    def _compute_free_vars(self):
        return self.fun.free_vars | self.arg.free_vars


@dataclass(frozen=True, eq=False)
class Zero(Term):
    """The null vector 0v"""

    def children(self):
        return ()

    def with_children(self, children):
        return self

    def _compute_key(self):
        return ('0',)

    def _compute_free_vars(self):
        return frozenset()


@dataclass(frozen=True, eq=False)
class Scaled(Term):
    scalar: Scalar
    body: Term

    def children(self):
        return (self.body,)

    def with_children(self, children):
        (body,) = children
        return Scaled(self.scalar, body)

    def _compute_key(self):
        return ('s', self.scalar.key, self.body.key)

    def _compute_free_vars(self):
        return self.body.free_vars


@dataclass(frozen=True, eq=False)
class Sum(Term):
    addends: Tuple[Term, ...]

    def __post_init__(self):
        flat = tuple(sorted(_flatten(self.addends), key=lambda t: t.key))
        if len(flat) < 2:
            raise ValueError("A Sum needs at least two addends")
        object.__setattr__(self, 'addends', flat)
        super().__post_init__()

    def children(self):
        return self.addends

    def with_children(self, children):
        return make_sum(children)

    def _compute_key(self):
        return ('+',) + tuple(addend.key for addend in self.addends)

    def _compute_free_vars(self):
        return frozenset().union(*(addend.free_vars for addend in self.addends))


def _flatten(terms: Iterable[Term]):
    for term in terms:
        if isinstance(term, Sum):
            yield from term.addends
        else:
            yield term


def make_sum(terms: Iterable[Term]) -> Term:
    """Sum of any number of terms: Zero when empty, the term itself when single"""
    flat = list(_flatten(terms))
    if not flat:
        return Zero()
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def abstract_key(key: Tuple, name: str, depth: int) -> Tuple:
    """Replace free occurrences of `name` in a key by the bound index `depth`"""
    tag = key[0]
    if tag == 'v':
        return ('b', depth) if key[1] == name else key
    if tag == 'l':
        return ('l', abstract_key(key[1], name, depth + 1))
    if tag == 'a':
        return ('a', abstract_key(key[1], name, depth), abstract_key(key[2], name, depth))
    if tag == 's':
        return ('s', key[1], abstract_key(key[2], name, depth))
    if tag == '+':
        return ('+',) + tuple(sorted(abstract_key(child, name, depth) for child in key[1:]))
    return key
