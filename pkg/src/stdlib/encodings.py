"""
Classical and quantum encodings built directly from term constructors

Booleans:   true = \\x.\\y.x            false = \\x.\\y.y
Tensors:    a (x) b = \\f.(f a b)      pi1 = \\p.(p true), pi2 = \\p.(p false)
Numerals:   n = \\x.\\f.(f^n x)
"""

from typing import List, Sequence

from ..scalars import ExactScalar
from ..terms import App, Lam, Scaled, Term, Var, fresh_name, make_sum

HALF_SQRT2 = ExactScalar.sqrt2() / ExactScalar.of(2)
MINUS_ONE = ExactScalar.of(-1)


def _apply(head: Term, *args: Term) -> Term:
    result = head
    for arg in args:
        result = App(result, arg)
    return result


TRUE = Lam('x', Lam('y', Var('x')))
FALSE = Lam('x', Lam('y', Var('y')))

NOT = Lam('y', _apply(Var('y'), FALSE, TRUE))

PHASE = Lam('y', _apply(Var('y'),
                        Lam('x', Scaled(ExactScalar.omega8(), TRUE)),
                        Lam('x', FALSE),
                        FALSE))

# H false -> (sqrt2/2).(false + true), H true -> (sqrt2/2).(false - true)
HADAMARD = Lam('y', _apply(Var('y'),
                           Lam('x', Scaled(HALF_SQRT2, make_sum([FALSE, Scaled(MINUS_ONE, TRUE)]))),
                           Lam('x', Scaled(HALF_SQRT2, make_sum([FALSE, TRUE]))),
                           FALSE))

TENSOR = Lam('x', Lam('y', Lam('f', _apply(Var('f'), Var('x'), Var('y')))))
PI1 = Lam('p', App(Var('p'), TRUE))
PI2 = Lam('p', App(Var('p'), FALSE))

BIG_TENSOR = Lam('f', Lam('g', Lam('x', _apply(
    TENSOR,
    App(Var('f'), App(PI1, Var('x'))),
    App(Var('g'), App(PI2, Var('x'))),
))))

H2 = _apply(BIG_TENSOR, HADAMARD, HADAMARD)

CNOT = Lam('x', _apply(
    TENSOR,
    App(PI1, Var('x')),
    _apply(App(PI1, Var('x')), App(NOT, App(PI2, Var('x'))), App(PI2, Var('x'))),
))

DJ1 = Lam('x', App(H2, App(Var('x'), App(H2, _apply(TENSOR, FALSE, TRUE)))))

_WIDEN = Lam('y', _apply(BIG_TENSOR, HADAMARD, Var('y')))
_GATES = _apply(Var('n'), HADAMARD, _WIDEN)
DJ = Lam('n', Lam('x', App(
    _GATES,
    App(Var('x'), App(_GATES, _apply(Var('n'), TRUE, Lam('y', _apply(TENSOR, FALSE, Var('y')))))),
)))

_SELF = Lam('x', make_sum([Var('y'), App(Var('x'), Var('x'))]))
Y = Lam('y', App(_SELF, _SELF))

IDENTITY = Lam('x', Var('x'))


def church(n: int) -> Term:
    """\\x.\\f.(f (f ... (f x))) with n applications"""
    if n < 0:
        raise ValueError(f"Church numerals are natural numbers, got {n}")
    body: Term = Var('x')
    for _ in range(n):
        body = App(Var('f'), body)
    return Lam('x', Lam('f', body))


def quote(t: Term) -> Term:
    """[t] = \\x.t with x not free in t"""
    return Lam(fresh_name('x', t.free_vars), t)


def unquote(t: Term) -> Term:
    """{t} = t false"""
    return App(t, FALSE)


def tensor_of(a: Term, b: Term) -> Term:
    return _apply(TENSOR, a, b)


def tensor_chain(factors: Sequence[Term]) -> Term:
    """Right-nested a (x) (b (x) (... (x) z))"""
    if not factors:
        raise ValueError("Need at least one factor")
    result = factors[-1]
    for factor in reversed(factors[:-1]):
        result = tensor_of(factor, result)
    return result


def tensor_power(t: Term, n: int) -> List[Term]:
    """n copies of t, ready for tensor_chain"""
    return [t] * n


def big_tensor_of(f: Term, g: Term) -> Term:
    return _apply(BIG_TENSOR, f, g)


def clone_candidate() -> Term:
    """\\x.(x (x) x)"""
    return Lam('x', tensor_of(Var('x'), Var('x')))


def fixed_point() -> Term:
    return Y


def oracle_constant(value: bool) -> Term:
    """U_f for a constant f: identity when f = false, Not on the second wire when f = true"""
    if not value:
        return IDENTITY
    return Lam('x', tensor_of(App(PI1, Var('x')), App(NOT, App(PI2, Var('x')))))


def oracle_balanced_id() -> Term:
    """U_f for f = id, which is Cnot"""
    return CNOT


def deutsch(n: int) -> Term:
    """Parametric Deutsch-Jozsa circuit for church(n); apply it to an oracle"""
    return App(DJ, church(n))


BUILTINS = {
    'true': TRUE,
    'false': FALSE,
    'Not': NOT,
    'Phase': PHASE,
    'H': HADAMARD,
    'tensor': TENSOR,
    'pi1': PI1,
    'pi2': PI2,
    'bigtensor': BIG_TENSOR,
    'H2': H2,
    'Cnot': CNOT,
    'Dj1': DJ1,
    'Dj': DJ,
    'Y': Y,
}
