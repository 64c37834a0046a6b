"""
The conditional rewrite system L = S u E u F u A u B

Side conditions:
  F rules  - the factored term u is closed and L-normal
  A-Dist   - the distributed sum is closed and L-normal
  A-Scale  - the scaled subterm u is closed and L-normal
  B-Beta   - the argument is a base vector (abstraction or variable)

Scalar arithmetic is carried out by the scalar values themselves, so
S-steps never appear.
"""

from collections import defaultdict
from itertools import combinations
from typing import Dict, List, Optional, Type

from .rules import RULE_ORDER, Redex, RuleGroup, RuleId
from ..exceptions import InvalidRedexError
from ..logger import get_logger
from ..scalars import Scalar, ScalarDomains
from ..terms import (
    App, Lam, Scaled, Sum, Term, Zero,
    is_base, is_closed, make_sum, replace_at, subterm_at, substitute,
)

logger = get_logger('rewrite')


class RewriteSystem:
    """Redex enumeration and contraction for L"""

    def __init__(self, unrestricted_factorization: bool = False,
                 domain: Optional[Type[Scalar]] = None):
        self.unrestricted_factorization = unrestricted_factorization
        self.domain = domain or ScalarDomains.get()
        # Results are memoised on the term nodes under these tags
        self._memo_tag = ('normal', unrestricted_factorization)
        self._local_tag = ('local', unrestricted_factorization)

    def __repr__(self) -> str:
        return f"RewriteSystem(unrestricted_factorization={self.unrestricted_factorization})"

    # ------------------------------------------------------------------
    # Normality
    # ------------------------------------------------------------------
    def is_normal(self, t: Term) -> bool:
        tag = self._memo_tag
        if tag not in t.memo:
            # Post-order over the nodes not classified yet
            pending = [(t, False)]
            while pending:
                node, expanded = pending.pop()
                if tag in node.memo:
                    continue
                if not expanded:
                    pending.append((node, True))
                    pending.extend((child, False) for child in node.children()
                                   if tag not in child.memo)
                    continue
                node.memo[tag] = all(child.memo[tag] for child in node.children()) \
                    and not self.local_redexes(node)
        return t.memo[tag]

    def _closed_normal(self, t: Term) -> bool:
        return is_closed(t) and self.is_normal(t)

    def _factorable(self, u: Term) -> bool:
        return self.unrestricted_factorization or self._closed_normal(u)

    # ------------------------------------------------------------------
    # Root redexes
    # ------------------------------------------------------------------
    def local_redexes(self, t: Term) -> List[Redex]:
        """Redexes whose left-hand side matches at the root of t"""
        memo = t.memo
        cached = memo.get(self._local_tag)
        if cached is None:
            cached = tuple(self._match_root(t))
            memo[self._local_tag] = cached
        return list(cached)

    def _match_root(self, t: Term) -> List[Redex]:
        if isinstance(t, Sum):
            return self._sum_redexes(t)
        if isinstance(t, Scaled):
            return self._scaled_redexes(t)
        if isinstance(t, App):
            return self._app_redexes(t)
        return []

    def _sum_redexes(self, t: Sum) -> List[Redex]:
        found = []
        addends = t.addends
        if any(isinstance(addend, Zero) for addend in addends):
            found.append(Redex((), RuleId.PLUS_ZERO))

        # Only addends sharing an underlying term can factor
        by_self: Dict[Term, List[int]] = defaultdict(list)
        by_body: Dict[Term, List[int]] = defaultdict(list)
        for index, addend in enumerate(addends):
            by_self[addend].append(index)
            if isinstance(addend, Scaled):
                by_body[addend.body].append(index)

        pairs = []
        for body, indices in by_body.items():
            if len(indices) > 1 and self._factorable(body):
                pairs.extend((i, j, RuleId.FACTOR_BOTH) for i, j in combinations(indices, 2))
        for index, addend in enumerate(addends):
            scaled = by_body.get(addend)
            if scaled and self._factorable(addend):
                pairs.extend((min(index, k), max(index, k), RuleId.FACTOR_ONE) for k in scaled)
        for term, indices in by_self.items():
            if len(indices) > 1 and self._factorable(term):
                pairs.extend((i, j, RuleId.FACTOR_NONE) for i, j in combinations(indices, 2))

        pairs.sort(key=lambda p: (p[0], p[1], RULE_ORDER[p[2]]))
        found.extend(Redex((), rule, (i, j)) for i, j, rule in pairs)
        return found

    def _scaled_redexes(self, t: Scaled) -> List[Redex]:
        found = []
        if t.scalar.is_zero():
            found.append(Redex((), RuleId.SCALE_ZERO))
        if t.scalar.is_one():
            found.append(Redex((), RuleId.SCALE_ONE))
        if isinstance(t.body, Zero):
            found.append(Redex((), RuleId.SCALE_ZERO_VECTOR))
        elif isinstance(t.body, Scaled):
            found.append(Redex((), RuleId.SCALE_SCALE))
        elif isinstance(t.body, Sum):
            found.append(Redex((), RuleId.SCALE_SUM))
        return found

    def _app_redexes(self, t: App) -> List[Redex]:
        found = []
        fun, arg = t.fun, t.arg
        if isinstance(fun, Sum) and self._closed_normal(fun):
            found.append(Redex((), RuleId.DIST_APP_LEFT))
        if isinstance(arg, Sum) and self._closed_normal(arg):
            found.append(Redex((), RuleId.DIST_APP_RIGHT))
        if isinstance(fun, Scaled) and self._closed_normal(fun.body):
            found.append(Redex((), RuleId.SCALE_APP_LEFT))
        if isinstance(arg, Scaled) and self._closed_normal(arg.body):
            found.append(Redex((), RuleId.SCALE_APP_RIGHT))
        if isinstance(fun, Zero):
            found.append(Redex((), RuleId.ZERO_APP_LEFT))
        if isinstance(arg, Zero):
            found.append(Redex((), RuleId.ZERO_APP_RIGHT))
        if isinstance(fun, Lam) and is_base(arg):
            found.append(Redex((), RuleId.BETA))
        return found

    # ------------------------------------------------------------------
    # Contraction
    # ------------------------------------------------------------------
    def contract(self, t: Term, rule: RuleId, addends: Optional[tuple] = None) -> Term:
        """Right-hand side of `rule` at the root of t; the match is assumed"""
        if rule is RuleId.PLUS_ZERO:
            rest = list(t.addends)
            rest.remove(Zero())
            return make_sum(rest)
        if rule.group is RuleGroup.FACTORISATION:
            return self._contract_factor(t, rule, addends)
        if rule is RuleId.SCALE_ZERO or rule is RuleId.SCALE_ZERO_VECTOR:
            return Zero()
        if rule is RuleId.SCALE_ONE:
            return t.body
        if rule is RuleId.SCALE_SCALE:
            return Scaled(t.scalar * t.body.scalar, t.body.body)
        if rule is RuleId.SCALE_SUM:
            return make_sum(Scaled(t.scalar, addend) for addend in t.body.addends)
        if rule is RuleId.DIST_APP_LEFT:
            return make_sum(App(addend, t.arg) for addend in t.fun.addends)
        if rule is RuleId.DIST_APP_RIGHT:
            return make_sum(App(t.fun, addend) for addend in t.arg.addends)
        if rule is RuleId.SCALE_APP_LEFT:
            return Scaled(t.fun.scalar, App(t.fun.body, t.arg))
        if rule is RuleId.SCALE_APP_RIGHT:
            return Scaled(t.arg.scalar, App(t.fun, t.arg.body))
        if rule is RuleId.ZERO_APP_LEFT or rule is RuleId.ZERO_APP_RIGHT:
            return Zero()
        if rule is RuleId.BETA:
            return substitute(t.fun.body, t.fun.var, t.arg)
        raise InvalidRedexError(f"No contraction for {rule}")

    def _contract_factor(self, t: Sum, rule: RuleId, addends: tuple) -> Term:
        i, j = addends
        left, right = t.addends[i], t.addends[j]
        if rule is RuleId.FACTOR_BOTH:
            combined = Scaled(left.scalar + right.scalar, left.body)
        elif rule is RuleId.FACTOR_ONE:
            scaled, plain = (left, right) if isinstance(left, Scaled) and left.body == right \
                else (right, left)
            combined = Scaled(scaled.scalar + scaled.scalar.one_like(), plain)
        else:
            one = self.domain.one()
            combined = Scaled(one + one, left)
        rest = [addend for k, addend in enumerate(t.addends) if k not in (i, j)]
        return make_sum(rest + [combined])

    # ------------------------------------------------------------------
    # Whole-term operations
    # ------------------------------------------------------------------
    def enumerate_redexes(self, t: Term) -> List[Redex]:
        """Every redex of t in pre-order; normal subterms are skipped"""
        found: List[Redex] = []
        pending = [(t, ())]
        while pending:
            node, path = pending.pop()
            if self.is_normal(node):
                continue
            for redex in self.local_redexes(node):
                found.append(Redex(path, redex.rule, redex.addends))
            children = node.children()
            for index in reversed(range(len(children))):
                pending.append((children[index], path + (index,)))
        return found

    def apply_redex(self, t: Term, redex: Redex) -> Term:
        """Contract `redex` inside t; InvalidRedexError when it does not match"""
        try:
            node = subterm_at(t, redex.path)
        except IndexError as e:
            raise InvalidRedexError(str(e), redex)
        matches = any(r.rule is redex.rule and r.addends == redex.addends
                      for r in self.local_redexes(node))
        if not matches:
            raise InvalidRedexError(f"{redex.rule} does not match at {redex.path_text}", redex)
        contractum = self.contract(node, redex.rule, redex.addends)
        logger.debug(f"{redex} contracted")
        return replace_at(t, redex.path, contractum)


DEFAULT_SYSTEM = RewriteSystem()


def enumerate_redexes(t: Term) -> List[Redex]:
    return DEFAULT_SYSTEM.enumerate_redexes(t)


def apply_redex(t: Term, redex: Redex) -> Term:
    return DEFAULT_SYSTEM.apply_redex(t, redex)


def is_normal(t: Term) -> bool:
    return DEFAULT_SYSTEM.is_normal(t)


def local_redexes(t: Term) -> List[Redex]:
    return DEFAULT_SYSTEM.local_redexes(t)
