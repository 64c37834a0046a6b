"""
Tests for vector terms and structural operations
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.harness import GenConfig, generate_term
from src.scalars import ExactScalar
from src.terms import (
    RESERVED_NAMES, App, Lam, Scaled, Sum, Var, Zero, alpha_ac_equal, binder_depth, canonicalize,
    fresh_name, free_vars, is_base, is_closed, make_sum, positions, replace_at, size,
    subterm_at, substitute,
)

HALF = ExactScalar.of(1) / ExactScalar.of(2)

x, y, z = Var('x'), Var('y'), Var('z')
identity = Lam('x', x)


class TestEquality:
    """== is alpha-equivalence modulo associativity and commutativity of +"""

    def test_alpha_equivalent_abstractions(self):
        assert Lam('x', x) == Lam('y', y)
        assert Lam('x', Lam('y', App(x, y))) == Lam('a', Lam('b', App(Var('a'), Var('b'))))
        assert Lam('x', Lam('y', x)) != Lam('x', Lam('y', y))

    def test_free_variables_are_compared_by_name(self):
        assert x != y
        assert Lam('x', y) != Lam('x', z)

    def test_sums_are_associative_and_commutative(self):
        left = make_sum([x, make_sum([y, z])])
        right = make_sum([make_sum([z, x]), y])
        assert left == right
        assert hash(left) == hash(right)
        assert len(left.addends) == 3

    def test_sum_under_binder_is_order_insensitive(self):
        assert Lam('x', make_sum([x, y])) == Lam('u', make_sum([y, Var('u')]))

    def test_scaled_terms_compare_scalars(self):
        assert Scaled(HALF, x) == Scaled(ExactScalar.of(1) / ExactScalar.of(2), x)
        assert Scaled(HALF, x) != Scaled(ExactScalar.one(), x)

    def test_sum_requires_two_addends(self):
        with pytest.raises(ValueError):
            Sum((x,))

    def test_make_sum_edge_cases(self):
        assert make_sum([]) == Zero()
        assert make_sum([x]) is x

    def test_invalid_variable_name(self):
        with pytest.raises(ValueError):
            Var('1x')

    @pytest.mark.parametrize("name", sorted(RESERVED_NAMES))
    def test_reserved_names_are_rejected(self, name):
        with pytest.raises(ValueError):
            Var(name)
        with pytest.raises(ValueError):
            Lam(name, x)
        assert Var(name + "'").name == name + "'"

    def test_terms_key_dictionaries(self):
        table = {Lam('x', x): 'identity'}
        assert table[Lam('q', Var('q'))] == 'identity'
        assert alpha_ac_equal(Lam('x', x), identity)


class TestSubstitution:
    """Capture-avoiding substitution"""

    def test_replaces_free_occurrences(self):
        assert substitute(App(x, y), 'x', identity) == App(identity, y)

    def test_bound_occurrences_untouched(self):
        t = Lam('x', x)
        assert substitute(t, 'x', y) is t

    def test_avoids_capture(self):
        # (\y.x)[y/x] must not become \y.y
        result = substitute(Lam('y', x), 'x', y)
        assert result == Lam('w', y)
        assert result.free_vars == {'y'}
        assert result.var != 'y'

    def test_distributes_over_sums_and_scalars(self):
        t = make_sum([Scaled(HALF, x), App(x, z)])
        result = substitute(t, 'x', identity)
        assert result == make_sum([Scaled(HALF, identity), App(identity, z)])

    def test_closed_terms_are_preserved(self):
        t = Lam('z', App(Var('z'), Var('z')))
        assert substitute(t, 'x', y) is t

    @settings(max_examples=50)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_substituting_a_variable_for_itself(self, index):
        cfg = GenConfig(max_depth=4, closed_only=False)
        t = generate_term(cfg, np.random.default_rng(index))
        assert substitute(t, 'a', Var('a')) == t


class TestStructure:
    """Sizes, paths and canonical forms"""

    def test_free_vars_and_closedness(self):
        t = Lam('x', App(x, y))
        assert free_vars(t) == {'y'}
        assert not is_closed(t)
        assert is_closed(identity)

    def test_base_vectors(self):
        assert is_base(x)
        assert is_base(identity)
        assert not is_base(App(identity, x))
        assert not is_base(Zero())
        assert not is_base(make_sum([x, y]))

    def test_fresh_name(self):
        assert fresh_name('x', {'y'}) == 'x'
        assert fresh_name('x', {'x', "x'"}) == "x''"

    def test_size(self):
        assert size(x) == 1
        assert size(Lam('x', App(x, x))) == 4
        assert size(make_sum([x, y, z])) == 4

    def test_subterm_and_replace(self):
        t = Lam('x', App(x, Scaled(HALF, y)))
        assert subterm_at(t, (0, 1, 0)) == y
        replaced = replace_at(t, (0, 1), Zero())
        assert replaced == Lam('x', App(x, Zero()))
        with pytest.raises(IndexError):
            subterm_at(t, (0, 2))

    def test_replace_reflattens_sums(self):
        t = make_sum([x, App(y, z)])
        index = t.addends.index(App(y, z))
        result = replace_at(t, (index,), make_sum([y, z]))
        assert isinstance(result, Sum)
        assert len(result.addends) == 3

    def test_binder_depth(self):
        t = Lam('x', Lam('y', App(x, y)))
        assert binder_depth(t, ()) == 0
        assert binder_depth(t, (0,)) == 1
        assert binder_depth(t, (0, 0, 1)) == 2

    def test_positions_are_preorder(self):
        t = App(identity, y)
        assert [path for path, _ in positions(t)] == [(), (0,), (0, 0), (1,)]

    def test_canonicalize_renames_binders(self):
        t = Lam('foo', Lam('bar', App(Var('foo'), Var('x0'))))
        result = canonicalize(t)
        assert result == t
        assert result.free_vars == {'x0'}
        # x0 is free in t, so the outer binder takes a primed name
        assert result.var == "x0'"
        assert result.body.var == 'x1'

    def test_depth(self):
        assert x.depth == 1
        assert Lam('x', App(x, Scaled(HALF, y))).depth == 4
        assert make_sum([x, identity]).depth == 3

    def test_deep_spines_are_addressed_without_recursion(self):
        t = x
        for _ in range(5_000):
            t = App(t, y)
        path = (0,) * 5_000
        assert subterm_at(t, path) == x
        replaced = replace_at(t, path, z)
        assert subterm_at(replaced, path) == z
        assert replaced.free_vars == {'y', 'z'}
        assert replaced.depth == t.depth


def spelled(t):
    """Syntactic identity, binder names included"""
    return repr(t)


def rename_binders(t):
    """An alpha-variant of t with every binder renamed"""
    if isinstance(t, Lam):
        name = fresh_name(t.var + 'r', t.body.free_vars | {t.var})
        return Lam(name, substitute(rename_binders(t.body), t.var, Var(name)))
    return t.with_children(tuple(rename_binders(child) for child in t.children()))


class TestCanonicalForms:
    """canonicalize picks one spelling per alpha/AC class"""

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1), st.booleans())
    def test_canonicalize_is_idempotent(self, seed, closed):
        t = generate_term(GenConfig(max_depth=5, closed_only=closed), np.random.default_rng(seed))
        once = canonicalize(t)
        assert once == t
        assert spelled(canonicalize(once)) == spelled(once)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1), st.booleans())
    def test_alpha_variants_share_a_canonical_form(self, seed, closed):
        t = generate_term(GenConfig(max_depth=5, closed_only=closed), np.random.default_rng(seed))
        variant = rename_binders(t)
        assert alpha_ac_equal(t, variant)
        assert spelled(canonicalize(variant)) == spelled(canonicalize(t))

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1),
           st.integers(min_value=0, max_value=2**32 - 1))
    def test_equality_agrees_with_canonical_spelling(self, first, second):
        cfg = GenConfig(max_depth=3, closed_only=False)
        t = generate_term(cfg, np.random.default_rng(first))
        u = generate_term(cfg, np.random.default_rng(second))
        assert alpha_ac_equal(t, u) == (spelled(canonicalize(t)) == spelled(canonicalize(u)))
