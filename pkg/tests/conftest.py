"""
Shared fixtures: the shipped prelude, a parse helper bound to it, and the
restricted rewrite system
"""

import os
import sys

import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.parser import parse_term  # noqa: E402
from src.rewrite import RewriteSystem, normalize  # noqa: E402
from src.stdlib import DEFAULT_PRELUDE_PATH, load_prelude  # noqa: E402


@pytest.fixture(scope='session')
def prelude():
    """The prelude shipped next to src/stdlib"""
    return load_prelude(str(DEFAULT_PRELUDE_PATH))


@pytest.fixture(scope='session')
def bindings(prelude):
    return prelude.as_dict()


@pytest.fixture
def parse(bindings):
    """Parse against the prelude; free identifiers become variables"""
    def _parse(src, lenient=True):
        return parse_term(src, bindings=bindings, lenient=lenient)
    return _parse


@pytest.fixture
def nf(parse):
    """Deterministic normal form; fails the test on fuel exhaustion"""
    def _nf(src, fuel=10_000):
        term = parse(src) if isinstance(src, str) else src
        outcome = normalize(term, fuel)
        assert outcome.is_normal, f"no normal form within {fuel} steps: {src}"
        return outcome.term
    return _nf


@pytest.fixture(scope='session')
def system():
    return RewriteSystem()


@pytest.fixture
def clean_env(monkeypatch):
    """No LAMBDALIN_* variables leaking in from the caller's environment"""
    for key in list(os.environ):
        if key.startswith('LAMBDALIN_'):
            monkeypatch.delenv(key, raising=False)
    return monkeypatch
