import pytest

from data import load_logic
from logic.syntax import Signature, generate_universe, parse
from logic.structures import Budget

SIG = Signature((('&', 2), ('|', 2), ('~', 1), ('>', 2)))


def f(text, sig=SIG):
    """Shorthand used across the test modules."""
    return parse(text, sig)


def fs(*texts):
    return frozenset(f(t) for t in texts)


@pytest.fixture(scope='session')
def sig():
    return SIG


@pytest.fixture(scope='session')
def cpc():
    return load_logic('cpc').structure()


@pytest.fixture(scope='session')
def pwk():
    return load_logic('pwk').structure()


@pytest.fixture
def s1():
    return load_logic('s1').structure()


@pytest.fixture
def s2():
    return load_logic('s2').structure()


@pytest.fixture(scope='session')
def remark_universe():
    """Every formula of depth <= 2 over p, q with & and |."""
    definition = load_logic('s1')
    return generate_universe(definition.signature, definition.variables, 2)


@pytest.fixture(scope='session')
def remark_budget(remark_universe):
    return Budget(universe=remark_universe)
