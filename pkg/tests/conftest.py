import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from joingeom.enumeration import sample_line_join_spaces
from joingeom.generators import affine_join_space, grid_segment_space, projective_space
from joingeom.relations import JoinSpace, pairs

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def join_spaces(draw, min_n=0, max_n=5):
    """Uniform choice of the extra points in every pair join."""
    n = draw(st.integers(min_n, max_n))
    joins = []
    for a, c in pairs(n):
        others = [b for b in range(n) if b not in (a, c)]
        extra = draw(st.lists(st.sampled_from(others), unique=True)) if others else []
        joins.append((1 << a) | (1 << c) | sum(1 << b for b in extra))
    return JoinSpace(n, tuple(joins))


@st.composite
def line_join_spaces(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2 ** 32))
    return sample_line_join_spaces(n, 1, seed)[0]


@pytest.fixture(scope="session")
def fano():
    return projective_space(2, 2)


@pytest.fixture(scope="session")
def ag23():
    return affine_join_space(3, 2)


@pytest.fixture(scope="session")
def grid33():
    return grid_segment_space((3, 3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
