import hypothesis.strategies as st
import pytest
from hypothesis import settings

from partcat.ops import enumerate_all
from partcat.partition import Partition, partition_from_word

settings.register_profile("ci", derandomize=True)
settings.load_profile("ci")


@st.composite
def partitions(draw, max_points: int = 8) -> Partition:
    """A random partition of a random shape with at most max_points points."""
    n = draw(st.integers(min_value=0, max_value=max_points))
    k = draw(st.integers(min_value=0, max_value=n))
    labels: list[int] = []
    used = 0
    for _ in range(n):
        v = draw(st.integers(min_value=0, max_value=used))
        labels.append(v)
        used = max(used, v + 1)
    return partition_from_word(tuple(labels), k, n - k)


@pytest.fixture(scope="session")
def all_upto_6() -> list[Partition]:
    """Every partition of every shape with at most 6 points."""
    out = []
    for n in range(7):
        for k in range(n + 1):
            out.extend(enumerate_all(k, n - k))
    return out
