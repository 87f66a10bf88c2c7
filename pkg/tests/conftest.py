import numpy as np
import pytest
from hypothesis import strategies as st

from divbounds.prob import new_distribution


@pytest.fixture
def std_pair():
    return new_distribution([0.5, 0.5]), new_distribution([0.25, 0.75])


@st.composite
def distributions(draw, n=None, min_n=2, max_n=12):
    size = n if n is not None else draw(st.integers(min_n, max_n))
    w = draw(st.lists(st.floats(1e-3, 1.0), min_size=size, max_size=size))
    return new_distribution(w, normalize=True)


@st.composite
def distribution_pairs(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    return draw(distributions(n=n)), draw(distributions(n=n))


def random_pairs(count, seed=0, n_range=(2, 20)):
    from divbounds.prob import sample_pair

    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield sample_pair(int(rng.integers(n_range[0], n_range[1] + 1)), int(rng.integers(2**32)))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail summary line for an acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
