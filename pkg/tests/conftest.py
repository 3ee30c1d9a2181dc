import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cayley.rings import Dual, Q, Z, Zmod, make_ring

RINGS = [Z, Q, Zmod(4), Zmod(6), Zmod(97), Dual(Z)]
RING_IDS = [d.token for d in RINGS]


def payloads(desc, bound=50):
    """Hypothesis strategy for canonical payloads of ``desc`` (wider than the fuzz distribution)."""
    if desc.kind == "Z":
        return st.integers(-bound, bound)
    if desc.kind == "Q":
        return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))
    if desc.kind == "Zmod":
        return st.integers(0, desc.modulus - 1)
    if desc.kind == "Dual":
        inner = payloads(desc.base, bound)
        return st.tuples(inner, inner)
    raise NotImplementedError(desc)


def matrices(desc, dim, bound=5):
    from cayley.matrix import Matrix

    ring = make_ring(desc)
    return st.lists(
        st.lists(payloads(desc, bound), min_size=dim, max_size=dim), min_size=dim, max_size=dim
    ).map(lambda rows: Matrix._raw(ring, tuple(map(tuple, rows))))


@pytest.fixture(params=RINGS, ids=RING_IDS)
def ring(request):
    return make_ring(request.param)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance(request):
    lines = request.config._acceptance_lines

    def record(number, name, ok, detail=""):
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
