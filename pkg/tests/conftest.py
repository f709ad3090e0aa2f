from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import settings

from coxcat.cluster import ClusterContext
from coxcat.core import build_system
from coxcat.noncrossing import NCContext
from coxcat.symmetric import from_cycles

# sympy oracles have cold-start costs that trip per-example deadlines
settings.register_profile("coxcat", deadline=None)
settings.load_profile("coxcat")

SMALL_TYPES = ["A1", "A2", "B2", "G2", "I2(5)", "A1xA1", "A3", "B3", "A1xA2"]
RANK3_TYPES = ["A3", "B3", "H3", "A1xA2", "A1xB2", "A1xA1xA1"]


@lru_cache(maxsize=None)
def system(label: str):
    return build_system(label)


@lru_cache(maxsize=None)
def nc_for(label: str, word: tuple[int, ...] | None = None) -> NCContext:
    W = system(label)
    c = W.linear_coxeter_element() if word is None else W.coxeter_element(word)
    return NCContext(W, c)


@lru_cache(maxsize=None)
def cc_for(label: str, word: tuple[int, ...] | None = None) -> ClusterContext:
    return ClusterContext(nc_for(label, word))


def s4(cycles: str):
    return from_cycles(system("A3"), cycles)


@pytest.fixture
def A2():
    return system("A2")


@pytest.fixture
def A3():
    return system("A3")


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and (rep.when == "call" or rep.failed):
                status = "PASS" if rep.passed else "FAIL"
                lines.append((int(props["criterion"]), f"{status}  criterion {props['criterion']}: {props['title']}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
