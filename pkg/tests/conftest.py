import random
import time

import pytest
from hypothesis import HealthCheck, settings

from inoue.linalg import IntMatrix, IntPoly

settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

F = IntPoly((-1, 0, -1, 1))        # x^3 - x^2 - 1
F3 = IntPoly((-1, 0, -3, 1))       # x^3 - 3x^2 - 1
G = IntPoly((1, -1, 1))            # x^2 - x + 1
P5 = IntPoly((-1, 1, -1, -1, -1, 1))  # x^5 - x^4 - x^3 - x^2 + x - 1


def companion(p: IntPoly) -> IntMatrix:
    return IntMatrix.companion(p)


def nondiag7() -> IntMatrix:
    return IntMatrix.block_diag(companion(F), companion(G * G))


def diag7() -> IntMatrix:
    return IntMatrix.block_diag(companion(F), companion(G), companion(G))


def elementary_product(dim: int, rng: random.Random, steps: int) -> IntMatrix:
    rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i, j = rng.sample(range(dim), 2)
        c = rng.choice((-1, 1))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows)


@pytest.fixture
def M0():
    return companion(F)


@pytest.fixture
def M3():
    return companion(F3)


# -- acceptance reporting --------------------------------------------------

ACCEPTANCE: dict = {}
PROPERTY_MODULES = ("test_linalg", "test_polyroots", "test_spectral", "test_core", "test_classify", "test_lattice")
_outcomes: dict = {"failed": [], "ran": 0}
_t0 = time.perf_counter()


def record(number: int, ok: bool, message: str):
    ACCEPTANCE[number] = (ok, message)


@pytest.fixture
def acceptance():
    return record


def pytest_runtest_logreport(report):
    mod = report.nodeid.split("::")[0].rsplit("/", 1)[-1].removesuffix(".py")
    if mod in PROPERTY_MODULES:
        if report.when == "call":
            _outcomes["ran"] += 1
        if report.failed:
            _outcomes["failed"].append(report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    elapsed = time.perf_counter() - _t0
    if _outcomes["ran"]:
        ok = not _outcomes["failed"] and elapsed < 300
        record(10, ok, f"{_outcomes['ran']} property/oracle tests, {len(_outcomes['failed'])} failed, "
                       f"session {elapsed:.1f}s (< 300s)")
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        tr.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {msg}")
    if 10 not in ACCEPTANCE:
        tr.write_line("criterion 10: NOT RUN  needs the full suite")
