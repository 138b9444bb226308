import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("cilab", max_examples=40, deadline=None, derandomize=True)
settings.load_profile("cilab")


@pytest.fixture
def rng():
    return np.random.default_rng(24601)


def random_vector(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


# acceptance criteria outcomes, filled by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, title, note = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}  {note}")
