import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def groups():
    from deltacoh.group_core import cyclic_group, klein_four_group, symmetric_group
    return {"Z1": cyclic_group(1), "Z2": cyclic_group(2), "Z3": cyclic_group(3),
            "Z4": cyclic_group(4), "V4": klein_four_group(), "S3": symmetric_group(3)}


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(number: int, passed: bool, text: str, seconds: float, limit: float):
        ok = passed and seconds < limit
        line = (f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {text} "
                f"({seconds:.1f}s, limit {limit:.0f}s)")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
