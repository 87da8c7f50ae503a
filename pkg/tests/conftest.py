import pytest

from lyndonarrays import SentinelMode, build_inverse, build_standard, frame

BANANA_NEXT = [9, 3, 5, 5, 7, 7, 8, 9]
BANANA_PREV = [0, 1, 1, 3, 1, 5, 1, 1]
BANANA_LAMBDA = [8, 1, 2, 1, 2, 1, 1, 1]

AABABBAA_LAMBDA_INV = [10, 2, 1, 3, 1, 4, 3, 2, 1, 1]
AABABBAA_NEXT_INV = [11, 3, 4, 6, 6, 10, 10, 9, 10, 11]
AABABBAA_PREV_INV = [0, 1, 1, 1, 4, 1, 6, 7, 7, 1]
AABABBAA_NLCE = [0, 1, 0, 1, 0, 0, 0, 1, 0, 0]


@pytest.fixture
def banana():
    return build_standard(frame("banana", mode=SentinelMode.STANDARD))


@pytest.fixture
def aababbaa():
    return build_inverse(frame("aababbaa", mode=SentinelMode.INVERSE))


ACCEPTANCE = []


def record_acceptance(name, ok, detail=""):
    ACCEPTANCE.append((name, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name, ok, detail in ACCEPTANCE:
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
