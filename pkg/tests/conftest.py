from pathlib import Path

import pytest

from agkit.magma import Magma, read_magma

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def fixture_magma(name: str) -> Magma:
    return read_magma(FIXTURES / f"{name}.tbl")


@pytest.fixture(scope="session")
def lad_example():
    return fixture_magma("lad-example")


@pytest.fixture(scope="session")
def lad_test_example():
    return fixture_magma("lad-test-example")


@pytest.fixture(scope="session")
def ld_example():
    return fixture_magma("ld-not-lad")


@pytest.fixture(scope="session")
def rad_example():
    return fixture_magma("rad-example")


@pytest.fixture(scope="session")
def rad_test_example():
    return fixture_magma("rad-test-example")


@pytest.fixture(scope="session")
def rd_example():
    return fixture_magma("rd-not-rad")


@pytest.fixture(scope="session")
def published_examples(lad_example, lad_test_example, ld_example, rad_example, rad_test_example, rd_example):
    return {
        "lad-example": lad_example,
        "lad-test-example": lad_test_example,
        "ld-not-lad": ld_example,
        "rad-example": rad_example,
        "rad-test-example": rad_test_example,
        "rd-not-rad": rd_example,
    }


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
