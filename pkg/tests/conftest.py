import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from abelian_returns import (  # noqa: E402
    FIBONACCI,
    THUE_MORSE,
    BlockChoice,
    Directive,
    FiniteWord,
    Mechanical,
    Periodic,
)

W = FiniteWord.from_str

PERIOD24 = Periodic(W("001101001011001100110011"))
COUNTEREXAMPLE = BlockChoice((W("110010"), W("110100")), FIBONACCI)
CF12 = Directive((1, 2), repeat=True)

STURMIAN = {"fib": FIBONACCI, "cf12": CF12, "cf213": Directive((2, 1, 3), repeat=True)}
BATTERY = {
    **STURMIAN,
    "tm": THUE_MORSE,
    "periodic01": Periodic(W("01")),
    "periodic001": Periodic(W("001")),
    "mech25": Mechanical(2, 5),
    "period24": PERIOD24,
    "counterexample": COUNTEREXAMPLE,
}


@pytest.fixture(scope="session")
def fib4096():
    from abelian_returns import generate_prefix

    return generate_prefix(FIBONACCI, 4096)


@pytest.fixture(scope="session")
def tm4096():
    from abelian_returns import generate_prefix

    return generate_prefix(THUE_MORSE, 4096)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
