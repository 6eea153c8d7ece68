import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def replay_3x3_text() -> str:
    return (FIXTURES / "replay_3x3_moves.txt").read_text()


@pytest.fixture
def unreachable_2x4_text() -> str:
    return (FIXTURES / "unreachable_2x4_tableaux.json").read_text()
