import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from decsau.audio import synthesize_sine, synthesize_test_clip
from decsau.keychain import MasterKey

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"

# master keys used in the published demonstrations
CPA_KEY_HEX = "d6d0752a8580d93bd4ce20fa785d5ea0cd1d170d51b237e74052aa6ef17160ce"
CYCLE_KEY_HEX = "ad90a1aee7fe1f4c363a025c375451ad95761fd1c61e7b66acde33d425fb5280"


@pytest.fixture
def cpa_key():
    return MasterKey.from_hex(CPA_KEY_HEX)


@pytest.fixture
def cycle_key():
    return MasterKey.from_hex(CYCLE_KEY_HEX)


@pytest.fixture(scope="session")
def sine_clip():
    return synthesize_sine(700, 8000, 8000, amplitude=100)


@pytest.fixture(scope="session")
def speech_clip():
    return synthesize_test_clip(8000, 2.0, seed=6)


ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
