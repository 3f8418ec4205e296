import os
import random

import pytest

# Override with TORICSPEC_TEST_SEED to reproduce a different corpus.
SEED = int(os.environ.get("TORICSPEC_TEST_SEED", "20260821"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)
