import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def corpus_dir(data_dir) -> Path:
    return data_dir / "corpus"


@pytest.fixture(scope="session")
def phase1_snapshot(corpus_dir):
    from alescore import parse_snapshot

    return parse_snapshot(corpus_dir / "alm-2012-10-10.csv")


# Rank order of the 11-article fixture under the phase-1 preset weights,
# frozen from an exact-rational weighted-sum oracle.
FIXTURE_RANK_ORDER = (
    "10.1371/journal.pcbi.1002358",
    "10.1371/journal.pcbi.1002543",
    "10.1371/journal.pcbi.1002590",
    "10.1371/journal.pcbi.1002561",
    "10.1371/journal.pcbi.1002519",
    "10.1371/journal.pcbi.1002538",
    "10.1371/journal.pcbi.1002541",
    "10.1371/journal.pcbi.1002572",
    "10.1371/journal.pcbi.1002527",
    "10.1371/journal.pcbi.1002588",
    "10.1371/journal.pcbi.1002531",
)

# Scores for the same fixture, frozen from the same oracle.
FIXTURE_SCORES = (
    0.786873424658,
    0.513788740948,
    0.371104767953,
    0.298830466275,
    0.230562541812,
    0.156037457566,
    0.139168388407,
    0.126426833640,
    0.125614431007,
    0.096210965185,
    0.082066007039,
)
