import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from family import build_family_ontology  # noqa: E402

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = DATA_DIR / "golden"
FAMILY_PATH = DATA_DIR / "family.ofn"


@pytest.fixture
def family():
    return build_family_ontology()


@pytest.fixture
def family_path():
    return FAMILY_PATH


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR
