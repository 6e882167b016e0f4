import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).resolve().parent.parent / "data"
CUBIC = DATA / "cubic"


def cubic_path(n: int) -> Path:
    return CUBIC / f"cubic_{n:02d}.g6"


def pytest_collection_modifyitems(config, items):
    if os.environ.get("INDFOREST_LONG"):
        return
    skip = pytest.mark.skip(reason="opt-in long run; set INDFOREST_LONG=1")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)
