import json
from pathlib import Path

import pytest

from src.core.config import settings


@pytest.fixture
def fast_bound(monkeypatch):
    """Smaller working bound so the engine runs on small r."""
    monkeypatch.setattr(settings, "RBOUND_FACTOR", 1)


@pytest.fixture
def write_problem(tmp_path: Path):
    def _write(payload: dict, name: str = "problem.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return _write
