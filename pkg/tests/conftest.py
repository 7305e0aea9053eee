from __future__ import annotations

from pathlib import Path

import pytest
import yaml

from gale_buddy.projective import PointConfiguration, point
from gale_buddy.quadrics import build_model

_ENV = ("GALE_BUDDY_SEED", "GALE_BUDDY_BOUND", "GALE_BUDDY_ARCHIVE", "GALE_BUDDY_ROOT")


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in _ENV:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def plane_frame() -> PointConfiguration:
    """Coordinate points, the unit point and (2:3:5)."""
    return PointConfiguration(
        2,
        (point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1), point(2, 3, 5)),
    )


@pytest.fixture
def line_points():
    return [point(1, 0), point(0, 1), point(1, 1), point(1, -1), point(2, 1), point(1, -2)]


@pytest.fixture
def quartic_model(line_points):
    return build_model(line_points)


@pytest.fixture
def grid_points():
    """Base points of the pencil spanned by (x-z)(x-2z)(x-4z) and (y-3z)(y-5z)(y-7z); (1:3:1) comes last."""
    pts = [point(x, y, 1) for x in (1, 2, 4) for y in (3, 5, 7) if (x, y) != (1, 3)]
    return [*pts, point(1, 3, 1)]


@pytest.fixture
def write_config(tmp_path: Path):
    def _write(**values: object) -> Path:
        data: dict = {
            "seed": 7,
            "bound": 50,
            "paths": {"state_dir": str(tmp_path / "state")},
        }
        data.update(values)
        path = tmp_path / "config.yml"
        path.write_text(yaml.safe_dump(data), encoding="utf-8")
        return path

    return _write
