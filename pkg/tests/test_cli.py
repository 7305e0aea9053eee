from __future__ import annotations

import json
from pathlib import Path

import pytest

from gale_buddy.cli import main


@pytest.fixture
def cfg(write_config) -> str:
    return str(write_config(suites={"pairing": True}))


def _write(path: Path, payload: object) -> str:
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def _out(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_weyl_gn_prints_the_hyperplane_image(cfg, capsys):
    assert main(["weyl-gn", "--n", "2", "--J", "1,2", "--config", cfg]) == 0
    data = _out(capsys)
    assert data["J"] == [1, 2]
    assert data["image_e0"]["coeffs"] == [2, 0, 0, -1, -1, -1]
    assert data["hyperplane_match"] is True


def test_weyl_word(cfg, capsys):
    assert main(["weyl", "--n", "3", "--word", "s0 s4", "--config", cfg]) == 0
    data = _out(capsys)
    assert data["m"] == 6
    assert data["preserves_form"] is True
    assert data["fixes_anticanonical"] is True


def test_generate_then_associate(cfg, tmp_path, capsys):
    target = tmp_path / "config.json"
    assert main(["generate", "--n", "2", "--m", "6", "--seed", "3", "--output", str(target), "--config", cfg]) == 0
    assert main(["associate", "--input", str(target), "--config", cfg]) == 0
    data = _out(capsys)
    assert data["target"]["n"] == 2
    assert len(data["target"]["points"]) == 6


def test_cremona_with_coordinate_normalization(cfg, tmp_path, capsys):
    src = _write(tmp_path / "frame.json", {"points": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, 3, 5]]})
    assert main(["cremona", "--input", src, "--word", "s4 s0", "--normalization", "coordinate", "--config", cfg]) == 0
    data = _out(capsys)
    assert data["output"]["points"][3:] == [["15", "10", "6"], ["1", "1", "1"]]


def test_cremona_kernel_on_a_given_configuration(cfg, tmp_path, capsys):
    src = _write(tmp_path / "frame.json", [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, 3, 5]])
    assert main(["cremona-kernel", "--input", src, "--J", "1,2,3,4", "--config", cfg]) == 0
    assert _out(capsys)["passed"] == 1


def test_linsys_dim(cfg, tmp_path, capsys):
    src = _write(tmp_path / "conds.json", {"conditions": [{"point": [1, 0, 0], "multiplicity": 2}]})
    assert main(["linsys-dim", "--n", "2", "--d", "3", "--conditions", src, "--config", cfg]) == 0
    assert _out(capsys)["dimension"] == 7


def test_ninth_point(cfg, tmp_path, capsys, grid_points):
    src = _write(tmp_path / "eight.json", [list(p.coords) for p in grid_points[:8]])
    assert main(["ninth-point", "--input", src, "--config", cfg]) == 0
    assert _out(capsys)["ninth"] == ["1", "3", "1"]


def test_quadrics_and_check(cfg, tmp_path, capsys):
    pts = _write(tmp_path / "line.json", [[1, 0], [0, 1], [1, 1], [1, -1], [2, 1], [1, -2]])
    model_path = tmp_path / "model.json"
    assert main(["quadrics", "--points", pts, "--output", str(model_path), "--config", cfg]) == 0
    member = _write(tmp_path / "member.json", {"point": [1, 1, 1, 1, 7, 7]})
    assert main(["quadrics-check", "--model", str(model_path), "--point", member, "--config", cfg]) == 0
    data = _out(capsys)
    assert data["member"] is True
    assert data["smooth"] is True
    assert data["open_locus"] is True
    assert data["cover_image"] == ["1", "1", "1", "1", "49"]


def test_suite_command(cfg, capsys):
    assert main(["suite", "pairing", "--n", "3", "--config", cfg]) == 0
    assert "pairing: ok" in capsys.readouterr().out


def test_errors_exit_with_two(cfg, tmp_path, capsys):
    assert main(["associate", "--input", str(tmp_path / "missing.json"), "--config", cfg]) == 2
    assert "input_invalid" in capsys.readouterr().err
    assert main(["suite", "bogus", "--config", cfg]) == 2
