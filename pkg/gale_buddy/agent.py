from __future__ import annotations

import argparse
import logging
from collections.abc import Sequence
from datetime import datetime, timezone
from pathlib import Path

from gale_buddy import __version__
from gale_buddy.checks import SUITES, suite_key
from gale_buddy.utils import (
    RunConfig,
    default_config_path,
    env_archive,
    find_root,
    init_env,
    load_config,
    read_json,
    resolve_path,
    run_config_from,
    write_json,
)

log = logging.getLogger("gale_buddy.agent")


def _ensure_dirs(state_dir: Path) -> tuple[Path, Path]:
    reports_dir = state_dir / "reports"
    diffs_dir = state_dir / "diffs"
    reports_dir.mkdir(parents=True, exist_ok=True)
    diffs_dir.mkdir(parents=True, exist_ok=True)
    return reports_dir, diffs_dir


def _diff(prev: dict | None, cur: dict) -> dict:
    if not prev:
        return {"status": "ok", "details": "no_previous_report", "data": {"changed": {}}}
    changed: dict[str, dict] = {}
    for k, v in cur.items():
        if k in ("meta",):
            continue
        pv = prev.get(k)
        if pv != v:
            changed[k] = {"before": _brief(pv), "after": _brief(v)}
    for k in prev.keys():
        if k in ("meta",):
            continue
        if k not in cur:
            changed[k] = {"before": _brief(prev.get(k)), "after": None}
    status = "ok" if not changed else "warn"
    details = "no_changes" if not changed else f"changed={len(changed)}"
    return {"status": status, "details": details, "data": {"changed": changed}}


def _brief(result: object) -> object:
    if not isinstance(result, dict):
        return result
    return {"status": result.get("status"), "details": result.get("details")}


def enabled_suites(config: dict) -> list[str]:
    suites_cfg = config.get("suites") if isinstance(config.get("suites"), dict) else {}
    return [name for name in SUITES if bool(suites_cfg.get(name, True))]


def collect_report(run: RunConfig, names: Sequence[str]) -> dict:
    report: dict[str, object] = {
        "meta": {
            "ts": datetime.now(timezone.utc).isoformat(),
            "version": __version__,
            "seed": run.seed,
            "bound": run.bound,
            "trials": run.trials,
            "n": run.n,
            "suites": list(names),
        }
    }
    for name in names:
        log.info("suite_start name=%s seed=%d", name, run.seed)
        report[name] = SUITES[name](run)
    return report


def exit_code(report: dict) -> int:
    for index, name in enumerate(SUITES):
        result = report.get(name)
        if isinstance(result, dict) and result.get("status") != "ok":
            return 10 + index
    return 0


def persist(state_dir: Path, report: dict) -> dict:
    reports_dir, diffs_dir = _ensure_dirs(state_dir)
    latest_report = reports_dir / "latest.json"
    latest_diff = diffs_dir / "latest.json"

    prev = read_json(latest_report)
    diff = _diff(prev, report)

    ts = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
    if env_archive():
        write_json(reports_dir / f"{ts}.json", report)
        write_json(diffs_dir / f"{ts}.json", diff)
    write_json(latest_report, report)
    write_json(latest_diff, diff)

    log.info("report_saved ts=%s", ts)
    log.info("diff status=%s details=%s", diff.get("status"), diff.get("details"))
    return diff


def state_dir_for(config: dict, cfg_path: Path) -> Path:
    paths = config.get("paths") if isinstance(config.get("paths"), dict) else {}
    root = find_root(cfg_path)
    return resolve_path(root, str(paths.get("state_dir") or "./var/gale-buddy"))


def run(config_path: str, names: Sequence[str] | None = None, **overrides: object) -> int:
    cfg_path = Path(config_path).expanduser().resolve()
    config = load_config(cfg_path)
    init_env(cfg_path)

    run_cfg = run_config_from(config, **overrides)
    selected = [suite_key(n) for n in names] if names else enabled_suites(config)
    report = collect_report(run_cfg, selected)
    persist(state_dir_for(config, cfg_path), report)
    code = exit_code(report)
    log.info("agent_done suites=%d exit=%d", len(selected), code)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="gale_buddy.agent")
    parser.add_argument("--config", default=str(default_config_path()))
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--trials", type=int, default=None)
    args = parser.parse_args(argv)
    return run(args.config, seed=args.seed, trials=args.trials)


if __name__ == "__main__":
    raise SystemExit(main())
