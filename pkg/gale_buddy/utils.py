from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path

import yaml
from dotenv import load_dotenv

DEFAULT_SEED = 7
DEFAULT_BOUND = 50
DEFAULT_TRIALS = 20


def find_root(config_path: Path | None = None) -> Path:
    env_root = os.getenv("GALE_BUDDY_ROOT")
    if env_root:
        p = Path(env_root).expanduser()
        if p.exists():
            return p.resolve()

    seeds: list[Path] = [Path.cwd()]
    if config_path:
        seeds.append(config_path)
        seeds.append(config_path.parent)
    seeds.append(Path(__file__).resolve().parent)

    seen: set[Path] = set()
    for seed in seeds:
        base = seed if seed.is_dir() else seed.parent
        for cand in [base, *base.parents]:
            if cand in seen:
                continue
            seen.add(cand)
            if (cand / "config" / "config.yml").is_file():
                return cand
            if (cand / ".env").is_file():
                return cand
    return Path.cwd().resolve()


def default_config_path() -> Path:
    return find_root() / "config" / "config.yml"


def load_config(path: Path) -> dict:
    data = yaml.safe_load(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError("config_invalid")
    return data


def init_env(config_path: Path) -> None:
    load_dotenv(find_root(config_path).joinpath(".env"), override=False)


def read_json(path: Path) -> dict | None:
    if not path.exists():
        return None
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f)
    except Exception:
        return None
    return data if isinstance(data, dict) else None


def write_json(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with tmp.open("w", encoding="utf-8") as f:
        json.dump(payload, f, ensure_ascii=False, separators=(",", ":"), sort_keys=True)
    tmp.replace(path)


def _env_int(name: str) -> int | None:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def env_seed() -> int | None:
    return _env_int("GALE_BUDDY_SEED")


def env_bound() -> int | None:
    return _env_int("GALE_BUDDY_BOUND")


def env_archive() -> bool:
    return os.getenv("GALE_BUDDY_ARCHIVE", "1").strip() not in {"0", "false", "False", "no", "NO"}


def resolve_path(root: Path, raw: str) -> Path:
    p = Path(raw).expanduser()
    return p if p.is_absolute() else (root / p).resolve()


@dataclass(frozen=True, slots=True)
class RunConfig:
    command: str = "suite"
    input: Path | None = None
    output: Path | None = None
    seed: int = DEFAULT_SEED
    trials: int | None = None
    bound: int = DEFAULT_BOUND
    n: int | None = None
    extra: dict = field(default_factory=dict, hash=False)

    def trials_or(self, default: int) -> int:
        return default if self.trials is None else self.trials

    def with_overrides(self, **kwargs: object) -> RunConfig:
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def run_config_from(config: dict | None, **overrides: object) -> RunConfig:
    """CLI flag > environment > YAML > default."""
    cfg = config or {}
    seed = cfg.get("seed", DEFAULT_SEED)
    bound = cfg.get("bound", DEFAULT_BOUND)
    trials = cfg.get("trials")
    if env_seed() is not None:
        seed = env_seed()
    if env_bound() is not None:
        bound = env_bound()
    try:
        base = RunConfig(
            seed=int(seed),
            bound=int(bound),
            trials=int(trials) if trials is not None else None,
        )
    except (TypeError, ValueError):
        raise ValueError("config_invalid") from None
    return base.with_overrides(**overrides)
