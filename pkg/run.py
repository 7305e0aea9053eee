import argparse
import asyncio
import logging
import os
import signal
import sys
from pathlib import Path

from gale_buddy.agent import run as run_agent
from gale_buddy.cli import main as cli_main
from gale_buddy.utils import find_root, init_env, load_config


def _log_paths(root: Path) -> tuple[Path, Path]:
    logs_dir = root / "var" / "gale-buddy"
    logs_dir.mkdir(parents=True, exist_ok=True)
    suites_log = logs_dir / "suites.log"
    override = (os.getenv("GALE_BUDDY_LOG") or "").strip()
    if override:
        suites_log = Path(override).expanduser()
        suites_log.parent.mkdir(parents=True, exist_ok=True)
    return logs_dir / "run.log", suites_log


class _NamePrefixFilter(logging.Filter):
    def __init__(self, prefixes: tuple[str, ...]):
        super().__init__()
        self.prefixes = prefixes

    def filter(self, record: logging.LogRecord) -> bool:
        return record.name.startswith(self.prefixes)


def _configure_logging(root: Path, run_log: Path, suites_log: Path, echo: bool) -> None:
    fmt = logging.Formatter("%(asctime)s %(levelname)s %(name)s %(message)s")
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.INFO)
    for h in list(root_logger.handlers):
        root_logger.removeHandler(h)

    h_run = logging.FileHandler(run_log, encoding="utf-8")
    h_run.setFormatter(fmt)
    h_run.addFilter(_NamePrefixFilter(("gale_buddy.run", "gale_buddy.cli")))
    root_logger.addHandler(h_run)

    h_suites = logging.FileHandler(suites_log, encoding="utf-8")
    h_suites.setFormatter(fmt)
    h_suites.addFilter(_NamePrefixFilter(("gale_buddy.agent", "gale_buddy.checks")))
    root_logger.addHandler(h_suites)

    if echo:
        h_err = logging.StreamHandler(sys.stderr)
        h_err.setFormatter(fmt)
        h_err.setLevel(logging.WARNING)
        root_logger.addHandler(h_err)

    logging.getLogger("gale_buddy.run").info("logging_ready root=%s", root)


async def _agent_loop(config_path: str, interval_s: int) -> int:
    log = logging.getLogger("gale_buddy.run")
    stop = asyncio.Event()
    loop = asyncio.get_running_loop()
    for sig in (getattr(signal, "SIGINT", None), getattr(signal, "SIGTERM", None)):
        if sig is None:
            continue
        try:
            loop.add_signal_handler(sig, stop.set)
        except (NotImplementedError, RuntimeError):
            pass

    code = 0
    log.info("loop_start config=%s interval_s=%d", config_path, interval_s)
    while not stop.is_set():
        try:
            os.environ["GALE_BUDDY_ARCHIVE"] = "0"
            code = await asyncio.to_thread(run_agent, config_path)
        except (ValueError, OSError) as e:
            log.error("agent_error %s", e)
            code = 2
        try:
            await asyncio.wait_for(stop.wait(), timeout=interval_s)
        except TimeoutError:
            pass
    log.info("loop_stop exit=%d", code)
    return code


def _interval(cfg_path: Path, override: int | None) -> int:
    if override is not None:
        return max(2, override)
    config = load_config(cfg_path)
    try:
        value = int(config.get("loop_interval_seconds") or 600)
    except (TypeError, ValueError):
        value = 600
    return max(2, value)


parser = argparse.ArgumentParser(
    prog="run",
    description="gale_buddy launcher: file logging, then the usual subcommands",
)
parser.add_argument("--loop", action="store_true", help="rerun the agent until SIGINT/SIGTERM")
parser.add_argument("--interval", type=int, default=None)
parser.add_argument("--config", default=str(find_root() / "config" / "config.yml"))
args, rest = parser.parse_known_args()

cfg_path = Path(args.config).expanduser().resolve()
root = find_root(cfg_path)
init_env(cfg_path)

run_log, suites_log = _log_paths(root)
_configure_logging(root, run_log, suites_log, echo=True)

if args.loop:
    raise SystemExit(asyncio.run(_agent_loop(str(cfg_path), _interval(cfg_path, args.interval))))

if not rest:
    rest = ["agent"]
if not rest[0].startswith("-") and "--config" not in rest:
    rest = [rest[0], "--config", str(cfg_path), *rest[1:]]
raise SystemExit(cli_main(rest))
