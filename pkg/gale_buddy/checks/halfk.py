from __future__ import annotations

from gale_buddy.codec import config_to_json, system_to_json
from gale_buddy.generators import random_config, rng_for
from gale_buddy.linsys import half_anticanonical_system
from gale_buddy.utils import RunConfig

from .common import run_case, summarize

DIMENSIONS = (3, 5, 7)
_STREAM = 3


def check_halfk(run: RunConfig) -> dict:
    dims = (run.n,) if run.n is not None else DIMENSIONS
    cases: list[dict] = []
    found: dict[str, list[int]] = {}
    for n in dims:
        if n % 2 == 0:
            raise ValueError(f"odd_dimension_required n={n}")
        g = (n + 1) // 2
        for t in range(run.trials_or(10)):
            rng = rng_for(run.seed, _STREAM, n, t)

            def body() -> dict:
                config = random_config(rng, n, n + 3, run.bound)
                system = half_anticanonical_system(config)
                found.setdefault(str(n), []).append(system.dimension)
                return {
                    "ok": system.dimension == 2**g,
                    "n": n,
                    "expected": 2**g,
                    "config": config_to_json(config),
                    "system": system_to_json(system),
                }

            cases.append(run_case(len(cases), body))
    return summarize("halfk", cases, dimensions=found)
