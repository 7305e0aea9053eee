from __future__ import annotations

from gale_buddy.codec import config_to_json
from gale_buddy.gale import is_self_associated, rational_normal_points
from gale_buddy.generators import random_config, random_params, rng_for
from gale_buddy.utils import RunConfig

from .common import run_case, summarize

_STREAM = 2


def check_self_assoc(run: RunConfig) -> dict:
    cases: list[dict] = []
    trials = run.trials_or(20)
    for t in range(2 * trials):
        on_conic = t < trials
        rng = rng_for(run.seed, _STREAM, t)

        def body() -> dict:
            if on_conic:
                params = random_params(rng, 6, run.bound)
                config = rational_normal_points(params, 2)
            else:
                params = None
                config = random_config(rng, 2, 6, run.bound)
            result = is_self_associated(config)
            return {
                "ok": result == on_conic,
                "kind": "conic" if on_conic else "random",
                "params": params,
                "self_associated": result,
                "config": config_to_json(config),
            }

        cases.append(run_case(t, body))
    return summarize("self_assoc", cases)
