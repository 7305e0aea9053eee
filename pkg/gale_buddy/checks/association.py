from __future__ import annotations

from gale_buddy.codec import config_to_json, matrix_to_json
from gale_buddy.gale import associate
from gale_buddy.generators import random_config, rng_for
from gale_buddy.projective import equivalent
from gale_buddy.utils import RunConfig

from .common import run_case, summarize

SHAPES: tuple[tuple[int, int], ...] = ((1, 5), (2, 6), (2, 9), (3, 8), (5, 9))
_STREAM = 1


def check_association(run: RunConfig) -> dict:
    cases: list[dict] = []
    for t in range(run.trials_or(100)):
        n, m = SHAPES[t % len(SHAPES)]
        rng = rng_for(run.seed, _STREAM, t)

        def body() -> dict:
            config = random_config(rng, n, m, run.bound)
            forward = associate(config)
            back = associate(forward.target)
            return {
                "ok": equivalent(back.target, config),
                "n": n,
                "m": m,
                "source": config_to_json(config),
                "target": config_to_json(forward.target),
                "certificate": matrix_to_json(forward.certificate),
                "target_rank": forward.target.coordinate_matrix().rank(),
            }

        cases.append(run_case(t, body))
    return summarize("association", cases)
