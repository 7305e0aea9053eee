from __future__ import annotations

from gale_buddy.codec import config_to_json
from gale_buddy.cremona import CremonaWord, cr_apply, kernel_check
from gale_buddy.generators import random_config, rng_for
from gale_buddy.projective import PointConfiguration, equivalent, point
from gale_buddy.utils import RunConfig
from gale_buddy.weyl import even_subsets

from .common import run_case, summarize

DIMENSIONS = (2, 3, 4, 5)
_STREAM = 8


def worked_example() -> dict:
    """n = 2, a = (2, 3, 5): the last point moves to (1/2, 1/3, 1/5)."""
    config = PointConfiguration(2, (point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1), point(2, 3, 5)))
    word = CremonaWord(2, 5, (4, 0))
    literal = cr_apply(word, config, normalization="coordinate")
    expected = PointConfiguration(2, config.points[:3] + (point(15, 10, 6), point(1, 1, 1)))
    framed = cr_apply(word, config)
    return {
        "ok": literal == expected and framed == config and equivalent(literal, config),
        "word": str(word),
        "coordinate": config_to_json(literal),
        "frame": config_to_json(framed),
    }


def check_cremona_kernel(run: RunConfig) -> dict:
    dims = (run.n,) if run.n is not None else DIMENSIONS
    cases: list[dict] = [{"trial": 0, "kind": "worked_example", **worked_example()}]
    for n in dims:
        subsets = list(even_subsets(n))
        for t in range(run.trials_or(20)):
            rng = rng_for(run.seed, _STREAM, n, t)

            def body() -> dict:
                config = random_config(rng, n, n + 3, run.bound)
                passed = sum(1 for j in subsets if kernel_check(j, config))
                swap = CremonaWord(n, n + 3, (1,))
                swap_detected = not equivalent(cr_apply(swap, config), config)
                return {
                    "ok": passed == len(subsets) and swap_detected,
                    "kind": "kernel",
                    "n": n,
                    "subsets": f"{passed}/{len(subsets)}",
                    "swap_detected": swap_detected,
                    "config": config_to_json(config),
                }

            cases.append(run_case(len(cases), body))
    return summarize("cremona_kernel", cases)
