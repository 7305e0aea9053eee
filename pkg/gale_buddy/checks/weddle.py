from __future__ import annotations

from gale_buddy.codec import point_to_json
from gale_buddy.generators import lifted, pencil_base_points, random_point, rng_for
from gale_buddy.linsys import weddle_membership
from gale_buddy.utils import RunConfig

from .common import run_case, summarize

_STREAM = 5


def check_weddle(run: RunConfig) -> dict:
    cases: list[dict] = []
    trials = run.trials_or(20)
    for t in range(2 * trials):
        on_locus = t < trials
        rng = rng_for(run.seed, _STREAM, t)

        def body() -> dict:
            base = pencil_base_points(rng, run.bound)
            points = lifted(base)
            p = points[8] if on_locus else random_point(rng, 5, run.bound)
            result = weddle_membership(points[:8], p)
            return {
                "ok": result == on_locus,
                "kind": "pencil" if on_locus else "random",
                "plane_points": [point_to_json(q) for q in base],
                "point": point_to_json(p),
                "member": result,
            }

        cases.append(run_case(t, body))
    return summarize("weddle", cases)
