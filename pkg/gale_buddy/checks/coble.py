from __future__ import annotations

from gale_buddy.codec import form_to_json, point_to_json
from gale_buddy.generators import lifted, plane_points, rng_for
from gale_buddy.linsys import coble_sextic_witness
from gale_buddy.utils import RunConfig

from .common import run_case, summarize

_STREAM = 4


def check_coble(run: RunConfig) -> dict:
    cases: list[dict] = []
    for t in range(run.trials_or(50)):
        rng = rng_for(run.seed, _STREAM, t)

        def body() -> dict:
            plane = plane_points(rng, 9, run.bound)
            cubic = coble_sextic_witness(lifted(plane))
            return {
                "ok": True,
                "plane_points": [point_to_json(q) for q in plane],
                "cubic": form_to_json(cubic, 3)["coefficients"],
            }

        cases.append(run_case(t, body))
    return summarize("coble", cases)
