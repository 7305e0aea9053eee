from __future__ import annotations

from gale_buddy.codec import point_to_json, system_to_json
from gale_buddy.generators import pencil_base_points, plane_points, rng_for
from gale_buddy.linsys import quintic_witness, satisfies
from gale_buddy.utils import RunConfig

from .common import run_case, summarize

_STREAM = 6


def check_quintic(run: RunConfig) -> dict:
    cases: list[dict] = []
    trials = run.trials_or(20)
    for t in range(2 * trials):
        on_pencil = t < trials
        rng = rng_for(run.seed, _STREAM, t)

        def body() -> dict:
            points = pencil_base_points(rng, run.bound) if on_pencil else plane_points(rng, 9, run.bound)
            system = quintic_witness(points)
            expected = 1 if on_pencil else 0
            verified = all(satisfies(q, c) for q in system.basis for c in system.conditions)
            return {
                "ok": system.dimension == expected and verified,
                "kind": "pencil" if on_pencil else "random",
                "nullity": system.dimension,
                "points": [point_to_json(q) for q in points],
                "system": system_to_json(system),
            }

        cases.append(run_case(t, body))
    return summarize("quintic", cases)
