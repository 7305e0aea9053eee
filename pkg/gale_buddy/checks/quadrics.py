from __future__ import annotations

from gale_buddy.codec import model_to_json, point_to_json
from gale_buddy.gale import rational_normal_points
from gale_buddy.generators import (
    OPEN_MEMBER_MAX_N,
    open_locus_member,
    random_params,
    random_point,
    rng_for,
    square_quartic_member,
)
from gale_buddy.projective import ProjectivePoint, canonicalize
from gale_buddy.quadrics import (
    HEAD,
    QuadricModel,
    build_model,
    cover_image,
    in_open_locus,
    is_smooth_at,
    membership,
    sign_orbit,
)
from gale_buddy.utils import RunConfig

from .common import run_case, summarize

DIMENSIONS = (3, 5, 7)
_STREAM = 9


def _member_checks(model: QuadricModel, y: ProjectivePoint) -> dict[str, bool]:
    t_expected = canonicalize([c * c for c in y.coords[:HEAD]])
    orbit = sign_orbit(model, y)
    return {
        "count": len(model.quadrics) == model.n - 2,
        "orbit": len(set(orbit)) == 2 ** (model.n + 2),
        "orbit_members": all(membership(model, z) for z in orbit),
        "fibre": {cover_image(model, z) for z in orbit} == {t_expected},
        "round_trip": cover_image(model, y) == t_expected,
        "smooth": is_smooth_at(model, y),
    }


def check_quadrics(run: RunConfig) -> dict:
    dims = (run.n,) if run.n is not None else DIMENSIONS
    cases: list[dict] = []
    for n in dims:
        for t in range(run.trials_or(10)):
            rng = rng_for(run.seed, _STREAM, n, t)

            def body() -> dict:
                params = random_params(rng, n + 3, run.bound)
                model = build_model(rational_normal_points(params, 1).points)
                # squares of binary quadratics sit over the discriminant
                y = square_quartic_member(model, rng, run.bound)
                generic = random_point(rng, n + 2, run.bound)
                checks = _member_checks(model, y)
                checks["over_discriminant"] = not in_open_locus(model, y)
                checks["generic_rejected"] = not membership(model, generic)
                return {
                    "ok": all(checks.values()),
                    "n": n,
                    "kind": "square_member",
                    "checks": checks,
                    "member": point_to_json(y),
                    "model": model_to_json(model),
                }

            cases.append(run_case(len(cases), body))

        if not 3 <= n <= OPEN_MEMBER_MAX_N:
            continue

        def open_body() -> dict:
            model, y = open_locus_member(n)
            checks = _member_checks(model, y)
            checks["open_locus"] = in_open_locus(model, y)
            return {
                "ok": all(checks.values()),
                "n": n,
                "kind": "open_member",
                "checks": checks,
                "member": point_to_json(y),
            }

        cases.append(run_case(len(cases), open_body))
    open_dims = [n for n in dims if 3 <= n <= OPEN_MEMBER_MAX_N]
    return summarize("quadrics", cases, open_member_dims=open_dims)
