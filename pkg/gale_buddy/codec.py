from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from .exact import Matrix, Polynomial, format_rational, monomials, to_rational
from .gale import AssociationResult
from .linsys import HypersurfaceSystem
from .projective import PointConfiguration, ProjectivePoint, canonicalize
from .quadrics import HyperplaneArrangement, QuadricModel, build_model, build_model_from_arrangement
from .weyl import DivisorClass, WeylElement


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[format_rational(v) for v in m.row(i)] for i in range(m.rows)]


def matrix_from_json(obj: Sequence[Sequence[Any]], cols: int | None = None) -> Matrix:
    return Matrix.from_rows([[to_rational(v) for v in row] for row in obj], cols=cols)


def point_to_json(p: ProjectivePoint) -> list[str]:
    return [str(c) for c in p.coords]


def point_from_json(obj: Sequence[Any]) -> ProjectivePoint:
    return canonicalize([to_rational(v) for v in obj])


def config_to_json(config: PointConfiguration) -> dict:
    return {"n": config.n, "points": [point_to_json(p) for p in config.points]}


def config_from_json(obj: Any) -> PointConfiguration:
    if not isinstance(obj, dict) or "points" not in obj:
        raise ValueError("config_invalid")
    points = tuple(point_from_json(p) for p in obj["points"])
    n = int(obj["n"]) if "n" in obj else (points[0].ambient_dim if points else 0)
    return PointConfiguration(n, points)


def form_to_json(poly: Polynomial, degree: int | None = None) -> dict:
    d = poly.degree if degree is None else degree
    return {
        "variables": poly.variables,
        "degree": d,
        "coefficients": [format_rational(c) for c in poly.coefficients(d)],
    }


def form_from_json(obj: dict) -> Polynomial:
    return Polynomial.from_coefficients(int(obj["variables"]), int(obj["degree"]), [to_rational(c) for c in obj["coefficients"]])


def association_to_json(result: AssociationResult) -> dict:
    return {
        "source": config_to_json(result.source),
        "target": config_to_json(result.target),
        "certificate": matrix_to_json(result.certificate),
    }


def system_to_json(system: HypersurfaceSystem) -> dict:
    return {
        "n": system.n,
        "degree": system.degree,
        "monomials": len(monomials(system.n + 1, system.degree)),
        "conditions": system.condition_count,
        "rank": system.rank,
        "dimension": system.dimension,
        "basis": [form_to_json(b, system.degree)["coefficients"] for b in system.basis],
    }


def model_to_json(model: QuadricModel) -> dict:
    return {
        "n": model.n,
        "points": [point_to_json(p) for p in model.points] if model.points is not None else None,
        "arrangement": matrix_to_json(model.arrangement.rows),
        "a": [[format_rational(v) for v in row] for row in model.arrangement.tail()],
        "quadrics": [form_to_json(q, 2)["coefficients"] for q in model.quadrics],
    }


def model_from_json(obj: dict) -> QuadricModel:
    if obj.get("points"):
        return build_model([point_from_json(p) for p in obj["points"]])
    return build_model_from_arrangement(HyperplaneArrangement(matrix_from_json(obj["arrangement"])))


def divisor_to_json(c: DivisorClass) -> dict:
    return {"coeffs": list(c.coeffs), "display": str(c)}


def weyl_to_json(w: WeylElement) -> dict:
    return {"n": w.n, "m": w.m, "matrix": w.to_rows()}
