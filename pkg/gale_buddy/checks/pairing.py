from __future__ import annotations

from gale_buddy.utils import RunConfig
from gale_buddy.weyl import DivisorClass, anticanonical, apply, curve_pairing, even_subsets, w_element

from .common import summarize

DIMENSIONS = (2, 3, 4, 5, 6)


def _check_dimension(n: int) -> dict:
    m = n + 3
    e0_values: set[int] = set()
    ei_values: set[int] = set()
    for j in even_subsets(n):
        w = w_element(j, n)
        e0_values.add(curve_pairing(apply(w, DivisorClass.basis(0, n, m))))
        for i in range(1, m + 1):
            ei_values.add(curve_pairing(apply(w, DivisorClass.basis(i, n, m))))
    beta_k = curve_pairing(anticanonical(n, m))
    return {
        "ok": e0_values == {n + 1} and ei_values == {1} and beta_k == 4,
        "n": n,
        "beta_e0": sorted(e0_values),
        "beta_ei": sorted(ei_values),
        "beta_anticanonical": beta_k,
    }


def check_pairing(run: RunConfig) -> dict:
    dims = (run.n,) if run.n is not None else DIMENSIONS
    cases = [{"trial": k, **_check_dimension(n)} for k, n in enumerate(dims)]
    return summarize("pairing", cases)
