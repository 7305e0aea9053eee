from __future__ import annotations

from itertools import product

from gale_buddy.generators import rng_for
from gale_buddy.utils import RunConfig
from gale_buddy.weyl import (
    DivisorClass,
    anticanonical,
    apply,
    d_class,
    hyperplane_image,
    even_subsets,
    generator,
    half_anticanonical,
    odd_subsets,
    w_element,
    w_image_closed_form,
)

from .common import summarize

DIMENSIONS = (2, 3, 4, 5, 6)
EXHAUSTIVE_GROUP_MAX_N = 6
_SAMPLED_PAIRS = 4096
_STREAM = 7


def _label(subset: frozenset[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def _alternate_pairing(subset: frozenset[int]) -> list[tuple[int, int]]:
    items = sorted(subset)
    half = len(items) // 2
    return list(zip(items[:half], items[half:]))


def _check_dimension(n: int, seed: int) -> dict:
    m = n + 3
    evens = list(even_subsets(n))
    odds = list(odd_subsets(n))
    elements = {j: w_element(j, n) for j in evens}
    e0 = DivisorClass.basis(0, n, m)
    minus_k = anticanonical(n, m)
    failures: list[str] = []

    def record(ok: bool, what: str) -> bool:
        if not ok and len(failures) < 20:
            failures.append(what)
        return ok

    gens_ok = all(
        record(generator(i, n, m).preserves_form() and apply(generator(i, n, m), minus_k) == minus_k, f"generator s{i}")
        for i in range(m)
    )
    form_ok = all(record(w.preserves_form(), f"form {_label(j)}") for j, w in elements.items())
    fixes_k = all(record(apply(w, minus_k) == minus_k, f"anticanonical {_label(j)}") for j, w in elements.items())

    table = {i: d_class(i, n) for i in odds}
    d_class_pass = sum(
        record(apply(elements[j], table[i]) == d_class(i ^ j, n), f"d_class J={_label(j)} I={_label(i)}")
        for j, i in product(evens, odds)
    )
    hyperplane_pass = sum(record(apply(w, e0) == hyperplane_image(j, n), f"hyperplane {_label(j)}") for j, w in elements.items())
    closed_pass = sum(
        record(apply(w, DivisorClass.basis(s, n, m)) == w_image_closed_form(j, s, n), f"closed J={_label(j)} s={s}")
        for j, w in elements.items()
        for s in range(1, m + 1)
    )
    pairing_pass = sum(
        record(w_element(j, n, _alternate_pairing(j)) == w, f"pairing {_label(j)}") for j, w in elements.items()
    )

    if n <= EXHAUSTIVE_GROUP_MAX_N:
        pairs = list(product(evens, evens))
    else:
        rng = rng_for(seed, _STREAM, n)
        picks = rng.integers(0, len(evens), size=(_SAMPLED_PAIRS, 2))
        pairs = [(evens[int(a)], evens[int(b)]) for a, b in picks]
    group_pass = sum(
        record((elements[a] @ elements[b]) == elements[a ^ b], f"group {_label(a)}*{_label(b)}") for a, b in pairs
    )
    involution_ok = all(record((w @ w).is_identity(), f"involution {_label(j)}") for j, w in elements.items())

    case: dict = {
        "n": n,
        "m": m,
        "even_subsets": len(evens),
        "odd_subsets": len(odds),
        "table": f"{len(evens)}x{len(odds)}",
        "generators_ok": gens_ok,
        "form_ok": form_ok,
        "anticanonical_ok": fixes_k,
        "d_class_action": f"{d_class_pass}/{len(evens) * len(odds)}",
        "hyperplane_image": f"{hyperplane_pass}/{len(evens)}",
        "closed_form": f"{closed_pass}/{len(evens) * m}",
        "pairing_independent": f"{pairing_pass}/{len(evens)}",
        "group": f"{group_pass}/{len(pairs)}",
        "involutions_ok": involution_ok,
    }
    ok = (
        gens_ok
        and form_ok
        and fixes_k
        and involution_ok
        and d_class_pass == len(evens) * len(odds)
        and hyperplane_pass == len(evens)
        and closed_pass == len(evens) * m
        and pairing_pass == len(evens)
        and group_pass == len(pairs)
    )
    if n % 2:
        full = frozenset(range(1, m + 1))
        half = half_anticanonical(n)
        complement_pass = sum(
            record(
                apply(elements[full], table[i]) == table[full - i] and table[i] + table[full - i] == half,
                f"complement {_label(i)}",
            )
            for i in odds
        )
        case["complement"] = f"{complement_pass}/{len(odds)}"
        ok = ok and complement_pass == len(odds)
    case["ok"] = ok
    case["failures"] = failures
    return case


def check_lemma_wj(run: RunConfig) -> dict:
    dims = (run.n,) if run.n is not None else DIMENSIONS
    cases = [{"trial": k, **_check_dimension(n, run.seed)} for k, n in enumerate(dims)]
    return summarize("lemma_wj", cases)
