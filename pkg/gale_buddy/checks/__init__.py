from .association import check_association
from .coble import check_coble
from .cremona_kernel import check_cremona_kernel
from .halfk import check_halfk
from .lemma_wj import check_lemma_wj
from .pairing import check_pairing
from .quadrics import check_quadrics
from .quintic import check_quintic
from .self_assoc import check_self_assoc
from .weddle import check_weddle

SUITES = {
    "association": check_association,
    "self_assoc": check_self_assoc,
    "halfk": check_halfk,
    "coble": check_coble,
    "weddle": check_weddle,
    "quintic": check_quintic,
    "lemma_wj": check_lemma_wj,
    "pairing": check_pairing,
    "cremona_kernel": check_cremona_kernel,
    "quadrics": check_quadrics,
}


def suite_key(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    if key not in SUITES:
        raise ValueError(f"unknown_suite name={name}")
    return key


__all__ = [
    "SUITES",
    "check_association",
    "check_coble",
    "check_cremona_kernel",
    "check_halfk",
    "check_lemma_wj",
    "check_pairing",
    "check_quadrics",
    "check_quintic",
    "check_self_assoc",
    "check_weddle",
    "suite_key",
]
