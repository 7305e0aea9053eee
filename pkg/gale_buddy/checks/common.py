from __future__ import annotations

import logging
from collections.abc import Callable

log = logging.getLogger("gale_buddy.checks")


def run_case(index: int, body: Callable[[], dict]) -> dict:
    try:
        case = body()
    except (ValueError, RuntimeError) as e:
        log.info("case_failed trial=%d error=%s", index, e)
        return {"trial": index, "ok": False, "error": str(e)}
    return {"trial": index, **case}


def summarize(name: str, cases: list[dict], **data: object) -> dict:
    passed = sum(1 for c in cases if c.get("ok"))
    status = "ok" if passed == len(cases) else "fail"
    log.info("suite_done name=%s status=%s cases=%d passed=%d", name, status, len(cases), passed)
    return {
        "status": status,
        "details": f"passed={passed}/{len(cases)}",
        "data": {"cases": cases, **data},
    }
