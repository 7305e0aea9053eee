from __future__ import annotations

from gale_buddy.checks import SUITES


def format_report(report: dict | None) -> str:
    if not report:
        return "no report yet: run `gale_buddy agent` or `gale_buddy suite <name>` first"
    meta = report.get("meta") if isinstance(report.get("meta"), dict) else {}
    parts: list[str] = []
    ts = str(meta.get("ts") or "").strip()
    if ts:
        parts.append(f"time: {ts}")
    parts.append(f"seed: {meta.get('seed')}  bound: {meta.get('bound')}")
    for name in SUITES:
        item = report.get(name)
        if not isinstance(item, dict):
            continue
        parts.append(format_suite(name, item))
    return "\n".join(parts)


def format_suite(name: str, item: dict) -> str:
    st = str(item.get("status") or "")
    det = str(item.get("details") or "")
    line = f"{name}: {st}"
    if det:
        line = f"{line} {det}"
    data = item.get("data") if isinstance(item.get("data"), dict) else {}
    failed = [c for c in data.get("cases", []) if isinstance(c, dict) and not c.get("ok")]
    for case in failed[:5]:
        reason = case.get("error") or case.get("failures") or "mismatch"
        line += f"\n  - trial {case.get('trial')}: {reason}"
    return line


def format_diff(diff: dict | None) -> str:
    if not diff:
        return "no diff yet: run twice to compare"
    st = str(diff.get("status") or "")
    det = str(diff.get("details") or "")
    data = diff.get("data") if isinstance(diff.get("data"), dict) else {}
    changed = data.get("changed") if isinstance(data.get("changed"), dict) else {}
    parts = [f"diff: {st} {det}".rstrip()]
    for k in sorted(changed.keys()):
        parts.append(f"- {k}")
    return "\n".join(parts)
