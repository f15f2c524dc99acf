"""Per-criterion results collected by the acceptance tests."""

from collections import OrderedDict

RESULTS: "OrderedDict[int, list[tuple[str, bool, str]]]" = OrderedDict()


def record(criterion: int, part: str, ok: bool, detail: str = "") -> None:
    RESULTS.setdefault(criterion, []).append((part, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'} criterion {criterion} [{part}] {detail}".rstrip())


def summary_lines() -> list[str]:
    lines = []
    for crit in sorted(RESULTS):
        parts = RESULTS[crit]
        bad = [f"{p}: {d}" for p, ok, d in parts if not ok]
        status = "FAIL" if bad else "PASS"
        note = "; ".join(bad) if bad else ", ".join(p for p, _, _ in parts)
        lines.append(f"{status} criterion {crit}: {note}")
    return lines
