from __future__ import annotations

from collections import defaultdict

import pytest

# criterion number -> list of (part, passed, detail)
_ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = defaultdict(list)


@pytest.fixture
def record():
    """Log one part of an acceptance criterion; also printed for ``-s`` runs."""

    def _record(criterion: int, part: str, passed: bool, detail: str) -> bool:
        _ACCEPTANCE[criterion].append((part, bool(passed), detail))
        print(f"criterion {criterion} [{part}] {'PASS' if passed else 'FAIL'}: {detail}")
        return bool(passed)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[k]
        ok = all(p[1] for p in parts)
        detail = "; ".join(f"{name} {'pass' if good else 'FAIL'} ({d})" for name, good, d in parts)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {k}: {detail}")
