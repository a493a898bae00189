import re

import pytest

CRITERIA: dict[str, tuple[str, str, float]] = {}


def record(cid: str, title: str, ok: bool, seconds: float) -> None:
    CRITERIA[cid] = ("PASS" if ok else "FAIL", title, seconds)


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(CRITERIA, key=lambda c: (int(re.sub(r"\D", "", c)), c)):
        status, title, seconds = CRITERIA[cid]
        terminalreporter.write_line(f"{status} {cid:>3}  {title}  ({seconds:.2f}s)")
