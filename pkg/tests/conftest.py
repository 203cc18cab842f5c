"""Terminal summary listing one pass/fail line per acceptance criterion."""

_acceptance_reports: dict[str, tuple[bool, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance_reports[name] = (report.passed, report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_reports:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name in sorted(_acceptance_reports, key=_criterion_number):
        passed, _ = _acceptance_reports[name]
        number = _criterion_number(name)
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number:2d}: {verdict}  {name}")


def _criterion_number(name: str) -> int:
    # names look like test_criterion_03_oracle_q3
    for part in name.split("_"):
        if part.isdigit():
            return int(part)
    return 0
