import os

from hypothesis import settings

settings.register_profile("ci", max_examples=300, deadline=None)
settings.register_profile("dev", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))

_criteria: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    mark = report.user_properties and dict(report.user_properties).get("criterion")
    if mark:
        _criteria.setdefault(mark, []).append(report.outcome)


def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", f"{m.args[0]}. {m.args[1]}"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        outcomes = _criteria[name]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({outcomes.count('passed')}/{len(outcomes)})")
