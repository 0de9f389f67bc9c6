import pytest


def naive_polymul(a, b, order):
    """Schoolbook product of coefficient lists, truncated; no shared code with the package."""
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= order:
                out[i + j] += x * y
    return out


def naive_product(factors, order):
    out = [1] + [0] * order
    for f in factors:
        out = naive_polymul(out, f, order)
    return out


@pytest.fixture
def polymul():
    return naive_polymul


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    label = report.user_properties and dict(report.user_properties).get("criterion")
    if not label:
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _ACCEPTANCE.get(label, "PASS")
        _ACCEPTANCE[label] = "PASS" if prev == "PASS" and report.outcome == "passed" else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line("%s  %s" % (_ACCEPTANCE[label], label))
