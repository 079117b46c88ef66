def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    res = test_acceptance.RESULTS
    if not res:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(res, key=str):
        terminalreporter.write_line(res[k])
