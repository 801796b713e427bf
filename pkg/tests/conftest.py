import pytest

from carlitz_units.fq import make_field
from carlitz_units.ring import make_context


def _ctx(p, prime, k=1, modulus=None, g=None):
    return make_context(make_field(p, k, modulus), prime, g)


@pytest.fixture(scope="session")
def ctx_f3():
    return _ctx(3, (0, 1))


@pytest.fixture(scope="session")
def ctx_f2_2():
    return _ctx(2, (1, 1, 1))


@pytest.fixture(scope="session")
def ctx_f2_3():
    return _ctx(2, (1, 1, 0, 1))


@pytest.fixture(scope="session")
def ctx_f4():
    # F_4 = F_2[t]/(t^2+t+1), prime T
    return _ctx(2, (0, 1), k=2, modulus=[1, 1, 1])


@pytest.fixture(scope="session")
def ctx_f5():
    return _ctx(5, (2, 1))


@pytest.fixture(scope="session", params=["f3", "f2_2", "f2_3"])
def ref_ctx(request):
    return {"f3": lambda: _ctx(3, (0, 1)), "f2_2": lambda: _ctx(2, (1, 1, 1)), "f2_3": lambda: _ctx(2, (1, 1, 0, 1))}[request.param]()


@pytest.fixture(scope="session", params=["f3", "f2_2", "f2_3", "f4", "f5"])
def any_ctx(request):
    return {
        "f3": lambda: _ctx(3, (0, 1)),
        "f2_2": lambda: _ctx(2, (1, 1, 1)),
        "f2_3": lambda: _ctx(2, (1, 1, 0, 1)),
        "f4": lambda: _ctx(2, (0, 1), k=2, modulus=[1, 1, 1]),
        "f5": lambda: _ctx(5, (2, 1)),
    }[request.param]()


# acceptance criteria report one line each at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
