import pytest

import lcdmds as L


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every numba kernel once so timed tests see compiled code."""
    F = L.make_field(3, 2)
    sa = L.structured_alpha(L.ROOTS_UNION_GAMMA_SCALED, F, 2)
    code = L.twisted_rs_code(L.TwistedRSParams(sa.alphas, 2, 1, 1, F.gamma))
    L.is_lcd(code, "euclidean")
    L.is_lcd(code, "hermitian")
    L.is_mds(code)
    L.min_distance_bruteforce(code)
    L.systematic_form(code.gen)
    g = L.grs_generator([F.element(i) for i in range(1, 8)], [F.one] * 7, 3)
    L.non_grs_check(L.LinearCode(g))
    yield


@pytest.fixture(scope="session")
def gf3():
    return L.make_field(3, 1)


@pytest.fixture(scope="session")
def gf9():
    return L.make_field(3, 2)


@pytest.fixture(scope="session")
def gf25():
    return L.make_field(5, 2)


@pytest.fixture(scope="session")
def gf49():
    return L.make_field(7, 2)


@pytest.fixture(scope="session")
def gf81():
    return L.make_field(3, 4)


@pytest.fixture(scope="session")
def gf121():
    return L.make_field(11, 2)
