import pytest

from heckekit import AntisphericalModule, HeckeAlgebra, build_root_datum, weyl_group


@pytest.fixture(scope="session")
def rd_a1():
    return build_root_datum("A1")


@pytest.fixture(scope="session")
def rd_a2():
    return build_root_datum("A2")


@pytest.fixture(scope="session")
def rd_b2():
    return build_root_datum("B2")


@pytest.fixture(scope="session")
def rd_g2():
    return build_root_datum("G2")


@pytest.fixture(scope="session")
def w_a1(rd_a1):
    return weyl_group(rd_a1)


@pytest.fixture(scope="session")
def w_a2(rd_a2):
    return weyl_group(rd_a2)


@pytest.fixture(scope="session")
def alg_a1(w_a1):
    return HeckeAlgebra(w_a1)


@pytest.fixture(scope="session")
def alg_a2(w_a2):
    return HeckeAlgebra(w_a2)


@pytest.fixture(scope="session")
def masp_a1(alg_a1):
    return AntisphericalModule(alg_a1)


@pytest.fixture(scope="session")
def masp_a2(alg_a2):
    return AntisphericalModule(alg_a2)
