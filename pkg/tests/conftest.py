import pytest

from albx import fixtures


@pytest.fixture(scope="session")
def node():
    return fixtures.node()


@pytest.fixture(scope="session")
def cusp():
    return fixtures.cusp()


@pytest.fixture(scope="session")
def tacnode():
    return fixtures.tacnode()


@pytest.fixture(scope="session")
def triple():
    return fixtures.rfold(3)


@pytest.fixture(scope="session")
def fourfold():
    return fixtures.rfold(4)


@pytest.fixture(scope="session")
def whole_zoo(node, cusp, tacnode, triple, fourfold):
    return {
        "node": node,
        "cusp": cusp,
        "tacnode": tacnode,
        "triple": triple,
        "fourfold": fourfold,
    }
