import pytest

from incwtree.graph import build_graph


def path_graph(*weights):
    n = len(weights) + 1
    vs = [f"x{i + 1}" for i in range(n)]
    return build_graph(vs, [(vs[i], vs[i + 1], w) for i, w in enumerate(weights)])


@pytest.fixture
def P4():
    return path_graph(1, 1, 2)


@pytest.fixture
def P5():
    return path_graph(3, 2, 2, 3)


@pytest.fixture
def E2():
    return build_graph(["x1", "x2"], [("x1", "x2", 2)])


@pytest.fixture
def STAR():
    return build_graph(["v", "a", "b"], [("v", "a", 1), ("v", "b", 2)])


@pytest.fixture
def trivial():
    return build_graph(["x1"], [])
