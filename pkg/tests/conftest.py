import pytest

import compnum as cn


def cycle_graph(n, offset=0):
    vs = [offset + i for i in range(1, n + 1)]
    return cn.Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n, offset=0):
    vs = [offset + i for i in range(1, n + 1)]
    return cn.Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_graph(n):
    vs = list(range(1, n + 1))
    return cn.Graph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])


@pytest.fixture(scope="session")
def flower2():
    return cn.gen_flower(2)


@pytest.fixture(scope="session")
def flower3():
    return cn.gen_flower(3)


@pytest.fixture(scope="session")
def figure_eight():
    spec = cn.FamilySpec(omega=2, h=2, hole_lengths=(4, 4),
                         attachments=(("pendant", 1), ("pendant", 1)))
    return cn.gen_family(spec)
