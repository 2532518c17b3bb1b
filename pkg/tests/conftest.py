from functools import lru_cache

import pytest

from hallforge.quiver import table_from_config


@lru_cache(maxsize=None)
def get_table(config="A2", q=2, bound=(2, 2)):
    # tables are frozen after build, so sharing them across tests is safe
    return table_from_config(config, q=q, bound=bound, use_cache=False)


@pytest.fixture(scope="session")
def a2():
    return get_table("A2", 2, (2, 2))


@pytest.fixture(scope="session")
def a2_q3():
    return get_table("A2", 3, (2, 2))


@pytest.fixture(scope="session")
def a2op_big():
    return get_table("A2op", 2, (4, 4))


@pytest.fixture(scope="session")
def a3():
    return get_table("A3", 2, (1, 1, 1))


@pytest.fixture(params=[2, 3], ids=["q2", "q3"])
def a2_any(request):
    return get_table("A2", request.param, (2, 2))


def names(t, *labels):
    return [t.lookup(x) for x in labels]
