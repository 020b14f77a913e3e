import pytest

from zdbench.universe import UniverseLimits, generate_universe


@pytest.fixture(scope="session")
def universe():
    """The default universe; shared because generation self-checks every member."""
    return generate_universe()


@pytest.fixture(scope="session")
def small_universe():
    limits = UniverseLimits(zmod_max=6, product_component_max=3, max_ring=9,
                            max_module=40, max_sum_pairs=2)
    return generate_universe(limits)
