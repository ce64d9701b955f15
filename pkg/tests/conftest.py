import functools

import pytest

from arclab.arcs import crown, integral_strip, mobius_crown, polygon
from arclab.build import arc_complex, inner_complex


@functools.lru_cache(maxsize=None)
def cached_complex(family: str, n: int, m: int | None = None):
    if family == "polygon":
        return arc_complex(polygon(n))
    if family == "crown":
        return arc_complex(crown(n))
    if family == "mobius":
        return arc_complex(mobius_crown(n))
    if family == "inner-mobius":
        return inner_complex(mobius_crown(n))
    if family == "strip":
        return arc_complex(integral_strip(m, n))
    raise ValueError(family)


@pytest.fixture(scope="session")
def complex_of():
    return cached_complex
