from fractions import Fraction

import numpy as np
import pytest

from algebra import Paraquaternion
from poly import FueterTerm, PQPolyMap, RealPoly4, Side, fueter_sum


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def rand_fraction(rng):
    def make(span: int = 9, den: int = 5) -> Fraction:
        return Fraction(int(rng.integers(-span, span + 1)), int(rng.integers(1, den + 1)))
    return make


@pytest.fixture
def rand_pq(rand_fraction):
    def make() -> Paraquaternion:
        return Paraquaternion(*(rand_fraction() for _ in range(4)))
    return make


@pytest.fixture
def rand_poly(rng, rand_fraction):
    def make(degree: int = 3, terms: int = 4) -> RealPoly4:
        out = []
        for _ in range(terms):
            exp = [0, 0, 0, 0]
            for _ in range(int(rng.integers(0, degree + 1))):
                exp[int(rng.integers(0, 4))] += 1
            out.append((tuple(exp), rand_fraction()))
        return RealPoly4(out)
    return make


@pytest.fixture
def rand_map(rand_poly):
    def make(degree: int = 3, terms: int = 4, imaginary: bool = False) -> PQPolyMap:
        comps = [rand_poly(degree, terms) for _ in range(4)]
        if imaginary:
            comps[0] = RealPoly4.zero()
        return PQPolyMap.from_components(comps)
    return make


@pytest.fixture
def rand_fueter(rng, rand_pq):
    """Random truncated Fueter sum regular on ``side``."""
    def make(side: Side, max_len: int = 4, max_terms: int = 30) -> PQPolyMap:
        terms = []
        for _ in range(int(rng.integers(1, max_terms + 1))):
            length = int(rng.integers(1, max_len + 1))
            indices = tuple(int(a) for a in rng.integers(1, 4, size=length))
            terms.append(FueterTerm(indices, rand_pq(), side))
        return fueter_sum(terms)
    return make


@pytest.fixture
def rand_point(rand_fraction):
    def make():
        return tuple(rand_fraction() for _ in range(4))
    return make
