from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gradedq import catalog
from gradedq.polyring import Polynomial, RingSpec

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

R = catalog.R
R3 = RingSpec.from_pairs(("x", 1), ("y", 1), ("z", 1))

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
nonzero_coeffs = coeffs.filter(bool)


def monomials(nvars: int, max_exp: int = 3):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


@st.composite
def polys(draw, ring=R, max_terms=5, max_exp=3):
    terms = draw(st.dictionaries(monomials(ring.nvars, max_exp), coeffs, max_size=max_terms))
    return Polynomial(ring, terms)


@st.composite
def homogeneous_polys(draw, ring, degree, max_terms=4):
    """Homogeneous polynomial of the given weighted degree (may be zero)."""
    from gradedq.hilbert import monomials_of_degree
    monos = monomials_of_degree(ring, degree)
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=max_terms, unique=True)) \
        if monos else []
    cs = draw(st.lists(nonzero_coeffs, min_size=len(chosen), max_size=len(chosen)))
    return Polynomial(ring, dict(zip(chosen, cs)))


@st.composite
def homogeneous_ideal_gens(draw, ring=R3, max_gens=3, max_degree=6):
    out = []
    for _ in range(draw(st.integers(1, max_gens))):
        d = draw(st.integers(1, max_degree))
        p = draw(homogeneous_polys(ring, d, max_terms=3))
        if p:
            out.append(p)
    return out or [ring.var(ring.names[0])]


@pytest.fixture(scope="session")
def group():
    return catalog.mapping_class_action()


@pytest.fixture(scope="session")
def i2():
    return catalog.ideal_i2()


@pytest.fixture(scope="session")
def i1():
    return catalog.ideal_i1()


def frac(x):
    return Fraction(x)
