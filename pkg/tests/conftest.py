import random

import pytest
from hypothesis import settings, strategies as st

from qhyper.algebra import AlgElt
from qhyper.coeffs import QRat
from qhyper.forms import WORDS, Form

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


laurent = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(QRat.from_terms)


@st.composite
def qrats(draw):
    """Ratios of small Laurent polynomials."""
    num = draw(laurent)
    den = draw(laurent.filter(bool))
    return num / den


@st.composite
def alg_elts(draw, max_exp=2, terms=3, degree=None):
    out = AlgElt()
    for _ in range(draw(st.integers(0, terms))):
        k = draw(st.integers(0, max_exp))
        l = draw(st.integers(0, max_exp))
        a = draw(st.integers(-max_exp, max_exp)) if degree is None else degree - k + l
        out = out + AlgElt.mono(a, k, l, draw(laurent))
    return out


@st.composite
def forms(draw, max_exp=1):
    out = Form()
    for w in draw(st.lists(st.sampled_from(WORDS), max_size=3)):
        out = out + Form.from_alg(draw(alg_elts(max_exp=max_exp, terms=2)), w)
    return out


@pytest.fixture
def rng():
    return random.Random(1234)
