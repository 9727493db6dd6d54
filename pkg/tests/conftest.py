import os
from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from coupledrec.algebra import Mat2, Scalar
from coupledrec.decouple import CoupledSystem

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
scalars = st.builds(Scalar, rationals, rationals)
real_scalars = st.builds(Scalar, rationals)
mat2s = st.builds(Mat2, scalars, scalars, scalars, scalars)


@st.composite
def systems(draw, min_order=1, max_order=5):
    s = draw(st.integers(min_order, max_order))
    return CoupledSystem(
        tuple(draw(mat2s) for _ in range(s)),
        tuple(draw(scalars) for _ in range(s)),
        tuple(draw(scalars) for _ in range(s)),
    )


def M(rows):
    return Mat2.from_rows(rows)


TILE = [[1, 0], [1, 1]]
