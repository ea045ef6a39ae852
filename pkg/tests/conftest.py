from fractions import Fraction

from hypothesis import settings, strategies as st

from orbitforge.linalg import Matrix
from orbitforge.scalars import Gaussian, Quaternion

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(Gaussian, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)
quaternions = st.builds(Quaternion, gaussians, gaussians)


def matrices(rows, cols, elements=gaussians):
    return st.lists(st.lists(elements, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(Matrix)


@st.composite
def square_matrices(draw, max_n=4, elements=gaussians):
    n = draw(st.integers(1, max_n))
    return draw(matrices(n, n, elements))


small_ints = st.integers(-3, 3)
small_int_gaussians = st.builds(Gaussian, small_ints, small_ints)


def frac(x):
    return Fraction(x)
