from fractions import Fraction

from hypothesis import strategies as st

from deghyp.ring import LambdaPoly

small_ints = st.integers(min_value=-30, max_value=30)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))
nonzero_rationals = rationals.filter(lambda r: r != 0)
lambda_polys = st.lists(rationals, max_size=5).map(LambdaPoly)


def P(text):
    """Shorthand for building a LambdaPoly from its text form."""
    from deghyp.ring import parse_lambda_poly
    return parse_lambda_poly(text)
