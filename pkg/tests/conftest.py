from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from tiltwall import P3, QUADRIC, NumClass, VarietyModel

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive = st.fractions(min_value=Fraction(1, 12), max_value=8, max_denominator=12)
classes = st.builds(NumClass, rationals, rationals, rationals, rationals)
models = st.sampled_from([P3, QUADRIC, VarietyModel("hypersurface:5", 5)])


@pytest.fixture
def F():
    return Fraction
