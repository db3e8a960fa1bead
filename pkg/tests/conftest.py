import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=2000, deadline=None)  # --hypothesis-profile=thorough
settings.load_profile("default")

# |v|, |f|, |r| < 0.6 keeps 1 - v^2 - f^2 + r^2 above 0.28
coord = st.floats(-0.6, 0.6, allow_nan=False)
unit_scale = st.floats(0.5, 5.0, allow_nan=False)


@st.composite
def natural_params(draw):
    return draw(coord), draw(coord), draw(coord)


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)
