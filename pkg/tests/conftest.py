import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from shiftedq.shapes import SkewShape, StrictPartition, basic_shapes

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_BASIC = basic_shapes(6)


@st.composite
def strict_partitions(draw, max_part: int = 7, max_len: int = 4):
    parts = draw(st.sets(st.integers(1, max_part), max_size=max_len))
    return StrictPartition(sorted(parts, reverse=True))


@st.composite
def skew_shapes(draw, max_part: int = 7, max_len: int = 4):
    """A valid skew shape; the inner partition is drawn part by part inside the outer."""
    lam = draw(strict_partitions(max_part, max_len))
    mu = []
    for i, part in enumerate(lam):
        upper = part if not mu else min(part, mu[-1] - 1)
        if upper < 1 or not draw(st.booleans()):
            break
        mu.append(draw(st.integers(1, upper)))
    return SkewShape(lam, StrictPartition(mu))


small_basic_shapes = st.sampled_from(SMALL_BASIC)
