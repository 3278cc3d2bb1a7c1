"""Shared test configuration: a deterministic hypothesis profile.

All property tests run derandomized so that the suite is reproducible in
CI and the acceptance run; deadlines are disabled because exact-arithmetic
examples have wildly varying cost.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("exact")
