from hypothesis import HealthCheck, settings

# Deterministic property runs: same inputs on every invocation.
settings.register_profile(
    "deterministic",
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")
