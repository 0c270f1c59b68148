from hypothesis import HealthCheck, settings

settings.register_profile(
    "k0hom",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("k0hom")
