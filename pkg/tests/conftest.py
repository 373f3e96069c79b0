import os

from hypothesis import HealthCheck, settings, strategies as st

from permlab.perm import Permutation

settings.register_profile(
    "default", max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", 60)), deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def perms(min_size=0, max_size=8):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda w: Permutation(tuple(w)))
    )


# lines printed by the acceptance suite at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
