import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from invsemi.words import Letter

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=600, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def letters(alphabet="abcd"):
    return st.builds(Letter, st.sampled_from(alphabet), st.booleans())


def words(alphabet="abcd", min_size=1, max_size=10):
    return st.lists(letters(alphabet), min_size=min_size, max_size=max_size).map(tuple)


# One line per acceptance criterion, printed after the run whatever the outcome.
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
