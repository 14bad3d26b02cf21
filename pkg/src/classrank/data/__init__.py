"""Bundled example data.

See NOTES.md next to the files for transcription caveats.
"""

from importlib import resources


def _path(name: str):
    return resources.files(__package__).joinpath(name)


def scenario_fixture_path():
    """Six-scenario biased-rating bundle (n=10, rating 1 at index 7)."""
    return _path("biased_rating_scenarios.json")


def example_survey_path():
    """Scenario 1 of the bundle, as a single-survey document."""
    return _path("example_survey.json")


def helpfulness_counts_path():
    """Pre-counted dispersion rows, helpfulness variable, 91 instructors."""
    return _path("dispersion_helpfulness.csv")


def clarity_counts_path():
    """Pre-counted dispersion rows, clarity variable, 91 instructors."""
    return _path("dispersion_clarity.csv")
