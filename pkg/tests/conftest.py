import pytest

from bellmatch.bellinger import rank
from bellmatch.loader import load_career2019


@pytest.fixture(scope="session")
def career_problem():
    return load_career2019()


@pytest.fixture(scope="session")
def career_ranking(career_problem):
    return rank(career_problem)
