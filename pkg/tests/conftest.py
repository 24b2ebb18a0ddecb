import pytest

from ssg.corpus import default_corpus


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
