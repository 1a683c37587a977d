import pytest

from koszulbench import groebner


@pytest.fixture(autouse=True)
def _groebner_post_check():
    # test builds re-verify the Buchberger criterion on every run
    old = groebner.POST_CHECK
    groebner.POST_CHECK = True
    yield
    groebner.POST_CHECK = old
