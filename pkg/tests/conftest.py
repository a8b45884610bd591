import pytest

from tilingparity import counting


@pytest.fixture(autouse=True)
def _restore_w_max():
    saved = counting.W_MAX
    yield
    counting.W_MAX = saved
