import os

import pytest


@pytest.fixture(autouse=True, scope="session")
def _isolated_eta_cache(tmp_path_factory):
    os.environ["SCV_CACHE_DIR"] = str(tmp_path_factory.mktemp("etaq-cache"))
    yield
