import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def _session_cache(tmp_path_factory):
    """Hermetic Groebner cache per test session.

    Set FERMAT_TEST_CACHE_DIR to reuse a warm cache across runs while
    developing; the default is a throwaway session directory.
    """
    directory = os.environ.get("FERMAT_TEST_CACHE_DIR")
    if not directory:
        directory = str(tmp_path_factory.mktemp("gbcache"))
    os.environ["FERMAT_CACHE_DIR"] = directory
    from fermatpow.groebner import set_cache_dir

    set_cache_dir(directory)
    yield
