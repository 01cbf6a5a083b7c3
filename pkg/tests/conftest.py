import os

import pytest
from hypothesis import settings

from polyak_lab.verification import NullCache, VerificationContext

settings.register_profile("polyak-lab", deadline=None, max_examples=50)
settings.load_profile("polyak-lab")


@pytest.fixture
def context():
    return VerificationContext(cache=NullCache())


@pytest.fixture
def isolated_cwd(tmp_path, monkeypatch):
    """An empty working directory and no VKFT_ variables."""
    monkeypatch.chdir(tmp_path)
    for name in list(os.environ):
        if name.startswith("VKFT_"):
            monkeypatch.delenv(name)
    return tmp_path
