from __future__ import annotations

import os

import pytest
from hypothesis import settings

from confpart import _kernels

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def kernel_backend(request, monkeypatch):
    monkeypatch.setenv(_kernels.ENV_BACKEND, request.param)
    return _kernels.BACKENDS[request.param]
