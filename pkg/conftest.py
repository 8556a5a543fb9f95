"""Shared pytest fixtures for kiricap."""

import sys
from pathlib import Path

import pytest

# repository root on sys.path so `config` and `kiricap` import without installation
ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))

from kiricap.core.contracts import CamConfig, CamLaw, KirigamiParams  # noqa: E402


@pytest.fixture
def reference_params() -> KirigamiParams:
    return KirigamiParams(delta=0.5, l=3.0, gamma=40.0, h=7.5, w=50.0, t=0.05)


@pytest.fixture
def cam_config() -> CamConfig:
    return CamConfig(e=2.0, s0=4.0, roller_radius=0.8)


@pytest.fixture
def cycloidal() -> CamLaw:
    return CamLaw()


@pytest.fixture
def fixtures_dir() -> Path:
    return ROOT / "data" / "fixtures"


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240611)
