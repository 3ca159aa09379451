"""Tests for MZI_ENGINE handling and the shared helpers in mzi.misc."""

import math

import pytest

from mzi import config
from mzi.misc import angular_distance, unit_vector, wrap_phase


def test_default_engine():
    """Without MZI_ENGINE both engines run."""
    assert config.ENGINE_BOTH == config.default_engine


@pytest.mark.parametrize('mzi_engine', ['closed', 'oracle', 'both'], indirect=True)
def test_engine_from_environment(mzi_engine):
    """MZI_ENGINE picks the default engine."""
    assert mzi_engine == config.default_engine


@pytest.mark.parametrize('mzi_engine', ['ORACLE'], indirect=True)
def test_engine_case_insensitive(mzi_engine):
    """Upper case names are accepted."""
    assert config.ENGINE_ORACLE == config.default_engine


@pytest.mark.parametrize('mzi_engine', ['fastest'], indirect=True)
def test_engine_unknown(mzi_engine, log):
    """Unknown values keep the default and log a warning."""
    assert config.ENGINE_BOTH == config.default_engine
    assert 'init_default_engine: Unknown value for MZI_ENGINE, valid values: {closed | oracle | both}' == log[-1]


@pytest.mark.parametrize('angle,expected', [
    (0.0, 0.0),
    (math.pi, math.pi),
    (-math.pi, math.pi),
    (3.0, 3.0),
    (2 * math.pi + 0.5, 0.5),
    (-2 * math.pi - 0.5, -0.5),
])
def test_wrap_phase(angle, expected):
    """Angles land in (-pi, pi]."""
    assert abs(expected - wrap_phase(angle)) < 1e-12


def test_angular_distance():
    """Distances go the short way around."""
    assert abs(0.2 - angular_distance(math.pi - 0.1, -math.pi + 0.1)) < 1e-12
    assert abs(0.3 - angular_distance(0.1, 0.4)) < 1e-12


def test_unit_vector():
    """Only real unit 3-vectors pass."""
    assert [0.0, 0.6, 0.8] == list(unit_vector((0, 0.6, 0.8), 1e-12))
    assert unit_vector((0, 0, 2), 1e-12) is None
    assert unit_vector((1, 0), 1e-12) is None
