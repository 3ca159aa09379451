"""Tests for mzi.fock.closed_form against the dense oracle."""

import math

import numpy as np
import pytest

from mzi.errno_ import MZE_ASYMMETRIC, MZE_INVAL, MZE_NOT_LOSSLESS, MZE_UNSUPPORTED_SOURCE
from mzi.error import MziError
from mzi.fock.closed_form import (coincidence_singlet_closed_form, coincidence_triplet_closed_form, cross_phase,
                                  detector_rate_closed_form, detector_rate_expansion, normalized_coincidence,
                                  parity_coincidence_probability, phase_readout_closed_form, werner_dephasers,
                                  werner_rates, werner_splitter)
from mzi.fock.density import build_source, FockDensity
from mzi.fock.interferometer import (BeamSplitter, coincidence_rate, DephaserSettings, detector_rate,
                                     phase_readout)
from mzi.fock.modes import FOCK_DIMENSION
from mzi.misc import angular_distance


def random_density(rng):
    """Random full rank density on the whole Fock space."""
    g = rng.normal(size=(FOCK_DIMENSION, FOCK_DIMENSION)) + 1j * rng.normal(size=(FOCK_DIMENSION, FOCK_DIMENSION))
    rho = g.dot(g.conj().T)
    return FockDensity(rho / np.trace(rho).real)


def random_splitter(rng):
    """Four independent complex amplitudes, usually lossy."""
    t, r, tp, rp = rng.normal(size=4) + 1j * rng.normal(size=4)
    return BeamSplitter(t, r, tp=tp, rp=rp)


def random_symmetric_splitter(rng):
    """t = cos(theta) e^(i chi), r = i sin(theta)."""
    theta, chi = rng.uniform(0, 0.5 * math.pi), rng.uniform(-math.pi, math.pi)
    return BeamSplitter(math.cos(theta) * np.exp(1j * chi), 1j * math.sin(theta), lossless=True, symmetric=True)


def random_dephasers(rng):
    """Four random phases."""
    return DephaserSettings(*rng.uniform(-2 * math.pi, 2 * math.pi, size=4))


def oracle_rates(rho, bs, deph):
    """Both detector rates from the dense matrices."""
    return detector_rate(rho, bs, deph, 'Da'), detector_rate(rho, bs, deph, 'Db')


def test_expansion_matches_oracle(rng):
    """Populations and arm coherences fix the detector rates of any density."""
    for _ in range(30):
        rho, bs, deph = random_density(rng), random_splitter(rng), random_dephasers(rng)
        expected = oracle_rates(rho, bs, deph)
        actual = detector_rate_expansion(rho, bs, deph)
        assert abs(expected[0] - actual[0]) < 1e-10
        assert abs(expected[1] - actual[1]) < 1e-10


def test_unpolarized_closed_form_matches_oracle(rng):
    """Lossy or not, the unpolarized closed form is the oracle."""
    rho = build_source('unpolarized')
    for _ in range(100):
        bs, deph = random_splitter(rng), random_dephasers(rng)
        expected = oracle_rates(rho, bs, deph)
        actual = detector_rate_closed_form(bs, deph)
        assert abs(expected[0] - actual[0]) < 1e-10
        assert abs(expected[1] - actual[1]) < 1e-10


def test_closed_form_vacuum(rng):
    """Nothing in, nothing out."""
    assert (0.0, 0.0) == detector_rate_closed_form(random_splitter(rng), random_dephasers(rng), 'vacuum')


@pytest.mark.parametrize('source', ['singlet', 'triplet', 'laser'])
def test_closed_form_unsupported_source(source):
    """Only the unpolarized mixture and the vacuum have single detector closed forms."""
    with pytest.raises(MziError) as exc:
        detector_rate_closed_form(BeamSplitter(1, 0), DephaserSettings(), source)
    assert MZE_UNSUPPORTED_SOURCE == exc.value.error


def test_werner_splitter():
    """C = 1, A = 1/2."""
    bs = werner_splitter(1, 0.5)
    assert abs(1.3660254037844386 - bs.t) < 1e-12
    assert abs(0.7071067811865476 - bs.r) < 1e-12
    assert abs(-0.7071067811865476 - bs.tp) < 1e-12
    assert abs(0.3660254037844386 - bs.rp) < 1e-12
    assert abs(2 - (abs(bs.t) ** 2 + abs(bs.rp) ** 2)) < 1e-12
    assert abs(0.5 - abs(bs.t.conjugate() * bs.rp)) < 1e-12
    assert not bs.is_lossless()


@pytest.mark.parametrize('c,a', [(1, 2), (1, -0.5)])
def test_werner_splitter_errors(c, a):
    """The fringe amplitude is bounded by C."""
    with pytest.raises(MziError) as exc:
        werner_splitter(c, a)
    assert MZE_INVAL == exc.value.error


@pytest.mark.parametrize('delta', [0.0, 0.3])
def test_werner_rates_match_oracle(delta):
    """C - A cos(delta) cos(dphi) and A (1 + cos(delta) cos(dphi)) over two full periods."""
    rho, bs = build_source('unpolarized'), werner_splitter(1, 0.5)
    for dphi in np.linspace(0, 4 * math.pi, 1000):
        expected = werner_rates(1, 0.5, delta, dphi)
        actual = oracle_rates(rho, bs, werner_dephasers(delta, dphi))
        assert abs(expected[0] - actual[0]) < 1e-12
        assert abs(expected[1] - actual[1]) < 1e-12


def test_werner_rates_values():
    """delta = 0.3 at dphi = 0, and the reversed fringe at dphi = pi."""
    rate_a, rate_b = werner_rates(1, 0.5, 0.3, 0.0)
    assert abs(0.522332 - rate_a) < 1e-6
    assert abs(0.977668 - rate_b) < 1e-6
    rate_a, rate_b = werner_rates(1, 0.5, 0.3, math.pi)
    assert abs(1.477668 - rate_a) < 1e-6
    assert abs(0.022332 - rate_b) < 1e-6


def test_two_particle_closed_forms_match_oracle(rng):
    """Singlet and triplet coincidences for random symmetric lossless splitters."""
    singlet, triplet = build_source('singlet'), build_source('triplet')
    for _ in range(100):
        bs, deph = random_symmetric_splitter(rng), random_dephasers(rng)
        assert abs(coincidence_rate(singlet, bs, deph) - coincidence_singlet_closed_form(bs, deph)) < 1e-10
        assert abs(coincidence_rate(triplet, bs, deph) - coincidence_triplet_closed_form(bs, deph)) < 1e-10


def test_two_particle_closed_forms_need_symmetric_lossless():
    """Asymmetric or lossy splitters are refused."""
    with pytest.raises(MziError) as exc:
        coincidence_singlet_closed_form(BeamSplitter(0.6, 0.8), DephaserSettings())
    assert MZE_ASYMMETRIC == exc.value.error
    with pytest.raises(MziError) as exc:
        coincidence_triplet_closed_form(BeamSplitter(1.0, 1j, symmetric=True), DephaserSettings())
    assert MZE_NOT_LOSSLESS == exc.value.error


def test_parity_coincidence_probability():
    """Even jump counts vanish at phi = 0, odd ones at phi = pi."""
    assert 0.0 == parity_coincidence_probability(0.0, 0)
    assert 1.0 == parity_coincidence_probability(0.0, 1)
    assert abs(parity_coincidence_probability(math.pi, 1)) < 1e-15
    assert abs(0.5 - parity_coincidence_probability(0.5 * math.pi, 2)) < 1e-15


@pytest.mark.parametrize('n', [0, 1, 2, 3])
def test_normalized_coincidence(n):
    """The singlet complements the jump count probability, cos^2 for even n and sin^2 for odd n."""
    for phi in np.linspace(0, 2 * math.pi, 360):
        p = parity_coincidence_probability(phi, n)
        singlet = normalized_coincidence(phi, n, 'singlet')
        triplet = normalized_coincidence(phi, n, 'triplet')
        assert abs(1 - p - singlet) < 1e-12
        assert abs(p - triplet) < 1e-12
        expected = math.cos(0.5 * phi) ** 2 if n % 2 == 0 else math.sin(0.5 * phi) ** 2
        assert abs(expected - singlet) < 1e-12


def test_singlet_coincidence_values():
    """50:50 symmetric splitter: 3/4 at delta_phi_b = pi/3, nothing for odd n at delta_phi_b = 0."""
    bs = BeamSplitter(math.sqrt(0.5), 1j * math.sqrt(0.5), lossless=True, symmetric=True)
    singlet = build_source('singlet')
    deph = DephaserSettings(phi_b_up=math.pi / 3)
    assert abs(0.75 - coincidence_rate(singlet, bs, deph)) < 1e-12
    assert abs(0.75 - coincidence_singlet_closed_form(bs, deph)) < 1e-12
    for n in (1, 3):
        deph = DephaserSettings(phi_a_up=n * math.pi)
        assert abs(coincidence_rate(singlet, bs, deph)) < 1e-12
        assert abs(coincidence_singlet_closed_form(bs, deph)) < 1e-12
    deph = DephaserSettings(phi_a_up=2 * math.pi)
    assert abs(1 - coincidence_rate(singlet, bs, deph)) < 1e-12


def test_normalized_coincidence_unsupported():
    """Single particle sources have no coincidence profile."""
    with pytest.raises(MziError) as exc:
        normalized_coincidence(0.0, 0, 'unpolarized')
    assert MZE_UNSUPPORTED_SOURCE == exc.value.error


def test_phase_readout_closed_form_matches_oracle(rng):
    """Mixed-state phase of the dephasing against the dense arm coherence."""
    rho = build_source('unpolarized')
    for _ in range(100):
        deph = random_dephasers(rng)
        expected, actual = phase_readout(rho, deph), phase_readout_closed_form(deph)
        assert abs(expected.visibility - actual.visibility) < 1e-12
        assert expected.defined == actual.defined
        if actual.defined and actual.visibility > 1e-6:
            assert angular_distance(expected.phase, actual.phase) < 1e-9


def test_cross_phase():
    """pi for the unpolarized mixture, undefined for the two-particle sources."""
    assert angular_distance(math.pi, cross_phase(build_source('unpolarized'))) < 1e-12
    assert cross_phase(build_source('singlet')) is None
    assert cross_phase(build_source('vacuum')) is None
