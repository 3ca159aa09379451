"""Beam splitter, dephasers and detector rates evaluated with dense Fock space matrices.

Per spin channel s the output annihilation operators are
    c_a^out(s) = t e^(i phi_a(s)) d_a(s) + r' e^(i phi_b(s)) d_b(s)
    c_b^out(s) = r e^(i phi_a(s)) d_a(s) + t' e^(i phi_b(s)) d_b(s)
and the detector D_i counts sum_s c_i^out(s)^dagger c_i^out(s).
"""

import cmath
import logging
import math

import numpy as np

from mzi.config import TOL_ALGEBRAIC, TOL_VISIBILITY
from mzi.errno_ import MZE_ASYMMETRIC, MZE_INVAL, MZE_NOT_DENSITY, MZE_NOT_LOSSLESS
from mzi.error import MziError
from mzi.fock.density import FockDensity
from mzi.fock.modes import ARM_A, ARM_B, mode_annihilation_matrix, ModeIndex, SPIN_DOWN, SPIN_UP, SPINS
from mzi.phase import PhaseReadout

_LOGGER = logging.getLogger(__name__)

DETECTOR_A = 'Da'
DETECTOR_B = 'Db'
DETECTORS = (DETECTOR_A, DETECTOR_B)


class BeamSplitter(object):
    """Four port amplitudes (t, r, t', r').

    Without explicit primed amplitudes t' = t* and r' = -r* (or r' = r for a symmetric splitter), which makes the
    splitter lossless whenever |t|^2 + |r|^2 = 1.

    Instance variables:
    t -- transmission amplitude from arm a to detector a.
    r -- reflection amplitude from arm a to detector b.
    tp -- transmission amplitude from arm b to detector b.
    rp -- reflection amplitude from arm b to detector a.
    lossless -- flag, the port matrix was checked to be unitary.
    symmetric -- flag, the amplitudes were checked to satisfy r' = r and t' = t*.
    """

    def __init__(self, t, r, tp=None, rp=None, lossless=False, symmetric=False):
        """Constructor."""
        if (tp is None) != (rp is None):
            raise MziError(MZE_INVAL, 'tp and rp must be given together')
        t, r = complex(t), complex(r)
        if tp is None:
            tp, rp = t.conjugate(), (r if symmetric else -r.conjugate())
        self.t, self.r, self.tp, self.rp = t, r, complex(tp), complex(rp)
        if not all(cmath.isfinite(x) for x in (self.t, self.r, self.tp, self.rp)):
            raise MziError(MZE_INVAL, 'beam splitter amplitudes must be finite')
        if lossless and not self.is_lossless():
            raise MziError(MZE_NOT_LOSSLESS, 'port matrix {0} is not unitary'.format(self.port_matrix().tolist()))
        if symmetric and not self.is_symmetric():
            raise MziError(MZE_ASYMMETRIC, "a symmetric splitter needs r' = r and t' = t*")
        self.lossless = bool(lossless)
        self.symmetric = bool(symmetric)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} t={2} r={3} tp={4} rp={5} lossless={6} symmetric={7}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.t, self.r, self.tp, self.rp, self.lossless,
            self.symmetric,
        )

    def __eq__(self, other):
        """Equal amplitudes and flags."""
        if not isinstance(other, BeamSplitter):
            return NotImplemented
        return ((self.t, self.r, self.tp, self.rp, self.lossless, self.symmetric) ==
                (other.t, other.r, other.tp, other.rp, other.lossless, other.symmetric))

    def __ne__(self, other):
        """Inverse of __eq__."""
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        """Hash of amplitudes and flags."""
        return hash((self.t, self.r, self.tp, self.rp, self.lossless, self.symmetric))

    def port_matrix(self):
        """[[t, r'], [r, t']], mapping (d_a, d_b) to (c_a^out, c_b^out) without dephasing."""
        return np.array([[self.t, self.rp], [self.r, self.tp]])

    def is_lossless(self, tolerance=TOL_ALGEBRAIC):
        """True if the port matrix is unitary, i.e. |t|^2 + |r|^2 = 1 and r* t + t'* r' = 0 and so on."""
        matrix = self.port_matrix()
        return bool(np.max(np.abs(matrix.dot(matrix.conj().T) - np.eye(2))) <= tolerance)

    def is_symmetric(self, tolerance=TOL_ALGEBRAIC):
        """True if r' = r and t' = t*."""
        return abs(self.rp - self.r) <= tolerance and abs(self.tp - self.t.conjugate()) <= tolerance


class DephaserSettings(object):
    """Phase shifts suffered along each arm by each spin component.

    Instance variables:
    phi_a_up -- radians.
    phi_a_down -- radians.
    phi_b_up -- radians.
    phi_b_down -- radians.
    """

    def __init__(self, phi_a_up=0.0, phi_a_down=0.0, phi_b_up=0.0, phi_b_down=0.0):
        """Constructor."""
        phases = [float(p) for p in (phi_a_up, phi_a_down, phi_b_up, phi_b_down)]
        if not all(math.isfinite(p) for p in phases):
            raise MziError(MZE_INVAL, 'dephaser phases must be finite, got {0}'.format(phases))
        self.phi_a_up, self.phi_a_down, self.phi_b_up, self.phi_b_down = phases

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} a=({2}, {3}) b=({4}, {5})>'.format(
            self.__class__.__module__, self.__class__.__name__, self.phi_a_up, self.phi_a_down, self.phi_b_up,
            self.phi_b_down,
        )

    def phases(self, spin):
        """(phi_a(s), phi_b(s)) tuple."""
        if spin == SPIN_UP:
            return self.phi_a_up, self.phi_b_up
        if spin == SPIN_DOWN:
            return self.phi_a_down, self.phi_b_down
        raise MziError(MZE_INVAL, 'unknown spin {0!r}'.format(spin))

    def delta_phi(self, spin):
        """Phase difference phi_b(s) - phi_a(s) between the arms."""
        phi_a, phi_b = self.phases(spin)
        return phi_b - phi_a

    def delta_phi_arm(self, arm):
        """Spin phase difference phi_x(up) - phi_x(down) along one arm."""
        if arm == ARM_A:
            return self.phi_a_up - self.phi_a_down
        if arm == ARM_B:
            return self.phi_b_up - self.phi_b_down
        raise MziError(MZE_INVAL, 'unknown arm {0!r}'.format(arm))


def output_operators(bs, deph):
    """Port matrices of both spin channels; spin is conserved.

    Positional arguments:
    bs -- BeamSplitter instance.
    deph -- DephaserSettings instance.

    Returns:
    Dictionary mapping SPIN_UP and SPIN_DOWN to 2x2 numpy arrays M with (c_a^out, c_b^out) = M (d_a, d_b).
    """
    result = dict()
    for spin in SPINS:
        phi_a, phi_b = deph.phases(spin)
        result[spin] = bs.port_matrix().dot(np.diag([cmath.exp(1j * phi_a), cmath.exp(1j * phi_b)]))
    return result


def output_annihilators(bs, deph):
    """Dense c_a^out(s), c_b^out(s) operators.

    Returns:
    Dictionary mapping (detector, spin) tuples to 16x16 complex numpy arrays.
    """
    result = dict()
    for spin, matrix in output_operators(bs, deph).items():
        d_a = mode_annihilation_matrix(ModeIndex(ARM_A, spin))
        d_b = mode_annihilation_matrix(ModeIndex(ARM_B, spin))
        for row, detector in enumerate(DETECTORS):
            result[(detector, spin)] = matrix[row, 0] * d_a + matrix[row, 1] * d_b
    return result


def detector_number_operator(bs, deph, which):
    """sum_s c_i^out(s)^dagger c_i^out(s) as a dense matrix."""
    if which not in DETECTORS:
        raise MziError(MZE_INVAL, 'unknown detector {0!r}, valid detectors: Da, Db'.format(which))
    annihilators = output_annihilators(bs, deph)
    return sum(annihilators[(which, s)].conj().T.dot(annihilators[(which, s)]) for s in SPINS)


def _density(rho):
    if isinstance(rho, FockDensity):
        return rho
    if isinstance(rho, np.ndarray):
        return FockDensity(rho)
    raise MziError(MZE_NOT_DENSITY, 'expected a FockDensity, got {0!r}'.format(type(rho)))


def detector_rate(rho, bs, deph, which):
    """Counting rate N(D_i) = Tr(rho sum_s c_i^out(s)^dagger c_i^out(s)).

    Positional arguments:
    rho -- FockDensity instance (a raw 16x16 array is validated first).
    bs -- BeamSplitter instance.
    deph -- DephaserSettings instance.
    which -- DETECTOR_A or DETECTOR_B.

    Returns:
    Float.
    """
    return _density(rho).expectation(detector_number_operator(bs, deph, which)).real


def coincidence_rate(rho, bs, deph):
    """Coincidence rate Tr(rho N(D_a) N(D_b)).

    For splitters that are not lossless the two number operators need not commute; the real part of the trace is
    returned, which is the expectation of their symmetrized product.

    Positional arguments:
    rho -- FockDensity instance.
    bs -- BeamSplitter instance.
    deph -- DephaserSettings instance.

    Returns:
    Float.
    """
    rho = _density(rho)
    value = rho.expectation(detector_number_operator(bs, deph, DETECTOR_A).dot(
        detector_number_operator(bs, deph, DETECTOR_B)))
    if abs(value.imag) > TOL_ALGEBRAIC:
        _LOGGER.debug('coincidence trace has the imaginary part %.3g, keeping the real part', value.imag)
    return value.real


def coherence(rho, spin):
    """Tr(rho d_a(s)^dagger d_b(s)), the arm coherence of one spin channel."""
    d_a = mode_annihilation_matrix(ModeIndex(ARM_A, spin))
    d_b = mode_annihilation_matrix(ModeIndex(ARM_B, spin))
    return _density(rho).expectation(d_a.T.dot(d_b))


def population(rho, arm, spin):
    """Tr(rho d^dagger d) for one mode."""
    d = mode_annihilation_matrix(ModeIndex(arm, spin))
    return _density(rho).expectation(d.T.dot(d)).real


def phase_readout(rho, deph):
    """Visibility and phase of the spin dephasing seen through the arm coherence of the source.

    The amplitude sum_s e^(i delta_phi(s)) Tr(rho d_a(s)^dagger d_b(s)) is referenced to its value without dephasing,
    so that the source phase drops out and an undephased source reads visibility 1, phase 0.

    Positional arguments:
    rho -- FockDensity instance.
    deph -- DephaserSettings instance.

    Returns:
    PhaseReadout instance, undefined for sources without arm coherence.
    """
    coherences = [(s, coherence(rho, s)) for s in SPINS]
    weight = sum(abs(z) for _, z in coherences)
    reference = sum(z for _, z in coherences)
    if weight < TOL_VISIBILITY or abs(reference) < TOL_VISIBILITY:
        _LOGGER.debug('source without arm coherence, phase readout undefined')
        return PhaseReadout(0)
    amplitude = sum(cmath.exp(1j * deph.delta_phi(s)) * z for s, z in coherences)
    return PhaseReadout(amplitude * reference.conjugate() / (abs(reference) * weight))
