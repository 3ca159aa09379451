"""Dynamical, Pancharatnam, geometric and mixed-state phases.

The mixed-state phase of an internal unitary U_i acting on a qubit in the state rho0 is the argument of Tr(U_i rho0),
its modulus being the fringe visibility. An interferometer applying a phase shift chi in one arm and U_i in the other
then shows the output intensity 1 + nu cos(chi - phi).
"""

import cmath
import logging
import math

import numpy as np
from scipy.integrate import trapezoid

from mzi.config import TOL_ALGEBRAIC, TOL_FINITE_DIFFERENCE, TOL_OVERLAP, TOL_RENORMALIZE, TOL_VISIBILITY
from mzi.errno_ import MZE_INVAL, MZE_NOT_INCREASING, MZE_NOT_NORMALIZED, MZE_TOO_FEW_SAMPLES
from mzi.error import MziError
from mzi.misc import PAULIS, unit_vector, wrap_phase
from mzi.su2 import evolve_first_qubit, evolve_second_qubit, MesState

_LOGGER = logging.getLogger(__name__)


class MesTrajectory(object):
    """Time stamped sequence of maximally entangled states.

    Instance variables:
    times -- numpy array of strictly increasing time stamps.
    states -- tuple of MesState instances.
    """

    def __init__(self, times, states):
        """Constructor."""
        times = np.asarray(times, dtype=float)
        states = tuple(states)
        if len(times) != len(states):
            raise MziError(MZE_INVAL, 'got {0} time stamps for {1} states'.format(len(times), len(states)))
        if len(states) < 2:
            raise MziError(MZE_TOO_FEW_SAMPLES, 'a trajectory needs at least 2 samples, got {0}'.format(len(states)))
        if not np.all(np.diff(times) > 0):
            raise MziError(MZE_NOT_INCREASING)
        if not all(isinstance(s, MesState) for s in states):
            raise MziError(MZE_INVAL, 'trajectory samples must be MesState instances')
        self.times = times
        self.states = states

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} samples={2} span=({3}, {4})>'.format(
            self.__class__.__module__, self.__class__.__name__, len(self.states), self.times[0], self.times[-1],
        )

    def __len__(self):
        """Number of samples."""
        return len(self.states)

    @property
    def samples(self):
        """List of (t, state) tuples."""
        return list(zip(self.times.tolist(), self.states))

    def vectors(self):
        """Two-qubit state vectors as a numpy array of shape (samples, 4)."""
        return np.array([s.vector for s in self.states])


class PhaseReadout(object):
    """Visibility and phase of a complex interference amplitude nu e^(i phi).

    Instance variables:
    amplitude -- the complex amplitude.
    visibility -- its modulus.
    phase -- its argument in (-pi, pi], or None when the visibility is below 1e-12 (undefined phase).
    """

    def __init__(self, amplitude):
        """Constructor."""
        self.amplitude = complex(amplitude)
        self.visibility = abs(self.amplitude)
        if self.visibility < TOL_VISIBILITY:
            self.phase = None
        else:
            self.phase = wrap_phase(cmath.phase(self.amplitude))

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} visibility={2} phase={3}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.visibility, self.phase,
        )

    @property
    def defined(self):
        """False at the crossings where the phase jumps."""
        return self.phase is not None

    def fringe(self, chi):
        """Interference term nu cos(chi - phi)."""
        return (cmath.exp(-1j * chi) * self.amplitude).real


class QubitMixedState(object):
    """Qubit density operator rho0 = (1 + r axis.sigma) / 2.

    Instance variables:
    r -- purity radius in [0, 1].
    axis -- real unit 3-vector (numpy array).
    """

    def __init__(self, r, axis):
        """Constructor."""
        if not 0 <= r <= 1:
            raise MziError(MZE_INVAL, 'purity radius must lie in [0, 1], got {0}'.format(r))
        unit = unit_vector(axis, TOL_ALGEBRAIC)
        if unit is None:
            raise MziError(MZE_INVAL, 'Bloch axis must be a real unit 3-vector, got {0!r}'.format(axis))
        self.r = float(r)
        self.axis = unit

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} r={2} axis={3}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.r, tuple(self.axis),
        )

    @property
    def matrix(self):
        """New 2x2 numpy array."""
        return 0.5 * (np.eye(2) + self.r * sum(c * sigma for c, sigma in zip(self.axis, PAULIS)))

    def eigensystem(self):
        """Closed form eigendecomposition.

        Returns:
        List of two (weight, eigenvector) tuples, the +axis eigenstate first. At r = 0 the eigenvectors still point
        along the stored axis.
        """
        polar = math.acos(max(-1.0, min(1.0, float(self.axis[2]))))
        azimuth = math.atan2(self.axis[1], self.axis[0])
        cos_half, sin_half = math.cos(0.5 * polar), math.sin(0.5 * polar)
        up = np.array([cos_half, cmath.exp(1j * azimuth) * sin_half])
        down = np.array([-cmath.exp(-1j * azimuth) * sin_half, cos_half])
        return [(0.5 * (1 + self.r), up), (0.5 * (1 - self.r), down)]


def mes_trajectory(state, times, propagators, second_qubit=False):
    """Evolve a state with a sequence of propagators, one per time stamp.

    Positional arguments:
    state -- initial MesState instance.
    times -- strictly increasing time stamps.
    propagators -- Su2Element instances U(t_k), e.g. from propagator_constant_axis() or propagators_precessing_axis().

    Keyword arguments:
    second_qubit -- act on the second qubit instead of the first.

    Returns:
    MesTrajectory instance.
    """
    evolve = evolve_second_qubit if second_qubit else evolve_first_qubit
    return MesTrajectory(times, [evolve(state, u) for u in propagators])


def dynamical_phase(traj):
    """Dynamical phase -i Integral <psi|dpsi/dt> dt.

    The derivative is estimated by second order finite differences on the time stamps, the integral by the trapezoid
    rule.

    Positional arguments:
    traj -- MesTrajectory instance.

    Returns:
    Float, the real part of the integral expression.
    """
    vectors = traj.vectors()
    derivatives = np.gradient(vectors, traj.times, axis=0)
    integrand = np.sum(vectors.conj() * derivatives, axis=1)
    return float(trapezoid(integrand, traj.times).imag)


def pancharatnam_overlap(a, b):
    """Overlap <a|b> of two maximally entangled states, which is always real.

    Positional arguments:
    a -- MesState instance.
    b -- MesState instance.

    Returns:
    Float Re(alpha_a* alpha_b + beta_a* beta_b).
    """
    return (a.alpha.conjugate() * b.alpha + a.beta.conjugate() * b.beta).real


def geometric_phase(traj):
    """Geometric phase arg<psi(0)|psi(T)> minus the dynamical phase.

    Positional arguments:
    traj -- MesTrajectory instance.

    Returns:
    Float 0 or pi for trajectories of maximally entangled states, or None when the end points are orthogonal
    (overlap modulus below 1e-9) and the phase is undefined.
    """
    overlap = pancharatnam_overlap(traj.states[0], traj.states[-1])
    if abs(overlap) < TOL_OVERLAP:
        _LOGGER.debug('geometric phase undefined, overlap %.3g at orthogonal crossing', overlap)
        return None
    total = math.pi if overlap < 0 else 0.0
    dynamical = dynamical_phase(traj)
    if abs(dynamical) < TOL_FINITE_DIFFERENCE:
        return total
    _LOGGER.debug('dynamical phase %.3g is not negligible', dynamical)
    return wrap_phase(total - dynamical)


def mixed_state_phase(u_internal, rho0):
    """Visibility and phase of Tr(U_i rho0).

    Positional arguments:
    u_internal -- Su2Element instance.
    rho0 -- QubitMixedState instance.

    Returns:
    PhaseReadout instance.
    """
    return PhaseReadout(np.trace(u_internal.matrix.dot(rho0.matrix)))


def interferometer_intensity(chi, u_internal, rho0):
    """Output intensity 1 + nu cos(chi - phi) of the mixed-state interferometer.

    Positional arguments:
    chi -- phase shift along the first arm.
    u_internal -- Su2Element applied along the second arm.
    rho0 -- QubitMixedState instance.

    Returns:
    Float.
    """
    return 1.0 + mixed_state_phase(u_internal, rho0).fringe(chi)


def interferometer_intensity_dense(chi, u_internal, rho0):
    """Same as interferometer_intensity() but evolving the full path x internal density matrix.

    Two 50:50 splitters enclose the operator |a><a| e^(i chi) x 1 + |b><b| x U_i; the returned value is twice the
    population leaving through port a.
    """
    splitter = np.kron(np.array([[1, 1], [1, -1]]) / math.sqrt(2), np.eye(2))
    arms = np.kron(np.diag([cmath.exp(1j * chi), 0]), np.eye(2)) + np.kron(np.diag([0, 1]), u_internal.matrix)
    total = splitter.dot(arms).dot(splitter)
    rho_in = np.kron(np.diag([1, 0]), rho0.matrix)
    rho_out = total.dot(rho_in).dot(total.conj().T)
    return 2 * np.trace(np.kron(np.diag([1, 0]), np.eye(2)).dot(rho_out)).real


def pure_state_phase(u_internal, k):
    """PhaseReadout of <k|U_i|k>.

    Positional arguments:
    u_internal -- Su2Element instance.
    k -- unit 2-vector, the internal state.

    Returns:
    PhaseReadout instance.
    """
    k = np.asarray(k, dtype=complex)
    norm = np.linalg.norm(k)
    if k.shape != (2,) or abs(norm - 1.0) > TOL_RENORMALIZE:
        raise MziError(MZE_NOT_NORMALIZED, 'internal state must be a unit 2-vector')
    k = k / norm
    return PhaseReadout(np.vdot(k, u_internal.matrix.dot(k)))


def pure_state_profile(chi, u_internal, k):
    """Output intensity 1 + |<k|U_i|k>| cos(chi - arg<k|U_i|k>) for a pure internal state.

    A vanishing matrix element gives the flat profile 1.
    """
    readout = pure_state_phase(u_internal, k)
    if not readout.defined:
        _LOGGER.debug('pure state profile flat: <k|U|k> vanishes')
        return 1.0
    return 1.0 + readout.visibility * math.cos(chi - readout.phase)


def mixture_profile(chi, u_internal, rho0):
    """Weighted sum of pure_state_profile() over the eigenstates of rho0.

    Positional arguments:
    chi -- phase shift along the first arm.
    u_internal -- Su2Element instance.
    rho0 -- QubitMixedState instance.

    Returns:
    Float, equal to interferometer_intensity() by linearity of the trace.
    """
    return sum(weight * pure_state_profile(chi, u_internal, vector) for weight, vector in rho0.eigensystem())
