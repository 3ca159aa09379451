"""Maximally entangled two-qubit states as SU(2) elements, and their propagators.

A two-qubit maximally entangled state (|00>, |01>, |10>, |11> basis)
    |alpha,beta> = (alpha|00> + beta|01> - beta*|10> + alpha*|11>) / sqrt(2)
is in one-to-one correspondence with the SU(2) matrix [[alpha, beta], [-beta*, alpha*]]. Acting on the first qubit with
U multiplies that matrix by U from the left, acting on the second qubit multiplies it by U^T from the right.
"""

import cmath
import logging
import math

import numpy as np

from mzi.config import TOL_ALGEBRAIC, TOL_RENORMALIZE, TOL_ROTATION
from mzi.errno_ import MZE_ACCURACY, MZE_INVAL, MZE_NOT_NORMALIZED
from mzi.error import MziError
from mzi.misc import PAULIS, unit_vector

_LOGGER = logging.getLogger(__name__)


def _normalized_pair(first, second, name):
    """Check the norm of a pair of complex amplitudes, renormalizing tiny deviations.

    Positional arguments:
    first -- complex number.
    second -- complex number.
    name -- class name used in log and error messages.

    Returns:
    Tuple of two complex numbers with |first|^2 + |second|^2 = 1.
    """
    first, second = complex(first), complex(second)
    norm_squared = abs(first) ** 2 + abs(second) ** 2
    deviation = abs(norm_squared - 1.0)
    if deviation > TOL_RENORMALIZE or not math.isfinite(norm_squared):
        raise MziError(MZE_NOT_NORMALIZED, '{0} norm deviates from 1 by {1:.3g}'.format(name, deviation))
    if deviation > TOL_ALGEBRAIC:
        _LOGGER.debug('%s: renormalizing, norm deviation %.3g', name, deviation)
    if deviation:
        norm = math.sqrt(norm_squared)
        first, second = first / norm, second / norm
    return first, second


class Su2Element(object):
    """Special unitary 2x2 matrix [[a, b], [-b*, a*]].

    Instance variables:
    a -- complex upper left entry.
    b -- complex upper right entry.
    """

    def __init__(self, a, b):
        """Constructor."""
        self._a, self._b = _normalized_pair(a, b, self.__class__.__name__)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} a={2} b={3}>'.format(self.__class__.__module__, self.__class__.__name__, self._a, self._b)

    def __mul__(self, other):
        """Group product self . other."""
        return Su2Element(self._a * other.a - self._b * other.b.conjugate(),
                          self._a * other.b + self._b * other.a.conjugate())

    def __neg__(self):
        """The other preimage of the same rotation, entries negated exactly."""
        return self._exact(-self._a, -self._b)

    @classmethod
    def _exact(cls, a, b):
        """Wrap entries derived exactly from a valid element, without renormalizing."""
        element = cls.__new__(cls)
        element._a, element._b = a, b
        return element

    def __eq__(self, other):
        """Exact equality of the entries."""
        if not isinstance(other, Su2Element):
            return NotImplemented
        return self._a == other.a and self._b == other.b

    def __ne__(self, other):
        """Inverse of __eq__."""
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        """Hash of the entries."""
        return hash((self._a, self._b))

    @classmethod
    def identity(cls):
        """Return the identity element."""
        return cls(1, 0)

    @classmethod
    def from_matrix(cls, matrix):
        """Build an element from a 2x2 array, checking the SU(2) layout.

        Positional arguments:
        matrix -- 2x2 array-like.

        Returns:
        Su2Element instance.
        """
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (2, 2):
            raise MziError(MZE_INVAL, 'SU(2) matrix must be 2x2, got shape {0}'.format(matrix.shape))
        a, b = matrix[0, 0], matrix[0, 1]
        if abs(matrix[1, 0] + b.conjugate()) > TOL_ALGEBRAIC or abs(matrix[1, 1] - a.conjugate()) > TOL_ALGEBRAIC:
            raise MziError(MZE_INVAL, 'matrix does not have the [[a, b], [-b*, a*]] layout')
        return cls(a, b)

    @property
    def a(self):
        """Upper left entry."""
        return self._a

    @property
    def b(self):
        """Upper right entry."""
        return self._b

    @property
    def matrix(self):
        """New 2x2 numpy array."""
        return np.array([[self._a, self._b], [-self._b.conjugate(), self._a.conjugate()]], dtype=complex)

    def dagger(self):
        """Return the inverse (conjugate transpose)."""
        return self._exact(self._a.conjugate(), -self._b)

    def transpose(self):
        """Return the transpose, which is again of the SU(2) layout."""
        return self._exact(self._a, -self._b.conjugate())

    def distance(self, other):
        """Frobenius distance to another element."""
        return math.sqrt(2 * (abs(self._a - other.a) ** 2 + abs(self._b - other.b) ** 2))

    def isclose(self, other, tolerance=TOL_ALGEBRAIC):
        """Entry-wise comparison within tolerance."""
        return abs(self._a - other.a) <= tolerance and abs(self._b - other.b) <= tolerance


class MesState(object):
    """Normalized pair (alpha, beta) labelling a maximally entangled two-qubit state.

    Inputs whose norm deviates from 1 by less than 1e-9 are renormalized, anything worse raises MZE_NOT_NORMALIZED.

    Instance variables:
    alpha -- complex amplitude.
    beta -- complex amplitude.
    """

    def __init__(self, alpha, beta):
        """Constructor."""
        self._alpha, self._beta = _normalized_pair(alpha, beta, self.__class__.__name__)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} alpha={2} beta={3}>'.format(
            self.__class__.__module__, self.__class__.__name__, self._alpha, self._beta,
        )

    def __eq__(self, other):
        """Exact equality of the amplitudes."""
        if not isinstance(other, MesState):
            return NotImplemented
        return self._alpha == other.alpha and self._beta == other.beta

    def __ne__(self, other):
        """Inverse of __eq__."""
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        """Hash of the amplitudes."""
        return hash((self._alpha, self._beta))

    @property
    def alpha(self):
        """First amplitude."""
        return self._alpha

    @property
    def beta(self):
        """Second amplitude."""
        return self._beta

    @property
    def vector(self):
        """Two-qubit state vector in the |00>, |01>, |10>, |11> basis."""
        return np.array([self._alpha, self._beta, -self._beta.conjugate(), self._alpha.conjugate()]) / math.sqrt(2)


class AxisAngleField(object):
    """Static field H = omega (sigma . n) / 2.

    Instance variables:
    omega -- angular frequency, rad per unit time.
    n -- real unit 3-vector (numpy array).
    """

    def __init__(self, omega, n):
        """Constructor."""
        axis = unit_vector(n, TOL_ALGEBRAIC)
        if axis is None:
            raise MziError(MZE_INVAL, 'field axis must be a real unit 3-vector, got {0!r}'.format(n))
        self.omega = float(omega)
        self.n = axis

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} omega={2} n={3}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.omega, tuple(self.n),
        )


class PrecessingField(object):
    """Field whose axis precesses about z: H(t) = omega0 (sigma . n(t)) / 2.

    n(t) = (sin theta cos omega t, sin theta sin omega t, cos theta).

    Instance variables:
    omega -- precession frequency of the axis.
    omega0 -- spin coupling frequency.
    theta -- polar angle of the axis, 0 <= theta <= pi.
    """

    def __init__(self, omega, omega0, theta):
        """Constructor."""
        if not 0 <= theta <= math.pi:
            raise MziError(MZE_INVAL, 'polar angle must lie in [0, pi], got {0}'.format(theta))
        self.omega = float(omega)
        self.omega0 = float(omega0)
        self.theta = float(theta)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} omega={2} omega0={3} theta={4}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.omega, self.omega0, self.theta,
        )

    def axis(self, t):
        """Return n(t) as a numpy array."""
        return np.array([math.sin(self.theta) * math.cos(self.omega * t),
                         math.sin(self.theta) * math.sin(self.omega * t),
                         math.cos(self.theta)])

    def derivative(self, t, column):
        """Right hand side of d(column)/dt = -i H(t) column.

        Positional arguments:
        t -- time.
        column -- tuple of two complex numbers.

        Returns:
        Tuple of two complex numbers.
        """
        half = 0.5 * self.omega0
        cos_theta, sin_theta = math.cos(self.theta), math.sin(self.theta)
        lowering = sin_theta * cmath.exp(-1j * self.omega * t)  # n_x - i n_y
        first, second = column
        return (-1j * half * (cos_theta * first + lowering * second),
                -1j * half * (lowering.conjugate() * first - cos_theta * second))


class So3Rotation(object):
    """Proper orthogonal 3x3 matrix.

    Instance variables:
    matrix -- numpy array of shape (3, 3).
    """

    def __init__(self, matrix):
        """Constructor."""
        matrix = np.array(matrix, dtype=float)
        if matrix.shape != (3, 3):
            raise MziError(MZE_INVAL, 'rotation must be 3x3, got shape {0}'.format(matrix.shape))
        if np.max(np.abs(matrix.T.dot(matrix) - np.eye(3))) > TOL_ROTATION:
            raise MziError(MZE_INVAL, 'rotation matrix is not orthogonal')
        if abs(np.linalg.det(matrix) - 1.0) > TOL_ROTATION:
            raise MziError(MZE_INVAL, 'rotation matrix does not have determinant +1')
        self.matrix = matrix

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} matrix={2}>'.format(self.__class__.__module__, self.__class__.__name__, self.matrix.tolist())

    def __mul__(self, other):
        """Composition self . other."""
        return So3Rotation(self.matrix.dot(other.matrix))

    def isclose(self, other, tolerance=TOL_ROTATION):
        """Entry-wise comparison within tolerance."""
        return bool(np.max(np.abs(self.matrix - other.matrix)) <= tolerance)


def mes_to_matrix(state):
    """Return the SU(2) element [[alpha, beta], [-beta*, alpha*]] of a state.

    Positional arguments:
    state -- MesState instance.

    Returns:
    Su2Element instance.
    """
    return Su2Element(state.alpha, state.beta)


def matrix_to_mes(u):
    """Inverse of mes_to_matrix()."""
    return MesState(u.a, u.b)


def propagator_constant_axis(field, t):
    """Propagator exp(-i omega t sigma.n / 2) of a static field.

    Positional arguments:
    field -- AxisAngleField instance.
    t -- elapsed time, t >= 0.

    Returns:
    Su2Element with a = cos(omega t/2) - i n_z sin(omega t/2), b = -i (n_x - i n_y) sin(omega t/2).
    """
    if t < 0:
        raise MziError(MZE_INVAL, 'elapsed time must be non-negative, got {0}'.format(t))
    return _axis_angle(field.n, field.omega * t)


def _axis_angle(n, angle):
    """cos(angle/2) I - i sin(angle/2) n.sigma for a validated unit axis n."""
    half = 0.5 * angle
    cos_half, sin_half = math.cos(half), math.sin(half)
    n_x, n_y, n_z = (float(c) for c in n)
    return Su2Element(complex(cos_half, -n_z * sin_half), -1j * complex(n_x, -n_y) * sin_half)


def rotation(axis, angle):
    """Su2Element rotating counterclockwise by angle (radians, any sign) about a unit axis.

    Positional arguments:
    axis -- real unit 3-vector.
    angle -- rotation angle.

    Returns:
    Su2Element instance.
    """
    n = unit_vector(axis, TOL_ALGEBRAIC)
    if n is None:
        raise MziError(MZE_INVAL, 'rotation axis must be a real unit 3-vector, got {0!r}'.format(axis))
    return _axis_angle(n, angle)


def _integrate(field, t, steps, t0=0.0):
    """Fixed step 4th order Runge-Kutta integration of the first propagator column.

    The column is renormalized after every step; the second column follows from the SU(2) layout.

    Positional arguments:
    field -- PrecessingField instance.
    t -- elapsed time.
    steps -- number of steps.

    Keyword arguments:
    t0 -- time at which the propagator equals the identity.

    Returns:
    Su2Element instance, the propagator from t0 to t0 + t.
    """
    h = float(t) / steps
    first, second = 1 + 0j, 0j
    for k in range(steps):
        start = t0 + k * h
        k1 = field.derivative(start, (first, second))
        k2 = field.derivative(start + 0.5 * h, (first + 0.5 * h * k1[0], second + 0.5 * h * k1[1]))
        k3 = field.derivative(start + 0.5 * h, (first + 0.5 * h * k2[0], second + 0.5 * h * k2[1]))
        k4 = field.derivative(start + h, (first + h * k3[0], second + h * k3[1]))
        first += h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        second += h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
        norm = math.sqrt(abs(first) ** 2 + abs(second) ** 2)
        first, second = first / norm, second / norm
    # Column one of [[a, b], [-b*, a*]] is (a, -b*).
    return Su2Element(first, -second.conjugate())


def propagator_precessing_axis(field, t, steps, tolerance=None):
    """Propagator of i dU/dt = (omega0/2)(sigma . n(t)) U with U(0) = I, integrated numerically.

    Positional arguments:
    field -- PrecessingField instance.
    t -- elapsed time, t >= 0.
    steps -- number of integration steps, at least 1.

    Keyword arguments:
    tolerance -- if given, the error is estimated by repeating the integration with twice the steps, and MZE_ACCURACY
        is raised when the estimate exceeds the tolerance.

    Returns:
    Su2Element instance computed with `steps` steps.
    """
    if steps < 1:
        raise MziError(MZE_INVAL, 'at least one integration step is required, got {0}'.format(steps))
    if t < 0:
        raise MziError(MZE_INVAL, 'elapsed time must be non-negative, got {0}'.format(t))
    u = _integrate(field, t, steps)
    if tolerance is None:
        return u
    finer = _integrate(field, t, 2 * steps)
    estimate = max(abs(u.a - finer.a), abs(u.b - finer.b)) * 16.0 / 15.0
    _LOGGER.debug('precessing propagator: %d steps, error estimate %.3g', steps, estimate)
    if estimate > tolerance:
        raise MziError(MZE_ACCURACY, '{0} steps give an error estimate of {1:.3g} above the tolerance {2:.3g}'.format(
            steps, estimate, tolerance))
    return u


def propagators_precessing_axis(field, times, steps_per_interval):
    """Cumulative propagators U(t_k) for every time stamp, integrating interval by interval.

    Positional arguments:
    field -- PrecessingField instance.
    times -- increasing sequence of non-negative times.
    steps_per_interval -- integration steps between consecutive time stamps (and from 0 to the first one).

    Returns:
    List of Su2Element instances, one per time stamp.
    """
    if steps_per_interval < 1:
        raise MziError(MZE_INVAL, 'at least one integration step is required, got {0}'.format(steps_per_interval))
    result = list()
    current, previous = Su2Element.identity(), 0.0
    for t in times:
        if t < previous:
            raise MziError(MZE_INVAL, 'time stamps must be non-negative and increasing')
        if t > previous:
            current = _integrate(field, t - previous, steps_per_interval, t0=previous) * current
        result.append(current)
        previous = t
    return result


def evolve_first_qubit(state, u):
    """Act with u on the first qubit: the state matrix becomes u . M.

    Positional arguments:
    state -- MesState instance.
    u -- Su2Element instance.

    Returns:
    New MesState instance.
    """
    return matrix_to_mes(u * mes_to_matrix(state))


def evolve_second_qubit(state, u):
    """Act with u on the second qubit: the state matrix becomes M . u^T."""
    return matrix_to_mes(mes_to_matrix(state) * u.transpose())


def project_to_so3(u):
    """Rotation of the adjoint action, R_ij = Tr(sigma_i u sigma_j u^dagger) / 2.

    u and -u give the same matrix bit for bit.

    Positional arguments:
    u -- Su2Element instance.

    Returns:
    So3Rotation instance.
    """
    matrix = u.matrix
    conjugated = [matrix.dot(sigma).dot(matrix.conj().T) for sigma in PAULIS]
    entries = [[0.5 * np.trace(PAULIS[i].dot(conjugated[j])).real for j in range(3)] for i in range(3)]
    return So3Rotation(entries)
