"""Misc code shared by the modules of the library."""

import math

import numpy as np

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


def __init(func):
    """Implement the equivalent of the GNU C __init initializer function.

    Positional arguments:
    func -- function to call at module import time.

    Returns:
    The same function.
    """
    func()
    return func


def wrap_phase(angle):
    """Wrap an angle into (-pi, pi].

    Positional arguments:
    angle -- float, radians.

    Returns:
    Float in the half-open interval (-pi, pi].
    """
    wrapped = math.remainder(angle, 2 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2 * math.pi
    return wrapped


def angular_distance(first, second):
    """Absolute difference between two angles, taking the 2pi period into account."""
    return abs(wrap_phase(first - second))


def unit_vector(vector, tolerance):
    """Validate a real 3-vector of unit length.

    Positional arguments:
    vector -- iterable of three numbers.
    tolerance -- allowed deviation of the norm from 1.

    Returns:
    numpy array of shape (3,), or None if the vector is not of unit length.
    """
    vector = np.asarray(vector, dtype=float)
    if vector.shape != (3,) or abs(np.linalg.norm(vector) - 1.0) > tolerance:
        return None
    return vector
