"""Fermionic mode operators on the occupation-number basis.

Basis states are indexed by occupation bitmasks: bit m of the index is set when mode m is occupied. Modes are ordered
(a up, a down, b up, b down). Creation operators carry the sign (-1)^(number of occupied modes below m).
"""

import numpy as np

from mzi.config import TOL_RENORMALIZE
from mzi.errno_ import MZE_INVAL, MZE_NOT_NORMALIZED
from mzi.error import MziError

ARM_A = 'a'
ARM_B = 'b'
ARMS = (ARM_A, ARM_B)
SPIN_UP = 'up'
SPIN_DOWN = 'down'
SPINS = (SPIN_UP, SPIN_DOWN)

MODE_COUNT = 4
FOCK_DIMENSION = 2 ** MODE_COUNT


class ModeIndex(object):
    """One of the four modes.

    Instance variables:
    arm -- ARM_A or ARM_B.
    spin -- SPIN_UP or SPIN_DOWN.
    index -- linearized index 0..3.
    """

    def __init__(self, arm, spin):
        """Constructor."""
        if arm not in ARMS or spin not in SPINS:
            raise MziError(MZE_INVAL, 'unknown mode ({0!r}, {1!r})'.format(arm, spin))
        self.arm = arm
        self.spin = spin
        self.index = 2 * ARMS.index(arm) + SPINS.index(spin)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} arm={2} spin={3} index={4}>'.format(
            self.__class__.__module__, self.__class__.__name__, self.arm, self.spin, self.index,
        )

    def __eq__(self, other):
        """Modes are equal when their indexes are."""
        if not isinstance(other, ModeIndex):
            return NotImplemented
        return self.index == other.index

    def __ne__(self, other):
        """Inverse of __eq__."""
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        """Hash of the index."""
        return hash(self.index)

    @classmethod
    def from_index(cls, index):
        """Inverse of the linearization."""
        if index not in range(MODE_COUNT):
            raise MziError(MZE_INVAL, 'mode index must lie in 0..3, got {0!r}'.format(index))
        return cls(ARMS[index // 2], SPINS[index % 2])


MODES = tuple(ModeIndex.from_index(i) for i in range(MODE_COUNT))


def _creation(index):
    matrix = np.zeros((FOCK_DIMENSION, FOCK_DIMENSION))
    bit = 1 << index
    for occupation in range(FOCK_DIMENSION):
        if occupation & bit:
            continue
        sign = -1 if bin(occupation & (bit - 1)).count('1') % 2 else 1
        matrix[occupation | bit, occupation] = sign
    return matrix


_CREATION = tuple(_creation(i) for i in range(MODE_COUNT))


def mode_creation_matrix(m):
    """Creation operator c_m^dagger as a dense matrix.

    Positional arguments:
    m -- ModeIndex instance.

    Returns:
    New 16x16 real numpy array.
    """
    return _CREATION[m.index].copy()


def mode_annihilation_matrix(m):
    """Annihilation operator c_m, the transpose of the (real) creation matrix."""
    return _CREATION[m.index].T.copy()


def number_matrix(m):
    """Occupation number operator c_m^dagger c_m, diagonal."""
    return _CREATION[m.index].dot(_CREATION[m.index].T)


class FockVector(object):
    """Normalized state vector on the 16-dimensional Fock space.

    Instance variables:
    amplitudes -- numpy array of 16 complex amplitudes indexed by occupation bitmask.
    """

    def __init__(self, amplitudes):
        """Constructor."""
        amplitudes = np.asarray(amplitudes, dtype=complex)
        if amplitudes.shape != (FOCK_DIMENSION,):
            raise MziError(MZE_INVAL, 'Fock vector needs {0} amplitudes, got shape {1}'.format(
                FOCK_DIMENSION, amplitudes.shape))
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > TOL_RENORMALIZE:
            raise MziError(MZE_NOT_NORMALIZED, 'Fock vector norm is {0}'.format(norm))
        self.amplitudes = amplitudes / norm

    def __repr__(self):
        """repr() handler."""
        occupied = ['{0:04b}'.format(i)[::-1] for i in np.flatnonzero(self.amplitudes)]
        return '<{0}.{1} occupations={2}>'.format(self.__class__.__module__, self.__class__.__name__, occupied)

    @classmethod
    def vacuum(cls):
        """The empty state |0000>."""
        amplitudes = np.zeros(FOCK_DIMENSION, dtype=complex)
        amplitudes[0] = 1
        return cls(amplitudes)

    @classmethod
    def from_creators(cls, terms):
        """Superposition of products of creation operators applied to the vacuum.

        Positional arguments:
        terms -- iterable of (coefficient, modes) tuples; modes is a sequence of ModeIndex instances, the leftmost
            operator acting last.

        Returns:
        FockVector instance.
        """
        vacuum = cls.vacuum().amplitudes
        total = np.zeros(FOCK_DIMENSION, dtype=complex)
        for coefficient, modes in terms:
            state = vacuum
            for m in reversed(modes):
                state = _CREATION[m.index].dot(state)
            total = total + coefficient * state
        return cls(total)

    def projector(self):
        """Outer product |psi><psi| as a 16x16 numpy array."""
        return np.outer(self.amplitudes, self.amplitudes.conj())
