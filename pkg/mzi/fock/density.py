"""Density operators on the Fock space and the sources feeding the interferometer."""

import math

import numpy as np
from scipy.linalg import eigvalsh

from mzi.config import TOL_ALGEBRAIC, TOL_DENSITY_EIGEN
from mzi.errno_ import MZE_NOT_DENSITY, MZE_UNSUPPORTED_SOURCE
from mzi.error import MziError
from mzi.fock.modes import ARM_A, ARM_B, FOCK_DIMENSION, FockVector, ModeIndex, SPIN_DOWN, SPIN_UP, SPINS

SOURCE_UNPOLARIZED = 'unpolarized'
SOURCE_SINGLET = 'singlet'
SOURCE_TRIPLET = 'triplet'
SOURCE_VACUUM = 'vacuum'
SOURCES = (SOURCE_UNPOLARIZED, SOURCE_SINGLET, SOURCE_TRIPLET, SOURCE_VACUUM)


class FockDensity(object):
    """Density operator on the 16-dimensional Fock space.

    Instance variables:
    matrix -- 16x16 complex numpy array, Hermitian, unit trace, positive semi-definite.
    """

    def __init__(self, matrix):
        """Constructor."""
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (FOCK_DIMENSION, FOCK_DIMENSION):
            raise MziError(MZE_NOT_DENSITY, 'density must be {0}x{0}, got shape {1}'.format(
                FOCK_DIMENSION, matrix.shape))
        asymmetry = np.max(np.abs(matrix - matrix.conj().T))
        if asymmetry > TOL_ALGEBRAIC:
            raise MziError(MZE_NOT_DENSITY, 'density is not Hermitian (deviation {0:.3g})'.format(asymmetry))
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > TOL_ALGEBRAIC:
            raise MziError(MZE_NOT_DENSITY, 'density trace is {0!r}'.format(trace))
        lowest = eigvalsh(0.5 * (matrix + matrix.conj().T))[0]
        if lowest < -TOL_DENSITY_EIGEN:
            raise MziError(MZE_NOT_DENSITY, 'density has the negative eigenvalue {0:.3g}'.format(lowest))
        self.matrix = matrix

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} purity={2:.6f}>'.format(self.__class__.__module__, self.__class__.__name__, self.purity())

    @classmethod
    def from_vector(cls, vector):
        """Pure state density of a FockVector."""
        return cls(vector.projector())

    def expectation(self, operator):
        """Tr(rho operator), a complex number."""
        return complex(np.trace(self.matrix.dot(operator)))

    def purity(self):
        """Tr(rho^2), 1 for pure states."""
        return float(np.trace(self.matrix.dot(self.matrix)).real)


def _single_particle(spin):
    """(|1_s, 0> - |0, 1_s>) / sqrt(2): one particle with spin s split over both arms."""
    return FockVector.from_creators([
        (1 / math.sqrt(2), [ModeIndex(ARM_A, spin)]),
        (-1 / math.sqrt(2), [ModeIndex(ARM_B, spin)]),
    ])


def _two_particle(relative_sign):
    """(|up_a down_b> + relative_sign |down_a up_b>) / sqrt(2), creators written spin up first.

    |up_a down_b> = c+(a, up) c+(b, down) |0> and |down_a up_b> = c+(b, up) c+(a, down) |0>.
    """
    return FockVector.from_creators([
        (1 / math.sqrt(2), [ModeIndex(ARM_A, SPIN_UP), ModeIndex(ARM_B, SPIN_DOWN)]),
        (relative_sign / math.sqrt(2), [ModeIndex(ARM_B, SPIN_UP), ModeIndex(ARM_A, SPIN_DOWN)]),
    ])


def build_source(kind):
    """Density operator of one of the supported sources.

    unpolarized is the equal mixture over both spins of one particle in the antisymmetric superposition of the two
    arms. singlet and triplet hold one particle per arm, (|up_a down_b> -+ |down_a up_b>) / sqrt(2) with the spin up
    creator on the left in both kets. Reordered arm a first, the triplet is the combination with total spin zero.

    Positional arguments:
    kind -- one of SOURCES.

    Returns:
    FockDensity instance.
    """
    if kind == SOURCE_UNPOLARIZED:
        return FockDensity(0.5 * sum(_single_particle(s).projector() for s in SPINS))
    if kind == SOURCE_SINGLET:
        return FockDensity.from_vector(_two_particle(-1))
    if kind == SOURCE_TRIPLET:
        return FockDensity.from_vector(_two_particle(1))
    if kind == SOURCE_VACUUM:
        return FockDensity.from_vector(FockVector.vacuum())
    raise MziError(MZE_UNSUPPORTED_SOURCE, 'unknown source {0!r}, valid sources: {1}'.format(kind, ', '.join(SOURCES)))
