"""Tolerances and environment configuration.

All numeric tolerances of the library are stated here once. The default sweep engine can be chosen with the MZI_ENGINE
environment variable like so:
    MZI_ENGINE=oracle mzi run circuits/werner.mzi
"""

import logging
import os

from mzi.misc import __init

_LOGGER = logging.getLogger(__name__)

TOL_ALGEBRAIC = 1e-12  # Identities that hold exactly in exact arithmetic.
TOL_INTEGRATED = 1e-10  # Quantities produced by numerical integration.
TOL_RENORMALIZE = 1e-9  # Largest norm deviation silently renormalized.
TOL_OVERLAP = 1e-9  # Below this overlap modulus the geometric phase is undefined.
TOL_VISIBILITY = 1e-12  # Below this visibility a phase readout is undefined.
TOL_FINITE_DIFFERENCE = 1e-8
TOL_DENSITY_EIGEN = 1e-10  # Most negative eigenvalue tolerated in a density operator.
TOL_ROTATION = 1e-10
TOL_SURFACE = 1e-12  # Distance from the ball surface still counted as on the surface.

ENGINE_CLOSED = 'closed'
ENGINE_ORACLE = 'oracle'
ENGINE_BOTH = 'both'
ENGINES = (ENGINE_CLOSED, ENGINE_ORACLE, ENGINE_BOTH)

default_engine = ENGINE_BOTH


@__init
def init_default_engine():
    """Read MZI_ENGINE from the environment and update default_engine."""
    global default_engine
    engine = os.environ.get('MZI_ENGINE', '').lower()
    if not engine:
        default_engine = ENGINE_BOTH
    elif engine in ENGINES:
        default_engine = engine
    else:
        _LOGGER.warning('Unknown value for MZI_ENGINE, valid values: {closed | oracle | both}')
