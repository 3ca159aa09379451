"""Closed form counting rates, checked against the dense matrices of mzi.fock.interferometer.

For a single particle source the rate of detector D_a is
    N(D_a) = sum_s |t|^2 <n_a(s)> + |r'|^2 <n_b(s)> + 2 |t* r' <d_a^dagger d_b>| cos(alpha + beta(s) + delta_phi(s))
with alpha = arg(t* r') and beta(s) = arg<d_a(s)^dagger d_b(s)>; D_b follows with (r, t') and gamma = arg(r* t').
The unpolarized source has <n_a> = <n_b> = 1/4 and <d_a^dagger d_b> = -1/4 per spin, so beta = pi.
"""

import cmath
import math

from mzi.config import TOL_VISIBILITY
from mzi.errno_ import MZE_ASYMMETRIC, MZE_INVAL, MZE_NOT_LOSSLESS, MZE_UNSUPPORTED_SOURCE
from mzi.error import MziError
from mzi.fock.density import SOURCE_SINGLET, SOURCE_TRIPLET, SOURCE_UNPOLARIZED, SOURCE_VACUUM
from mzi.fock.interferometer import BeamSplitter, coherence, DephaserSettings, population
from mzi.fock.modes import ARM_A, ARM_B, SPINS
from mzi.phase import mixed_state_phase, PhaseReadout, QubitMixedState
from mzi.su2 import rotation


def detector_rate_expansion(rho, bs, deph):
    """Both detector rates from the populations and arm coherences of any source.

    Positional arguments:
    rho -- FockDensity instance.
    bs -- BeamSplitter instance.
    deph -- DephaserSettings instance.

    Returns:
    Tuple (N(D_a), N(D_b)) of floats.
    """
    alpha = cmath.phase(bs.t.conjugate() * bs.rp)
    gamma = cmath.phase(bs.r.conjugate() * bs.tp)
    rate_a = rate_b = 0.0
    for spin in SPINS:
        n_a, n_b = population(rho, ARM_A, spin), population(rho, ARM_B, spin)
        z = coherence(rho, spin)
        beta, delta_phi = cmath.phase(z), deph.delta_phi(spin)
        rate_a += abs(bs.t) ** 2 * n_a + abs(bs.rp) ** 2 * n_b
        rate_a += 2 * abs(bs.t * bs.rp * z) * math.cos(alpha + beta + delta_phi)
        rate_b += abs(bs.r) ** 2 * n_a + abs(bs.tp) ** 2 * n_b
        rate_b += 2 * abs(bs.r * bs.tp * z) * math.cos(gamma + beta + delta_phi)
    return rate_a, rate_b


def cross_phase(rho):
    """Source phase beta = arg sum_s Tr(rho d_a(s)^dagger d_b(s)), or None without arm coherence."""
    total = sum(coherence(rho, s) for s in SPINS)
    if abs(total) < TOL_VISIBILITY:
        return None
    return cmath.phase(total)


def detector_rate_closed_form(bs, deph, source=SOURCE_UNPOLARIZED):
    """Both detector rates for the unpolarized mixture (beta = pi) or the vacuum.

    Positional arguments:
    bs -- BeamSplitter instance, lossless or not.
    deph -- DephaserSettings instance.

    Keyword arguments:
    source -- SOURCE_UNPOLARIZED or SOURCE_VACUUM.

    Returns:
    Tuple (N(D_a), N(D_b)) of floats.
    """
    if source == SOURCE_VACUUM:
        return 0.0, 0.0
    if source != SOURCE_UNPOLARIZED:
        raise MziError(MZE_UNSUPPORTED_SOURCE, 'no closed form rates for the {0} source'.format(source))
    alpha = cmath.phase(bs.t.conjugate() * bs.rp)
    gamma = cmath.phase(bs.r.conjugate() * bs.tp)
    fringe_a = sum(math.cos(alpha + math.pi + deph.delta_phi(s)) for s in SPINS)
    fringe_b = sum(math.cos(gamma + math.pi + deph.delta_phi(s)) for s in SPINS)
    rate_a = 0.5 * (abs(bs.t) ** 2 + abs(bs.rp) ** 2) + 0.5 * abs(bs.t.conjugate() * bs.rp) * fringe_a
    rate_b = 0.5 * (abs(bs.r) ** 2 + abs(bs.tp) ** 2) + 0.5 * abs(bs.r.conjugate() * bs.tp) * fringe_b
    return rate_a, rate_b


def werner_splitter(c, a):
    """Splitter with |t|^2 + |r'|^2 = 2C, |t* r'| = A and r = sqrt(A), t' = -sqrt(A).

    t and r' are real and positive, so alpha = 0 and gamma = pi; together with beta = pi the unpolarized rates become
    N(D_a) = C - A cos(delta) cos(delta_phi) and N(D_b) = A (1 + cos(delta) cos(delta_phi)). The splitter is in
    general not lossless.

    Positional arguments:
    c -- the constant C, C >= A.
    a -- the fringe amplitude A >= 0.

    Returns:
    BeamSplitter instance.
    """
    if not 0 <= a <= c:
        raise MziError(MZE_INVAL, 'need 0 <= A <= C, got C = {0}, A = {1}'.format(c, a))
    root = math.sqrt(c * c - a * a)
    return BeamSplitter(t=math.sqrt(c + root), r=math.sqrt(a), tp=-math.sqrt(a), rp=math.sqrt(c - root))


def werner_dephasers(delta, delta_phi):
    """Arm b shifted by delta + delta_phi for spin up and delta - delta_phi for spin down, arm a untouched."""
    return DephaserSettings(phi_b_up=delta + delta_phi, phi_b_down=delta - delta_phi)


def werner_rates(c, a, delta, delta_phi):
    """(C - A cos(delta) cos(delta_phi), A (1 + cos(delta) cos(delta_phi)))."""
    fringe = math.cos(delta) * math.cos(delta_phi)
    return c - a * fringe, a * (1 + fringe)


def _two_particle_terms(bs, deph):
    if not bs.is_symmetric():
        raise MziError(MZE_ASYMMETRIC, "coincidence closed form needs r' = r and t' = t*")
    if not bs.is_lossless():
        raise MziError(MZE_NOT_LOSSLESS, 'coincidence closed form needs a lossless splitter')
    direct = abs(bs.t * bs.tp) ** 2 + abs(bs.r * bs.rp) ** 2
    exchange = 2 * (bs.t * bs.tp * (bs.r * bs.rp).conjugate()).real
    return direct, exchange * math.cos(deph.delta_phi_arm(ARM_B) - deph.delta_phi_arm(ARM_A))


def coincidence_singlet_closed_form(bs, deph):
    """Coincidence rate of the spin singlet, |t t'|^2 + |r r'|^2 - 2 Re(t t' r* r'*) cos(delta_phi_b - delta_phi_a).

    For lossless splitters t t' (r r')* = -|r t|^2, so this is |t|^4 + |r|^4 + 2 |r t|^2 cos(delta_phi_b -
    delta_phi_a), where delta_phi_x = phi_x(up) - phi_x(down). With delta_phi_a = n pi and a 50:50 splitter it is
    cos^2(delta_phi_b / 2) for even n and sin^2(delta_phi_b / 2) for odd n.

    Positional arguments:
    bs -- symmetric lossless BeamSplitter instance.
    deph -- DephaserSettings instance.

    Returns:
    Float.
    """
    direct, exchange = _two_particle_terms(bs, deph)
    return direct - exchange


def coincidence_triplet_closed_form(bs, deph):
    """Coincidence rate of the spin triplet, |t|^4 + |r|^4 - 2 |r t|^2 cos(delta_phi_b - delta_phi_a)."""
    direct, exchange = _two_particle_terms(bs, deph)
    return direct + exchange


def parity_coincidence_probability(phi, n):
    """Coincidence probability (1/2) |(-1)^n - cos(phi)| of a two-qubit phase gate sequence.

    Positional arguments:
    phi -- phase, radians.
    n -- integer number of antipodal jumps.

    Returns:
    Float in [0, 1].
    """
    return 0.5 * abs((-1) ** n - math.cos(phi))


def normalized_coincidence(phi, n, source=SOURCE_SINGLET):
    """Coincidence of a 50:50 symmetric splitter with delta_phi_a = n pi and delta_phi_b = phi, divided by 4 A^2.

    The singlet adds up with parity_coincidence_probability(phi, n) to 1, the triplet equals it.

    Positional arguments:
    phi -- spin phase difference along arm b.
    n -- integer, spin phase difference along arm a in units of pi.

    Keyword arguments:
    source -- SOURCE_SINGLET or SOURCE_TRIPLET.

    Returns:
    Float in [0, 1].
    """
    reflectivity = 0.5
    bs = BeamSplitter(math.sqrt(1 - reflectivity), 1j * math.sqrt(reflectivity), lossless=True, symmetric=True)
    deph = DephaserSettings(phi_a_up=n * math.pi, phi_b_up=phi)
    if source == SOURCE_SINGLET:
        value = coincidence_singlet_closed_form(bs, deph)
    elif source == SOURCE_TRIPLET:
        value = coincidence_triplet_closed_form(bs, deph)
    else:
        raise MziError(MZE_UNSUPPORTED_SOURCE, 'no two-particle coincidence for the {0} source'.format(source))
    return value / (4 * reflectivity ** 2)


def phase_readout_closed_form(deph):
    """Mixed-state phase of the spin dephasing acting on the unpolarized source.

    The internal unitary diag(e^(i delta_phi(up)), e^(i delta_phi(down))) is a global phase times a rotation about z;
    the maximally mixed spin state turns its trace into the mean of both phase factors.

    Positional arguments:
    deph -- DephaserSettings instance.

    Returns:
    PhaseReadout instance.
    """
    up, down = deph.delta_phi(SPINS[0]), deph.delta_phi(SPINS[1])
    mean, half_difference = 0.5 * (up + down), 0.5 * (up - down)
    readout = mixed_state_phase(rotation((0, 0, 1), -2 * half_difference), QubitMixedState(0, (0, 0, 1)))
    return PhaseReadout(cmath.exp(1j * mean) * readout.amplitude)
