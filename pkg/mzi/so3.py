"""Closed paths in the SO(3) parameter ball and their homotopy class.

A rotation by an angle theta <= pi about the unit axis n is the point v = theta n of the solid ball of radius pi;
antipodal points of the surface are the same rotation. A closed path is contractible if and only if its continuous
lift to SU(2) returns to the starting element, and not if it ends on the negative of it. The lift changes sign every
time the path leaves the ball through the surface and re-enters at the antipodal point.
"""

import logging
import math

import numpy as np
from scipy.optimize import brentq

from mzi.config import TOL_ROTATION, TOL_SURFACE
from mzi.errno_ import MZE_AMBIGUOUS_LIFT, MZE_INVAL, MZE_NOT_CLOSED, MZE_TOO_FEW_SAMPLES
from mzi.error import BUG, MziError
from mzi.su2 import project_to_so3, rotation, So3Rotation, Su2Element

_LOGGER = logging.getLogger(__name__)

HOMOTOPY_TRIVIAL = 'trivial'
HOMOTOPY_NONTRIVIAL = 'nontrivial'

MAX_STEP_ANGLE = 0.5 * math.pi  # Largest rotation angle allowed between consecutive samples.


class So3Point(object):
    """Point of the radius pi ball, the rotation by |v| about v/|v|.

    v is stored as given and is not canonicalized: a surface point keeps the representative the path arrived at, so
    jumps show up as consecutive antipodal samples. canonical() returns the identified representative whose first
    non-zero coordinate is positive, and hemisphere tells which of the two v is. Both representatives are the same
    rotation and give the same rotation_matrix().

    Instance variables:
    v -- numpy array of shape (3,).
    """

    def __init__(self, v):
        """Constructor."""
        v = np.array(v, dtype=float)
        if v.shape != (3,) or not np.all(np.isfinite(v)):
            raise MziError(MZE_INVAL, 'ball point must be a finite 3-vector, got {0!r}'.format(v))
        if np.linalg.norm(v) > math.pi + TOL_SURFACE:
            raise MziError(MZE_INVAL, 'ball point lies outside the radius pi ball: |v| = {0}'.format(np.linalg.norm(v)))
        self.v = v

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} v={2}>'.format(self.__class__.__module__, self.__class__.__name__, tuple(self.v))

    @property
    def angle(self):
        """Rotation angle in [0, pi]."""
        return float(np.linalg.norm(self.v))

    @property
    def on_surface(self):
        """True for rotations by pi, whose antipodal point is the same rotation."""
        return abs(self.angle - math.pi) <= TOL_SURFACE

    @property
    def hemisphere(self):
        """+1 if this is the canonical representative, -1 if it is the antipodal one."""
        if not self.on_surface:
            return 1
        for coordinate in self.v:
            if coordinate:
                return 1 if coordinate > 0 else -1
        raise BUG('surface point without non-zero coordinate')

    def canonical(self):
        """Return the canonical representative (self unless this is a surface point in the negative hemisphere)."""
        return self if self.hemisphere > 0 else So3Point(-self.v)

    def quaternion(self):
        """Unit quaternion (w, x, y, z) = (cos(theta/2), sin(theta/2) n)."""
        theta = self.angle
        if not theta:
            return np.array([1.0, 0.0, 0.0, 0.0])
        return np.concatenate(([math.cos(0.5 * theta)], math.sin(0.5 * theta) * self.v / theta))

    def rotation_matrix(self):
        """So3Rotation of this point, from the quaternion."""
        w, x, y, z = self.quaternion()
        return So3Rotation([
            [1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)],
            [2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)],
            [2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)],
        ])


class So3Path(object):
    """Sampled path of ball points.

    Instance variables:
    samples -- tuple of So3Point instances.
    closed -- True when the first and last samples are the same rotation.
    """

    def __init__(self, samples, closed=False):
        """Constructor."""
        samples = tuple(samples)
        if not samples:
            raise MziError(MZE_TOO_FEW_SAMPLES, 'a path needs at least one sample')
        if closed and not samples[0].rotation_matrix().isclose(samples[-1].rotation_matrix()):
            raise MziError(MZE_NOT_CLOSED, 'first and last samples are different rotations')
        self.samples = samples
        self.closed = bool(closed)

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} samples={2} closed={3}>'.format(
            self.__class__.__module__, self.__class__.__name__, len(self.samples), self.closed,
        )

    def __len__(self):
        """Number of samples."""
        return len(self.samples)

    def __iter__(self):
        """Iterate over the samples."""
        return iter(self.samples)

    def concat(self, other):
        """Path running through self and then through other, which must start where self ends.

        Positional arguments:
        other -- So3Path instance.

        Returns:
        New So3Path instance, closed if both paths are.
        """
        if not self.samples[-1].rotation_matrix().isclose(other.samples[0].rotation_matrix()):
            raise MziError(MZE_INVAL, 'paths do not meet: the second path must start where the first one ends')
        return So3Path(self.samples + other.samples[1:], closed=self.closed and other.closed)


class LiftResult(object):
    """Continuous SU(2) lift of a path.

    Instance variables:
    su2_samples -- list of Su2Element instances, one per path sample.
    endpoint_sign -- +1 if the lift ends on its starting element, -1 if it ends on the negative.
    jump_count -- number of antipodal jumps of the path.
    """

    def __init__(self, su2_samples, endpoint_sign, jump_count):
        """Constructor."""
        self.su2_samples = su2_samples
        self.endpoint_sign = endpoint_sign
        self.jump_count = jump_count

    def __repr__(self):
        """repr() handler."""
        return '<{0}.{1} samples={2} endpoint_sign={3} jump_count={4}>'.format(
            self.__class__.__module__, self.__class__.__name__, len(self.su2_samples), self.endpoint_sign,
            self.jump_count,
        )


def _overlap(u, v):
    """Re Tr(u^dagger v) / 2, the scalar product of the two unit quaternions."""
    return (u.a.conjugate() * v.a + u.b.conjugate() * v.b).real


def point_to_su2(p):
    """SU(2) element cos(theta/2) I - i sin(theta/2) n.sigma of a ball point.

    Positional arguments:
    p -- So3Point instance.

    Returns:
    Su2Element instance, the identity at the origin.
    """
    theta = p.angle
    if not theta:
        return Su2Element.identity()
    return rotation(p.v / theta, theta)


def lift_path(path):
    """Lift a path to SU(2) continuously.

    Consecutive point_to_su2() values with a negative overlap straddle an antipodal jump; each jump flips the sign
    applied to the remaining samples. For closed paths ending on the antipodal representative of their first
    sample the closing identification counts as one more jump.

    Positional arguments:
    path -- So3Path instance.

    Returns:
    LiftResult instance.
    """
    samples = path.samples
    previous = point_to_su2(samples[0])
    lifted = [previous]
    sign, jumps = 1, 0
    for index in range(1, len(samples)):
        raw = point_to_su2(samples[index])
        overlap = _overlap(previous, raw)
        step = 2 * math.acos(min(1.0, abs(overlap)))
        if step >= MAX_STEP_ANGLE:
            raise MziError(MZE_AMBIGUOUS_LIFT, 'samples {0} and {1} are {2:.3f} rad apart'.format(
                index - 1, index, step))
        if overlap < 0:
            sign, jumps = -sign, jumps + 1
            if not (samples[index - 1].on_surface and samples[index].on_surface):
                _LOGGER.debug('lift sign flips between samples %d and %d away from the surface', index - 1, index)
        lifted.append(raw if sign > 0 else -raw)
        previous = raw
    if path.closed and _overlap(point_to_su2(samples[0]), point_to_su2(samples[-1])) < 0:
        jumps += 1
    endpoint_sign = 1 if _overlap(lifted[0], lifted[-1]) >= 0 else -1
    return LiftResult(lifted, endpoint_sign, jumps)


def classify(path):
    """Homotopy class of a closed path.

    Positional arguments:
    path -- closed So3Path instance.

    Returns:
    HOMOTOPY_TRIVIAL or HOMOTOPY_NONTRIVIAL.
    """
    if not path.closed:
        raise MziError(MZE_NOT_CLOSED)
    result = lift_path(path)
    if result.endpoint_sign != (-1) ** result.jump_count:
        raise BUG('endpoint sign {0} disagrees with {1} jumps'.format(result.endpoint_sign, result.jump_count))
    return HOMOTOPY_TRIVIAL if result.endpoint_sign > 0 else HOMOTOPY_NONTRIVIAL


def _ball_point(u, sign):
    """Ball point of the representative sign * u, which must have a non-negative scalar part."""
    w = sign * u.a.real
    q = sign * np.array([-u.b.imag, -u.b.real, -u.a.imag])
    norm = np.linalg.norm(q)
    if not norm:
        return So3Point(np.zeros(3))
    theta = min(2 * math.atan2(norm, max(w, 0.0)), math.pi)
    return So3Point(theta * q / norm)


def _surface_crossing(leg, start, low, high):
    """Antipodal pair of ball points where the running product of a leg leaves the ball.

    Positional arguments:
    leg -- (axis, angle) tuple.
    start -- Su2Element at the beginning of the leg.
    low -- leg fraction before the crossing.
    high -- leg fraction after the crossing.

    Returns:
    Tuple of two So3Point instances, the arriving representative first.
    """
    axis, angle = leg
    scalar = lambda s: (rotation(axis, s * angle) * start).a.real
    before = scalar(low)
    crossing = low if not before else brentq(scalar, low, high, xtol=1e-15)
    u = rotation(axis, crossing * angle) * start
    q = np.array([-u.b.imag, -u.b.real, -u.a.imag])
    arriving = math.pi * (1 if before >= 0 else -1) * q / np.linalg.norm(q)
    _LOGGER.debug('surface crossing at leg fraction %.12f, v = %s', crossing, arriving)
    return So3Point(arriving), So3Point(-arriving)


def path_from_rotation_schedule(schedule, samples_per_leg):
    """Ball path of successive rotations, each applied on the left of the running product.

    Every leg (axis, angle) is sampled uniformly. Where the running product leaves the ball the path gets the exact
    surface point followed by its antipode.

    Positional arguments:
    schedule -- non-empty sequence of (axis, angle) legs, axis a real unit 3-vector, angle in radians.
    samples_per_leg -- samples per leg including both ends, at least 2.

    Returns:
    So3Path instance, closed when the net rotation is the identity.
    """
    schedule = list(schedule)
    if not schedule:
        raise MziError(MZE_INVAL, 'rotation schedule is empty')
    if samples_per_leg < 2:
        raise MziError(MZE_TOO_FEW_SAMPLES, 'at least 2 samples per leg are required, got {0}'.format(samples_per_leg))

    running = Su2Element.identity()
    points = [So3Point(np.zeros(3))]
    for leg in schedule:
        axis, angle = leg
        start, previous_fraction = running, 0.0
        for k in range(1, samples_per_leg):
            fraction = float(k) / (samples_per_leg - 1)
            u = rotation(axis, fraction * angle) * start
            before, after = running.a.real, u.a.real
            if (before >= 0) != (after >= 0):
                points.extend(_surface_crossing(leg, start, previous_fraction, fraction))
            points.append(_ball_point(u, 1 if after >= 0 else -1))
            running, previous_fraction = u, fraction

    closed = project_to_so3(running).isclose(So3Rotation(np.eye(3)), TOL_ROTATION)
    return So3Path(points, closed=closed)


def path_from_waypoints(waypoints, samples_per_segment, closed=None):
    """Ball path of straight segments between waypoints.

    Two consecutive waypoints that are antipodal surface points are joined by a jump instead of a segment.

    Positional arguments:
    waypoints -- sequence of at least 2 ball points (3-vectors).
    samples_per_segment -- samples per segment including both ends, at least 2.

    Keyword arguments:
    closed -- closed flag; by default set when the first and last waypoints are the same rotation.

    Returns:
    So3Path instance.
    """
    corners = [So3Point(w) for w in waypoints]
    if len(corners) < 2 or samples_per_segment < 2:
        raise MziError(MZE_TOO_FEW_SAMPLES, 'need at least 2 waypoints and 2 samples per segment')
    points = [corners[0]]
    for first, second in zip(corners, corners[1:]):
        if first.on_surface and second.on_surface and np.allclose(first.v, -second.v, atol=TOL_ROTATION):
            points.append(second)
            continue
        for k in range(1, samples_per_segment):
            fraction = float(k) / (samples_per_segment - 1)
            points.append(So3Point((1 - fraction) * first.v + fraction * second.v))
    if closed is None:
        closed = corners[0].rotation_matrix().isclose(corners[-1].rotation_matrix())
    return So3Path(points, closed=closed)
