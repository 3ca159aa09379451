"""Tests for mzi.so3."""

import math

import numpy as np
import pytest

from mzi.errno_ import MZE_AMBIGUOUS_LIFT, MZE_INVAL, MZE_NOT_CLOSED, MZE_TOO_FEW_SAMPLES
from mzi.error import MziError
from mzi.so3 import (classify, HOMOTOPY_NONTRIVIAL, HOMOTOPY_TRIVIAL, lift_path, path_from_rotation_schedule,
                     path_from_waypoints, point_to_su2, So3Path, So3Point)
from mzi.su2 import project_to_so3, rotation, So3Rotation, Su2Element

Z = (0, 0, 1)


def random_axis(rng):
    """Random unit 3-vector."""
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_closed_schedule(rng):
    """Random legs followed by the legs undoing them in reverse order, plus optional full turns."""
    legs = [(random_axis(rng), rng.uniform(-2 * math.pi, 2 * math.pi)) for _ in range(rng.randint(1, 4))]
    undo = [(axis, -angle) for axis, angle in reversed(legs)]
    turns = [(random_axis(rng), 2 * math.pi) for _ in range(rng.randint(0, 3))]
    return legs + turns + undo


def test_point_validation():
    """Points outside the ball or of the wrong shape are refused."""
    with pytest.raises(MziError) as exc:
        So3Point((4, 0, 0))
    assert MZE_INVAL == exc.value.error
    with pytest.raises(MziError):
        So3Point((1, 0))
    with pytest.raises(MziError):
        So3Point((float('nan'), 0, 0))


def test_point_surface():
    """Surface points and their canonical representative."""
    north, south = So3Point((0, 0, math.pi)), So3Point((0, 0, -math.pi))
    assert north.on_surface and south.on_surface
    assert 1 == north.hemisphere
    assert -1 == south.hemisphere
    assert np.array_equal(north.v, south.canonical().v)
    assert not So3Point((0, 0, 3)).on_surface
    assert 1 == So3Point((0, 0, -3)).hemisphere


def test_point_keeps_reached_representative(rng):
    """Antipodal surface points stay as given, share one canonical form and one rotation."""
    for _ in range(20):
        axis = random_axis(rng)
        reached = So3Point(-math.pi * axis)
        other = So3Point(math.pi * axis)
        assert np.array_equal(-math.pi * axis, reached.v)
        assert -1 == reached.hemisphere * other.hemisphere
        assert np.array_equal(reached.canonical().v, other.canonical().v)
        assert 1 == reached.canonical().hemisphere
        assert reached.rotation_matrix().isclose(other.rotation_matrix())


def test_point_to_su2_origin():
    """The origin is the identity."""
    assert Su2Element.identity() == point_to_su2(So3Point((0, 0, 0)))


def test_point_to_su2_pi_about_z():
    """pi z is -i sigma_z."""
    u = point_to_su2(So3Point((0, 0, math.pi)))
    assert np.allclose([[-1j, 0], [0, 1j]], u.matrix, atol=1e-15)


def test_point_to_su2_antipodes():
    """Antipodal surface points differ in sign and project onto the same rotation."""
    north, south = point_to_su2(So3Point((0, 0, math.pi))), point_to_su2(So3Point((0, 0, -math.pi)))
    assert north.isclose(-south)
    assert project_to_so3(north).isclose(project_to_so3(south))


def test_projection_consistency(rng):
    """project_to_so3(point_to_su2(p)) is the rotation matrix of p."""
    for _ in range(50):
        p = So3Point(random_axis(rng) * rng.uniform(0, math.pi))
        assert project_to_so3(point_to_su2(p)).isclose(p.rotation_matrix(), 1e-10)


def test_rotation_matrix():
    """Quarter turn about z maps x onto y."""
    r = So3Point((0, 0, 0.5 * math.pi)).rotation_matrix()
    assert np.allclose([0, 1, 0], r.matrix.dot([1, 0, 0]), atol=1e-15)


def test_path_validation():
    """Empty paths and false closed flags are refused."""
    with pytest.raises(MziError) as exc:
        So3Path([])
    assert MZE_TOO_FEW_SAMPLES == exc.value.error
    with pytest.raises(MziError) as exc:
        So3Path([So3Point((0, 0, 0)), So3Point((0, 0, 1))], closed=True)
    assert MZE_NOT_CLOSED == exc.value.error


def test_lift_constant_path():
    """A path resting at the origin."""
    result = lift_path(So3Path([So3Point((0, 0, 0))] * 5, closed=True))
    assert 1 == result.endpoint_sign
    assert 0 == result.jump_count
    assert 5 == len(result.su2_samples)


def test_lift_two_pi():
    """One full turn jumps once and ends on minus the identity."""
    result = lift_path(path_from_rotation_schedule([(Z, 2 * math.pi)], 33))
    assert 1 == result.jump_count
    assert -1 == result.endpoint_sign
    assert result.su2_samples[-1].isclose(-Su2Element.identity())


def test_lift_is_continuous():
    """Consecutive lifted samples stay close, including across the jump."""
    result = lift_path(path_from_rotation_schedule([(Z, 2 * math.pi)], 65))
    samples = result.su2_samples
    assert max(a.distance(b) for a, b in zip(samples, samples[1:])) < 0.2


def test_lift_too_coarse():
    """Steps of pi/2 or more are ambiguous."""
    path = So3Path([So3Point((0, 0, 0)), So3Point((0, 0, 2.0)), So3Point((0, 0, 0))], closed=True)
    with pytest.raises(MziError) as exc:
        lift_path(path)
    assert MZE_AMBIGUOUS_LIFT == exc.value.error


def test_classify_requires_closed():
    """Open paths have no homotopy class."""
    with pytest.raises(MziError) as exc:
        classify(path_from_rotation_schedule([(Z, math.pi)], 9))
    assert MZE_NOT_CLOSED == exc.value.error


def test_two_pi_about_random_axes(rng):
    """Full turns are nontrivial, double turns trivial."""
    for _ in range(20):
        axis = random_axis(rng)
        once = path_from_rotation_schedule([(axis, 2 * math.pi)], 33)
        twice = path_from_rotation_schedule([(axis, 2 * math.pi), (axis, 2 * math.pi)], 33)
        assert HOMOTOPY_NONTRIVIAL == classify(once)
        assert 1 == lift_path(once).jump_count
        assert HOMOTOPY_TRIVIAL == classify(twice)
        assert 2 == lift_path(twice).jump_count
        assert HOMOTOPY_TRIVIAL == classify(once.concat(once))


def test_half_turn_and_back():
    """pi about z followed by pi about -z is contractible."""
    path = path_from_rotation_schedule([(Z, math.pi), (Z, -math.pi)], 17)
    assert path.closed
    assert HOMOTOPY_TRIVIAL == classify(path)


def test_schedule_zero_rotation():
    """An empty rotation rests at the origin."""
    path = path_from_rotation_schedule([(Z, 0.0)], 5)
    assert path.closed
    assert all(0.0 == p.angle for p in path)


def test_schedule_errors():
    """Empty schedules and single sample legs are refused."""
    with pytest.raises(MziError) as exc:
        path_from_rotation_schedule([], 5)
    assert MZE_INVAL == exc.value.error
    with pytest.raises(MziError) as exc:
        path_from_rotation_schedule([(Z, 1.0)], 1)
    assert MZE_TOO_FEW_SAMPLES == exc.value.error


def test_schedule_net_rotation(rng):
    """The last sample is the net rotation of the schedule."""
    legs = [(random_axis(rng), rng.uniform(-5, 5)) for _ in range(3)]
    path = path_from_rotation_schedule(legs, 40)
    net = Su2Element.identity()
    for axis, angle in legs:
        net = rotation(axis, angle) * net
    assert path.samples[-1].rotation_matrix().isclose(project_to_so3(net), 1e-10)


def test_parity_law(rng):
    """endpoint_sign = (-1)^jump_count on random closed schedules, and refinement keeps the class."""
    for _ in range(200):
        schedule = random_closed_schedule(rng)
        path = path_from_rotation_schedule(schedule, 24)
        result = lift_path(path)
        assert result.endpoint_sign == (-1) ** result.jump_count
        assert classify(path) == classify(path_from_rotation_schedule(schedule, 47))


def test_concatenation_group_law(rng):
    """Classes multiply like signs under concatenation."""
    sign = {HOMOTOPY_TRIVIAL: 1, HOMOTOPY_NONTRIVIAL: -1}
    for _ in range(20):
        first = path_from_rotation_schedule(random_closed_schedule(rng), 24)
        second = path_from_rotation_schedule(random_closed_schedule(rng), 24)
        expected = sign[classify(first)] * sign[classify(second)]
        assert expected == sign[classify(first.concat(second))]


def test_waypoints_single_jump():
    """Origin to the north pole, jump to the south pole, back to the origin."""
    path = path_from_waypoints([(0, 0, 0), (0, 0, math.pi), (0, 0, -math.pi), (0, 0, 0)], 9)
    assert path.closed
    assert 1 + 8 + 1 + 8 == len(path)
    assert 1 == lift_path(path).jump_count
    assert HOMOTOPY_NONTRIVIAL == classify(path)


def test_waypoints_two_jumps():
    """Two jumps through different surface points can be contracted."""
    path = path_from_waypoints(
        [(0, 0, 0), (math.pi, 0, 0), (-math.pi, 0, 0), (0, -math.pi, 0), (0, math.pi, 0), (0, 0, 0)], 17)
    assert 2 == lift_path(path).jump_count
    assert HOMOTOPY_TRIVIAL == classify(path)


def test_waypoints_open_at_surface():
    """A path ending on the antipode of its start is closed as a rotation path."""
    path = path_from_waypoints([(0, 0, math.pi), (0, 0, 0), (0, 0, -math.pi)], 9)
    assert path.closed
    assert HOMOTOPY_NONTRIVIAL == classify(path)


def test_concat_mismatch():
    """Paths must meet."""
    first = path_from_waypoints([(0, 0, 0), (0, 0, 1)], 3)
    second = path_from_waypoints([(0, 1, 0), (0, 0, 0)], 3)
    with pytest.raises(MziError) as exc:
        first.concat(second)
    assert MZE_INVAL == exc.value.error


def test_rotation_matrix_of_surface_antipodes():
    """Antipodal surface points are the same rotation."""
    assert So3Point((math.pi, 0, 0)).rotation_matrix().isclose(So3Point((-math.pi, 0, 0)).rotation_matrix())
    assert So3Point((math.pi, 0, 0)).rotation_matrix().isclose(So3Rotation(np.diag([1, -1, -1])))
