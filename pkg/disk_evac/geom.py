"""
Planar geometry on the unit disk.

The frame is fixed: the disk is centered at the origin, the start point is
I = (0, 1) and its antipode I' = (0, -1). Robot R1 searches the boundary
counter-clockwise, R2 clockwise, and an arc position `s` is the arc length
from I measured in the searching robot's own direction.

Scalar functions work on `Point`, the `*_array` variants on numpy arrays of
shape (n,) or (n, 2) and are used by the scans.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np

logger = logging.getLogger(__name__)

#: collinearity / degeneracy tolerance of the kernel
EPS = 1e-12

TWO_PI = 2.0 * math.pi


class DegenerateGeometry(ValueError):
    pass


class Robot(enum.Enum):

    R1 = 'R1'
    R2 = 'R2'

    @property
    def sign(self) -> float:
        """+1 for counter-clockwise search, -1 for clockwise."""
        return 1.0 if self is Robot.R1 else -1.0

    @property
    def other(self) -> 'Robot':
        return Robot.R2 if self is Robot.R1 else Robot.R1


@dataclass(frozen=True)
class Point:
    """A position (or a direction) in the disk frame."""

    x: float
    y: float

    def __add__(self, other: 'Point') -> 'Point':
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: 'Point') -> 'Point':
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> 'Point':
        return Point(-self.x, -self.y)

    def __mul__(self, k: float) -> 'Point':
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: 'Point') -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: 'Point') -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, other: 'Point') -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def unit(self) -> 'Point':
        n = self.norm()
        if n <= EPS:
            raise DegenerateGeometry('Cannot normalize zero vector {0}'.format(self))
        return Point(self.x / n, self.y / n)

    def mirror(self) -> 'Point':
        """Reflection across the y-axis."""
        return Point(-self.x, self.y)

    def as_tuple(self) -> tuple:
        return (self.x, self.y)


ORIGIN = Point(0.0, 0.0)

START = Point(0.0, 1.0)

ANTIPODE = Point(0.0, -1.0)


def _theta(s, robot):
    return 0.5 * math.pi + robot.sign * s


def boundary_point(s: float, robot: Robot) -> Point:
    theta = _theta(s, robot)
    return Point(math.cos(theta), math.sin(theta))


def tangent(s: float, robot: Robot) -> Point:
    """Unit forward direction of the boundary search at arc position `s`."""
    theta = _theta(s, robot)
    return Point(-robot.sign * math.sin(theta), robot.sign * math.cos(theta))


def arc_of(p: Point, robot: Robot) -> float:
    """Arc position in [0, 2pi) of boundary point `p` for `robot`."""
    theta = math.atan2(p.y, p.x)
    return (robot.sign * (theta - 0.5 * math.pi)) % TWO_PI


def chord(x: float, y: float) -> float:
    """
    Distance between R1's boundary point at arc `x` and R2's at arc `y`.
    """
    return abs(2.0 * math.sin(0.5 * (x + y)))


def line_circle_second_intersection(a: Point, b: Point) -> Point:
    """
    The point where the line through `a` (on the circle) and `b` (strictly
    inside) leaves the unit circle again.
    """
    if b.norm() >= 1.0 - EPS:
        raise DegenerateGeometry('{0} is not strictly inside the disk'.format(b))
    v = b - a
    vv = v.dot(v)
    if vv <= EPS * EPS:
        raise DegenerateGeometry('Line through {0} and {1} is degenerate'.format(a, b))
    lam = -2.0 * a.dot(v) / vv
    return a + v * lam


def angle_between(u: Point, v: Point) -> float:
    """Unsigned angle in [0, pi] between two nonzero directions."""
    if u.norm() <= EPS or v.norm() <= EPS:
        raise DegenerateGeometry('Angle with zero vector ({0}, {1})'.format(u, v))
    return math.atan2(abs(u.cross(v)), u.dot(v))


def angle_at(a: Point, vertex: Point, b: Point) -> float:
    """The angle a-vertex-b."""
    return angle_between(a - vertex, b - vertex)


# arrays

def boundary_points_array(s, robot: Robot) -> np.ndarray:
    theta = 0.5 * np.pi + robot.sign * np.asarray(s, dtype=float)
    return np.stack([np.cos(theta), np.sin(theta)], axis=-1)


def tangents_array(s, robot: Robot) -> np.ndarray:
    theta = 0.5 * np.pi + robot.sign * np.asarray(s, dtype=float)
    return robot.sign * np.stack([-np.sin(theta), np.cos(theta)], axis=-1)


def chords_array(x, y) -> np.ndarray:
    return np.abs(2.0 * np.sin(0.5 * (np.asarray(x) + np.asarray(y))))


def angles_between_array(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    cross = u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]
    dot = u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1]
    return np.arctan2(np.abs(cross), dot)
