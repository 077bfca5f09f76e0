"""Binary volume storage, lattice adjacency and direction names.

Axes: x grows east, y grows north, z grows up.  Reads outside the box are
background, so a bounded grid behaves like an object with finite support in
unbounded space.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

import numpy as np


class Point3(NamedTuple):
    x: int
    y: int
    z: int

    def __add__(self, other):  # type: ignore[override]
        return Point3(self.x + other[0], self.y + other[1], self.z + other[2])

    def __sub__(self, other):
        return Point3(self.x - other[0], self.y - other[1], self.z - other[2])

    def __neg__(self):
        return Point3(-self.x, -self.y, -self.z)

    def scale(self, k: int) -> "Point3":
        return Point3(k * self.x, k * self.y, k * self.z)


AXIS_DIRECTIONS = {
    "e": Point3(1, 0, 0),
    "w": Point3(-1, 0, 0),
    "n": Point3(0, 1, 0),
    "s": Point3(0, -1, 0),
    "u": Point3(0, 0, 1),
    "d": Point3(0, 0, -1),
}

DIAGONAL_DIRECTIONS = {
    "nu": Point3(0, 1, 1),
    "nd": Point3(0, 1, -1),
    "ne": Point3(1, 1, 0),
    "nw": Point3(-1, 1, 0),
    "su": Point3(0, -1, 1),
    "sd": Point3(0, -1, -1),
    "se": Point3(1, -1, 0),
    "sw": Point3(-1, -1, 0),
    "wu": Point3(-1, 0, 1),
    "wd": Point3(-1, 0, -1),
    "eu": Point3(1, 0, 1),
    "ed": Point3(1, 0, -1),
}

CORNER_DIRECTIONS = {
    ns + ew + ud: AXIS_DIRECTIONS[ns] + AXIS_DIRECTIONS[ew] + AXIS_DIRECTIONS[ud]
    for ns in "ns" for ew in "ew" for ud in "ud"
}

DIRECTIONS = {**AXIS_DIRECTIONS, **DIAGONAL_DIRECTIONS, **CORNER_DIRECTIONS}

OPPOSITE = {
    name: next(o for o, v in DIRECTIONS.items() if v == -off)
    for name, off in DIRECTIONS.items()
}

_LIMIT = {6: 1, 18: 2, 26: 3}


def direction(name: str) -> Point3:
    """Offset vector of a named direction (``"e"``, ``"nu"``, ...)."""
    try:
        return DIRECTIONS[name]
    except KeyError:
        raise ValueError(f"unknown direction {name!r}") from None


def squared_distance(p, q) -> int:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 + (p[2] - q[2]) ** 2


def _check_k(k: int) -> int:
    if k not in _LIMIT:
        raise ValueError(f"adjacency must be 6, 18 or 26, got {k!r}")
    return _LIMIT[k]


def neighbor_offsets(k: int) -> list[Point3]:
    """Offsets q - p of the k-neighborhood, in lexicographic order."""
    limit = _check_k(k)
    return [
        Point3(*o)
        for o in itertools.product((-1, 0, 1), repeat=3)
        if 0 < o[0] ** 2 + o[1] ** 2 + o[2] ** 2 <= limit
    ]


def neighbors(p, k: int) -> list[Point3]:
    """All lattice points k-adjacent to ``p``; not clipped to any volume."""
    p = Point3(*p)
    return [p + o for o in neighbor_offsets(k)]


class BinaryVolume:
    """Dense boolean voxel grid indexed ``[x, y, z]``.

    Equality and hashing are by value.  ``copy()`` returns an independent
    volume; mutation goes through ``set`` / ``__setitem__``.
    """

    __slots__ = ("_data",)

    def __init__(self, dims, data=None):
        dims = tuple(int(d) for d in dims)
        if len(dims) != 3 or any(d <= 0 for d in dims):
            raise ValueError(f"dims must be three positive integers, got {dims}")
        if data is None:
            self._data = np.zeros(dims, dtype=bool)
        else:
            arr = np.asarray(data)
            if arr.shape != dims:
                raise ValueError(f"data shape {arr.shape} does not match dims {dims}")
            self._data = arr.astype(bool, copy=True)

    @classmethod
    def from_array(cls, arr) -> "BinaryVolume":
        arr = np.asarray(arr)
        return cls(arr.shape, arr)

    @classmethod
    def from_points(cls, points: Iterable, dims=None, pad: int = 0) -> "BinaryVolume":
        """Build a volume from object points.

        With ``dims=None`` the box is fitted to the points plus ``pad``
        background voxels on every side, and points are shifted accordingly.
        """
        pts = np.array([tuple(p) for p in points], dtype=int).reshape(-1, 3)
        if dims is None:
            if len(pts) == 0:
                return cls((1 + 2 * pad,) * 3)
            lo = pts.min(axis=0) - pad
            pts = pts - lo
            dims = tuple(pts.max(axis=0) + 1 + pad)
        vol = cls(dims)
        for p in pts:
            vol.set(p, True)
        return vol

    @property
    def dims(self) -> tuple[int, int, int]:
        return self._data.shape  # type: ignore[return-value]

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the voxel array."""
        view = self._data.view()
        view.flags.writeable = False
        return view

    def copy(self) -> "BinaryVolume":
        return BinaryVolume(self.dims, self._data)

    def in_bounds(self, p) -> bool:
        return all(0 <= p[i] < self._data.shape[i] for i in range(3))

    def get(self, p) -> bool:
        if not self.in_bounds(p):
            return False
        return bool(self._data[p[0], p[1], p[2]])

    def set(self, p, value: bool) -> None:
        if not self.in_bounds(p):
            raise IndexError(f"point {tuple(p)} outside volume of dims {self.dims}")
        self._data[p[0], p[1], p[2]] = bool(value)

    __getitem__ = get
    __setitem__ = set

    def count(self) -> int:
        return int(self._data.sum())

    def points(self) -> list[Point3]:
        """Object points in lexicographic (x, y, z) order."""
        return [Point3(*map(int, p)) for p in np.argwhere(self._data)]

    def padded(self, pad: int) -> np.ndarray:
        return np.pad(self._data, pad, constant_values=False)

    def __eq__(self, other):
        if not isinstance(other, BinaryVolume):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self._data, other._data)

    def __hash__(self):
        return hash((self.dims, np.packbits(self._data).tobytes()))

    def __repr__(self):
        return f"BinaryVolume(dims={self.dims}, objects={self.count()})"


def count_object_neighbors(vol: BinaryVolume, p, k: int) -> int:
    if not vol.in_bounds(p):
        raise IndexError(f"point {tuple(p)} outside volume of dims {vol.dims}")
    return sum(vol.get(q) for q in neighbors(p, k))
