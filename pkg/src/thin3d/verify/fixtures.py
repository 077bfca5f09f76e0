"""Named synthetic volumes."""

from __future__ import annotations

import numpy as np

from ..voxel_grid import BinaryVolume, Point3

# The seven-point chain a-b-c-d-e-f-g.  d's 6-neighbours c (west) and e (down)
# are both object; b and f are only linked through c, d, e.
FIG7_POINTS = {
    "a": Point3(1, 1, 1),
    "b": Point3(2, 2, 2),
    "c": Point3(2, 3, 3),
    "d": Point3(3, 3, 3),
    "e": Point3(3, 3, 2),
    "f": Point3(4, 4, 3),
    "g": Point3(5, 5, 4),
}
FIG7_DIMS = (7, 7, 6)

_AXES = {"x": 0, "y": 1, "z": 2}


def fig7() -> BinaryVolume:
    return BinaryVolume.from_points(FIG7_POINTS.values(), dims=FIG7_DIMS)


def _ring(origin, width: int, height: int, axes=(0, 2)) -> list[Point3]:
    """Outline of a ``width`` x ``height`` rectangle in the plane of ``axes``."""
    pts = []
    for i in range(width):
        for j in range(height):
            if i in (0, width - 1) or j in (0, height - 1):
                p = list(origin)
                p[axes[0]] += i
                p[axes[1]] += j
                pts.append(Point3(*p))
    return pts


FIG12_SHIFT = Point3(4, 4, 4)


def fig12_points() -> dict[str, list[Point3]]:
    """Two digit-zero loops joined by the seven-point bridge.

    The bridge ends a and g sit on the loops.  Coordinates are in the
    fig12 volume's frame (the bridge is shifted by ``FIG12_SHIFT``).
    """
    bridge = {k: p + FIG12_SHIFT for k, p in FIG7_POINTS.items()}
    a, g = bridge["a"], bridge["g"]
    left = _ring(a - (2, 0, 4), 3, 5, axes=(0, 2))
    right = _ring(g - (0, 0, 0), 3, 5, axes=(0, 2))
    return {"bridge": list(bridge.values()), "left": left, "right": right}


def fig12() -> BinaryVolume:
    pts = [p for group in fig12_points().values() for p in group]
    dims = tuple(int(max(p[i] for p in pts)) + 3 for i in range(3))
    return BinaryVolume.from_points(pts, dims=dims)


def single(dims=(3, 3, 3)) -> BinaryVolume:
    vol = BinaryVolume(dims)
    vol.set(tuple(d // 2 for d in dims), True)
    return vol


def line(n: int, axis: str = "x", pad: int = 1) -> BinaryVolume:
    if n < 1:
        raise ValueError("line length must be >= 1")
    ax = _AXES[axis]
    dims = [1 + 2 * pad] * 3
    dims[ax] = n + 2 * pad
    vol = BinaryVolume(dims)
    for i in range(n):
        p = [pad] * 3
        p[ax] = pad + i
        vol.set(p, True)
    return vol


def box(a: int, b: int, c: int, pad: int = 1) -> BinaryVolume:
    arr = np.zeros((a + 2 * pad, b + 2 * pad, c + 2 * pad), dtype=bool)
    arr[pad:pad + a, pad:pad + b, pad:pad + c] = True
    return BinaryVolume.from_array(arr)


def random_volume(seed: int, dims=(8, 8, 8), density: float = 0.4) -> BinaryVolume:
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    return BinaryVolume.from_array(rng.random(tuple(dims)) < density)


_FIXTURES = {
    "fig7": fig7,
    "fig12": fig12,
    "single": single,
    "line": line,
    "box": box,
    "random": random_volume,
}


def fixture(name: str, *args, **kwargs) -> BinaryVolume:
    try:
        make = _FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r} (known: {', '.join(_FIXTURES)})") from None
    return make(*args, **kwargs)
