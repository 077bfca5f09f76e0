"""Line-end / near-line-end classification of object points."""

from __future__ import annotations

import enum

import numpy as np
from scipy import ndimage

from .voxel_grid import AXIS_DIRECTIONS, BinaryVolume, Point3, neighbors


class TailClassification(enum.Enum):
    LINE_END = "line-end"
    NEAR_LINE_END = "near-line-end"
    NON_TAIL = "non-tail"


NEAR_LINE_END_PAIRS = (
    frozenset({"s", "e"}),
    frozenset({"s", "u"}),
    frozenset({"n", "w"}),
    frozenset({"u", "w"}),
    frozenset({"n", "d"}),
    frozenset({"e", "d"}),
)


def classify(vol: BinaryVolume, p) -> TailClassification:
    p = Point3(*p)
    if not vol.get(p):
        raise ValueError(f"{tuple(p)} is not an object point")
    nbrs = [q for q in neighbors(p, 26) if vol.get(q)]
    if len(nbrs) == 1:
        return TailClassification.LINE_END
    if len(nbrs) == 2:
        names = {name for name, off in AXIS_DIRECTIONS.items() if p + off in nbrs}
        if len(names) == 2 and frozenset(names) in NEAR_LINE_END_PAIRS:
            return TailClassification.NEAR_LINE_END
    return TailClassification.NON_TAIL


def is_tail(vol: BinaryVolume, p) -> bool:
    return classify(vol, p) is not TailClassification.NON_TAIL


_RING = np.ones((3, 3, 3), dtype=np.int16)
_RING[1, 1, 1] = 0


def tail_mask(arr: np.ndarray) -> np.ndarray:
    """Vectorised ``is_tail`` over every object voxel of a boolean array."""
    arr = np.asarray(arr, dtype=bool)
    count = ndimage.convolve(arr.astype(np.int16), _RING, mode="constant", cval=0)
    tail = arr & (count == 1)
    padded = np.pad(arr, 1)
    nx, ny, nz = arr.shape

    def at(name):
        o = AXIS_DIRECTIONS[name]
        return padded[1 + o[0]:1 + o[0] + nx, 1 + o[1]:1 + o[1] + ny, 1 + o[2]:1 + o[2] + nz]

    pair_hit = np.zeros(arr.shape, dtype=bool)
    for pair in NEAR_LINE_END_PAIRS:
        a, b = sorted(pair)
        pair_hit |= at(a) & at(b)
    return tail | (arr & (count == 2) & pair_hit)
