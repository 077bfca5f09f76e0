"""Connected components and the simple-point test."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import ndimage

from ..voxel_grid import BinaryVolume, Point3, neighbor_offsets

_STRUCTURE = {
    6: ndimage.generate_binary_structure(3, 1),
    18: ndimage.generate_binary_structure(3, 2),
    26: ndimage.generate_binary_structure(3, 3),
}


@dataclass(frozen=True)
class ComponentLabeling:
    k: int
    count: int
    labels: np.ndarray  # -1 on background, component id in [0, count) on objects

    def sizes(self) -> list[int]:
        """Component voxel counts, largest first."""
        if self.count == 0:
            return []
        return sorted(np.bincount(self.labels[self.labels >= 0]).tolist(), reverse=True)

    def label(self, p) -> int:
        return int(self.labels[tuple(p)])


def _structure(k: int) -> np.ndarray:
    try:
        return _STRUCTURE[k]
    except KeyError:
        raise ValueError(f"adjacency must be 6, 18 or 26, got {k!r}") from None


def count_components(arr: np.ndarray, k: int = 26) -> int:
    return int(ndimage.label(np.asarray(arr, dtype=bool), structure=_structure(k))[1])


def label_components(vol, k: int = 26) -> ComponentLabeling:
    arr = vol.array if isinstance(vol, BinaryVolume) else np.asarray(vol, dtype=bool)
    lab, n = ndimage.label(arr, structure=_structure(k))
    return ComponentLabeling(k, int(n), lab.astype(np.int64) - 1)


# --- simple points ---------------------------------------------------------
# The 26 neighbour offsets are indexed once; adjacency between them is
# precomputed so the test is a pair of tiny graph searches.

_OFFSETS = neighbor_offsets(26)
_INDEX = {o: i for i, o in enumerate(_OFFSETS)}


@lru_cache(maxsize=None)
def _adjacency(k: int, within: int) -> tuple:
    limit = {6: 1, 26: 3}[k]
    keep = {i for i, o in enumerate(_OFFSETS) if sum(c * c for c in o) <= within}
    adj = []
    for i, a in enumerate(_OFFSETS):
        row = []
        if i in keep:
            for j, b in enumerate(_OFFSETS):
                if j != i and j in keep and sum((x - y) ** 2 for x, y in zip(a, b)) <= limit:
                    row.append(j)
        adj.append(tuple(row))
    return tuple(adj)


_SIX = [i for i, o in enumerate(_OFFSETS) if sum(c * c for c in o) == 1]


def _components(members: set[int], adj, seeds) -> int:
    seen: set[int] = set()
    count = 0
    for s in seeds:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j in members and j not in seen:
                    seen.add(j)
                    stack.append(j)
    return count


def neighborhood_bits(vol: BinaryVolume, p) -> tuple[bool, ...]:
    p = Point3(*p)
    return tuple(vol.get(p + o) for o in _OFFSETS)


def is_simple_bits(bits) -> bool:
    """Simple-point test on the 26 neighbour values (object = True).

    Ordering of ``bits`` follows ``neighbor_offsets(26)``.
    """
    obj = {i for i, b in enumerate(bits) if b}
    if not obj:
        return False
    if _components(obj, _adjacency(26, 3), sorted(obj)) != 1:
        return False
    bg18 = {i for i, b in enumerate(bits) if not b and sum(c * c for c in _OFFSETS[i]) <= 2}
    seeds = [i for i in _SIX if i in bg18]
    if not seeds:
        return False
    return _components(bg18, _adjacency(6, 2), seeds) == 1


def is_simple(vol: BinaryVolume, p) -> bool:
    p = Point3(*p)
    if not vol.get(p):
        raise ValueError(f"{tuple(p)} is not an object point")
    return is_simple_bits(neighborhood_bits(vol, p))


def is_simple_array(arr: np.ndarray, p) -> bool:
    """``is_simple`` on a raw boolean array; cells outside it read as background."""
    arr = np.asarray(arr, dtype=bool)
    x, y, z = (int(c) + 1 for c in p)
    block = np.pad(arr, 1)[x - 1:x + 2, y - 1:y + 2, z - 1:z + 2]
    return is_simple_bits(tuple(bool(block[o[0] + 1, o[1] + 1, o[2] + 1]) for o in _OFFSETS))
