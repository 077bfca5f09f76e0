"""Fully parallel thinning: mark border, delete matching non-tail points in
simultaneous rounds, release, repeat until a pass deletes nothing."""

from __future__ import annotations

import logging
from functools import lru_cache
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy import ndimage

from .tail_rules import NEAR_LINE_END_PAIRS
from .templates import TemplateSet, Variant, build_template_set
from .verify.topology import is_simple_bits
from .voxel_grid import AXIS_DIRECTIONS, BinaryVolume, Point3, neighbor_offsets

log = logging.getLogger(__name__)

DEFAULT_MAX_PASSES = 10_000


@dataclass
class PassRecord:
    pass_index: int
    marked_count: int
    rounds: list = field(default_factory=list)
    deleted_points: Optional[list] = None

    @property
    def deleted(self) -> int:
        return sum(self.rounds)


@dataclass
class ThinningReport:
    variant: Variant
    passes: list = field(default_factory=list)
    fixpoint_reached: bool = False

    @property
    def total_deleted(self) -> int:
        return sum(p.deleted for p in self.passes)

    @property
    def round_counts(self) -> list[list[int]]:
        return [list(p.rounds) for p in self.passes]

    def to_text(self) -> str:
        lines = [
            f"variant={self.variant.value}",
            f"passes={len(self.passes)}",
            f"total_deleted={self.total_deleted}",
            f"fixpoint_reached={str(self.fixpoint_reached).lower()}",
        ]
        for p in self.passes:
            rounds = ",".join(map(str, p.rounds))
            lines.append(f"pass={p.pass_index} marked={p.marked_count} rounds={rounds}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------

def border_mask(arr: np.ndarray) -> np.ndarray:
    """Object voxels with a background voxel (or the outside) in N26."""
    arr = np.asarray(arr, dtype=bool)
    interior = ndimage.binary_erosion(arr, structure=np.ones((3, 3, 3), bool), border_value=0)
    return arr & ~interior


def mark_border(vol: BinaryVolume) -> set[Point3]:
    return {Point3(*map(int, p)) for p in np.argwhere(border_mask(vol.array))}


class _Compiled:
    """Templates flattened to 0/1 matrices over one shared offset list."""

    def __init__(self, tset: TemplateSet):
        offs = set(neighbor_offsets(26))
        for t in tset.templates:
            offs.update(t.cells)
            offs.update(t.at_least_one_object)
        self.offsets = np.array(sorted(offs), dtype=np.intp)
        index = {tuple(o): i for i, o in enumerate(self.offsets.tolist())}
        k, n = len(self.offsets), len(tset.templates)
        self.obj = np.zeros((k, n), dtype=np.int32)
        self.bg = np.zeros((k, n), dtype=np.int32)
        self.q = np.zeros((k, n), dtype=np.int32)
        for j, t in enumerate(tset.templates):
            for o in t.objects:
                self.obj[index[o], j] = 1
            for o in t.backgrounds:
                self.bg[index[o], j] = 1
            for o in t.at_least_one_object:
                self.q[index[o], j] = 1
        self.n_obj = self.obj.sum(axis=0)
        self.has_q = self.q.sum(axis=0) > 0
        self.simple = np.array([t.requires_simple_center for t in tset.templates])
        self.ring = np.array([index[o] for o in neighbor_offsets(26)])
        self.six = {name: index[o] for name, o in AXIS_DIRECTIONS.items()}
        self.pad = max(int(np.abs(self.offsets).max()), 1)


_COMPILED: dict = {}


def _compiled(tset: TemplateSet) -> _Compiled:
    key = id(tset)
    if key not in _COMPILED:
        _COMPILED[key] = (tset, _Compiled(tset))
    return _COMPILED[key][1]


@lru_cache(maxsize=1 << 16)
def _simple_key(bits: bytes) -> bool:
    return is_simple_bits(tuple(b != 0 for b in bits))


def _decide_points(padded: np.ndarray, pts: np.ndarray, comp: _Compiled) -> np.ndarray:
    """Deletion decision for each row of ``pts`` (padded coordinates)."""
    if len(pts) == 0:
        return np.zeros(0, dtype=bool)
    idx = pts[:, None, :] + comp.offsets[None, :, :]
    vals = padded[idx[..., 0], idx[..., 1], idx[..., 2]]
    v = vals.astype(np.int32)
    ring = vals[:, comp.ring]
    count = ring.sum(axis=1)
    near = np.zeros(len(pts), dtype=bool)
    for pair in NEAR_LINE_END_PAIRS:
        a, b = sorted(pair)
        near |= vals[:, comp.six[a]] & vals[:, comp.six[b]]
    tail = (count == 1) | ((count == 2) & near)
    hit = ((v @ comp.obj) == comp.n_obj) & ((v @ comp.bg) == 0) & (((v @ comp.q) > 0) | ~comp.has_q)
    plain = hit[:, ~comp.simple].any(axis=1)
    out = plain & ~tail
    for i in np.flatnonzero(hit[:, comp.simple].any(axis=1) & ~plain & ~tail):
        out[i] = _simple_key(ring[i].astype(np.uint8).tobytes())
    return out


def _deletable(arr: np.ndarray, candidates: np.ndarray, tset: TemplateSet,
               workers: int = 1) -> np.ndarray:
    """Mask of candidates deletable in the snapshot ``arr``.

    Every decision reads only the snapshot, so splitting the candidates
    across threads cannot change the result.
    """
    comp = _compiled(tset)
    padded = np.pad(arr, comp.pad)
    pts = np.argwhere(candidates & arr)
    out = np.zeros(arr.shape, dtype=bool)
    if len(pts) == 0:
        return out
    if workers <= 1:
        keep = _decide_points(padded, pts + comp.pad, comp)
    else:
        chunks = np.array_split(pts + comp.pad, min(workers, len(pts)))
        with ThreadPoolExecutor(max_workers=workers) as ex:
            keep = np.concatenate(list(ex.map(lambda c: _decide_points(padded, c, comp), chunks)))
    sel = pts[keep]
    out[sel[:, 0], sel[:, 1], sel[:, 2]] = True
    return out


def deletion_round(vol: BinaryVolume, candidates, tset: TemplateSet,
                   workers: int = 1) -> set[Point3]:
    """Delete, simultaneously, every candidate that is not a tail point and
    matches some template in the pre-round snapshot.  Mutates ``vol``."""
    arr = np.array(vol.array)
    cand = np.zeros(arr.shape, dtype=bool)
    for p in candidates:
        cand[tuple(p)] = True
    cand &= arr
    dele = _deletable(arr, cand, tset, workers)
    pts = {Point3(*map(int, p)) for p in np.argwhere(dele)}
    for p in pts:
        vol.set(p, False)
    return pts


RoundObserver = Callable[[int, int, np.ndarray, np.ndarray], None]


def thin(vol: BinaryVolume, tset=Variant.CORRECTED_ERRATA, *,
         max_passes: int = DEFAULT_MAX_PASSES, marked_only: bool = True,
         workers: int = 1, record_points: bool = False,
         observer: Optional[RoundObserver] = None) -> tuple[BinaryVolume, ThinningReport]:
    """Thin ``vol`` to its fixpoint; the input volume is left untouched.

    ``observer(pass_index, round_index, before, deleted)`` is called after each
    round with the pre-round snapshot and the deleted mask.
    """
    if max_passes < 1:
        raise ValueError("max_passes must be >= 1")
    if not isinstance(tset, TemplateSet):
        tset = build_template_set(tset)
    arr = np.array(vol.array)
    report = ThinningReport(tset.variant)
    for pass_index in range(max_passes):
        marked = border_mask(arr) if marked_only else arr.copy()
        rec = PassRecord(pass_index, int(marked.sum()),
                         deleted_points=[] if record_points else None)
        round_index = 0
        while True:
            cand = marked & arr
            dele = _deletable(arr, cand, tset, workers) if cand.any() else np.zeros_like(arr)
            n = int(dele.sum())
            rec.rounds.append(n)
            if observer is not None:
                observer(pass_index, round_index, arr.copy(), dele)
            if record_points:
                rec.deleted_points.append(sorted(Point3(*map(int, p)) for p in np.argwhere(dele)))
            if n == 0:
                break
            arr &= ~dele
            round_index += 1
        report.passes.append(rec)
        if rec.deleted == 0:
            report.fixpoint_reached = True
            break
    else:
        log.warning("thinning stopped after %d passes without reaching a fixpoint", max_passes)
    return BinaryVolume.from_array(arr), report
