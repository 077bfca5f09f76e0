"""Randomised connectivity checking of the thinning engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from ..templates import TemplateSet, build_template_set
from ..voxel_grid import BinaryVolume
from .fixtures import random_volume
from .topology import count_components


@dataclass(frozen=True)
class Violation:
    trial_seed: int
    pass_index: int
    round_index: int
    components_before: int
    components_after: int
    deleted: tuple = ()


@dataclass
class FuzzReport:
    variant: str
    trials: int
    seed: int
    dims: tuple
    density: float
    violations: list = field(default_factory=list)
    rounds_checked: int = 0

    def to_text(self) -> str:
        lines = [
            f"variant={self.variant}",
            f"trials={self.trials}",
            f"seed={self.seed}",
            "dims=%d %d %d" % tuple(self.dims),
            f"density={self.density}",
            f"rounds_checked={self.rounds_checked}",
            f"violations={len(self.violations)}",
        ]
        for v in self.violations:
            lines.append(f"violation trial_seed={v.trial_seed} pass={v.pass_index} "
                         f"round={v.round_index} before={v.components_before} "
                         f"after={v.components_after}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "variant": self.variant, "trials": self.trials, "seed": self.seed,
            "dims": list(self.dims), "density": self.density,
            "rounds_checked": self.rounds_checked,
            "violations": [
                {"trial_seed": v.trial_seed, "pass": v.pass_index, "round": v.round_index,
                 "before": v.components_before, "after": v.components_after,
                 "deleted": [list(p) for p in v.deleted]}
                for v in self.violations
            ],
        }


def check_volume(vol: BinaryVolume, tset: TemplateSet, trial_seed: int = -1):
    """Thin ``vol`` checking the 26-component count after every round.

    Returns ``(violations, rounds_checked)``.
    """
    from ..engine import thin

    found = []
    rounds = 0

    def observe(pass_index, round_index, before, deleted):
        nonlocal rounds
        rounds += 1
        if not deleted.any():
            return
        n0 = count_components(before)
        n1 = count_components(before & ~deleted)
        if n0 != n1:
            pts = tuple(tuple(map(int, p)) for p in np.argwhere(deleted))
            found.append(Violation(trial_seed, pass_index, round_index, n0, n1, pts))

    thin(vol, tset, observer=observe)
    return found, rounds


def trial_seeds(seed: int, trials: int) -> list[int]:
    return [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(trials)]


def fuzz_connectivity(tset, trials: int = 100, dims=(8, 8, 8), density: float = 0.4,
                      seed: int = 0, extra: Optional[Iterable[BinaryVolume]] = None) -> FuzzReport:
    """Random-volume connectivity check.  ``extra`` volumes are checked too
    (reported with trial seed -1)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0.0 < density < 1.0:
        raise ValueError("density must lie strictly between 0 and 1")
    if not isinstance(tset, TemplateSet):
        tset = build_template_set(tset)
    report = FuzzReport(tset.variant.value, trials, seed, tuple(dims), density)
    for s in trial_seeds(seed, trials):
        found, rounds = check_volume(random_volume(s, dims, density), tset, s)
        report.violations.extend(found)
        report.rounds_checked += rounds
    for vol in extra or ():
        found, rounds = check_volume(vol, tset, -1)
        report.violations.extend(found)
        report.rounds_checked += rounds
    return report
