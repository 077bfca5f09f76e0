"""Topology oracles, template audit, fixtures and connectivity fuzzing."""

from .audit import P1P2AuditReport, P1P2Verdict, audit_p1p2
from .fixtures import FIG7_POINTS, box, fig7, fig12, fixture, line, random_volume, single
from .fuzz import FuzzReport, Violation, check_volume, fuzz_connectivity
from .topology import ComponentLabeling, count_components, is_simple, label_components

__all__ = [
    "ComponentLabeling", "FIG7_POINTS", "FuzzReport", "P1P2AuditReport", "P1P2Verdict",
    "Violation", "audit_p1p2", "box", "check_volume", "count_components", "fig7", "fig12",
    "fixture", "fuzz_connectivity", "is_simple", "label_components", "line",
    "random_volume", "single",
]
