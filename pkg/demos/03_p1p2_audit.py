"""
Auditing the (p1, p2) cells
===========================

Connectivity can break when both p1 and p2 of a corner template are object
points.  The audit lists, per class D template, what the template demands of
those two cells.  A template is flagged unless one of them is pinned to
background.
"""

from thin3d import build_template_set
from thin3d.verify import audit_p1p2

for variant in ("original", "corrected-errata"):
    report = audit_p1p2(build_template_set(variant))
    print(report.to_text())
