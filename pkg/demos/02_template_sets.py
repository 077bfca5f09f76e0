"""
Browsing the template families
==============================
"""

from thin3d import build_template_set
from thin3d.templates import ERRATA_ADDED_PLANES, format_template

for variant in ("original", "corrected", "corrected-errata"):
    ts = build_template_set(variant)
    per_class = {c: len(ts.of_class(c)) for c in "ABCD"}
    print(variant, len(ts), per_class)

# A class A template: the point is removable when the plane above it is empty
# and the two voxels below it are object.
orig = build_template_set("original")
print(format_template(orig.by_id("a1")))

# Each corner template of the original set is split in three, fixing the
# two cells (p1, p2) that must never both be object.
corr = build_template_set("corrected")
for t in corr.of_class("D")[:3]:
    print(format_template(t), end="\n\n")

# The errata adds a plane to six of the split templates and replaces d7-2.
err = build_template_set("corrected-errata")
for tid in list(ERRATA_ADDED_PLANES) + ["d7-2"]:
    print(tid, "box before", corr.by_id(tid).box(), "after", err.by_id(tid).box())
