"""
Why the original template set can disconnect an object
======================================================

A seven-voxel object (points a to g) is thinned with the original 38
templates and with the corrected 62.  The original set removes c, d and e
in the same round and the object falls apart.  The corrected set keeps d.
"""

from thin3d import thin
from thin3d.verify import count_components, fig7
from thin3d.verify.fixtures import FIG7_POINTS

names = {p: k for k, p in FIG7_POINTS.items()}
vol = fig7()
print("fig7 points:", {k: tuple(p) for k, p in FIG7_POINTS.items()})

for variant in ("original", "corrected"):
    out, report = thin(vol, variant, record_points=True)
    first = sorted(names[p] for p in report.passes[0].deleted_points[0])
    print(f"{variant:>10}: round 1 deletes {first}, "
          f"result has {count_components(out.array)} component(s)")

# The original run deletes d because its corner template lets d go while
# c and e, its only links to the rest, are deleted in the same round.
