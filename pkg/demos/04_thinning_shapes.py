"""
Thinning a few shapes
=====================

Every run stops at a fixpoint.  The report shows how many border points were
marked in each pass and how many were deleted in each round.
"""

import numpy as np

from thin3d import BinaryVolume, thin
from thin3d.verify import count_components, fixture

# A solid slab shrinks to a thin residue.
slab = fixture("box", 9, 7, 3)
out, report = thin(slab)
print(report.to_text())
print("slab", slab.count(), "->", out.count(), "voxels")

# A hollow sphere keeps its cavity: the result is still one object around
# one enclosed background region.
r = np.linalg.norm(np.indices((13, 13, 13)) - 6, axis=0)
shell = BinaryVolume.from_array((r > 3.5) & (r < 5.6))
out, report = thin(shell)
print("shell", shell.count(), "->", out.count(), "voxels,",
      count_components(out.array), "component,",
      count_components(~out.array, 6), "background regions")

# A bent tube thins to a curve; the end points are tails and are never eaten.
tube = np.zeros((12, 12, 5), dtype=bool)
tube[1:11, 1:4, 1:4] = True
tube[8:11, 1:11, 1:4] = True
out, _ = thin(BinaryVolume.from_array(tube))
print("tube ->", sorted(map(tuple, out.points())))
