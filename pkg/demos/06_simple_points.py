"""
Simple points
=============

A point is simple when removing it changes no local topology: the object
voxels around it form one 26-component and the nearby background forms one
6-component.  Corner templates only fire on simple points.
"""

import numpy as np

from thin3d import BinaryVolume
from thin3d.verify import fixture, is_simple

solid = BinaryVolume.from_array(np.ones((3, 3, 3), dtype=bool))
print("corner of a cube:", is_simple(solid, (0, 0, 0)))
print("centre of a cube:", is_simple(solid, (1, 1, 1)))

bar = fixture("line", 4, "x")
print("end of a bar:   ", is_simple(bar, (1, 1, 1)))
print("middle of a bar:", is_simple(bar, (2, 1, 1)))

# Removing the middle voxel of a 3x3 plate would punch a tunnel.
plate = BinaryVolume.from_array(np.ones((3, 3, 1), dtype=bool))
print("centre of a plate:", is_simple(plate, (1, 1, 0)))

# How common are simple points in random neighbourhoods?
rng = np.random.default_rng(0)
hits = 0
for _ in range(2000):
    cube = rng.random((3, 3, 3)) < 0.5
    cube[1, 1, 1] = True
    hits += is_simple(BinaryVolume.from_array(cube), (1, 1, 1))
print(f"simple in {hits / 20:.1f}% of random half-full neighbourhoods")
