"""
Reading and writing volumes
===========================

The text format is a header line followed by one block of rows per z slice;
the binary format is a 17 byte header and one byte per voxel.
"""

import tempfile
from pathlib import Path

from thin3d.io import emit_binary, emit_text, read_volume, write_volume
from thin3d.verify import fixture

vol = fixture("box", 2, 2, 1)
print(emit_text(vol))
print(emit_binary(vol)[:17].hex(" "))

with tempfile.TemporaryDirectory() as d:
    for fmt in ("text", "binary"):
        path = Path(d) / f"box.{fmt}"
        write_volume(path, vol, fmt)
        back, detected = read_volume(path)
        print(path.name, path.stat().st_size, "bytes, detected", detected, "equal:", back == vol)
