"""Bit-exact text and binary volume formats.

Text::

    dims X Y Z
    <Y lines of X chars '0'/'1' for z = 0; line j holds y = j>
    <blank line>
    <slice z = 1> ...

Binary: ``b"BV3D"``, version byte ``0x01``, three little-endian uint32 dims,
then one byte per voxel (0x00 / 0x01) with x varying fastest, then y, then z.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .voxel_grid import BinaryVolume

MAGIC = b"BV3D"
VERSION = 1
_HEADER = struct.Struct("<4sBIII")


class FormatError(ValueError):
    pass


def emit_text(vol: BinaryVolume) -> str:
    nx, ny, nz = vol.dims
    arr = vol.array
    slices = []
    for z in range(nz):
        rows = ("".join("1" if v else "0" for v in arr[:, y, z]) for y in range(ny))
        slices.append("\n".join(rows))
    return f"dims {nx} {ny} {nz}\n" + "\n\n".join(slices) + "\n"


def parse_text(text: str) -> BinaryVolume:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty input")
    head = lines[0].split(" ")
    if len(head) != 4 or head[0] != "dims" or not all(h.isdigit() for h in head[1:]):
        raise FormatError(f"bad header line {lines[0]!r}")
    nx, ny, nz = map(int, head[1:])
    if min(nx, ny, nz) <= 0:
        raise FormatError("dims must be positive")
    body = lines[1:]
    expected = nz * ny + (nz - 1)
    if len(body) != expected:
        raise FormatError(f"expected {expected} lines after header, got {len(body)}")
    arr = np.zeros((nx, ny, nz), dtype=bool)
    for z in range(nz):
        start = z * (ny + 1)
        if z > 0 and body[start - 1] != "":
            raise FormatError(f"missing blank separator before slice {z}")
        for y in range(ny):
            row = body[start + y]
            if len(row) != nx or set(row) - {"0", "1"}:
                raise FormatError(f"slice {z} line {y}: expected {nx} chars of 0/1, got {row!r}")
            arr[:, y, z] = np.frombuffer(row.encode(), dtype=np.uint8) == ord("1")
    return BinaryVolume.from_array(arr)


def emit_binary(vol: BinaryVolume) -> bytes:
    nx, ny, nz = vol.dims
    payload = vol.array.astype(np.uint8).ravel(order="F").tobytes()
    return _HEADER.pack(MAGIC, VERSION, nx, ny, nz) + payload


def parse_binary(data: bytes) -> BinaryVolume:
    if len(data) < _HEADER.size:
        raise FormatError("file too short for header")
    magic, version, nx, ny, nz = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FormatError("bad magic bytes")
    if version != VERSION:
        raise FormatError(f"unsupported format version {version}")
    if min(nx, ny, nz) == 0:
        raise FormatError("dims must be positive")
    n = nx * ny * nz
    if len(data) != _HEADER.size + n:
        raise FormatError(f"expected {_HEADER.size + n} bytes, got {len(data)}")
    payload = np.frombuffer(data, dtype=np.uint8, offset=_HEADER.size)
    if payload.max(initial=0) > 1:
        raise FormatError("payload bytes must be 0x00 or 0x01")
    return BinaryVolume.from_array(payload.reshape((nx, ny, nz), order="F").astype(bool))


def sniff(data: bytes) -> str:
    return "binary" if data[:4] == MAGIC else "text"


def read_volume(path) -> tuple[BinaryVolume, str]:
    """Read either format; returns the volume and the detected format name."""
    data = Path(path).read_bytes()
    fmt = sniff(data)
    if fmt == "binary":
        return parse_binary(data), fmt
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError("not a BV3D file and not ASCII text") from None
    return parse_text(text), fmt


def write_volume(path, vol: BinaryVolume, fmt: str = "text") -> None:
    if fmt == "binary":
        Path(path).write_bytes(emit_binary(vol))
    elif fmt == "text":
        Path(path).write_bytes(emit_text(vol).encode("ascii"))
    else:
        raise ValueError(f"unknown format {fmt!r}")
