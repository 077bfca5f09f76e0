import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from thin3d.io import (
    FormatError, emit_binary, emit_text, parse_binary, parse_text, read_volume, write_volume,
)
from thin3d.voxel_grid import BinaryVolume

volumes = st.tuples(*[st.integers(1, 6)] * 3).flatmap(
    lambda shape: arrays(bool, shape)).map(BinaryVolume.from_array)


def test_text_layout():
    vol = BinaryVolume.from_points([(0, 0, 0), (2, 1, 0), (1, 0, 1)], dims=(3, 2, 2))
    assert emit_text(vol) == "dims 3 2 2\n100\n001\n\n010\n000\n"


def test_binary_layout():
    vol = BinaryVolume.from_points([(1, 0, 0), (0, 1, 1)], dims=(2, 2, 2))
    data = emit_binary(vol)
    assert data[:5] == b"BV3D\x01"
    assert data[5:17] == (2).to_bytes(4, "little") * 3
    assert data[17:] == bytes([0, 1, 0, 0, 0, 0, 1, 0])


@settings(max_examples=100, deadline=None)
@given(volumes)
def test_round_trips(vol):
    assert parse_text(emit_text(vol)) == vol
    assert parse_binary(emit_binary(vol)) == vol
    assert emit_text(parse_text(emit_text(vol))) == emit_text(vol)


@pytest.mark.parametrize("text", [
    "",
    "dims 2 2\n00\n00\n",
    "dims 2 1 1\n0\n",
    "dims 2 1 1\n02\n",
    "dims 2 1 2\n00\n00\n",
    "dims 2 1 2\n00\nx\n00\n",
    "dims 0 1 1\n\n",
    "size 1 1 1\n0\n",
])
def test_malformed_text(text):
    with pytest.raises(FormatError):
        parse_text(text)


def test_malformed_binary():
    good = emit_binary(BinaryVolume((2, 2, 2)))
    with pytest.raises(FormatError):
        parse_binary(good[:10])
    with pytest.raises(FormatError):
        parse_binary(b"XXXX" + good[4:])
    with pytest.raises(FormatError):
        parse_binary(good[:4] + b"\x02" + good[5:])
    with pytest.raises(FormatError):
        parse_binary(good + b"\x00")
    with pytest.raises(FormatError):
        parse_binary(good[:-1] + b"\x07")


def test_file_helpers(tmp_path):
    vol = BinaryVolume.from_array(np.eye(4, dtype=bool)[:, :, None].repeat(3, axis=2))
    for fmt in ("text", "binary"):
        path = tmp_path / f"v.{fmt}"
        write_volume(path, vol, fmt)
        back, detected = read_volume(path)
        assert back == vol and detected == fmt
    with pytest.raises(ValueError):
        write_volume(tmp_path / "x", vol, "json")
    (tmp_path / "junk").write_bytes(b"\xff\xfe")
    with pytest.raises(FormatError):
        read_volume(tmp_path / "junk")
