import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import ndimage

from thin3d.templates import build_template_set
from thin3d.verify import (
    audit_p1p2, count_components, fig7, fig12, fixture, fuzz_connectivity,
    is_simple, label_components, random_volume,
)
from thin3d.verify.fixtures import FIG7_POINTS
from thin3d.verify.fuzz import check_volume, trial_seeds
from thin3d.verify.topology import is_simple_array, is_simple_bits, neighborhood_bits
from thin3d.voxel_grid import BinaryVolume, neighbor_offsets

# --- component labelling ----------------------------------------------------


def test_adjacency_changes_component_count():
    arr = np.zeros((3, 3, 3), dtype=bool)
    arr[0, 0, 0] = arr[1, 1, 0] = arr[2, 2, 1] = True
    assert count_components(arr, 6) == 3
    assert count_components(arr, 18) == 2
    assert count_components(arr, 26) == 1
    with pytest.raises(ValueError):
        count_components(arr, 4)


def test_labelling_details():
    vol = fixture("box", 2, 2, 2)
    lab = label_components(vol, 26)
    assert lab.count == 1 and lab.sizes() == [8]
    assert lab.label((0, 0, 0)) == -1
    assert lab.label((1, 1, 1)) == 0
    empty = label_components(BinaryVolume((2, 2, 2)))
    assert empty.count == 0 and empty.sizes() == []


# --- simple points ------------------------------------------------------------

_OFFS = neighbor_offsets(26)
_N18 = {o for o in neighbor_offsets(18)}
_SIX = set(neighbor_offsets(6))


def simple_by_labelling(bits):
    """Reference definition written against scipy labelling."""
    cube = np.zeros((3, 3, 3), dtype=bool)
    for o, b in zip(_OFFS, bits):
        cube[o[0] + 1, o[1] + 1, o[2] + 1] = b
    _, n_obj = ndimage.label(cube, structure=np.ones((3, 3, 3)))
    bg = ~cube
    bg[1, 1, 1] = False
    for o in _OFFS:
        if o not in _N18:
            bg[o[0] + 1, o[1] + 1, o[2] + 1] = False
    lab, _ = ndimage.label(bg, structure=ndimage.generate_binary_structure(3, 1))
    touching = {lab[o[0] + 1, o[1] + 1, o[2] + 1] for o in _SIX} - {0}
    return n_obj == 1 and len(touching) == 1


@settings(max_examples=400, deadline=None)
@given(st.lists(st.booleans(), min_size=26, max_size=26))
def test_simple_matches_reference(bits):
    assert is_simple_bits(tuple(bits)) == simple_by_labelling(bits)


def test_simple_landmarks():
    full = BinaryVolume((3, 3, 3), np.ones((3, 3, 3), dtype=bool))
    assert not is_simple(full, (1, 1, 1))  # interior
    assert is_simple(full, (0, 0, 0))       # cube corner
    assert not is_simple(fixture("single"), (1, 1, 1))
    bar = fixture("line", 3, "x")
    assert is_simple(bar, (1, 1, 1))        # end of a bar
    assert not is_simple(bar, (2, 1, 1))    # middle of a bar


def test_simple_views_agree():
    vol = random_volume(4, (5, 5, 5), 0.5)
    for p in vol.points():
        bits = neighborhood_bits(vol, p)
        assert is_simple(vol, p) == is_simple_bits(bits) == is_simple_array(vol.array, p)


def test_simple_rejects_background():
    with pytest.raises(ValueError):
        is_simple(BinaryVolume((3, 3, 3)), (1, 1, 1))


# --- fixtures -----------------------------------------------------------------


def test_fig7_layout():
    vol = fig7()
    assert vol.count() == 7
    assert label_components(vol).count == 1
    assert set(vol.points()) == set(FIG7_POINTS.values())


def test_fig12_is_one_component():
    assert label_components(fig12()).count == 1


def test_fixture_lookup():
    assert fixture("line", 4, "z").count() == 4
    assert fixture("box", 2, 3, 4).count() == 24
    assert fixture("random", 1, (4, 4, 4), 0.5) == random_volume(1, (4, 4, 4), 0.5)
    with pytest.raises(ValueError):
        fixture("teapot")


# --- p1/p2 audit ----------------------------------------------------------------


@pytest.mark.parametrize("variant,expected", [
    ("original", 12), ("corrected", 0), ("corrected-errata", 0),
])
def test_audit_counts(variant, expected):
    report = audit_p1p2(build_template_set(variant))
    assert len(report.violations) == expected
    assert report.non_d_templates == 26
    assert report.to_text().rstrip().endswith(f"violations={expected}")
    assert json.loads(json.dumps(report.to_dict()))["violations"] == expected


# --- fuzzing --------------------------------------------------------------------


def test_trial_seeds_deterministic():
    assert trial_seeds(7, 5) == trial_seeds(7, 5)
    assert trial_seeds(7, 5) != trial_seeds(8, 5)


def test_fuzz_argument_checks():
    ts = build_template_set("corrected-errata")
    with pytest.raises(ValueError):
        fuzz_connectivity(ts, trials=0)
    with pytest.raises(ValueError):
        fuzz_connectivity(ts, density=1.0)


def test_fuzz_report_shape():
    rep = fuzz_connectivity("corrected-errata", trials=5, dims=(5, 5, 5), seed=3,
                            extra=[fig7()])
    assert rep.violations == []
    assert rep.rounds_checked > 0
    text = rep.to_text()
    assert "trials=5" in text and text.rstrip().endswith("violations=0")
    assert rep.to_dict()["dims"] == [5, 5, 5]


def test_fuzz_catches_original_fig7_break():
    found, _ = check_volume(fig7(), build_template_set("original"))
    assert len(found) == 1
    v = found[0]
    assert (v.components_before, v.components_after) == (1, 2)
    assert FIG7_POINTS["d"] in {tuple(p) for p in v.deleted}


def test_fuzz_finds_violations_without_errata():
    rep = fuzz_connectivity("corrected", trials=150, dims=(6, 6, 6), density=0.2, seed=1)
    assert rep.violations


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([0.15, 0.3, 0.5, 0.7]))
def test_errata_preserves_connectivity(seed, density):
    found, _ = check_volume(random_volume(seed, (6, 6, 6), density),
                            build_template_set("corrected-errata"), seed)
    assert found == []
