import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from thin3d.templates import (
    ERRATA_ADDED_PLANES, Cell, Template, Variant, build_template_set, format_template,
    local_match_mask, matches, matches_any, parse_templates, split_class_d,
)
from thin3d.verify import random_volume
from thin3d.voxel_grid import AXIS_DIRECTIONS, BinaryVolume, Point3

VARIANTS = list(Variant)


@pytest.mark.parametrize("variant,count,d_count", [
    ("original", 38, 12), ("corrected", 62, 36), ("corrected-errata", 62, 36),
])
def test_template_counts(variant, count, d_count):
    ts = build_template_set(variant)
    assert len(ts) == count
    assert len(ts.of_class("D")) == d_count
    assert len(ts.of_class("A")) + len(ts.of_class("B")) + len(ts.of_class("C")) == 26


def test_variant_parse():
    assert Variant.parse("corrected") is Variant.CORRECTED
    assert Variant.parse(Variant.ORIGINAL) is Variant.ORIGINAL
    with pytest.raises(ValueError):
        Variant.parse("nonsense")


def test_template_sets_are_cached():
    assert build_template_set("original") is build_template_set(Variant.ORIGINAL)


def test_ids_unique():
    for v in VARIANTS:
        ids = [t.id for t in build_template_set(v)]
        assert len(ids) == len(set(ids))


def test_abc_templates_identical_across_variants():
    orig = build_template_set("original")
    for v in ("corrected", "corrected-errata"):
        other = build_template_set(v)
        for t in orig:
            if t.cls != "D":
                assert other.by_id(t.id) == t


def test_split_fixes_p1_p2():
    for t in build_template_set("original").of_class("D"):
        p1, p2 = t.p1p2_offsets
        kids = split_class_d(t)
        assert [k.id for k in kids] == [f"{t.id}-1", f"{t.id}-2", f"{t.id}-3"]
        got = [(k.cell(p1), k.cell(p2)) for k in kids]
        assert got == [(Cell.BACKGROUND, Cell.BACKGROUND),
                       (Cell.BACKGROUND, Cell.OBJECT),
                       (Cell.OBJECT, Cell.BACKGROUND)]
        for k in kids:
            assert k.requires_simple_center
            assert not k.at_least_one_object & {p1, p2}


def test_errata_edits():
    corr = build_template_set("corrected")
    err = build_template_set("corrected-errata")
    changed = {t.id for t in err if t != corr.by_id(t.id)}
    assert changed == set(ERRATA_ADDED_PLANES) | {"d7-2"}
    for tid, side in ERRATA_ADDED_PLANES.items():
        step = AXIS_DIRECTIONS[side]
        t = err.by_id(tid)
        assert t.cell(step.scale(2)) is Cell.OBJECT
        assert t.cell(step) is Cell.OBJECT  # p2 in the -2 variant
    d7 = err.by_id("d7-2")
    assert d7.box()[2] == (-2, 1)
    assert d7.cell((0, 0, -2)) is Cell.OBJECT


def test_max_reach():
    assert build_template_set("original").max_reach == 2
    assert build_template_set("corrected-errata").max_reach == 2


def test_format_parse_round_trip():
    for v in VARIANTS:
        ts = build_template_set(v)
        text = "\n".join(format_template(t) for t in ts)
        assert tuple(parse_templates(text)) == ts.templates


def test_parse_rejects_bad_blocks():
    with pytest.raises(ValueError):
        parse_templates("[x]\nclass = A\nbox = -1 1 -1 1 -1 1\n000\n")
    with pytest.raises(ValueError):
        parse_templates("[x]\nclass = A\nbox = -1 1 -1 1 -1 1\n"
                        + "\n".join(["000"] * 9))  # centre not 1


def test_template_validation():
    with pytest.raises(ValueError):
        Template("t", "A", {Point3(0, 0, 0): Cell.OBJECT})
    with pytest.raises(ValueError):
        Template("t", "A", {Point3(1, 0, 0): Cell.OBJECT},
                 at_least_one_object=frozenset({Point3(1, 0, 0)}))


def test_matches_requires_object_point():
    vol = BinaryVolume((3, 3, 3))
    t = build_template_set("original").templates[0]
    with pytest.raises(ValueError):
        matches(t, vol, (1, 1, 1))
    with pytest.raises(ValueError):
        matches_any(build_template_set("original"), vol, (1, 1, 1))


def test_simple_oracle_is_consulted():
    ts = build_template_set("corrected")
    t = ts.by_id("d1-1")
    vol = BinaryVolume((5, 5, 5))
    centre = Point3(2, 2, 2)
    vol.set(centre, True)
    for o in t.objects:
        vol.set(centre + o, True)
    for o in t.at_least_one_object:
        vol.set(centre + o, True)
        break
    assert matches(t, vol, centre, simple_oracle=lambda v, p: True)
    assert not matches(t, vol, centre, simple_oracle=lambda v, p: False)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([0.2, 0.4, 0.6]))
def test_vectorised_match_agrees_with_per_point(seed, density):
    vol = random_volume(seed, (5, 5, 5), density)
    padded = vol.padded(2)
    for t in build_template_set("corrected-errata"):
        mask = local_match_mask(t, padded, 2)
        for p in vol.points():
            expected = matches(t, vol, p, simple_oracle=lambda v, q: True)
            assert mask[p] == expected, (t.id, p)
        assert not (mask & ~vol.array).any()


def test_matches_any_reports_first_hit():
    vol = BinaryVolume((3, 3, 4))
    for z in range(1, 4):
        vol.set((1, 1, z), True)
    vol.set((1, 1, 0), False)
    # bottom end of a vertical bar: exposed below, supported twice above
    tid = matches_any(build_template_set("original"), vol, (1, 1, 1))
    assert tid is not None and tid.startswith("a")
    arr = np.zeros((3, 3, 3), dtype=bool)
    arr[1, 1, 1] = True
    assert matches_any(build_template_set("original"), BinaryVolume.from_array(arr), (1, 1, 1)) is None
