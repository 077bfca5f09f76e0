"""Deleting templates for classes A-D and their three variants.

Templates are literal tables in ``data/original.tpl``.  The corrected set
splits every class D template into three by fixing its two distinguished
don't-care 6-neighbours (p1, p2) to (0, 0), (0, 1) and (1, 0); the errata
set additionally patches seven of the ``dX-2`` templates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Callable, Iterable, Optional

import numpy as np

from .voxel_grid import AXIS_DIRECTIONS, BinaryVolume, Point3


class Variant(enum.Enum):
    ORIGINAL = "original"
    CORRECTED = "corrected"
    CORRECTED_ERRATA = "corrected-errata"

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ", ".join(v.value for v in cls)
            raise ValueError(f"unknown variant {value!r} (expected one of {names})") from None


class Cell(enum.Enum):
    OBJECT = "1"
    BACKGROUND = "0"
    DONT_CARE = "."


SimpleOracle = Callable[[BinaryVolume, Point3], bool]


@dataclass(frozen=True)
class Template:
    id: str
    cls: str
    cells: dict = field(hash=False, compare=True)
    at_least_one_object: frozenset = frozenset()
    requires_simple_center: bool = False
    p1p2_offsets: Optional[tuple] = None

    def __post_init__(self):
        if (0, 0, 0) in self.cells:
            raise ValueError(f"{self.id}: the centre cannot carry a requirement")
        for o in self.at_least_one_object:
            if self.cells.get(o, Cell.DONT_CARE) is not Cell.DONT_CARE:
                raise ValueError(f"{self.id}: '?' cell {o} also fixed")

    @property
    def objects(self) -> list[Point3]:
        return sorted(o for o, c in self.cells.items() if c is Cell.OBJECT)

    @property
    def backgrounds(self) -> list[Point3]:
        return sorted(o for o, c in self.cells.items() if c is Cell.BACKGROUND)

    def box(self) -> tuple[tuple[int, int], ...]:
        offs = list(self.cells) + list(self.at_least_one_object) + [(0, 0, 0)]
        return tuple(
            (min(-1, min(o[i] for o in offs)), max(1, max(o[i] for o in offs)))
            for i in range(3)
        )

    def cell(self, offset) -> Cell:
        return self.cells.get(tuple(offset), Cell.DONT_CARE)

    def support(self) -> set[Point3]:
        """Offsets whose value can influence the match, simple test included."""
        offs = {Point3(*o) for o, c in self.cells.items() if c is not Cell.DONT_CARE}
        offs |= {Point3(*o) for o in self.at_least_one_object}
        if self.requires_simple_center:
            offs |= {Point3(x, y, z) for x in (-1, 0, 1) for y in (-1, 0, 1)
                     for z in (-1, 0, 1) if (x, y, z) != (0, 0, 0)}
        return offs


@dataclass(frozen=True)
class TemplateSet:
    variant: Variant
    templates: tuple

    def __len__(self):
        return len(self.templates)

    def __iter__(self):
        return iter(self.templates)

    def by_id(self, tid: str) -> Template:
        for t in self.templates:
            if t.id == tid:
                return t
        raise KeyError(tid)

    def of_class(self, cls: str) -> list[Template]:
        return [t for t in self.templates if t.cls == cls]

    @property
    def max_reach(self) -> int:
        return max(max(abs(a), abs(b)) for t in self.templates for a, b in t.box())


# ---------------------------------------------------------------------------
# literal table I/O

def format_template(t: Template) -> str:
    """Render one template in the block format used by ``data/*.tpl``."""
    (x0, x1), (y0, y1), (z0, z1) = t.box()
    lines = [f"[{t.id}]", f"class = {t.cls}"]
    if t.requires_simple_center:
        lines.append("simple = true")
    if t.p1p2_offsets is not None:
        names = {v: k for k, v in AXIS_DIRECTIONS.items()}
        lines.append("p1p2 = %s %s" % tuple(names[Point3(*o)] for o in t.p1p2_offsets))
    lines.append(f"box = {x0} {x1} {y0} {y1} {z0} {z1}")
    planes = []
    for z in range(z1, z0 - 1, -1):
        rows = []
        for y in range(y1, y0 - 1, -1):
            row = []
            for x in range(x0, x1 + 1):
                o = (x, y, z)
                if o == (0, 0, 0):
                    row.append("1")
                elif o in t.at_least_one_object:
                    row.append("?")
                else:
                    row.append(t.cell(o).value)
            rows.append("".join(row))
        planes.append("\n".join(rows))
    lines.append("\n\n".join(planes))
    return "\n".join(lines)


def parse_templates(text: str) -> list[Template]:
    blocks: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.rstrip()
        if line.startswith("#"):
            continue
        if line.startswith("["):
            blocks.append([line])
        elif blocks:
            blocks[-1].append(line)
    return [_parse_block(b) for b in blocks]


def _parse_block(lines: list[str]) -> Template:
    tid = lines[0].strip("[]")
    meta = {}
    body = []
    for line in lines[1:]:
        if "=" in line:
            k, v = line.split("=", 1)
            meta[k.strip()] = v.split()
        else:
            body.append(line)
    x0, x1, y0, y1, z0, z1 = map(int, meta["box"])
    rows = [r for r in body if r]
    ny, nx, nz = y1 - y0 + 1, x1 - x0 + 1, z1 - z0 + 1
    if len(rows) != ny * nz or any(len(r) != nx for r in rows):
        raise ValueError(f"{tid}: plane data does not fit box {meta['box']}")
    cells, qs = {}, set()
    for iz in range(nz):
        for iy in range(ny):
            for ix, ch in enumerate(rows[iz * ny + iy]):
                o = Point3(x0 + ix, y1 - iy, z1 - iz)
                if o == (0, 0, 0):
                    if ch != "1":
                        raise ValueError(f"{tid}: centre must be 1")
                    continue
                if ch == "?":
                    qs.add(o)
                    cells[o] = Cell.DONT_CARE
                else:
                    cells[o] = Cell(ch)
    p1p2 = None
    if "p1p2" in meta:
        p1p2 = tuple(AXIS_DIRECTIONS[n] for n in meta["p1p2"])
    return Template(
        id=tid,
        cls=meta["class"][0],
        cells=cells,
        at_least_one_object=frozenset(qs),
        requires_simple_center=meta.get("simple", ["false"])[0] == "true",
        p1p2_offsets=p1p2,
    )


def _load(name: str) -> list[Template]:
    text = resources.files("thin3d.data").joinpath(name).read_text()
    return parse_templates(text)


# ---------------------------------------------------------------------------
# corrected and errata variants

_P1P2_VALUES = ((Cell.BACKGROUND, Cell.BACKGROUND),
                (Cell.BACKGROUND, Cell.OBJECT),
                (Cell.OBJECT, Cell.BACKGROUND))


def split_class_d(t: Template) -> list[Template]:
    """dX -> dX-1, dX-2, dX-3 with (p1, p2) = (0,0), (0,1), (1,0)."""
    out = []
    p1, p2 = t.p1p2_offsets
    for k, (v1, v2) in enumerate(_P1P2_VALUES, 1):
        cells = dict(t.cells)
        cells[p1], cells[p2] = v1, v2
        qs = t.at_least_one_object - {p1, p2}
        if any(cells[o] is Cell.OBJECT for o in t.at_least_one_object & {p1, p2}):
            qs = frozenset()  # group already satisfied by a fixed object cell
        out.append(replace(t, id=f"{t.id}-{k}", cells=cells, at_least_one_object=qs))
    return out


# side -> added plane centre offset (one step beyond the 3x3x3 box)
ERRATA_ADDED_PLANES = {
    "d3-2": "d",
    "d5-2": "s",
    "d6-2": "s",
    "d8-2": "d",
    "d11-2": "s",
    "d12-2": "s",
}

ERRATA_D7_2 = """\
[d7-2]
class = D
simple = true
p1p2 = w d
box = -1 1 -1 1 -2 1
0..
00.
000

001
010
000

...
.1.
...

...
.1.
...
"""


def _add_plane(t: Template, side: str) -> Template:
    step = AXIS_DIRECTIONS[side]
    cells = dict(t.cells)
    axis = next(i for i in range(3) if step[i])
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            o = [a, b]
            o.insert(axis, 2 * step[axis])
            cells[Point3(*o)] = Cell.DONT_CARE
    cells[step.scale(2)] = Cell.OBJECT
    return replace(t, cells=cells)


def apply_errata(templates: Iterable[Template]) -> list[Template]:
    d7_2 = parse_templates(ERRATA_D7_2)[0]
    out = []
    for t in templates:
        if t.id == "d7-2":
            out.append(d7_2)
        elif t.id in ERRATA_ADDED_PLANES:
            out.append(_add_plane(t, ERRATA_ADDED_PLANES[t.id]))
        else:
            out.append(t)
    return out


_CACHE: dict = {}


def build_template_set(variant) -> TemplateSet:
    variant = Variant.parse(variant)
    if variant not in _CACHE:
        base = _load("original.tpl")
        if variant is Variant.ORIGINAL:
            templates = base
        else:
            templates = []
            for t in base:
                templates.extend(split_class_d(t) if t.cls == "D" else [t])
            if variant is Variant.CORRECTED_ERRATA:
                templates = apply_errata(templates)
        _CACHE[variant] = TemplateSet(variant, tuple(templates))
    return _CACHE[variant]


# ---------------------------------------------------------------------------
# matching

def _require_object(vol: BinaryVolume, p) -> Point3:
    p = Point3(*p)
    if not vol.get(p):
        raise ValueError(f"{tuple(p)} is not an object point")
    return p


def _local_match(t: Template, vol: BinaryVolume, p: Point3) -> bool:
    for o, c in t.cells.items():
        if c is Cell.OBJECT and not vol.get(p + o):
            return False
        if c is Cell.BACKGROUND and vol.get(p + o):
            return False
    if t.at_least_one_object and not any(vol.get(p + o) for o in t.at_least_one_object):
        return False
    return True


def matches(t: Template, vol: BinaryVolume, p, simple_oracle: SimpleOracle = None) -> bool:
    p = _require_object(vol, p)
    if not _local_match(t, vol, p):
        return False
    if t.requires_simple_center:
        if simple_oracle is None:
            from .verify import is_simple as simple_oracle
        return bool(simple_oracle(vol, p))
    return True


def matches_any(tset: TemplateSet, vol: BinaryVolume, p,
                simple_oracle: SimpleOracle = None) -> Optional[str]:
    p = _require_object(vol, p)
    simple = None
    for t in tset.templates:
        if not _local_match(t, vol, p):
            continue
        if t.requires_simple_center:
            if simple is None:
                if simple_oracle is None:
                    from .verify import is_simple as simple_oracle
                simple = bool(simple_oracle(vol, p))
            if not simple:
                continue
        return t.id
    return None


def local_match_mask(t: Template, padded: np.ndarray, pad: int) -> np.ndarray:
    """Cell and '?' constraints of ``t`` evaluated at every voxel at once.

    ``padded`` is the volume padded by ``pad`` background voxels per side;
    the result has the unpadded shape.  The simple-centre test is not applied.
    """
    shape = tuple(s - 2 * pad for s in padded.shape)

    def shifted(o):
        return padded[pad + o[0]:pad + o[0] + shape[0],
                      pad + o[1]:pad + o[1] + shape[1],
                      pad + o[2]:pad + o[2] + shape[2]]

    mask = padded[pad:pad + shape[0], pad:pad + shape[1], pad:pad + shape[2]].copy()
    for o in t.objects:
        mask &= shifted(o)
    for o in t.backgrounds:
        mask &= ~shifted(o)
    if t.at_least_one_object:
        any_q = np.zeros(shape, dtype=bool)
        for o in t.at_least_one_object:
            any_q |= shifted(o)
        mask &= any_q
    return mask
