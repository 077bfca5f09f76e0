"""Fully parallel 3D thinning with connectivity-preserving class D templates."""

from .engine import ThinningReport, deletion_round, mark_border, thin
from .tail_rules import TailClassification, classify, is_tail
from .templates import Cell, Template, TemplateSet, Variant, build_template_set, matches, matches_any
from .voxel_grid import BinaryVolume, Point3, count_object_neighbors, neighbors, squared_distance

__all__ = [
    "BinaryVolume", "Cell", "Point3", "TailClassification", "Template", "TemplateSet",
    "ThinningReport", "Variant", "build_template_set", "classify", "count_object_neighbors",
    "deletion_round", "is_tail", "mark_border", "matches", "matches_any", "neighbors",
    "squared_distance", "thin",
]
__version__ = "0.1.0"
