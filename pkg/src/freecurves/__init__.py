"""Freeness, nearly-freeness and syzygy structure of plane curve arrangements."""

from .arrangements import (
    Arrangement,
    Component,
    lattice_isomorphic,
    levi_graph,
    singular_points,
    weak_combinatorics,
    weak_ziegler_pair,
    ziegler_pair,
)
from .numfield import QQ, NumberField, adjoin_root, cyclotomic_field
from .polyring import HomogPoly, parse_poly
from .syzygy import classify, is_free, is_nearly_free, mdr, resolution, total_tjurina

__all__ = [
    "Arrangement",
    "Component",
    "HomogPoly",
    "NumberField",
    "QQ",
    "adjoin_root",
    "classify",
    "cyclotomic_field",
    "is_free",
    "is_nearly_free",
    "lattice_isomorphic",
    "levi_graph",
    "mdr",
    "parse_poly",
    "resolution",
    "singular_points",
    "total_tjurina",
    "weak_combinatorics",
    "weak_ziegler_pair",
    "ziegler_pair",
]
