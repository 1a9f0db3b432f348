"""Shared fixtures: the suite groups and cached per-group pipeline data."""

from __future__ import annotations

from ghilb import ggraph, toric
from ghilb.groups import group_from_text

SUITE_3D = [
    ("2:1,1,0", 2),
    ("3:1,1,1", 3),
    ("5:1,2,2", 5),
    ("6:1,2,3", 6),
    ("7:1,2,4", 7),
    ("11:1,2,8", 11),
    ("2:1,1,0;2:1,0,1", 4),
]

_groups: dict = {}
_fixed_points: dict = {}
_lattices: dict = {}
_cones: dict = {}


def get_group(spec: str):
    if spec not in _groups:
        _groups[spec] = group_from_text(spec)
    return _groups[spec]


def get_fixed_points(spec: str):
    if spec not in _fixed_points:
        _fixed_points[spec] = ggraph.enumerate_fixed_points(get_group(spec))
    return _fixed_points[spec]


def get_lattices(spec: str):
    if spec not in _lattices:
        _lattices[spec] = toric.lattices(get_group(spec))
    return _lattices[spec]


def get_cones(spec: str):
    if spec not in _cones:
        G = get_group(spec)
        pair = get_lattices(spec)
        _cones[spec] = [
            toric.chart_cone(G, pair, gg, owner=k)
            for k, gg in enumerate(get_fixed_points(spec))
        ]
    return _cones[spec]
