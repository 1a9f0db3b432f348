"""Toric data of the resolution: lattices, chart cones, fan consistency.

M is the lattice of invariant Laurent exponents, computed as the kernel of
the character map on Z^3.  N is its dual, which equals Z^3 extended by the
group's weight vectors divided by R.  Each fixed point carries an affine
chart whose coordinates lambda, mu, nu are invariant Laurent monomials; the
rows of the inverse transpose of their exponent matrix are the rays of the
chart cone.  Smoothness of a chart is |det| = |G|, and crepancy is every
ray sitting at lattice height one (coordinate sum one).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import linalg
from .ggraph import GGraph
from .groups import AbelianGroup

Vector = tuple[int, int, int]
RayVec = tuple[Fraction, Fraction, Fraction]


class ChartError(RuntimeError):
    """A chart cone violates invariance, smoothness or crepancy."""


class FanError(RuntimeError):
    """The glued fan is inconsistent; details name the offending cones."""

    def __init__(self, message: str, details: dict):
        super().__init__(message)
        self.details = details


@dataclass(frozen=True)
class LatticePair:
    """Bases of the invariant lattice M and the resolved lattice N = M*."""

    n_basis: tuple[RayVec, ...]
    m_basis: tuple[Vector, ...]
    group_order: int

    def in_m(self, v) -> bool:
        return all(_dot(v, n).denominator == 1 for n in self.n_basis)

    def n_coordinates(self, ray) -> tuple[int, ...] | None:
        """Integer coordinates of a vector in the N basis, or None if not in N."""
        coords = tuple(_dot(ray, m) for m in self.m_basis)
        if any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)


@dataclass(frozen=True)
class ChartCone:
    """One affine chart of the resolution, as dual generators plus rays."""

    owner: int
    dual_gens: tuple[Vector, Vector, Vector]
    rays: tuple[RayVec, RayVec, RayVec]


@dataclass(frozen=True)
class Fan:
    cones: tuple[ChartCone, ...]
    rays: tuple[RayVec, ...]
    junior: tuple[RayVec, ...]

    def to_json(self) -> dict:
        ray_index = {r: i for i, r in enumerate(self.rays)}
        return {
            "rays": [[str(c) for c in ray] for ray in self.rays],
            "cones": [sorted(ray_index[r] for r in cone.rays) for cone in self.cones],
            "junior_elements": [[str(c) for c in ray] for ray in self.junior],
        }


def _dot(u, v) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def lattices(G: AbelianGroup) -> LatticePair:
    """Compute M as the kernel lattice of the character map and N as its dual."""
    R = G.R
    rows = [[R, 0, 0], [0, R, 0], [0, 0, R]]
    for e in product(range(R), repeat=3):
        if G.char_index(e) == 0:
            rows.append(list(e))
    m_basis = linalg.hnf(rows)
    if len(m_basis) != 3:
        raise RuntimeError("invariant lattice is not full rank")
    det_m = linalg.det_dense(m_basis)
    if abs(det_m) != G.order:
        raise RuntimeError(
            f"index of the invariant lattice is {abs(det_m)}, expected {G.order}"
        )
    n_rows = linalg.transpose(linalg.invert(m_basis))
    n_basis = tuple(tuple(x for x in row) for row in n_rows)
    for row in n_basis:
        for x in row:
            if G.R % x.denominator != 0:
                raise RuntimeError(f"N basis entry {x} has denominator not dividing R")
    pair = LatticePair(
        n_basis=n_basis,
        m_basis=tuple(tuple(int(x) for x in row) for row in m_basis),
        group_order=G.order,
    )
    for g in G.elements:
        if pair.n_coordinates(tuple(Fraction(c, R) for c in g)) is None:
            raise RuntimeError(f"group element {g}/R does not lie in N")
    return pair


def chart_dual_generators(gg: GGraph) -> tuple[Vector, Vector, Vector]:
    """Exponents of the chart coordinates as invariant Laurent monomials.

    Kind A charts satisfy x^(a+d-1) = lambda y^(b-1) z^(f-1) and rotations;
    kind B charts satisfy x^a y^e = lambda z^(c+f-1) and rotations.  Solving
    each relation for the chart coordinate gives its Laurent exponent.
    """
    a, b, c, d, e, f = gg.params
    if gg.kind == "A":
        v_l = (a + d - 1, 1 - b, 1 - f)
        v_m = (1 - d, b + e - 1, 1 - c)
        v_n = (1 - a, 1 - e, c + f - 1)
    else:
        v_l = (a, e, 1 - c - f)
        v_m = (1 - a - d, b, f)
        v_n = (d, 1 - b - e, c)
    return (v_l, v_m, v_n)


def check_smooth(pair: LatticePair, cone_or_gens) -> bool:
    """True iff the dual generators span a sublattice of index |G| in Z^3."""
    gens = getattr(cone_or_gens, "dual_gens", cone_or_gens)
    return abs(linalg.det_dense([list(v) for v in gens])) == pair.group_order


def dual_rays(pair: LatticePair, dual_gens) -> tuple[RayVec, RayVec, RayVec]:
    """Rays of the chart cone: the basis of N dual to the chart exponents.

    Each ray must be a primitive element of N with nonnegative coordinates
    summing to one; a violation is a failure of crepancy and raised loudly.
    """
    inv_t = linalg.transpose(linalg.invert([list(v) for v in dual_gens]))
    rays = tuple(tuple(x for x in row) for row in inv_t)
    for ray in rays:
        coords = pair.n_coordinates(ray)
        if coords is None:
            raise ChartError(f"ray {ray} does not lie in N")
        if gcd(*coords) != 1:
            raise ChartError(f"ray {ray} is not primitive in N")
        if any(x < 0 for x in ray):
            raise ChartError(f"ray {ray} has a negative coordinate")
        if sum(ray) != 1:
            raise ChartError(f"ray {ray} has coordinate sum {sum(ray)}, not 1")
    return rays


def chart_cone(G: AbelianGroup, pair: LatticePair, gg: GGraph, owner: int) -> ChartCone:
    """Build and fully validate the cone of one fixed point's chart."""
    gens = chart_dual_generators(gg)
    for v in gens:
        if G.char_index(v) != 0:
            raise ChartError(
                f"chart exponent {v} is not invariant; the staircase is misclassified"
            )
        if not pair.in_m(v):
            raise ChartError(f"chart exponent {v} is not in M")
    if not check_smooth(pair, gens):
        det = linalg.det_dense([list(v) for v in gens])
        raise ChartError(
            f"chart of fixed point {owner} has |det| = {abs(det)}, expected {pair.group_order}"
        )
    rays = dual_rays(pair, gens)
    return ChartCone(owner=owner, dual_gens=gens, rays=rays)


def build_fan(G: AbelianGroup, pair: LatticePair, cones: list[ChartCone]) -> Fan:
    """Glue the chart cones and check global consistency of the fan.

    The deduplicated ray set must consist of the three coordinate rays plus
    the age-one group elements, and every internal two-ray facet must be
    shared by exactly two cones (facets lying in a wall of the junior
    simplex, where both rays have a common zero coordinate, by exactly one).
    """
    junior = tuple(
        tuple(Fraction(c, G.R) for c in g) for g in G.junior_elements()
    )
    expected_rays = set(junior)
    one = Fraction(1)
    zero = Fraction(0)
    expected_rays.update(
        {(one, zero, zero), (zero, one, zero), (zero, zero, one)}
    )
    seen_rays = sorted({ray for cone in cones for ray in cone.rays})
    if set(seen_rays) != expected_rays:
        raise FanError(
            "fan ray set does not match the junior elements",
            details={
                "missing": sorted(str(r) for r in expected_rays - set(seen_rays)),
                "extra": sorted(str(r) for r in set(seen_rays) - expected_rays),
            },
        )
    if len(cones) != pair.group_order:
        raise FanError(
            f"fan has {len(cones)} maximal cones, expected {pair.group_order}",
            details={"cones": len(cones), "expected": pair.group_order},
        )
    facet_owners: dict[tuple[RayVec, RayVec], list[int]] = {}
    for cone in cones:
        r1, r2, r3 = sorted(cone.rays)
        for pair_rays in ((r1, r2), (r1, r3), (r2, r3)):
            facet_owners.setdefault(pair_rays, []).append(cone.owner)
    bad = {}
    for (r1, r2), owners in facet_owners.items():
        boundary = any(r1[i] == 0 and r2[i] == 0 for i in range(3))
        expected = 1 if boundary else 2
        if len(owners) != expected:
            bad[f"{r1}|{r2}"] = {
                "cones": owners,
                "expected": expected,
                "boundary": boundary,
            }
    if bad:
        raise FanError("facet pairing failed", details={"facets": bad})
    return Fan(cones=tuple(cones), rays=tuple(seen_rays), junior=junior)
