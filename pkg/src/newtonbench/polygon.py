"""Newton polygons and the coefficient <-> root-valuation dictionary.

The lower convex hull of the points (i, valuation of coefficient i) has
strictly increasing segment slopes; a segment of slope s and horizontal
length m witnesses exactly m roots of valuation -s. Indices below the first
finite entry correspond to roots at zero (valuation infinity).

All hull arithmetic is exact rational; there is no epsilon anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .polynomials import ValuedPoly
from .valuation import ExtVal, INFINITY, format_rational


class PolygonError(ValueError):
    pass


@dataclass(frozen=True)
class NewtonPolygon:
    """Hull vertices (index, valuation), ordered by index, slopes strictly increasing."""

    vertices: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise PolygonError("a polygon needs at least one vertex")
        slopes = [s for s, _ in self.slopes]
        for a, b in zip(slopes, slopes[1:]):
            if not a < b:
                raise PolygonError("hull slopes must strictly increase")

    @property
    def slopes(self) -> Tuple[Tuple[Fraction, int], ...]:
        """(slope, horizontal length) per segment, left to right."""
        out = []
        for (i, vi), (j, vj) in zip(self.vertices, self.vertices[1:]):
            out.append(((vj - vi) / (j - i), j - i))
        return tuple(out)


@dataclass(frozen=True)
class RootProfile:
    """Root valuations with multiplicities, strictly decreasing; roots at zero counted apart."""

    entries: Tuple[Tuple[Fraction, int], ...]
    zero_root_multiplicity: int = 0

    def __post_init__(self) -> None:
        vals = [v for v, _ in self.entries]
        for a, b in zip(vals, vals[1:]):
            if not a > b:
                raise PolygonError("profile valuations must strictly decrease")
        if any(m < 1 for _, m in self.entries) or self.zero_root_multiplicity < 0:
            raise PolygonError("bad multiplicity")

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries) + self.zero_root_multiplicity

    def valuations(self) -> List[ExtVal]:
        """The flat ordered root list, largest valuation first (infinity for roots at 0)."""
        flat: List[ExtVal] = [INFINITY] * self.zero_root_multiplicity
        for v, m in self.entries:
            flat.extend([ExtVal(v)] * m)
        return flat

    def min_valuation(self) -> Fraction:
        if not self.entries:
            raise PolygonError("profile has no finite valuations")
        return self.entries[-1][0]


def _finite_points(vp: ValuedPoly) -> List[Tuple[int, Fraction]]:
    pts = list(vp.entries)
    if not pts:
        raise PolygonError("no finite coefficient valuations")
    return pts


def lower_hull(vp: ValuedPoly) -> NewtonPolygon:
    """Lower convex hull of the finite (index, valuation) points.

    Points at infinity (zero coefficients) are ignored; collinear interior
    points are not vertices.
    """
    pts = _finite_points(vp)
    hull: List[Tuple[int, Fraction]] = []
    for p in pts:  # already sorted by index
        while len(hull) >= 2:
            (ox, oy), (ax, ay) = hull[-2], hull[-1]
            # pop while the middle point is on or above the chord
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return NewtonPolygon(tuple(hull))


def root_valuation_profile(vp: ValuedPoly) -> RootProfile:
    """Read the root valuations off the polygon: slope -s, length m => m roots at s."""
    polygon = lower_hull(vp)
    zero_mult = polygon.vertices[0][0]  # indices below the first finite entry
    # slopes increase left to right, so the negated slopes land in descending order
    entries = [(-s, m) for s, m in polygon.slopes]
    return RootProfile(tuple(entries), zero_mult)


def slope_witness(vp: ValuedPoly, root_val: Fraction) -> Tuple[int, int]:
    """Hull-vertex indices i < j with (j - i) * root_val = v_i - v_j.

    This is the segment whose negated slope equals the given root valuation;
    asking for a valuation that is not in the profile is an error.
    """
    root_val = Fraction(root_val)
    polygon = lower_hull(vp)
    for (i, vi), (j, vj) in zip(polygon.vertices, polygon.vertices[1:]):
        if vi - vj == (j - i) * root_val:
            return (i, j)
    raise PolygonError(f"{format_rational(root_val)} is not a root valuation of this polygon")


def polygon_report(vp: ValuedPoly) -> dict:
    """JSON-ready report: vertices, slopes with lengths, profile, zero-root count."""
    polygon = lower_hull(vp)
    profile = root_valuation_profile(vp)
    return {
        "vertices": [[i, format_rational(v)] for i, v in polygon.vertices],
        "slopes": [[format_rational(s), m] for s, m in polygon.slopes],
        "profile": [[format_rational(v), m] for v, m in profile.entries],
        "zero_roots": profile.zero_root_multiplicity,
    }
