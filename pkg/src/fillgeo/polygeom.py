"""Geometry of regular hyperbolic polygons.

All lengths and areas are taken in the hyperbolic plane of constant
curvature -1, angles in radians.  A regular n-gon with interior angle
theta exists for 0 < theta < (n-2)*pi/n, and its area is
(pi - theta)*n - 2*pi.  The angle is determined by the area and vice
versa, so perimeter can be parametrised either way.

The side count n is accepted as any real number >= 3: several
monotonicity and concavity checks sweep n continuously.  Constructors
that describe an actual geometric polygon insist on integers.

Degenerate polygons (area 0, collapsed to a point) are inside the
domain: perimeter_from_area(n, 0.0) returns exactly 0.0, and the
formulas are arranged so this holds bitwise, not just approximately.
"""

import math
from dataclasses import dataclass

from .errors import DomainError

# acosh arguments this far below 1 are treated as rounding noise and
# clamped to 1; anything lower is a real domain violation.
_ACOSH_CLAMP = 1e-12


def _acosh_clamped(x: float) -> float:
    if x >= 1.0:
        return math.acosh(x)
    if x >= 1.0 - _ACOSH_CLAMP:
        return 0.0
    raise DomainError(
        f"acosh argument {x!r} is below 1 by more than {_ACOSH_CLAMP}"
    )


def _check_sides(n) -> float:
    if isinstance(n, bool) or not isinstance(n, (int, float)):
        raise DomainError(f"side count must be a number, got {n!r}")
    if not n >= 3:
        raise DomainError(f"side count must be at least 3, got {n!r}")
    return float(n)


def _check_genus(g) -> int:
    if isinstance(g, bool) or not isinstance(g, int):
        raise DomainError(f"genus must be an integer, got {g!r}")
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g!r}")
    return g


def max_area(n) -> float:
    """Supremum (n-2)*pi of areas of regular n-gons; not attained."""
    n = _check_sides(n)
    return (n - 2.0) * math.pi


def max_angle(n) -> float:
    """Supremum of interior angles, the Euclidean value (n-2)*pi/n.

    Attained only by the degenerate (area 0) polygon.
    """
    n = _check_sides(n)
    return (n - 2.0) * math.pi / n


def area_from_angle(n, theta: float) -> float:
    """(pi - theta)*n - 2*pi for theta in (0, pi).

    May be negative or zero; callers needing a geometric polygon must
    check positivity themselves.  Zero means the degenerate polygon.
    """
    n = _check_sides(n)
    if not 0.0 < theta < math.pi:
        raise DomainError(f"interior angle must lie in (0, pi), got {theta!r}")
    return (math.pi - theta) * n - 2.0 * math.pi


def angle_from_area(n, area: float) -> float:
    """Interior angle of the regular n-gon with the given area."""
    n = _check_sides(n)
    if not 0.0 <= area < (n - 2.0) * math.pi:
        raise DomainError(
            f"area must lie in [0, {(n - 2.0) * math.pi}), got {area!r}"
        )
    return math.pi - (area + 2.0 * math.pi) / n


def perimeter_from_area(n, area: float) -> float:
    """Perimeter of the regular n-gon of the given area.

    Computed as 2*n*acosh(cos(pi/n) / cos((2*pi + area) / (2*n))).  At
    area 0 the two cosine arguments coincide bitwise, so the result is
    exactly 0.0.  Strictly increasing in area.
    """
    n = _check_sides(n)
    if not 0.0 <= area < (n - 2.0) * math.pi:
        raise DomainError(
            f"area must lie in [0, {(n - 2.0) * math.pi}), got {area!r}"
        )
    ratio = math.cos(math.pi / n) / math.cos((2.0 * math.pi + area) / (2.0 * n))
    return 2.0 * n * _acosh_clamped(ratio)


def perimeter_from_angle(n, theta: float) -> float:
    """Perimeter of the regular n-gon with interior angle theta.

    Defined when cos(pi/n) >= sin(theta/2), i.e. n >= 2*pi/(pi-theta).
    Written with cos(pi/2 - theta/2) rather than sin(theta/2) so the
    right-angled square comes out exactly degenerate: at n = 4,
    theta = pi/2 the two cosine arguments agree bitwise and the
    perimeter is exactly 0.0.
    """
    n = _check_sides(n)
    if not 0.0 < theta < math.pi:
        raise DomainError(f"interior angle must lie in (0, pi), got {theta!r}")
    ratio = math.cos(math.pi / n) / math.cos(math.pi / 2.0 - theta / 2.0)
    return 2.0 * n * _acosh_clamped(ratio)


def side_length(n, theta: float) -> float:
    """Length of one side of the regular n-gon with interior angle theta."""
    n = _check_sides(n)
    if not 0.0 < theta < math.pi:
        raise DomainError(f"interior angle must lie in (0, pi), got {theta!r}")
    ratio = math.cos(math.pi / n) / math.cos(math.pi / 2.0 - theta / 2.0)
    return 2.0 * _acosh_clamped(ratio)


def perimeter_derivative(n, area: float) -> float:
    """d/d(area) of perimeter_from_area at fixed n.

    Defined on the open range (0, (n-2)*pi); blows up like
    area**-0.5 at the degenerate end and diverges at the supremum too.
    """
    n = _check_sides(n)
    if not 0.0 < area < (n - 2.0) * math.pi:
        raise DomainError(
            f"area must lie in (0, {(n - 2.0) * math.pi}), got {area!r}"
        )
    u = (2.0 * math.pi + area) / (2.0 * n)
    c = math.cos(math.pi / n)
    under = c * c - math.cos(u) ** 2
    if under <= 0.0:
        raise DomainError(f"derivative undefined at area {area!r} for n = {n}")
    return c * math.tan(u) / math.sqrt(under)


def perimeter_second_derivative(n, area: float) -> float:
    """Second derivative of perimeter_from_area in area, at fixed n.

    With w = ((n-2)*pi - area) / (2*n) this equals

        (cos(pi/n) / (2*n)) * ( 1 / (sin(w)**2 * sqrt(D))
                                - cos(w)**2 / D**1.5 )

    where D = cos(pi/n)**2 - sin(w)**2.  Nonnegative exactly when
    cos(pi/n)**2 >= sin(w)**2 * (1 + cos(w)**2); negative for small
    area, positive near the supremum, one sign change in between.
    """
    n = _check_sides(n)
    if not 0.0 < area < (n - 2.0) * math.pi:
        raise DomainError(
            f"area must lie in (0, {(n - 2.0) * math.pi}), got {area!r}"
        )
    w = ((n - 2.0) * math.pi - area) / (2.0 * n)
    c = math.cos(math.pi / n)
    sw = math.sin(w)
    cw = math.cos(w)
    d = c * c - sw * sw
    if d <= 0.0:
        raise DomainError(
            f"second derivative undefined at area {area!r} for n = {n}"
        )
    return (c / (2.0 * n)) * (1.0 / (sw * sw * math.sqrt(d)) - cw * cw / d**1.5)


def circumradius(n, theta: float) -> float:
    """Distance from the center of the regular n-gon to a vertex.

    cosh(R) = cot(pi/n) * cot(theta/2).  The degenerate polygon has
    R = 0; because cot*cot only rounds to within an ulp of 1 there,
    values within 1e-12 of 1 on either side snap to R = 0 so the
    degenerate case is exact.  Angles past the Euclidean limit raise
    DomainError.
    """
    n = _check_sides(n)
    if not 0.0 < theta < math.pi:
        raise DomainError(f"interior angle must lie in (0, pi), got {theta!r}")
    value = 1.0 / (math.tan(math.pi / n) * math.tan(theta / 2.0))
    if abs(value - 1.0) <= _ACOSH_CLAMP:
        return 0.0
    return _acosh_clamped(value)


@dataclass(frozen=True)
class RegularPolygonSpec:
    """A regular hyperbolic polygon: side count plus angle and area.

    Store n and one of {theta, area}; the classmethods derive the
    other so the Gauss-Bonnet relation holds by construction.
    """

    n: float
    theta: float
    area: float

    @classmethod
    def from_angle(cls, n, theta: float) -> "RegularPolygonSpec":
        area = area_from_angle(n, theta)
        if area < 0.0:
            raise DomainError(
                f"angle {theta!r} exceeds the Euclidean limit for n = {n}"
            )
        return cls(n=float(n), theta=theta, area=area)

    @classmethod
    def from_area(cls, n, area: float) -> "RegularPolygonSpec":
        return cls(n=float(n), theta=angle_from_area(n, area), area=area)

    @property
    def side(self) -> float:
        return side_length(self.n, self.theta)

    @property
    def perimeter(self) -> float:
        return perimeter_from_area(self.n, self.area)

    @property
    def circumradius(self) -> float:
        return circumradius(self.n, self.theta)

    def is_degenerate(self, tol: float = 1e-9) -> bool:
        return self.area < tol

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "theta": self.theta,
            "area": self.area,
            "side": self.side,
            "perimeter": self.perimeter,
            "circumradius": self.circumradius,
        }


def min_filling_length(g: int) -> float:
    """Shortest possible length of a filling closed geodesic, genus g.

    Equals half the perimeter of the right-angled regular (8g-4)-gon:
    the minimiser is the geodesic whose complement is that polygon,
    each side of which carries two arcs of the geodesic.
    """
    g = _check_genus(g)
    return 0.5 * perimeter_from_angle(8 * g - 4, math.pi / 2.0)


def kissing_lower_bound(g: int, sys: float) -> float:
    """min_filling_length(g) / sys.

    Lower bound for the number of distinct shortest filling geodesics
    on a closed hyperbolic surface of genus g with systole sys.
    """
    g = _check_genus(g)
    if not sys > 0.0:
        raise DomainError(f"systole must be positive, got {sys!r}")
    return min_filling_length(g) / sys


@dataclass(frozen=True)
class ExtremalReport:
    """Data about the genus-g length minimiser."""

    genus: int
    min_filling_length: float
    polygon_side: float
    polygon_perimeter: float
    kissing_lower_bound: float | None = None

    def as_dict(self) -> dict:
        d = {
            "genus": self.genus,
            "min_filling_length": self.min_filling_length,
            "polygon_side": self.polygon_side,
            "polygon_perimeter": self.polygon_perimeter,
        }
        if self.kissing_lower_bound is not None:
            d["kissing_lower_bound"] = self.kissing_lower_bound
        return d


def extremal_report(g: int, sys: float | None = None) -> ExtremalReport:
    g = _check_genus(g)
    n = 8 * g - 4
    perim = perimeter_from_angle(n, math.pi / 2.0)
    return ExtremalReport(
        genus=g,
        min_filling_length=0.5 * perim,
        polygon_side=side_length(n, math.pi / 2.0),
        polygon_perimeter=perim,
        kissing_lower_bound=None if sys is None else kissing_lower_bound(g, sys),
    )
