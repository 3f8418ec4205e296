"""Domain descriptions: ellipsoids, balls, polygonal profiles, disjoint unions.

A toric domain is described by the boundary profile of its moment region:
a convex chain from (0, b) on the y-axis to (a, 0) on the x-axis. The
four-fold symmetrization of the region induces a dual norm on covectors,
and that norm is all later modules ever need; the symmetrized body itself
is never materialized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ValidationError
from .paths import LatticePath
from .rationals import parse_rat, to_string


@dataclass(frozen=True)
class Ellipsoid:
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if not (isinstance(self.a, Fraction) and isinstance(self.b, Fraction)):
            raise ValidationError("ellipsoid axes must be Fractions")
        if self.a <= 0 or self.b <= 0:
            raise ValidationError("ellipsoid axes must be positive")

    def profile(self) -> "ToricProfile":
        return triangle_profile(self.a, self.b)

    def to_jsonable(self) -> dict:
        return {"type": "ellipsoid", "a": to_string(self.a), "b": to_string(self.b)}


@dataclass(frozen=True)
class Ball:
    """Round ball; equals the ellipsoid with both axes a but carries its own provider."""

    a: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.a, Fraction):
            raise ValidationError("ball radius parameter must be a Fraction")
        if self.a <= 0:
            raise ValidationError("ball radius parameter must be positive")

    def as_ellipsoid(self) -> Ellipsoid:
        return Ellipsoid(self.a, self.a)

    def profile(self) -> "ToricProfile":
        return triangle_profile(self.a, self.a)

    def to_jsonable(self) -> dict:
        return {"type": "ball", "a": to_string(self.a)}


@dataclass(frozen=True)
class ToricProfile:
    """Validated convex chain from (0, b) to (a, 0); vertices are exact pairs."""

    vertices: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(v) < 2:
            raise ValidationError("profile needs at least two vertices")
        for x, y in v:
            if not (isinstance(x, Fraction) and isinstance(y, Fraction)):
                raise ValidationError("profile vertices must be Fraction pairs")
        (x0, y0), (xn, yn) = v[0], v[-1]
        if x0 != 0 or y0 <= 0:
            raise ValidationError("profile must start at (0, b) with b > 0")
        if yn != 0 or xn <= 0:
            raise ValidationError("profile must end at (a, 0) with a > 0")
        for x, y in v[1:-1]:
            if x <= 0 or y <= 0:
                raise ValidationError("interior profile vertices must be strictly positive")
        prev_slope: Fraction | None = None
        prev_vertical = False
        for (ax, ay), (bx, by) in zip(v, v[1:]):
            dx, dy = bx - ax, by - ay
            if dx < 0 or dy > 0 or (dx == 0 and dy == 0):
                raise ValidationError("profile edges must point weakly right and down")
            if prev_vertical:
                raise ValidationError("vertical edge allowed only as the final edge")
            if dx == 0:
                prev_vertical = True  # slope -inf, strictly below any finite slope
                continue
            slope = Fraction(dy, dx)
            if prev_slope is not None and slope >= prev_slope:
                raise ValidationError("profile slopes must strictly decrease")
            prev_slope = slope

    @property
    def x_intercept(self) -> Fraction:
        return self.vertices[-1][0]

    @property
    def y_intercept(self) -> Fraction:
        return self.vertices[0][1]

    def to_jsonable(self) -> dict:
        return {
            "type": "toric",
            "vertices": [[to_string(x), to_string(y)] for x, y in self.vertices],
        }


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple["Domain", ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValidationError("union needs at least one part")
        for p in self.parts:
            if isinstance(p, DisjointUnion):
                raise ValidationError("nested unions are not supported; flatten the parts")

    def to_jsonable(self) -> dict:
        return {"type": "union", "parts": [p.to_jsonable() for p in self.parts]}


Domain = Union[Ellipsoid, Ball, ToricProfile, DisjointUnion]


def validate_profile(vertices) -> ToricProfile:
    """Normalize and validate a raw vertex list.

    Coordinates are coerced to Fractions, collinear interior vertices are
    merged silently, and the chain conditions (start on the positive
    y-axis, end on the positive x-axis, interior vertices strictly inside
    the quadrant, slopes strictly decreasing) are enforced.
    """
    try:
        pts = []
        for x, y in vertices:
            if isinstance(x, float) or isinstance(y, float):
                raise ValidationError("profile vertices must be exact; floats are rejected")
            pts.append((Fraction(x), Fraction(y)))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"profile vertices must be rational pairs: {vertices!r}") from exc
    if len(pts) < 2:
        raise ValidationError("profile needs at least two vertices")
    merged = [pts[0]]
    for p in pts[1:]:
        if p == merged[-1]:
            continue
        if len(merged) >= 2:
            (x0, y0), (x1, y1) = merged[-2], merged[-1]
            if (x1 - x0) * (p[1] - y0) == (p[0] - x0) * (y1 - y0):
                merged.pop()
        merged.append(p)
    return ToricProfile(tuple(merged))


def triangle_profile(a: Fraction, b: Fraction) -> ToricProfile:
    """Profile of the triangle with intercepts a on x and b on y."""
    return validate_profile([(0, b), (a, 0)])


def square_profile(c: Fraction) -> ToricProfile:
    return validate_profile([(0, c), (c, c), (c, 0)])


def dual_norm(profile: ToricProfile, v: tuple[Fraction, Fraction]) -> Fraction:
    """Support function of the symmetrized region at covector v.

    By symmetry this is max over profile vertices of |v1| x + |v2| y,
    so the symmetrized body never needs to be built.
    """
    v1, v2 = abs(Fraction(v[0])), abs(Fraction(v[1]))
    return max(v1 * x + v2 * y for x, y in profile.vertices)


def omega_length(profile: ToricProfile, path: LatticePath) -> Fraction:
    """Length of a path: each edge contributes the dual norm of its rotate.

    An edge in direction (p, -q) with multiplicity m contributes
    m * dual_norm((q, p)). Additive over the edge multiset by definition.
    """
    total = Fraction(0)
    for (dx, dy), m in path.edges:
        total += m * dual_norm(profile, (Fraction(-dy), Fraction(dx)))
    return total


def norm_floor(profile: ToricProfile) -> Fraction:
    """Positive rho with dual_norm(v) >= rho * (|v1| + |v2|) for all v.

    dual_norm dominates max(a |v1|, b |v2|) with a, b the intercepts, and
    max(s, t) >= (s + t) / 2, so min(a, b) / 2 works.
    """
    return min(dual_norm(profile, (Fraction(1), Fraction(0))),
               dual_norm(profile, (Fraction(0), Fraction(1)))) / 2


def profile_area(profile: ToricProfile) -> Fraction:
    """Area of the moment region bounded by the profile and the axes."""
    verts = [(Fraction(0), Fraction(0))] + list(profile.vertices) + [(Fraction(0), Fraction(0))]
    s = Fraction(0)
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        s += x0 * y1 - x1 * y0
    return abs(s) / 2


def contact_volume(domain: Domain) -> Fraction:
    """Volume of the boundary contact form: ab for E(a, b), twice the
    moment-region area for a profile, additive over unions."""
    if isinstance(domain, Ellipsoid):
        return domain.a * domain.b
    if isinstance(domain, Ball):
        return domain.a * domain.a
    if isinstance(domain, ToricProfile):
        return 2 * profile_area(domain)
    if isinstance(domain, DisjointUnion):
        return sum((contact_volume(p) for p in domain.parts), Fraction(0))
    raise ValidationError(f"not a domain: {domain!r}")


def scale_domain(domain: Domain, r: Fraction) -> Domain:
    """Dilate all profile data by r > 0."""
    if r <= 0:
        raise ValidationError("scale factor must be positive")
    if isinstance(domain, Ellipsoid):
        return Ellipsoid(r * domain.a, r * domain.b)
    if isinstance(domain, Ball):
        return Ball(r * domain.a)
    if isinstance(domain, ToricProfile):
        return ToricProfile(tuple((r * x, r * y) for x, y in domain.vertices))
    if isinstance(domain, DisjointUnion):
        return DisjointUnion(tuple(scale_domain(p, r) for p in domain.parts))
    raise ValidationError(f"not a domain: {domain!r}")


def domain_from_jsonable(obj: object) -> Domain:
    """Parse the JSON object form of a domain. Inverse of to_jsonable."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValidationError("domain JSON must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "ellipsoid":
        _require_keys(obj, {"type", "a", "b"})
        return Ellipsoid(parse_rat(obj["a"]), parse_rat(obj["b"]))
    if kind == "ball":
        _require_keys(obj, {"type", "a"})
        return Ball(parse_rat(obj["a"]))
    if kind == "toric":
        _require_keys(obj, {"type", "vertices"})
        verts = obj["vertices"]
        if not isinstance(verts, list):
            raise ValidationError("toric 'vertices' must be a list")
        pairs = []
        for item in verts:
            if not isinstance(item, list) or len(item) != 2:
                raise ValidationError(f"profile vertex must be a two-element list: {item!r}")
            pairs.append((parse_rat(item[0]), parse_rat(item[1])))
        return validate_profile(pairs)
    if kind == "union":
        _require_keys(obj, {"type", "parts"})
        if not isinstance(obj["parts"], list) or not obj["parts"]:
            raise ValidationError("union 'parts' must be a nonempty list")
        return DisjointUnion(tuple(domain_from_jsonable(p) for p in obj["parts"]))
    raise ValidationError(f"unknown domain type: {kind!r}")


def load_domain(path: str) -> Domain:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"malformed domain JSON in {path}: {exc}") from exc
    return domain_from_jsonable(obj)


def _require_keys(obj: dict, allowed: set) -> None:
    extra = set(obj) - allowed
    missing = allowed - set(obj)
    if missing:
        raise ValidationError(f"domain JSON missing fields: {sorted(missing)}")
    if extra:
        raise ValidationError(f"domain JSON has unknown fields: {sorted(extra)}")
