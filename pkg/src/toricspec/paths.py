"""Convex integral lattice paths and enclosed lattice-point counts.

A path starts on the nonnegative y-axis, ends on the nonnegative x-axis,
and consists of integer-vector edges whose slopes strictly decrease from
left to right (horizontal first, vertical last). Together with the two
axis segments it bounds a convex region whose lattice points are what the
capacity minimizations count.

Two independent counting routes are provided: a direct column scan and
Pick's theorem. They must always agree; tests enforce this on random
paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Iterator, Sequence

from .errors import ValidationError

# ((dx, dy), multiplicity): dx >= 0, dy <= 0, gcd(dx, -dy) == 1, multiplicity >= 1
Edge = tuple[tuple[int, int], int]


def _direction_key(dx: int, dy: int) -> tuple[int, Fraction]:
    # sort key realizing strictly decreasing slope: 0 > -1/2 > -1 > ... > -inf
    if dx == 0:
        return (1, Fraction(0))
    return (0, Fraction(-dy, dx))


@dataclass(frozen=True)
class LatticePath:
    """Canonical convex path: primitive directions, merged, slope-sorted."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        last_key = None
        for (dx, dy), mult in self.edges:
            if not (isinstance(dx, int) and isinstance(dy, int) and isinstance(mult, int)):
                raise ValidationError("edges must be integer data")
            if dx < 0 or dy > 0 or (dx == 0 and dy == 0):
                raise ValidationError(f"direction ({dx}, {dy}) must point weakly right and down")
            if gcd(dx, -dy) != 1:
                raise ValidationError(f"direction ({dx}, {dy}) is not primitive")
            if mult < 1:
                raise ValidationError("multiplicities must be positive")
            key = _direction_key(dx, dy)
            if last_key is not None and key <= last_key:
                raise ValidationError("edge slopes must strictly decrease; use from_edges to canonicalize")
            last_key = key

    @classmethod
    def empty(cls) -> "LatticePath":
        return cls(())

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[tuple[int, int], int]]) -> "LatticePath":
        """Build a canonical path from raw edges.

        Non-primitive directions are reduced into their multiplicity,
        duplicate directions merged, zero multiplicities dropped, and the
        result sorted by decreasing slope.
        """
        merged: dict[tuple[int, int], int] = {}
        for (dx, dy), mult in edges:
            if mult == 0:
                continue
            if mult < 0:
                raise ValidationError("multiplicities must be nonnegative")
            if dx < 0 or dy > 0 or (dx == 0 and dy == 0):
                raise ValidationError(f"direction ({dx}, {dy}) must point weakly right and down")
            g = gcd(dx, -dy)
            d = (dx // g, dy // g)
            merged[d] = merged.get(d, 0) + g * mult
        ordered = sorted(merged.items(), key=lambda item: _direction_key(*item[0]))
        return cls(tuple(ordered))

    @classmethod
    def from_vertex_chain(cls, vertices: Sequence[tuple[int, int]]) -> "LatticePath":
        """Path whose vertices are the given chain from the y-axis endpoint."""
        edges = []
        for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
            edges.append(((x1 - x0, y1 - y0), 1))
        return cls.from_edges(edges)

    @property
    def x_extent(self) -> int:
        """End abscissa a: the path runs from (0, y_extent) to (x_extent, 0)."""
        return sum(m * dx for (dx, _dy), m in self.edges)

    @property
    def y_extent(self) -> int:
        return sum(-m * dy for (_dx, dy), m in self.edges)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _d, m in self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.edges

    @property
    def degenerate(self) -> bool:
        """True when the enclosed region has zero area (axis segment or empty)."""
        return self.x_extent == 0 or self.y_extent == 0

    def vertices(self) -> list[tuple[int, int]]:
        """Corner chain from (0, y_extent) to (x_extent, 0)."""
        x, y = 0, self.y_extent
        out = [(x, y)]
        for (dx, dy), m in self.edges:
            x += m * dx
            y += m * dy
            out.append((x, y))
        return out

    def to_jsonable(self) -> dict:
        return {"edges": [{"dir": [dx, dy], "mult": m} for (dx, dy), m in self.edges]}

    @classmethod
    def from_jsonable(cls, obj: object) -> "LatticePath":
        if not isinstance(obj, dict) or "edges" not in obj or not isinstance(obj["edges"], list):
            raise ValidationError("path JSON must be an object with an 'edges' list")
        edges = []
        for item in obj["edges"]:
            try:
                (dx, dy), m = (item["dir"][0], item["dir"][1]), item["mult"]
            except (TypeError, KeyError, IndexError) as exc:
                raise ValidationError(f"bad path edge: {item!r}") from exc
            edges.append(((dx, dy), m))
        return cls.from_edges(edges)


def _twice_area(path: LatticePath) -> int:
    # shoelace of the closed polygon (0,0) -> (0,b) -> ... -> (a,0) -> (0,0)
    verts = [(0, 0)] + path.vertices() + [(0, 0)]
    s = 0
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        s += x0 * y1 - x1 * y0
    return abs(s)


def enclosed_area(path: LatticePath) -> Fraction:
    """Area bounded by the path and the two axes."""
    return Fraction(_twice_area(path), 2)


def lattice_count_direct(path: LatticePath) -> int:
    """Lattice points in the enclosed region, boundary included, by column scan.

    The empty path encloses just the origin, so its count is 1.
    """
    total = path.y_extent + 1
    verts = path.vertices()
    for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
        if x1 == x0:
            continue
        for x in range(x0 + 1, x1 + 1):
            # exact floor of the boundary height over column x
            h = y0 + ((x - x0) * (y1 - y0)) // (x1 - x0)
            total += h + 1
    return total


def lattice_count_pick(path: LatticePath) -> int:
    """Same count via Pick's theorem: area + boundary/2 + 1.

    Degenerate paths bound no area and fall back to the direct scan.
    """
    if path.degenerate:
        return lattice_count_direct(path)
    twice = _twice_area(path)
    boundary = path.x_extent + path.y_extent + path.total_multiplicity
    if (twice + boundary) % 2 != 0:
        raise AssertionError(f"parity violated for {path!r}")
    return (twice + boundary) // 2 + 1


def _count_from_invariants(a: int, b: int, msum: int, chain_cross: int) -> int:
    # enclosed lattice points from incremental scan state, O(1)
    if a == 0 or b == 0:
        return a + b + 1
    twice = abs(chain_cross - a * b)
    return (twice + a + b + msum) // 2 + 1


def _scan_paths(
    dirs: Sequence[tuple[int, int, int]],
    bound: int,
    cap_a: int,
    cap_b: int,
    stack: list[list[int]],
) -> Iterator[tuple[int, int, int, int, int]]:
    """Depth-first walk over all admissible paths in scaled-integer arithmetic.

    dirs: (p, q, unit_cost) sorted by decreasing slope of (p, -q); every
    unit_cost is positive and <= bound. Yields (length, a, b, msum, cross)
    once per path, parents before children; `stack` holds the live edge
    list as [p, q, mult] entries and must be copied by the consumer if kept.
    """
    n = len(dirs)

    def walk(j0: int, ln: int, a: int, b: int, ms: int, cr: int, x: int, y: int):
        yield ln, a, b, ms, cr
        for j in range(j0, n):
            p, q, w = dirs[j]
            if ln + w > bound or a + p > cap_a or b + q > cap_b:
                continue
            entry = [p, q, 0]
            stack.append(entry)
            ln2, a2, b2, ms2, cr2, x2, y2 = ln, a, b, ms, cr, x, y
            while ln2 + w <= bound and a2 + p <= cap_a and b2 + q <= cap_b:
                ln2 += w
                a2 += p
                b2 += q
                ms2 += 1
                nx, ny = x2 + p, y2 - q
                cr2 += x2 * ny - nx * y2
                x2, y2 = nx, ny
                entry[2] += 1
                yield from walk(j + 1, ln2, a2, b2, ms2, cr2, x2, y2)
            stack.pop()

    yield from walk(0, 0, 0, 0, 0, 0, 0, 0)


def direction_table(
    max_length: Fraction,
    rho: Fraction,
    omega_length: Callable[[LatticePath], Fraction],
    inclusive: bool,
) -> tuple[list[tuple[int, int, int]], int, int]:
    """Admissible primitive directions with scaled unit costs.

    Returns (dirs, scaled bound, extent cap). Direction (p, -q) is kept
    when a single unit of it fits the length budget; rho must satisfy
    omega_length >= rho * (x_extent + y_extent) so the extent cap is sound.
    """
    if rho <= 0:
        raise ValidationError("rho must be positive")
    cap = int(max_length / rho)
    raw: list[tuple[tuple[int, Fraction], int, int, Fraction]] = []
    for p in range(cap + 1):
        for q in range(cap + 1):
            if (p == 0 and q == 0) or gcd(p, q) != 1:
                continue
            w = omega_length(LatticePath((((p, -q), 1),)))
            if w <= 0:
                raise ValidationError(f"unit edge ({p}, {-q}) has nonpositive length {w}")
            if w < max_length or (inclusive and w == max_length):
                raw.append((_direction_key(p, -q), p, q, w))
    raw.sort(key=lambda r: r[0])
    den = lcm(max_length.denominator, *(r[3].denominator for r in raw)) if raw else max_length.denominator
    dirs = [(p, q, int(w * den)) for _k, p, q, w in raw]
    bound = int(max_length * den)
    return dirs, bound, cap


def enumerate_paths(
    max_length: Fraction,
    rho: Fraction,
    omega_length: Callable[[LatticePath], Fraction],
    *,
    inclusive: bool = False,
) -> Iterator[LatticePath]:
    """Stream every path whose omega_length is below max_length.

    `omega_length` must be additive over the edge multiset (true for any
    dual-norm length); per-direction unit costs are measured on one-edge
    paths and partial sums drive the branch-and-bound pruning. `rho` is a
    positive lower bound with omega_length >= rho * (x_extent + y_extent),
    which caps both extents by max_length / rho.

    Order is deterministic: a path precedes its extensions, extensions are
    tried by decreasing slope, then by ascending multiplicity. The empty
    path comes first. With inclusive=True the budget test is <= instead
    of <; max_length <= 0 yields nothing in either mode.
    """
    if max_length <= 0:
        return
    dirs, bound, cap = direction_table(max_length, rho, omega_length, inclusive)
    if not inclusive:
        bound -= 1  # integer budgets make strict < equivalent to <= bound-1
    stack: list[list[int]] = []
    for _state in _scan_paths(dirs, bound, cap, cap, stack):
        yield LatticePath(tuple(((p, -q), m) for p, q, m in stack))
