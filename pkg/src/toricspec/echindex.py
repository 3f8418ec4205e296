"""Combinatorial index formulas for orbit sets and lattice paths.

The central quantity is an even integer attached to a weighted collection
of orbits via trivialized topological data (writhe-type self-linking,
pairwise linking, and Conley-Zehnder indices of iterates). For ellipsoids
everything collapses to an explicit closed form in the two multiplicities,
and the index pairs up with the action ordering: the scan operation checks
that identity degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Callable

from .errors import (
    DegenerateRotationError,
    MissingCoverError,
    PreconditionError,
    ValidationError,
)
from .paths import LatticePath, _twice_area
from .spectra import count_action_pairs


def ellipsoid_index(a: Fraction, b: Fraction, m1: int, m2: int) -> int:
    """Closed form: 2 (m1 + m2 + m1 m2 + sum floor(j a / b) + sum floor(j b / a))."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValidationError("axes must be positive")
    if m1 < 0 or m2 < 0:
        raise ValidationError("multiplicities must be nonnegative")
    s1 = sum(floor(j * a / b) for j in range(1, m1 + 1))
    s2 = sum(floor(j * b / a) for j in range(1, m2 + 1))
    return 2 * (m1 + m2 + m1 * m2 + s1 + s2)


def ellipsoid_action(a: Fraction, b: Fraction, m1: int, m2: int) -> Fraction:
    return Fraction(a) * m1 + Fraction(b) * m2


def cz_from_rotation(rot: Fraction, *, elliptic: bool = False) -> int:
    """Conley-Zehnder index floor(rot) + ceil(rot) of a nondegenerate orbit.

    An elliptic orbit with integer rotation number is degenerate, which
    contradicts the nondegeneracy the formula assumes; that input is
    refused rather than silently evaluated.
    """
    rot = Fraction(rot)
    if elliptic and rot.denominator == 1:
        raise DegenerateRotationError(
            f"elliptic rotation number {rot} is an integer; orbit would be degenerate")
    return floor(rot) + ceil(rot)


@dataclass(frozen=True)
class OrbitRecord:
    """One orbit with its trivialized index data.

    cz_of_cover maps the cover degree j >= 1 to the Conley-Zehnder index
    of the j-th iterate; it is only ever called lazily for j up to the
    multiplicity. self_linking and chern are the writhe-type and relative
    first Chern numbers in the same trivialization.
    """

    label: str
    chern: int
    self_linking: int
    cz_of_cover: Callable[[int], int]
    multiplicity: int

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValidationError("orbit multiplicity must be positive")

    def cz(self, j: int) -> int:
        try:
            value = self.cz_of_cover(j)
        except Exception as exc:
            raise MissingCoverError(
                f"orbit {self.label!r} has no index data for cover {j}") from exc
        if not isinstance(value, int):
            raise MissingCoverError(
                f"orbit {self.label!r} returned non-integer index for cover {j}")
        return value


@dataclass(frozen=True)
class OrbitSet:
    """Orbits plus a symmetric pairwise linking matrix (diagonal ignored)."""

    orbits: tuple[OrbitRecord, ...]
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.orbits)
        labels = [o.label for o in self.orbits]
        if len(set(labels)) != n:
            raise ValidationError("orbit labels must be distinct")
        if len(self.linking) != n or any(len(row) != n for row in self.linking):
            raise ValidationError("linking matrix shape must match the orbit count")
        for i in range(n):
            for j in range(n):
                if i != j and self.linking[i][j] != self.linking[j][i]:
                    raise ValidationError("linking matrix must be symmetric")


def star_shaped_index(orbit_set: OrbitSet) -> int:
    """Index of an orbit set from first principles.

    Sum over orbits of (m^2 + m) chern + m^2 self_linking + the first m
    iterate indices, plus the ordered pairwise linking sum (each unordered
    pair of distinct orbits is counted twice).
    """
    total = 0
    orbits = orbit_set.orbits
    for i, o in enumerate(orbits):
        m = o.multiplicity
        total += (m * m + m) * o.chern + m * m * o.self_linking
        total += sum(o.cz(j) for j in range(1, m + 1))
        for j2, other in enumerate(orbits):
            if j2 != i:
                total += m * other.multiplicity * orbit_set.linking[i][j2]
    return total


def ellipsoid_orbit_set(a: Fraction, b: Fraction, m1: int, m2: int) -> OrbitSet:
    """The two-generator orbit set of an ellipsoid boundary.

    Both generators have chern number 1 and self-linking -1, they link
    once, and the iterate indices are 2 floor(j a / b) + 1 for the short
    generator and 2 floor(j b / a) + 1 for the long one. Multiplicity-zero
    generators are omitted from the set.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValidationError("axes must be positive")
    if m1 < 0 or m2 < 0 or m1 + m2 == 0:
        raise ValidationError("need nonnegative multiplicities, not both zero")

    def cz1(j: int) -> int:
        return 2 * floor(j * a / b) + 1

    def cz2(j: int) -> int:
        return 2 * floor(j * b / a) + 1

    orbits = []
    if m1 > 0:
        orbits.append(OrbitRecord("g1", 1, -1, cz1, m1))
    if m2 > 0:
        orbits.append(OrbitRecord("g2", 1, -1, cz2, m2))
    n = len(orbits)
    linking = tuple(tuple(0 if i == j else 1 for j in range(n)) for i in range(n))
    return OrbitSet(tuple(orbits), linking)


def _array_cover(label: str, values: list[int]) -> Callable[[int], int]:
    def cz(j: int) -> int:
        if j < 1:
            raise ValidationError(f"cover degree must be >= 1, got {j}")
        return values[j - 1]

    return cz


def orbit_set_from_jsonable(obj: object) -> OrbitSet:
    """Parse the JSON form of an orbit set.

    Each orbit carries label, chern, self_linking, multiplicity, and an
    explicit cz array (entry j - 1 is the index of the j-th iterate);
    linking is a full symmetric matrix in orbit order. A cz array shorter
    than the multiplicity surfaces as MissingCoverError on evaluation.
    """
    if not isinstance(obj, dict) or "orbits" not in obj or "linking" not in obj:
        raise ValidationError("orbit JSON must be an object with 'orbits' and 'linking'")
    if not isinstance(obj["orbits"], list) or not obj["orbits"]:
        raise ValidationError("'orbits' must be a nonempty list")
    orbits = []
    for item in obj["orbits"]:
        try:
            label = item["label"]
            chern = item["chern"]
            self_linking = item["self_linking"]
            multiplicity = item["multiplicity"]
            cz = list(item["cz"])
        except (TypeError, KeyError) as exc:
            raise ValidationError(f"bad orbit record: {item!r}") from exc
        if not all(isinstance(v, int) for v in (chern, self_linking, multiplicity)):
            raise ValidationError(f"orbit {label!r}: chern, self_linking, multiplicity must be integers")
        if not all(isinstance(v, int) for v in cz):
            raise ValidationError(f"orbit {label!r}: cz array must hold integers")
        orbits.append(OrbitRecord(str(label), chern, self_linking,
                                  _array_cover(str(label), cz), multiplicity))
    linking_raw = obj["linking"]
    if not isinstance(linking_raw, list):
        raise ValidationError("'linking' must be a matrix (list of lists)")
    linking = []
    for row in linking_raw:
        if not isinstance(row, list) or not all(isinstance(v, int) for v in row):
            raise ValidationError("'linking' rows must be integer lists")
        linking.append(tuple(row))
    return OrbitSet(tuple(orbits), tuple(linking))


def path_index_bounds(path: LatticePath) -> tuple[int, int]:
    """Index interval of the orbit sets represented by a path.

    Lower bound: twice the enclosed area plus both extents. Upper bound:
    lower plus the total multiplicity, which equals 2 (count - 1) with
    count the enclosed lattice points.
    """
    lower = _twice_area(path) + path.x_extent + path.y_extent
    upper = lower + path.total_multiplicity
    return lower, upper


@dataclass(frozen=True)
class IndexScanRow:
    m1: int
    m2: int
    action: Fraction
    index: int
    rank: int
    tangent_count: int


@dataclass(frozen=True)
class IndexScanReport:
    a: Fraction
    b: Fraction
    m_max: int
    rows: tuple[IndexScanRow, ...]


def index_action_scan(a: Fraction, b: Fraction, m_max: int) -> IndexScanReport:
    """Check index = 2 rank on the grid [0, m_max]^2 and report the rows.

    rank counts pairs of strictly smaller action, so index = 2 rank says
    the pair sits at position rank in the sorted action list; the tangent
    count (pairs with action <= this one) must independently satisfy
    index = 2 (count - 1). Both identities need the scanned range to be
    collision free: no j a / b or j b / a may be an integer for j up to
    m_max, and all actions up to (a + b) m_max must be pairwise distinct.
    Violations raise PreconditionError naming the collision.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValidationError("axes must be positive")
    if m_max < 0:
        raise ValidationError("m_max must be nonnegative")
    for j in range(1, m_max + 1):
        if (j * a / b).denominator == 1:
            raise PreconditionError(f"ratio collision: {j} * a / b = {j * a / b} is an integer")
        if (j * b / a).denominator == 1:
            raise PreconditionError(f"ratio collision: {j} * b / a = {j * b / a} is an integer")
    _assert_distinct_actions(a, b, (a + b) * m_max)
    rows = []
    for m1 in range(m_max + 1):
        for m2 in range(m_max + 1):
            action = ellipsoid_action(a, b, m1, m2)
            idx = ellipsoid_index(a, b, m1, m2)
            rank = count_action_pairs(a, b, action, strict=True)
            tangent = count_action_pairs(a, b, action)
            if idx != 2 * rank:
                raise AssertionError(
                    f"index {idx} != 2 * rank {rank} at (m1, m2) = ({m1}, {m2})")
            if idx != 2 * (tangent - 1):
                raise AssertionError(
                    f"index {idx} != 2 * (tangent count - 1) at ({m1}, {m2})")
            rows.append(IndexScanRow(m1, m2, action, idx, rank, tangent))
    return IndexScanReport(a, b, m_max, tuple(rows))


def _assert_distinct_actions(a: Fraction, b: Fraction, limit: Fraction) -> None:
    seen: dict[Fraction, tuple[int, int]] = {}
    m = 0
    while a * m <= limit:
        n = 0
        while a * m + b * n <= limit:
            v = a * m + b * n
            if v in seen:
                raise PreconditionError(
                    f"action collision: pairs {seen[v]} and ({m}, {n}) share action {v}")
            seen[v] = (m, n)
            n += 1
        m += 1
