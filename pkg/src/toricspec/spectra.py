"""Spectral invariants of toric-type domains, with witnesses.

Every capacity value returned here comes with a witness that reproduces
it: a monomial exponent pair for ellipsoids, the defining integer for
balls, a lattice path for polygonal profiles, and a partition plus
sub-witnesses for disjoint unions. Two independent routes exist for the
ellipsoid sequence (a heap merge and a counting inversion) and two for
profiles (the path minimization here against the closed forms); tests
hold them to exact agreement.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Optional, Sequence

from .domains import (
    Ball,
    DisjointUnion,
    Domain,
    Ellipsoid,
    ToricProfile,
    contact_volume,
    norm_floor,
    omega_length,
    scale_domain,
)
from .errors import PreconditionError, UnavailableError, ValidationError
from .paths import (
    LatticePath,
    _count_from_invariants,
    _scan_paths,
    direction_table,
    lattice_count_pick,
)
from .rationals import Rat


def _check_axes(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValidationError("axes must be positive rationals")
    return a, b


def nk_sequence(a: Fraction, b: Fraction, k_max: int) -> list[tuple[Fraction, tuple[int, int]]]:
    """First k_max + 1 values of the sorted multiset {a m + b n : m, n >= 0}.

    Returned with witnesses (m, n); ties are emitted in lexicographic
    (m, n) order. Entry k is the k-th spectral invariant of E(a, b).
    """
    a, b = _check_axes(a, b)
    if k_max < 0:
        raise ValidationError("k_max must be nonnegative")
    heap: list[tuple[Fraction, int, int]] = [(Fraction(0), 0, 0)]
    seen = {(0, 0)}
    out: list[tuple[Fraction, tuple[int, int]]] = []
    while len(out) <= k_max:
        val, m, n = heapq.heappop(heap)
        out.append((val, (m, n)))
        for m2, n2 in ((m + 1, n), (m, n + 1)):
            if (m2, n2) not in seen:
                seen.add((m2, n2))
                heapq.heappush(heap, (a * m2 + b * n2, m2, n2))
    return out


def _scaled_pair(a: Fraction, b: Fraction) -> tuple[int, int, int]:
    # represent a = an/d, b = bn/d over a common denominator
    d = lcm(a.denominator, b.denominator)
    return a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d


def count_action_pairs(a: Fraction, b: Fraction, limit: Fraction, *, strict: bool = False) -> int:
    """Number of pairs (m, n) of nonnegative integers with a m + b n <= limit.

    With strict=True the inequality is strict. Pure integer row scan over
    the variable with the larger coefficient, so the row count is minimal.
    """
    a, b = _check_axes(a, b)
    limit = Fraction(limit)
    if limit < 0:
        return 0
    d = lcm(a.denominator, b.denominator, limit.denominator)
    an, bn, ln = int(a * d), int(b * d), int(limit * d)
    if strict:
        ln -= 1  # integer actions: strict < ln+1 equals <= ln
    return _count_scaled(an, bn, ln)


def nk_via_lattice(a: Fraction, b: Fraction, k: int) -> Fraction:
    """Entry k of the ellipsoid sequence by counting inversion.

    Independent of the heap route: the k-th value is the least L in the
    value grid with at least k + 1 pairs of action <= L. k = 0 returns 0
    by that same convention (the empty pair has action 0).
    """
    a, b = _check_axes(a, b)
    if k < 0:
        raise ValidationError("k must be nonnegative")
    an, bn, d = _scaled_pair(a, b)
    hi = max(an, bn)
    while _count_scaled(an, bn, hi) < k + 1:
        hi *= 2
    values = sorted({an * m + bn * n
                     for m in range(hi // an + 1)
                     for n in range((hi - an * m) // bn + 1)})
    lo_idx, hi_idx = 0, len(values) - 1
    while lo_idx < hi_idx:
        mid = (lo_idx + hi_idx) // 2
        if _count_scaled(an, bn, values[mid]) >= k + 1:
            hi_idx = mid
        else:
            lo_idx = mid + 1
    return Fraction(values[lo_idx], d)


def _count_scaled(an: int, bn: int, ln: int) -> int:
    if ln < 0:
        return 0
    if an < bn:
        an, bn = bn, an
    total = 0
    r = 0
    while an * r <= ln:
        total += (ln - an * r) // bn + 1
        r += 1
    return total


def ball_capacity(a: Fraction, k: int) -> tuple[Fraction, dict]:
    """Closed form for the ball: value d a, where d is the unique
    nonnegative integer with d^2 + d <= 2k <= d^2 + 3d."""
    a = Fraction(a)
    if a <= 0:
        raise ValidationError("ball parameter must be positive")
    if k < 0:
        raise ValidationError("k must be nonnegative")
    d = (isqrt(8 * k + 1) - 1) // 2
    if not (d * d + d <= 2 * k <= d * d + 3 * d):
        raise AssertionError(f"defining inequalities failed for k={k}, d={d}")
    return d * a, {"d": d}


@dataclass(frozen=True)
class ToricCapacityResult:
    """Outcome of one profile minimization, both minima recorded."""

    value: Fraction
    witness: LatticePath
    min_over_at_least: Fraction
    min_over_exact: Fraction
    witness_at_least: LatticePath
    enumeration_bound: Fraction
    paths_scanned: int


def _greedy_feasible_path(profile: ToricProfile, k: int) -> LatticePath:
    # hull of {(x, y) >= 0 : b x + a y <= N_k(a, b)} encloses >= k+1 points,
    # where a, b are the intercepts; its boundary is a feasible path
    a_int, b_int = profile.x_intercept, profile.y_intercept
    level = nk_via_lattice(a_int, b_int, k)
    d = lcm(a_int.denominator, b_int.denominator, level.denominator)
    an, bn, ln = int(a_int * d), int(b_int * d), int(level * d)
    xmax = ln // bn
    pts = [(x, (ln - bn * x) // an) for x in range(xmax + 1)]
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (x1 - x0) * (p[1] - y0) >= (y1 - y0) * (p[0] - x0):
                hull.pop()
            else:
                break
        hull.append(p)
    if hull[-1][1] > 0:
        hull.append((hull[-1][0], 0))
    if len(hull) == 1:
        return LatticePath.empty()
    return LatticePath.from_vertex_chain(hull)


def toric_capacity_detail(profile: ToricProfile, k: int) -> ToricCapacityResult:
    """Minimal path length with at least k + 1 enclosed lattice points.

    Runs one inclusive branch-and-bound enumeration below a greedy
    feasible bound, tracking the minimum over paths enclosing at least
    k + 1 points and separately over paths enclosing exactly k + 1. The
    two minima must coincide (corners of any minimizer can be rounded
    without changing the length budget); their equality is asserted and
    both are reported.
    """
    if not isinstance(profile, ToricProfile):
        raise ValidationError("toric_capacity needs a ToricProfile")
    if k < 0:
        raise ValidationError("k must be nonnegative")
    if k == 0:
        empty = LatticePath.empty()
        return ToricCapacityResult(Fraction(0), empty, Fraction(0), Fraction(0), empty,
                                   Fraction(0), 1)
    greedy = _greedy_feasible_path(profile, k)
    bound = omega_length(profile, greedy)
    need = k + 1
    if lattice_count_pick(greedy) < need:
        raise AssertionError("greedy path must be feasible")
    rho = norm_floor(profile)
    dirs, bound_int, cap = direction_table(bound, rho, lambda p: omega_length(profile, p), True)
    stack: list[list[int]] = []
    best_ge: Optional[tuple[int, tuple]] = None
    best_eq: Optional[tuple[int, tuple]] = None
    scanned = 0
    for ln, a, b, msum, cross in _scan_paths(dirs, bound_int, cap, cap, stack):
        scanned += 1
        count = _count_from_invariants(a, b, msum, cross)
        if count >= need and (best_ge is None or ln < best_ge[0]):
            best_ge = (ln, tuple((p, q, m) for p, q, m in stack))
        if count == need and (best_eq is None or ln < best_eq[0]):
            best_eq = (ln, tuple((p, q, m) for p, q, m in stack))
    if best_ge is None or best_eq is None:
        raise AssertionError("enumeration missed the greedy feasible path")
    scale = Fraction(bound_int) / bound  # the common denominator used by the scan
    val_ge = Fraction(best_ge[0]) / scale
    val_eq = Fraction(best_eq[0]) / scale
    if val_ge != val_eq:
        raise AssertionError(
            f"corner rounding failed: min over >= is {val_ge}, min over == is {val_eq}")
    path_eq = LatticePath(tuple(((p, -q), m) for p, q, m in best_eq[1]))
    path_ge = LatticePath(tuple(((p, -q), m) for p, q, m in best_ge[1]))
    return ToricCapacityResult(val_eq, path_eq, val_ge, val_eq, path_ge, bound, scanned)


def toric_capacity(profile: ToricProfile, k: int) -> tuple[Fraction, LatticePath]:
    """Value and witness path (enclosing exactly k + 1 lattice points)."""
    res = toric_capacity_detail(profile, k)
    return res.value, res.witness


class Spectrum:
    """Nondecreasing sequence c_0 = 0 <= c_1 <= ... with witnesses, lazily extended."""

    kind = "abstract"

    def __init__(self) -> None:
        self._cache: list[tuple[Fraction, object]] = [(Fraction(0), self._zero_witness())]

    def _zero_witness(self) -> object:
        return None

    def _compute(self, k: int) -> tuple[Fraction, object]:
        raise NotImplementedError

    def entry(self, k: int) -> tuple[Fraction, object]:
        if k < 0:
            raise ValidationError("k must be nonnegative")
        while len(self._cache) <= k:
            j = len(self._cache)
            val, wit = self._compute(j)
            if val < self._cache[-1][0]:
                raise AssertionError(f"spectrum not nondecreasing at k={j}")
            self._cache.append((val, wit))
        return self._cache[k]

    def value(self, k: int) -> Fraction:
        return self.entry(k)[0]

    def entries(self, k_max: int) -> list[tuple[Fraction, object]]:
        self.entry(k_max)
        return list(self._cache[: k_max + 1])

    def values(self, k_max: int) -> list[Fraction]:
        return [v for v, _w in self.entries(k_max)]

    def domain(self) -> Domain:
        raise NotImplementedError

    def contact_volume(self) -> Fraction:
        return contact_volume(self.domain())

    def scaled(self, r: Fraction) -> "Spectrum":
        return spectrum_for(scale_domain(self.domain(), Fraction(r)))


class EllipsoidSpectrum(Spectrum):
    """Heap merge of the two generators' multiples, extended on demand."""

    kind = "ellipsoid"

    def __init__(self, ellipsoid: Ellipsoid) -> None:
        if not isinstance(ellipsoid, Ellipsoid):
            raise ValidationError("EllipsoidSpectrum needs an Ellipsoid")
        self._ellipsoid = ellipsoid
        self._heap: list[tuple[Fraction, int, int]] = []
        self._seen = {(0, 0)}
        super().__init__()
        self._expand(0, 0)  # k = 0 is the cached (0, 0) entry; seed its successors

    def _push(self, m: int, n: int) -> None:
        e = self._ellipsoid
        heapq.heappush(self._heap, (e.a * m + e.b * n, m, n))

    def _expand(self, m: int, n: int) -> None:
        for m2, n2 in ((m + 1, n), (m, n + 1)):
            if (m2, n2) not in self._seen:
                self._seen.add((m2, n2))
                self._push(m2, n2)

    def _zero_witness(self) -> object:
        return {"m": 0, "n": 0}

    def _compute(self, k: int) -> tuple[Fraction, object]:
        val, m, n = heapq.heappop(self._heap)
        self._expand(m, n)
        return val, {"m": m, "n": n}

    def domain(self) -> Domain:
        return self._ellipsoid

    def check_witness(self, k: int) -> bool:
        val, wit = self.entry(k)
        e = self._ellipsoid
        return val == e.a * wit["m"] + e.b * wit["n"]


class BallSpectrum(Spectrum):
    kind = "ball"

    def __init__(self, ball: Ball) -> None:
        if not isinstance(ball, Ball):
            raise ValidationError("BallSpectrum needs a Ball")
        self._ball = ball
        super().__init__()

    def _zero_witness(self) -> object:
        return {"d": 0}

    def _compute(self, k: int) -> tuple[Fraction, object]:
        return ball_capacity(self._ball.a, k)

    def domain(self) -> Domain:
        return self._ball

    def check_witness(self, k: int) -> bool:
        val, wit = self.entry(k)
        d = wit["d"]
        return val == d * self._ball.a and d * d + d <= 2 * k <= d * d + 3 * d


class ToricSpectrum(Spectrum):
    kind = "toric"

    def __init__(self, profile: ToricProfile) -> None:
        if not isinstance(profile, ToricProfile):
            raise ValidationError("ToricSpectrum needs a ToricProfile")
        self._profile = profile
        super().__init__()

    def _zero_witness(self) -> object:
        return LatticePath.empty()

    def _compute(self, k: int) -> tuple[Fraction, object]:
        return toric_capacity(self._profile, k)

    def domain(self) -> Domain:
        return self._profile

    def check_witness(self, k: int) -> bool:
        val, wit = self.entry(k)
        return omega_length(self._profile, wit) == val and lattice_count_pick(wit) == k + 1


class UnionSpectrum(Spectrum):
    """Max-plus convolution of the part spectra over partitions of k."""

    kind = "union"

    def __init__(self, parts: Sequence[Spectrum]) -> None:
        if not parts:
            raise ValidationError("union needs at least one part spectrum")
        self._parts = list(parts)
        super().__init__()

    def _zero_witness(self) -> object:
        return {"partition": [0] * len(self._parts),
                "parts": [p._zero_witness() for p in self._parts]}

    def _compute(self, k: int) -> tuple[Fraction, object]:
        values: list[list[Fraction]] = []
        for idx, p in enumerate(self._parts):
            try:
                values.append(p.values(k))
            except UnavailableError as exc:
                raise UnavailableError(f"union part {idx} ({p.kind}): {exc}") from exc
        # dp[j] = best total over the first i parts at budget j
        dp = list(values[0][: k + 1])
        back: list[list[int]] = [[j for j in range(k + 1)]]
        for vals in values[1:]:
            nxt: list[Fraction] = []
            arg: list[int] = []
            for j in range(k + 1):
                best = None
                bt = 0
                for t in range(j + 1):
                    cand = dp[t] + vals[j - t]
                    if best is None or cand > best:
                        best, bt = cand, t
                nxt.append(best)
                arg.append(bt)
            dp = nxt
            back.append(arg)
        parts_k: list[int] = []
        j = k
        for i in range(len(self._parts) - 1, 0, -1):
            t = back[i][j]
            parts_k.append(j - t)
            j = t
        parts_k.append(j)
        parts_k.reverse()
        witness = {"partition": parts_k,
                   "parts": [p.entry(ki)[1] for p, ki in zip(self._parts, parts_k)]}
        return dp[k], witness

    def domain(self) -> Domain:
        return DisjointUnion(tuple(p.domain() for p in self._parts))

    def scaled(self, r: Fraction) -> "Spectrum":
        return UnionSpectrum([p.scaled(r) for p in self._parts])

    def check_witness(self, k: int) -> bool:
        val, wit = self.entry(k)
        ks = wit["partition"]
        return (sum(ks) == k
                and val == sum(p.value(ki) for p, ki in zip(self._parts, ks)))


def union_capacity(parts: Sequence[Spectrum], k: int) -> tuple[Fraction, dict]:
    """Largest sum of part values over partitions k_1 + ... + k_m = k."""
    spec = UnionSpectrum(parts)
    val, wit = spec.entry(k)
    return val, wit


def spectrum_for(domain: Domain) -> Spectrum:
    if isinstance(domain, Ellipsoid):
        return EllipsoidSpectrum(domain)
    if isinstance(domain, Ball):
        return BallSpectrum(domain)
    if isinstance(domain, ToricProfile):
        return ToricSpectrum(domain)
    if isinstance(domain, DisjointUnion):
        return UnionSpectrum([spectrum_for(p) for p in domain.parts])
    raise ValidationError(f"not a domain: {domain!r}")


def conformal_scale(spectrum: Spectrum, r: Fraction) -> Spectrum:
    """Spectrum of the domain dilated by r; values scale linearly in r."""
    r = Fraction(r)
    if r <= 0:
        raise ValidationError("scale factor must be positive")
    return spectrum.scaled(r)


def weyl_report(spectrum: Spectrum, ks: Sequence[int],
                volume: Optional[Fraction] = None) -> list[dict]:
    """Diagnostic rows (k, c_k, c_k^2 / k, deviation from 2 * volume).

    The asymptotic slope of c_k^2 / k is twice the contact volume; rows
    report the exact finite-k deviation and claim nothing about limits.
    """
    if volume is None:
        volume = spectrum.contact_volume()
    rows = []
    for k in ks:
        if k < 1:
            raise ValidationError("weyl rows need k >= 1")
        c = spectrum.value(k)
        ratio = c * c / k
        rows.append({"k": k, "value": c, "ratio": ratio,
                     "deviation": ratio - 2 * volume})
    return rows
