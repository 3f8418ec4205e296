"""Minimum spectral gaps and the ellipsoid quantitative closing bound.

The gap of a spectrum below an action cutoff L is the least difference of
consecutive entries whose upper member still fits under L; it is infinite
when even the first positive entry exceeds L. For ellipsoids the closing
bound has a closed form in terms of two one-sided best rational
approximations of the axis ratio, found here by a mediant walk with
batched steps so large denominators cost logarithmic time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Sequence

from .errors import ConsistencyError, PreconditionError, ValidationError
from .spectra import EllipsoidSpectrum, Spectrum
from .domains import Ellipsoid


@dataclass(frozen=True)
class GapReport:
    cutoff: Fraction
    gap: Optional[Fraction]  # None encodes +infinity
    achieving_k: Optional[int]

    @property
    def is_infinite(self) -> bool:
        return self.gap is None


def spectral_gap(spectrum: Spectrum, cutoff: Fraction) -> GapReport:
    """Least c_{k+1} - c_k over all k with c_{k+1} <= cutoff.

    Ties in the spectrum give gap 0. achieving_k is the smallest k
    realizing the minimum. Infinite when c_1 > cutoff.
    """
    cutoff = Fraction(cutoff)
    if spectrum.value(1) > cutoff:
        return GapReport(cutoff, None, None)
    best: Optional[Fraction] = None
    best_k: Optional[int] = None
    k = 0
    while True:
        nxt = spectrum.value(k + 1)
        if nxt > cutoff:
            break
        diff = nxt - spectrum.value(k)
        if best is None or diff < best:
            best, best_k = diff, k
        k += 1
    return GapReport(cutoff, best, best_k)


@dataclass(frozen=True)
class Approximant:
    """One-sided best rational approximation n/m or m/n under a denominator cap."""

    side: str  # "below" or "above"
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.side not in ("below", "above"):
            raise ValidationError("side must be 'below' or 'above'")
        if self.side == "below" and (self.m < 1 or self.n < 0):
            raise ValidationError("below approximant needs m >= 1, n >= 0")
        if self.side == "above" and (self.n < 1 or self.m < 0):
            raise ValidationError("above approximant needs n >= 1, m >= 0")


def _best_frac_le(x: Fraction, max_den: int) -> tuple[int, int]:
    """Largest fraction <= x with denominator at most max_den, reduced.

    Mediant walk between 0/1 and 1/0 with run-length batching: any
    fraction strictly between the walk's fences has denominator beyond
    both, so once the fence denominators exceed the cap the lower fence
    is the answer.
    """
    if x <= 0:
        raise ValidationError("target must be positive")
    if max_den < 1:
        raise ValidationError("denominator cap must be at least 1")
    if x.denominator <= max_den:
        return x.numerator, x.denominator
    ln, ld = 0, 1
    rn, rd = 1, 0
    while ld + rd <= max_den:
        if Fraction(ln + rn, ld + rd) <= x:
            # batch steps toward the target from below
            t = floor((x * ld - ln) / (rn - x * rd))
            if rd:
                t = min(t, (max_den - ld) // rd)
            ln, ld = ln + t * rn, ld + t * rd
        else:
            # batch steps tightening the upper fence
            t = ceil((rn - x * rd) / (x * ld - ln)) - 1
            rn, rd = rn + t * ln, rd + t * ld
    return ln, ld


def best_approx_below(a: Fraction, b: Fraction, cutoff: Fraction) -> Approximant:
    """Coprime (m, n), m >= 1, maximizing n/m subject to n/m <= a/b, a m <= cutoff."""
    a, b, cutoff = _check_close_inputs(a, b, cutoff)
    m_cap = floor(cutoff / a)
    n, m = _best_frac_le(a / b, m_cap)
    if n == 0:
        m = 1  # every 0/m is the same approximation; keep the canonical one
    return Approximant("below", m, n)


def best_approx_above(a: Fraction, b: Fraction, cutoff: Fraction) -> Approximant:
    """Coprime (m, n), n >= 1, maximizing m/n subject to m/n <= b/a, b n <= cutoff."""
    a, b, cutoff = _check_close_inputs(a, b, cutoff)
    n_cap = floor(cutoff / b)
    m, n = _best_frac_le(b / a, n_cap)
    if m == 0:
        n = 1
    return Approximant("above", m, n)


def _check_close_inputs(a, b, cutoff) -> tuple[Fraction, Fraction, Fraction]:
    a, b, cutoff = Fraction(a), Fraction(b), Fraction(cutoff)
    if a <= 0 or b <= 0:
        raise ValidationError("axes must be positive")
    if cutoff < max(a, b):
        raise PreconditionError(
            f"cutoff {cutoff} is below max(a, b) = {max(a, b)}; no approximant exists")
    return a, b, cutoff


def ellipsoid_close(a: Fraction, b: Fraction, cutoff: Fraction) -> Fraction:
    """Closing bound min(a m- - b n-, b n+ - a m+) from the two approximants."""
    below = best_approx_below(a, b, cutoff)
    above = best_approx_above(a, b, cutoff)
    a, b, cutoff = _check_close_inputs(a, b, cutoff)
    d_below = a * below.m - b * below.n
    d_above = b * above.n - a * above.m
    if d_below < 0 or d_above < 0:
        raise AssertionError("approximant on the wrong side of the ratio")
    return min(d_below, d_above)


def close_gap_consistency(a: Fraction, b: Fraction,
                          cutoffs: Sequence[Fraction]) -> list[dict]:
    """Check close <= gap at each cutoff; raise with a counterexample otherwise.

    Returns rows (cutoff, close, gap, margin). An infinite gap satisfies
    the inequality vacuously and is reported with gap None.
    """
    a, b = Fraction(a), Fraction(b)
    spectrum = EllipsoidSpectrum(Ellipsoid(a, b))
    rows = []
    for cutoff in cutoffs:
        cutoff = Fraction(cutoff)
        close = ellipsoid_close(a, b, cutoff)
        report = spectral_gap(spectrum, cutoff)
        if report.gap is not None and close > report.gap:
            raise ConsistencyError(
                f"close {close} exceeds gap {report.gap} at cutoff {cutoff} "
                f"for axes ({a}, {b})")
        margin = None if report.gap is None else report.gap - close
        rows.append({"cutoff": cutoff, "close": close,
                     "gap": report.gap, "margin": margin})
    return rows


def gap_asymptotics(spectrum: Spectrum, cutoffs: Sequence[Fraction]) -> list[dict]:
    """Rows (cutoff, gap, cutoff * gap, suffix supremum of cutoff * gap).

    Infinite gaps are flagged and excluded from the suprema; the suffix
    supremum is over the given grid only, and no claim is made about any
    limit beyond it.
    """
    base = []
    for cutoff in cutoffs:
        cutoff = Fraction(cutoff)
        report = spectral_gap(spectrum, cutoff)
        scaled = None if report.gap is None else cutoff * report.gap
        base.append({"cutoff": cutoff, "gap": report.gap, "scaled": scaled,
                     "infinite": report.is_infinite})
    sup: Optional[Fraction] = None
    for row in reversed(base):
        if row["scaled"] is not None and (sup is None or row["scaled"] > sup):
            sup = row["scaled"]
        row["suffix_sup"] = sup
    return base
