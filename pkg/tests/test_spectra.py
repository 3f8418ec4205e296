"""Spectral sequences: both ellipsoid routes, closed forms, path minima,
union convolution, scaling, Weyl diagnostics."""

from fractions import Fraction
from itertools import product

import pytest

from toricspec import (
    Ball,
    BallSpectrum,
    DisjointUnion,
    Ellipsoid,
    EllipsoidSpectrum,
    LatticePath,
    Spectrum,
    ToricSpectrum,
    UnavailableError,
    UnionSpectrum,
    ValidationError,
    ball_capacity,
    conformal_scale,
    count_action_pairs,
    lattice_count_pick,
    nk_sequence,
    nk_via_lattice,
    omega_length,
    spectrum_for,
    toric_capacity,
    toric_capacity_detail,
    triangle_profile,
    square_profile,
    union_capacity,
    validate_profile,
    weyl_report,
)
from test_paths import naive_paths

F = Fraction


class TestEllipsoidSequence:
    def test_frozen_small_values(self):
        vals = [v for v, _w in nk_sequence(F(2), F(3), 10)]
        assert vals == [0, 2, 3, 4, 5, 6, 6, 7, 8, 8, 9]

    def test_tie_witnesses_in_lex_order(self):
        seq = nk_sequence(F(2), F(3), 10)
        assert seq[5] == (6, (0, 2)) and seq[6] == (6, (3, 0))
        assert seq[8] == (8, (1, 2)) and seq[9] == (8, (4, 0))

    def test_witness_reproduces_value(self, rng):
        a, b = F(7, 3), F(5, 4)
        for val, (m, n) in nk_sequence(a, b, 60):
            assert val == a * m + b * n

    def test_heap_route_matches_counting_inversion(self, rng):
        for _ in range(6):
            a = F(rng.randint(1, 12), rng.randint(1, 5))
            b = F(rng.randint(1, 12), rng.randint(1, 5))
            seq = [v for v, _w in nk_sequence(a, b, 40)]
            for k in (0, 1, 7, 23, 40):
                assert nk_via_lattice(a, b, k) == seq[k], (a, b, k)

    def test_validation(self):
        with pytest.raises(ValidationError):
            nk_sequence(F(0), F(1), 3)
        with pytest.raises(ValidationError):
            nk_sequence(F(1), F(-2), 3)
        with pytest.raises(ValidationError):
            nk_sequence(F(1), F(1), -1)
        with pytest.raises(ValidationError):
            nk_via_lattice(F(1), F(1), -2)


class TestCountActionPairs:
    def test_hand_counts(self):
        assert count_action_pairs(F(2), F(3), F(6)) == 7
        assert count_action_pairs(F(2), F(3), F(6), strict=True) == 5
        assert count_action_pairs(F(1, 2), F(1, 3), F(1)) == 7
        assert count_action_pairs(F(2), F(3), F(-1)) == 0
        assert count_action_pairs(F(2), F(3), F(0)) == 1

    def test_counts_invert_the_sequence(self):
        a, b = F(3, 2), F(4, 3)
        seq = [v for v, _w in nk_sequence(a, b, 30)]
        for k, v in enumerate(seq):
            assert count_action_pairs(a, b, v) >= k + 1
            assert count_action_pairs(a, b, v, strict=True) <= k

    def test_brute_force_agreement(self, rng):
        for _ in range(20):
            a = F(rng.randint(1, 9), rng.randint(1, 4))
            b = F(rng.randint(1, 9), rng.randint(1, 4))
            lim = F(rng.randint(0, 40), rng.randint(1, 4))
            naive = sum(1 for m in range(200) for n in range(200)
                        if a * m + b * n <= lim and a * m <= lim and b * n <= lim)
            assert count_action_pairs(a, b, lim) == naive


class TestBall:
    def test_closed_form_matches_sequence(self):
        vals = [v for v, _w in nk_sequence(F(1), F(1), 30)]
        for k in range(31):
            v, wit = ball_capacity(F(1), k)
            assert v == vals[k]
            d = wit["d"]
            assert d * d + d <= 2 * k <= d * d + 3 * d

    def test_scales_with_parameter(self):
        for k in (0, 1, 5, 12):
            assert ball_capacity(F(7, 3), k)[0] == F(7, 3) * ball_capacity(F(1), k)[0]

    def test_spectrum_matches_degenerate_ellipsoid(self):
        a = F(5, 4)
        ball = BallSpectrum(Ball(a))
        ell = EllipsoidSpectrum(Ellipsoid(a, a))
        assert ball.values(100) == ell.values(100)
        assert all(ball.check_witness(k) for k in range(20))

    def test_validation(self):
        with pytest.raises(ValidationError):
            ball_capacity(F(0), 1)
        with pytest.raises(ValidationError):
            ball_capacity(F(1), -1)


class TestToricCapacity:
    def test_triangle_matches_ellipsoid(self):
        tri = triangle_profile(F(2), F(3))
        seq = [v for v, _w in nk_sequence(F(2), F(3), 10)]
        for k in range(11):
            val, wit = toric_capacity(tri, k)
            assert val == seq[k]
            assert lattice_count_pick(wit) == k + 1
            assert omega_length(tri, wit) == val

    def test_unit_square_first_step(self):
        val, wit = toric_capacity(square_profile(F(1)), 1)
        assert val == 1
        assert wit == LatticePath.from_edges([((1, 0), 1)])

    def test_k_zero(self):
        res = toric_capacity_detail(square_profile(F(1)), 0)
        assert res.value == 0 and res.witness.is_empty

    def test_detail_invariants(self):
        prof = validate_profile([(0, 3), (1, 2), (2, 0)])
        for k in range(1, 8):
            res = toric_capacity_detail(prof, k)
            assert res.value == res.min_over_exact == res.min_over_at_least
            assert lattice_count_pick(res.witness) == k + 1
            assert lattice_count_pick(res.witness_at_least) >= k + 1
            assert omega_length(prof, res.witness) == res.value
            assert res.value <= res.enumeration_bound
            assert res.paths_scanned >= 1

    def test_value_is_global_minimum_by_naive_stream(self, rng):
        # independent check: no path at all beats the reported value
        from math import gcd
        prof = validate_profile([(0, 3), (1, 2), (2, 0)])
        dirs = sorted(
            [(p, -q) for p in range(7) for q in range(7) if (p or q) and gcd(p, q) == 1],
            key=lambda d: (1, F(0)) if d[0] == 0 else (0, F(-d[1], d[0])))
        omega = lambda p: omega_length(prof, p)
        for k in (1, 2, 3, 5):
            val, _wit = toric_capacity(prof, k)
            feasible = [p for p in naive_paths(dirs, val, omega, True)
                        if lattice_count_pick(p) >= k + 1]
            assert feasible, (k, val)
            assert min(omega(p) for p in feasible) == val

    def test_validation(self):
        with pytest.raises(ValidationError):
            toric_capacity(square_profile(F(1)), -1)
        with pytest.raises(ValidationError):
            toric_capacity_detail(Ellipsoid(F(1), F(1)), 1)


class TestSpectrumProviders:
    def test_dispatch(self):
        assert spectrum_for(Ellipsoid(F(2), F(3))).kind == "ellipsoid"
        assert spectrum_for(Ball(F(1))).kind == "ball"
        assert spectrum_for(square_profile(F(1))).kind == "toric"
        assert spectrum_for(DisjointUnion((Ball(F(1)),))).kind == "union"
        with pytest.raises(ValidationError):
            spectrum_for("nope")

    def test_prefix_caching_is_stable(self):
        spec = EllipsoidSpectrum(Ellipsoid(F(2), F(3)))
        tail = spec.values(10)
        assert spec.values(4) == tail[:5]
        assert spec.entry(6) == spec.entry(6)
        with pytest.raises(ValidationError):
            spec.entry(-1)

    def test_all_witnesses_check_out(self):
        specs = [
            EllipsoidSpectrum(Ellipsoid(F(89, 55), F(1))),
            BallSpectrum(Ball(F(3, 2))),
            ToricSpectrum(validate_profile([(0, 3), (1, 2), (2, 0)])),
        ]
        for spec in specs:
            for k in range(8):
                assert spec.check_witness(k), (spec.kind, k)

    def test_triangle_spectrum_tracks_ellipsoid(self):
        tor = ToricSpectrum(triangle_profile(F(2), F(3)))
        ell = EllipsoidSpectrum(Ellipsoid(F(2), F(3)))
        assert tor.values(12) == ell.values(12)


class TestUnion:
    def brute(self, parts, k):
        lists = [p.values(k) for p in parts]
        best = None
        for split in product(range(k + 1), repeat=len(parts)):
            if sum(split) != k:
                continue
            tot = sum(l[ki] for l, ki in zip(lists, split))
            if best is None or tot > best:
                best = tot
        return best

    def test_matches_brute_force(self):
        parts = [BallSpectrum(Ball(F(1))),
                 EllipsoidSpectrum(Ellipsoid(F(2), F(3))),
                 EllipsoidSpectrum(Ellipsoid(F(1), F(2)))]
        union = UnionSpectrum(parts)
        for k in range(12):
            assert union.value(k) == self.brute(parts, k), k
            assert union.check_witness(k)

    def test_witness_partition_is_valid(self):
        parts = [BallSpectrum(Ball(F(1))), BallSpectrum(Ball(F(2)))]
        val, wit = union_capacity(parts, 7)
        ks = wit["partition"]
        assert sum(ks) == 7 and len(ks) == 2
        assert val == parts[0].value(ks[0]) + parts[1].value(ks[1])
        assert wit["parts"][0] == parts[0].entry(ks[0])[1]

    def test_unavailable_part_is_named(self):
        class _Opaque(Spectrum):
            kind = "opaque"

            def _compute(self, k):
                raise UnavailableError("no rule for this shape")

            def domain(self):
                return Ball(F(1))

        union = UnionSpectrum([BallSpectrum(Ball(F(1))), _Opaque()])
        assert union.value(0) == 0
        with pytest.raises(UnavailableError, match=r"part 1 \(opaque\)"):
            union.value(2)

    def test_empty_parts_rejected(self):
        with pytest.raises(ValidationError):
            UnionSpectrum([])


class TestConformality:
    @pytest.mark.parametrize("r", [F(2), F(5, 2), F(1, 3)])
    def test_values_scale_linearly(self, r):
        base = [
            (EllipsoidSpectrum(Ellipsoid(F(2), F(3))), 40),
            (BallSpectrum(Ball(F(3, 2))), 40),
            (ToricSpectrum(validate_profile([(0, 3), (1, 2), (2, 0)])), 6),
            (UnionSpectrum([BallSpectrum(Ball(F(1))),
                            EllipsoidSpectrum(Ellipsoid(F(2), F(3)))]), 10),
        ]
        for spec, k_max in base:
            scaled = conformal_scale(spec, r)
            assert scaled.values(k_max) == [r * v for v in spec.values(k_max)]

    def test_bad_factor(self):
        with pytest.raises(ValidationError):
            conformal_scale(BallSpectrum(Ball(F(1))), F(-1))


class TestWeyl:
    def test_row_contents(self):
        spec = EllipsoidSpectrum(Ellipsoid(F(2), F(3)))
        rows = weyl_report(spec, [1, 10, 100])
        assert [r["k"] for r in rows] == [1, 10, 100]
        for r in rows:
            c = spec.value(r["k"])
            assert r["value"] == c
            assert r["ratio"] == c * c / r["k"]
            assert r["deviation"] == r["ratio"] - 12

    def test_volume_override(self):
        spec = BallSpectrum(Ball(F(1)))
        rows = weyl_report(spec, [4], volume=F(0))
        assert rows[0]["deviation"] == rows[0]["ratio"]

    def test_k_must_be_positive(self):
        with pytest.raises(ValidationError):
            weyl_report(BallSpectrum(Ball(F(1))), [0])

    def test_deviation_shrinks_along_powers(self):
        spec = BallSpectrum(Ball(F(1)))
        rows = weyl_report(spec, [10, 100, 1000, 10000])
        devs = [abs(r["deviation"]) for r in rows]
        assert devs == sorted(devs, reverse=True)
        assert devs[-1] < F(1, 20)
