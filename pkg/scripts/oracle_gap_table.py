"""Standalone oracle for the frozen E(1, 89/55) gap reference table.

Recomputes, with no imports from the package, the minimum spectral gap
Gap^L of the ellipsoid E(1, 89/55) on the grid L = 10, 20, ..., 200,
together with L*Gap^L and the suffix supremum of L*Gap^L over the grid.
The spectrum of E(a, b) is the sorted multiset {a*m + b*n : m, n >= 0},
so everything here reduces to integer arithmetic on numerators over the
common denominator 55.

Run `python scripts/oracle_gap_table.py` and compare with the
FROZEN_GAP_TABLE constant in tests/test_acceptance.py.
"""

from fractions import Fraction

A_NUM, B_NUM, DEN = 55, 89, 55  # a = 55/55 = 1, b = 89/55
GRID = [10 * i for i in range(1, 21)]


def sorted_value_numerators(limit_num: int) -> list[int]:
    vals = []
    m = 0
    while A_NUM * m <= limit_num:
        n = 0
        while A_NUM * m + B_NUM * n <= limit_num:
            vals.append(A_NUM * m + B_NUM * n)
            n += 1
        m += 1
    vals.sort()
    return vals


def gap_numerator(vals: list[int], l_num: int) -> int:
    # min over consecutive entries c_k <= c_{k+1} with c_{k+1} <= l_num
    best = None
    for i in range(1, len(vals)):
        if vals[i] > l_num:
            break
        d = vals[i] - vals[i - 1]
        if best is None or d < best:
            best = d
    assert best is not None
    return best


def main() -> None:
    vals = sorted_value_numerators(GRID[-1] * DEN)
    rows = []
    for l in GRID:
        g = Fraction(gap_numerator(vals, l * DEN), DEN)
        rows.append((l, g, l * g))
    sup = None
    table = []
    for l, g, lg in reversed(rows):
        sup = lg if sup is None or lg > sup else sup
        table.append((l, g, lg, sup))
    table.reverse()
    print("# (L, Gap^L, L*Gap^L, suffix sup of L*Gap^L)")
    for l, g, lg, sup in table:
        print(f"({l}, Fraction({g.numerator}, {g.denominator}), "
              f"Fraction({lg.numerator}, {lg.denominator}), "
              f"Fraction({sup.numerator}, {sup.denominator})),")


if __name__ == "__main__":
    main()
