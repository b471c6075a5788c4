"""The compiled row-operation kernel and the pure fallback must be
interchangeable: same results on ordinary rows, on rows that overflow the
compiled fast paths, and under the MINPROJ_PURE escape hatch."""

import os
import subprocess
import sys
from fractions import Fraction

from minproj import _kernel
from minproj._kernel import fallback


def _random_rows(seed, length, bound):
    state = seed
    num, den = [], []
    for _ in range(length):
        state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
        p = state % (2 * bound + 1) - bound
        state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
        q = state % bound + 1
        f = Fraction(p, q)
        num.append(f.numerator)
        den.append(f.denominator)
    return num, den


def _as_fractions(num, den):
    return [Fraction(n, d) for n, d in zip(num, den)]


def test_implementation_label():
    assert _kernel.IMPLEMENTATION in (
        "compiled", "pure", "pure (forced by MINPROJ_PURE)")


def test_scale_row_matches_fallback():
    for seed in range(20):
        for bound in (7, 10**6, 2**40):
            an, ad = _random_rows(seed, 9, bound)
            bn, bd = list(an), list(ad)
            fallback.scale_row(an, ad, -3, 7)
            _kernel.scale_row(bn, bd, -3, 7)
            assert (an, ad) == (bn, bd)
            assert all(d > 0 for d in ad)


def test_row_axpy_matches_fallback():
    for seed in range(20):
        for bound in (7, 10**6, 2**40):
            dn, dd = _random_rows(seed, 9, bound)
            sn, sd = _random_rows(seed + 1000, 9, bound)
            dn2, dd2 = list(dn), list(dd)
            expected = [a - Fraction(5, 3) * b
                        for a, b in zip(_as_fractions(dn, dd), _as_fractions(sn, sd))]
            fallback.row_axpy(dn, dd, sn, sd, 5, 3)
            _kernel.row_axpy(dn2, dd2, sn, sd, 5, 3)
            assert (dn, dd) == (dn2, dd2)
            assert _as_fractions(dn, dd) == expected


def test_axpy_zero_factor_is_noop():
    dn, dd = [1, -2, 0], [2, 3, 1]
    sn, sd = [5, 5, 5], [1, 1, 1]
    _kernel.row_axpy(dn, dd, sn, sd, 0, 1)
    assert (dn, dd) == ([1, -2, 0], [2, 3, 1])


def test_cancellation_to_zero_normalizes():
    dn, dd = [3], [4]
    _kernel.row_axpy(dn, dd, [3], [4], 1, 1)
    assert (dn, dd) == ([0], [1])


def test_minproj_pure_forces_fallback():
    env = dict(os.environ, MINPROJ_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from minproj import _kernel; print(_kernel.IMPLEMENTATION)"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure (forced by MINPROJ_PURE)"
    assert _kernel.scale_row is not None
