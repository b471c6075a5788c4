"""The LP layer is the load-bearing wall: everything above it trusts the
returned optima and certificates.  Alongside the fixed examples, random
instances are compared against a brute-force vertex-enumeration oracle,
and the two internal tableau shapes are cross-checked on every instance.
"""

import itertools
from fractions import Fraction

import pytest

from minproj.linalg import RMatrix, dot, solve_linear
from minproj.simplex import (INFEASIBLE, OPTIMAL, SOLVE_STATS, UNBOUNDED,
                             make_lp, solve, solve_on_face)

F = Fraction


def _check_certificate(lp, sol):
    """Independent re-derivation of the optimality proof from the solution."""
    A, b, c = lp.constraint_matrix, lp.rhs, lp.objective
    m = A.rows
    for i in range(m):
        assert dot(A.row(i), sol.primal) <= b[i]
        assert sol.dual[i] >= 0
    for j in range(A.cols):
        assert sum(sol.dual[i] * A.at(i, j) for i in range(m)) == -c[j]
    assert dot(sol.dual, b) == -sol.value
    assert dot(c, sol.primal) == sol.value


def test_box_minimum():
    lp = make_lp([1, 1], [[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 1, 1])
    sol = solve(lp)
    assert sol.status == OPTIMAL
    assert sol.value == -2
    assert sol.primal == (F(-1), F(-1))
    assert sol.tight_set == frozenset({1, 3})
    _check_certificate(lp, sol)


def test_infeasible():
    lp = make_lp([1], [[1], [-1]], [-1, -2])
    assert solve(lp).status == INFEASIBLE


def test_unbounded():
    lp = make_lp([1], [[1]], [1])
    assert solve(lp).status == UNBOUNDED


def test_degenerate_overdetermined_corner():
    # Several redundant hyperplanes through the same optimal corner.
    rows = [[-1, 0], [0, -1], [-1, -1], [-2, -1], [-1, -2], [1, 1]]
    lp = make_lp([1, 1], rows, [0, 0, 0, 0, 0, 5])
    sol = solve(lp)
    assert sol.status == OPTIMAL
    assert sol.value == 0
    assert sol.primal == (F(0), F(0))
    _check_certificate(lp, sol)


def _lcg_stream(seed):
    state = seed
    while True:
        state = (state * 6364136223846793005 + 1442695040888963407) % 2**64
        yield state >> 33


def _random_bounded_lp(seed, d, extra_rows):
    g = _lcg_stream(seed)
    rows = []
    rhs = []
    for j in range(d):            # a box keeps every instance bounded
        e = [0] * d
        e[j] = 1
        rows.append(list(e))
        rhs.append(4)
        rows.append([-x for x in e])
        rhs.append(4)
    for _ in range(extra_rows):
        rows.append([next(g) % 7 - 3 for _ in range(d)])
        rhs.append(next(g) % 6)   # zero is feasible
    c = [next(g) % 9 - 4 for _ in range(d)]
    return make_lp(c, rows, rhs)


def _vertex_enumeration_minimum(lp):
    A, b, c = lp.constraint_matrix, lp.rhs, lp.objective
    m, d = A.rows, A.cols
    best = None
    for subset in itertools.combinations(range(m), d):
        sub = RMatrix.from_rows([A.row(i) for i in subset])
        x = solve_linear(sub, [b[i] for i in subset])
        if x is None:
            continue
        if all(dot(A.row(i), x) <= b[i] for i in range(m)):
            v = dot(c, x)
            if best is None or v < best:
                best = v
    return best


@pytest.mark.parametrize("d", [2, 3])
def test_random_lps_match_vertex_oracle(d):
    for seed in range(15):
        lp = _random_bounded_lp(1000 * d + seed, d, 5)
        sol = solve(lp)
        assert sol.status == OPTIMAL
        _check_certificate(lp, sol)
        assert sol.value == _vertex_enumeration_minimum(lp)


def test_methods_agree():
    for seed in range(12):
        lp = _random_bounded_lp(seed, 2, 6)
        a = solve(lp, method="rows")
        b = solve(lp, method="dual")
        assert a.status == b.status == OPTIMAL
        assert a.value == b.value
        _check_certificate(lp, a)
        _check_certificate(lp, b)
    with pytest.raises(ValueError):
        solve(lp, method="nonsense")


def test_dual_method_on_degenerate_and_infeasible():
    rows = [[-1, 0], [0, -1], [-1, -1], [-2, -1], [-1, -2], [1, 1]]
    lp = make_lp([1, 1], rows, [0, 0, 0, 0, 0, 5])
    sol = solve(lp, method="dual")
    assert sol.status == OPTIMAL and sol.value == 0
    bad = make_lp([1], [[1], [-1]], [-1, -2])
    assert solve(bad, method="dual").status == INFEASIBLE
    free = make_lp([1], [[1]], [1])
    assert solve(free, method="dual").status == UNBOUNDED


def test_row_permutation_invariance():
    lp = _random_bounded_lp(7, 3, 6)
    base = solve(lp)
    order = list(range(0, 12, 2)) + list(range(1, 12, 2))
    permuted = make_lp(
        lp.objective,
        [lp.constraint_matrix.row(i) for i in order],
        [lp.rhs[i] for i in order])
    other = solve(permuted)
    assert other.value == base.value
    assert {order[i] for i in other.tight_set} == set(base.tight_set)


def test_solve_on_face():
    lp = make_lp([1, 0], [[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 1, 1, 1])
    first = solve(lp)
    assert first.value == -1          # the whole edge x = -1 is optimal
    sub = solve_on_face(lp, first.value, [0, 1])
    assert sub.status == OPTIMAL
    assert sub.primal == (F(-1), F(-1))
    sub2 = solve_on_face(lp, first.value, [0, -1])
    assert sub2.primal == (F(-1), F(1))
    off = solve_on_face(lp, F(-2), [0, 1])
    assert off.status == INFEASIBLE


def test_stats_count_verified_solves():
    before = dict(SOLVE_STATS)
    solve(make_lp([1], [[1], [-1]], [2, 0]))
    after = dict(SOLVE_STATS)
    assert after["solves"] == before["solves"] + 1
    assert after["optimal"] == before["optimal"] + 1
    assert after["duality_verified"] == before["duality_verified"] + 1
