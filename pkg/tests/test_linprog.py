"""Exact simplex unit tests, including randomized cross-checks."""

from fractions import Fraction as F

import pytest

from epsnet.linprog import LPResult, feasible_point, solve


def test_simple_bounded_max():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6, x,y >= 0  -> (8/5, 6/5)
    res = solve(
        2,
        [([F(1), F(2)], "<=", F(4)), ([F(3), F(1)], "<=", F(6))],
        objective=[F(1), F(1)],
        nonneg=[True, True],
        maximize=True,
    )
    assert res.ok
    assert res.value == F(14, 5)
    assert res.x == (F(8, 5), F(6, 5))


def test_degenerate_cycling_guard():
    # Beale's classical cycling example; Bland's rule must terminate.
    res = solve(
        4,
        [
            ([F(1, 4), F(-8), F(-1), F(9)], "<=", F(0)),
            ([F(1, 2), F(-12), F(-1, 2), F(3)], "<=", F(0)),
            ([F(0), F(0), F(1), F(0)], "<=", F(1)),
        ],
        objective=[F(-3, 4), F(20), F(-1, 2), F(6)],
        nonneg=[True] * 4,
    )
    assert res.ok
    assert res.value == F(-5, 4)


def test_infeasible():
    res = solve(1, [([F(1)], "<=", F(0)), ([F(1)], ">=", F(1))], nonneg=[True])
    assert res.status == "infeasible"


def test_unbounded():
    res = solve(1, [([F(1)], ">=", F(1))], objective=[F(1)], maximize=True, nonneg=[True])
    assert res.status == "unbounded"


def test_free_variables():
    # x free: min x s.t. x >= -5 has optimum -5
    res = solve(1, [([F(1)], ">=", F(-5))], objective=[F(1)])
    assert res.ok and res.x == (F(-5),) and res.value == F(-5)


def test_equality_rows():
    res = solve(
        3,
        [
            ([F(1), F(1), F(1)], "==", F(1)),
            ([F(1), F(-1), F(0)], "==", F(0)),
            ([F(0), F(0), F(1)], "==", F(1, 3)),
        ],
        nonneg=[True, True, True],
    )
    assert res.ok
    assert res.x == (F(1, 3), F(1, 3), F(1, 3))


def test_redundant_equalities():
    # second row is the double of the first; phase 1 must drop it cleanly
    res = solve(
        2,
        [
            ([F(1), F(1)], "==", F(2)),
            ([F(2), F(2)], "==", F(4)),
        ],
        objective=[F(1), F(0)],
        nonneg=[True, True],
    )
    assert res.ok and res.value == F(0)


def test_feasible_point_weak_only():
    x = feasible_point(2, [([F(1), F(0)], "<=", F(3)), ([F(0), F(1)], ">=", F(2))])
    assert x is not None
    assert x[0] <= 3 and x[1] >= 2


def test_feasible_point_strict():
    x = feasible_point(1, [([F(1)], "<", F(1)), ([F(-1)], "<", F(0))])
    assert x is not None
    assert 0 < x[0] < 1


def test_feasible_point_strict_infeasible():
    # x < 0 and x > 0 cannot both hold
    assert feasible_point(1, [([F(1)], "<", F(0)), ([F(-1)], "<", F(0))]) is None


def test_feasible_point_boundary_not_strict():
    # weakly feasible only at x == 0, so the strict system is empty
    cons = [([F(1)], "<", F(0)), ([F(-1)], "<=", F(0))]
    assert feasible_point(1, cons) is None


def test_mixed_strict_weak():
    # 0 <= x, x + y == 1, y > 1/2  -> x in [0, 1/2)
    x = feasible_point(
        2,
        [
            ([F(1), F(0)], ">=", F(0)),
            ([F(1), F(1)], "==", F(1)),
            ([F(0), F(-1)], "<", F(-1, 2)),
        ],
    )
    assert x is not None
    assert x[0] + x[1] == 1 and x[1] > F(1, 2) and x[0] >= 0


def test_result_shape():
    res = solve(1, [([F(1)], "<=", F(1))], nonneg=[True])
    assert isinstance(res, LPResult)
    assert res.ok and res.value == 0


@pytest.mark.parametrize("seed", range(30))
def test_randomized_against_vertex_enumeration(seed):
    """2-var LPs with small integer data, checked against brute force.

    Every optimum of a bounded feasible 2d LP sits on an intersection of
    two constraint lines (or of a line and an axis), so enumerating all
    pairwise intersections gives an independent optimum.
    """
    import itertools
    import random

    rng = random.Random(seed)
    m = rng.randint(2, 5)
    cons = []
    for _ in range(m):
        a = F(rng.randint(-3, 3))
        b = F(rng.randint(-3, 3))
        c = F(rng.randint(0, 6))  # keeps the origin feasible
        if a == 0 and b == 0:
            a = F(1)
        cons.append(([a, b], "<=", c))
    # box to guarantee boundedness
    cons.append(([F(1), F(0)], "<=", F(10)))
    cons.append(([F(0), F(1)], "<=", F(10)))
    obj = [F(rng.randint(-3, 3)), F(rng.randint(-3, 3))]
    res = solve(2, cons, objective=obj, nonneg=[True, True], maximize=True)
    assert res.ok

    lines = [(a[0], a[1], c) for a, _, c in cons]
    lines.append((F(1), F(0), F(0)))  # x >= 0 as boundary x == 0
    lines.append((F(0), F(1), F(0)))
    best = None
    for (a1, b1, c1), (a2, b2, c2) in itertools.combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = (c1 * b2 - c2 * b1) / det
        y = (a1 * c2 - a2 * c1) / det
        if x < 0 or y < 0:
            continue
        if all(a * x + b * y <= c for (a, b, c) in lines[:-2]):
            v = obj[0] * x + obj[1] * y
            if best is None or v > best:
                best = v
    assert best is not None
    assert res.value == best
