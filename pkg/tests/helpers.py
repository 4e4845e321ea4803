"""Shared brute-force oracles and random-instance generators for the tests.

Everything here is deliberately independent of the library's LP machinery:
membership uses Caratheodory subsets solved by Gaussian elimination,
separation enumerates candidate hyperplanes, counting is a naive scan.
"""

from fractions import Fraction as F
from itertools import combinations
import random

from epsnet.geometry import PointSet


# --- exact linear algebra ---------------------------------------------------


def solve_unique(mat, rhs):
    """Solve mat . x = rhs if the columns are independent and the system is
    consistent; return None otherwise.  mat is rows x cols, rows >= cols."""
    rows = [list(r) + [b] for r, b in zip(mat, rhs)]
    nr, nc = len(rows), len(mat[0])
    piv_rows = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            return None  # rank-deficient columns
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_rows.append(c)
        r += 1
        if r == nr:
            break
    if len(piv_rows) < nc:
        return None
    for i in range(r, nr):
        if rows[i][nc] != 0:
            return None  # inconsistent
    return [rows[i][nc] for i in range(nc)]


def affine_rank(pts):
    """Dimension of the affine hull of pts."""
    base = pts[0]
    vecs = [[c - b for c, b in zip(p, base)] for p in pts[1:]]
    rank = 0
    cols = len(base)
    rows = [v[:] for v in vecs]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
    return rank


# --- membership oracles ------------------------------------------------------


def brute_in_hull(q, pts):
    """q in conv(pts), by Caratheodory: some affinely independent subset of
    size <= d+1 carries q with nonnegative barycentric coordinates."""
    d = len(q)
    if any(tuple(p) == tuple(q) for p in pts):
        return True
    for m in range(2, d + 2):
        for sub in combinations(pts, m):
            mat = [[p[a] for p in sub] for a in range(d)]
            mat.append([F(1)] * m)
            lam = solve_unique(mat, list(q) + [F(1)])
            if lam is not None and all(v >= 0 for v in lam):
                return True
    return False


def brute_separating_hyperplane_outside(q, pts):
    """q strictly outside conv(pts), via candidate hyperplanes spanned by d
    points of pts + {q}.  Valid when pts affinely spans R^d."""
    d = len(q)
    candidates = list(combinations(list(pts) + [tuple(q)], d))
    for cand in candidates:
        if affine_rank(cand) != d - 1:
            continue
        # normal orthogonal to the spanned directions
        normal = _normal_of(cand, d)
        if normal is None:
            continue
        off = sum(a * b for a, b in zip(normal, cand[0]))
        qv = sum(a * b for a, b in zip(normal, q)) - off
        if qv == 0:
            continue
        side = [sum(a * b for a, b in zip(normal, p)) - off for p in pts]
        if qv > 0 and all(s <= 0 for s in side):
            return True
        if qv < 0 and all(s >= 0 for s in side):
            return True
    return False


def brute_on_boundary(q, pts):
    """q on the boundary of a full-dimensional conv(pts): q lies on a
    supporting hyperplane spanned by d points of pts."""
    d = len(q)
    for cand in combinations(pts, d):
        if affine_rank(cand) != d - 1:
            continue
        normal = _normal_of(cand, d)
        if normal is None:
            continue
        off = sum(a * b for a, b in zip(normal, cand[0]))
        if sum(a * b for a, b in zip(normal, q)) != off:
            continue
        side = [sum(a * b for a, b in zip(normal, p)) - off for p in pts]
        if all(s <= 0 for s in side) or all(s >= 0 for s in side):
            return True
    return False


def _normal_of(cand, d):
    """A nonzero vector orthogonal to the affine hull of d points in R^d."""
    base = cand[0]
    vecs = [[c - b for c, b in zip(p, base)] for p in cand[1:]]
    # solve vecs . normal = 0 with one coordinate pinned to 1
    for pinned in range(d):
        mat = []
        rhs = []
        for v in vecs:
            row = [v[a] for a in range(d) if a != pinned]
            mat.append(row)
            rhs.append(-v[pinned])
        if not mat:
            normal = [F(0)] * d
            normal[pinned] = F(1)
            return tuple(normal)
        sol = solve_unique(mat, rhs)
        if sol is not None:
            normal = []
            it = iter(sol)
            for a in range(d):
                normal.append(F(1) if a == pinned else next(it))
            return tuple(normal)
    return None


# --- random instances --------------------------------------------------------


def random_pointset(rng: random.Random, n, d, lo=-50, hi=50, distinct=True,
                    no_collinear=False):
    """Random integer-coordinate PointSet, optionally with pairwise-distinct
    per-axis coordinates and (in 2D) no three collinear points."""
    while True:
        if distinct:
            cols = [rng.sample(range(lo, hi + 1), n) for _ in range(d)]
            pts = [tuple(F(cols[a][i]) for a in range(d)) for i in range(n)]
        else:
            pts = [tuple(F(rng.randint(lo, hi)) for _ in range(d)) for _ in range(n)]
            if len(set(pts)) != n:
                continue
        ps = PointSet(d, tuple(pts))
        if no_collinear:
            try:
                ps.check_general_position()
            except Exception:
                continue
        return ps


def naive_count_in_box(P, lo, hi):
    cnt = 0
    for p in P.points:
        if all(l <= c <= h for c, l, h in zip(p, lo, hi)):
            cnt += 1
    return cnt


# --- brute-force net verifiers -------------------------------------------------


def brute_verify_boxes(P, net):
    """Per-level verdicts over every subset bounding box (2^n of them)."""
    from itertools import combinations as _comb

    n = P.n
    k = net.k
    thresholds = [net.profile.min_strict_count(i, n) for i in range(1, k + 1)]
    verdicts = [True] * k
    pts = P.points
    for r in range(1, n + 1):
        for sub in _comb(pts, r):
            lo = [min(p[a] for p in sub) for a in range(P.dim)]
            hi = [max(p[a] for p in sub) for a in range(P.dim)]
            cnt = naive_count_in_box(P, lo, hi)
            net_in = sum(
                1
                for q in net.points
                if all(l <= c <= h for c, l, h in zip(q, lo, hi))
            )
            for i in range(1, k + 1):
                if cnt >= thresholds[i - 1] and net_in < i:
                    verdicts[i - 1] = False
    return verdicts


def brute_max_subset_avoiding_2d(P, avoid):
    """Largest subset whose hull contains no avoided point, over all 2^n
    subsets (d=2)."""
    from epsnet.geometry import hull2d, integer_coords, point_in_convex_polygon

    n = P.n
    scale, ipts = integer_coords(P)
    iavoid = [tuple(c * scale for c in q) for q in avoid]
    best = 0
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        sub = sorted(ipts[i] for i in range(n) if mask >> i & 1)
        hull = hull2d(sub)
        if all(point_in_convex_polygon(q, hull) < 0 for q in iavoid):
            best = size
    return best


def brute_verify_convex_2d(P, net):
    """Per-level verdicts over the hulls of all 2^n subsets (d=2)."""
    from epsnet.geometry import hull2d, integer_coords, point_in_convex_polygon

    n = P.n
    k = net.k
    scale, ipts = integer_coords(P)
    inet = [tuple(c * scale for c in q) for q in net.points]
    thresholds = [net.profile.min_strict_count(i, n) for i in range(1, k + 1)]
    verdicts = [True] * k
    for mask in range(1, 1 << n):
        sub = sorted(ipts[i] for i in range(n) if mask >> i & 1)
        hull = hull2d(sub)
        cnt = sum(1 for p in ipts if point_in_convex_polygon(p, hull) >= 0)
        net_in = sum(1 for q in inet if point_in_convex_polygon(q, hull) >= 0)
        for i in range(1, k + 1):
            if cnt >= thresholds[i - 1] and net_in < i:
                verdicts[i - 1] = False
    return verdicts
