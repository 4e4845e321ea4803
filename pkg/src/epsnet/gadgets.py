"""Certified gadget configurations with machine-checkable claims.

Each gadget packages a concrete point set, a dictionary of named convex
witnesses, and a list of claims about them.  ``certify`` replays every
claim through one exact decision procedure per claim kind, so a passing
report is a full recomputation rather than a transcript.

The gadgets mark the profile corners that no two-point weighted net can
beat.  Counting claims pin each witness cardinality exactly at its
threshold, intersection and piercing claims capture the geometric
obstruction, and oracle threshold claims corroborate the continuum
statement on a deterministic sample of candidate point pairs.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from random import Random
from typing import Optional, Sequence

from .geometry import (
    ConvexBody,
    Halfspace,
    HPolytope,
    Hyperplane,
    Point,
    PointSet,
    SubsetHull,
    as_point,
    centroid,
    frac,
    hull2d,
    point_in_hull,
    polytopes_intersect,
)
from .ranges import max_subset_avoiding
from .verification import pierceable_by_two

_ZERO = Fraction(0)
_ONE = Fraction(1)

# random probe coordinates are lattice fractions of the bounding box
_PROBE_GRID = 64


class ClaimKind(Enum):
    """Claim kinds; each maps to exactly one exact decision procedure."""

    EMPTY_INTERSECTION = "empty-intersection"
    PAIRWISE_DISJOINT = "pairwise-disjoint"
    STRICT_SIDE = "strict-side"
    MEMBERSHIP = "membership"
    COUNT = "count"
    NOT_TWO_PIERCEABLE = "not-two-pierceable"
    ORACLE_THRESHOLD = "oracle-threshold"


@dataclass(frozen=True)
class CertifiedClaim:
    """One checkable statement about named witnesses of a gadget.

    Only the fields relevant to the kind are read: ``witnesses`` always;
    ``probes`` and ``contains`` for membership, ``hyperplane`` and ``side``
    for strict sidedness, ``expected`` for counts, ``threshold`` with
    ``trials`` and ``seed`` for the oracle sample.
    """

    kind: ClaimKind
    label: str
    witnesses: tuple[str, ...] = ()
    probes: tuple[Point, ...] = ()
    hyperplane: Optional[Hyperplane] = None
    side: int = 0
    expected: Optional[int] = None
    contains: bool = True
    threshold: int = 0
    trials: int = 0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "witnesses", tuple(self.witnesses))
        object.__setattr__(
            self, "probes", tuple(as_point(q) for q in self.probes)
        )


@dataclass(frozen=True)
class ClaimResult:
    claim: CertifiedClaim
    passed: bool
    detail: str


@dataclass(frozen=True)
class CertificationReport:
    gadget: str
    results: tuple[ClaimResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.results if not r.passed)


@dataclass(frozen=True)
class GadgetInstance:
    """A named point set plus witness bodies and the claims tying them."""

    name: str
    pointset: PointSet
    parameters: dict
    witnesses: dict
    claims: tuple[CertifiedClaim, ...]

    def __post_init__(self):
        object.__setattr__(self, "parameters", dict(self.parameters))
        object.__setattr__(self, "witnesses", dict(self.witnesses))
        object.__setattr__(self, "claims", tuple(self.claims))
        for claim in self.claims:
            for name in claim.witnesses:
                if name not in self.witnesses:
                    raise KeyError(f"claim references unknown witness {name!r}")

    def witness(self, name: str) -> ConvexBody:
        return self.witnesses[name]


# ---------------------------------------------------------------------------
# claim checking


def _fmt(q: Point) -> str:
    return "(" + ", ".join(str(c) for c in q) + ")"


def _holds(body: ConvexBody, q: Point) -> bool:
    if isinstance(body, SubsetHull):
        return point_in_hull(q, body)
    return body.contains(q)


def _bodies(instance: GadgetInstance, claim: CertifiedClaim) -> list[ConvexBody]:
    return [instance.witnesses[name] for name in claim.witnesses]


def _check_empty_intersection(instance, claim) -> ClaimResult:
    w = polytopes_intersect(_bodies(instance, claim))
    if w is None:
        return ClaimResult(claim, True, "no common point")
    return ClaimResult(claim, False, f"common point at {_fmt(w)}")


def _check_pairwise_disjoint(instance, claim) -> ClaimResult:
    overlaps = []
    for a, b in itertools.combinations(claim.witnesses, 2):
        w = polytopes_intersect([instance.witnesses[a], instance.witnesses[b]])
        if w is not None:
            overlaps.append(f"{a} and {b} share {_fmt(w)}")
    if not overlaps:
        return ClaimResult(claim, True, "all pairs disjoint")
    return ClaimResult(
        claim, False, f"{len(overlaps)} overlapping pairs; " + overlaps[0]
    )


def _check_strict_side(instance, claim) -> ClaimResult:
    hp = claim.hyperplane
    if hp is None or claim.side not in (1, -1):
        raise ValueError("strict side claim needs a hyperplane and a side")
    # the violation region is the closed opposite side
    if claim.side > 0:
        bad = Halfspace(hp.normal, hp.offset)
    else:
        bad = Halfspace(tuple(-c for c in hp.normal), -hp.offset)
    region = HPolytope(len(hp.normal), (bad,))
    w = polytopes_intersect(_bodies(instance, claim) + [region])
    if w is None:
        side = "above" if claim.side > 0 else "below"
        return ClaimResult(claim, True, f"intersection strictly {side}")
    return ClaimResult(claim, False, f"touches wrong side at {_fmt(w)}")


def _check_membership(instance, claim) -> ClaimResult:
    (name,) = claim.witnesses
    body = instance.witnesses[name]
    for q in claim.probes:
        got = _holds(body, q)
        if got != claim.contains:
            verb = "missing" if claim.contains else "containing"
            return ClaimResult(claim, False, f"{name} {verb} {_fmt(q)}")
    verb = "contains" if claim.contains else "avoids"
    return ClaimResult(
        claim, True, f"{name} {verb} all {len(claim.probes)} probes"
    )


def _check_count(instance, claim) -> ClaimResult:
    (name,) = claim.witnesses
    body = instance.witnesses[name]
    count = sum(_holds(body, p) for p in instance.pointset)
    if count == claim.expected:
        return ClaimResult(claim, True, f"{name} holds exactly {count} points")
    return ClaimResult(
        claim, False, f"{name} holds {count} points, expected {claim.expected}"
    )


def _check_not_two_pierceable(instance, claim) -> ClaimResult:
    pair = pierceable_by_two(_bodies(instance, claim))
    if pair is None:
        return ClaimResult(claim, True, "no two points cover the family")
    return ClaimResult(
        claim, False, f"pierced by {_fmt(pair[0])} and {_fmt(pair[1])}"
    )


def _check_oracle_threshold(instance, claim) -> ClaimResult:
    pairs = threshold_probe_pairs(instance, claim.trials, claim.seed)
    for p1, p2 in pairs:
        size = max_subset_avoiding(
            instance.pointset, [p1, p2], stop_at=claim.threshold
        )
        if size < claim.threshold:
            return ClaimResult(
                claim,
                False,
                f"only {size} avoid {_fmt(p1)} and {_fmt(p2)}"
                f" (needed {claim.threshold})",
            )
    return ClaimResult(
        claim, True, f"threshold {claim.threshold} met on {len(pairs)} pairs"
    )


_CHECKERS = {
    ClaimKind.EMPTY_INTERSECTION: _check_empty_intersection,
    ClaimKind.PAIRWISE_DISJOINT: _check_pairwise_disjoint,
    ClaimKind.STRICT_SIDE: _check_strict_side,
    ClaimKind.MEMBERSHIP: _check_membership,
    ClaimKind.COUNT: _check_count,
    ClaimKind.NOT_TWO_PIERCEABLE: _check_not_two_pierceable,
    ClaimKind.ORACLE_THRESHOLD: _check_oracle_threshold,
}


def check_claim(instance: GadgetInstance, claim: CertifiedClaim) -> ClaimResult:
    """Decide one claim; pure, so claims can be checked in any order."""
    return _CHECKERS[claim.kind](instance, claim)


def certify(instance: GadgetInstance, workers: int = 1) -> CertificationReport:
    """Check every claim of the instance and collect the verdicts.

    Results are merged in claim order whatever the worker count, so reports
    are byte-identical across ``workers`` settings.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if workers == 1 or len(instance.claims) <= 1:
        results = tuple(check_claim(instance, c) for c in instance.claims)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = tuple(
                pool.map(lambda c: check_claim(instance, c), instance.claims)
            )
    return CertificationReport(instance.name, results)


def threshold_probe_pairs(
    instance: GadgetInstance, trials: int, seed: int
) -> list[tuple[Point, Point]]:
    """The deterministic pair sample behind oracle threshold claims.

    Structured candidates come first: the gadget points themselves, all
    pairwise midpoints, and the centroid of every hull witness.  Random
    pairs drawn on a lattice over the bounding box then top the list up to
    ``trials``.  A longer sample extends a shorter one with the same seed,
    so a violation found once cannot disappear under a bigger budget.
    """
    structured: list[Point] = []
    seen = set()

    def add(q: Point) -> None:
        if q not in seen:
            seen.add(q)
            structured.append(q)

    for p in instance.pointset:
        add(p)
    for a, b in itertools.combinations(instance.pointset.points, 2):
        add(tuple((x + y) / 2 for x, y in zip(a, b)))
    for body in instance.witnesses.values():
        if isinstance(body, SubsetHull):
            add(centroid(body.points))
    pairs = list(itertools.combinations_with_replacement(structured, 2))
    rnd = Random(seed)
    bounds = instance.pointset.bounding_box()

    def lattice_point() -> Point:
        return tuple(
            lo + (hi - lo) * Fraction(rnd.randrange(_PROBE_GRID + 1), _PROBE_GRID)
            for lo, hi in bounds
        )

    while len(pairs) < trials:
        pairs.append((lattice_point(), lattice_point()))
    return pairs


# ---------------------------------------------------------------------------
# shared construction helpers


def _hull_halfspaces(points: Sequence[Point]) -> tuple[Halfspace, ...]:
    """Facet halfspaces of a full-dimensional planar hull."""
    hull = hull2d(sorted(set(points)))
    if len(hull) < 3:
        raise ValueError("hull is not full-dimensional")
    out = []
    for i, a in enumerate(hull):
        b = hull[(i + 1) % len(hull)]
        normal = (b[1] - a[1], a[0] - b[0])
        out.append(Halfspace(normal, normal[0] * a[0] + normal[1] * a[1]))
    return tuple(out)


def _plane_slab(dim: int, axis: int, value) -> HPolytope:
    """The degenerate polytope {x : x_axis = value} as two halfspaces."""
    e = tuple(_ONE if i == axis else _ZERO for i in range(dim))
    ne = tuple(-c for c in e)
    return HPolytope(dim, (Halfspace(e, frac(value)), Halfspace(ne, -frac(value))))


def _open_side(dim: int, axis: int, side: int) -> HPolytope:
    """The open halfspace strictly above (side=1) or below the axis plane."""
    e = tuple(
        (_ONE if side < 0 else -_ONE) if i == axis else _ZERO for i in range(dim)
    )
    return HPolytope(dim, (Halfspace(e, _ZERO, closed=False),))


# ---------------------------------------------------------------------------
# five clusters


_PENTAGON = ((4, 0), (1, 4), (-4, 2), (-3, -3), (2, -4))


def gadget_five_clusters(k: int, delta=Fraction(1, 2)) -> GadgetInstance:
    """Five clusters of k points each, in convex position around the origin.

    For every rotational position the witnesses are a hull on four full
    clusters plus one point of the fifth (just over 4n/5 points) and a hull
    on three full clusters plus one point of a fourth (just over 3n/5).  A
    two-point net beating the (3/5, 4/5) profile would have to put a point
    into each of the five overlap lenses.

    The counting claims all hold.  The two piercing claims are recorded as
    intended but certification finds them false, and provably so: any
    convex set holding more than 3n/5 of these points meets at least four
    clusters, hence contains the origin, so all five lenses share it.  The
    failure is intrinsic to the count thresholds, not to the coordinates.

    Cluster points sit on the outward ray through their vertex, spaced so
    every cluster stays inside a delta-disc; delta must keep the discs
    pairwise disjoint.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    delta = frac(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    min_gap_sq = min(
        (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2
        for a, b in itertools.combinations(_PENTAGON, 2)
    )
    if 4 * delta * delta >= min_gap_sq:
        raise ValueError("delta too large: cluster discs would overlap")
    eta = delta / (5 * k)
    pts = []
    for cx, cy in _PENTAGON:
        for j in range(k):
            scale = 1 + j * eta
            pts.append((cx * scale, cy * scale))
    P = PointSet(2, tuple(pts))
    n = 5 * k

    def cluster(m: int) -> range:
        m %= 5
        return range(m * k, m * k + k)

    witnesses: dict = {}
    claims: list[CertifiedClaim] = []
    lens_names = []
    for a in range(5):
        four_idx = sorted(
            [i for m in range(5) if m != a for i in cluster(m)] + [a * k]
        )
        three_idx = sorted(
            [i for m in (a + 1, a + 2, a + 3) for i in cluster(m)]
            + [((a + 4) % 5) * k]
        )
        four = SubsetHull(P, tuple(four_idx))
        three = SubsetHull(P, tuple(three_idx))
        lens = HPolytope(
            2,
            _hull_halfspaces(four.points) + _hull_halfspaces(three.points),
        )
        witnesses[f"four_of_five_{a}"] = four
        witnesses[f"three_of_five_{a}"] = three
        witnesses[f"lens_{a}"] = lens
        lens_names.append(f"lens_{a}")
        claims.append(
            CertifiedClaim(
                ClaimKind.COUNT,
                f"witness four_of_five_{a} holds just over 4n/5 points",
                witnesses=(f"four_of_five_{a}",),
                expected=4 * k + 1,
            )
        )
        claims.append(
            CertifiedClaim(
                ClaimKind.COUNT,
                f"witness three_of_five_{a} holds just over 3n/5 points",
                witnesses=(f"three_of_five_{a}",),
                expected=3 * k + 1,
            )
        )
        claims.append(
            CertifiedClaim(
                ClaimKind.COUNT,
                f"lens_{a} keeps every point of its slim witness",
                witnesses=(f"lens_{a}",),
                expected=3 * k + 1,
            )
        )
    claims.append(
        CertifiedClaim(
            ClaimKind.PAIRWISE_DISJOINT,
            "the five overlap lenses are pairwise disjoint",
            witnesses=tuple(lens_names),
        )
    )
    claims.append(
        CertifiedClaim(
            ClaimKind.NOT_TWO_PIERCEABLE,
            "no two points meet all five overlap lenses",
            witnesses=tuple(lens_names),
        )
    )
    return GadgetInstance(
        name="five-clusters",
        pointset=P,
        parameters={"k": k, "delta": delta, "n": n},
        witnesses=witnesses,
        claims=tuple(claims),
    )


# ---------------------------------------------------------------------------
# hexagon with two poles


# one vertex is pulled off the regular position so that no main diagonal
# passes through the origin; the pole axis then clears every panel chord
_HEXAGON = ((8, 0), (4, 8), (-4, 7), (-8, 1), (-4, -9), (4, -8))


def gadget_hexagon_3d() -> GadgetInstance:
    """Eight points in R^3 whose two-point nets cannot beat the 5/8 ratio.

    Six vertices of a perturbed hexagon lie in the base plane, labelled as
    three adjacent pairs a, b, c; two poles sit on the vertical axis above
    and below the origin.  Any two candidate net points leave some five of
    the eight points outside their reach: one of three overlapping panels
    (runs of four consecutive vertices) plus a pole, or one of the listed
    five-point sets.  Claims certify the panel and set intersections are
    empty where the argument needs them to be, and an oracle sample checks
    the subset threshold directly on candidate pairs.
    """
    hexagon = [(frac(x), frac(y), _ZERO) for x, y in _HEXAGON]
    pts = tuple(hexagon) + ((_ZERO, _ZERO, _ONE), (_ZERO, _ZERO, -_ONE))
    P = PointSet(3, pts)
    a1, a2 = pts[0], pts[1]
    mid_a = tuple((x + y) / 2 for x, y in zip(a1, a2))

    def hull(*idx: int) -> SubsetHull:
        return SubsetHull(P, idx)

    witnesses = {
        "hexagon": hull(0, 1, 2, 3, 4, 5),
        "panel_a": hull(0, 1, 2, 3),
        "panel_b": hull(2, 3, 4, 5),
        "panel_c": hull(4, 5, 0, 1),
        "set_a": hull(2, 3, 4, 5, 6),
        "set_b": hull(1, 2, 3, 6, 7),
        "set_c": hull(1, 4, 5, 6, 7),
        "set_b_swap": hull(0, 2, 3, 6, 7),
        "top": hull(6),
        "bottom": hull(7),
        "base_plane": _plane_slab(3, 2, 0),
    }
    plane = Hyperplane.axis(3, 2, 0)
    claims = [
        CertifiedClaim(
            ClaimKind.COUNT,
            "the hexagon hull holds the six base points only",
            witnesses=("hexagon",),
            expected=6,
        ),
        CertifiedClaim(
            ClaimKind.STRICT_SIDE,
            "the top pole lies strictly above the base plane",
            witnesses=("top",),
            hyperplane=plane,
            side=1,
        ),
        CertifiedClaim(
            ClaimKind.STRICT_SIDE,
            "the bottom pole lies strictly below the base plane",
            witnesses=("bottom",),
            hyperplane=plane,
            side=-1,
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "the poles are not hexagon points",
            witnesses=("hexagon",),
            probes=(pts[6], pts[7]),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.EMPTY_INTERSECTION,
            "the three panels have no common point",
            witnesses=("panel_a", "panel_b", "panel_c"),
        ),
        CertifiedClaim(
            ClaimKind.EMPTY_INTERSECTION,
            "sets a, b, c share no point of the base plane",
            witnesses=("set_a", "set_b", "set_c", "base_plane"),
        ),
        CertifiedClaim(
            ClaimKind.EMPTY_INTERSECTION,
            "the swapped trio shares no point of the base plane",
            witnesses=("set_a", "set_b_swap", "set_c", "base_plane"),
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "set_a avoids the first a vertex",
            witnesses=("set_a",),
            probes=(a1,),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "set_b avoids the first a vertex",
            witnesses=("set_b",),
            probes=(a1,),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "set_c avoids the first a vertex",
            witnesses=("set_c",),
            probes=(a1,),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "the a-edge midpoint lies on panel_a",
            witnesses=("panel_a",),
            probes=(mid_a,),
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "the a-edge midpoint lies on panel_c",
            witnesses=("panel_c",),
            probes=(mid_a,),
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "set_a avoids the a-edge midpoint",
            witnesses=("set_a",),
            probes=(mid_a,),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "set_b_swap avoids the a-edge midpoint",
            witnesses=("set_b_swap",),
            probes=(mid_a,),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "set_c avoids the a-edge midpoint",
            witnesses=("set_c",),
            probes=(mid_a,),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.ORACLE_THRESHOLD,
            "sampled pairs always leave five points untouched",
            threshold=5,
            trials=2048,
            seed=53,
        ),
    ]
    for name in ("panel_a", "panel_b", "panel_c"):
        claims.append(
            CertifiedClaim(
                ClaimKind.COUNT,
                f"{name} holds its four consecutive vertices only",
                witnesses=(name,),
                expected=4,
            )
        )
    for name in ("set_a", "set_b", "set_c", "set_b_swap"):
        claims.append(
            CertifiedClaim(
                ClaimKind.COUNT,
                f"{name} holds exactly five of the eight points",
                witnesses=(name,),
                expected=5,
            )
        )
    return GadgetInstance(
        name="hexagon-3d",
        pointset=P,
        parameters={"pole_height": _ONE},
        witnesses=witnesses,
        claims=tuple(claims),
    )


# ---------------------------------------------------------------------------
# simplex with two poles


def gadget_simplex(d: int) -> GadgetInstance:
    """d+2 points in R^d realising the simplex obstruction in dimension d.

    A full-dimensional simplex spans the base hyperplane (integer vertices
    with centroid at the origin stand in for the regular one; every claim
    is invariant under the linear map between them), and two poles sit on
    the vertical axis.  The claims follow the case analysis for a candidate
    pair: the top cones pin a point below the base, the two cones over the
    first facet meet exactly in the opposite face, and the pole spindles
    exclude the rest of that face.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    base = d - 1
    verts = []
    for i in range(d - 1):
        verts.append(
            tuple(_ONE if j == i else _ZERO for j in range(d))
        )
    verts.append(tuple(-_ONE if j < d - 1 else _ZERO for j in range(d)))
    top = tuple(_ONE if j == base else _ZERO for j in range(d))
    bottom = tuple(-c for c in top)
    pts = tuple(verts) + (top, bottom)
    P = PointSet(d, pts)
    simplex_idx = tuple(range(d))
    top_idx, bottom_idx = d, d + 1

    witnesses: dict = {
        "base_simplex": SubsetHull(P, simplex_idx),
        "opposite_face": SubsetHull(P, tuple(range(1, d))),
        "above_open": _open_side(d, base, 1),
        "below_open": _open_side(d, base, -1),
    }
    cone_names = []
    for i in range(d):
        name = f"top_cone_{i + 1}"
        idx = tuple(j for j in simplex_idx if j != i) + (top_idx,)
        witnesses[name] = SubsetHull(P, idx)
        cone_names.append(name)
    witnesses["bottom_cone_1"] = SubsetHull(P, tuple(range(1, d)) + (bottom_idx,))
    spindle_names = []
    for i in range(1, d):
        name = f"spindle_{i + 1}"
        idx = tuple(j for j in range(1, d) if j != i) + (top_idx, bottom_idx)
        witnesses[name] = SubsetHull(P, idx)
        spindle_names.append(name)
    # the avoider drops the first support vertex of each designated point
    avoider_idx = tuple(j for j in range(d) if j not in (0, 2)) + (
        top_idx,
        bottom_idx,
    )
    witnesses["combo_avoider"] = SubsetHull(P, avoider_idx)
    p1 = tuple((x + y) / 2 for x, y in zip(verts[0], verts[1]))
    if d >= 4:
        p2 = tuple((x + y) / 2 for x, y in zip(verts[2], verts[3]))
    else:
        # three vertices force overlapping supports; distinct drops suffice
        p2 = tuple((x + y) / 2 for x, y in zip(verts[1], verts[2]))
    plane = Hyperplane.axis(d, base, 0)

    claims = [
        CertifiedClaim(
            ClaimKind.COUNT,
            "the base simplex holds its d vertices only",
            witnesses=("base_simplex",),
            expected=d,
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "neither pole lies in the base simplex",
            witnesses=("base_simplex",),
            probes=(top, bottom),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.STRICT_SIDE,
            "the top cones intersect strictly above the base",
            witnesses=tuple(cone_names),
            hyperplane=plane,
            side=1,
        ),
        CertifiedClaim(
            ClaimKind.EMPTY_INTERSECTION,
            "the two facet cones never meet above the base",
            witnesses=("top_cone_1", "bottom_cone_1", "above_open"),
        ),
        CertifiedClaim(
            ClaimKind.EMPTY_INTERSECTION,
            "the two facet cones never meet below the base",
            witnesses=("top_cone_1", "bottom_cone_1", "below_open"),
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "the opposite face sits inside the upper facet cone",
            witnesses=("top_cone_1",),
            probes=tuple(verts[1:]) + (centroid(verts[1:]),),
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "the opposite face sits inside the lower facet cone",
            witnesses=("bottom_cone_1",),
            probes=tuple(verts[1:]) + (centroid(verts[1:]),),
        ),
        CertifiedClaim(
            ClaimKind.EMPTY_INTERSECTION,
            "the pole spindles clear the opposite face",
            witnesses=tuple(spindle_names) + ("opposite_face",),
        ),
        CertifiedClaim(
            ClaimKind.MEMBERSHIP,
            "the avoider misses both designated midpoints",
            witnesses=("combo_avoider",),
            probes=(p1, p2),
            contains=False,
        ),
        CertifiedClaim(
            ClaimKind.COUNT,
            "the avoider holds exactly d of the points",
            witnesses=("combo_avoider",),
            expected=d,
        ),
        CertifiedClaim(
            ClaimKind.COUNT,
            "the lower facet cone holds exactly d of the points",
            witnesses=("bottom_cone_1",),
            expected=d,
        ),
    ]
    for name in cone_names:
        claims.append(
            CertifiedClaim(
                ClaimKind.COUNT,
                f"{name} holds exactly d of the points",
                witnesses=(name,),
                expected=d,
            )
        )
    for name in spindle_names:
        claims.append(
            CertifiedClaim(
                ClaimKind.COUNT,
                f"{name} holds exactly d of the points",
                witnesses=(name,),
                expected=d,
            )
        )
    if d == 3:
        claims.append(
            CertifiedClaim(
                ClaimKind.ORACLE_THRESHOLD,
                "sampled pairs always leave a d-point hull untouched",
                threshold=d,
                trials=2048,
                seed=59,
            )
        )
    return GadgetInstance(
        name="simplex",
        pointset=P,
        parameters={"d": d, "pole_height": _ONE},
        witnesses=witnesses,
        claims=tuple(claims),
    )


GADGETS = {
    "five-clusters": gadget_five_clusters,
    "hexagon-3d": gadget_hexagon_3d,
    "simplex": gadget_simplex,
}
