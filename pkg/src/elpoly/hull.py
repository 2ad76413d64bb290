"""Exact convex hull analysis: vertex certification, facet counts, optima.

Vertex certification is per-point: x is extreme iff the membership LP over
the remaining points is infeasible.  Full vertex enumeration wraps the same
LP in an incremental scheme that maintains the extreme points found so far
and, whenever a candidate is separated from them, walks the separating
direction (with lexicographic tie-breaking) to a new extreme point; this
certifies every point with LPs over the small extreme set instead of the
whole input.

Facet counting reduces the points to full dimension inside their affine hull,
translates an interior point to the origin, and runs the double description
update on the polar polytope {y : y.q <= 1 for every reduced point q}: each
point becomes a constraint, inserted in sorted order, and the vertices of the
polar are exactly the facets of the hull.  All arithmetic is over Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import blg
from .circulant import InstanceParams, is_power_of_two
from .errors import MembershipError, ResourceLimitError
from .exactlp import convex_membership

DEFAULT_FACET_DIM = 7

Point = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PointSet:
    """A finite set of distinct rational points in Q^dim."""

    dim: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        seen = set()
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError(f"point {p} has dimension {len(p)}, expected {self.dim}")
            if p in seen:
                raise ValueError(f"duplicate point {p}")
            seen.add(p)
        if not self.points:
            raise ValueError("point set must be nonempty")

    @classmethod
    def of(cls, points: Iterable[Sequence]) -> "PointSet":
        """Build from any iterable of equal-length sequences, sorted and deduplicated."""
        norm = sorted({tuple(x if isinstance(x, (int, Fraction)) else Fraction(x) for x in p)
                       for p in points})
        if not norm:
            raise ValueError("point set must be nonempty")
        return cls(dim=len(norm[0]), points=tuple(norm))

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class HullSummary:
    """Counts and certified vertices of the convex hull of a point set."""

    affine_dim: int
    vertex_count: int | None = None
    facet_count: int | None = None
    vertices: tuple[Point, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"affine_dim": self.affine_dim}
        if self.vertex_count is not None:
            out["vertex_count"] = self.vertex_count
        if self.facet_count is not None:
            out["facet_count"] = self.facet_count
        if self.vertices is not None:
            out["vertices"] = [[_scalar_json(x) for x in p] for p in self.vertices]
        return out


def _scalar_json(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return int(x)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _rank(rows: Sequence[Sequence]) -> int:
    """Rank of a small rational matrix by Gaussian elimination."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = ONE / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def _solve(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...]:
    """Solve a nonsingular square rational system."""
    size = len(rhs)
    work = [[Fraction(x) for x in row] + [Fraction(rhs[r])] for r, row in enumerate(matrix)]
    for col in range(size):
        piv = next(r for r in range(col, size) if work[r][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        inv = ONE / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(size):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[col])]
    return tuple(work[r][size] for r in range(size))


def _affine_basis(points: Sequence[Point]) -> tuple[Point, list[int], list[tuple]]:
    """Origin, indices of affinely independent spanning points, basis vectors."""
    origin = points[0]
    echelon: list[list[Fraction]] = []
    pivots: list[int] = []
    basis_idx: list[int] = []
    basis_vecs: list[tuple] = []
    for idx in range(1, len(points)):
        v = [Fraction(x) for x in _sub(points[idx], origin)]
        for prow, pcol in zip(echelon, pivots):
            if v[pcol] != 0:
                f = v[pcol]
                v = [a - f * b for a, b in zip(v, prow)]
        pcol = next((c for c, a in enumerate(v) if a != 0), None)
        if pcol is None:
            continue
        inv = ONE / v[pcol]
        echelon.append([a * inv for a in v])
        pivots.append(pcol)
        basis_idx.append(idx)
        basis_vecs.append(_sub(points[idx], origin))
    return origin, basis_idx, basis_vecs


def affine_dimension(points: Sequence[Point]) -> int:
    return len(_affine_basis(points)[1])


def certify_vertex(ps: PointSet, x: Sequence) -> bool:
    """True iff x is an extreme point of conv(ps): the LP expressing x as a
    convex combination of the other points is infeasible."""
    x = tuple(x)
    if x not in ps:
        raise MembershipError(f"{x} is not a member of the point set")
    others = [p for p in ps.points if p != x]
    return not convex_membership(others, x).feasible


def enumerate_vertices(ps: PointSet) -> HullSummary:
    """All extreme points of conv(ps), sorted lexicographically."""
    pts = list(ps.points)
    adim = affine_dimension(pts)
    if len(pts) == 1:
        return HullSummary(affine_dim=0, vertex_count=1, vertices=(pts[0],))

    extreme: list[Point] = [pts[0], pts[-1]]  # lexicographic extremes are vertices
    extreme_set = set(extreme)
    is_vertex: dict[Point, bool] = {}
    for x in pts:
        while True:
            if x in extreme_set:
                is_vertex[x] = True
                break
            result = convex_membership(extreme, x)
            if result.feasible:
                is_vertex[x] = False
                break
            c = result.separator[: ps.dim]
            best = max(pts, key=lambda p: (_dot(c, p), p))
            if best == x:
                is_vertex[x] = True
            extreme.append(best)
            extreme_set.add(best)
            if best == x:
                break
    vertices = tuple(sorted(p for p in pts if is_vertex[p]))
    return HullSummary(affine_dim=adim, vertex_count=len(vertices), vertices=vertices)


def enumerate_facets(ps: PointSet, max_dim: int = DEFAULT_FACET_DIM) -> HullSummary:
    """Facet count of conv(ps) by double description on the polar polytope.

    Also reports, as a cross-check on the LP-based path, the points that are
    tight on a full-rank set of facets: exactly the extreme points.
    Degenerate hulls follow the convention that a single point has no facets
    and a segment has its two endpoints as facets.
    """
    pts = list(ps.points)
    origin, basis_idx, basis_vecs = _affine_basis(pts)
    r = len(basis_idx)
    if r > max_dim:
        raise ResourceLimitError(f"affine dimension {r} exceeds the facet bound {max_dim}")
    if r == 0:
        return HullSummary(affine_dim=0, vertex_count=1, facet_count=0, vertices=(pts[0],))
    if r == 1:
        ends = (pts[0], pts[-1])
        return HullSummary(affine_dim=1, vertex_count=2, facet_count=2, vertices=ends)

    # coordinates inside the affine hull: solve the Gram system per point
    gram = [[_dot(bi, bj) for bj in basis_vecs] for bi in basis_vecs]
    reduced = [_solve(gram, [_dot(b, _sub(p, origin)) for b in basis_vecs]) for p in pts]

    # translate the centroid of the spanning simplex to the origin (interior)
    simplex_ids = [0] + basis_idx
    centroid = tuple(
        sum(reduced[i][c] for i in simplex_ids) / (r + 1) for c in range(r)
    )
    shifted = [_sub(q, centroid) for q in reduced]

    facets = _polar_vertices(shifted, simplex_ids, r)

    dd_vertices = []
    for i, q in enumerate(shifted):
        tight = [v for v in facets if _dot(v, q) == 1]
        if len(tight) >= r and _rank(tight) == r:
            dd_vertices.append(pts[i])
    return HullSummary(
        affine_dim=r,
        vertex_count=len(dd_vertices),
        facet_count=len(facets),
        vertices=tuple(sorted(dd_vertices)),
    )


def _polar_vertices(shifted: list[tuple], simplex_ids: list[int], r: int) -> list[tuple]:
    """Vertices of {y : y.q_i <= 1 for all i} by incremental constraint insertion.

    The polytope is bounded because the origin is interior to the hull of the
    q_i.  Each vertex carries the ids of its tight constraints; two vertices
    on opposite sides of a new constraint spawn a vertex on their edge iff
    their common tight set has rank r - 1.
    """
    # start from the polar of the spanning simplex: drop one constraint each
    vertices: list[tuple[tuple, frozenset]] = []
    for skip in simplex_ids:
        active = [i for i in simplex_ids if i != skip]
        y = _solve([shifted[i] for i in active], [ONE] * r)
        vertices.append((y, frozenset(active)))

    for cid in sorted(set(range(len(shifted))) - set(simplex_ids)):
        q = shifted[cid]
        slack = [_dot(y, q) - 1 for y, _ in vertices]
        if all(s <= 0 for s in slack):
            vertices = [
                (y, tight | {cid}) if s == 0 else (y, tight)
                for (y, tight), s in zip(vertices, slack)
            ]
            continue
        keep = [(y, tight) for (y, tight), s in zip(vertices, slack) if s < 0]
        boundary = [(y, tight | {cid}) for (y, tight), s in zip(vertices, slack) if s == 0]
        new: dict[tuple, frozenset] = {}
        for (yp, tp), sp in zip(vertices, slack):
            if sp >= 0:
                continue
            for (ym, tm), sm in zip(vertices, slack):
                if sm <= 0:
                    continue
                common = tp & tm
                if len(common) < r - 1 or _rank([shifted[i] for i in common]) != r - 1:
                    continue
                theta = -sp / (sm - sp)
                y = tuple(a + theta * (b - a) for a, b in zip(yp, ym))
                new.setdefault(y, common | {cid})
        vertices = keep + boundary + sorted(new.items())
    return sorted(y for y, _ in vertices)


def certify_unique_optimum(ps: PointSet, costs, x: Sequence) -> bool:
    """True iff x is the strictly unique minimizer of costs . y over ps."""
    x = tuple(x)
    if x not in ps:
        raise MembershipError(f"{x} is not a member of the point set")
    c = list(costs.costs if hasattr(costs, "costs") else costs)
    if len(c) != ps.dim:
        raise ValueError(f"cost vector of size {len(c)} does not match dimension {ps.dim}")
    cx = _dot(c, x)
    return all(_dot(c, y) > cx for y in ps.points if y != x)


@dataclass(frozen=True)
class VertexCountPrediction:
    """Closed-form vertex count where one is known, by the factorization of n."""

    kind: str  # "exact" | "lower_bound" | "unknown"
    value: int | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.value}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def predicted_vertex_count(params: InstanceParams) -> VertexCountPrediction:
    """d for prime n, (p**3 - p)/4 for n = p**2 with p >= 3 prime, and the
    certified lower bound for n = 2**k with k >= 4; otherwise unknown."""
    n = params.n
    if _is_prime(n):
        return VertexCountPrediction(kind="exact", value=params.d)
    p = math.isqrt(n)
    if p * p == n and p >= 3 and _is_prime(p):
        return VertexCountPrediction(kind="exact", value=(p**3 - p) // 4)
    if is_power_of_two(n) and params.k is not None and params.k >= 4:
        return VertexCountPrediction(kind="lower_bound", value=blg.lower_bound_vertices(params))
    return VertexCountPrediction(kind="unknown")
