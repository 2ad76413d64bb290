import os

import pytest

import elpoly
from elpoly import enumeration, hull

RUN_LONG = os.environ.get("ELPOLY_RUN_LONG") == "1"

long_run = pytest.mark.skipif(
    not RUN_LONG, reason="set ELPOLY_RUN_LONG=1 to include the long enumerations"
)


class PipelineCache:
    """Session-wide cache of enumerations and hull analyses, keyed by n."""

    def __init__(self) -> None:
        self._sets: dict[int, enumeration.VectorSet] = {}
        self._points: dict[int, hull.PointSet] = {}
        self._vertices: dict[int, hull.HullSummary] = {}
        self._facets: dict[int, hull.HullSummary] = {}

    def vectors(self, n: int) -> enumeration.VectorSet:
        if n not in self._sets:
            self._sets[n] = enumeration.enumerate_cycle_vectors(n, allow_long=n > 13)
        return self._sets[n]

    def points(self, n: int) -> hull.PointSet:
        if n not in self._points:
            self._points[n] = hull.PointSet.of(self.vectors(n).vectors)
        return self._points[n]

    def vertex_summary(self, n: int) -> hull.HullSummary:
        if n not in self._vertices:
            self._vertices[n] = hull.enumerate_vertices(self.points(n))
        return self._vertices[n]

    def facet_summary(self, n: int) -> hull.HullSummary:
        if n not in self._facets:
            self._facets[n] = hull.enumerate_facets(self.points(n))
        return self._facets[n]


@pytest.fixture(scope="session")
def pipeline() -> PipelineCache:
    return PipelineCache()


@pytest.fixture(scope="session")
def reference():
    return elpoly.load_fixtures()


class PathVectorCache:
    """Realized path edge-length vectors per n, from the test-side enumerator."""

    def __init__(self) -> None:
        self._vectors: dict[int, list[tuple[int, ...]]] = {}

    def get(self, n: int) -> list[tuple[int, ...]]:
        if n not in self._vectors:
            from helpers import path_vectors_descending

            self._vectors[n] = path_vectors_descending(n)
        return self._vectors[n]


@pytest.fixture(scope="session")
def path_vectors() -> PathVectorCache:
    return PathVectorCache()
