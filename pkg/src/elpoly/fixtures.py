"""Embedded reference data: known vertex lists, hull counts, and the n=8
encoding table, loaded from a checked-in JSON file so verification needs no
network access."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .blg import EncodingSequence


@dataclass(frozen=True)
class BlgRow:
    """One n=8 reference row: encoding, its path vector, and the extension."""

    encoding: EncodingSequence
    path_vector: tuple[int, ...]
    extended_vector: tuple[int, ...]


@dataclass(frozen=True)
class FixtureTable:
    """Reference values the toolkit must reproduce exactly."""

    vertex_lists: dict[int, tuple[tuple[int, ...], ...]]
    polytope_counts: dict[int, tuple[int, int]]
    blg_rows_n8: tuple[BlgRow, ...]


@lru_cache(maxsize=1)
def load_fixtures() -> FixtureTable:
    raw = json.loads(
        resources.files("elpoly").joinpath("data/reference.json").read_text("utf-8")
    )
    vertex_lists = {
        int(n): tuple(sorted(tuple(v) for v in vecs))
        for n, vecs in raw["vertex_lists"].items()
    }
    polytope_counts = {
        int(n): (counts[0], counts[1]) for n, counts in raw["polytope_counts"].items()
    }
    rows = tuple(
        BlgRow(
            encoding=EncodingSequence.from_json(row["encoding"]),
            path_vector=tuple(row["path_vector"]),
            extended_vector=tuple(row["extended_vector"]),
        )
        for row in raw["blg_rows_n8"]
    )
    return FixtureTable(
        vertex_lists=vertex_lists, polytope_counts=polytope_counts, blg_rows_n8=rows
    )
