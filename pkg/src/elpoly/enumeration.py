"""Exhaustive enumeration of Hamiltonian-cycle edge-length vectors.

Every undirected Hamiltonian cycle on [n] is visited exactly once in the
canonical form (vertex 1 first, second vertex smaller than last), so the
visit counter must equal (n-1)!/2; the distinct edge-length vectors form the
input to the hull engine.  The inner loop is compiled; enumeration may be
partitioned over the (second, last) pairs across worker threads, and the
sorted output is identical for any worker count.
"""

from __future__ import annotations

import json
import math
import os
from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import _kernels
from .circulant import EdgeLengthVector, InstanceParams
from .errors import ResourceLimitError

DEFAULT_MAX_N = 13
HARD_MAX_N = 16  # beyond this, (n-1)!/2 cycles are out of desk-scale reach
ENV_MAX_N = "ELPOLY_MAX_N"


def configured_max_n() -> int:
    """Enumeration bound: DEFAULT_MAX_N unless overridden by the environment."""
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from exc


def cycle_count(n: int) -> int:
    """Number of undirected Hamiltonian cycles on [n]: (n-1)!/2."""
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    return math.factorial(n - 1) // 2


@dataclass(frozen=True)
class VectorSet:
    """Sorted, deduplicated cycle edge-length vectors for one instance size.

    Witness cycles (vertex orders whose closure realizes a vector) are kept
    for spot-check reconstruction, capped by the enumerator, and do not take
    part in equality or serialization.
    """

    n: int
    vectors: tuple[tuple[int, ...], ...]
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        d = self.n // 2
        prev = None
        for t in self.vectors:
            if len(t) != d or sum(t) != self.n or min(t) < 0:
                raise ValueError(f"{t} is not a cycle vector for n={self.n}")
            if self.n % 2 == 0 and t[-1] > self.n // 2:
                raise ValueError(f"{t} uses more than n/2 diameter edges")
            if prev is not None and not prev < t:
                raise ValueError("vectors must be strictly sorted")
            prev = t

    def __len__(self) -> int:
        return len(self.vectors)


def _resolve_n(params: InstanceParams | int) -> int:
    return params.n if isinstance(params, InstanceParams) else int(params)


def enumerate_cycle_vectors(
    params: InstanceParams | int,
    *,
    jobs: int = 1,
    allow_long: bool = False,
    progress: Callable[[int, int], None] | None = None,
) -> VectorSet:
    """Edge-length vectors over all (n-1)!/2 Hamiltonian cycles on [n].

    Sizes above the configured bound need allow_long; the visit counter is
    checked against (n-1)!/2.  progress, if given, is called with (done,
    total) chunk counts.
    """
    n = _resolve_n(params)
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    if n > HARD_MAX_N:
        raise ResourceLimitError(f"n={n} is beyond desk scale (hard cap {HARD_MAX_N})")
    if n > configured_max_n() and not allow_long:
        raise ResourceLimitError(
            f"n={n} exceeds the enumeration bound {configured_max_n()}; "
            f"pass allow_long or raise {ENV_MAX_N}"
        )

    pairs = [(s, l) for s in range(1, n) for l in range(s + 1, n)]
    table_bits = 18 if n <= 14 else 20
    jobs = max(1, int(jobs))
    chunks = _split(pairs, jobs * 8 if jobs > 1 else (50 if progress else 1))

    visited = 0
    keys: set[int] = set()
    witnesses_by_key: dict[int, tuple[int, ...]] = {}
    done = 0
    if jobs == 1:
        for chunk in chunks:
            v, ks, wit = _kernels.run_chunk(n, chunk, table_bits)
            visited += v
            keys.update(ks)
            _merge_witnesses(witnesses_by_key, wit)
            done += 1
            if progress:
                progress(done, len(chunks))
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_kernels.run_chunk, n, c, table_bits) for c in chunks]
            for fut in futures:
                v, ks, wit = fut.result()
                visited += v
                keys.update(ks)
                _merge_witnesses(witnesses_by_key, wit)
                done += 1
                if progress:
                    progress(done, len(chunks))

    expected = cycle_count(n)
    if visited != expected:
        raise AssertionError(f"visited {visited} cycles, expected (n-1)!/2 = {expected}")
    d = n // 2
    vectors = tuple(sorted(_kernels.unpack_key(k, d) for k in keys))
    witnesses = {
        _kernels.unpack_key(k, d): order for k, order in witnesses_by_key.items()
    }
    return VectorSet(n=n, vectors=vectors, witnesses=witnesses)


def _merge_witnesses(into: dict, new: dict) -> None:
    for key, order in new.items():
        if key not in into and len(into) < _kernels.WITNESS_CAP:
            into[key] = order


def _split(pairs: list, parts: int) -> list[list]:
    parts = min(max(parts, 1), len(pairs))
    size = -(-len(pairs) // parts)
    return [pairs[i : i + size] for i in range(0, len(pairs), size)]


def contains_vector(vset: VectorSet, t: Sequence[int] | EdgeLengthVector) -> bool:
    """Binary-search membership of a cycle vector in the sorted set."""
    counts = tuple(t.t) if isinstance(t, EdgeLengthVector) else tuple(int(x) for x in t)
    if len(counts) != vset.n // 2:
        raise ValueError(f"vector {counts} does not match n={vset.n}")
    i = bisect_left(vset.vectors, counts)
    return i < len(vset.vectors) and vset.vectors[i] == counts


def to_json(vset: VectorSet) -> str:
    """Canonical JSON: sorted keys, no whitespace variance."""
    payload = {"n": vset.n, "vectors": [list(t) for t in vset.vectors]}
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def from_json(text: str) -> VectorSet:
    payload = json.loads(text)
    return VectorSet(n=payload["n"], vectors=tuple(tuple(v) for v in payload["vectors"]))


def write_json(vset: VectorSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(vset))


def read_json(path) -> VectorSet:
    with open(path, encoding="utf-8") as fh:
        return from_json(fh.read())


def to_csv(vset: VectorSet) -> str:
    d = vset.n // 2
    lines = [",".join(f"t{i}" for i in range(1, d + 1))]
    lines.extend(",".join(str(x) for x in t) for t in vset.vectors)
    return "\n".join(lines) + "\n"


def write_csv(vset: VectorSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_csv(vset))


def read_csv(path, n: int) -> VectorSet:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().strip().splitlines()
    vectors = tuple(tuple(int(x) for x in line.split(",")) for line in lines[1:])
    return VectorSet(n=n, vectors=tuple(sorted(set(vectors))))
