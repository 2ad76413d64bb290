"""Encoding sequences for n = 2**k and the greedy paths they encode.

An encoding sequence (s_1, ..., s_k) picks, for each stripe class S_i, either
the single length the greedy path uses from that class or the skip marker "x"
(the last class cannot be skipped).  Encodings are in bijection with the
greedy paths that arise as unique optima over circulant costs; this module
enumerates them, counts them in closed form, converts them to edge-length
vectors and witness cost vectors, builds the explicit paths by copy-translate-
merge, and extends them to Hamiltonian cycles where that is certified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .circulant import (
    CirculantCosts,
    EdgeLengthVector,
    InstanceParams,
    StripePartition,
    mod1,
    path_edge_vector,
    stripe_partition,
)
from .errors import ExtensionUndefinedError, UnsupportedModulusError
from .gseq import CostPermutation, g_sequence

SKIP = "x"

Entry = Union[int, str]


@dataclass(frozen=True)
class EncodingSequence:
    """One choice per stripe class: a length from S_i, or "x" for 1 <= i < k."""

    s: tuple[Entry, ...]

    def __post_init__(self) -> None:
        norm = tuple(e if e == SKIP else int(e) for e in self.s)
        object.__setattr__(self, "s", norm)

    def __len__(self) -> int:
        return len(self.s)

    def __getitem__(self, i: int) -> Entry:
        return self.s[i]

    @property
    def chosen(self) -> tuple[int, ...]:
        """The non-skip entries, in class order (cheapest first)."""
        return tuple(e for e in self.s if e != SKIP)

    def to_json(self) -> list[Entry]:
        return list(self.s)

    @classmethod
    def from_json(cls, data: Iterable[Entry]) -> "EncodingSequence":
        return cls(tuple(data))


@dataclass(frozen=True)
class VertexPath:
    """An explicit Hamiltonian path as a sequence of distinct vertices in [n]."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))
        n = len(self.order)
        if sorted(self.order) != list(range(1, n + 1)):
            raise ValueError("path must visit 1..n exactly once")

    @property
    def n(self) -> int:
        return len(self.order)

    def edge_vector(self) -> EdgeLengthVector:
        return path_edge_vector(self.order, self.n)


def _require_power_of_two(params: InstanceParams) -> tuple[int, int, StripePartition]:
    if params.k is None or params.k < 2:
        raise UnsupportedModulusError(f"encodings need n = 2**k with k >= 2, got n={params.n}")
    return params.n, params.k, stripe_partition(params)


def _class_options(stripes: StripePartition, k: int) -> list[list[Entry]]:
    # skip sorts before lengths, lengths ascending; the last class has no skip
    options: list[list[Entry]] = [[SKIP] + sorted(cls) for cls in stripes.classes[:-1]]
    options.append(sorted(stripes.classes[-1]))
    return options


def validate_encoding(s: Sequence[Entry], params: InstanceParams) -> EncodingSequence:
    """Check class membership of every entry and return the normalized encoding."""
    n, k, stripes = _require_power_of_two(params)
    enc = s if isinstance(s, EncodingSequence) else EncodingSequence(tuple(s))
    if len(enc) != k:
        raise ValueError(f"encoding {enc.s} has {len(enc)} entries, expected k={k}")
    for i, entry in enumerate(enc.s, 1):
        if entry == SKIP:
            if i == k:
                raise ValueError("the last class cannot be skipped")
            continue
        if entry not in stripes.classes[i - 1]:
            raise ValueError(f"entry {entry} at position {i} is not in stripe class S_{i}")
    return enc


def enumerate_encodings(params: InstanceParams) -> list[EncodingSequence]:
    """All encoding sequences in lexicographic order (skip before lengths)."""
    _, k, stripes = _require_power_of_two(params)
    options = _class_options(stripes, k)
    return [EncodingSequence(s) for s in itertools.product(*options)]


def count_blg(params: InstanceParams) -> int:
    """Number of encoding sequences (equivalently, of greedy paths).

    For k >= 4 this is the closed form 2**k * prod_{i=1}^{k-3} (2**i + 1);
    small k falls back to the product of per-class option counts.
    """
    _, k, stripes = _require_power_of_two(params)
    if k >= 4:
        count = 2**k
        for i in range(1, k - 2):
            count *= 2**i + 1
        return count
    count = 1
    for opts in _class_options(stripes, k):
        count *= len(opts)
    return count


def encoding_to_vector(s: Sequence[Entry], params: InstanceParams) -> EdgeLengthVector:
    """Edge-length vector of the greedy path encoded by s.

    The first chosen length s_i gets n - 2**(k-i) edges; each later chosen
    length s_i, with j the previous chosen class, gets 2**(k-j) - 2**(k-i).
    """
    enc = validate_encoding(s, params)
    n, k = params.n, params.k
    t = [0] * params.d
    prev_class = None
    for i, entry in enumerate(enc.s, 1):
        if entry == SKIP:
            continue
        high = n if prev_class is None else 2 ** (k - prev_class)
        t[entry - 1] = high - 2 ** (k - i)
        prev_class = i
    return EdgeLengthVector(tuple(t), "path")


def encoding_to_costs(s: Sequence[Entry], params: InstanceParams) -> CirculantCosts:
    """A witness cost vector whose greedy order selects exactly the entries of s.

    Chosen lengths get costs 1..k by class position; every other length gets a
    larger cost, assigned k+1, k+2, ... in ascending length order.  All costs
    are distinct, so the greedy optimum is unique.
    """
    enc = validate_encoding(s, params)
    assigned: dict[int, int] = {}
    for i, entry in enumerate(enc.s, 1):
        if entry != SKIP:
            assigned[entry] = i
    nxt = params.k + 1
    costs = []
    for j in range(1, params.d + 1):
        if j in assigned:
            costs.append(assigned[j])
        else:
            costs.append(nxt)
            nxt += 1
    return CirculantCosts(tuple(costs))


def encoding_to_permutation(s: Sequence[Entry], params: InstanceParams) -> CostPermutation:
    """The cost permutation induced by the witness costs of s."""
    return CostPermutation.from_costs(encoding_to_costs(s, params))


def build_blg_path(phi: CostPermutation, params: InstanceParams) -> VertexPath:
    """Construct an explicit greedy path for phi by copy-translate-merge.

    Stage 1 walks length-phi(1) edges from vertex 1 through {v : v = 1 mod
    g_1}.  Stage j translates the current path by t*phi(j) for t = 0, ...,
    g_{j-1}/g_j - 1 and stitches the translates end-to-end, alternating the
    joining end: even t connects last vertices, odd t connects first vertices,
    which traverses translates alternately forward and backward.
    """
    n = params.n
    gs = g_sequence(phi, params)
    path = [mod1(1 + t * phi(1), n) for t in range(n // gs.g[1])]
    for j in range(2, gs.ell + 1):
        copies = gs.g[j - 1] // gs.g[j]
        if copies == 1:
            continue
        step = phi(j)
        merged: list[int] = []
        for t in range(copies):
            block = [mod1(v + t * step, n) for v in path]
            if t % 2 == 1:
                block.reverse()
            merged.extend(block)
        path = merged
    return VertexPath(tuple(path))


def extend_to_cycle(s: Sequence[Entry], params: InstanceParams) -> EdgeLengthVector:
    """Edge-length vector of the Hamiltonian cycle closing the greedy path of s.

    Defined only when s_{k-1} is not skipped: then the final construction
    stage merges exactly two translates, the path runs from vertex 1 to
    1 + s_k, and adding the edge {1, 1 + s_k} closes it into a cycle.
    """
    enc = validate_encoding(s, params)
    if enc.s[params.k - 2] == SKIP:
        raise ExtensionUndefinedError(
            f"extension of {enc.s} is not certified: class k-1 is skipped"
        )
    t = list(encoding_to_vector(enc, params).t)
    t[enc.s[-1] - 1] += 1
    return EdgeLengthVector(tuple(t), "cycle")


def extended_vector(s: Sequence[Entry], params: InstanceParams) -> EdgeLengthVector:
    """Formal extension of any encoding: the path vector plus one s_k edge.

    Unlike extend_to_cycle this never raises, but when s_{k-1} is skipped the
    result is a candidate vector only; it need not be realizable as a cycle.
    """
    enc = validate_encoding(s, params)
    t = list(encoding_to_vector(enc, params).t)
    t[enc.s[-1] - 1] += 1
    return EdgeLengthVector(tuple(t), "cycle")


def build_blg_cycle(s: Sequence[Entry], params: InstanceParams) -> tuple[int, ...]:
    """Explicit Hamiltonian cycle witnessing extend_to_cycle(s).

    Returns the vertex order of the closed cycle (the edge from the last
    vertex back to the first is implied); its edge-length vector equals
    extend_to_cycle(s, params).
    """
    enc = validate_encoding(s, params)
    if enc.s[params.k - 2] == SKIP:
        raise ExtensionUndefinedError(
            f"extension of {enc.s} is not certified: class k-1 is skipped"
        )
    path = build_blg_path(encoding_to_permutation(enc, params), params)
    first, last = path.order[0], path.order[-1]
    closing = mod1(last - first, params.n)
    if first != 1 or min(closing, params.n - closing) != enc.s[-1]:
        raise AssertionError(f"construction endpoints {first}, {last} do not close by s_k")
    return path.order


def lower_bound_vertices(params: InstanceParams) -> int:
    """Certified lower bound 2**(k-2) * prod_{i=1}^{k-3} (2**i + 1) on the
    number of edge-length polytope vertices when n = 2**k, k >= 4."""
    if params.k is None:
        raise UnsupportedModulusError(f"bound needs n = 2**k, got n={params.n}")
    if params.k < 4:
        raise ValueError(f"bound needs k >= 4, got k={params.k}")
    bound = 2 ** (params.k - 2)
    for i in range(1, params.k - 2):
        bound *= 2**i + 1
    return bound


def crude_lower_bound(params: InstanceParams) -> int:
    """The weaker closed form 2**((k*k - 3k - 4)/2) implied by the main bound."""
    if params.k is None:
        raise UnsupportedModulusError(f"bound needs n = 2**k, got n={params.n}")
    if params.k < 4:
        raise ValueError(f"bound needs k >= 4, got k={params.k}")
    exponent = (params.k * params.k - 3 * params.k - 4) // 2
    return 2**exponent
