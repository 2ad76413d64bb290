"""Compiled inner loop for exhaustive Hamiltonian-cycle enumeration.

Cycles are visited in canonical form: vertex 0 first (0-indexed labels) and
the second vertex smaller than the last, so every undirected cycle appears
exactly once and the visit counter equals (n-1)!/2.  For each (second, last)
pair the n-3 middle vertices run through their permutations in lexicographic
order.  Edge-length vectors are packed into an int64 key, 6 bits per length,
and deduplicated in an open-addressing table; the first vertex order seen for
each new key is kept as a witness, up to a fixed cap.
"""

import numpy as np
from numba import njit

KEY_BITS = 6
WITNESS_CAP = 1000


@njit(cache=True, nogil=True)
def _enumerate_chunk(n, seconds, lasts, inc, table, wit_keys, wit_cycles):
    m = n - 3
    mask = table.shape[0] - 1
    middle = np.empty(max(m, 1), dtype=np.int8)
    nkeys = 0
    visited = 0
    for pidx in range(seconds.shape[0]):
        second = seconds[pidx]
        last = lasts[pidx]
        j = 0
        for v in range(1, n):
            if v != second and v != last:
                middle[j] = v
                j += 1
        while True:
            visited += 1
            key = inc[0, second] + inc[last, 0]
            prev = second
            for t in range(m):
                cur = middle[t]
                key += inc[prev, cur]
                prev = cur
            key += inc[prev, last]
            h = (key * np.int64(-7046029254386353131)) & np.int64(0x7FFFFFFFFFFFFFFF)
            slot = h & mask
            while True:
                k = table[slot]
                if k == key:
                    break
                if k == -1:
                    table[slot] = key
                    if nkeys < wit_keys.shape[0]:
                        wit_keys[nkeys] = key
                        wit_cycles[nkeys, 0] = 0
                        wit_cycles[nkeys, 1] = second
                        for t in range(m):
                            wit_cycles[nkeys, 2 + t] = middle[t]
                        wit_cycles[nkeys, n - 1] = last
                    nkeys += 1
                    break
                slot = (slot + 1) & mask
            # lexicographic next permutation of the middle block
            i = m - 2
            while i >= 0 and middle[i] >= middle[i + 1]:
                i -= 1
            if i < 0:
                break
            j2 = m - 1
            while middle[j2] <= middle[i]:
                j2 -= 1
            tmp = middle[i]
            middle[i] = middle[j2]
            middle[j2] = tmp
            lo = i + 1
            hi = m - 1
            while lo < hi:
                tmp = middle[lo]
                middle[lo] = middle[hi]
                middle[hi] = tmp
                lo += 1
                hi -= 1
    return visited, nkeys


def length_increment_table(n: int) -> np.ndarray:
    """inc[a, b] adds 1 to the packed count of the length of edge {a, b}."""
    inc = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            if a != b:
                diff = abs(a - b)
                inc[a, b] = np.int64(1) << (KEY_BITS * (min(diff, n - diff) - 1))
    return inc


def unpack_key(key: int, d: int) -> tuple:
    return tuple((key >> (KEY_BITS * i)) & ((1 << KEY_BITS) - 1) for i in range(d))


def run_chunk(n: int, pairs, table_bits: int):
    """Enumerate the canonical cycles for the given (second, last) pairs."""
    seconds = np.array([p[0] for p in pairs], dtype=np.int8)
    lasts = np.array([p[1] for p in pairs], dtype=np.int8)
    inc = length_increment_table(n)
    table = np.full(1 << table_bits, -1, dtype=np.int64)
    wit_keys = np.empty(WITNESS_CAP, dtype=np.int64)
    wit_cycles = np.zeros((WITNESS_CAP, n), dtype=np.int8)
    visited, nkeys = _enumerate_chunk(n, seconds, lasts, inc, table, wit_keys, wit_cycles)
    keys = table[table != -1]
    witnesses = {}
    for i in range(min(nkeys, WITNESS_CAP)):
        witnesses[int(wit_keys[i])] = tuple(int(v) + 1 for v in wit_cycles[i])
    return visited, [int(k) for k in keys], witnesses
