"""Edge lengths on a circle, divisor constraints, and what a path can use.

Place n vertices evenly around a circle and label every edge {i, j} by its
length min(|i-j|, n-|i-j|).  Which multisets of edge lengths can a
Hamiltonian path be assembled from?  This walk-through starts with the n=4
picture: three short/long combinations work, and three long edges alone are
impossible because the diagonals never leave the two parity classes.
"""

import itertools

from elpoly import (
    InstanceParams,
    check_bhr,
    count_realizable_multisets,
    edge_length,
    path_multisets,
    realizable_path,
)


def candidates(params):
    n, d = params.n, params.d
    for t in itertools.product(range(n), repeat=d):
        if sum(t) == n - 1 and (n % 2 or t[-1] <= n // 2):
            yield t


n = 4
params = InstanceParams.for_n(n)
print(f"n = {n}: edge lengths live in 1..{params.d}")
print("length of {1,2}:", edge_length(1, 2, n))
print("length of {1,3}:", edge_length(1, 3, n), "(a diameter)")
print()

print("candidate multisets (t1, t2) with t1 + t2 = 3 edges:")
for t in [(3, 0), (2, 1), (1, 2), (0, 3)]:
    verdict = check_bhr(t, params)
    line = f"  t = {t}: divisor checks {'pass' if verdict.feasible else 'FAIL (q=%d)' % verdict.violated_divisor}"
    if verdict.feasible:
        line += f", realizable: {realizable_path(t, params)}"
    print(line)
print()
print("distinct realizable multisets at n=4:", count_realizable_multisets(params))
print()

# The divisor constraints are necessary in general: any length divisible by q
# keeps a path inside one of the q residue classes mod q, and connecting the
# classes costs q-1 edges of other lengths.
n = 8
params = InstanceParams.for_n(n)
print(f"n = {n}: all realizable multisets pass the divisor checks")
realized = path_multisets(params)
print(f"  {len(realized)} realizable multisets; first five: {realized[:5]}")
assert all(check_bhr(t, params).feasible for t in realized)
print("  necessity verified for every one of them")

# The converse (feasible implies realizable) is a long-standing conjecture;
# it holds for everything this demo can reach.
missing = [
    t
    for t in candidates(params)
    if check_bhr(t, params).feasible and t not in set(realized)
]
print("  feasible-but-unrealizable candidates found:", missing or "none")
