"""Counting the greedy paths when n is a power of two.

For n = 2**k the lengths split into stripe classes S_i by gcd(n, j) = 2**(k-i),
and a greedy optimum uses at most one length per class, namely the cheapest,
and only when it beats everything in later classes.  Each optimum is coded by
an encoding sequence: one choice per class (a length or a skip "x", no skip in
the last class).  Counting encodings gives 2**k * prod_{i=1}^{k-3} (2**i + 1)
paths, each with a distinct edge-length multiset, so the number of realizable
multisets grows faster than any polynomial along powers of two.
"""

from elpoly import (
    InstanceParams,
    count_blg,
    crude_lower_bound,
    encoding_to_costs,
    encoding_to_vector,
    enumerate_encodings,
    extend_to_cycle,
    lower_bound_vertices,
    stripe_partition,
)

params = InstanceParams.for_n(16)
print("n = 16 stripe classes:")
for i, cls in enumerate(stripe_partition(params).classes, 1):
    print(f"  S_{i} = {sorted(cls)}")
print("encodings: 2 * 2 * 3 * 4 =", count_blg(params))
print()

params = InstanceParams.for_n(8)
print("n = 8: all encodings, their path vectors, and certified cycle extensions")
for enc in enumerate_encodings(params):
    vec = encoding_to_vector(enc, params).t
    costs = encoding_to_costs(enc, params).costs
    if enc.s[1] != "x":
        ext = extend_to_cycle(enc, params).t
        print(f"  {str(enc.s):18} {vec}  costs {costs}  -> cycle {ext}")
    else:
        print(f"  {str(enc.s):18} {vec}  costs {costs}")
print()

print("growth along powers of two:")
print(f"  {'n':>6} {'paths':>12} {'cycle-vertex bound':>20} {'crude bound':>12}")
for k in range(4, 11):
    params = InstanceParams.for_n(2**k)
    print(
        f"  {params.n:>6} {count_blg(params):>12} "
        f"{lower_bound_vertices(params):>20} {crude_lower_bound(params):>12}"
    )
