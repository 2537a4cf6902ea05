"""Largest direction sets all of whose cross ratios are forbidden values.

Such a set is the only way a U-polygon can exist, so its size bounds how
many directions can fail to determine convex sets.
"""

# %% Exhaustive search for small n
from cyclotomo import FieldTag, magic_number, max_admissible_set, witness_matches_regular
from cyclotomo.crossratio import pretty, INF

for n in (3, 4, 5, 8, 12):
    res = max_admissible_set(FieldTag(n))
    m = magic_number(FieldTag(n), bound=res)
    print(f"n={n:2d}: bound {res.bound:2d} (N = {res.tag.N}), magic number {m.magic}, "
          f"{res.pool_size} candidate slopes, {res.elapsed:.2f}s")

# %% The n = 8 witness is the regular fan up to a projective map
res = max_admissible_set(FieldTag(8))
print([("inf" if t is INF else pretty(t)) for t in res.witness.slopes])
print("matches e^{h pi i / 8}:", witness_matches_regular(res.witness))
