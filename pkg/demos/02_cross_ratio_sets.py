"""The finite set of forbidden cross ratios for a cyclotomic field.

For n = 12 the set has 29 elements, all of the form a + b sqrt(3).
"""

# %% Enumerate
from cyclotomo import FieldTag, enumerate_cross_ratio_set
from cyclotomo.crossratio import pretty

for n in (3, 5, 8, 12):
    C = enumerate_cross_ratio_set(FieldTag(n))
    print(f"n={n:2d}: {len(C):3d} values, {C.stats['quadruples']} quadruples examined")

# %% The n = 12 list with one witness quadruple each
C = enumerate_cross_ratio_set(FieldTag(12))
for v, w in zip(C.values, C.witnesses):
    print(f"{pretty(v):>14s}  ~ {float(v):.6f}   from k = {w.ks}")

# %% Closure under the rotation map lambda -> lambda / (lambda - 1)
print("closed:", all(v / (v - 1) in C for v in C.values))
