"""Exact arithmetic in cyclotomic fields.

Elements of Q(zeta_m) are kept in canonical form modulo the m-th
cyclotomic polynomial, so equality is a coefficient comparison.
"""

# %% Basic elements
from fractions import Fraction

from cyclotomo import CycNum, real_compare

z12 = CycNum.zeta(12)
sqrt3 = z12 + z12**11  # 2 cos(pi/6)
print("sqrt3 =", sqrt3, "~", float(sqrt3))
print("sqrt3^2 == 3:", sqrt3 * sqrt3 == 3)

# %% Division and inverses stay exact
x = (2 + sqrt3) / (2 - sqrt3)
print("(2+sqrt3)/(2-sqrt3) =", x, "~", float(x))
print("equals 7 + 4 sqrt3:", x == 7 + 4 * sqrt3)

# %% Galois action and subfields
tau = 1 + CycNum.zeta(5) + CycNum.zeta(5, 4)  # golden ratio
print("tau^2 = tau + 1:", tau * tau == tau + 1)
print("conjugate of tau under zeta -> zeta^2:", float(tau.galois(2)))
big = tau.lift(60)
print("tau lives in Q(zeta_5) inside Q(zeta_60):", big.in_subfield(5))

# %% Comparing real numbers that agree to many digits
r2 = CycNum.zeta(8) + CycNum.zeta(8, 7)
eps = CycNum.rational(8, Fraction(1, 10**40))
print("compare 1+sqrt2+1e-40 with 1+sqrt2:", real_compare(1 + r2 + eps, 1 + r2))
