# Stability regions on P^3
#
# The two-parameter charge Z^{s,t} on P^3 is a stability condition on the
# region t < 1/2, s > (7t - 2)/(6(t + 1)).  At (s, t) = (1/6, 1/2) it kills
# the class of O(1), so that corner is excluded.

from fractions import Fraction as F

from tiltwall import line_bundle, region_p3_lemma, region_p3_theorem, z_st

print("Z^{1/6,1/2}(O(1)) =", z_st(line_bundle(1), F(1, 6), F(1, 2)))

# s = 3t stays inside the region for every t in (0, 1/2)
for t in (F(1, 10), F(1, 4), F(49, 100)):
    print(f"s = 3t, t = {t}:", region_p3_theorem(3 * t, t))

# the lower boundary itself is not included
t = F(1, 4)
edge = (7 * t - 2) / (6 * (t + 1))
print("boundary s =", edge, "->", region_p3_theorem(edge, t))
print("lemma region at (1/6, 1/4):", region_p3_lemma(F(1, 6), t))

# a crude text picture of the region
for k in range(10, -1, -1):
    s = F(k - 4, 20)
    row = "".join("#" if region_p3_theorem(s, F(j, 40)) else "." for j in range(1, 21))
    print(f"{float(s):6.2f} {row}")
print("        t from 1/40 to 1/2")
