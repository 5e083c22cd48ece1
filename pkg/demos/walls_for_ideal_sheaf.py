# Numerical walls in the (beta, t = alpha^2) plane
#
# A wall for v is the locus where nu(v) = nu(w).  In these coordinates it is
# a conic of degree one in t, so t is a quadratic function of beta.

from fractions import Fraction as F

from tiltwall import NumClass, Window, enumerate_pseudo_walls, line_bundle, sample_conic, solve_t, wall_curve

wc = wall_curve(line_bundle(1), line_bundle(0))
print("wall(O(1), O):", wc)
print("t at beta = 1/2:", solve_t(wc, F(1, 2)))  # 3 beta (1 - beta)

# O(1) itself has no pseudo-walls on this window: every candidate either
# leaves the box or sits where ch1 of the subobject is out of range
win = Window(0, F(9, 10), F(1, 100), 2)
print("pseudo-walls for O(1):", enumerate_pseudo_walls(line_bundle(1), win, max_rank=5))

# The ideal sheaf of a line is destabilised along a semicircle
ideal_line = NumClass(1, 0, -1, 1)
win = Window(-2, F(-1, 2), F(1, 100), 3)
for pw in enumerate_pseudo_walls(ideal_line, win, max_rank=5, threads=4):
    print("w =", tuple(str(x) for x in pw.key), "conic", tuple(str(x) for x in pw.conic),
          "witness", tuple(str(x) for x in pw.witness))

known = wall_curve(ideal_line, line_bundle(-1))
for beta, t in sample_conic(known, -2, -1, 9):
    print(f"  beta = {str(beta):>6}  t = {t}")
