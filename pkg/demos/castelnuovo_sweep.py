# Curves on hypersurfaces
#
# For a curve C of degree d < D/2 on a degree-D hypersurface, the strong BG
# inequality applied to L (x) I_C bounds the genus by dD/2 - 4d/3 + 1.
# Castelnuovo's bound (d-1)(d-2)/2 is always below it in this range.

from tiltwall.scenarios import CurveScenario, castelnuovo_verify, curve_ideal_class

cs = CurveScenario(5, 2, 0)
print("conic in a quintic: ch3(O_C) =", cs.ch3_curve(), " L (x) I_C =", curve_ideal_class(cs),
      " t_scale^2 =", cs.t_scale_sq())

print(" D  d  castelnuovo  bg bound  margin")
for row in castelnuovo_verify(4, 12, threads=2):
    print(f"{row.D:2d} {row.d:2d} {str(row.castelnuovo):>12} {str(row.bg_bound):>9} {str(row.margin):>7}")
