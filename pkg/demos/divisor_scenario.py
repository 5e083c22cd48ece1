# Sheaves pushed forward from a divisor
#
# For E of rank r on S in |mH| with nu(i_* E) = 0, two upper bounds on
# s = ch2(E) are available.  Which one is sharper flips at 3 m^2 = 4 alpha^2,
# and with s at the sharper bound the strong BG margin is nonnegative, with
# equality exactly at the crossover.

from fractions import Fraction as F

from tiltwall import P3
from tiltwall.scenarios import DivisorScenario, bog1_bound, bog2_bound, prop61_verify

print(" m      t   bog1   bog2  case  margin")
for m in (1, 2, 3, 4):
    for t in (F(1), F(3), F(12)):
        probe = DivisorScenario(1, m, 0, P3, t=t)
        s = min(bog1_bound(probe), bog2_bound(probe))
        rep = prop61_verify(DivisorScenario(1, m, s, P3, t=t))
        print(f"{m:2d} {str(t):>6} {str(bog1_bound(probe)):>6} {str(bog2_bound(probe)):>6}  {rep.active_case}  {rep.margin}")

# equality case: m = 2, alpha^2 = 3
rep = prop61_verify(DivisorScenario(1, 2, 1, P3, t=3))
print("equality case margin:", rep.margin, "class", rep.pushforward)
