# Large volume limit
#
# Scaling omega by m turns Z into a cubic polynomial in m.  For shifted
# sheaves the order of limit phases follows the classical slope.

import cmath
from fractions import Fraction as F

from tiltwall import P3, compare_limit_phase, line_bundle, mu, z_inf

beta = F(1, 3)
charges = {k: z_inf(line_bundle(k).shift(1), 1, beta, P3) for k in (-1, 0, 1, 2)}
for j in charges:
    for k in charges:
        if j < k:
            order = compare_limit_phase(charges[k], charges[j])
            print(f"O({k})[1] vs O({j})[1]: {order.value}  (mu {mu(line_bundle(k), 1, beta, P3)} vs {mu(line_bundle(j), 1, beta, P3)})")

# the numeric phase gap settles down as m grows; at m = 1 one charge is
# still on the other side of the branch cut
p, q = charges[1], charges[0]
for m in (1, 10, 100, 1000):
    print(m, cmath.phase(p.evaluate_complex(m)) - cmath.phase(q.evaluate_complex(m)))
