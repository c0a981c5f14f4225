"""Fermionic Riemann sums in Z_5 and the measure they come from."""
from qeuler.characters import quadratic_character, trivial_character
from qeuler.emit import padic_to_dict
from qeuler.measure import (BallAddress, MeasureQuery, dirichlet_ab_padic, integrate_over_X,
                            measure_on_ball, q_of, riemann_sums)
from qeuler.padic import hensel_digits

p = 5
q = q_of(p, 1, 12)  # q = 6

# successive sums agree to more and more digits
sums = riemann_sums(2, q, range(1, 9))
for m in range(1, 8):
    print(m, (sums[m] - sums[m - 1]).valuation, hensel_digits(sums[m])[:8])

closed, budget = dirichlet_ab_padic(2, 0, trivial_character(1), 1, 1, q)
print("closed form", hensel_digits(closed), "loss", budget.loss_incurred)

# the measure of a ball is the sum over its p children
chi = quadratic_character(3)
mq = MeasureQuery(2, q, 1, 1, chi)
ball = BallAddress(4, 1, 3)
whole, b = measure_on_ball(ball, mq)
parts = [measure_on_ball(c, mq)[0] for c in ball.children(p)]
total = parts[0]
for v in parts[1:]:
    total = total + v
print(padic_to_dict(whole, b))
print((whole - total).valuation, "digits agree out of", whole.precision)

print(padic_to_dict(*integrate_over_X(mq, 3)))
