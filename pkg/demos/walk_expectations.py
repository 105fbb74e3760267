"""Orientation chain and summand-walk distances, exact and sampled.

The orientation of a strand entering a block follows a three-state
chain whose s-step matrix has an exact closed form; its rows mix at
rate 2^-s.  Over a uniform word the residual summand count after
mirror cancellation is a lattice-walk distance whose mean stays
under 3*sqrt(2^s t) plus a palindromic correction.
"""

from fractions import Fraction

from twobridge.markov import (
    contraction_gap,
    distance_bound,
    exact_expected_distance,
    monte_carlo_distance,
    power_closed_form,
    transition_matrix,
)

print("one-block transition matrix P(s) for s = 1..3")
for s in (1, 2, 3):
    rows = " | ".join(" ".join(str(v) for v in row)
                      for row in transition_matrix(s))
    print(f"  s={s}:  {rows}")

print()
print("closed form matches, and the within-row spread is exactly 2^-ks")
for s, k in ((2, 1), (2, 3), (3, 4)):
    assert power_closed_form(s, k) == transition_matrix(s * k)
    gap = contraction_gap(s, k)
    assert gap == Fraction(1, 2 ** (s * k))
    print(f"  s={s} k={k}: gap {gap}")

print()
print("exact expected walk distance vs the 3*sqrt(2^s t) + p(s) bound")
print("s  t   E[dist]        bound")
for s, t in ((1, 4), (1, 12), (2, 5), (2, 10), (3, 4), (4, 5)):
    value = exact_expected_distance(s, t)
    bound = distance_bound(s, t)
    assert float(value) <= bound
    print(f"{s}  {t:<3} {str(value):<12}  {float(value):.4f} <= {bound:.4f}")

print()
mean, stderr = monte_carlo_distance(4, 100, trials=20000, seed=0)
print(f"monte carlo s=4 t=100 (20000 trials, seed 0): "
      f"{mean:.3f} +- {stderr:.3f}, bound {distance_bound(4, 100):.1f}")
