"""Exact reducibility census of +-1 polynomials versus the asymptotic bound.

For each degree n we enumerate all 2^n monic polynomials with +-1 coefficients
and count exactly how many are reducible over the integers, then compare with
the closed-form lower bound driven by roots at +-1.
"""
from polylab import exhaustive_reducibility, figure_lower_bound, lo_exact_pm1

print(f"{'n':>3} {'reducible':>10} {'exact prob':>11} "
      f"{'P(root at 1)':>13} {'asymptotic lb':>14}")
for n in range(2, 13):
    res = exhaustive_reducibility(n)
    lb = figure_lower_bound(n) if n % 2 else float("nan")
    print(f"{n:>3} {res.reducible:>5}/{res.total:<5} {float(res.probability):>10.4f} "
          f"{float(lo_exact_pm1(n, 1)):>13.4f} {lb:>14.4f}")

print("\nsmallest factor degree at n = 11:")
for d, count in sorted(exhaustive_reducibility(11).by_smallest_factor_degree.items()):
    print(f"  degree {d}: {count} polynomials")
