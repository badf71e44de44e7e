"""
Fractional second-order band-pass: optimisation collapses a to zero
===================================================================

Maximising the gain of d s^alpha / (s^(2 alpha) + 2 a s^alpha + b) at
omega0 drives a to its lower bound. On the ridge alpha = 1, b = omega0^2 the
gain is d / (2a), so the optimum always sits at the smallest allowed a.
"""

from foqfilter import DesignFamily, GaConfig, default_bounds, degeneracy_study

config = GaConfig()
rep = degeneracy_study(config, omega0=1.5, seeds=[1, 2, 3, 4, 5])
print(f"median optimised a = {rep.median_a:g}, degenerate = {rep.degenerate}")
for seed, params, q in rep.per_seed:
    print(f"  seed {seed}: {params}  Q={q:.4g}")

print("\nraising the lower bound on a:")
for lo in (5.0, 2.0, 1.0, 0.5, 0.1):
    bounds = default_bounds(DesignFamily.SECOND_ORDER_BANDPASS).replace(0, lower=lo)
    r = degeneracy_study(config, 1.5, [1, 2, 3, 4, 5], bounds=bounds)
    best = max(q for *_, q in r.per_seed)
    print(f"  a >= {lo:<4g} -> optimised a = {r.median_a:g}, best Q = {best:.4g} (d/2a = {20 / (2 * lo):.4g})")
