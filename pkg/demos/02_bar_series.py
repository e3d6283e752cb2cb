"""The bar lambda = (n), mu = (0) on a cylinder of period (1, -ell).

Only one filling exists, yet the excited diagrams are infinite in number.  The
series creeps up to 1; this script shows how slowly for ell = 1.
"""
from fractions import Fraction

from cylhook.diagrams import hook_length_cyl, validate_partition
from cylhook.excited import enumerate_excited_cyl, render_cyl_state
from cylhook.formulas import bar_formula_check, cyl_partial_sum, cyl_tail_estimate, increments
from cylhook.paths import enumerate_bar_tuples, psi_bar

lam, mu = validate_partition((2,), 1, 1), validate_partition((0,), 1, 1)
print("hook lengths c_1.. c_8:", [hook_length_cyl(lam, (1, 3 - i)) for i in range(1, 9)])

print("\nfirst excited diagrams (o marks the complement):")
for depth, (D,) in enumerate_excited_cyl(lam, mu, 3):
    print(f"depth {depth}:", render_cyl_state(lam, D, [1], range(-3, 4)))

rep = cyl_partial_sum(lam, mu, 9)
for K, g in enumerate(rep.partial_sums[:6], start=1):
    print(f"after {K} strata g = {g}  (1 - 1/{2 * K + 1})")

# doubling windows feed the heuristic tail estimate
gs = []
for w in (8, 16, 32, 64, 128):
    gs.append(cyl_partial_sum(lam, mu, w).partial_sums[-1])
print("\nwindow 128: true gap", 1 - gs[-1], " estimated", cyl_tail_estimate(increments(gs)))

# the same diagrams as index tuples, n = 5, ell = 1
print("\nn = 5, ell = 1 tuples with i_q <= 6:")
for t in enumerate_bar_tuples(1, 5, 6):
    print(" ", t.indices, "->", [b for _, b in psi_bar(t).complement])

for n, ell in [(2, 1), (5, 2), (7, 3)]:
    r = bar_formula_check(n, ell, 200)
    print(f"\nn={n} ell={ell}: f = {r.lhs}, n!/g = {r.values['n_factorial_over_g']}, "
          f"gap at window 200 = {float(r.values['gap_at_window']):.3e}")
