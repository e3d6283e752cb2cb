"""Hook case: lambda = ((ell+1)^m), mu = (ell^(m-1), 0).

Excited diagrams correspond to lattice paths, one family per shift i, and the
weighted path sums have closed forms.
"""
from math import comb, factorial

from cylhook.diagrams import validate_partition
from cylhook.formulas import f_lms, f_lmst, hook_formula_check
from cylhook.paths import is_loop, loop_decomposition, project
from cylhook.tableaux import count_restricted

ell, m = 3, 2
lam = validate_partition((ell + 1,) * m, m, ell)
mu = validate_partition((ell,) * (m - 1) + (0,), m, ell)
print("restricted fillings:", count_restricted(lam, mu), "binomial:", comb(ell + m - 2, m - 1))

for i, paths in loop_decomposition(lam, 2).items():
    print(f"shift {i}:")
    for p in paths:
        print("   ", p.steps, "from", tuple(p.start), "loop:", is_loop(p.cells, lam.omega),
              "complement", [tuple(c) for c in project(p, lam.omega)])

total, closed, ok = f_lms(ell, m, 1)
print(f"\nF(l,m;1): path sum {total}, closed {closed}, equal {ok}")

r = f_lmst(ell, m, 1, ell + m, 60)
print(f"F(l,m;1,l+m) truncated at i = 60: {float(r.truncated_sum):.12f}")
print(f"closed form:                     {float(r.closed_form):.12f}  (times n! = {factorial(ell + m) * r.closed_form})")
print(f"gap {float(r.gap):.3e}, heuristic tail {float(r.tail_estimate):.3e}, recurrence {r.recurrence_ok}")

rep = hook_formula_check(ell, m, 16)
for w, g in zip(rep.windows, rep.partial_sums):
    print(f"window {w:3d}: g = {float(g):.9f}")
