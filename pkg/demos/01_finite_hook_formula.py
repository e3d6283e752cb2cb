"""The smallest skew example: lambda = (2,2), mu = (1).

Counts the fillings, lists the excited diagrams and adds up the hook products.
"""
from fractions import Fraction
from math import factorial, prod

from cylhook.diagrams import finite_skew_cells, hook_length_finite
from cylhook.excited import enumerate_excited_finite
from cylhook.formulas import naruse_rhs
from cylhook.tableaux import count_finite, render_filling

lam, mu = (2, 2), (1, 0)
cells = finite_skew_cells(lam, mu)
print("skew cells:", cells)
print("fillings decreasing along rows and columns:", count_finite(cells))

box = [(a, b) for a in (1, 2) for b in (1, 2)]
hooks = {x: hook_length_finite(lam, x) for x in box}
print("\nhook lengths of (2,2):")
print(render_filling(hooks))

total = Fraction(0)
for D in sorted(enumerate_excited_finite(lam, mu), key=lambda D: sorted(D.cells)):
    rest = [x for x in box if x not in D.cells]
    term = Fraction(1, prod(hooks[x] for x in rest))
    total += term
    print(f"\nexcited diagram {sorted(D.cells)}  ->  1/{term.denominator}")
    print(render_filling({x: ("o" if x in D.cells else ".") for x in box}))

print(f"\n3! * {total} = {factorial(3) * total}")
assert factorial(3) * total == naruse_rhs(lam, mu) == 2
