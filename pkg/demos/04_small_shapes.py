"""Every cylindric skew shape with at most four cells, m, ell <= 3, parts in [0, 4].

Reports how each verification ended and how wide a window it needed.
"""
import sys
import time
from collections import Counter
from fractions import Fraction
from itertools import product

from cylhook.diagrams import validate_partition
from cylhook.errors import CylHookError
from cylhook.formulas import verify_conjecture

# the bar shapes with ell = 1 need windows in the millions; pass --all to include them
include_slow = "--all" in sys.argv


def shapes():
    for m, ell in product(range(1, 4), repeat=2):
        for parts in product(range(5), repeat=m):
            try:
                lam = validate_partition(parts, m, ell)
            except CylHookError:
                continue
            for inner in product(*[range(p + 1) for p in parts]):
                try:
                    mu = validate_partition(inner, m, ell)
                except CylHookError:
                    continue
                if 1 <= sum(parts) - sum(inner) <= 4:
                    yield lam, mu


t0 = time.perf_counter()
verdicts, widest = Counter(), Counter()
for lam, mu in shapes():
    if lam.m == 1 and lam.ell == 1 and not include_slow:
        continue
    rep = verify_conjecture(lam, mu, 1 << 23, Fraction(1, 10**6))
    verdicts[rep.verdict.value] += 1
    widest[rep.windows[-1]] += 1
print(dict(verdicts))
print("final window sizes:", dict(sorted(widest.items())))
print(f"{time.perf_counter() - t0:.1f}s")
