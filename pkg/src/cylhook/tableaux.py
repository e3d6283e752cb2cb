"""Linear extensions (reverse standard tableaux) of finite and cylindric skew shapes.

Entries decrease to the right along rows and downward along columns:

    eps(a, b) > eps(a, b+1)    and    eps(a, b) > eps(a+1, b).

A filling of lam/mu with lam, mu in P_{m,ell} is *ell-restricted* when in addition
eps(1, b) < eps(m, b - ell) for every b with both cells present.  These fillings are
exactly the linear extensions of the cylindric skew diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagrams import Cell, GeneralizedPartition, Omega, SkewShape, skew_cells


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: tuple[tuple[Cell, int], ...]

    def __getitem__(self, cell) -> int:
        return dict(self.entries)[Cell(*cell)]

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def is_valid(self) -> bool:
        eps = self.as_dict()
        if sorted(eps.values()) != list(range(1, len(eps) + 1)):
            return False
        for (a, b), v in eps.items():
            if (a, b + 1) in eps and not v > eps[(a, b + 1)]:
                return False
            if (a + 1, b) in eps and not v > eps[(a + 1, b)]:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "shape": shape_to_json(self.shape),
            "entries": [[a, b, v] for (a, b), v in self.entries],
        }

    def render(self) -> str:
        return render_filling(self.as_dict())


def shape_to_json(shape: SkewShape) -> dict:
    return {
        "lambda": list(shape.outer.parts),
        "mu": list(shape.inner.parts),
        "m": shape.outer.m,
        "ell": shape.outer.ell,
    }


def render_filling(eps: dict) -> str:
    """Rows top to bottom; empty positions inside the bounding box print as ``.``."""
    if not eps:
        return ""
    rows = sorted({a for a, _ in eps})
    cols = range(min(b for _, b in eps), max(b for _, b in eps) + 1)
    width = max(len(str(v)) for v in eps.values())
    lines = []
    for a in rows:
        lines.append(
            " ".join(str(eps[(a, b)]).rjust(width) if (a, b) in eps else ".".rjust(width) for b in cols)
        )
    return "\n".join(lines)


def _smaller_relations(cells, omega: Omega | None):
    """For each cell, the cells whose entry must be smaller (direct relations only)."""
    index = set(cells)
    rel = {c: [] for c in cells}
    for a, b in cells:
        for nb in ((a, b + 1), (a + 1, b)):
            if nb in index:
                rel[(a, b)].append(nb)
    if omega is not None:
        m, ell = omega.m, omega.ell
        for a, b in cells:
            if a == m and (1, b + ell) in index:
                rel[(a, b)].append((1, b + ell))
    return rel


def is_restricted_extension(t: Tableau, omega: Omega) -> bool:
    eps = t.as_dict()
    m, ell = omega.m, omega.ell
    for (a, b), v in eps.items():
        if a == 1 and (m, b - ell) in eps and not v < eps[(m, b - ell)]:
            return False
    return True


def _count(cells, omega: Omega | None) -> int:
    cells = list(cells)
    n = len(cells)
    if n == 0:
        return 1
    pos = {c: i for i, c in enumerate(cells)}
    rel = _smaller_relations(cells, omega)
    need = [0] * n
    for c, smaller in rel.items():
        for s in smaller:
            need[pos[c]] |= 1 << pos[s]
    full = (1 << n) - 1
    memo = {full: 1}

    # number of ways to hand out the values |S|+1..n once the cells in S hold 1..|S|
    def ways(S: int) -> int:
        if S in memo:
            return memo[S]
        total = 0
        for i in range(n):
            if not S >> i & 1 and need[i] & S == need[i]:
                total += ways(S | 1 << i)
        memo[S] = total
        return total

    return ways(0)


def count_linear_extensions(shape: SkewShape) -> int:
    return _count(shape.cells, None)


def count_restricted(lam: GeneralizedPartition, mu: GeneralizedPartition) -> int:
    shape = skew_cells(lam, mu)
    return _count(shape.cells, shape.omega)


def count_finite(cells) -> int:
    """Linear extensions of an arbitrary finite cell set under the row/column rules."""
    return _count(cells, None)


def enumerate_linear_extensions(shape: SkewShape, restricted: bool = False) -> Iterator[Tableau]:
    """Yield tableaux in lexicographic order of their row-major entry vectors."""
    cells = sorted(shape.cells)
    n = len(cells)
    if n == 0:
        yield Tableau(shape, ())
        return
    rel = _smaller_relations(cells, shape.omega if restricted else None)
    larger = {c: [] for c in cells}
    for c, smaller in rel.items():
        for s in smaller:
            larger[s].append(c)

    def closure(graph, c):
        seen, stack = set(), list(graph[c])
        while stack:
            d = stack.pop()
            if d not in seen:
                seen.add(d)
                stack.extend(graph[d])
        return len(seen)

    lo = {c: closure(rel, c) + 1 for c in cells}
    hi = {c: n - closure(larger, c) for c in cells}
    eps: dict = {}
    used = [False] * (n + 1)

    def place(k):
        if k == n:
            yield Tableau(shape, tuple((c, eps[c]) for c in cells))
            return
        c = cells[k]
        upper = min([hi[c]] + [eps[d] - 1 for d in larger[c] if d in eps])
        lower = max([lo[c]] + [eps[d] + 1 for d in rel[c] if d in eps])
        for v in range(lower, upper + 1):
            if used[v]:
                continue
            used[v] = True
            eps[c] = v
            yield from place(k + 1)
            del eps[c]
            used[v] = False

    yield from place(0)
