"""Lattice paths, bar-case index tuples, and their bijections with excited diagrams.

A lattice path is a chain u_1 -> u_2 -> ... -> u_r of cells with every step either
down (1, 0) or left (0, -1); paths serialize as step strings over {D, L}.

In the bar case lam = (n), mu = (0), omega = (1, -ell), the cell c_i is the i-th cell
of the single row counted from the right, c_i = (1, n - i + 1), for every i >= 1.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .diagrams import Cell, GeneralizedPartition, Omega, canonicalize, contains_periodic
from .errors import BadEndpoints, InvalidTuple
from .excited import CylExcitedDiagram, ExcitedDiagram

DOWN, LEFT = "D", "L"


@dataclass(frozen=True)
class LatticePath:
    cells: tuple[Cell, ...]

    def __post_init__(self):
        cells = tuple(Cell(*c) for c in self.cells)
        for u, v in zip(cells, cells[1:]):
            if (v[0] - u[0], v[1] - u[1]) not in ((1, 0), (0, -1)):
                raise ValueError(f"{tuple(u)} -> {tuple(v)} is not a lattice step")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_steps(cls, start, steps: str) -> "LatticePath":
        a, b = start
        cells = [Cell(a, b)]
        for s in steps:
            if s == DOWN:
                a += 1
            elif s == LEFT:
                b -= 1
            else:
                raise ValueError(f"unknown step {s!r}")
            cells.append(Cell(a, b))
        return cls(tuple(cells))

    @property
    def steps(self) -> str:
        return "".join(
            DOWN if v[0] > u[0] else LEFT for u, v in zip(self.cells, self.cells[1:])
        )

    @property
    def start(self) -> Cell:
        return self.cells[0]

    @property
    def end(self) -> Cell:
        return self.cells[-1]

    def __len__(self):
        return len(self.cells)

    def to_json(self) -> dict:
        return {"start": list(self.start), "steps": self.steps}


def count_paths(u, v) -> int:
    down, left = v[0] - u[0], u[1] - v[1]
    if down < 0 or left < 0:
        return 0
    return comb(down + left, down)


def enumerate_paths(u, v) -> list[LatticePath]:
    """All lattice paths from u to v, sorted by step string (D before L)."""
    down, left = v[0] - u[0], u[1] - v[1]
    if down < 0 or left < 0:
        return []
    out = []

    def walk(prefix, d, l):
        if d == 0 and l == 0:
            out.append(LatticePath.from_steps(u, prefix))
            return
        if d:
            walk(prefix + DOWN, d - 1, l)
        if l:
            walk(prefix + LEFT, d, l - 1)

    walk("", down, left)
    return out


def weighted_path_sum(u, v, weight: Callable) -> Fraction:
    """Sum over paths from u to v of prod_{x in path} 1/weight(x), by dynamic programming."""
    down, left = v[0] - u[0], u[1] - v[1]
    if down < 0 or left < 0:
        return Fraction(0)
    # acc[j] = sum over paths from u to (u_r + i, u_c - j) on the current row i
    acc = [Fraction(0)] * (left + 1)
    for i in range(down + 1):
        for j in range(left + 1):
            if i == 0 and j == 0:
                into = Fraction(1)
            else:
                into = acc[j] + (acc[j - 1] if j else 0)
            acc[j] = into / weight((u[0] + i, u[1] - j))
    return acc[left]


# ------------------------------------------------------------------- bar case


def bar_qr(n: int, ell: int) -> tuple[int, int]:
    """n = q (ell + 1) + r with 0 <= r <= ell."""
    return divmod(n, ell + 1)


def bar_cell(i: int, n: int) -> Cell:
    return Cell(1, n - i + 1)


@dataclass(frozen=True)
class BarTuple:
    ell: int
    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        q, r = bar_qr(self.n, self.ell)
        idx = tuple(self.indices)
        if len(idx) != q:
            raise InvalidTuple(f"n={self.n}, ell={self.ell} needs {q} indices, got {idx}")
        if q and idx[0] < r + 1:
            raise InvalidTuple(f"i_1 = {idx[0]} < r + 1 = {r + 1}")
        for x, y in zip(idx, idx[1:]):
            if y - x < self.ell + 1:
                raise InvalidTuple(f"gap {y - x} < ell + 1 in {idx}")
        object.__setattr__(self, "indices", idx)

    @property
    def q(self) -> int:
        return bar_qr(self.n, self.ell)[0]

    @property
    def r(self) -> int:
        return bar_qr(self.n, self.ell)[1]

    @classmethod
    def minimal(cls, ell: int, n: int) -> "BarTuple":
        q, r = bar_qr(n, ell)
        return cls(ell, n, tuple(k * (ell + 1) + r + 1 for k in range(q)))

    def depth(self) -> int:
        low = BarTuple.minimal(self.ell, self.n).indices
        return sum(i - j for i, j in zip(self.indices, low))

    def complement_indices(self) -> list[int]:
        out = list(range(1, self.r + 1))
        for i in self.indices:
            out.extend(range(i, i + self.ell + 1))
        return out


def psi_bar(t: BarTuple) -> CylExcitedDiagram:
    """The cylindric excited diagram of the bar whose complement is
    [c_1, c_r] together with the blocks [c_{i_k}, c_{i_k + ell}]."""
    return CylExcitedDiagram(
        tuple(bar_cell(i, t.n) for i in t.complement_indices()), t.depth()
    )


def psi_bar_inverse(D: CylExcitedDiagram, ell: int, n: int) -> BarTuple:
    idx = sorted(n - b + 1 for _, b in D.complement)
    q, r = bar_qr(n, ell)
    if idx[:r] != list(range(1, r + 1)):
        raise InvalidTuple(f"complement {D.complement} does not start with c_1..c_r")
    blocks = idx[r:]
    starts = tuple(blocks[k * (ell + 1)] for k in range(q))
    t = BarTuple(ell, n, starts)
    if t.complement_indices() != idx:
        raise InvalidTuple(f"complement {D.complement} is not a union of bar blocks")
    return t


def enumerate_bar_tuples(ell: int, n: int, bound: int) -> list[BarTuple]:
    """All tuples of E_{ell;n} with i_q <= bound, in lexicographic order."""
    q, r = bar_qr(n, ell)
    out = []

    def grow(prefix, lo, k):
        if k == q:
            out.append(BarTuple(ell, n, tuple(prefix)))
            return
        # room must remain for the q - k - 1 later indices
        top = bound - (q - k - 1) * (ell + 1)
        for i in range(lo, top + 1):
            grow(prefix + [i], i + ell + 1, k + 1)

    grow([], r + 1, 0)
    return out


def count_bar_tuples(ell: int, n: int, bound: int) -> int:
    """Stars and bars: tuples with i_q <= bound."""
    q, r = bar_qr(n, ell)
    if q == 0:
        return 1
    slack = bound - (r + 1) - (q - 1) * (ell + 1)
    return comb(slack + q, q) if slack >= 0 else 0


class BarTupleSum:
    """Running sum over tuples (i_1..i_q), i_1 >= r+1, gaps >= ell+1, of prod weight(i_k).

    ``advance(bound)`` extends the range to i_q <= bound and returns the sum so far.
    Prefix sums per tuple length keep the cost at O(q) additions per index; ``zero``
    fixes the exact numeric type of the accumulators.
    """

    def __init__(self, weight: Callable, q: int, ell: int, r: int, zero=Fraction(0)):
        self.weight, self.q, self.ell, self.r = weight, q, ell, r
        self.j = 0
        self.cur = [zero] * q
        # hist[k] holds the level-k prefix sums at indices j-ell .. j
        self.hist = [deque([zero] * (ell + 1), maxlen=ell + 1) for _ in range(q)]
        self.one = zero + 1

    def advance(self, bound: int):
        q, ell = self.q, self.ell
        if q == 0:
            return self.one
        for j in range(self.j + 1, bound + 1):
            if j >= self.r + 1:
                w = self.weight(j)
                new = [self.cur[0] + w]
                for k in range(1, q):
                    new.append(self.cur[k] + w * self.hist[k - 1][0])
                self.cur = new
            for k in range(q):
                self.hist[k].append(self.cur[k])
        self.j = max(self.j, bound)
        return self.cur[q - 1]


def bar_tuple_sum(weight: Callable, q: int, ell: int, r: int, bound: int, zero=Fraction(0)):
    """Sum over tuples with i_q <= bound of prod weight(i_k); see BarTupleSum."""
    return BarTupleSum(weight, q, ell, r, zero).advance(bound)


# ----------------------------------------------------------------- hook case


def rectangle(ell: int, m: int) -> tuple[int, ...]:
    return (ell + 1,) * m


def path_to_excited(p: LatticePath, ell: int, m: int, k: int) -> ExcitedDiagram:
    """lam \\ p for lam = ((ell+1)^m); an excited diagram of nu = (ell^{m-1}, k)."""
    if p.start != (1, ell + 1) or p.end != (m, k + 1):
        raise BadEndpoints(
            f"path runs {tuple(p.start)} -> {tuple(p.end)}, expected (1,{ell + 1}) -> ({m},{k + 1})"
        )
    lam = rectangle(ell, m)
    box = {Cell(a, b) for a in range(1, m + 1) for b in range(1, ell + 2)}
    return ExcitedDiagram(lam, frozenset(box - set(p.cells)))


def excited_to_path(D: ExcitedDiagram) -> LatticePath:
    """Inverse of path_to_excited: the complement, read as a chain."""
    cells = sorted(D.complement(), key=lambda c: (c[0], -c[1]))
    return LatticePath(tuple(cells))


def loop_decomposition(lam: GeneralizedPartition, max_shift: int) -> dict[int, list[LatticePath]]:
    """Paths in the strip from (1, lam_1 - i) to (m, lam_1 - ell - i), per shift i.

    Their projections are the non-intersecting loops inside the cylindric diagram.
    """
    m, ell = lam.m, lam.ell
    top = lam.parts[0]
    out = {}
    for i in range(max_shift + 1):
        u, v = (1, top - i), (m, top - ell - i)
        out[i] = [p for p in enumerate_paths(u, v) if all(contains_periodic(lam, c) for c in p.cells)]
    return out


def project(p: LatticePath, omega: Omega) -> tuple[Cell, ...]:
    return tuple(sorted(canonicalize(c, omega) for c in p.cells))


def cyl_arrow(u, v, omega: Omega) -> bool:
    """u -> v on the cylinder: some lifts differ by (1, 0) or (0, -1)."""
    du, dv = v[0] - u[0], v[1] - u[1]
    for step in ((1, 0), (0, -1)):
        # need (du, dv) + k omega == step for an integer k
        num = step[0] - du
        if num % omega.m == 0:
            k = num // omega.m
            if dv - k * omega.ell == step[1]:
                return True
    return False


def is_loop(cells, omega: Omega) -> bool:
    """A chain u_1 -> ... -> u_n -> u_1 of n = ell + m distinct cylinder cells, in the given order."""
    cells = [canonicalize(c, omega) for c in cells]
    n = len(cells)
    if n != omega.m + omega.ell or len(set(cells)) != n:
        return False
    return all(cyl_arrow(cells[i], cells[(i + 1) % n], omega) for i in range(n))


def hook_case_shift(D: CylExcitedDiagram, lam: GeneralizedPartition) -> int:
    """Shift index i of a hook-case state: its row-1 cells end at column lam_1 - i."""
    return lam.parts[0] - max(b for a, b in D.complement if a == 1)


def paths_for_window(lam: GeneralizedPartition, max_shift: int) -> Iterator[tuple[int, LatticePath]]:
    for i, ps in loop_decomposition(lam, max_shift).items():
        for p in ps:
            yield i, p
