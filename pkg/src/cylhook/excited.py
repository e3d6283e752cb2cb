"""Finite and cylindric excited diagrams.

A cylindric excited diagram D is infinite, but its complement in the cylindric
diagram has exactly n = |lam/mu| cells, so states are stored by that complement
(canonical cells, sorted).  An excitation at an active cell y moves one complement
cell from y + (1, 1) to y.

The quantity  row*ell + col*m  is invariant under translation by omega and drops by
ell + m on every excitation, so the number of excitations separating a state from
mu is read off its complement directly.  Every complement cell also moves weakly to
the left, hence the ancestors of a state never leave a column window the state
itself lies in; windowed enumeration is complete inside its window.
"""
from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .diagrams import (
    Cell,
    GeneralizedPartition,
    canonicalize,
    contains_periodic,
    finite_skew_cells,
    pad,
    skew_cells,
)
from .errors import NotActive, NotContained


class WindowTooSmall(UserWarning):
    """Successors of mu were cut off by the column window."""


# ---------------------------------------------------------------- finite case


@dataclass(frozen=True)
class ExcitedDiagram:
    ambient: tuple[int, ...]
    cells: frozenset

    @property
    def size(self) -> int:
        return len(self.cells)

    def complement(self) -> frozenset:
        lam = self.ambient
        return frozenset(
            (a, b) for a in range(1, len(lam) + 1) for b in range(1, lam[a - 1] + 1)
        ) - self.cells


def _in_finite(lam, cell) -> bool:
    a, b = cell
    return 1 <= a <= len(lam) and 1 <= b <= lam[a - 1]


def active_cells_finite(lam: Sequence[int], D: ExcitedDiagram) -> list[Cell]:
    lam = tuple(lam)
    out = []
    for a, b in sorted(D.cells):
        if all(
            _in_finite(lam, c) and c not in D.cells
            for c in ((a + 1, b), (a, b + 1), (a + 1, b + 1))
        ):
            out.append(Cell(a, b))
    return out


def excite_finite(lam: Sequence[int], D: ExcitedDiagram, y) -> ExcitedDiagram:
    y = Cell(*y)
    if y not in active_cells_finite(lam, D):
        raise NotActive(f"{tuple(y)} is not active in {sorted(D.cells)}")
    return ExcitedDiagram(D.ambient, D.cells - {y} | {Cell(y.row + 1, y.col + 1)})


def enumerate_excited_finite(lam: Sequence[int], mu: Sequence[int]) -> set[ExcitedDiagram]:
    lam = tuple(lam)
    finite_skew_cells(lam, mu)  # containment check
    mu = pad(mu, len(lam))
    start = ExcitedDiagram(
        lam, frozenset(Cell(a, b) for a in range(1, len(mu) + 1) for b in range(1, mu[a - 1] + 1))
    )
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for D in frontier:
            for y in active_cells_finite(lam, D):
                E = excite_finite(lam, D, y)
                if E not in seen:
                    seen.add(E)
                    nxt.append(E)
        frontier = nxt
    return seen


# -------------------------------------------------------------- cylindric case


@dataclass(frozen=True)
class CylExcitedDiagram:
    complement: tuple[Cell, ...]
    depth: int = 0

    def __post_init__(self):
        object.__setattr__(self, "complement", tuple(sorted(Cell(*c) for c in self.complement)))

    @property
    def key(self) -> tuple:
        return self.complement

    def min_col(self) -> int:
        return min(c[1] for c in self.complement)


def potential(cells, lam: GeneralizedPartition) -> int:
    m, ell = lam.m, lam.ell
    return sum(a * ell + b * m for a, b in cells)


def initial_state(lam: GeneralizedPartition, mu: GeneralizedPartition) -> CylExcitedDiagram:
    return CylExcitedDiagram(skew_cells(lam, mu).cells, 0)


def _active(lam: GeneralizedPartition, comp) -> list[Cell]:
    omega = lam.omega
    cs = set(comp)
    out = set()
    for a, b in comp:
        y = canonicalize((a - 1, b - 1), omega)
        if y in cs or not contains_periodic(lam, y):
            continue
        ya, yb = y
        if canonicalize((ya + 1, yb), omega) in cs and canonicalize((ya, yb + 1), omega) in cs:
            out.add(y)
    return sorted(out)


def _excite(lam: GeneralizedPartition, comp, y) -> tuple:
    omega = lam.omega
    y = canonicalize(y, omega)
    z = canonicalize((y[0] + 1, y[1] + 1), omega)
    return tuple(sorted([c for c in comp if c != z] + [y]))


def active_cells_cyl(
    lam: GeneralizedPartition, mu: GeneralizedPartition, D: CylExcitedDiagram
) -> list[Cell]:
    return _active(lam, D.complement)


def excite_cyl(
    lam: GeneralizedPartition, mu: GeneralizedPartition, D: CylExcitedDiagram, y
) -> CylExcitedDiagram:
    y = canonicalize(y, lam.omega)
    if y not in _active(lam, D.complement):
        raise NotActive(f"{tuple(y)} is not active for complement {D.complement}")
    return CylExcitedDiagram(_excite(lam, D.complement, y), D.depth + 1)


def _successors(lam: GeneralizedPartition, comp) -> list[tuple]:
    return [_excite(lam, comp, y) for y in _active(lam, comp)]


def _successors_batch(args):
    lam, comps = args
    return [_successors(lam, c) for c in comps]


PARALLEL_FRONTIER = 256


class CylExcitedEnumerator:
    """Incremental breadth-first enumeration of cylindric excited diagrams.

    ``extend(window)`` grows the column window and returns the states newly
    admitted; states found outside the window are parked until a later call.
    """

    def __init__(self, lam: GeneralizedPartition, mu: GeneralizedPartition, jobs: int = 1):
        self.lam, self.mu = lam, mu
        self.jobs = max(1, int(jobs))
        start = initial_state(lam, mu)
        self.n = len(start.complement)
        self.col0 = start.min_col() if self.n else 0
        self.phi0 = potential(start.complement, lam)
        self.window = None
        self.accepted: dict[tuple, int] = {}
        self.seen = {start.complement}
        self.pending = [start.complement]
        self._pool = None

    def depth_of(self, comp) -> int:
        return (self.phi0 - potential(comp, self.lam)) // (self.lam.m + self.lam.ell)

    def inside(self, comp, window) -> bool:
        return all(b >= self.col0 - window for _, b in comp)

    def extend(self, window: int) -> list[CylExcitedDiagram]:
        if self.window is not None and window < self.window:
            raise ValueError("window can only grow")
        first = self.window is None
        self.window = window
        frontier = [c for c in self.pending if self.inside(c, window)]
        self.pending = [c for c in self.pending if not self.inside(c, window)]
        new = []
        try:
            while frontier:
                frontier.sort()
                for c in frontier:
                    self.accepted[c] = self.depth_of(c)
                    new.append(c)
                nxt = []
                for succs in self._expand(frontier):
                    for s in succs:
                        if s in self.seen:
                            continue
                        self.seen.add(s)
                        if self.inside(s, window):
                            nxt.append(s)
                        else:
                            self.pending.append(s)
                frontier = nxt
        finally:
            if self._pool is not None:
                self._pool.shutdown()
                self._pool = None
        if first and self.n:
            start = min(self.accepted, key=self.depth_of)
            if any(not self.inside(s, window) for s in _successors(self.lam, start)):
                warnings.warn(
                    f"window {window} cuts off successors of mu", WindowTooSmall, stacklevel=2
                )
        return sorted(
            (CylExcitedDiagram(c, self.accepted[c]) for c in new), key=lambda d: (d.depth, d.key)
        )

    def _expand(self, frontier):
        # results come back in frontier order, so the merge does not depend on jobs
        if self.jobs == 1 or len(frontier) < PARALLEL_FRONTIER:
            return [_successors(self.lam, c) for c in frontier]
        if self._pool is None:
            self._pool = ProcessPoolExecutor(self.jobs)
        size = -(-len(frontier) // (4 * self.jobs))
        chunks = [frontier[i : i + size] for i in range(0, len(frontier), size)]
        parts = self._pool.map(_successors_batch, [(self.lam, ch) for ch in chunks])
        return [s for part in parts for s in part]

    def states(self) -> list[CylExcitedDiagram]:
        return sorted(
            (CylExcitedDiagram(c, d) for c, d in self.accepted.items()),
            key=lambda D: (D.depth, D.key),
        )

    def exhausted(self) -> bool:
        """True when nothing was ever cut off, i.e. the excited set is finite and complete."""
        return self.window is not None and not self.pending


def enumerate_excited_cyl(
    lam: GeneralizedPartition, mu: GeneralizedPartition, window: int, jobs: int = 1
) -> list[tuple[int, list[CylExcitedDiagram]]]:
    """States inside the window, grouped by excitation depth: ``[(depth, [D, ...]), ...]``."""
    if window < 0:
        raise ValueError("window must be nonnegative")
    if any(u > v for u, v in zip(mu.parts, lam.parts)) or lam.omega != mu.omega:
        raise NotContained(f"{mu} is not contained in {lam}")
    en = CylExcitedEnumerator(lam, mu, jobs)
    en.extend(window)
    strata: dict[int, list] = {}
    for D in en.states():
        strata.setdefault(D.depth, []).append(D)
    return sorted(strata.items())


def render_cyl_state(
    lam: GeneralizedPartition, D: CylExcitedDiagram, rows, cols
) -> str:
    """``o`` marks complement cells (every lift), ``#`` cells of D, ``.`` outside."""
    from .diagrams import render_window

    return render_window(lam, rows, cols, {c: "o" for c in D.complement})
