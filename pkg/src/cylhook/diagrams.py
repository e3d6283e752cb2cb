"""Diagram geometry: generalized partitions, periodic and cylindric diagrams, hooks.

Coordinates are ``(row, col)`` with rows growing downward and columns growing to
the right.  A generalized partition ``lam = (l_1, ..., l_m)`` of period
``omega = (m, -ell)`` describes the semi-infinite strip

    {(a, b) : 1 <= a <= m, b <= l_a}

and its periodic closure under translation by ``omega``.  Cylinder cells are
stored by their translate with ``1 <= row <= m`` (the strip embedding).

The periodic diagram is closed *downward* for the componentwise order on Z^2
(if (a, b) is a cell, so are (a-1, b) and (a, b-1)).  Hooks run to the right
and downward from a cell, which is why they are finite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BadLength,
    CellNotInDiagram,
    NotContained,
    NotRestricted,
    NotWeaklyDecreasing,
)


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Omega:
    """Period vector ``(m, -ell)``."""

    m: int
    ell: int

    def __post_init__(self):
        if self.m < 1 or self.ell < 1:
            raise ValueError(f"need m >= 1 and ell >= 1, got m={self.m}, ell={self.ell}")

    @property
    def vector(self) -> tuple[int, int]:
        return (self.m, -self.ell)


@dataclass(frozen=True)
class GeneralizedPartition:
    """An ell-restricted generalized partition of length m (parts may be negative)."""

    parts: tuple[int, ...]
    omega: Omega

    @property
    def m(self) -> int:
        return self.omega.m

    @property
    def ell(self) -> int:
        return self.omega.ell

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, a: int) -> int:
        """1-based part access, matching the row index of the strip."""
        return self.parts[a - 1]

    def __contains__(self, cell) -> bool:
        return contains_periodic(self, cell)

    def __str__(self):
        return f"({','.join(map(str, self.parts))})_{{m={self.m},ell={self.ell}}}"


@dataclass(frozen=True)
class SkewShape:
    outer: GeneralizedPartition
    inner: GeneralizedPartition
    cells: tuple[Cell, ...] = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def omega(self) -> Omega:
        return self.outer.omega


def validate_partition(parts: Sequence[int], m: int, ell: int) -> GeneralizedPartition:
    parts = tuple(int(p) for p in parts)
    omega = Omega(m, ell)
    if len(parts) != m:
        raise BadLength(f"expected {m} parts, got {len(parts)}: {parts}")
    for a in range(m - 1):
        if parts[a] < parts[a + 1]:
            raise NotWeaklyDecreasing(f"parts must be weakly decreasing: {parts}")
    if parts[0] - parts[-1] > ell:
        raise NotRestricted(
            f"{parts} is not {ell}-restricted: {parts[0]} - {parts[-1]} > {ell}"
        )
    return GeneralizedPartition(parts, omega)


def canonicalize(cell, omega: Omega) -> Cell:
    """Translate ``cell`` by a multiple of omega so that its row lies in [1, m]."""
    a, b = cell
    k = (a - 1) // omega.m
    return Cell(a - k * omega.m, b + k * omega.ell)


def contains_periodic(lam: GeneralizedPartition, cell) -> bool:
    a, b = cell
    m = lam.omega.m
    k = (a - 1) // m
    return b + k * lam.omega.ell <= lam.parts[a - k * m - 1]


def poset_leq_cyl(x, y, omega: Omega) -> bool:
    """Induced order on the cylinder: some lifts satisfy x~ <= y~ componentwise.

    Lifting y by k*omega gives (y_r + k m, y_c - k ell); the admissible shifts form
    the integer interval [ceil((x_r - y_r)/m), floor((y_c - x_c)/ell)].
    """
    k_lo = -((y[0] - x[0]) // omega.m)
    k_hi = (y[1] - x[1]) // omega.ell
    return k_lo <= k_hi


def hook_cells_periodic(lam: GeneralizedPartition, x) -> set[Cell]:
    """The hook of ``x`` in the periodic diagram, by walking the leg and the arm."""
    if not contains_periodic(lam, x):
        raise CellNotInDiagram(f"{tuple(x)} is not a cell of {lam}")
    a, b = x
    cells = set()
    k = 0
    while contains_periodic(lam, (a + k, b)):
        cells.add(Cell(a + k, b))
        k += 1
    k = 1
    while contains_periodic(lam, (a, b + k)):
        cells.add(Cell(a, b + k))
        k += 1
    return cells


def hook_length_periodic(lam: GeneralizedPartition, x) -> int:
    """Size of the periodic hook, counted per row residue instead of walked."""
    if not contains_periodic(lam, x):
        raise CellNotInDiagram(f"{tuple(x)} is not a cell of {lam}")
    a, b = x
    m, ell = lam.omega.m, lam.omega.ell
    j0 = (a - 1) // m
    arm = lam.parts[a - j0 * m - 1] - j0 * ell - b
    leg = 0
    # rows R = r + j m with R >= a lie in the diagram iff b + j ell <= lam_r
    for r in range(1, m + 1):
        j_min = -((r - a) // m)
        j_max = (lam.parts[r - 1] - b) // ell
        if j_max >= j_min:
            leg += j_max - j_min + 1
    return arm + leg


def hook_length_cyl(lam: GeneralizedPartition, x) -> int:
    """Hook length of a cylinder cell; any lift gives the same value."""
    return hook_length_periodic(lam, x)


def hook_length_finite(parts: Sequence[int], x) -> int:
    """Classical hook length of ``x`` in the finite Young diagram of ``parts``."""
    a, b = x
    if not (1 <= a <= len(parts) and 1 <= b <= parts[a - 1]):
        raise CellNotInDiagram(f"{tuple(x)} is not a cell of {tuple(parts)}")
    leg = sum(1 for r in range(a + 1, len(parts) + 1) if parts[r - 1] >= b)
    return parts[a - 1] - b + leg + 1


def skew_cells(lam: GeneralizedPartition, mu: GeneralizedPartition) -> SkewShape:
    if lam.omega != mu.omega:
        raise NotContained(f"{lam} and {mu} have different periods")
    if any(u > v for u, v in zip(mu.parts, lam.parts)):
        raise NotContained(f"{mu.parts} is not contained in {lam.parts}")
    cells = tuple(
        Cell(a, b)
        for a in range(1, lam.m + 1)
        for b in range(mu.parts[a - 1] + 1, lam.parts[a - 1] + 1)
    )
    return SkewShape(lam, mu, cells)


def finite_skew_cells(lam: Sequence[int], mu: Sequence[int]) -> tuple[Cell, ...]:
    """Cells of lam/mu for ordinary partitions (mu padded with zeros)."""
    mu = pad(mu, len(lam))
    if len(mu) > len(lam) or any(u > v for u, v in zip(mu, lam)):
        raise NotContained(f"{tuple(mu)} is not contained in {tuple(lam)}")
    return tuple(
        Cell(a, b) for a in range(1, len(lam) + 1) for b in range(mu[a - 1] + 1, lam[a - 1] + 1)
    )


def pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    parts = tuple(parts)
    if len(parts) > length:
        if any(parts[length:]):
            raise NotContained(f"{parts} has more than {length} nonzero parts")
        return parts[:length]
    return parts + (0,) * (length - len(parts))


def shift_partition(lam: GeneralizedPartition, u) -> GeneralizedPartition:
    """The generalized partition whose periodic diagram is ``lam``'s translated by u."""
    p, q = u
    m, ell = lam.m, lam.ell
    parts = []
    for a in range(1, m + 1):
        r = a - p
        k = (r - 1) // m
        parts.append(lam.parts[r - k * m - 1] - k * ell + q)
    return validate_partition(parts, m, ell)


def render_window(
    lam: GeneralizedPartition,
    rows: Iterable[int],
    cols: Iterable[int],
    marks: dict | None = None,
) -> str:
    """ASCII picture of a finite window: ``#`` cell, ``.`` non-cell.

    ``marks`` maps cells to single characters drawn instead of ``#``.  The keys are
    compared after canonicalization, so marking a cylinder cell marks every lift.
    """
    rows, cols = list(rows), list(cols)
    marks = {canonicalize(c, lam.omega): ch for c, ch in (marks or {}).items()}
    lines = []
    for a in rows:
        line = []
        for b in cols:
            if not contains_periodic(lam, (a, b)):
                line.append(".")
            else:
                line.append(marks.get(canonicalize((a, b), lam.omega), "#"))
        lines.append("".join(line))
    return "\n".join(lines)
