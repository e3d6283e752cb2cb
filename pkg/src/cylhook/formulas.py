"""Both sides of the skew and cylindric hook formulas, evaluated with exact rationals.

Every value here is a ``fractions.Fraction`` (or an ``int``); floating point never
enters a formula path.  Infinite sums are evaluated on growing column windows and
reported together with the window sequence, so a reader can tell an exhausted
finite sum (``ExactPass``) from a truncated one (``ConvergedWithinTol``).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from decimal import Context, Decimal
from enum import Enum
from fractions import Fraction
from math import comb, factorial, prod
from typing import Callable, Sequence

from gmpy2 import mpq

from .diagrams import (
    Cell,
    GeneralizedPartition,
    canonicalize,
    finite_skew_cells,
    hook_length_cyl,
    hook_length_finite,
    shift_partition,
    skew_cells,
    validate_partition,
)
from .errors import BadSequence, InsufficientData, NotContained, NotRepresentable
from .excited import CylExcitedEnumerator, enumerate_excited_finite
from .paths import BarTupleSum, bar_qr, count_bar_tuples, weighted_path_sum
from .tableaux import count_finite, count_restricted


class Verdict(str, Enum):
    EXACT_PASS = "ExactPass"
    CONVERGED = "ConvergedWithinTol"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"


def rational_to_json(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def decimal12(q) -> str:
    q = Fraction(q)
    ctx = Context(prec=12)
    return str(ctx.divide(Decimal(q.numerator), Decimal(q.denominator)))


@dataclass
class VerificationReport:
    kind: str
    params: dict
    lhs: Fraction
    partial_sums: list = field(default_factory=list)
    windows: list = field(default_factory=list)
    tail_estimate: Fraction | None = None
    verdict: Verdict = Verdict.INCONCLUSIVE
    states: int = 0
    values: dict = field(default_factory=dict)
    seconds: float = field(default=0.0, compare=False)

    @property
    def value(self) -> Fraction:
        return self.partial_sums[-1] if self.partial_sums else Fraction(0)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "lhs": rational_to_json(self.lhs),
            "partial_sums": [rational_to_json(g) for g in self.partial_sums],
            "windows": list(self.windows),
            "tail_estimate": None if self.tail_estimate is None else rational_to_json(self.tail_estimate),
            "tail_estimate_is_heuristic": True,
            "verdict": self.verdict.value,
            "work": {"states": self.states},
            "values": {k: rational_to_json(v) for k, v in sorted(self.values.items())},
        }

    @classmethod
    def from_json(cls, d: dict) -> "VerificationReport":
        tail = d.get("tail_estimate")
        return cls(
            kind=d["kind"],
            params=d["params"],
            lhs=rational_from_json(d["lhs"]),
            partial_sums=[rational_from_json(g) for g in d["partial_sums"]],
            windows=list(d["windows"]),
            tail_estimate=None if tail is None else rational_from_json(tail),
            verdict=Verdict(d["verdict"]),
            states=d["work"]["states"],
            values={k: rational_from_json(v) for k, v in d["values"].items()},
        )


# ------------------------------------------------------------------ Naruse


def naruse_rhs(lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """n! * sum over excited diagrams D of mu in lam of prod_{x in lam \\ D} 1/h_lam(x)."""
    lam = tuple(lam)
    n = len(finite_skew_cells(lam, mu))
    hooks = {
        (a, b): hook_length_finite(lam, (a, b))
        for a in range(1, len(lam) + 1)
        for b in range(1, lam[a - 1] + 1)
    }
    total = Fraction(0)
    for D in enumerate_excited_finite(lam, mu):
        total += Fraction(1, prod(hooks[x] for x in hooks if x not in D.cells))
    return factorial(n) * total


def naruse_check(lam: Sequence[int], mu: Sequence[int]) -> VerificationReport:
    t0 = time.perf_counter()
    cells = finite_skew_cells(lam, mu)
    f = count_finite(cells)
    rhs = naruse_rhs(lam, mu)
    return VerificationReport(
        kind="naruse",
        params={"lambda": list(lam), "mu": list(mu)},
        lhs=Fraction(f),
        partial_sums=[rhs],
        verdict=Verdict.EXACT_PASS if rhs == f else Verdict.FAIL,
        states=len(enumerate_excited_finite(lam, mu)),
        seconds=time.perf_counter() - t0,
    )


# ----------------------------------------------------------- cylindric series


def cyl_weight(lam: GeneralizedPartition, complement) -> Fraction:
    return Fraction(1, prod(hook_length_cyl(lam, x) for x in complement))


class CylSeries:
    """Windowed evaluation of g = n! * sum_D prod_{x not in D} 1/h(x).

    Bars (m = 1) are summed over the index tuples that parameterize their excited
    diagrams; everything else is enumerated breadth first.  Both routes use the same
    column-window convention, so their truncations coincide.
    """

    def __init__(self, lam: GeneralizedPartition, mu: GeneralizedPartition, jobs: int = 1, engine: str = "auto"):
        if lam.omega != mu.omega or any(u > v for u, v in zip(mu.parts, lam.parts)):
            raise NotContained(f"{mu} is not contained in {lam}")
        self.lam, self.mu = lam, mu
        self.n = sum(lam.parts) - sum(mu.parts)
        self.nfact = factorial(self.n)
        if engine == "auto":
            engine = "bar" if lam.m == 1 and self.n > 0 else "bfs"
        self.engine = engine
        self.states = 0
        if engine == "bar":
            self._init_bar()
        else:
            self.enum = CylExcitedEnumerator(lam, mu, jobs)
            self.total = Fraction(0)

    def _init_bar(self):
        self.q, self.r = bar_qr(self.n, self.lam.ell)
        self.bar = _bar_series(self.n, self.lam.ell)

    def value(self, window: int) -> Fraction:
        if self.engine == "bar":
            bound = max(self.n + window - self.lam.ell, 0)
            self.states = count_bar_tuples(self.lam.ell, self.n, bound) if self.q else 1
            return self.bar.value(bound)
        for D in self.enum.extend(window):
            self.total += cyl_weight(self.lam, D.complement)
        self.states = len(self.enum.accepted)
        return self.nfact * self.total

    def exhausted(self) -> bool:
        if self.engine == "bar":
            return self.q == 0
        return self.enum.exhausted()


class _BarSeries:
    """g for lam = (n), mu = (0) as a function of the bound on i_q.

    Every bar shape (m = 1) is a translate of this one, and translation carries
    excited diagrams and hook lengths along, so all of them share one series.
    """

    def __init__(self, n: int, ell: int):
        bar = validate_partition((n,), 1, ell)
        self.n, self.ell = n, ell
        self.q, self.r = bar_qr(n, ell)
        self.h = lambda i: hook_length_cyl(bar, (1, n - i + 1))
        self.prefix = factorial(n) * mpq(1, prod(self.h(i) for i in range(1, self.r + 1)))
        self.cache: dict[int, Fraction] = {}
        self.sum = self._fresh()

    def _fresh(self) -> BarTupleSum:
        ell, h = self.ell, self.h

        def weight(i):
            return mpq(1, prod(h(i + u) for u in range(ell + 1)))

        return BarTupleSum(weight, self.q, ell, self.r, zero=mpq(0))

    def value(self, bound: int) -> Fraction:
        if bound not in self.cache:
            acc = self.sum if bound >= self.sum.j else self._fresh()
            g = self.prefix * acc.advance(bound)
            self.cache[bound] = Fraction(int(g.numerator), int(g.denominator))
        return self.cache[bound]


_BAR_SERIES: dict[tuple[int, int], _BarSeries] = {}


def _bar_series(n: int, ell: int) -> _BarSeries:
    if (n, ell) not in _BAR_SERIES:
        _BAR_SERIES[(n, ell)] = _BarSeries(n, ell)
    return _BAR_SERIES[(n, ell)]


def window_schedule(window: int, start: int = 1) -> list[int]:
    out, w = [], max(1, start)
    while w < window:
        out.append(w)
        w *= 2
    out.append(window)
    return out


def cyl_partial_sum(
    lam: GeneralizedPartition, mu: GeneralizedPartition, window: int, jobs: int = 1
) -> VerificationReport:
    """Partial sums of the cylindric series over one window, cumulative by depth."""
    t0 = time.perf_counter()
    f = count_restricted(lam, mu)
    en = CylExcitedEnumerator(lam, mu, jobs)
    states = en.extend(window)
    n = en.n
    sums, acc, depths = [], Fraction(0), []
    for D in states:
        if depths and depths[-1] == D.depth:
            acc += cyl_weight(lam, D.complement)
            sums[-1] = factorial(n) * acc
        else:
            acc += cyl_weight(lam, D.complement)
            depths.append(D.depth)
            sums.append(factorial(n) * acc)
    g = sums[-1]
    if g > f:
        verdict = Verdict.FAIL
    elif en.exhausted():
        verdict = Verdict.EXACT_PASS if g == f else Verdict.FAIL
    else:
        verdict = Verdict.INCONCLUSIVE
    return VerificationReport(
        kind="cyl-partial-sum",
        params=_shape_params(lam, mu) | {"window": window},
        lhs=Fraction(f),
        partial_sums=sums,
        windows=[window] * len(sums),
        verdict=verdict,
        states=len(states),
        values={"depths": Fraction(len(depths))},
        seconds=time.perf_counter() - t0,
    )


def _shape_params(lam, mu) -> dict:
    return {"lambda": list(lam.parts), "mu": list(mu.parts), "m": lam.m, "ell": lam.ell}


TAIL_RATIO_CAP = Fraction(1023, 1024)


def cyl_tail_estimate(strata: Sequence) -> Fraction:
    """Geometric extrapolation of the remaining sum from the last two strata.

    ``strata`` are the amounts added by consecutive windows.  With r the ratio of
    the last two (clamped to [0, 1)) the estimate is last * r / (1 - r).  This is a
    heuristic and never certifies anything.
    """
    if len(strata) < 2:
        raise InsufficientData("need at least two strata for a tail estimate")
    last, prev = Fraction(strata[-1]), Fraction(strata[-2])
    if prev <= 0:
        raise InsufficientData("previous stratum sum is not positive")
    r = min(max(last / prev, Fraction(0)), TAIL_RATIO_CAP)
    return last * r / (1 - r)


def increments(partial_sums: Sequence) -> list[Fraction]:
    out, prev = [], Fraction(0)
    for g in partial_sums:
        out.append(g - prev)
        prev = g
    return out


def verify_conjecture(
    lam: GeneralizedPartition,
    mu: GeneralizedPartition,
    window: int,
    tol,
    jobs: int = 1,
    start: int = 1,
    engine: str = "auto",
) -> VerificationReport:
    """Grow the window (doubling, capped at ``window``) until f - g <= tol.

    Verdicts: ExactPass when the excited set was exhausted and g = f; Fail when
    some g exceeds f (positive summands make g increasing) or an exhausted sum
    misses f; ConvergedWithinTol when 0 <= f - g <= tol; otherwise Inconclusive.
    """
    t0 = time.perf_counter()
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    f = Fraction(count_restricted(lam, mu))
    series = CylSeries(lam, mu, jobs, engine)
    sums, windows = [], []
    verdict = Verdict.INCONCLUSIVE
    for w in window_schedule(window, start):
        g = series.value(w)
        sums.append(g)
        windows.append(w)
        if g > f:
            verdict = Verdict.FAIL
            break
        if series.exhausted():
            verdict = Verdict.EXACT_PASS if g == f else Verdict.FAIL
            break
        if f - g <= tol:
            verdict = Verdict.CONVERGED
            break
    strata = increments(sums)
    tail = None
    if len(strata) >= 2 and verdict is not Verdict.EXACT_PASS:
        try:
            tail = cyl_tail_estimate(strata)
        except InsufficientData:
            tail = None
    return VerificationReport(
        kind="verify-cyl",
        params=_shape_params(lam, mu) | {"window": window, "tol": rational_to_json(tol), "engine": series.engine},
        lhs=f,
        partial_sums=sums,
        windows=windows,
        tail_estimate=tail,
        verdict=verdict,
        states=series.states,
        seconds=time.perf_counter() - t0,
    )


# ----------------------------------------------------------- shift invariance


def shift_invariance_check(
    lam: GeneralizedPartition, mu: GeneralizedPartition, u, window: int = 6
) -> bool:
    """Compare the presentation shifted by u with the original.

    f must agree exactly.  For g, translation by u must carry the windowed excited
    diagrams of one presentation onto excited diagrams of the other (with a window
    slack covering the column displacement), preserving every summand.
    """
    try:
        lam2, mu2 = shift_partition(lam, u), shift_partition(mu, u)
    except ValueError as exc:
        raise NotRepresentable(str(exc)) from exc
    if count_restricted(lam, mu) != count_restricted(lam2, mu2):
        return False
    p, q = u
    slack = abs(q) + (abs(p) // lam.m + 1) * lam.ell

    def translate(comp, v):
        return tuple(sorted(canonicalize((a + v[0], b + v[1]), lam.omega) for a, b in comp))

    for (A, B, LA, LB, v) in ((lam, mu, lam2, mu2, (p, q)), (lam2, mu2, lam, mu, (-p, -q))):
        small = CylExcitedEnumerator(A, B)
        small.extend(window)
        big = CylExcitedEnumerator(LA, LB)
        big.extend(window + slack)
        for comp in small.accepted:
            image = translate(comp, v)
            if image not in big.accepted:
                return False
            if cyl_weight(A, comp) != cyl_weight(LA, image):
                return False
    return True


# --------------------------------------------------------------- bar case


def tagawa_identity_check(
    ell: int, c: int, q: int, r: int, a: Callable, trunc: int, samples: int = 20
) -> dict:
    """Truncated left side of the telescoping identity against its closed right side.

    Returns a dict with ``lhs`` (tuples with i_q <= trunc), ``rhs``, ``gap`` (rhs - lhs)
    and ``telescoping_ok``: the one-step identity checked exactly for j, t <= samples.
    """
    top = max(trunc + ell + 1, r + ell * q + 1, samples + ell * samples + 1)
    vals = {i: Fraction(a(i)) for i in range(1, top + 1)}
    for i in range(1, top + 1):
        if vals[i] == 0:
            raise BadSequence(f"a_{i} = 0")
        if i + ell <= top and vals[i + ell] - vals[i] != c:
            raise BadSequence(f"a_{i + ell} - a_{i} = {vals[i + ell] - vals[i]} != {c}")

    def A(i):
        if i not in vals:
            vals[i] = Fraction(a(i))
        return vals[i]

    def run(j, length):
        return prod((A(j + u) for u in range(length)), start=Fraction(1))

    lhs = BarTupleSum(lambda i: 1 / run(i, ell + 1), q, ell, r).advance(trunc)
    rhs = 1 / (factorial(q) * Fraction(c) ** q * run(r + 1, ell * q))
    tele = all(
        1 / run(j, ell * t) - 1 / run(j + 1, ell * t) == c * t / run(j, ell * t + 1)
        for j in range(1, samples + 1)
        for t in range(1, samples + 1)
    )
    out = {"lhs": lhs, "rhs": rhs, "gap": rhs - lhs, "telescoping_ok": tele}
    if q == 1:
        out["lhs_closed"] = (1 / run(r + 1, ell) - 1 / run(trunc + 1, ell)) / c if trunc >= r + 1 else Fraction(0)
    return out


def bar_hooks(n: int, ell: int, count: int) -> list[int]:
    """h_1..h_count for the bar (n) of period (1, -ell), read off the diagram."""
    bar = validate_partition((n,), 1, ell)
    return [hook_length_cyl(bar, (1, n - i + 1)) for i in range(1, count + 1)]


def bar_formula_check(n: int, ell: int, window: int = 200) -> VerificationReport:
    """f = 1; the integer identity q!(ell+1)^q h_1...h_{q ell + r} = n!; truncated g -> 1."""
    t0 = time.perf_counter()
    lam, mu = validate_partition((n,), 1, ell), validate_partition((0,), 1, ell)
    f = count_restricted(lam, mu)
    q, r = bar_qr(n, ell)
    h = bar_hooks(n, ell, q * ell + r)
    denominator = factorial(q) * (ell + 1) ** q * prod(h)
    identity_ok = denominator == factorial(n)
    # g through the telescoping identity with a_i = h_i, c = ell + 1
    closed_g = Fraction(factorial(n), denominator)
    series = CylSeries(lam, mu)
    sums, windows = [], []
    for w in window_schedule(window):
        sums.append(series.value(w))
        windows.append(w)
    ok = f == 1 and identity_ok and closed_g == 1 and all(g <= 1 for g in sums)
    return VerificationReport(
        kind="bar",
        params={"n": n, "ell": ell, "q": q, "r": r, "window": window},
        lhs=Fraction(f),
        partial_sums=sums,
        windows=windows,
        tail_estimate=_maybe_tail(sums),
        verdict=(Verdict.EXACT_PASS if series.exhausted() else Verdict.CONVERGED) if ok else Verdict.FAIL,
        states=series.states,
        values={
            "n_factorial_over_g": Fraction(denominator),
            "n_factorial": Fraction(factorial(n)),
            "g_closed": closed_g,
            "gap_at_window": 1 - sums[-1],
        },
        seconds=time.perf_counter() - t0,
    )


def _maybe_tail(sums):
    try:
        return cyl_tail_estimate(increments(sums))
    except InsufficientData:
        return None


# -------------------------------------------------------------- hook case


def h_ml(x, m: int, ell: int) -> int:
    a, b = x
    return ell + m - a - b + 2


def decompose(x, m: int, ell: int) -> tuple[int, int, int, int]:
    """(a, b, c, d) with x = (a + c m, b - d ell), 1 <= a <= m, 2 <= b <= ell + 1."""
    X, Y = x
    a = (X - 1) % m + 1
    b = (Y - 2) % ell + 2
    return a, b, (X - a) // m, (b - Y) // ell


def h_st(x, m: int, ell: int, s: int, t: int) -> int:
    a, b, c, d = decompose(x, m, ell)
    return ell + m - a - b + (d - c) * t + s + 1


def f_lms_closed(ell: int, m: int, s: int) -> Fraction:
    return Fraction(factorial(s - 1), factorial(ell + m + s - 2)) * comb(ell + m - 2, m - 1)


def f_lms_sum(ell: int, m: int, s: int) -> Fraction:
    return weighted_path_sum((1, ell + 1), (m, 2), lambda x: h_ml(x, m, ell) + s - 1)


def f_lms(ell: int, m: int, s: int) -> tuple[Fraction, Fraction, bool]:
    total, closed = f_lms_sum(ell, m, s), f_lms_closed(ell, m, s)
    return total, closed, total == closed


def f_lmst_closed(ell: int, m: int, s: int, t: int) -> Fraction:
    return Fraction(factorial(s - 1), factorial(ell + m + s - 2) * t) * comb(ell + m - 2, m - 1)


def f_lmst_stratum(ell: int, m: int, s: int, t: int, i: int) -> Fraction:
    """Paths from (1, ell+1-i) to (m, 1-i) weighted by the shifted cylindric hooks."""
    if m == 0:
        return Fraction(0)
    return weighted_path_sum((1, ell + 1 - i), (m, 1 - i), lambda x: h_st(x, m, ell, s, t))


def f_lmst_boundary(ell: int, m: int, s: int, t: int, i: int) -> Fraction:
    """A_i: paths from (1, ell+1-i) to (m, 2-i), the telescoping remainder."""
    return weighted_path_sum((1, ell + 1 - i), (m, 2 - i), lambda x: h_st(x, m, ell, s, t))


def f_lmst_truncated(ell: int, m: int, s: int, t: int, trunc_i: int) -> Fraction:
    return sum((f_lmst_stratum(ell, m, s, t, i) for i in range(trunc_i + 1)), Fraction(0))


@dataclass
class FlmstResult:
    truncated_sum: Fraction
    closed_form: Fraction
    recurrence_ok: bool
    strata: list
    boundary: Fraction
    tail_estimate: Fraction | None

    @property
    def gap(self) -> Fraction:
        return self.closed_form - self.truncated_sum


def f_lmst(ell: int, m: int, s: int, t: int, trunc_i: int) -> FlmstResult:
    """Truncated double sum over shifts i <= trunc_i, the closed form, and the
    recurrence in its exact truncated form:

        (t - m + 1) F_N(l,m;s,t) = F(l,m;s) - A_{N+1} + F_N(l,m-1;s+1,t) - F_N(l,m-1;s,t)
    """
    strata = [f_lmst_stratum(ell, m, s, t, i) for i in range(trunc_i + 1)]
    total = sum(strata, Fraction(0))
    boundary = f_lmst_boundary(ell, m, s, t, trunc_i + 1)
    lower = Fraction(0)
    if m > 1:
        lower = f_lmst_truncated(ell, m - 1, s + 1, t, trunc_i) - f_lmst_truncated(ell, m - 1, s, t, trunc_i)
    recurrence_ok = (t - m + 1) * total == f_lms_sum(ell, m, s) - boundary + lower
    checkpoints = sorted({trunc_i >> k for k in range(trunc_i.bit_length() + 1)})
    partial = [sum(strata[: c + 1], Fraction(0)) for c in checkpoints]
    return FlmstResult(total, f_lmst_closed(ell, m, s, t), recurrence_ok, strata, boundary, _maybe_tail(partial))


def hook_shapes(ell: int, m: int) -> tuple[GeneralizedPartition, GeneralizedPartition]:
    lam = validate_partition((ell + 1,) * m, m, ell)
    mu = validate_partition((ell,) * (m - 1) + (0,), m, ell)
    return lam, mu


def hook_formula_check(ell: int, m: int, window: int = 8, jobs: int = 1) -> VerificationReport:
    """f by tableaux, n! F_(l,m;1,l+m) in closed form, and windowed g from excited diagrams."""
    t0 = time.perf_counter()
    lam, mu = hook_shapes(ell, m)
    n = ell + m
    target = comb(ell + m - 2, m - 1)
    f = count_restricted(lam, mu)
    closed = factorial(n) * f_lmst_closed(ell, m, 1, ell + m)
    series = CylSeries(lam, mu, jobs, engine="bfs")
    sums, windows = [], []
    for w in window_schedule(window):
        sums.append(series.value(w))
        windows.append(w)
    monotone = all(x < y for x, y in zip(sums, sums[1:])) and all(g <= target for g in sums)
    ok = f == target and closed == target and monotone
    return VerificationReport(
        kind="hook",
        params={"ell": ell, "m": m, "window": window},
        lhs=Fraction(f),
        partial_sums=sums,
        windows=windows,
        tail_estimate=_maybe_tail(sums),
        verdict=Verdict.CONVERGED if ok else Verdict.FAIL,
        states=series.states,
        values={"binomial": Fraction(target), "n_factorial_times_F_closed": closed},
        seconds=time.perf_counter() - t0,
    )
