from fractions import Fraction
from math import comb, factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylhook import formulas
from cylhook.diagrams import hook_length_cyl, shift_partition, validate_partition
from cylhook.errors import BadSequence, InsufficientData, NotContained
from cylhook.formulas import (
    Verdict,
    VerificationReport,
    bar_formula_check,
    cyl_partial_sum,
    cyl_tail_estimate,
    decimal12,
    decompose,
    f_lms,
    f_lmst,
    f_lmst_closed,
    f_lmst_stratum,
    h_ml,
    h_st,
    hook_formula_check,
    increments,
    naruse_check,
    naruse_rhs,
    shift_invariance_check,
    tagawa_identity_check,
    verify_conjecture,
    window_schedule,
)

from _shapes import cyl_pairs


def bar(n, ell):
    return validate_partition((n,), 1, ell), validate_partition((0,), 1, ell)


# ------------------------------------------------------------------ Naruse


def test_naruse_examples():
    assert naruse_rhs((2, 2), (1, 0)) == 2
    assert naruse_rhs((1,), ()) == 1
    assert naruse_rhs((2, 1), (2, 1)) == 1
    assert naruse_rhs((3, 2, 1), ()) == 16
    with pytest.raises(NotContained):
        naruse_rhs((1,), (2,))
    rep = naruse_check((3, 3, 1), (1,))
    assert rep.verdict is Verdict.EXACT_PASS and rep.lhs == rep.value


# --------------------------------------------------------- cylindric series


def test_partial_sum_bar_example():
    rep = cyl_partial_sum(*bar(2, 1), 20)
    assert rep.partial_sums == [1 - Fraction(1, 2 * K + 1) for K in range(1, 22)]
    assert rep.verdict is Verdict.INCONCLUSIVE and rep.lhs == 1


def test_partial_sum_empty_shape():
    lam = validate_partition((2, 1), 2, 1)
    rep = cyl_partial_sum(lam, lam, 3)
    assert rep.partial_sums == [1] and rep.lhs == 1 and rep.verdict is Verdict.EXACT_PASS


def test_partial_sums_increase_and_stay_below_f():
    for lam, mu in cyl_pairs(m_max=3, ell_max=3, lam_max=4, n_max=4):
        rep = cyl_partial_sum(lam, mu, 6)
        assert all(x < y for x, y in zip(rep.partial_sums, rep.partial_sums[1:]))
        assert rep.partial_sums[-1] <= rep.lhs


def test_large_ell_is_exact():
    for lam, mu in cyl_pairs(m_max=3, ell_max=4, lam_max=3, n_max=5):
        if lam.ell >= lam.parts[0]:
            rep = verify_conjecture(lam, mu, 64, Fraction(1, 10**9))
            assert rep.verdict is Verdict.EXACT_PASS
            assert rep.value == naruse_rhs(lam.parts, mu.parts)


def test_window_schedule():
    assert window_schedule(40) == [1, 2, 4, 8, 16, 32, 40]
    assert window_schedule(1) == [1]
    assert window_schedule(64, start=8) == [8, 16, 32, 64]


def test_bar_engine_agrees_with_bfs():
    for n in range(1, 6):
        for ell in range(1, 4):
            for lo in (0, -2, 3):
                lam = validate_partition((n + lo,), 1, ell)
                mu = validate_partition((lo,), 1, ell)
                a = verify_conjecture(lam, mu, 24, Fraction(1, 10**12), engine="bar")
                b = verify_conjecture(lam, mu, 24, Fraction(1, 10**12), engine="bfs")
                assert a.partial_sums == b.partial_sums and a.verdict == b.verdict


# ------------------------------------------------------------ tail estimate


def test_tail_estimate_geometric_exact():
    s = Fraction(1, 3)
    strata = [s**k for k in range(6)]
    assert cyl_tail_estimate(strata) == s**6 / (1 - s)


def test_tail_estimate_needs_two_strata():
    with pytest.raises(InsufficientData):
        cyl_tail_estimate([Fraction(1, 2)])
    with pytest.raises(InsufficientData):
        cyl_tail_estimate([Fraction(0), Fraction(1, 2)])


def test_tail_estimate_clamps_growing_ratio():
    est = cyl_tail_estimate([Fraction(1), Fraction(2)])
    assert est == 2 * formulas.TAIL_RATIO_CAP / (1 - formulas.TAIL_RATIO_CAP)


def test_tail_estimate_on_bar_series():
    # strata from doubling windows bound the true tail 1/(2B+3) from above from B = 4 on
    windows = [2**k for k in range(12)]
    g = [1 - Fraction(1, 2 * w + 3) for w in windows]
    inc = increments(g)
    for K in range(3, len(windows) + 1):
        assert cyl_tail_estimate(inc[:K]) >= 1 - g[K - 1]
    # one term per depth is too optimistic for a polynomially decaying tail
    g = [1 - Fraction(1, 2 * K + 1) for K in range(1, 30)]
    inc = increments(g)
    assert all(cyl_tail_estimate(inc[:K]) < Fraction(1, 2 * K + 1) for K in range(2, 30))


# ----------------------------------------------------------- verify_conjecture


def test_verify_bar_converges():
    rep = verify_conjecture(*bar(3, 2), 1 << 12, Fraction(1, 10**6))
    assert rep.lhs == 1 and rep.verdict is Verdict.CONVERGED
    assert 0 <= 1 - rep.value <= Fraction(1, 10**6)


def test_verify_inconclusive_when_window_runs_out():
    rep = verify_conjecture(*bar(2, 1), 40, Fraction(1, 10**9))
    assert rep.verdict is Verdict.INCONCLUSIVE and rep.value == 1 - Fraction(1, 83)
    # the gap at window 40 is 1/83, just above 1/100
    rep = verify_conjecture(*bar(2, 1), 40, Fraction(1, 100))
    assert rep.verdict is Verdict.INCONCLUSIVE
    rep = verify_conjecture(*bar(2, 1), 40, Fraction(1, 83))
    assert rep.verdict is Verdict.CONVERGED


def test_verify_reports_fail_when_g_exceeds_f(monkeypatch):
    monkeypatch.setattr(formulas, "count_restricted", lambda lam, mu: 0)
    rep = verify_conjecture(validate_partition((2, 1), 2, 1), validate_partition((0, 0), 2, 1), 8, Fraction(1, 10))
    assert rep.verdict is Verdict.FAIL


def test_verify_rejects_nonpositive_tol():
    with pytest.raises(ValueError):
        verify_conjecture(*bar(2, 1), 8, 0)


@given(
    st.lists(st.fractions(min_value=0, max_value=10), min_size=1, max_size=5),
    st.sampled_from(list(Verdict)),
    st.integers(0, 10**6),
)
def test_report_json_round_trip(sums, verdict, states):
    rep = VerificationReport(
        kind="verify-cyl",
        params={"lambda": [2], "mu": [0]},
        lhs=Fraction(1),
        partial_sums=sorted(sums),
        windows=list(range(len(sums))),
        tail_estimate=sums[0] if len(sums) > 1 else None,
        verdict=verdict,
        states=states,
        values={"x": Fraction(-3, 7)},
        seconds=1.5,
    )
    back = VerificationReport.from_json(rep.to_json())
    assert back == rep


def test_decimal12():
    assert decimal12(Fraction(1, 3)) == "0.333333333333"
    assert decimal12(Fraction(2)) == "2"
    assert decimal12(Fraction(-1, 7)) == "-0.142857142857"


# ------------------------------------------------------------ shift invariance


def test_shift_invariance():
    lam, mu = validate_partition((3, 2), 2, 2), validate_partition((1, 0), 2, 2)
    assert shift_partition(lam, lam.omega.vector) == lam
    assert shift_invariance_check(lam, mu, lam.omega.vector)
    assert shift_invariance_check(lam, mu, (1, 0))
    assert shift_invariance_check(lam, mu, (-3, 2))
    assert shift_invariance_check(*bar(4, 2), (0, 1))


def test_shift_to_hook_presentation():
    for ell in range(1, 4):
        for m in range(1, 4):
            lam = validate_partition((ell + 1,) * m, m, ell)
            mu = validate_partition((ell,) * (m - 1) + (0,), m, ell)
            u = (1 - m, 0)
            assert shift_partition(lam, u).parts == (ell + 1,) + (1,) * (m - 1)
            assert shift_partition(mu, u).parts == (0,) * m
            assert shift_invariance_check(lam, mu, u, window=4)


# ------------------------------------------------------------------ bar case


def test_tagawa_series_example():
    out = tagawa_identity_check(1, 2, 1, 0, lambda i: 2 * i - 1, trunc=50)
    assert out["rhs"] == Fraction(1, 2)
    assert out["lhs"] == out["lhs_closed"] == Fraction(1, 2) - Fraction(1, 2 * 101)
    assert out["telescoping_ok"]


def test_tagawa_with_bar_hooks():
    for n in range(1, 9):
        for ell in range(1, 5):
            lam, _ = bar(n, ell)
            q, r = divmod(n, ell + 1)
            h = lambda i: hook_length_cyl(lam, (1, n - i + 1))  # noqa: E731
            out = tagawa_identity_check(ell, ell + 1, q, r, h, trunc=40)
            assert out["telescoping_ok"] and 0 <= out["gap"]
            # the bar theorem: g = n! / (h_1 ... h_r) * rhs = 1
            assert factorial(n) * out["rhs"] == prod(h(i) for i in range(1, r + 1))
            if q == 1:
                N = 40
                closed = (
                    Fraction(1, prod(h(r + 1 + u) for u in range(ell)))
                    - Fraction(1, prod(h(N + 1 + u) for u in range(ell)))
                ) / (ell + 1)
                assert out["lhs"] == closed
            if q == 0:
                assert out["lhs"] == 1 and out["rhs"] == 1


def test_tagawa_rejects_bad_sequences():
    with pytest.raises(BadSequence):
        tagawa_identity_check(1, 2, 1, 0, lambda i: i, trunc=10)
    with pytest.raises(BadSequence):
        tagawa_identity_check(1, 2, 1, 0, lambda i: 2 * i - 4, trunc=10)


def test_bar_formula_examples():
    rep = bar_formula_check(2, 1, 40)
    assert rep.values["n_factorial_over_g"] == 2 and rep.lhs == 1
    assert rep.partial_sums[-1] == 1 - Fraction(1, 2 * 40 + 3)
    rep = bar_formula_check(3, 4)
    assert rep.verdict is Verdict.EXACT_PASS and rep.partial_sums[-1] == 1
    rep = bar_formula_check(1, 1)
    assert rep.verdict is Verdict.EXACT_PASS and rep.lhs == 1


# ----------------------------------------------------------------- hook case


def test_h_ml():
    for ell in range(1, 6):
        for m in range(1, 6):
            assert h_ml((1, ell + 1), m, ell) == m
            assert h_ml((m, 1), m, ell) == ell + 1
            for a in range(1, m + 1):
                for b in range(1, ell + 2):
                    classical = (ell + 1 - b) + (m - a) + 1
                    assert h_ml((a, b), m, ell) == classical


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(1, 5), st.integers(1, 5))
def test_decompose_is_unique_and_valid(x, y, m, ell):
    a, b, c, d = decompose((x, y), m, ell)
    assert 1 <= a <= m and 2 <= b <= ell + 1
    assert (a + c * m, b - d * ell) == (x, y)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5), st.integers(1, 6), st.integers(-10, 10), st.integers(-20, 20))
def test_h_st_properties(m, ell, s, t, x, y):
    a, b, c, d = decompose((x, y), m, ell)
    # one full period moves c and d together
    assert h_st((x + m, y - ell), m, ell, s, t) == h_st((x, y), m, ell, s, t)
    if c == d == 0:
        assert h_st((x, y), m, ell, s, t) == h_ml((x, y), m, ell) + s - 1


def test_h_st_diverges_to_the_left():
    for m in range(1, 4):
        for ell in range(1, 4):
            for a in range(1, m + 1):
                vals = [h_st((a, b), m, ell, 2, 3) for b in range(1, -1001, -1)]
                assert all(x <= y for x, y in zip(vals, vals[1:]))
                assert vals[-1] > 1000 * 3 // ell - 10


def test_h_st_matches_cylindric_hooks():
    for ell in range(1, 6):
        for m in range(1, 6):
            lam = validate_partition((ell + 1,) * m, m, ell)
            for a in range(1, 3 * m + 1):
                for b in range(-3 * ell - 2, ell + 2):
                    if (a, b) in lam:
                        assert h_st((a, b), m, ell, 1, ell + m) == hook_length_cyl(lam, (a, b))


def test_f_lms():
    assert f_lms(1, 1, 1) == (1, 1, True)
    assert f_lms(2, 2, 1)[:2] == (Fraction(1, 3), Fraction(1, 3))
    for ell in range(1, 7):
        for m in range(1, 7):
            for s in range(1, 7):
                assert f_lms(ell, m, s)[2]
            assert f_lms(ell, m, 1)[0] == Fraction(comb(ell + m - 2, m - 1), factorial(ell + m - 1))
            # s = 1 is the finite hook sum over excited diagrams of nu^(1) in the rectangle
            assert factorial(ell + m - 1) * f_lms(ell, m, 1)[0] == naruse_rhs(
                (ell + 1,) * m, (ell,) * (m - 1) + (1,)
            )


def test_f_lmst_m1_telescopes():
    for ell in range(1, 5):
        for s in range(1, 4):
            for t in range(1, 5):
                N = 12
                r = f_lmst(ell, 1, s, t, N)
                first = Fraction(1, prod(h_st((1, ell + 1 - k), 1, ell, s, t) for k in range(ell)))
                last = Fraction(1, prod(h_st((1, ell + 1 - k - N - 1), 1, ell, s, t) for k in range(ell)))
                assert r.truncated_sum == (first - last) / t
                assert first == Fraction(1, prod(range(s, s + ell)))


def test_f_lmst_trunc_zero_is_first_stratum():
    r = f_lmst(2, 3, 1, 4, 0)
    assert r.truncated_sum == f_lmst_stratum(2, 3, 1, 4, 0) == r.strata[0]


def test_f_lmst_closed_form_gives_binomial():
    for ell in range(1, 7):
        for m in range(1, 7):
            assert factorial(ell + m) * f_lmst_closed(ell, m, 1, ell + m) == comb(ell + m - 2, m - 1)


def test_f_lmst_recurrence_and_gap():
    for ell in range(1, 4):
        for m in range(1, 4):
            r = f_lmst(ell, m, 2, 3, 20)
            assert r.recurrence_ok and 0 < r.gap


def test_hook_formula_examples():
    for ell, m, target in [(1, 1, 1), (2, 2, 2), (3, 2, 3)]:
        rep = hook_formula_check(ell, m, 6)
        assert rep.lhs == target and rep.values["n_factorial_times_F_closed"] == target
        assert rep.verdict is Verdict.CONVERGED
