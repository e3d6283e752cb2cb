from itertools import permutations
from math import comb

import pytest

from cylhook.diagrams import Cell, skew_cells, validate_partition
from cylhook.errors import NotContained
from cylhook.tableaux import (
    Tableau,
    count_finite,
    count_linear_extensions,
    count_restricted,
    enumerate_linear_extensions,
    is_restricted_extension,
)

from _shapes import cyl_pairs, partitions_in_box, sub_partitions


def shape(lam, mu, m, ell):
    return skew_cells(validate_partition(lam, m, ell), validate_partition(mu, m, ell))


def brute(sh, restricted=False, increasing=False):
    """Count by trying every bijection onto 1..n."""
    cells = list(sh.cells)
    m, ell = sh.omega.m, sh.omega.ell
    total = 0
    for perm in permutations(range(1, len(cells) + 1)):
        eps = dict(zip(cells, perm))
        ok = True
        for (a, b), v in eps.items():
            for nb in ((a, b + 1), (a + 1, b)):
                if nb in eps and (eps[nb] < v) == increasing:
                    ok = False
            if restricted and a == 1 and (m, b - ell) in eps and not v < eps[(m, b - ell)]:
                ok = False
        total += ok
    return total


def test_examples():
    assert count_linear_extensions(shape((2, 2), (1, 0), 2, 2)) == 2
    assert len(list(enumerate_linear_extensions(shape((2, 2), (1, 0), 2, 2)))) == 2
    assert count_linear_extensions(shape((1,), (0,), 1, 1)) == 1
    assert count_linear_extensions(shape((2, 2), (2, 2), 2, 2)) == 1
    assert count_linear_extensions(shape((3, 1), (0, 0), 2, 2)) == 3
    assert count_linear_extensions(shape((2, 2, 2), (0, 0, 0), 3, 2)) == 5
    assert count_restricted(validate_partition((3, 1), 2, 2), validate_partition((0, 0), 2, 2)) == 2


def test_empty_shape_single_tableau():
    tabs = list(enumerate_linear_extensions(shape((1, 1), (1, 1), 2, 1)))
    assert len(tabs) == 1 and tabs[0].entries == ()


def test_restricted_figure_tableaux():
    sh = shape((4, 2), (1, 0), 2, 2)
    left = Tableau(sh, ((Cell(1, 2), 4), (Cell(1, 3), 2), (Cell(1, 4), 1), (Cell(2, 1), 5), (Cell(2, 2), 3)))
    right = Tableau(sh, ((Cell(1, 2), 4), (Cell(1, 3), 3), (Cell(1, 4), 2), (Cell(2, 1), 5), (Cell(2, 2), 1)))
    assert left.is_valid() and right.is_valid()
    assert is_restricted_extension(left, sh.omega)
    assert not is_restricted_extension(right, sh.omega)


def test_vacuous_restriction():
    sh = shape((2, 2), (0, 0), 2, 3)
    assert all(is_restricted_extension(t, sh.omega) for t in enumerate_linear_extensions(sh))


def test_counts_against_permutations():
    for lam, mu in cyl_pairs(m_max=3, ell_max=3, lam_max=3, n_max=6):
        sh = skew_cells(lam, mu)
        assert count_linear_extensions(sh) == brute(sh)
        assert count_restricted(lam, mu) == brute(sh, restricted=True)


def test_duality_decreasing_vs_increasing():
    for lam in partitions_in_box(3, 3):
        for mu in sub_partitions(lam):
            sh = shape(lam, mu, 3, 3)
            if sh.n <= 6:
                assert brute(sh) == brute(sh, increasing=True)


def test_enumeration_matches_count_and_is_sorted():
    for lam, mu in cyl_pairs(m_max=3, ell_max=2, lam_max=4, n_max=7):
        sh = skew_cells(lam, mu)
        for restricted in (False, True):
            tabs = list(enumerate_linear_extensions(sh, restricted=restricted))
            expected = count_restricted(lam, mu) if restricted else count_linear_extensions(sh)
            assert len(tabs) == expected
            keys = [tuple(v for _, v in t.entries) for t in tabs]
            assert keys == sorted(set(keys))
            assert all(t.is_valid() for t in tabs)
            if restricted:
                assert all(is_restricted_extension(t, sh.omega) for t in tabs)


def test_bar_case_single_extension():
    for n in range(1, 9):
        for ell in range(1, 7):
            assert count_restricted(validate_partition((n,), 1, ell), validate_partition((0,), 1, ell)) == 1


def test_hook_case_count_and_extremes():
    for ell in range(1, 7):
        for m in range(1, 7):
            lam = validate_partition((ell + 1,) * m, m, ell)
            mu = validate_partition((ell,) * (m - 1) + (0,), m, ell)
            assert count_restricted(lam, mu) == comb(ell + m - 2, m - 1)
    for ell in range(1, 4):
        for m in range(1, 4):
            lam = validate_partition((ell + 1,) * m, m, ell)
            mu = validate_partition((ell,) * (m - 1) + (0,), m, ell)
            sh = skew_cells(lam, mu)
            for t in enumerate_linear_extensions(sh, restricted=True):
                assert t[(m, ell + 1)] == 1 and t[(m, 1)] == sh.n


def test_count_finite_arbitrary_cells():
    assert count_finite([(1, 1), (1, 2), (2, 1)]) == 2
    assert count_finite([]) == 1


def test_to_json_shape():
    sh = shape((2, 0), (0, 0), 2, 2)
    (t,) = enumerate_linear_extensions(sh)
    assert t.to_json() == {
        "shape": {"lambda": [2, 0], "mu": [0, 0], "m": 2, "ell": 2},
        "entries": [[1, 1, 2], [1, 2, 1]],
    }
    assert t.render() == "2 1"


def test_not_contained():
    with pytest.raises(NotContained):
        count_restricted(validate_partition((1, 0), 2, 1), validate_partition((1, 1), 2, 1))
