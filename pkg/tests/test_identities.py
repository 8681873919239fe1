from fractions import Fraction as F
from math import comb

import pytest

from bernstir import identities as I
from bernstir.identities import Grid, IdentityId
from bernstir.rstirling import StirlingKind

FIRST, SECOND = StirlingKind.FIRST, StirlingKind.SECOND
SMALL = Grid(max_n=4, max_k=2, max_r=2, max_q=2)


def test_c1_hand_point():
    # -3*[2 1] + [3 2] = 0 with ordinary values [2 1] = 1, [3 2] = 3
    assert I.c1_lhs(FIRST, 1, 0, 1, 0, 1) == 0
    for conv in I.SIGNS:
        assert I.c1_rhs(FIRST, 1, 0, 1, 0, conv) == 0


def test_c1_printed_sign_hand_point():
    # n=1, k=0, r=0, q=0, p=1: 3*[1 0] - [2 1] = -1 while the printed rhs is +1
    assert I.c1_lhs(FIRST, 1, 0, 0, 0, 1) == -1
    assert I.c1_rhs(FIRST, 1, 0, 0, 0, "paper") == 1
    assert I.c1_rhs(FIRST, 1, 0, 0, 0, "corrected") == -1


def test_c1_n0_slice_is_pure_binomial_sum():
    for k in range(4):
        for q in range(3):
            for p in range(4):
                binom_sum = sum((-1) ** j * comb(j + q, q) * comb(k + q + j, k) * comb(k + q + p + 1, p - j)
                                for j in range(p + 1))
                for r in range(3):
                    for kind in (FIRST, SECOND):
                        assert I.c1_lhs(kind, 0, k, r, q, p) == binom_sum
                assert binom_sum == comb(k + q, q)


def test_c1_r1_slice_matches_ordinary_stirling_form():
    rep_c1 = I.check_c1("first", Grid(max_n=5, max_k=3, max_r=1, max_q=2))
    rep_ex = I.check_c1_examples("r1", Grid(max_n=5, max_k=3, max_q=2), "first")
    assert rep_c1.verified and rep_ex.verified


def test_c1_examples_hand_values():
    # n = 0 slice at p=2, q=1, k=1: 20 - 30 + 12 = 2 = C(2, 1)
    rep = I.check_c1_examples("n0", Grid(max_k=1, max_q=1, p_offsets=(2,)))
    assert rep.verified
    # k=0 second display: falling(0, n) = 0 for n >= 1
    for n in range(1, 5):
        lhs = sum((-1) ** j * comb(j + 0, 0) * comb(n + n + 0 + 1, n - j)
                  * I.rstir(SECOND, n + 1 + j, 1 + j, 1) for j in range(n + 1))
        assert lhs == 0


def test_c5_hand_point():
    # 3*[3 2] - [4 3] = 9 - 6 = 3 = C(3, 1) [2 1]
    assert I.c5_lhs(FIRST, 1, 0, 1, 0, 1) == 3
    assert I.c5_rhs(FIRST, 1, 0, 1, 0, 1, "corrected") == 3
    assert I.c5_rhs(FIRST, 1, 0, 1, 0, 1, "paper") == -3
    # 3*{3 2} - {4 3} = 9 - 6 = 3 = C(3, 1) {2 1}
    assert I.c5_lhs(SECOND, 1, 0, 1, 0, 1) == 3
    assert I.c5_rhs(SECOND, 1, 0, 1, 0, 1) == 3


def test_c5_examples_hand_values():
    g = Grid(max_n=1, max_r=1, max_q=0, p_offsets=(0,))
    assert I.check_c5_examples("k0", g, "first").verified
    # n = 0 slice at p=2, q=0, k=1: 12 - 12 + 4 = 4 = C(4, 1)
    lhs = sum((-1) ** j * comb(2 + 0 + 1 + 1, 2 - j) * comb(j, 0) * comb(2 + j, 1) for j in range(3))
    assert lhs == 4 == comb(4, 1)
    assert I.check_c5_examples("n0", Grid(max_k=1, max_q=0, p_offsets=(2,))).verified


@pytest.mark.parametrize("ident", ["a5", "a6", "carlitz", "remark2"])
def test_basic_identities(ident):
    assert I.check_basic(ident, SMALL).verified


def test_basic_hand_points():
    from bernstir.bernoulli import oracle_eval, special_neg_order
    # {4 2}_1 = 7, C(3, 1) = 3
    assert special_neg_order("B", 2, 1, 1) == F(7, 3) == oracle_eval("B", 2, -1, 1)
    assert oracle_eval("B", 0, F(7, 3), 2) == oracle_eval("b", 0, 1 - F(7, 3), 1) == 1
    with pytest.raises(ValueError):
        I.check_basic("c1-first", SMALL)


@pytest.mark.parametrize("ident", list(IdentityId))
def test_all_identities_hold_corrected(ident):
    rep = I.run_identity(ident, SMALL)
    assert rep.verified, rep.failures[:3]
    assert rep.failures == []


@pytest.mark.parametrize("ident", list(IdentityId))
def test_checked_equals_grid_cardinality(ident):
    rep = I.run_identity(ident, SMALL)
    dims = tuple(rep.grid)
    assert rep.checked == len(I.grid_points(SMALL, dims))
    assert rep.checked == len(set(I.grid_points(SMALL, dims)))


def _printed_failures(lhs_fn, rhs_fn, grid):
    odd, fails = [], []
    for n, k, r, q, p in I.grid_points(grid, ("n", "k", "r", "q", "p")):
        lhs, rhs = lhs_fn(n, k, r, q, p), rhs_fn(n, k, r, q, p)
        if lhs != rhs:
            fails.append((n, k, r, q, p))
            assert lhs == -rhs
        if n % 2 and rhs != 0:
            odd.append((n, k, r, q, p))
    return fails, odd


def test_c5_paper_sign_fails_exactly_on_odd_n():
    fails, odd = _printed_failures(
        lambda *a: I.c5_lhs(FIRST, *a),
        lambda *a: I.c5_rhs(FIRST, *a, convention="paper"), SMALL)
    assert fails == odd and fails
    rep = I.check_c5("first", "paper", SMALL)
    assert rep.failed == len(odd)
    assert rep.failures[0].params == {"n": 1, "k": 0, "r": 1, "q": 0, "p": 1}


def test_c1_paper_sign_fails_exactly_on_odd_n():
    fails, odd = _printed_failures(
        lambda *a: I.c1_lhs(FIRST, *a),
        lambda n, k, r, q, p: I.c1_rhs(FIRST, n, k, r, q, "paper"), SMALL)
    assert fails == odd and fails
    assert I.check_c1("first", SMALL, "paper").failed == len(odd)


def test_second_displays_ignore_sign():
    a = I.check_c5("second", "paper", SMALL)
    b = I.check_c5("second", "corrected", SMALL)
    assert a == b and a.sign is None
    assert I.check_c1("second", SMALL, "paper") == I.check_c1("second", SMALL)


def test_witness_cap_and_order():
    rep = I.check_c5("first", "paper")
    assert len(rep.failures) == I.MAX_WITNESSES < rep.failed
    keys = [tuple(f.params.values()) for f in rep.failures]
    assert keys == sorted(keys)


def test_reports_deterministic():
    assert I.run_all(SMALL, "paper") == I.run_all(SMALL, "paper")


def test_bad_arguments():
    with pytest.raises(ValueError):
        I.check_c5("first", "bogus")
    with pytest.raises(ValueError):
        I.check_c1("third")
    with pytest.raises(ValueError):
        I.check_c1_examples("r2")
    with pytest.raises(ValueError):
        Grid(max_n=-1)
    with pytest.raises(ValueError):
        Grid(p_offsets=())
