import random
from itertools import product

import pytest

from macprod.errors import IndexOutOfRange, LengthMismatch
from macprod.matprod import (compute_P, compute_f, expand_configurations,
                             generating_trace, omega_norm, raw_trace_sum,
                             recursion_prefactor, recursion_report, transition,
                             verify_generating, verify_recursion)
from macprod.qtfield import QTRat, one
from macprod.xpoly import XPoly

Q = QTRat.monomial(qe=1)
T = QTRat.monomial(te=1)
ONE = one()


def test_f_001122_frozen():
    # three coefficient bands: 1, t^2(1-t)/(1-qt^3),
    # t^4(1+t)(1-t)^2/((1-qt^3)(1-qt^4))
    f = compute_f((0, 0, 1, 1, 2, 2))
    c_top = ONE
    c_mid = T ** 2 * (ONE - T) / (ONE - Q * T ** 3)
    c_bot = T ** 4 * (ONE + T) * (ONE - T) ** 2 / \
        ((ONE - Q * T ** 3) * (ONE - Q * T ** 4))
    want = {}
    want[(0, 0, 1, 1, 2, 2)] = c_top
    for a in ((1, 0), (0, 1)):
        for b in ((2, 1), (1, 2)):
            want[a + (1, 1) + b] = c_mid
    want[(1, 1, 1, 1, 1, 1)] = c_bot
    assert f == XPoly._raw(6, want)


def test_configuration_count_001122():
    assert len(expand_configurations((0, 0, 1, 1, 2, 2), 2)) == 6


def test_omega_norm_values():
    assert omega_norm((2, 2, 1, 1, 0, 0), 2) == (ONE - Q * T ** 2).inverse()
    want = ((ONE - Q * T) ** 2 * (ONE - Q ** 2 * T ** 2)).inverse()
    assert omega_norm((3, 2, 1, 0), 3) == want
    assert omega_norm((1, 0), 1) == ONE
    # rows of equal length leave pure q factors
    assert omega_norm((2, 2), 2) == (ONE - Q).inverse()


def test_raw_sum_leading_coefficient():
    for lam in [(2, 0, 1), (1, 1), (3, 0, 2, 1), (2, 2)]:
        r = max(lam)
        assert raw_trace_sum(lam, r).coeff_of(lam) == omega_norm(lam, r)


def test_f_rank_stability():
    assert compute_f((1, 0), 1) == compute_f((1, 0), 2)
    assert compute_f((2, 1), 2) == compute_f((2, 1), 3)
    assert compute_f((0, 0), 0) == XPoly.one(2)


def test_f_monic_homogeneous_random():
    rng = random.Random(20260815)
    for _ in range(8):
        n = rng.randint(1, 4)
        lam = tuple(rng.randint(0, 3) for _ in range(n))
        f = compute_f(lam)
        assert f.coeff_of(lam) == ONE
        assert f.is_homogeneous(sum(lam))


def test_all_parts_positive_factorisation():
    for lam in [(1, 1), (2, 1), (3, 2, 1), (3, 1, 2)]:
        n = len(lam)
        xs = XPoly.one(n)
        for i in range(1, n + 1):
            xs = xs * XPoly.variable(i, n)
        assert compute_f(lam) == xs * compute_f(tuple(p - 1 for p in lam))


def test_recursion_3102():
    rep = recursion_report((3, 1, 0, 2))
    assert rep.prefactor == (ONE - Q * T) * (ONE - Q ** 2 * T ** 2)
    assert sorted(m for m, _ in rep.terms) == [
        (0, 0, 2, 1), (1, 0, 2, 0), (2, 0, 0, 1), (2, 0, 1, 0)]
    assert rep.ok


def test_recursion_small_sweep():
    for n in (1, 2, 3):
        for lam in product(range(4), repeat=n):
            assert verify_recursion(lam), lam


def test_recursion_prefactor_values():
    assert recursion_prefactor((3, 1, 0, 2)) == \
        (ONE - Q * T) * (ONE - Q ** 2 * T ** 2)
    assert recursion_prefactor((1, 0)) == ONE
    assert recursion_prefactor((2, 2)) == ONE - Q * T ** 0  # no parts equal 1


def test_transition_guards():
    with pytest.raises(LengthMismatch):
        transition((1, 0), (0,))
    with pytest.raises(IndexOutOfRange):
        transition((2, 0), (2, 0))
    assert not transition((1, 1), (1, 0), 2)  # inadmissible entry (1,1)


def test_transition_monomial_shape():
    w = transition((3, 1, 0, 2), (2, 0, 0, 1))
    assert set(w.terms) == {(1, 1, 0, 1)}


def test_compute_P_small():
    x1, x2 = XPoly.variable(1, 2), XPoly.variable(2, 2)
    assert compute_P((1,), 2) == x1 + x2
    assert compute_P((1, 1)) == x1 * x2
    assert compute_P((2, 1)) == x1 * x1 * x2 + x1 * x2 * x2
    # Gram-Schmidt against e_2 in the power-sum basis gives the m_11 weight
    assert compute_P((2,), 2).coeff_of((1, 1)) == \
        (ONE + Q) * (ONE - T) / (ONE - Q * T)
    with pytest.raises(LengthMismatch):
        compute_P((2, 1), 1)


def test_generating_identity():
    assert verify_generating(1, 2)
    assert verify_generating(2, 2)
    gt = generating_trace(1, 2)
    assert set(gt) == {(0, 0), (1, 0), (1, 1)}
