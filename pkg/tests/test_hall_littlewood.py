"""Truncated K-matrix, its inverse, and Q'-expansions."""

from qweyl.hall_littlewood import k_matrix, p_basis_matrix, qprime_expansion
from qweyl.partitions import conjugate, dominates, enumerate_partitions, weight
from qweyl.qseries import QSeries
from qweyl.recurrence import k_limit


def test_k_matrix_shape_and_triangularity():
    km = k_matrix("sp", 4, 3)
    assert km.index == enumerate_partitions(4)
    for lam in km.index:
        assert km.entry(lam, lam) == QSeries.one(3)
    for (lam, mu) in km.entries:
        assert dominates(lam, mu)
        assert (weight(lam) - weight(mu)) % 2 == 0
        if weight(lam) == weight(mu) and lam != mu:
            assert km.entry(lam, mu).low_degree() >= 1


def test_k_matrix_known_entries():
    km = k_matrix("so", 4, 4)
    assert km.entry((2,), (1, 1)).coeffs == {1: 1}
    assert km.entry((1, 1), (2,)).is_zero()
    assert km.entry((2,), ()) == k_limit("so", (2,), (), 4)


def test_inverse_identity_on_closed_rows():
    # rows lam with |lam| + 2D <= bound see their full K-support inside
    # the window, so (P . K) and (K . P) are the identity there
    bound, D = 8, 2
    for family in ("so", "sp"):
        km = k_matrix(family, bound, D)
        pm = p_basis_matrix(family, bound, D)
        for prod in (pm.matmul(km), km.matmul(pm)):
            for (lam, mu), val in prod.entries.items():
                if weight(lam) + 2 * D <= bound:
                    expect = QSeries.one(D) if lam == mu else QSeries.zero(D)
                    assert val == expect, (family, lam, mu)
        for lam in km.index:
            if weight(lam) + 2 * D <= bound:
                assert pm.matmul(km).entry(lam, lam) == QSeries.one(D)


def test_empty_column_duality():
    # the mu = () column of one family matches the conjugate-indexed
    # column of the other
    D = 3
    for lam in enumerate_partitions(5):
        assert k_limit("so", lam, (), D) == k_limit("sp", conjugate(lam), (), D)


def test_qprime_expansion_low_truncation():
    ex = qprime_expansion("so", (), 1)
    assert ex.basis == "so"
    assert ex.coeff(()) == QSeries.one(1)
    # only even-weight partitions can appear over mu = ()
    assert all(weight(lam) % 2 == 0 for lam in ex.terms)
    assert ex.coeff((2,))[1] == k_limit("so", (2,), (), 1)[1]


def test_qprime_support_bound():
    D = 2
    ex = qprime_expansion("sp", (1, 1), D)
    assert all(weight(lam) <= 2 + 2 * D for lam in ex.terms)
    assert ex.coeff((1, 1)) == QSeries.one(D)
    for lam, c in ex.terms.items():
        assert c.low_degree() >= (weight(lam) - 2 + 1) // 2


def test_matmul_index_mismatch():
    import pytest

    with pytest.raises(ValueError):
        k_matrix("so", 4, 2).matmul(k_matrix("so", 2, 2))
