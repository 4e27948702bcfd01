import random

import pytest

from confluent import DuplicateNode, EmptyMultiset, Field, FieldMismatch, Poly, hat_basis, new_multiset, newton_basis
from confluent.matrix import DenseMatrix

import golden
from conftest import GF7, GF101, QQ, random_nodes


def test_example_multiset(example_nodes):
    assert example_nodes.d == 5
    assert example_nodes.q == 3
    assert example_nodes.sequence() == [1, 3, 3, 6, 6]
    assert example_nodes.offsets() == [0, 1, 3]
    assert str(example_nodes) == "1,3^2,6^2"


def test_duplicates_are_field_relative():
    with pytest.raises(DuplicateNode, match="duplicate node: 3 ≡ 1 in GF\\(2\\)"):
        new_multiset([(1, 1), (3, 1)], Field.gf(2))
    new_multiset([(1, 1), (3, 1)], QQ)
    with pytest.raises(DuplicateNode):
        new_multiset([(1, 1), (8, 2)], GF7)
    with pytest.raises(DuplicateNode):
        new_multiset([("1/2", 1), ("2/4", 1)], QQ)


def test_single_node():
    nodes = new_multiset([(0, 5)], QQ)
    assert (nodes.q, nodes.d) == (1, 5)


def test_invalid_construction():
    with pytest.raises(EmptyMultiset):
        new_multiset([], QQ)
    with pytest.raises(ValueError):
        new_multiset([(1, 0)], QQ)
    with pytest.raises(FieldMismatch):
        new_multiset([(GF7(1), 1)], QQ)


def test_newton_basis_example(example_nodes):
    x = Poly.x(QQ)
    expected = [Poly.constant(1, QQ), x - 1, (x - 1) * (x - 3), (x - 1) * (x - 3) ** 2, (x - 1) * (x - 3) ** 2 * (x - 6)]
    assert newton_basis(example_nodes) == expected
    cols = DenseMatrix.from_columns([p.padded(5) for p in expected], QQ)
    assert cols == DenseMatrix.from_rows(golden.U_INV, QQ)


def test_newton_basis_at_zero():
    x = Poly.x(QQ)
    assert newton_basis(new_multiset([(0, 4)], QQ)) == [x**i for i in range(4)]


@pytest.mark.parametrize("field", [QQ, GF101], ids=str)
def test_newton_basis_monic_degrees(field, rng):
    for _ in range(20):
        nodes = random_nodes(rng, field, rng.randint(1, 8))
        for i, p in enumerate(newton_basis(nodes)):
            assert p.degree == i and p.is_monic()


def test_hat_basis_example(example_nodes):
    x = Poly.x(QQ)
    hats = hat_basis(example_nodes)
    assert hats[2] == (x - 1) * (x - 3) * (x - 6) ** 2
    assert DenseMatrix.from_columns([h.padded(5) for h in hats], QQ) == DenseMatrix.from_rows(golden.H_HAT, QQ)


def test_hat_basis_single_node():
    x = Poly.x(QQ)
    assert hat_basis(new_multiset([(4, 3)], QQ)) == [(x - 4) ** m for m in range(3)]


@pytest.mark.parametrize("field", [QQ, GF7, GF101], ids=str)
def test_hat_basis_evaluation_table(field):
    rng = random.Random(11)
    for _ in range(25):
        d = rng.randint(1, min(8, field.characteristic or 8))
        nodes = random_nodes(rng, field, d)
        hats = hat_basis(nodes)
        for (j, m), h in zip(nodes.slots(), hats):
            assert h.degree == d - nodes.entries[j][1] + m
            for i, (lam_i, m_i) in enumerate(nodes.entries):
                for r in range(m_i):
                    val = h.hasse_derivative(r)(lam_i)
                    if (i != j) or r < m:
                        assert val.is_zero()
                    elif r == m:
                        star = field.one
                        for k, (lam_k, m_k) in enumerate(nodes.entries):
                            if k != j:
                                star = star * (lam_i - lam_k) ** m_k
                        assert val == star and not val.is_zero()
        # D^(r) hhat_{j,m}(lam_j) = D^(r-1) hhat_{j,m-1}(lam_j)
        start = nodes.offsets()
        for j, (lam, mj) in enumerate(nodes.entries):
            for m in range(1, mj):
                for r in range(1, mj):
                    a = hats[start[j] + m].hasse_derivative(r)(lam)
                    b = hats[start[j] + m - 1].hasse_derivative(r - 1)(lam)
                    assert a == b
