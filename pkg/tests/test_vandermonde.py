import random

import pytest

from confluent import (
    DegreeTooHigh,
    Poly,
    build,
    build_block,
    det_elimination,
    det_formula,
    eval_map,
    lu_factorize,
    new_multiset,
)
from confluent.matrix import DenseMatrix, identity

import golden
from conftest import GF7, GF101, QQ, random_nodes, random_poly


def test_build_block_examples():
    blk = build_block(3, 2, 5, QQ)
    assert blk == DenseMatrix.from_rows([[1, 3, 9, 27, 81], [0, 1, 6, 27, 108]], QQ)
    assert build_block(QQ(0), 3, 5) == DenseMatrix.from_rows(identity(5, QQ).tolist()[:3], QQ)
    assert build_block(2, 1, 4, QQ) == DenseMatrix.from_rows([[1, 2, 4, 8]], QQ)
    with pytest.raises(ValueError):
        build_block(1, 3, 2, QQ)


def test_build_example(example_nodes):
    assert build(example_nodes).matrix == DenseMatrix.from_rows(golden.V, QQ)


def test_build_symbolic_shape():
    # Rows: value at lam1; value and first derivative at lam2 and lam3.
    lam = [QQ(2), QQ(-1), QQ(5)]
    v = build(new_multiset([(lam[0], 1), (lam[1], 2), (lam[2], 2)], QQ)).matrix
    expected = [
        [lam[0] ** i for i in range(5)],
        [lam[1] ** i for i in range(5)],
        [0, 1, 2 * lam[1], 3 * lam[1] ** 2, 4 * lam[1] ** 3],
        [lam[2] ** i for i in range(5)],
        [0, 1, 2 * lam[2], 3 * lam[2] ** 2, 4 * lam[2] ** 3],
    ]
    assert v == DenseMatrix.from_rows(expected, QQ)


def test_build_at_zero():
    assert build(new_multiset([(0, 6)], QQ)).matrix == identity(6, QQ)


def test_eval_map_examples(example_nodes):
    x = Poly.x(QQ)
    assert list(eval_map(example_nodes, Poly.constant(1, QQ))) == [1, 1, 0, 1, 0]
    p4 = (x - 1) * (x - 3) ** 2 * (x - 6)
    assert list(eval_map(example_nodes, p4)) == [0, 0, 0, 0, 45]
    assert list(eval_map(example_nodes, Poly.zero(QQ))) == [0] * 5
    with pytest.raises(DegreeTooHigh):
        eval_map(example_nodes, x**5)


def test_lu_example(example_nodes):
    lu = lu_factorize(example_nodes)
    assert lu.U_inv == DenseMatrix.from_rows(golden.U_INV, QQ)
    assert lu.L == DenseMatrix.from_rows(golden.L, QQ)
    assert lu.L.diagonal() == [1, 2, 2, 45, 45]
    assert lu.U.diagonal() == [1] * 5
    assert lu.L @ lu.U == DenseMatrix.from_rows(golden.V, QQ)


def test_det_examples(example_nodes):
    expected = 1
    for base, exp in golden.DET_FACTORS:
        expected *= base**exp
    assert expected == 8100
    assert det_formula(example_nodes) == expected
    assert det_formula(new_multiset([(0, 2), (1, 2)], QQ)) == 1
    simple = new_multiset([(2, 1), (5, 1), (-1, 1)], QQ)
    assert det_formula(simple) == (5 - 2) * (-1 - 2) * (-1 - 5)


def test_det_sign_depends_on_order():
    a = det_formula(new_multiset([(0, 1), (1, 1)], QQ))
    b = det_formula(new_multiset([(1, 1), (0, 1)], QQ))
    assert a == -b


@pytest.mark.parametrize("field", [QQ, GF101], ids=str)
def test_lu_and_det_random(field):
    rng = random.Random(21)
    for _ in range(20):
        nodes = random_nodes(rng, field, rng.randint(1, 10))
        v = build(nodes).matrix
        lu = lu_factorize(nodes)
        assert lu.L.is_lower_triangular() and lu.U.is_upper_triangular()
        assert lu.L @ lu.U == v
        diag = lu.L.diagonal()
        prod = field.one
        for x in diag:
            prod = prod * x
        assert det_formula(nodes) == det_elimination(v) == prod


@pytest.mark.parametrize("field", [QQ, GF7, GF101], ids=str)
def test_eval_map_is_matrix_action(field):
    rng = random.Random(22)
    for _ in range(20):
        nodes = random_nodes(rng, field, rng.randint(1, min(9, field.characteristic or 9)))
        v = build(nodes).matrix
        p = random_poly(rng, field, rng.randint(0, nodes.d - 1))
        ev = eval_map(nodes, p)
        assert list(ev) == v.apply(p.padded(nodes.d))
        for (j, r), val in zip(nodes.slots(), ev):
            assert val == p.hasse_derivative(r)(nodes.entries[j][0])


def test_interpolation_uniqueness():
    # Distinct polys of degree < d give distinct evaluation vectors.
    rng = random.Random(23)
    for _ in range(30):
        nodes = random_nodes(rng, GF7, rng.randint(1, 5))
        p = random_poly(rng, GF7, nodes.d - 1)
        q = random_poly(rng, GF7, nodes.d - 1)
        assert (eval_map(nodes, p) == eval_map(nodes, q)) == (p == q)


def test_eval_vector_block(example_nodes):
    ev = eval_map(example_nodes, Poly.constant(1, QQ))
    assert ev.block(1) == (QQ(1), QQ(0))
    assert str(ev) == "1,1,0,1,0"
