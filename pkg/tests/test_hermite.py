import random
from fractions import Fraction as F

import pytest

from confluent import (
    LengthMismatch,
    Poly,
    ResidueDegreeTooHigh,
    build,
    crt_reconstruct,
    eval_map,
    hermite_basis,
    interpolate,
    inverse_elimination,
    new_multiset,
    vandermonde_inverse,
)
from confluent.matrix import identity
from confluent.vandermonde import eval_values

from conftest import GF7, GF101, QQ, random_nodes, random_poly


def example_hermite_polys():
    x = Poly.x(QQ)
    c = lambda v: Poly.constant(v, QQ)  # noqa: E731
    return [
        c(F(1, 100)) * (x - 3) ** 2 * (x - 6) ** 2,
        (x - 1) * (c(F(1, 18)) + c(F(1, 108)) * (x - 3)) * (x - 6) ** 2,
        (x - 1) * (c(F(1, 18)) * (x - 3)) * (x - 6) ** 2,
        (x - 1) * (x - 3) ** 2 * (c(F(1, 45)) - c(F(13, 675)) * (x - 6)),
        (x - 1) * (x - 3) ** 2 * (c(F(1, 45)) * (x - 6)),
    ]


def test_hermite_example(example_nodes):
    basis = hermite_basis(example_nodes)
    assert list(basis.polys) == example_hermite_polys()
    assert basis[2, 0] == example_hermite_polys()[3]
    with pytest.raises(IndexError):
        basis[0, 1]


def test_lagrange_special_case():
    nodes = new_multiset([(0, 1), (1, 1), (3, 1)], QQ)
    x = Poly.x(QQ)
    lagrange = [
        (x - 1) * (x - 3) * Poly.constant(F(1, 3), QQ),
        x * (x - 3) * Poly.constant(F(-1, 2), QQ),
        x * (x - 1) * Poly.constant(F(1, 6), QQ),
    ]
    assert list(hermite_basis(nodes).polys) == lagrange


def test_inverse_at_zero():
    assert vandermonde_inverse(new_multiset([(0, 5)], QQ)) == identity(5, QQ)


@pytest.mark.parametrize("field", [QQ, GF7, GF101], ids=str)
def test_duality_and_inverse(field):
    rng = random.Random(41)
    for _ in range(20):
        nodes = random_nodes(rng, field, rng.randint(1, min(10, field.characteristic or 10)))
        basis = hermite_basis(nodes)
        for k, h in enumerate(basis):
            ev = list(eval_map(nodes, h))
            assert ev == [field.one if i == k else field.zero for i in range(nodes.d)]
        v = build(nodes).matrix
        h = vandermonde_inverse(nodes)
        assert v @ h == identity(nodes.d, field)
        if nodes.d <= 8:
            assert h == inverse_elimination(v)


@pytest.mark.parametrize("field", [QQ, GF101], ids=str)
def test_interpolation_round_trip(field):
    rng = random.Random(42)
    for _ in range(25):
        nodes = random_nodes(rng, field, rng.randint(1, 9))
        p = random_poly(rng, field, rng.randint(0, nodes.d - 1))
        assert interpolate(nodes, eval_map(nodes, p)) == p
        vals = random_poly(rng, field, nodes.d - 1).padded(nodes.d)
        assert list(eval_map(nodes, interpolate(nodes, vals))) == vals


def test_interpolate_example_combination(example_nodes):
    cs = [QQ(2), QQ(-1), QQ(F(1, 2)), QQ(7), QQ(0)]
    expected = Poly.zero(QQ)
    for c, h in zip(cs, example_hermite_polys()):
        expected = expected + h.scale(c)
    assert interpolate(example_nodes, cs) == expected
    assert interpolate(example_nodes, [0] * 5).is_zero()
    with pytest.raises(LengthMismatch):
        interpolate(example_nodes, [1, 2])


@pytest.mark.parametrize("field", [QQ, GF101], ids=str)
def test_crt_from_remainders(field):
    rng = random.Random(43)
    x = Poly.x(field)
    for _ in range(25):
        nodes = random_nodes(rng, field, rng.randint(1, 9))
        p = random_poly(rng, field, rng.randint(0, nodes.d - 1))
        residues = [p % (x - lam) ** m for lam, m in nodes.entries]
        assert crt_reconstruct(nodes, residues) == p
        for r, (lam, m) in zip(residues, nodes.entries):
            assert crt_reconstruct(nodes, residues) % (x - lam) ** m == r


def test_crt_trivia():
    nodes = new_multiset([(2, 4)], QQ)
    r = Poly([1, 2, 3], QQ)
    assert crt_reconstruct(nodes, [r]) == r
    three = new_multiset([(1, 1), (3, 2), (6, 2)], QQ)
    assert crt_reconstruct(three, [Poly.zero(QQ)] * 3).is_zero()
    with pytest.raises(ResidueDegreeTooHigh):
        crt_reconstruct(three, [Poly([0, 1], QQ), Poly.zero(QQ), Poly.zero(QQ)])
    with pytest.raises(LengthMismatch):
        crt_reconstruct(three, [Poly.zero(QQ)])


def test_crt_agrees_with_interpolate_on_taylor_data():
    rng = random.Random(44)
    for _ in range(15):
        nodes = random_nodes(rng, QQ, rng.randint(1, 8))
        residues = [random_poly(rng, QQ, m - 1) for _, m in nodes.entries]
        values = []
        for r, (lam, m) in zip(residues, nodes.entries):
            t = r.taylor_at(lam)
            values.extend(t[i] if i < len(t) else QQ.zero for i in range(m))
        assert crt_reconstruct(nodes, residues) == interpolate(nodes, values)
        assert list(eval_values(nodes, crt_reconstruct(nodes, residues))) == values
