import random

import pytest

from confluent import Field, Poly, new_multiset

QQ = Field.rationals()
GF7 = Field.gf(7)
GF101 = Field.gf(101)

ACCEPTANCE_LINES: list[str] = []


def random_nodes(rng: random.Random, field: Field, d: int, max_q: int | None = None):
    """Random multiset with total multiplicity ``d`` and distinct nodes."""
    q = rng.randint(1, min(d, max_q or d))
    cuts = sorted(rng.sample(range(1, d), q - 1))
    mults = [b - a for a, b in zip([0] + cuts, cuts + [d])]
    if field.is_rational:
        pool = range(-15, 16)
    else:
        pool = range(field.modulus)
    values = rng.sample(pool, q)
    return new_multiset(list(zip(values, mults)), field)


def random_poly(rng: random.Random, field: Field, degree: int) -> Poly:
    if field.is_rational:
        from fractions import Fraction

        draw = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 4))  # noqa: E731
    else:
        draw = lambda: rng.randrange(field.modulus)  # noqa: E731
    return Poly([draw() for _ in range(degree + 1)], field)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def example_nodes():
    return new_multiset([(1, 1), (3, 2), (6, 2)], QQ)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
