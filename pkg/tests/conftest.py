"""Shared builders for worked-example forms and random test data."""

from __future__ import annotations

import random

import pytest

from banzhaf.boolean_core import Literal, Product, SopForm


def product(*literals: tuple[int, bool] | int) -> Product:
    """Build a product from variable indices (positive) or (var, polarity)."""
    lits = []
    for entry in literals:
        if isinstance(entry, tuple):
            lits.append(Literal(entry[0], entry[1]))
        else:
            lits.append(Literal(entry))
    return Product(lits)


def sop(n: int, *prods: Product, disjoint: bool = False) -> SopForm:
    return SopForm(n, tuple(prods), disjoint_certified=disjoint)


@pytest.fixture
def scottish_mwc_sop() -> SopForm:
    """The six minimal winning coalitions of [65; 47, 46, 17, 16, 2]."""
    return sop(
        5,
        product(0, 1),
        product(0, 2, 3),
        product(0, 2, 4),
        product(0, 3, 4),
        product(1, 2, 3),
        product(1, 2, 4),
    )


@pytest.fixture
def scottish_disjoint_sop() -> SopForm:
    """A hand-disjointed form of the same function (weight 8+2+1+1+2+1)."""
    return sop(
        5,
        product(0, 1),
        product(0, (1, False), 2, 3),
        product(0, (1, False), 2, (3, False), 4),
        product(0, (1, False), (2, False), 3, 4),
        product((0, False), 1, 2, 3),
        product((0, False), 1, 2, (3, False), 4),
        disjoint=True,
    )


def random_product(rng: random.Random, n: int) -> Product:
    lits = []
    for var in range(n):
        roll = rng.random()
        if roll < 0.25:
            lits.append(Literal(var, True))
        elif roll < 0.5:
            lits.append(Literal(var, False))
    return Product(lits)


def random_sop(rng: random.Random, n: int, max_products: int = 6) -> SopForm:
    count = rng.randint(0, max_products)
    return SopForm(n, tuple(random_product(rng, n) for _ in range(count)))


def random_positive_sop(rng: random.Random, n: int, max_products: int = 6) -> SopForm:
    prods = []
    for _ in range(rng.randint(1, max_products)):
        vars_ = [v for v in range(n) if rng.random() < 0.45]
        prods.append(Product(Literal(v) for v in vars_))
    return SopForm(n, tuple(prods))
