"""Independent oracles used by the tests.

These deliberately avoid the library's elimination code paths so that a
value computed here and a value computed by the package confirm each other.
"""

from fractions import Fraction
import random

from strongrev.matrices import ExactMatrix
from strongrev.scalars import GaussianRational, ZERO


def laplace_det(m: ExactMatrix) -> GaussianRational:
    """Determinant by cofactor expansion along the first row (O(n!))."""
    n = m.rows
    if n == 1:
        return m[0, 0]
    total = ZERO
    for j in range(n):
        coeff = m[0, j]
        if not coeff:
            continue
        minor = ExactMatrix(
            [[m[i, k] for k in range(n) if k != j] for i in range(1, n)]
        )
        term = coeff * laplace_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def random_scalar(rng: random.Random, bound: int = 5, den: int = 4) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-bound, bound), rng.randint(1, den)),
        Fraction(rng.randint(-bound, bound), rng.randint(1, den)),
    )


def random_nonzero_scalar(rng: random.Random, bound: int = 5, den: int = 4) -> GaussianRational:
    while True:
        value = random_scalar(rng, bound, den)
        if value:
            return value
