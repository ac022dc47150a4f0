import cmath

import pytest

from eqsw.algebra import CyclotomicNumber


def numeric(x: CyclotomicNumber) -> complex:
    """Evaluate at the principal root of unity, as an independent floating check."""
    w = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * w**k for k, c in enumerate(x.coeffs))


@pytest.fixture
def as_complex():
    return numeric
