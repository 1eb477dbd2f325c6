import sympy
import pytest

from superclifford import CliffordElement, GaussianRational


def g(n, *idx):
    return CliffordElement.basis(n, list(idx))


def to_sympy(x: GaussianRational):
    return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator)


def matrix_to_sympy(a):
    return sympy.Matrix([[to_sympy(v) for v in row] for row in a.rows])


@pytest.fixture
def pauli_oracle():
    """Independent sympy Pauli matrices for n = 2."""
    s1 = sympy.Matrix([[0, 1], [1, 0]])
    s2 = sympy.Matrix([[0, -sympy.I], [sympy.I, 0]])
    s3 = sympy.Matrix([[1, 0], [0, -1]])
    eye = sympy.eye(2)
    # gamma_I for n = 2, keyed by bitmask
    return {0: eye, 1: s1, 2: s2, 3: s1 * s2}
