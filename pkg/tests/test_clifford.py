import itertools

import pytest
from hypothesis import given, strategies as st

from superclifford import (
    AmbientMismatchError,
    BasisIndex,
    CliffordElement,
    GaussianRational,
    basis_product,
    degree,
    f_structure,
    graded_commutator,
    multiply,
    sigma_count,
)
from superclifford.clifford import mask_elements, mask_f, mask_sigma

from conftest import g, to_sympy


def B(s, n):
    return BasisIndex.from_set(s, n)


def sigma_oracle(I, J):
    return sum(1 for i in I for j in J if i > j)


# ---- sigma_count


def test_sigma_examples():
    assert sigma_count(B({1, 2}, 2), B({1}, 2)) == 1
    assert sigma_count(B({1, 2, 3}, 3), B(set(), 3)) == 0
    assert sigma_count(B({1}, 2), B({2}, 2)) == 0


def test_sigma_matches_enumeration():
    n = 5
    for I, J in itertools.product(range(1 << n), repeat=2):
        assert mask_sigma(I, J) == sigma_oracle(mask_elements(I), mask_elements(J))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        sigma_count(B({1}, 2), B({1}, 3))
    with pytest.raises(AmbientMismatchError):
        basis_product(B({1}, 2), B({1}, 3))
    with pytest.raises(AmbientMismatchError):
        f_structure(B({1}, 2), B({1}, 3))
    with pytest.raises(AmbientMismatchError):
        multiply(g(2, 1), g(3, 1))
    with pytest.raises(AmbientMismatchError):
        graded_commutator(g(2, 1), g(3, 1))


def test_basis_index_bounds():
    with pytest.raises(ValueError):
        BasisIndex(4, 2)
    with pytest.raises(ValueError):
        BasisIndex(0, 17)
    assert BasisIndex.full(3).elements == [1, 2, 3]
    assert BasisIndex.from_set([3, 1], 3).size == 2


# ---- products, checked against sympy Pauli matrices


def test_basis_product_examples():
    assert basis_product(B({1}, 2), B({2}, 2)) == (1, B({1, 2}, 2))
    assert basis_product(B(set(), 2), B({1, 2}, 2)) == (1, B({1, 2}, 2))
    assert basis_product(B({1, 2}, 2), B({1}, 2)) == (-1, B({2}, 2))


def test_basis_product_against_pauli(pauli_oracle):
    for I, J in itertools.product(range(4), repeat=2):
        sign, K = basis_product(BasisIndex(I, 2), BasisIndex(J, 2))
        assert pauli_oracle[I] * pauli_oracle[J] == sign * pauli_oracle[K.bits]


def test_multiply_examples():
    e = CliffordElement.unit(2)
    assert multiply(g(2, 1), g(2, 1)) == e
    x = g(2, 1) * GaussianRational(3, -1) + g(2, 1, 2)
    assert multiply(e, x) == x
    assert multiply(g(2, 1, 2), g(2, 1)) == -g(2, 2)


# ---- structure function


def test_f_examples():
    assert f_structure(B({1}, 2), B({1, 2}, 2)) == 2
    assert f_structure(B({2}, 2), B({1, 2}, 2)) == -2
    for I in range(16):
        assert f_structure(BasisIndex(I, 4), BasisIndex(0, 4)) == 0
        for J in range(16):
            if not (I & J).bit_count() & 1:
                assert mask_f(I, J) == 0


def test_commutator_examples():
    e = CliffordElement.unit(2)
    assert graded_commutator(g(2, 1), g(2, 1)) == 2 * e
    assert graded_commutator(g(2, 1), g(2, 2)) == CliffordElement.zero(2)
    for I in range(16):
        assert graded_commutator(CliffordElement.basis(4, I), CliffordElement.unit(4)).is_zero()


def test_commutator_against_pauli(pauli_oracle):
    for I, J in itertools.product(range(4), repeat=2):
        a, b = pauli_oracle[I], pauli_oracle[J]
        sign = -1 if (I.bit_count() * J.bit_count()) % 2 else 1
        want = a * b - sign * b * a
        got = graded_commutator(CliffordElement.basis(2, I), CliffordElement.basis(2, J))
        mat = sum((to_sympy(c) * pauli_oracle[k] for k, c in got.terms.items()), 0 * a)
        assert mat == want


def test_commutator_inhomogeneous_is_bilinear():
    n = 3
    x = g(n, 1) + g(n, 1, 2) + CliffordElement.unit(n)
    y = g(n, 2, 3) - g(n, 3)
    want = CliffordElement.zero(n)
    for a in (g(n, 1), g(n, 1, 2), CliffordElement.unit(n)):
        for b in (g(n, 2, 3), -g(n, 3)):
            want = want + graded_commutator(a, b)
    assert graded_commutator(x, y) == want


def test_degree_examples():
    assert degree(g(2, 1, 2)) == "even"
    assert degree(g(2, 1) + g(2, 2)) == "odd"
    assert degree(CliffordElement.unit(2) + g(2, 1)) == "mixed"
    assert degree(CliffordElement.zero(2)) == "even"


# ---- canonical form


def test_zero_pruning_and_equality():
    x = g(3, 1) + g(3, 2) - g(3, 1)
    assert x.terms.keys() == {0b010}
    assert x == g(3, 2)
    assert (g(3, 1) - g(3, 1)) == CliffordElement.zero(3)
    assert CliffordElement(2, {1: 0}).is_zero()
    assert hash(x) == hash(g(3, 2))
    with pytest.raises(ValueError):
        CliffordElement(2, {4: 1})


def test_generator_product_orders():
    assert CliffordElement.generator_product(3, [2, 1]) == -g(3, 1, 2)
    assert CliffordElement.generator_product(3, [3, 1, 3]) == -g(3, 1)


def test_json_round_trip_and_order():
    x = g(3, 2, 3) * GaussianRational(1, 2) + g(3, 1) * 5
    js = x.to_json()
    assert [t["I"] for t in js["terms"]] == [[1], [2, 3]]
    assert js["terms"][1] == {"I": [2, 3], "re": "1/1", "im": "2/1"}
    assert CliffordElement.from_json(js) == x


# ---- exhaustive invariants


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_associativity_exhaustive(n):
    basis = [CliffordElement.basis(n, b) for b in range(1 << n)]
    for a, b, c in itertools.product(basis, repeat=3):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.parametrize("n", range(1, 9))
def test_pairwise_identities_exhaustive(n):
    for I, J in itertools.product(range(1 << n), repeat=2):
        pI, pJ = I.bit_count(), J.bit_count()
        # degree additivity
        assert (I ^ J).bit_count() % 2 == (pI + pJ) % 2
        # sign reciprocity with sigma(J, I) in the last slot
        assert (mask_sigma(I, J) + mask_sigma(J, I)) % 2 == (pI * pJ - (I & J).bit_count()) % 2
        # graded antisymmetry of f
        assert mask_f(J, I) == -(-1) ** (pI * pJ) * mask_f(I, J)


@pytest.mark.parametrize("n", range(1, 9))
def test_clifford_relations(n):
    e = CliffordElement.unit(n)
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        s = multiply(g(n, i), g(n, j)) + multiply(g(n, j), g(n, i))
        assert s == (2 * e if i == j else CliffordElement.zero(n))


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_commutator_matches_structure_function(n):
    pairs = itertools.product(range(1 << n), repeat=2)
    if n > 5:
        pairs = itertools.islice(pairs, 0, None, 97)
    for I, J in pairs:
        got = graded_commutator(CliffordElement.basis(n, I), CliffordElement.basis(n, J))
        assert got == CliffordElement(n, {I ^ J: mask_f(I, J)})


small = st.fractions(max_denominator=7).filter(lambda q: abs(q) < 20)


@st.composite
def elements(draw, n=3):
    keys = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=5))
    return CliffordElement(n, {k: GaussianRational(draw(small), draw(small)) for k in keys})


@given(elements(), elements(), elements())
def test_multiply_bilinear_and_associative(x, y, z):
    assert multiply(x, y + z) == multiply(x, y) + multiply(x, z)
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(elements(), elements())
def test_commutator_graded_antisymmetry_homogeneous(x, y):
    for a in (x.even_part(), x.odd_part()):
        for b in (y.even_part(), y.odd_part()):
            sign = -1 if a.parity * b.parity else 1
            assert graded_commutator(a, b) == -(graded_commutator(b, a).scale(sign))
