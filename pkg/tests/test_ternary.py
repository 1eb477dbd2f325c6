import itertools

import pytest

from superclifford import (
    AmbientMismatchError,
    BasisIndex,
    CliffordElement,
    GaussianRational,
    build_structure_table,
    check_degree_additivity,
    check_graded_filippov,
    check_graded_skew,
    graded_commutator,
    induced_bracket_supertrace,
    ternary_bracket,
    ternary_closed_form,
    verify_theorem14,
)
from superclifford.clifford import mask_f
from superclifford.spinor import represent, supertrace
from superclifford.ternary import basis_ternary, supertrace_form, ternary_table

from conftest import g

E2 = CliffordElement.unit(2)
FOUR_I = GaussianRational(0, 4)


def test_bracket_examples():
    assert ternary_bracket(g(2, 1), g(2, 1), g(2, 1, 2)) == E2.scale(FOUR_I)
    assert ternary_bracket(g(2, 1), g(2, 2), g(2, 1, 2)).is_zero()
    assert ternary_bracket(g(2, 1), g(2, 1, 2), g(2, 1)) == E2.scale(-FOUR_I)


@pytest.mark.parametrize("n", [2, 4])
def test_bracket_trivial_without_top_monomial(n):
    N = (1 << n) - 1
    for t in itertools.product(range(N), repeat=3):
        assert not basis_ternary(n, *t)


def test_bracket_errors():
    with pytest.raises(ValueError):
        ternary_bracket(g(3, 1), g(3, 1), g(3, 1))
    with pytest.raises(AmbientMismatchError):
        ternary_bracket(g(2, 1), g(4, 1), g(2, 1))


def test_bracket_matrix_oracle_by_hand():
    # Str(rho(g12)) * [g1, g1] computed from the explicit matrices
    st = supertrace(represent(g(2, 1, 2)))
    assert st == GaussianRational(0, 2)
    assert graded_commutator(g(2, 1), g(2, 1)).scale(st) == ternary_bracket(g(2, 1), g(2, 1), g(2, 1, 2))


def test_closed_form_examples():
    B = lambda s, n=2: BasisIndex.from_set(s, n)
    assert ternary_closed_form(B({1}), B({1}), B({1, 2}), 2) == E2.scale(FOUR_I)
    assert ternary_closed_form(B({1, 2}), B({1, 2}), B({1}), 2).is_zero()
    assert ternary_closed_form(B({1}), B({1, 2}), B({1}), 2) == E2.scale(-FOUR_I)
    assert ternary_closed_form(B({1}, 4), B({1}, 4), BasisIndex.full(4), 4) == CliffordElement.unit(4).scale(-8)
    assert ternary_closed_form(B({1}), B({1, 2}), B({1}), 2, convention="literal").is_zero()
    with pytest.raises(ValueError):
        ternary_closed_form(0, 0, 0, 3)
    with pytest.raises(ValueError):
        ternary_closed_form(0, 0, 3, 2, convention="sideways")


def test_structure_table_n2():
    table = build_structure_table(2)
    records = [t for t in table.domain()]
    assert len(records) == 64
    nonzero = {t for t in records if table.entry(t)}
    # exactly one argument is N = 3 and the other two are {1},{1} or {2},{2}
    want = {t for t in records if t.count(3) == 1 and sorted(x for x in t if x != 3) in ([1, 1], [2, 2])}
    assert nonzero == want
    assert table.entry((0, 0, 0)) == {}
    assert table.entry((1, 1, 3)) == {0: FOUR_I}


def test_structure_table_n4_entry_and_workers():
    table = build_structure_table(4)
    assert table.entry((1, 1, 15)) == {0: GaussianRational(-8)}
    parallel = build_structure_table(4, workers=2)
    assert parallel.entries == table.entries
    assert list(parallel.entries) == list(table.entries)
    with pytest.raises(ValueError):
        build_structure_table(10)


def test_structure_table_n8_is_cheap_and_sparse():
    table = build_structure_table(8)
    N = 255
    assert all(N in t for t in table.entries)
    assert table.entry((1, 1, N)) == {0: GaussianRational(16 * 2)}


@pytest.mark.parametrize("n, total", [(2, 64), (4, 4096)])
def test_theorem_check(n, total):
    rep = verify_theorem14(n)
    assert rep.passed
    assert rep.checked == total and rep.info["agree"] == total
    N = (1 << n) - 1
    # independent enumeration of where the literal reading must fail
    expected = []
    for t in itertools.product(range(1 << n), repeat=3):
        if t.count(N) == 1 and t[2] != N:
            a, b = [x for x in t if x != N]
            if mask_f(a, b):
                expected.append(t)
    assert rep.info["literal_discrepancy_count"] == len(expected) > 0
    if n == 2:
        assert [[1], [1, 2], [1]] in rep.info["literal_discrepancies"]


@pytest.mark.parametrize("n", [2, 4])
def test_literal_mutant_fails_exactly_on_slot_ij(n):
    rep = verify_theorem14(n, convention="literal")
    assert not rep.passed
    canonical = verify_theorem14(n)
    assert sorted(v["tuple"] for v in rep.violations) == sorted(canonical.info["literal_discrepancies"])


@pytest.mark.parametrize("n", [2, 4])
def test_degree_and_skew_exhaustive(n):
    assert check_degree_additivity(ternary_table(n)).passed
    assert check_graded_skew(ternary_table(n)).passed


def test_filippov_n2_exhaustive():
    rep = check_graded_filippov(ternary_table(2))
    assert rep.passed and rep.checked == 1024


def test_filippov_n4_sampled():
    rep = check_graded_filippov(ternary_table(4), "sampled", 10_000, 2024)
    assert rep.passed and rep.checked == 10_000


def test_filippov_n4_targeted():
    # random tuples rarely hit the top monomial; force it into every slot pattern
    N = 15
    table = ternary_table(4)
    import random

    rng = random.Random(5)
    from superclifford.nlie import _vec_add

    for _ in range(2000):
        tup = [rng.randrange(16) for _ in range(5)]
        for pos in rng.sample(range(5), rng.randint(1, 2)):
            tup[pos] = N
        ys, xs = tup[:2], tup[2:]
        deg = table.degrees
        yd = (deg[ys[0]] + deg[ys[1]]) & 1
        lhs = table.apply(ys + [table.entry(tuple(xs))])
        rhs, pre = {}, 0
        for k in range(3):
            _vec_add(rhs, table.apply(xs[:k] + [table.entry(tuple(ys) + (xs[k],))] + xs[k + 1:]), -1 if pre & yd else 1)
            pre ^= deg[xs[k]]
        assert lhs == rhs


@pytest.mark.parametrize("n", [2, 4])
def test_closed_form_and_matrix_supertrace_agree(n):
    for t in itertools.product(range(1 << n), repeat=3):
        assert basis_ternary(n, *t) == basis_ternary(n, *t, via_matrix=True)


@pytest.mark.parametrize("n", [2, 4])
def test_matches_generic_induced_bracket(n):
    st = supertrace_form(n)
    N = (1 << n) - 1
    for t in itertools.product(range(1 << n), repeat=3):
        if N not in t and sum(t) % 7:
            continue
        xs = [CliffordElement.basis(n, b) for b in t]
        assert ternary_bracket(*xs) == induced_bracket_supertrace(graded_commutator, st, xs)


def test_bracket_trilinear_on_sums():
    x = g(2, 1) + g(2, 2)
    y = g(2, 1).scale(3)
    z = g(2, 1, 2) + CliffordElement.unit(2)
    want = CliffordElement.zero(2)
    for a in (g(2, 1), g(2, 2)):
        for c in (g(2, 1, 2), CliffordElement.unit(2)):
            want = want + ternary_bracket(a, y, c)
    assert ternary_bracket(x, y, z) == want


def test_filippov_n4_exhaustive():
    rep = check_graded_filippov(ternary_table(4))
    assert rep.passed and rep.checked == 16**5
