"""Whole-algebra verification runs that produce `Report`s."""

from __future__ import annotations

import itertools
import random

from .clifford import CliffordElement, graded_commutator, mask_elements, mask_sign, multiply
from .nlie import BracketTable, GradedBasisSpec, Report
from .spinor import represent_basis, supertrace, supertrace_closed_form


def _basis_tuples(n: int, width: int, mode: str, count: int, seed: int):
    d = 1 << n
    if mode == "exhaustive":
        return itertools.product(range(d), repeat=width)
    if mode == "sampled":
        rng = random.Random(seed)
        return (tuple(rng.randrange(d) for _ in range(width)) for _ in range(count))
    raise ValueError(f"unknown mode {mode!r}")


def commutator_table(n: int) -> BracketTable:
    """Lazy table of the graded commutator on C_n, evaluated through the product."""

    def compute(t):
        a, b = (CliffordElement.basis(n, i) for i in t)
        return graded_commutator(a, b).terms

    return BracketTable(
        2,
        GradedBasisSpec.clifford(n).degrees,
        compute=compute,
        n=n,
        meta={"n": n, "m": n // 2 if n % 2 == 0 else None, "arity": 2, "convention": "full"},
    )


def check_associativity(n: int, mode: str = "exhaustive", count: int = 10_000, seed: int = 0) -> Report:
    rep = Report("assoc", info={"n": n, "mode": mode})
    for I, J, K in _basis_tuples(n, 3, mode, count, seed):
        rep.checked += 1
        a, b, c = (CliffordElement.basis(n, x) for x in (I, J, K))
        lhs = multiply(multiply(a, b), c)
        rhs = multiply(a, multiply(b, c))
        if lhs != rhs:
            rep.violations.append(
                {"tuple": [mask_elements(x) for x in (I, J, K)], "lhs": lhs.to_json(), "rhs": rhs.to_json()}
            )
    return rep


def check_representation_homomorphism(n: int, mode: str = "exhaustive", count: int = 10_000, seed: int = 0) -> Report:
    """rho(g_I) rho(g_J) = (-1)^sigma(I,J) rho(g_{I xor J}) on basis pairs."""
    rep = Report("hom", info={"n": n, "mode": mode})
    for I, J in _basis_tuples(n, 2, mode, count, seed):
        rep.checked += 1
        lhs = represent_basis(I, n) @ represent_basis(J, n)
        rhs = represent_basis(I ^ J, n)
        if mask_sign(I, J) < 0:
            rhs = -rhs
        if lhs != rhs:
            rep.violations.append(
                {"tuple": [mask_elements(I), mask_elements(J)], "lhs": lhs.to_json(), "rhs": rhs.to_json()}
            )
    return rep


def check_supertrace_table(n: int) -> Report:
    """Matrix supertrace of every basis monomial against the closed form."""
    rep = Report("strtable", info={"n": n})
    for I in range(1 << n):
        rep.checked += 1
        got = supertrace(represent_basis(I, n))
        want = supertrace_closed_form(I, n)
        if got != want:
            rep.violations.append({"tuple": [mask_elements(I)], "lhs": got.to_json(), "rhs": want.to_json()})
    return rep
