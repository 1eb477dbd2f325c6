"""The super 3-Lie algebra induced on C_{2m} by the spinor supertrace.

On basis monomials

    [g_I, g_J, g_K] = Str(g_I)[g_J, g_K] - (-1)^{|I||J|} Str(g_J)[g_I, g_K]
                      + (-1)^{|K|(|I|+|J|)} Str(g_K)[g_I, g_J]

and only the top monomial g_N has nonzero supertrace, (2i)^m.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from .clifford import BasisIndex, CliffordElement, mask_f, mask_elements
from .gaussian import GaussianRational, ZERO
from .nlie import BracketTable, GradedBasisSpec, Report, TraceForm
from .spinor import MAX_REP_GENERATORS, represent_basis, supertrace, supertrace_closed_form

TABLE_GENERATORS = (2, 4, 6, 8)


def _even_n(n: int, cap: int = 16) -> int:
    if n % 2 or not 2 <= n <= cap:
        raise ValueError(f"the ternary algebra needs an even generator count in 2..{cap}, got n={n}")
    return n // 2


@lru_cache(maxsize=None)
def supertrace_form(n: int, via_matrix: bool = False) -> TraceForm:
    """Supertrace on the basis of C_n, from the closed form or the spinor matrices."""
    _even_n(n)
    if via_matrix:
        values = {b: supertrace(represent_basis(b, n)) for b in range(1 << n)}
    else:
        values = {b: supertrace_closed_form(b, n) for b in range(1 << n)}
    return TraceForm({b: v for b, v in values.items() if v})


def basis_ternary(n: int, I: int, J: int, K: int, via_matrix: bool = False) -> dict:
    """Coordinates of [g_I, g_J, g_K]."""
    st = supertrace_form(n, via_matrix).values
    pI, pJ, pK = I.bit_count() & 1, J.bit_count() & 1, K.bit_count() & 1
    out: dict = {}

    def add(bits: int, c: GaussianRational) -> None:
        s = out.get(bits, ZERO) + c
        if s:
            out[bits] = s
        else:
            out.pop(bits, None)

    if I in st:
        f = mask_f(J, K)
        if f:
            add(J ^ K, st[I] * f)
    if J in st:
        f = mask_f(I, K)
        if f:
            add(I ^ K, st[J] * (f if pI & pJ else -f))
    if K in st:
        f = mask_f(I, J)
        if f:
            add(I ^ J, st[K] * (-f if pK & (pI ^ pJ) else f))
    return out


def ternary_bracket(x: CliffordElement, y: CliffordElement, z: CliffordElement, via_matrix: bool = False) -> CliffordElement:
    """Induced ternary bracket, extended trilinearly over basis terms.

    ``via_matrix=True`` takes supertraces from the explicit spinor matrices
    instead of the closed form.
    """
    n = x.n
    if y.n != n or z.n != n:
        from .errors import AmbientMismatchError

        raise AmbientMismatchError(f"ambient generator counts differ: {x.n}, {y.n}, {z.n}")
    _even_n(n, MAX_REP_GENERATORS)
    acc: dict = {}
    for (I, a), (J, b), (K, c) in itertools.product(x.terms.items(), y.terms.items(), z.terms.items()):
        v = basis_ternary(n, I, J, K, via_matrix)
        if v:
            coeff = a * b * c
            for k, w in v.items():
                acc[k] = acc.get(k, ZERO) + w * coeff
    return CliffordElement(n, acc)


def ternary_closed_form(I, J, K, n: int, convention: str = "canonical-K") -> CliffordElement:
    """Structure constants of the ternary algebra without evaluating supertraces term by term.

    Nonzero only when exactly one argument is the top monomial N.  With the
    ``canonical-K`` convention an N in the first or second slot is moved to
    the third by graded transpositions; ``literal`` treats those cases as 0.
    """
    m = _even_n(n)
    I, J, K = (x.bits if isinstance(x, BasisIndex) else x for x in (I, J, K))
    N = (1 << n) - 1
    zero = CliffordElement.zero(n)
    if (I == N) + (J == N) + (K == N) != 1:
        return zero
    if convention == "literal":
        if K != N:
            return zero
        sign = 1
    elif convention == "canonical-K":
        # |N| = n is even, so every transposition past N costs exactly -1
        args = [I, J, K]
        pos = args.index(N)
        sign = -1 if (2 - pos) % 2 else 1
        args.pop(pos)
        I, J = args
    else:
        raise ValueError(f"unknown convention {convention!r}")
    f = mask_f(I, J)
    if not f:
        return zero
    c = GaussianRational(0, 2) ** m * (f * sign)
    return CliffordElement(n, {I ^ J: c})


def ternary_table(n: int, via_matrix: bool = False) -> BracketTable:
    """Lazily evaluated full table of the ternary bracket (every ordered triple computed directly)."""
    _even_n(n, MAX_REP_GENERATORS)
    return BracketTable(
        3,
        GradedBasisSpec.clifford(n).degrees,
        compute=lambda t: basis_ternary(n, *t, via_matrix=via_matrix),
        n=n,
        meta={"n": n, "m": n // 2, "arity": 3, "convention": "canonical-K"},
    )


def _table_chunk(args) -> list:
    n, firsts = args
    support = set(supertrace_form(n).values)
    d = 1 << n
    out = []
    for I in firsts:
        for J in range(I, d):
            for K in range(J, d):
                # a triple without a supertrace-carrying argument brackets to zero
                if I in support or J in support or K in support:
                    v = basis_ternary(n, I, J, K)
                    if v:
                        out.append(((I, J, K), v))
    return out


def build_structure_table(n: int, workers: int = 1) -> BracketTable:
    """Canonical (nondecreasing-triple) structure constants; absent entries are zero."""
    if n not in TABLE_GENERATORS:
        raise ValueError(f"structure tables are built for n in {TABLE_GENERATORS}, got {n}")
    d = 1 << n
    if workers <= 1:
        chunks = [_table_chunk((n, range(d)))]
    else:
        parts = [(n, range(w, d, workers)) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_table_chunk, parts))
    entries = dict(sorted(item for chunk in chunks for item in chunk))
    return BracketTable(
        3,
        GradedBasisSpec.clifford(n).degrees,
        entries,
        canonical=True,
        n=n,
        meta={"n": n, "m": n // 2, "arity": 3, "convention": "canonical-K"},
    )


def _triple_json(t) -> list:
    return [mask_elements(b) for b in t]


def verify_theorem14(n: int, convention: str = "canonical-K") -> Report:
    """Compare the bracket with its closed form on every basis triple.

    The report also lists the triples on which the literal reading of the
    closed form (zero unless N sits in the last slot) disagrees.
    """
    if n not in (2, 4):
        raise ValueError(f"theorem check runs for n in (2, 4), got {n}")
    rep = Report("theorem14", info={"n": n, "convention": convention})
    literal = []
    agree = 0
    for t in itertools.product(range(1 << n), repeat=3):
        rep.checked += 1
        direct = CliffordElement(n, basis_ternary(n, *t))
        closed = ternary_closed_form(*t, n, convention=convention)
        if direct == closed:
            agree += 1
        else:
            rep.violations.append({"tuple": _triple_json(t), "lhs": direct.to_json(), "rhs": closed.to_json()})
        if direct != ternary_closed_form(*t, n, convention="literal"):
            literal.append(_triple_json(t))
    rep.info["agree"] = agree
    rep.info["literal_discrepancy_count"] = len(literal)
    rep.info["literal_discrepancies"] = literal
    return rep
