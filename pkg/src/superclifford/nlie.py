"""Graded n-ary brackets: Koszul signs, endomorphism and induced brackets, axiom checkers.

Brackets appear in two forms.  Element-level functions (`endo_n_bracket`,
`induced_bracket_supertrace`, `classical_induced_bracket`) work on anything
supporting ``+``, ``-`` and ``.scale``, i.e. `CliffordElement` and
`GradedMatrix`.  Verifiers consume a `BracketTable`: structure constants on
a finite graded basis, with outputs stored as sparse coordinate vectors
``{basis_index: GaussianRational}``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .clifford import CliffordElement, mask_elements, require_homogeneous
from .errors import HomogeneityError
from .gaussian import GaussianRational, ZERO

Vector = dict  # basis index -> nonzero GaussianRational


# ---------------------------------------------------------------- signs


def prefix_degree(degrees: Sequence[int], k: int) -> int:
    """Parity of the first ``k`` degrees."""
    if not 0 <= k <= len(degrees):
        raise ValueError(f"prefix length {k} out of range 0..{len(degrees)}")
    return sum(degrees[:k]) & 1


def _check_permutation(permutation: Sequence[int]) -> None:
    if sorted(permutation) != list(range(len(permutation))):
        raise ValueError(f"not a permutation of 0..{len(permutation) - 1}: {list(permutation)}")


def permutation_parity(permutation: Sequence[int]) -> int:
    _check_permutation(permutation)
    inv = 0
    for a, b in itertools.combinations(permutation, 2):
        if a > b:
            inv += 1
    return inv & 1


def koszul_sign(degrees: Sequence[int], permutation: Sequence[int]) -> int:
    """Parity of the sign picked up by reordering graded vectors.

    ``permutation`` lists the original positions in their new order.  Each
    element contributes its degree times the degrees of the larger-index
    elements that now precede it.
    """
    if len(permutation) != len(degrees):
        raise ValueError("permutation and degree list differ in length")
    _check_permutation(permutation)
    total = 0
    for k, ik in enumerate(permutation):
        if degrees[ik]:
            total += sum(degrees[il] for il in permutation[:k] if il > ik)
    return total & 1


# ---------------------------------------------------------------- element-level brackets


def _zero_like(x):
    return x.scale(0)


def _homogeneous_parities(elements) -> list[int]:
    return [require_homogeneous(x) for x in elements]


def endo_n_bracket(matrices: Sequence) -> object:
    """Graded antisymmetrised composition of ``r`` homogeneous endomorphisms.

    Sum over all permutations of (-1)^(|sigma| + koszul) a_{i1} o ... o a_{ir}.
    """
    if not matrices:
        raise ValueError("need at least one endomorphism")
    grading = matrices[0].grading
    for a in matrices:
        if a.grading != grading:
            raise ValueError("endomorphisms act on differently graded spaces")
    degrees = _homogeneous_parities(matrices)
    out = _zero_like(matrices[0])
    for perm in itertools.permutations(range(len(matrices))):
        prod = matrices[perm[0]]
        for i in perm[1:]:
            prod = prod @ matrices[i]
        if (permutation_parity(perm) + koszul_sign(degrees, perm)) & 1:
            out = out - prod
        else:
            out = out + prod
    return out


@dataclass(frozen=True)
class GradedBasisSpec:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("a graded basis needs at least one vector")
        if any(d not in (0, 1) for d in self.degrees):
            raise ValueError("degrees must be 0 or 1")

    def __len__(self):
        return len(self.degrees)

    @classmethod
    def clifford(cls, n: int) -> "GradedBasisSpec":
        return cls(tuple(b.bit_count() & 1 for b in range(1 << n)))


@dataclass(frozen=True)
class TraceForm:
    """Linear form given by its values on basis vectors (absent means 0)."""

    values: Mapping[int, GaussianRational]

    def __call__(self, x) -> GaussianRational:
        if isinstance(x, int):
            return self.values.get(x, ZERO)
        if isinstance(x, CliffordElement):
            return sum((c * self.values[k] for k, c in x.terms.items() if k in self.values), ZERO)
        if isinstance(x, Mapping):
            return sum((c * self.values[k] for k, c in x.items() if k in self.values), ZERO)
        raise TypeError(f"cannot evaluate trace form on {type(x).__name__}")

    def support(self) -> list[int]:
        return sorted(k for k, v in self.values.items() if v)


def induced_bracket_supertrace(base_bracket: Callable, trace: Callable, elements: Sequence):
    """(r+1)-ary bracket from an r-ary one weighted by a trace form.

    sum_k (-1)^(k-1) (-1)^(|x_k| |x|_{k-1}) trace(x_k) [x_1, ..., ^x_k, ..., x_{r+1}]
    """
    if len(elements) < 2:
        raise ValueError("the induced bracket needs at least two arguments")
    parities = _homogeneous_parities(elements)
    out = _zero_like(elements[0])
    if any(x.is_zero() for x in elements):
        return out
    for k, x in enumerate(elements):
        t = trace(x)
        if not t:
            continue
        sign = -1 if (k + parities[k] * prefix_degree(parities, k)) & 1 else 1
        rest = list(elements[:k]) + list(elements[k + 1:])
        out = out + base_bracket(*rest).scale(t * sign)
    return out


def classical_induced_bracket(lie_bracket: Callable, phi: Callable, elements: Sequence):
    """(k+2)-ary bracket from a Lie bracket and a skew k-form.

    Sums over splittings of the arguments into an increasing k-subset fed to
    ``phi`` and an increasing pair fed to the Lie bracket, signed by the
    parity of the resulting permutation.
    """
    k = len(elements) - 2
    if k < 1:
        raise ValueError("need at least three arguments (k >= 1)")
    out = _zero_like(elements[0])
    positions = range(k + 2)
    for subset in itertools.combinations(positions, k):
        a, b = [p for p in positions if p not in subset]
        coeff = phi(*(elements[p] for p in subset))
        if not coeff:
            continue
        if permutation_parity(subset + (a, b)):
            coeff = -coeff
        out = out + lie_bracket(elements[a], elements[b]).scale(coeff)
    return out


# ---------------------------------------------------------------- tables


def _vec_add(acc: dict, v: Mapping, c) -> None:
    for k, x in v.items():
        s = acc.get(k, ZERO) + x * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def _vec_clean(v: Mapping) -> dict:
    return {k: GaussianRational.coerce(x) for k, x in v.items() if x}


@dataclass
class BracketTable:
    """Structure constants of an r-ary bracket on a finite graded basis.

    Missing entries are produced by ``compute`` (and cached) when it is set,
    otherwise they are zero.  With ``canonical=True`` only nondecreasing
    tuples are stored; other tuples are sorted by adjacent transpositions,
    each contributing -(-1)^(|a||b|).
    """

    arity: int
    degrees: tuple[int, ...]
    entries: dict = field(default_factory=dict)
    compute: Callable[[tuple], Mapping] | None = None
    canonical: bool = False
    n: int | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError("bracket arity must be >= 2")
        GradedBasisSpec(tuple(self.degrees))
        self.degrees = tuple(self.degrees)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def canonicalize(self, tup: tuple) -> tuple[int, tuple]:
        """Sign s and sorted tuple with bracket(tup) = s * bracket(sorted)."""
        t = list(tup)
        sign = 1
        deg = self.degrees
        for end in range(len(t) - 1, 0, -1):
            for k in range(end):
                if t[k] > t[k + 1]:
                    if not (deg[t[k]] & deg[t[k + 1]]):
                        sign = -sign
                    t[k], t[k + 1] = t[k + 1], t[k]
        return sign, tuple(t)

    def __call__(self, *tup: int) -> dict:
        return self.entry(tup)

    def entry(self, tup: tuple) -> dict:
        tup = tuple(tup)
        if len(tup) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(tup)}")
        sign = 1
        key = tup
        if key not in self.entries and self.canonical:
            sign, key = self.canonicalize(tup)
        v = self.entries.get(key)
        if v is None:
            if self.compute is None:
                return {}
            v = _vec_clean(self.compute(key))
            self.entries[key] = v
        if sign < 0:
            return {k: -x for k, x in v.items()}
        return v

    def apply(self, args: Sequence) -> dict:
        """Multilinear evaluation; each argument is a basis index or a coordinate vector."""
        expanded = [[(a, 1)] if isinstance(a, int) else list(a.items()) for a in args]
        out: dict = {}
        for combo in itertools.product(*expanded):
            c = 1
            for _, x in combo:
                c = x * c
            _vec_add(out, self.entry(tuple(i for i, _ in combo)), c)
        return out

    def domain(self) -> Iterator[tuple]:
        return itertools.product(range(self.dim), repeat=self.arity)

    def canonical_domain(self) -> Iterator[tuple]:
        return itertools.combinations_with_replacement(range(self.dim), self.arity)

    def materialize(self) -> "BracketTable":
        for tup in self.domain():
            self.entry(tup)
        return self

    def with_entry(self, tup: tuple, value: Mapping) -> "BracketTable":
        """Copy with one entry overridden; used to build mutants."""
        entries = dict(self.entries)
        entries[tuple(tup)] = _vec_clean(value)
        return BracketTable(self.arity, self.degrees, entries, self.compute, self.canonical, self.n, dict(self.meta))

    # interchange

    def format_input(self, idx: int):
        return mask_elements(idx) if self.n is not None else idx

    def format_output(self, v: Mapping) -> dict:
        if self.n is not None:
            return CliffordElement(self.n, v).to_json()
        return {"terms": [{"index": k, **v[k].to_json()} for k in sorted(v)]}

    def to_record(self, tup: tuple) -> dict:
        return {"inputs": [self.format_input(i) for i in tup], "output": self.format_output(self.entry(tup))}


# ---------------------------------------------------------------- reports


@dataclass
class Report:
    check: str
    checked: int = 0
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "passed": self.passed,
            "checked": self.checked,
            "violations": sorted(self.violations, key=lambda v: _sort_key(v["tuple"])),
            **self.info,
        }


def _sort_key(t):
    return [x if isinstance(x, int) else (len(x), x) for x in t] if isinstance(t, list) else t


def _tuples(table_dim: int, width: int, mode: str, count: int, seed: int) -> Iterable[tuple]:
    if mode == "exhaustive":
        return itertools.product(range(table_dim), repeat=width)
    if mode == "sampled":
        rng = random.Random(seed)
        return (tuple(rng.randrange(table_dim) for _ in range(width)) for _ in range(count))
    raise ValueError(f"unknown mode {mode!r}")


def check_degree_additivity(table: BracketTable, mode: str = "exhaustive", count: int = 10_000, seed: int = 0) -> Report:
    rep = Report("degree")
    deg = table.degrees
    for tup in _tuples(table.dim, table.arity, mode, count, seed):
        rep.checked += 1
        want = sum(deg[i] for i in tup) & 1
        out = table.entry(tup)
        bad = sorted(k for k in out if deg[k] != want)
        if bad:
            rep.violations.append(
                {
                    "tuple": [table.format_input(i) for i in tup],
                    "lhs": table.format_output(out),
                    "rhs": {"parity": want},
                }
            )
    return rep


def check_graded_skew(table: BracketTable, mode: str = "exhaustive", count: int = 10_000, seed: int = 0) -> Report:
    rep = Report("skew")
    deg = table.degrees
    for tup in _tuples(table.dim, table.arity, mode, count, seed):
        rep.checked += 1
        base = table.entry(tup)
        for k in range(table.arity - 1):
            a, b = tup[k], tup[k + 1]
            swapped = tup[:k] + (b, a) + tup[k + 2:]
            sign = 1 if deg[a] & deg[b] else -1
            want = {i: x * sign for i, x in base.items()}
            got = table.entry(swapped)
            if got != want:
                rep.violations.append(
                    {
                        "tuple": [table.format_input(i) for i in tup],
                        "transposition": k,
                        "lhs": table.format_output(got),
                        "rhs": table.format_output(want),
                    }
                )
    return rep


def check_graded_filippov(table: BracketTable, mode: str = "exhaustive", count: int = 10_000, seed: int = 0) -> Report:
    """Check that y-brackets act as graded derivations of the bracket.

    Domain tuples are (y_1..y_{r-1}, x_1..x_r).  Compares
    [y, [x_1..x_r]] with sum_k (-1)^(|x|_{k-1} |y|) [x_1..[y, x_k]..x_r].
    """
    r = table.arity
    deg = table.degrees
    rep = Report("filippov", info={"arity": r, "mode": mode})
    if mode == "sampled":
        rep.info["seed"] = seed
    for tup in _tuples(table.dim, 2 * r - 1, mode, count, seed):
        rep.checked += 1
        ys, xs = list(tup[: r - 1]), list(tup[r - 1:])
        ydeg = sum(deg[i] for i in ys) & 1
        lhs = table.apply(ys + [table.entry(tuple(xs))])
        rhs: dict = {}
        xprefix = 0
        for k in range(r):
            inner = table.entry(tuple(ys) + (xs[k],))
            if inner:
                term = table.apply(xs[:k] + [inner] + xs[k + 1:])
                _vec_add(rhs, term, -1 if xprefix & ydeg else 1)
            xprefix ^= deg[xs[k]]
        if lhs != rhs:
            rep.violations.append(
                {
                    "tuple": [table.format_input(i) for i in tup],
                    "lhs": table.format_output(lhs),
                    "rhs": table.format_output(rhs),
                }
            )
    return rep


def check_phi_condition(phi: Callable, lie_bracket: Callable, basis: Sequence, k: int = 1) -> Report:
    """Check sum_m phi(x_1, .., [x_m, y], .., x_k) = 0 over all basis tuples."""
    rep = Report("phi-condition", info={"k": k})
    d = len(basis)
    for tup in itertools.product(range(d), repeat=k + 1):
        rep.checked += 1
        xs = [basis[i] for i in tup[:k]]
        y = basis[tup[k]]
        total = ZERO
        for m in range(k):
            args = xs[:m] + [lie_bracket(xs[m], y)] + xs[m + 1:]
            total = total + GaussianRational.coerce(phi(*args))
        if total:
            rep.violations.append({"tuple": list(tup), "lhs": total.to_json(), "rhs": ZERO.to_json()})
    return rep


# ---------------------------------------------------------------- matrix-algebra tables


def matrix_units(grading: Sequence[int]) -> list:
    """Row-major matrix units E_ij; coordinates in this basis are the entries."""
    from .spinor import GradedMatrix

    d = len(grading)
    return [GradedMatrix.unit(i, j, grading) for i in range(d) for j in range(d)]


def matrix_coordinates(a) -> dict:
    d = a.dim
    return {i * d + j: v for i, row in enumerate(a.rows) for j, v in enumerate(row) if v}


def matrix_unit_table(grading: Sequence[int], arity: int, bracket: Callable) -> BracketTable:
    """Lazy table for ``bracket`` on End(V) in the matrix-unit basis."""
    basis = matrix_units(grading)
    degrees = tuple(b.parity for b in basis)
    return BracketTable(
        arity,
        degrees,
        compute=lambda tup: matrix_coordinates(bracket(*(basis[i] for i in tup))),
    )


def commutator(a, b):
    """Graded commutator of homogeneous elements supporting ``@``/``*``."""
    pa, pb = require_homogeneous(a), require_homogeneous(b)
    ab, ba = a * b, b * a
    return ab + ba if pa & pb else ab - ba


def lemma_probe(even_dim: int = 1, odd_dim: int = 1, arity: int = 3, mode: str = "exhaustive",
                count: int = 10_000, seed: int = 0) -> Report:
    """Graded Filippov check of the r-ary endomorphism bracket on End(V), V = (p|q)."""
    grading = (1,) * even_dim + (-1,) * odd_dim
    table = matrix_unit_table(grading, arity, lambda *a: endo_n_bracket(list(a)))
    rep = check_graded_filippov(table, mode, count, seed)
    rep.check = "endo-bracket-filippov"
    rep.info.update({"superdimension": [even_dim, odd_dim], "basis": "row-major matrix units"})
    return rep


__all__ = [
    "BracketTable",
    "GradedBasisSpec",
    "HomogeneityError",
    "Report",
    "TraceForm",
    "check_degree_additivity",
    "check_graded_filippov",
    "check_graded_skew",
    "check_phi_condition",
    "classical_induced_bracket",
    "commutator",
    "endo_n_bracket",
    "induced_bracket_supertrace",
    "koszul_sign",
    "lemma_probe",
    "matrix_unit_table",
    "permutation_parity",
    "prefix_degree",
]
