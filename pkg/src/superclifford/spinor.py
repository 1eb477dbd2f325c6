"""Spinor representation of C_{2m} on a 2^m-dimensional supermodule.

Generators are Pauli strings with a sigma_3 chirality prefix,

    gamma_{2j-1} = s3 x ... x s3 x s1 x 1 x ... x 1
    gamma_{2j}   = s3 x ... x s3 x s2 x 1 x ... x 1

(j-1 leading sigma_3 factors), and the grading operator is s3^{x m}.
The prefixes make generators from different tensor factors anticommute.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .clifford import CliffordElement, BasisIndex, mask_elements
from .errors import HomogeneityError
from .gaussian import GaussianRational, I, ONE, ZERO

MAX_REP_GENERATORS = 12


class GradedMatrix:
    """Dense exact square matrix acting on a super vector space.

    ``grading`` is the diagonal of the grading operator (entries +1 / -1).
    A matrix is even when it only links basis vectors of equal grading and
    odd when it only links vectors of opposite grading.
    """

    __slots__ = ("rows", "grading")

    def __init__(self, rows: Sequence[Sequence], grading: Sequence[int]):
        rows = tuple(tuple(GaussianRational.coerce(v) for v in r) for r in rows)
        grading = tuple(grading)
        d = len(grading)
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError(f"expected a {d}x{d} matrix")
        if any(g not in (1, -1) for g in grading):
            raise ValueError("grading entries must be +1 or -1")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "grading", grading)

    @classmethod
    def _raw(cls, rows, grading):
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "grading", grading)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GradedMatrix is immutable")

    def __reduce__(self):
        return (GradedMatrix, (self.rows, self.grading))

    @property
    def dim(self) -> int:
        return len(self.grading)

    @classmethod
    def identity(cls, grading: Sequence[int]) -> "GradedMatrix":
        grading = tuple(grading)
        d = len(grading)
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)), grading)

    @classmethod
    def zero(cls, grading: Sequence[int]) -> "GradedMatrix":
        grading = tuple(grading)
        d = len(grading)
        return cls._raw(tuple((ZERO,) * d for _ in range(d)), grading)

    @classmethod
    def unit(cls, i: int, j: int, grading: Sequence[int]) -> "GradedMatrix":
        """Matrix unit E_ij (0-based)."""
        grading = tuple(grading)
        d = len(grading)
        return cls._raw(
            tuple(tuple(ONE if (r, c) == (i, j) else ZERO for c in range(d)) for r in range(d)), grading
        )

    def _check(self, other: "GradedMatrix") -> None:
        if self.grading != other.grading:
            raise ValueError("matrices act on differently graded spaces")

    @property
    def parity(self) -> int | None:
        even = odd = False
        g = self.grading
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v:
                    if g[i] == g[j]:
                        even = True
                    else:
                        odd = True
        if even and odd:
            return None
        return 1 if odd else 0

    def is_zero(self) -> bool:
        return not any(v for row in self.rows for v in row)

    def trace(self) -> GaussianRational:
        return sum((self.rows[i][i] for i in range(self.dim)), ZERO)

    def __add__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check(other)
        return GradedMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.grading
        )

    def __sub__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check(other)
        return GradedMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.grading
        )

    def __neg__(self):
        return GradedMatrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.grading)

    def scale(self, c) -> "GradedMatrix":
        c = GaussianRational.coerce(c)
        return GradedMatrix._raw(tuple(tuple(a * c for a in r) for r in self.rows), self.grading)

    def __matmul__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check(other)
        d = self.dim
        cols = other.rows
        out = []
        for r in self.rows:
            acc = [ZERO] * d
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(cols[k]):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return GradedMatrix._raw(tuple(out), self.grading)

    def __mul__(self, other):
        if isinstance(other, GradedMatrix):
            return self @ other
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.grading == other.grading and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.grading))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"GradedMatrix([{body}])"

    def kron(self, other: "GradedMatrix") -> "GradedMatrix":
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append(tuple(a * b for a in r for b in s))
        grading = tuple(g * h for g in self.grading for h in other.grading)
        return GradedMatrix._raw(tuple(rows), grading)

    def to_json(self) -> dict:
        d = self.dim
        head = {"m": d.bit_length() - 1} if d & (d - 1) == 0 else {"dim": d}
        return {**head, "rows": [[v.to_json() for v in r] for r in self.rows]}


_GRADE = (1, -1)


def pauli(k: int) -> GradedMatrix:
    if k == 1:
        rows = ((0, 1), (1, 0))
    elif k == 2:
        rows = ((0, -I), (I, 0))
    elif k == 3:
        rows = ((1, 0), (0, -1))
    else:
        raise ValueError(f"Pauli index must be 1, 2 or 3, got {k!r}")
    return GradedMatrix(rows, _GRADE)


def _kron_all(factors: Sequence[GradedMatrix]) -> GradedMatrix:
    out = factors[0]
    for f in factors[1:]:
        out = out.kron(f)
    return out


@lru_cache(maxsize=None)
def grading_operator(m: int) -> GradedMatrix:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return _kron_all([pauli(3)] * m)


def _half(n: int) -> int:
    if n % 2:
        raise ValueError(f"the spinor representation needs an even generator count, got n={n}")
    if not 2 <= n <= MAX_REP_GENERATORS:
        raise ValueError(f"n must be in 2..{MAX_REP_GENERATORS} for the matrix representation, got {n}")
    return n // 2


@lru_cache(maxsize=None)
def represent_generator(i: int, n: int) -> GradedMatrix:
    m = _half(n)
    if not 1 <= i <= n:
        raise ValueError(f"generator {i} outside 1..{n}")
    j = (i + 1) // 2
    eye = GradedMatrix.identity(_GRADE)
    factors = [pauli(3)] * (j - 1) + [pauli(1 if i % 2 else 2)] + [eye] * (m - j)
    return _kron_all(factors)


@lru_cache(maxsize=None)
def represent_basis(bits: int, n: int) -> GradedMatrix:
    """Image of gamma_I: ordered product of the generator matrices."""
    m = _half(n)
    out = GradedMatrix.identity(grading_operator(m).grading)
    for i in mask_elements(bits):
        out = out @ represent_generator(i, n)
    return out


def represent(x: CliffordElement) -> GradedMatrix:
    m = _half(x.n)
    out = GradedMatrix.zero(grading_operator(m).grading)
    for bits, c in x.terms.items():
        out = out + represent_basis(bits, x.n).scale(c)
    return out


def supertrace(a: GradedMatrix) -> GaussianRational:
    """Tr(a|V0) - Tr(a|V1) for even a, 0 for odd a."""
    p = a.parity
    if p is None:
        raise HomogeneityError("supertrace is defined on homogeneous endomorphisms only")
    if p == 1:
        return ZERO
    return sum((a.rows[i][i] * g for i, g in enumerate(a.grading)), ZERO)


def supertrace_closed_form(index, n: int) -> GaussianRational:
    """(2i)^m on the top monomial, 0 on every other basis monomial."""
    if n % 2:
        raise ValueError(f"closed-form supertrace needs an even generator count, got n={n}")
    bits = index.bits if isinstance(index, BasisIndex) else index
    if isinstance(index, BasisIndex) and index.n != n:
        raise ValueError(f"basis index for n={index.n} used with n={n}")
    if bits == (1 << n) - 1:
        return GaussianRational(0, 2) ** (n // 2)
    return ZERO


def element_supertrace(x: CliffordElement, via_matrix: bool = False) -> GaussianRational:
    """Linear extension of the supertrace to an arbitrary element of C_n."""
    if via_matrix:
        # split so each matrix handed to supertrace is homogeneous
        return supertrace(represent(x.even_part())) + supertrace(represent(x.odd_part()))
    return sum((c * supertrace_closed_form(k, x.n) for k, c in x.terms.items()), ZERO)
