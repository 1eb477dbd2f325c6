"""The Clifford superalgebra C_n on the subset basis.

A basis monomial gamma_I is addressed by a bitmask: generator ``i`` (1-based)
lives at bit ``i - 1``.  Products follow

    gamma_I gamma_J = (-1)**sigma(I, J) gamma_{I xor J}

where sigma(I, J) counts pairs (i in I, j in J) with i > j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import AmbientMismatchError, HomogeneityError
from .gaussian import GaussianRational, ONE, ZERO

MAX_GENERATORS = 16


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_GENERATORS:
        raise ValueError(f"generator count must be in 1..{MAX_GENERATORS}, got {n!r}")


@dataclass(frozen=True, order=True)
class BasisIndex:
    """A subset I of {1..n}, stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bitmask {self.bits} out of range for n={self.n}")

    @classmethod
    def from_set(cls, elements: Iterable[int], n: int) -> "BasisIndex":
        bits = 0
        for i in elements:
            if not 1 <= i <= n:
                raise AmbientMismatchError(f"generator {i} outside 1..{n}")
            bits |= 1 << (i - 1)
        return cls(bits, n)

    @classmethod
    def full(cls, n: int) -> "BasisIndex":
        return cls((1 << n) - 1, n)

    @classmethod
    def empty(cls, n: int) -> "BasisIndex":
        return cls(0, n)

    @property
    def elements(self) -> list[int]:
        return mask_elements(self.bits)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def parity(self) -> int:
        return self.bits.bit_count() & 1

    def __repr__(self):
        return f"BasisIndex({self.elements}, n={self.n})"


def mask_elements(bits: int) -> list[int]:
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


# Fast paths on raw masks; the public functions below validate and delegate.

def mask_sigma(I: int, J: int) -> int:
    s = 0
    j = 0
    while J >> j:
        if (J >> j) & 1:
            s += (I >> (j + 1)).bit_count()
        j += 1
    return s


def mask_sign(I: int, J: int) -> int:
    return -1 if mask_sigma(I, J) & 1 else 1


def mask_f(I: int, J: int) -> int:
    if not (I & J).bit_count() & 1:
        return 0
    return 2 * mask_sign(I, J)


def _same_ambient(a, b) -> int:
    if a.n != b.n:
        raise AmbientMismatchError(f"ambient generator counts differ: {a.n} vs {b.n}")
    return a.n


def sigma_count(I: BasisIndex, J: BasisIndex) -> int:
    """Number of pairs (i, j) with i in I, j in J and i > j."""
    _same_ambient(I, J)
    return mask_sigma(I.bits, J.bits)


def basis_product(I: BasisIndex, J: BasisIndex) -> tuple[int, BasisIndex]:
    n = _same_ambient(I, J)
    return mask_sign(I.bits, J.bits), BasisIndex(I.bits ^ J.bits, n)


def f_structure(I: BasisIndex, J: BasisIndex) -> int:
    """Structure function with [gamma_I, gamma_J] = f(I, J) gamma_{I xor J}; one of -2, 0, 2."""
    _same_ambient(I, J)
    return mask_f(I.bits, J.bits)


class CliffordElement:
    """Sparse exact linear combination of basis monomials of C_n.

    ``terms`` maps bitmasks to nonzero `GaussianRational` coefficients.
    Instances are immutable and compare equal iff their term maps agree.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[int, object] | None = None):
        _check_n(n)
        clean: dict[int, GaussianRational] = {}
        top = 1 << n
        for k, v in (terms or {}).items():
            if isinstance(k, BasisIndex):
                if k.n != n:
                    raise AmbientMismatchError(f"basis index for n={k.n} in element with n={n}")
                k = k.bits
            if not 0 <= k < top:
                raise ValueError(f"bitmask {k} out of range for n={n}")
            v = GaussianRational.coerce(v)
            if v:
                clean[k] = v
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, n: int, terms: dict[int, GaussianRational]) -> "CliffordElement":
        # terms already canonical
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CliffordElement is immutable")

    def __reduce__(self):
        return (CliffordElement, (self.n, self.terms))

    # constructors

    @classmethod
    def zero(cls, n: int) -> "CliffordElement":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "CliffordElement":
        return cls(n, {0: ONE})

    @classmethod
    def basis(cls, n: int, index, coeff=1) -> "CliffordElement":
        """gamma_I for an int mask, a `BasisIndex`, or an iterable of generator numbers."""
        if isinstance(index, BasisIndex):
            if index.n != n:
                raise AmbientMismatchError(f"basis index for n={index.n} in element with n={n}")
            bits = index.bits
        elif isinstance(index, int):
            bits = index
        else:
            bits = BasisIndex.from_set(index, n).bits
        return cls(n, {bits: coeff})

    @classmethod
    def generator_product(cls, n: int, indices: Iterable[int]) -> "CliffordElement":
        """gamma_{i1} gamma_{i2} ... in the given order (repeats allowed)."""
        out = cls.unit(n)
        for i in indices:
            out = out * cls.basis(n, [i])
        return out

    # structure

    @property
    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements (zero counts as even), None if mixed."""
        parities = {k.bit_count() & 1 for k in self.terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def is_zero(self) -> bool:
        return not self.terms

    def even_part(self) -> "CliffordElement":
        return CliffordElement._raw(self.n, {k: v for k, v in self.terms.items() if not k.bit_count() & 1})

    def odd_part(self) -> "CliffordElement":
        return CliffordElement._raw(self.n, {k: v for k, v in self.terms.items() if k.bit_count() & 1})

    def coefficient(self, index) -> GaussianRational:
        if isinstance(index, BasisIndex):
            index = index.bits
        return self.terms.get(index, ZERO)

    # arithmetic

    def _combine(self, other: "CliffordElement", sign: int) -> "CliffordElement":
        _same_ambient(self, other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, ZERO) + (v if sign > 0 else -v)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return CliffordElement._raw(self.n, out)

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return CliffordElement._raw(self.n, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "CliffordElement":
        c = GaussianRational.coerce(c)
        if not c:
            return CliffordElement.zero(self.n)
        return CliffordElement._raw(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return multiply(self, other)
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
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return f"CliffordElement(n={self.n}, 0)"
        parts = []
        for k in sorted(self.terms):
            name = "e" if k == 0 else "g{" + ",".join(map(str, mask_elements(k))) + "}"
            parts.append(f"({self.terms[k]})*{name}")
        return f"CliffordElement(n={self.n}, {' + '.join(parts)})"

    # interchange

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"I": mask_elements(k), **self.terms[k].to_json()} for k in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CliffordElement":
        n = obj["n"]
        terms: dict[int, GaussianRational] = {}
        for t in obj["terms"]:
            bits = BasisIndex.from_set(t["I"], n).bits
            terms[bits] = terms.get(bits, ZERO) + GaussianRational.from_json(t)
        return cls(n, terms)


def multiply(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """Bilinear extension of the basis product."""
    n = _same_ambient(x, y)
    out: dict[int, GaussianRational] = {}
    for I, a in x.terms.items():
        for J, b in y.terms.items():
            c = a * b
            if mask_sigma(I, J) & 1:
                c = -c
            K = I ^ J
            s = out.get(K)
            out[K] = c if s is None else s + c
    return CliffordElement._raw(n, {k: v for k, v in out.items() if v})


def _homogeneous_commutator(x: CliffordElement, y: CliffordElement, px: int, py: int) -> CliffordElement:
    xy = multiply(x, y)
    yx = multiply(y, x)
    return xy - yx if not (px & py) else xy + yx


def graded_commutator(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """[x, y] = xy - (-1)^{|x||y|} yx, extended bilinearly over even/odd parts."""
    _same_ambient(x, y)
    px, py = x.parity, y.parity
    if px is not None and py is not None:
        return _homogeneous_commutator(x, y, px, py)
    out = CliffordElement.zero(x.n)
    for p, xp in ((0, x.even_part()), (1, x.odd_part())):
        for q, yq in ((0, y.even_part()), (1, y.odd_part())):
            if xp.terms and yq.terms:
                out = out + _homogeneous_commutator(xp, yq, p, q)
    return out


def basis_commutator(n: int, I: int, J: int) -> CliffordElement:
    """[gamma_I, gamma_J] straight from the structure function."""
    c = mask_f(I, J)
    if not c:
        return CliffordElement.zero(n)
    return CliffordElement._raw(n, {I ^ J: GaussianRational(c)})


def degree(x: CliffordElement) -> str:
    p = x.parity
    if p is None:
        return "mixed"
    return "odd" if p else "even"


def require_homogeneous(x) -> int:
    p = x.parity
    if p is None:
        raise HomogeneityError(f"element is not homogeneous: {x!r}")
    return p
