"""Sparse exterior forms on R^D with exact coefficients.

Coefficients are Fractions by default; elements of Q(sqrt(d)) are accepted
wherever they arise (eigenvectors with surd entries), since every operation
only needs field arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .combinat import basis, complement, perm_sign, shuffle_sign, sort_with_sign
from .field import as_fraction, is_rational


def normalize_component(indices, coeff):
    """Canonicalize one component: sorted indices and sign-adjusted coefficient.

    Returns None when an index repeats (the component is zero).
    """
    idx, sign = sort_with_sign(indices)
    if sign == 0:
        return None
    return idx, coeff * sign


class KForm:
    """A degree-k exterior form on R^D, stored as sorted-index -> coefficient."""

    __slots__ = ("D", "k", "coeffs")

    def __init__(self, D: int, k: int, coeffs: dict | None = None):
        if not 0 <= k <= D:
            raise ValueError(f"degree k={k} out of range for D={D}")
        self.D = D
        self.k = k
        clean = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != k:
                raise ValueError(f"index {idx} has length != {k}")
            if any(not 1 <= i <= D for i in idx):
                raise ValueError(f"index {idx} out of range 1..{D}")
            if list(idx) != sorted(idx):
                raise ValueError(f"index {idx} not strictly increasing")
            if len(set(idx)) != k:
                raise ValueError(f"index {idx} repeats an entry")
            if c:
                clean[idx] = c if not isinstance(c, int) else Fraction(c)
        self.coeffs = clean

    @classmethod
    def from_terms(cls, D: int, k: int, terms) -> "KForm":
        """Build from (indices, coeff) pairs with arbitrary index order."""
        acc: dict = {}
        for indices, c in terms:
            norm = normalize_component(indices, Fraction(c) if isinstance(c, int) else c)
            if norm is None:
                continue
            idx, val = norm
            acc[idx] = acc.get(idx, 0) + val
        return cls(D, k, acc)

    @classmethod
    def zero(cls, D: int, k: int) -> "KForm":
        return cls(D, k, {})

    @classmethod
    def basis_form(cls, D: int, indices) -> "KForm":
        return cls.from_terms(D, len(tuple(indices)), [(tuple(indices), 1)])

    def is_zero(self) -> bool:
        return not self.coeffs

    def component(self, indices):
        """Fully antisymmetric component at an arbitrary index tuple."""
        norm = normalize_component(indices, 1)
        if norm is None:
            return Fraction(0)
        idx, sign = norm
        return sign * self.coeffs.get(idx, Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, KForm)
            and self.D == other.D
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.D, self.k, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other: "KForm") -> "KForm":
        self._check_compatible(other)
        acc = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            acc[idx] = acc.get(idx, 0) + c
        return KForm(self.D, self.k, acc)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.D, self.k, {i: -c for i, c in self.coeffs.items()})

    def scale(self, s) -> "KForm":
        return KForm(self.D, self.k, {i: c * s for i, c in self.coeffs.items()})

    def __rmul__(self, s):
        return self.scale(s)

    def _check_compatible(self, other: "KForm"):
        if self.D != other.D:
            raise ValueError(f"dimension mismatch: {self.D} vs {other.D}")
        if self.k != other.k:
            raise ValueError(f"degree mismatch: {self.k} vs {other.k}")

    def to_vector(self) -> list:
        """Coefficient vector in the lexicographic basis of Lambda^k R^D."""
        vec = [Fraction(0)] * comb(self.D, self.k)
        from .combinat import basis_index

        pos = basis_index(self.D, self.k)
        for idx, c in self.coeffs.items():
            vec[pos[idx]] = c
        return vec

    @classmethod
    def from_vector(cls, D: int, k: int, vec) -> "KForm":
        return cls(D, k, {idx: c for idx, c in zip(basis(D, k), vec) if c})

    def __repr__(self):
        if not self.coeffs:
            return f"KForm(D={self.D}, k={self.k}, 0)"
        parts = " + ".join(f"({c})e_{''.join(map(str, i))}" for i, c in sorted(self.coeffs.items()))
        return f"KForm(D={self.D}, k={self.k}, {parts})"


def wedge(a: KForm, b: KForm) -> KForm:
    """Exterior product; returns the zero form when degrees overflow D."""
    if a.D != b.D:
        raise ValueError(f"dimension mismatch: {a.D} vs {b.D}")
    k = a.k + b.k
    if k > a.D:
        return KForm.zero(a.D, a.D)
    acc: dict = {}
    for ia, ca in a.coeffs.items():
        sa = set(ia)
        for ib, cb in b.coeffs.items():
            if sa & set(ib):
                continue
            sign = shuffle_sign(ia, ib)
            idx = tuple(sorted(ia + ib))
            acc[idx] = acc.get(idx, 0) + sign * ca * cb
    return KForm(a.D, k, acc)


def hodge_star(f: KForm) -> KForm:
    """Euclidean Hodge star, fixed by *(e_I) = sgn(I, I^c) e_{I^c}."""
    acc = {}
    for idx, c in f.coeffs.items():
        comp = complement(idx, f.D)
        acc[comp] = shuffle_sign(idx, comp) * c
    return KForm(f.D, f.D - f.k, acc)


def inner_product(a: KForm, b: KForm):
    """Orthonormal-basis inner product; k! times it is the full contraction."""
    a._check_compatible(b)
    total = Fraction(0)
    small, big = (a.coeffs, b.coeffs) if len(a.coeffs) <= len(b.coeffs) else (b.coeffs, a.coeffs)
    for idx, c in small.items():
        other = big.get(idx)
        if other:
            total = total + c * other
    return total


def full_contraction(a: KForm, b: KForm):
    """Sum over all ordered index tuples of the componentwise product."""
    from math import factorial

    return factorial(a.k) * inner_product(a, b)


# --- JSON wire format -------------------------------------------------------

def _scalar_to_json(c):
    if is_rational(c):
        return str(as_fraction(c))
    return {"a": str(c.a), "b": str(c.b), "d": c.d}


def kform_to_json(f: KForm) -> dict:
    return {
        "D": f.D,
        "k": f.k,
        "terms": [
            {"idx": list(idx), "c": _scalar_to_json(c)}
            for idx, c in sorted(f.coeffs.items())
        ],
    }


def kform_from_json(obj: dict) -> KForm:
    from .field import QuadExt

    coeffs = {}
    for term in obj["terms"]:
        c = term["c"]
        if isinstance(c, dict):
            val = QuadExt(Fraction(c["a"]), Fraction(c["b"]), c["d"])
        else:
            val = Fraction(c)
        coeffs[tuple(term["idx"])] = val
    return KForm(obj["D"], obj["k"], coeffs)
