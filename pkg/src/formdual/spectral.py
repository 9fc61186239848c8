"""Exact spectral reports: minimal polynomial, verified factorization,
eigenspace dimensions, conjugate-family splitting, and trace balance."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .field import QuadExt, sqrt_exact
from .linalg import (
    Polynomial,
    RationalMatrix,
    annihilates,
    kernel_dims_certified,
    minimal_polynomial,
    poly_eval_matrix,
    poly_product,
    rank,
    rational_roots,
)


class SpectrumError(RuntimeError):
    pass


@dataclass(frozen=True)
class EigenvalueDescriptor:
    """A tagged exact eigenvalue.

    kind 'rational': value is a Fraction.
    kind 'surd': value is a + b*sqrt(d) as a QuadExt (b != 0).
    kind 'imaginary': value is mu > 0 (Fraction or QuadExt), meaning the
        conjugate pair +-i*mu; the associated dimension is real (2x complex).
    kind 'family': value is the irreducible annihilating factor (Polynomial)
        of a conjugate family not expressible as a single quadratic surd.
    """

    kind: str
    value: object

    def sort_key(self):
        order = {"rational": 0, "surd": 1, "imaginary": 2, "family": 3}
        if self.kind == "rational":
            v = (self.value, 0)
        elif self.kind == "surd":
            v = (self.value.a, self.value.b)
        elif self.kind == "imaginary":
            mu = self.value
            v = (mu.a, mu.b) if isinstance(mu, QuadExt) else (mu, 0)
        else:
            v = (Fraction(0), 0)
        return (order[self.kind], v)

    def to_json(self):
        if self.kind == "rational":
            return {"type": "rational", "value": str(self.value)}
        if self.kind == "surd":
            return {"type": "surd", "value": {"a": str(self.value.a), "b": str(self.value.b), "d": self.value.d}}
        if self.kind == "imaginary":
            mu = self.value
            if isinstance(mu, QuadExt):
                val = {"a": str(mu.a), "b": str(mu.b), "d": mu.d}
            else:
                val = str(mu)
            return {"type": "imaginary", "value": val}
        return {"type": "family", "value": {"factor": [str(c) for c in self.value.coeffs]}}


@dataclass
class SpectrumReport:
    operator: str
    min_poly: Polynomial
    eigen: list  # (EigenvalueDescriptor, int real dimension)
    trace_zero: bool
    order: int
    perfect: bool | None = None
    expected_match: bool | None = None

    def dims_total(self) -> int:
        return sum(dim for _, dim in self.eigen)

    def dim_of(self, value) -> int | None:
        """Dimension for an exact eigenvalue (rational or QuadExt)."""
        for desc, dim in self.eigen:
            if desc.kind in ("rational", "surd") and desc.value == value:
                return dim
        return None

    def imaginary_dim(self, mu) -> int | None:
        for desc, dim in self.eigen:
            if desc.kind == "imaginary" and desc.value == mu:
                return dim
        return None

    def to_json(self) -> dict:
        return {
            "operator": self.operator,
            "min_poly": [str(c) for c in self.min_poly.coeffs],
            "eigen": [dict(desc.to_json(), dim=dim) for desc, dim in self.eigen],
            "trace_zero": self.trace_zero,
            "order": self.order,
            "perfect": self.perfect,
        }


# ---------------------------------------------------------------------------
# Factorization heuristics (within the scope the suite needs)
# ---------------------------------------------------------------------------

def _is_even_poly(p: Polynomial) -> bool:
    return all(not c for i, c in enumerate(p.coeffs) if i % 2)


def _as_even(p: Polynomial) -> Polynomial:
    """q with p(t) = q(t^2), for an even polynomial."""
    return Polynomial([c for i, c in enumerate(p.coeffs) if i % 2 == 0])


def _try_symmetric_quartic_split(p: Polynomial):
    """Split t^4 + A t^2 + B as (t^2+pt+q)(t^2-pt+q) with rational p, q."""
    if p.degree != 4 or not p.is_monic() or p.coeffs[1] or p.coeffs[3]:
        return None
    big_a, big_b = p.coeffs[2], p.coeffs[0]
    root = _rational_sqrt(big_b)
    if root is None:
        return None
    for q in (root, -root):
        p2 = 2 * q - big_a
        pr = _rational_sqrt(p2) if p2 >= 0 else None
        if pr is not None and pr != 0:
            return [Polynomial([q, pr, 1]), Polynomial([q, -pr, 1])]
    return None


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def derive_factors(p: Polynomial) -> list[Polynomial]:
    """Factor a minimal polynomial into the pieces the report needs: linear
    factors for rational roots, quadratics for surd/imaginary pairs when they
    split, and a single residual factor otherwise."""
    factors: list[Polynomial] = []
    residual = p.monic()
    for root, mult in rational_roots(residual):
        lin = Polynomial([-root, 1])
        for _ in range(mult):
            factors.append(lin)
            residual = residual // lin
    if residual.degree <= 0:
        return factors
    if residual.degree == 2:
        factors.append(residual)
        return factors
    if _is_even_poly(residual):
        even = _as_even(residual)
        for s, mult in rational_roots(even):
            quad = Polynomial([-s, 0, 1])
            for _ in range(mult):
                factors.append(quad)
                residual = residual // quad
        if residual.degree <= 0:
            return factors
        split = _try_symmetric_quartic_split(residual)
        if split:
            return factors + split
    factors.append(residual)
    return factors


# ---------------------------------------------------------------------------
# Conjugate-family splitting via restricted traces (all arithmetic in Q)
# ---------------------------------------------------------------------------

def _projector_onto_factor(m: RationalMatrix, factor: Polynomial, minpoly: Polynomial) -> RationalMatrix:
    """Polynomial projector onto ker factor(M), given the squarefree minimal
    polynomial; uses the partial-fraction identity u*g + v*f = 1."""
    g = minpoly // factor
    u, _v = _bezout(g, factor)
    return poly_eval_matrix((u * g) % minpoly, m)


def _bezout(a: Polynomial, b: Polynomial):
    """(u, v) with u*a + v*b = gcd(a,b), monic gcd assumed 1 in our usage."""
    r0, r1 = a, b
    u0, u1 = Polynomial.one(), Polynomial.zero()
    v0, v1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.degree != 0:
        raise SpectrumError("factors are not coprime; cannot build projector")
    lead = r0.coeffs[0]
    return u0 * (1 / lead), v0 * (1 / lead)


def _split_conjugate_pair(total_dim: int, restricted_trace: Fraction, a: Fraction, surd_sq: Fraction):
    """Multiplicities (m_plus, m_minus) of a +- b*sqrt(d) from the exact trace
    of the operator restricted to the family kernel.

    trace = a*(m+ + m-) + (m+ - m-)*sqrt(b^2 d); the rational part determines
    the difference through its square.
    """
    u = restricted_trace - a * total_dim
    if u == 0:
        diff = 0
    else:
        ratio = u * u / surd_sq
        r = _rational_sqrt(ratio)
        if r is None or r.denominator != 1:
            raise SpectrumError("restricted trace does not split the conjugate pair")
        diff = int(r) if u > 0 else -int(r)
    if (total_dim + diff) % 2:
        raise SpectrumError("inconsistent conjugate-pair split")
    m_plus = (total_dim + diff) // 2
    m_minus = total_dim - m_plus
    return m_plus, m_minus


def _descriptors_for_factor(factor: Polynomial, dim: int, m: RationalMatrix, minpoly: Polynomial):
    """Eigenvalue descriptors (with dimensions) contributed by one factor."""
    if factor.degree == 1:
        return [(EigenvalueDescriptor("rational", -factor.coeffs[0] / factor.coeffs[1]), dim)], 1
    if factor.degree == 2:
        c0, c1, _ = (factor.monic()).coeffs
        disc = c1 * c1 - 4 * c0
        if disc < 0:
            mu = sqrt_exact(-disc) / 2
            if c1 == 0:
                return [(EigenvalueDescriptor("imaginary", mu), dim)], 2
            # complex non-imaginary pair: report as a family
            return [(EigenvalueDescriptor("family", factor), dim)], 2
        a = -c1 / 2
        root = sqrt_exact(disc) / 2
        proj = _projector_onto_factor(m, factor, minpoly)
        restricted_trace = (m @ proj).trace()
        m_plus, m_minus = _split_conjugate_pair(dim, restricted_trace, a, disc / 4)
        plus_val = a + root
        minus_val = a - root
        out = []
        if m_plus:
            out.append((EigenvalueDescriptor("surd" if isinstance(plus_val, QuadExt) else "rational", plus_val), m_plus))
        if m_minus:
            out.append((EigenvalueDescriptor("surd" if isinstance(minus_val, QuadExt) else "rational", minus_val), m_minus))
        return out, 2
    return [(EigenvalueDescriptor("family", factor), dim)], factor.degree


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------

def spectrum(
    op: RationalMatrix,
    expected_factors: list[Polynomial] | None = None,
    name: str = "operator",
    irreducible_count: int | None = None,
) -> SpectrumReport:
    if not op.is_square():
        raise ValueError("spectrum of a non-square operator")
    minpoly = minimal_polynomial(op)
    expected_match = None
    if expected_factors is not None:
        expected_match = poly_product(expected_factors).monic() == minpoly
        factors = list(expected_factors) if expected_match else derive_factors(minpoly)
    else:
        factors = derive_factors(minpoly)
    factors = [f.monic() for f in factors]
    if op.n == 0:
        report = SpectrumReport(name, minpoly, [], True, 0, None, expected_match)
        return report
    dims = kernel_dims_certified(op, factors)
    eigen = []
    order = 0
    for factor, dim in zip(factors, dims):
        descs, count = _descriptors_for_factor(factor, dim, op, minpoly)
        eigen.extend(descs)
        order += count
    eigen.sort(key=lambda pair: pair[0].sort_key())
    trace_zero = op.trace() == 0
    report = SpectrumReport(name, minpoly, eigen, trace_zero, order, None, expected_match)
    if report.dims_total() != op.n:
        raise SpectrumError("eigenspace dimensions do not sum to the ambient dimension")
    if irreducible_count is not None:
        report.perfect = perfectness(report, irreducible_count)
    return report


def perfectness(report: SpectrumReport, irreducible_count: int) -> bool:
    return report.order == irreducible_count


def rational_root_check(p: Polynomial):
    """Rational roots with multiplicity, by divisor enumeration."""
    return rational_roots(p)


def eigenspace_basis(op: RationalMatrix, eigenvalue) -> list[list]:
    """Exact kernel basis of op - eigenvalue*id (works over Q and Q(sqrt d))."""
    from .linalg import kernel_basis

    n = op.n
    shifted = op - RationalMatrix.identity(n).scale(eigenvalue)
    return kernel_basis(shifted)


def factor_kernel_basis(op: RationalMatrix, factor: Polynomial) -> list[list]:
    """Exact kernel basis of factor(op)."""
    from .linalg import kernel_basis

    return kernel_basis(poly_eval_matrix(factor, op))
