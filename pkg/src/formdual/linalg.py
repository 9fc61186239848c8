"""Exact linear algebra over Q (and Q(sqrt(d))): echelon forms, kernels,
minimal polynomials, and polynomial arithmetic.

Rank-type computations on rational matrices run on integer-scaled copies
(fraction-free elimination, or certified modular elimination for eigenspace
dimension batches), so only small inputs ever touch Fraction-heavy pivoting.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .field import QuadExt, is_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense polynomial, coefficients constant-term first, exact scalars."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(c if not isinstance(c, int) else Fraction(c) for c in cs)

    # -- constructors
    @classmethod
    def zero(cls) -> "Polynomial":
        return cls([])

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        p = cls.one()
        for r in roots:
            p = p * cls([-r, 1])
        return p

    # -- basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (_ONE,)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    # -- ring operations
    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial.zero()
            out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return Polynomial(out)
        return Polynomial([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        lead = other.coeffs[-1]
        if dn < dd:
            return Polynomial.zero(), Polynomial(rem)
        quot = [_ZERO] * (dn - dd + 1)
        for i in range(dn - dd, -1, -1):
            c = rem[i + dd] / lead
            if c:
                quot[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Polynomial(quot), Polynomial(rem)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def lcm(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        g = self.gcd(other)
        return ((self * other) // g).monic()

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_argument(self, c) -> "Polynomial":
        """p(c*t) as a polynomial in t."""
        return Polynomial([a * c**i for i, a in enumerate(self.coeffs)])

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        return cls([Fraction(c) for c in obj["coeffs"]])


def poly_product(polys) -> Polynomial:
    p = Polynomial.one()
    for q in polys:
        p = p * q
    return p


def rational_roots(p: Polynomial) -> list[tuple[Fraction, int]]:
    """All rational roots of p with multiplicities, by divisor enumeration."""
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    # primitive integer form
    den = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    ints = [int(c * den) for c in p.coeffs]
    # strip trailing zero constant terms -> root 0
    zero_mult = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        zero_mult += 1
    roots: list[tuple[Fraction, int]] = []
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if not ints or len(ints) == 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    cands = set()
    for r in _divisors(a0):
        for s in _divisors(an):
            cands.add(Fraction(r, s))
            cands.add(Fraction(-r, s))
    q = Polynomial(ints)
    for cand in sorted(cands):
        if q(cand) == 0:
            mult = 0
            while True:
                quot, rem = q.divmod(Polynomial([-cand, 1]))
                if not rem.is_zero():
                    break
                q = quot
                mult += 1
            roots.append((cand, mult))
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

class RationalMatrix:
    """Exact matrix with sparse row storage; entries Fraction or QuadExt."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, m: int, n: int, rows: list[dict] | None = None):
        self.m = m
        self.n = n
        if rows is None:
            rows = [{} for _ in range(m)]
        if len(rows) != m:
            raise ValueError("row count mismatch")
        self.rows = rows

    # -- constructors
    @classmethod
    def zeros(cls, m: int, n: int) -> "RationalMatrix":
        return cls(m, n)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [{i: _ONE} for i in range(n)])

    @classmethod
    def from_rows(cls, dense) -> "RationalMatrix":
        dense = [list(r) for r in dense]
        m = len(dense)
        n = len(dense[0]) if m else 0
        rows = []
        for r in dense:
            if len(r) != n:
                raise ValueError("ragged rows")
            rows.append({j: (Fraction(v) if isinstance(v, int) else v) for j, v in enumerate(r) if v})
        return cls(m, n, rows)

    @classmethod
    def from_entries(cls, m: int, n: int, entries: dict) -> "RationalMatrix":
        rows: list[dict] = [{} for _ in range(m)]
        for (i, j), v in entries.items():
            if v:
                rows[i][j] = Fraction(v) if isinstance(v, int) else v
        return cls(m, n, rows)

    @classmethod
    def from_columns(cls, cols, m: int | None = None) -> "RationalMatrix":
        cols = [list(c) for c in cols]
        if m is None:
            m = len(cols[0]) if cols else 0
        rows: list[dict] = [{} for _ in range(m)]
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                if v:
                    rows[i][j] = Fraction(v) if isinstance(v, int) else v
        return cls(m, len(cols), rows)

    # -- queries
    def entry(self, i: int, j: int):
        return self.rows[i].get(j, _ZERO)

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def is_rational(self) -> bool:
        return all(not isinstance(v, QuadExt) for r in self.rows for v in r.values())

    def is_square(self) -> bool:
        return self.m == self.n

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({self.m}x{self.n}, nnz={self.nnz()})"

    def to_dense(self) -> list[list]:
        return [[r.get(j, _ZERO) for j in range(self.n)] for r in self.rows]

    def column(self, j: int) -> list:
        return [r.get(j, _ZERO) for r in self.rows]

    # -- arithmetic
    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        rows = []
        for ra, rb in zip(self.rows, other.rows):
            r = dict(ra)
            for j, v in rb.items():
                s = r.get(j, _ZERO) + v
                if s:
                    r[j] = s
                else:
                    r.pop(j, None)
            rows.append(r)
        return RationalMatrix(self.m, self.n, rows)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def scale(self, s) -> "RationalMatrix":
        if not s:
            return RationalMatrix.zeros(self.m, self.n)
        return RationalMatrix(self.m, self.n, [{j: v * s for j, v in r.items()} for r in self.rows])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n != other.m:
            raise ValueError(f"shape mismatch {self.m}x{self.n} @ {other.m}x{other.n}")
        rows: list[dict] = []
        for ra in self.rows:
            acc: dict = {}
            for k, a in ra.items():
                for j, b in other.rows[k].items():
                    s = acc.get(j, _ZERO) + a * b
                    if s:
                        acc[j] = s
                    else:
                        acc.pop(j, None)
            rows.append(acc)
        return RationalMatrix(self.m, other.n, rows)

    def matvec(self, vec: list) -> list:
        out = []
        for r in self.rows:
            acc = _ZERO
            for j, a in r.items():
                v = vec[j]
                if v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def transpose(self) -> "RationalMatrix":
        rows: list[dict] = [{} for _ in range(self.n)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return RationalMatrix(self.n, self.m, rows)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        t = _ZERO
        for i, r in enumerate(self.rows):
            t = t + r.get(i, _ZERO)
        return t

    def _same_shape(self, other: "RationalMatrix"):
        if self.m != other.m or self.n != other.n:
            raise ValueError(f"shape mismatch {self.m}x{self.n} vs {other.m}x{other.n}")

    # -- integer views
    def int_rows_rowscaled(self) -> list[dict[int, int]]:
        """Rows scaled by their denominator lcm: same row space and kernel."""
        out = []
        for r in self.rows:
            if not r:
                out.append({})
                continue
            den = 1
            for v in r.values():
                den = lcm(den, v.denominator)
            out.append({j: int(v * den) for j, v in r.items()})
        return out

    def int_scaled_global(self) -> tuple[list[dict[int, int]], int]:
        """(N, c) with N = c * self, all-integer; c the global denominator lcm."""
        c = 1
        for r in self.rows:
            for v in r.values():
                c = lcm(c, v.denominator)
        return [{j: int(v * c) for j, v in r.items()} for r in self.rows], c

    # -- JSON
    def to_json(self) -> dict:
        trips = []
        for i, r in enumerate(self.rows):
            for j in sorted(r):
                trips.append([i, j, str(r[j])])
        return {"rows": self.m, "cols": self.n, "triplets": trips}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalMatrix":
        rows: list[dict] = [{} for _ in range(obj["rows"])]
        for i, j, v in obj["triplets"]:
            rows[i][j] = Fraction(v)
        return cls(obj["rows"], obj["cols"], rows)


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Kronecker product, row-major block layout."""
    rows: list[dict] = [{} for _ in range(a.m * b.m)]
    for i, ra in enumerate(a.rows):
        for p, rb in enumerate(b.rows):
            dest = rows[i * b.m + p]
            for j, va in ra.items():
                for q, vb in rb.items():
                    dest[j * b.n + q] = va * vb
    return RationalMatrix(a.m * b.m, a.n * b.n, rows)


# ---------------------------------------------------------------------------
# Echelon forms, rank, kernels
# ---------------------------------------------------------------------------

def rref(M: RationalMatrix) -> tuple[RationalMatrix, int, list[int]]:
    """Reduced row echelon form over the entry field; exact."""
    a = M.to_dense()
    m, n = M.m, M.n
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = _inverse(a[r][c])
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return RationalMatrix.from_rows(a) if m else RationalMatrix.zeros(0, n), r, pivots


def _inverse(x):
    if isinstance(x, QuadExt):
        return x.inverse()
    return _ONE / x


def rank(M: RationalMatrix) -> int:
    """Exact rank; fraction-free (Bareiss) elimination on rational input."""
    if not M.is_rational():
        return rref(M)[1]
    rows = M.int_rows_rowscaled()
    a = [[r.get(j, 0) for j in range(M.n)] for r in rows if r]
    m, n = len(a), M.n
    prev = 1
    rk = 0
    for c in range(n):
        pr = None
        for i in range(rk, m):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[rk], a[pr] = a[pr], a[rk]
        piv = a[rk][c]
        for i in range(rk + 1, m):
            ric = a[i][c]
            rowi = a[i]
            rowk = a[rk]
            if ric:
                for j in range(c, n):
                    rowi[j] = (rowi[j] * piv - ric * rowk[j]) // prev
            else:
                for j in range(c, n):
                    rowi[j] = (rowi[j] * piv) // prev
        prev = piv
        rk += 1
        if rk == m:
            break
    return rk


def kernel_basis(M: RationalMatrix) -> list[list]:
    """Exact basis of the null space, one vector per free column."""
    R, rk, pivots = rref(M)
    pivot_set = set(pivots)
    free = [j for j in range(M.n) if j not in pivot_set]
    out = []
    for f in free:
        v = [_ZERO] * M.n
        v[f] = _ONE
        for r, pc in enumerate(pivots):
            coeff = R.entry(r, f)
            if coeff:
                v[pc] = -coeff
        out.append(v)
    return out


def rank_mod_p(cols: list[list[int]], n_rows: int, p: int) -> int:
    """Rank over GF(p) of the matrix with the given integer columns."""
    a = [[c[i] % p for c in cols] for i in range(n_rows)]
    m, n = n_rows, len(cols)
    rk = 0
    for c in range(n):
        pr = None
        for i in range(rk, m):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[rk], a[pr] = a[pr], a[rk]
        inv = pow(a[rk][c], p - 2, p)
        a[rk] = [(v * inv) % p for v in a[rk]]
        for i in range(rk + 1, m):
            f = a[i][c]
            if f:
                rowk = a[rk]
                a[i] = [(v - f * w) % p for v, w in zip(a[i], rowk)]
        rk += 1
        if rk == m:
            break
    return rk


# ---------------------------------------------------------------------------
# Minimal polynomials (Krylov + lcm over a spanning set)
# ---------------------------------------------------------------------------

def _int_matvec(rows: list[dict[int, int]], vec: list[int]) -> list[int]:
    out = []
    for r in rows:
        acc = 0
        for j, a in r.items():
            v = vec[j]
            if v:
                acc += a * v
        out.append(acc)
    return out


def _poly_eval_vec(coeffs, matvec, v):
    """p(M) v by Horner, given matvec for M; coeffs constant-first."""
    if not coeffs:
        return [0 * x for x in v]
    acc = [coeffs[-1] * x for x in v]
    for c in reversed(coeffs[:-1]):
        acc = matvec(acc)
        if c:
            for i, x in enumerate(v):
                if x:
                    acc[i] = acc[i] + c * x
    return acc


def _krylov_vector_minpoly(matvec, v, n: int) -> Polynomial:
    """Monic least-degree p with p(M) v = 0, by echelonized Krylov iteration."""
    echelon: list[tuple[int, list, list]] = []  # (pivot, unit-pivot vector, poly coeffs)
    w = [Fraction(x) if isinstance(x, int) else x for x in v]
    poly = [_ONE]
    deg = 0
    while True:
        vec = list(w)
        combo = list(poly) + [_ZERO] * (len(echelon) + 1 - len(poly))
        for piv, evec, epoly in echelon:
            f = vec[piv]
            if f:
                for i, y in enumerate(evec):
                    if y:
                        vec[i] = vec[i] - f * y
                for i, c in enumerate(epoly):
                    combo[i] = combo[i] - f * c
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            # combo encodes an annihilating polynomial with monic top degree
            return Polynomial(combo[: deg + 1])
        inv = _inverse(vec[piv])
        echelon.append((piv, [x * inv for x in vec], [c * inv for c in combo]))
        if deg == n:
            raise RuntimeError("Krylov iteration exceeded ambient dimension")
        w = matvec(w)
        deg += 1
        poly = [_ZERO] * deg + [_ONE]


def minimal_polynomial(M: RationalMatrix) -> Polynomial:
    """Exact monic minimal polynomial of a square matrix.

    Per-basis-vector Krylov minimal polynomials are combined by lcm; each
    basis vector is first tested against the current lcm so the final result
    provably annihilates every basis vector, hence the matrix.
    """
    if not M.is_square():
        raise ValueError("minimal polynomial of non-square matrix")
    n = M.n
    if n == 0:
        return Polynomial.one()
    if M.is_rational():
        rows, c = M.int_scaled_global()
        matvec = lambda v: _int_matvec(rows, v)
        scale_back = Fraction(c)
    else:
        matvec = M.matvec
        scale_back = None

    acc = Polynomial.one()
    for j in range(n):
        e = [0] * n
        e[j] = 1
        if not acc.is_one():
            if all(not x for x in _poly_eval_vec(list(acc.coeffs), matvec, e)):
                continue
        p = _krylov_vector_minpoly(matvec, e, n)
        acc = acc.lcm(p)
    if scale_back is not None and scale_back != 1:
        # acc annihilates N = c*M; translate to M and re-normalize monic
        acc = acc.scale_argument(scale_back).monic()
    return acc


def poly_eval_matrix(p: Polynomial, M: RationalMatrix) -> RationalMatrix:
    """p(M), exactly, assembled column by column via Horner."""
    if not M.is_square():
        raise ValueError("polynomial of non-square matrix")
    n = M.n
    cols = []
    for j in range(n):
        e = [_ZERO] * n
        e[j] = _ONE
        cols.append(_poly_eval_vec(list(p.coeffs), M.matvec, e))
    return RationalMatrix.from_columns(cols, n)


_CERT_PRIMES = (1_000_003, 1_000_033, 999_983, 1_000_999_999_607)


def kernel_dims_certified(M: RationalMatrix, factors: list[Polynomial]) -> list[int]:
    """Exact dim ker f_i(M) for pairwise-coprime factors whose product
    annihilates M.

    Under those hypotheses the space is the direct sum of the factor kernels,
    so the dimensions must add to n; modular ranks only over-estimate kernel
    dimensions, hence a modular run whose dimensions sum to n is exact.
    """
    n = M.n
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if not factors[i].gcd(factors[j]).is_one():
                raise ValueError("factors are not pairwise coprime")
    prod = poly_product(factors)
    if not annihilates(prod, M):
        raise ValueError("factor product does not annihilate the matrix")

    rows, c = M.int_scaled_global()
    int_factors = []
    for f in factors:
        den = 1
        for coeff in f.coeffs:
            den = lcm(den, coeff.denominator)
        g = [int(coeff * den) for coeff in f.coeffs]
        # evaluate against N = c*M: hat(g)(N) = (c^deg * g)(M) up to row scale
        hat = [gi * c ** (len(g) - 1 - i) for i, gi in enumerate(g)]
        int_factors.append(hat)

    matvec = lambda v: _int_matvec(rows, v)
    unit = [[0] * n for _ in range(n)]
    for j in range(n):
        unit[j][j] = 1
    col_sets = []
    for hat in int_factors:
        col_sets.append([_poly_eval_vec(hat, matvec, unit[j]) for j in range(n)])

    for p in _CERT_PRIMES:
        if c % p == 0:
            continue
        dims = [n - rank_mod_p(cols, n, p) for cols in col_sets]
        if sum(dims) == n:
            return dims
    raise RuntimeError("no certifying prime found for kernel dimensions")


def annihilates(p: Polynomial, M: RationalMatrix) -> bool:
    """Whether p(M) = 0, checked exactly on every basis vector."""
    n = M.n
    if p.is_zero():
        return True
    if M.is_rational():
        rows, c = M.int_scaled_global()
        deg = p.degree
        # hat(t) with hat(N) = (den * c^deg) * p(M) for N = c*M, all-integer
        scaled = [coeff * c ** (deg - i) for i, coeff in enumerate(p.coeffs)]
        den = 1
        for v in scaled:
            den = lcm(den, v.denominator)
        hat = [int(v * den) for v in scaled]
        matvec = lambda v: _int_matvec(rows, v)
        for j in range(n):
            e = [0] * n
            e[j] = 1
            if any(_poly_eval_vec(hat, matvec, e)):
                return False
        return True
    for j in range(n):
        e = [_ZERO] * n
        e[j] = _ONE
        if any(_poly_eval_vec(list(p.coeffs), M.matvec, e)):
            return False
    return True


# ---------------------------------------------------------------------------
# Solving in a span
# ---------------------------------------------------------------------------

def coordinates_in_span(basis_vecs: list[list], target: list):
    """Coordinates of target in the span of the given vectors, or None."""
    if not basis_vecs:
        return [] if all(not x for x in target) else None
    n = len(target)
    aug = RationalMatrix.from_columns(basis_vecs + [target], n)
    R, rk, pivots = rref(aug)
    k = len(basis_vecs)
    if k in pivots:
        return None
    coords = [_ZERO] * k
    for r, pc in enumerate(pivots):
        coords[pc] = R.entry(r, k)
    return coords
