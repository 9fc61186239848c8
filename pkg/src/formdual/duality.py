"""Duality operators b_Omega assembled from sparse contraction, the auxiliary
contraction maps between form degrees, and the tensor-identity checkers.

All antisymmetrizing brackets are weight-one projectors.  A single global
normalization constant kappa multiplies the contraction; it is calibrated once
against the known spectrum {-4, 2/3} on three-forms in eight dimensions and
then frozen.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .combinat import basis, basis_index, shuffle_sign, sort_with_sign
from .forms import KForm, hodge_star
from .linalg import Polynomial, RationalMatrix, rational_roots


class CalibrationError(RuntimeError):
    pass


class ContractViolation(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Generic contraction assembler
# ---------------------------------------------------------------------------

def contract_operator(a_form: KForm, p: int, f_deg: int) -> RationalMatrix:
    """Matrix of F |-> [A-contracted-p-fold-with-F], weight-one antisymmetrized.

    Contracts p indices of the a-form A against p indices of a degree-f input,
    sums over ordered contraction tuples (hence a p! relative to sorted-subset
    sums), and antisymmetrizes the free indices with A's free indices leading.
    """
    d = a_form.D
    a = a_form.k
    if not 0 <= p <= min(a, f_deg):
        raise ValueError(f"cannot contract {p} indices between degrees {a} and {f_deg}")
    g = (a - p) + (f_deg - p)
    if g > d:
        return RationalMatrix.zeros(comb(d, g) if g <= d else 0, comb(d, f_deg))
    out_pos = basis_index(d, g)
    weight = Fraction(factorial(p), comb(g, a - p))
    entries: dict = {}
    for cj, jdx in enumerate(basis(d, f_deg)):
        jset = set(jdx)
        for s, alpha in a_form.coeffs.items():
            common = tuple(x for x in s if x in jset)
            if len(common) < p:
                continue
            for j_sub in combinations(common, p):
                j_set = set(j_sub)
                h = tuple(x for x in s if x not in j_set)
                t = tuple(x for x in jdx if x not in j_set)
                if set(h) & set(t):
                    continue
                i_out = tuple(sorted(h + t))
                sign = shuffle_sign(j_sub, h) * shuffle_sign(j_sub, t) * shuffle_sign(h, t)
                key = (out_pos[i_out], cj)
                val = entries.get(key, 0) + weight * alpha * sign
                if val:
                    entries[key] = val
                else:
                    entries.pop(key, None)
    return RationalMatrix.from_entries(comb(d, g), comb(d, f_deg), entries)


# ---------------------------------------------------------------------------
# Calibration and operator construction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def calibration_kappa() -> Fraction:
    """The global scale fixed by spectrum {-4, 2/3} on Lambda^3 R^8."""
    from .catalog import spin7_four_form
    from .linalg import minimal_polynomial

    raw = contract_operator(spin7_four_form(), 2, 3)
    p = minimal_polynomial(raw)
    roots = [r for r, mult in rational_roots(p)]
    if p.degree != 2 or len(roots) != 2:
        raise CalibrationError(f"anchor operator has unexpected minimal polynomial {p!r}")
    targets = (Fraction(-4), Fraction(2, 3))
    for r1, r2 in ((roots[0], roots[1]), (roots[1], roots[0])):
        kappa = targets[0] / r1
        if kappa * r2 == targets[1]:
            return kappa
    raise CalibrationError(f"no scale maps roots {roots} onto {targets}")


@dataclass(frozen=True)
class DualityOperator:
    omega: KForm
    k: int
    m: int
    matrix: RationalMatrix
    kappa: Fraction
    degenerate: bool

    @property
    def D(self) -> int:
        return self.omega.D


def build_duality_operator(omega: KForm, k: int) -> DualityOperator:
    """b_Omega on Lambda^k, including the global calibration scale.

    Odd-degree omega, or omega degree exceeding 2k, yields the zero operator
    with the degenerate flag set.
    """
    d = omega.D
    if not 0 <= k <= d:
        raise ValueError(f"degree k={k} out of range for D={d}")
    ell = omega.k
    n = comb(d, k)
    if ell % 2 or ell > 2 * k or omega.is_zero():
        return DualityOperator(omega, k, ell // 2, RationalMatrix.zeros(n, n), calibration_kappa(), True)
    m = ell // 2
    mat = contract_operator(omega, m, k).scale(calibration_kappa())
    return DualityOperator(omega, k, m, mat, calibration_kappa(), False)


def apply_operator(b: DualityOperator, f: KForm) -> KForm:
    if f.D != b.D or f.k != b.k:
        raise ValueError("form does not match the operator's domain")
    return KForm.from_vector(f.D, b.k, b.matrix.matvec(f.to_vector()))


def apply_direct(omega: KForm, k: int, f: KForm) -> KForm:
    """b_Omega(F) by direct output-major sparse contraction (oracle path).

    Organized oppositely to the matrix assembler: iterate output indices,
    split off the omega head from precomputed per-head tables, and look the
    remainder up in F.
    """
    if f.D != omega.D or f.k != k:
        raise ValueError("form does not match the requested operator")
    d = omega.D
    ell = omega.k
    if ell % 2 or ell > 2 * k or omega.is_zero():
        return KForm.zero(d, k)
    m = ell // 2
    free = ell - m
    # head table: sorted free-index tuple H -> [(contraction set J, signed coeff)]
    heads: dict = {}
    for s, alpha in omega.coeffs.items():
        for j_sub in combinations(s, m):
            j_set = set(j_sub)
            h = tuple(x for x in s if x not in j_set)
            heads.setdefault(h, []).append((j_sub, shuffle_sign(j_sub, h) * alpha))
    weight = calibration_kappa() * Fraction(factorial(m), comb(k, free))
    coeffs: dict = {}
    for idx in basis(d, k):
        iset = set(idx)
        acc = Fraction(0)
        for h in combinations(idx, free):
            entries = heads.get(h)
            if not entries:
                continue
            t = tuple(x for x in idx if x not in set(h))
            sign_ht = shuffle_sign(h, t)
            for j_sub, w in entries:
                if set(j_sub) & set(t):
                    continue
                merged = tuple(sorted(j_sub + t))
                fc = f.coeffs.get(merged)
                if fc:
                    acc = acc + w * sign_ht * shuffle_sign(j_sub, t) * fc
        val = weight * acc
        if val:
            coeffs[idx] = val
    return KForm(d, k, coeffs)


# ---------------------------------------------------------------------------
# Auxiliary contraction maps between degrees
# ---------------------------------------------------------------------------

_CONTRACTION_SIGNATURES = {
    "d": (3, 5),
    "dtilde": (1, 3),
    "c": (3, 4),
    "ctilde": (1, 2),
    "e": (3, 3),
    "etilde": (1, 1),
}


def contraction_map(theta: KForm, variant: str) -> RationalMatrix:
    """One of the six named contraction maps of a four-form on R^8.

    Variants: d (Λ⁵→Λ³), dtilde (Λ³→Λ⁵), c (Λ⁴→Λ²), ctilde (Λ²→Λ⁴),
    e (Λ³→Λ¹), etilde (Λ¹→Λ³).  Not recalibrated by kappa.
    """
    key = variant.replace("~", "tilde").replace("̃", "tilde")
    if key not in _CONTRACTION_SIGNATURES:
        raise ValueError(f"unknown variant {variant!r}")
    if theta.k != 4 or theta.D != 8:
        raise ValueError("contraction maps are defined for four-forms on R^8")
    p, f_deg = _CONTRACTION_SIGNATURES[key]
    return contract_operator(theta, p, f_deg)


def derivation_operator(omega: KForm, k: int) -> RationalMatrix:
    """Derivation action on Lambda^k of the endomorphism e_i -> sum_j Omega_ij e_j
    attached to a two-form; the degree-k duality operator of a two-form equals
    1/k times this action."""
    if omega.k != 2:
        raise ValueError("the derivation action is attached to a two-form")
    d = omega.D
    act: dict[int, dict[int, Fraction]] = {}
    for (i, j), alpha in omega.coeffs.items():
        act.setdefault(i, {})[j] = act.get(i, {}).get(j, Fraction(0)) + alpha
        act.setdefault(j, {})[i] = act.get(j, {}).get(i, Fraction(0)) - alpha
    pos = basis_index(d, k)
    entries: dict = {}
    for col, idx in enumerate(basis(d, k)):
        iset = set(idx)
        for t, i_t in enumerate(idx):
            for j, a in act.get(i_t, {}).items():
                if j in iset and j != i_t:
                    continue
                replaced = idx[:t] + (j,) + idx[t + 1 :]
                sorted_idx, sign = sort_with_sign(replaced)
                if sign == 0:
                    continue
                key = (pos[sorted_idx], col)
                val = entries.get(key, Fraction(0)) + a * sign
                if val:
                    entries[key] = val
                else:
                    entries.pop(key, None)
    n = comb(d, k)
    return RationalMatrix.from_entries(n, n, entries)


def star_matrix(d: int, k: int) -> RationalMatrix:
    """Matrix of the Hodge star from Lambda^k to Lambda^{d-k}."""
    cols = [hodge_star(KForm.basis_form(d, idx)).to_vector() for idx in basis(d, k)]
    return RationalMatrix.from_columns(cols, comb(d, d - k))


# ---------------------------------------------------------------------------
# Order-two projections and Hodge compatibility
# ---------------------------------------------------------------------------

def order2_projections(b: DualityOperator, beta1: Fraction, beta2: Fraction):
    """Exact spectral projections for an order-two operator."""
    beta1, beta2 = Fraction(beta1), Fraction(beta2)
    if beta1 == beta2:
        raise ContractViolation("projections need two distinct eigenvalues")
    mat = b.matrix
    n = mat.n
    ident = RationalMatrix.identity(n)
    check = (mat - ident.scale(beta1)) @ (mat - ident.scale(beta2))
    if not check.is_zero():
        raise ContractViolation(f"operator is not annihilated by (t-{beta1})(t-{beta2})")
    p1 = (ident.scale(beta2) - mat).scale(Fraction(1) / (beta2 - beta1))
    p2 = (ident.scale(beta1) - mat).scale(Fraction(1) / (beta1 - beta2))
    for beta, proj in ((beta1, p1), (beta2, p2)):
        if proj @ proj != proj or mat @ proj != proj.scale(beta):
            raise ContractViolation("projection identities failed")
    if p1 + p2 != ident:
        raise ContractViolation("projections do not sum to the identity")
    return p1, p2


def hodge_compat_check(omega: KForm, k: int) -> dict:
    """Exact check of the star-conjugation scaling law, plus the middle-degree
    star-commutation law when it applies."""
    d = omega.D
    ell = omega.k
    if ell % 2:
        raise ValueError("check requires an even-degree form")
    m = ell // 2
    if ell > 2 * k or ell > 2 * (d - k):
        raise ValueError("operator not defined on both complementary degrees")
    b_k = build_duality_operator(omega, k).matrix
    b_dk = build_duality_operator(omega, d - k).matrix
    s_k = star_matrix(d, k)
    s_dk = star_matrix(d, d - k)
    lhs = (s_dk @ b_dk @ s_k).scale(comb(d - k, m))
    sign = -1 if (k * (d - k)) % 2 else 1
    rhs = b_k.scale(sign * comb(k, m))
    report = {"scaling_law": lhs == rhs, "failing_entry": None}
    if not report["scaling_law"]:
        diff = lhs - rhs
        for i, r in enumerate(diff.rows):
            if r:
                j = min(r)
                report["failing_entry"] = (i, j, r[j])
                break
    if d == 2 * ell and k == ell:
        s_mid = star_matrix(d, k)
        star_omega = hodge_star(omega)
        b_star = build_duality_operator(star_omega, k).matrix
        report["middle_left"] = s_mid @ b_k == b_star
        report["middle_right"] = b_star == b_k @ s_mid
    return report


# ---------------------------------------------------------------------------
# Tensor identities for the spin(7) four-form
# ---------------------------------------------------------------------------

def _gen_delta(i_tuple, j_tuple) -> Fraction:
    """Weight-one generalized Kronecker delta: (1/p!) det(delta submatrix)."""
    p = len(i_tuple)
    if p != len(j_tuple):
        raise ValueError("index groups must have equal length")
    if p == 0:
        return Fraction(1)
    # both arguments sorted and duplicate-free in our usage; permutation determinant
    if set(i_tuple) != set(j_tuple) or len(set(i_tuple)) != p:
        return Fraction(0)
    return Fraction(1, factorial(p))  # sorted equal tuples: identity permutation


def _pair_splits(idx4):
    """All (pair, complementary pair, merge sign) splits of a sorted 4-tuple."""
    out = []
    for a_sub in combinations(idx4, 2):
        rest = tuple(x for x in idx4 if x not in a_sub)
        out.append((a_sub, rest, shuffle_sign(a_sub, rest)))
    return out


def _three_one_splits(idx):
    """All (head block, last index, merge sign) splits of a sorted tuple."""
    out = []
    for single in idx:
        rest = tuple(x for x in idx if x != single)
        out.append((rest, single, shuffle_sign(rest, (single,))))
    return out


def theta_trace_identities(theta: KForm) -> dict:
    """Entrywise verification of the four contraction identities of the
    spin(7) four-form against their stated right-hand sides."""
    if theta.k != 4 or theta.D != 8:
        raise ValueError("identities concern a four-form on R^8")
    comp = theta.component
    rng = range(1, 9)
    report = {}

    total = 24 * sum(c * c for c in theta.coeffs.values())
    report["contraction4"] = total == 336

    ok3 = True
    for i in rng:
        for j in rng:
            lhs = 6 * sum(comp((i,) + k3) * comp((j,) + k3) for k3 in basis(8, 3))
            if lhs != (42 if i == j else 0):
                ok3 = False
    report["contraction3"] = ok3

    ok2 = True
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    lhs = 2 * sum(comp((i, j) + mn) * comp((k, l) + mn) for mn in basis(8, 2))
                    rhs = 12 * _weight_delta2(i, j, k, l) - 4 * comp((i, j, k, l))
                    if lhs != rhs:
                        ok2 = False
    report["contraction2"] = ok2

    ok1 = True
    for i3 in basis(8, 3):
        for l3 in basis(8, 3):
            lhs = sum(comp(i3 + (o,)) * comp(l3 + (o,)) for o in rng)
            rhs = 6 * _gen_delta(i3, l3) - 9 * _bracket_theta_delta(comp, i3, l3)
            if lhs != rhs:
                ok1 = False
    report["contraction1"] = ok1

    report["all"] = all(report[k] for k in ("contraction1", "contraction2", "contraction3", "contraction4"))
    return report


def _weight_delta2(i, j, k, l) -> Fraction:
    return Fraction((1 if (i == k and j == l) else 0) - (1 if (i == l and j == k) else 0), 2)


def _bracket_theta_delta(comp, i3, l3) -> Fraction:
    """Weight-one antisymmetrization over both triples of Theta_{ij}^{lm} delta_k^n."""
    acc = Fraction(0)
    for pair_i, k_idx, sgn_i in _pair_head_splits(i3):
        for pair_l, n_idx, sgn_l in _pair_head_splits(l3):
            if k_idx == n_idx:
                acc += Fraction(sgn_i * sgn_l) * comp(pair_i + pair_l)
    return acc / 9


def _pair_head_splits(idx3):
    """(leading pair, trailing single, merge sign) splits of a sorted 3-tuple."""
    out = []
    for single in idx3:
        rest = tuple(x for x in idx3 if x != single)
        out.append((rest, single, shuffle_sign(rest, (single,))))
    return out


def theta_squared_decomposition(theta: KForm):
    """Fit the three-term ansatz for the full Theta (x) Theta tensor.

    Returns ((a, b, c), residual_zero).  The ansatz terms carry weight-one
    brackets over both four-index groups; both sides are antisymmetric in each
    group, so sorted index pairs suffice.
    """
    if theta.k != 4:
        raise ValueError("decomposition concerns a four-form")
    d = theta.D
    comp = theta.component
    quads = basis(d, 4)
    lhs, t1, t2, t3 = [], [], [], []
    for i4 in quads:
        splits2_i = _pair_splits(i4)
        splits31_i = _three_one_splits(i4)
        for m4 in quads:
            lhs.append(theta.coeffs.get(i4, Fraction(0)) * theta.coeffs.get(m4, Fraction(0)))
            splits2_m = _pair_splits(m4)
            acc1 = Fraction(0)
            acc3 = Fraction(0)
            for a_sub, a_rest, sa in splits2_i:
                for b_sub, b_rest, sb in splits2_m:
                    w = Fraction(sa * sb, 36)
                    head = comp(a_sub + b_sub)
                    if head:
                        acc1 += w * head * _gen_delta(a_rest, b_rest)
                        tail = comp(a_rest + b_rest)
                        if tail:
                            acc3 += w * head * tail
            acc2 = Fraction(0)
            for c_sub, l_idx, sc in splits31_i:
                for head_idx, e_rest, sm in _one_three_splits(m4):
                    w = Fraction(sc * sm, 16)
                    f1 = comp(c_sub + (head_idx,))
                    if f1:
                        f2 = comp((l_idx,) + e_rest)
                        if f2:
                            acc2 += w * f1 * f2
            t1.append(acc1)
            t2.append(acc2)
            t3.append(acc3)
    if not any(lhs):
        return (Fraction(0), Fraction(0), Fraction(0)), True
    from .linalg import coordinates_in_span

    coords = coordinates_in_span([t1, t2, t3], lhs)
    if coords is None:
        return None, False
    return tuple(coords), True


def _one_three_splits(idx4):
    """(leading single, trailing triple, merge sign) splits of a sorted 4-tuple."""
    out = []
    for single in idx4:
        rest = tuple(x for x in idx4 if x != single)
        out.append((single, rest, shuffle_sign((single,), rest)))
    return out


# ---------------------------------------------------------------------------
# Auxiliary operators appearing in the fourth-degree operator-power chain
# ---------------------------------------------------------------------------

def x1_operator(theta: KForm) -> RationalMatrix:
    """F |-> weight-one bracket of Theta^{mn}_{[ij} Theta^{op}_{kl]} F_{mnop}."""
    n = comb(theta.D, 4)
    tails = _pair_tail_table(theta)
    entries: dict = {}
    for row, i4 in enumerate(basis(theta.D, 4)):
        for a_sub, a_rest, sgn in _pair_splits(i4):
            for b1, c1 in tails.get(a_sub, ()):
                for b2, c2 in tails.get(a_rest, ()):
                    if set(b1) & set(b2):
                        continue
                    col_idx = tuple(sorted(b1 + b2))
                    val = Fraction(4 * sgn * shuffle_sign(b1, b2), 6) * c1 * c2
                    key = (row, basis_index(theta.D, 4)[col_idx])
                    cur = entries.get(key, 0) + val
                    if cur:
                        entries[key] = cur
                    else:
                        entries.pop(key, None)
    return RationalMatrix.from_entries(n, n, entries)


def x2_operator(theta: KForm) -> RationalMatrix:
    """F |-> weight-one bracket of Theta_{[ijk}^p Theta^{rsn}_{l]} F_{pnrs}."""
    n = comb(theta.D, 4)
    head3 = _triple_head_table(theta)
    tail3 = _single_head_table(theta)
    pos = basis_index(theta.D, 4)
    entries: dict = {}
    for row, i4 in enumerate(basis(theta.D, 4)):
        for c_sub, l_idx, sgn in _three_one_splits(i4):
            lst1 = head3.get(c_sub)
            lst2 = tail3.get(l_idx)
            if not lst1 or not lst2:
                continue
            for p_idx, c1 in lst1:
                for e_rest, c2 in lst2:
                    if p_idx in e_rest:
                        continue
                    col_idx = tuple(sorted((p_idx,) + e_rest))
                    val = Fraction(6 * sgn * shuffle_sign((p_idx,), e_rest), 4) * c1 * c2
                    key = (row, pos[col_idx])
                    cur = entries.get(key, 0) + val
                    if cur:
                        entries[key] = cur
                    else:
                        entries.pop(key, None)
    return RationalMatrix.from_entries(n, n, entries)


def x3_operator(theta: KForm) -> RationalMatrix:
    """F |-> Theta * (full ordered contraction of Theta against F)."""
    vec = theta.to_vector()
    n = len(vec)
    entries = {}
    for i, vi in enumerate(vec):
        if not vi:
            continue
        for j, vj in enumerate(vec):
            if vj:
                entries[(i, j)] = 24 * vi * vj
    return RationalMatrix.from_entries(n, n, entries)


def _pair_tail_table(theta: KForm) -> dict:
    """For each sorted pair A: entries (B, coeff) with coeff = Theta_{B A}."""
    table: dict = {}
    for s, alpha in theta.coeffs.items():
        for b_sub in combinations(s, 2):
            a_rest = tuple(x for x in s if x not in b_sub)
            table.setdefault(a_rest, []).append((b_sub, shuffle_sign(b_sub, a_rest) * alpha))
    return table


def _triple_head_table(theta: KForm) -> dict:
    """For each sorted triple C: entries (p, coeff) with coeff = Theta_{C p}."""
    table: dict = {}
    for s, alpha in theta.coeffs.items():
        for p_idx in s:
            c_sub = tuple(x for x in s if x != p_idx)
            table.setdefault(c_sub, []).append((p_idx, shuffle_sign(c_sub, (p_idx,)) * alpha))
    return table


def _single_head_table(theta: KForm) -> dict:
    """For each index l: entries (E, coeff) with coeff = Theta_{E l}."""
    table: dict = {}
    for s, alpha in theta.coeffs.items():
        for l_idx in s:
            e_rest = tuple(x for x in s if x != l_idx)
            table.setdefault(l_idx, []).append((e_rest, shuffle_sign(e_rest, (l_idx,)) * alpha))
    return table


def power_chain_check(theta: KForm) -> dict:
    """The exact operator-power identities of the degree-four duality map,
    culminating in its annihilating quintic."""
    b = build_duality_operator(theta, 4).matrix
    n = b.n
    ident = RationalMatrix.identity(n)
    b2 = b @ b
    b3 = b2 @ b
    b4 = b3 @ b
    b5 = b4 @ b
    x1 = x1_operator(theta)
    x2 = x2_operator(theta)
    x3 = x3_operator(theta)
    report = {
        "square": b2 == x1.scale(Fraction(1, 6)) + ident.scale(Fraction(2, 3)) - b.scale(Fraction(8, 3)),
        "cube": b3 == ident.scale(Fraction(4, 3)) + b.scale(Fraction(2, 3)) - b2.scale(Fraction(10, 3)) + x2.scale(Fraction(2, 9)),
        "fourth": b4 == b.scale(4) - b2.scale(Fraction(8, 3)) - b3.scale(Fraction(13, 3)) + x3.scale(Fraction(1, 9)),
        "fifth": b5 == b4.scale(Fraction(-25, 3)) - b3.scale(20) - b2.scale(Fraction(20, 3)) + b.scale(16),
    }
    quintic = Polynomial([0, -16, Fraction(20, 3), 20, Fraction(25, 3), 1])
    from .linalg import annihilates

    report["quintic"] = annihilates(quintic, b)
    report["all"] = all(report.values())
    return report
