"""Named verification suites.  Each suite runs a fixed, ordered list of exact
checks and returns a VerificationOutcome; `run_all` unions every suite."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import cyclic
from .catalog import (
    complex_structure_form,
    g2_four_form,
    g2_three_form,
    get_form,
    spin7_four_form,
)
from .combinat import basis
from .duality import (
    apply_direct,
    apply_operator,
    build_duality_operator,
    calibration_kappa,
    contraction_map,
    derivation_operator,
    hodge_compat_check,
    order2_projections,
    power_chain_check,
    star_matrix,
    theta_squared_decomposition,
    theta_trace_identities,
)
from .field import QuadExt
from .forms import KForm, hodge_star, inner_product
from .lifting import (
    SplitBasis,
    block_decompose,
    block_sparsity,
    kron,
    kron_with_star2,
    proportionality_scalar,
    trivial_lift,
)
from .linalg import Polynomial, RationalMatrix, kernel_basis, rank
from .spectral import (
    SpectrumReport,
    eigenspace_basis,
    rational_root_check,
    spectrum,
)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    anchor: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationOutcome:
    suite: str
    checks: list

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"id": c.check_id, "anchor": c.anchor, "status": "pass" if c.passed else "fail", "detail": c.detail}
                for c in self.checks
            ],
            "overall": "pass" if self.overall else "fail",
        }


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _lin(root) -> Polynomial:
    return Polynomial([-Fraction(root), 1])


def _imag(mu_sq) -> Polynomial:
    return Polynomial([Fraction(mu_sq), 0, 1])


@lru_cache(maxsize=None)
def operator_for(name: str, k: int):
    return build_duality_operator(get_form(name), k)


def _eigen_dim(report: SpectrumReport, kind: str, value):
    for desc, dim in report.eigen:
        if desc.kind == kind and desc.value == value:
            return dim
    return None


def _dims_match(report: SpectrumReport, expected: list) -> tuple[bool, str]:
    """expected: list of (kind, value, dim)."""
    problems = []
    for kind, value, dim in expected:
        got = _eigen_dim(report, kind, value)
        if got != dim:
            problems.append(f"{kind}({value}): expected {dim}, got {got}")
    total = sum(d for _, _, d in expected)
    if report.dims_total() != total:
        problems.append(f"total {report.dims_total()} != {total}")
    return (not problems), "; ".join(problems)


def _eigen_summary(report: SpectrumReport) -> str:
    parts = []
    for desc, dim in report.eigen:
        if desc.kind == "imaginary":
            parts.append(f"+-{desc.value}i:{dim}")
        elif desc.kind == "family":
            parts.append(f"family(deg {desc.value.degree}):{dim}")
        else:
            parts.append(f"{desc.value}:{dim}")
    return ", ".join(parts)


def _spectrum_check(
    check_id: str,
    anchor: str,
    op_matrix: RationalMatrix,
    name: str,
    factors: list[Polynomial],
    expected: list,
    count: int | None = None,
    expect_perfect: bool | None = None,
):
    report = spectrum(op_matrix, expected_factors=factors, name=name, irreducible_count=count)
    ok = bool(report.expected_match)
    detail = ""
    if not ok:
        detail = f"stated factors do not multiply to the minimal polynomial; actual spectrum {_eigen_summary(report)}"
    else:
        ok, detail = _dims_match(report, expected)
        if not ok:
            detail += f"; actual spectrum {_eigen_summary(report)}"
    if ok and expect_perfect is not None:
        if report.perfect != expect_perfect:
            ok = False
            detail = f"order {report.order} vs {count} irreducibles"
    return CheckResult(check_id, anchor, ok, detail), report


def _random_form(rng: random.Random, d: int, k: int, terms: int = 6) -> KForm:
    all_idx = basis(d, k)
    chosen = rng.sample(all_idx, min(terms, len(all_idx)))
    return KForm.from_terms(
        d, k, [(idx, Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for idx in chosen]
    )


def property_checks(name: str, k: int, n_random: int = 100) -> list[CheckResult]:
    """Per-operator property suite: trace balance, parity symmetry, and
    matrix-versus-direct-contraction agreement on random forms."""
    b = operator_for(name, k)
    mat = b.matrix
    prefix = f"prop_{name}_k{k}"
    out = []
    out.append(
        CheckResult(f"{prefix}_trace", "Lemma 2.8 / Eq. 12", mat.trace() == 0, "")
    )
    sym_ok = mat == (mat.transpose() if b.m % 2 == 0 else mat.transpose().scale(-1))
    out.append(
        CheckResult(f"{prefix}_parity", "Remark 2.9", sym_ok, f"m={b.m}")
    )
    rng = random.Random(f"{name}:{k}")
    omega = b.omega
    agree = True
    bad = ""
    for i in range(n_random):
        f = _random_form(rng, omega.D, k)
        if apply_operator(b, f) != apply_direct(omega, k, f):
            agree = False
            bad = f"mismatch at sample {i}"
            break
    out.append(CheckResult(f"{prefix}_oracle", "Eq. 7", agree, bad))
    return out


def degenerate_checks(n_random: int = 20) -> CheckResult:
    """Random odd-degree and oversized forms must yield the zero operator."""
    rng = random.Random("degenerate")
    ok = True
    bad = ""
    for i in range(n_random):
        d = rng.choice([6, 7, 8])
        if i % 2 == 0:
            ell = rng.choice([1, 3, 5])  # odd degree
            k = rng.randint(max(1, ell - 1), d - 1)
        else:
            k = rng.randint(1, 2)
            ell = 2 * (k + rng.randint(1, 2))  # even but larger than 2k
            if ell > d:
                ell = 2 * k + 2 if 2 * k + 2 <= d else d - (d % 2)
            if ell <= 2 * k:
                ell = 2 * k + 2
            if ell > d:
                continue
        omega = _random_form(rng, d, ell, terms=4)
        b = build_duality_operator(omega, k)
        f = _random_form(rng, d, k)
        if not (b.degenerate and b.matrix.is_zero() and apply_operator(b, f).is_zero()):
            ok = False
            bad = f"non-vanishing operator for l={ell}, k={k}, D={d}"
            break
    return CheckResult("degenerate_random", "Lemma 2.5", ok, bad)


def _embed_block(vec: list, positions: list[int], total: int) -> list:
    out = [Fraction(0)] * total
    for v, p in zip(vec, positions):
        out[p] = v
    return out


def _is_zero_vec(v) -> bool:
    return all(not x for x in v)


# ---------------------------------------------------------------------------
# spin(7) suite
# ---------------------------------------------------------------------------

def suite_spin7() -> VerificationOutcome:
    checks: list[CheckResult] = []
    theta = spin7_four_form()
    b3 = operator_for("theta8", 3)
    b2 = operator_for("theta8", 2)
    b4 = operator_for("theta8", 4)
    kappa = calibration_kappa()

    c, rep3 = _spectrum_check(
        "lambda3_spectrum",
        "Prop 3.2",
        b3.matrix,
        "b_theta8|L3R8",
        [_lin(-4), _lin(Fraction(2, 3))],
        [("rational", Fraction(-4), 8), ("rational", Fraction(2, 3), 48)],
        count=2,
        expect_perfect=True,
    )
    checks.append(CheckResult(c.check_id, c.anchor, c.passed, c.detail or f"kappa={kappa}"))

    ident3 = RationalMatrix.identity(56)
    quad_ok = (
        b3.matrix @ b3.matrix + b3.matrix.scale(Fraction(10, 3)) - ident3.scale(Fraction(8, 3))
    ).is_zero()
    checks.append(CheckResult("lambda3_quadratic", "Prop 3.2", quad_ok))

    c, rep2 = _spectrum_check(
        "lambda2_spectrum",
        "Example 1.1",
        b2.matrix,
        "b_theta8|L2R8",
        [_lin(2), _lin(-6)],
        [("rational", Fraction(2), 21), ("rational", Fraction(-6), 7)],
        count=2,
        expect_perfect=True,
    )
    checks.append(c)

    try:
        order2_projections(b3, Fraction(-4), Fraction(2, 3))
        order2_projections(b2, Fraction(2), Fraction(-6))
        checks.append(CheckResult("projections", "Eq. 9", True))
    except Exception as exc:  # ContractViolation carries the reason
        checks.append(CheckResult("projections", "Eq. 9", False, str(exc)))

    c, rep4 = _spectrum_check(
        "lambda4_spectrum",
        "Eqs. 19-20",
        b4.matrix,
        "b_theta8|L4R8",
        [_lin(0), _lin(-2), _lin(-4), _lin(Fraction(2, 3))],
        [
            ("rational", Fraction(0), 35),
            ("rational", Fraction(-2), 7),
            ("rational", Fraction(-4), 1),
            ("rational", Fraction(2, 3), 27),
        ],
        count=4,
        expect_perfect=True,
    )
    checks.append(c)

    theta_vec = theta.to_vector()
    checks.append(
        CheckResult(
            "btheta_of_theta",
            "Prop 3.5",
            b4.matrix.matvec(theta_vec) == [Fraction(-4) * x for x in theta_vec],
        )
    )

    s4 = star_matrix(8, 4)
    anti = kernel_basis(s4 + RationalMatrix.identity(70))
    anti_ok = len(anti) == 35 and all(_is_zero_vec(b4.matrix.matvec(v)) for v in anti)
    checks.append(CheckResult("antiselfdual_kernel", "Remark 2.12", anti_ok, f"dim={len(anti)}"))

    shifted = b4.matrix + RationalMatrix.identity(70).scale(3)
    roots = [r for r, _ in rational_root_check(Polynomial([0, -16, Fraction(20, 3), 20, Fraction(25, 3), 1]))]
    checks.append(
        CheckResult(
            "minus3_excluded",
            "Remark 3.4 / Prop 3.5",
            Fraction(-3) in roots and rank(shifted) == 70,
            f"quintic roots {[str(r) for r in sorted(roots)]}",
        )
    )

    tr = theta_trace_identities(theta)
    checks.append(
        CheckResult(
            "theta_contraction_traces",
            "Eq. 13",
            tr["all"],
            "" if tr["all"] else str({k: v for k, v in tr.items() if not v}),
        )
    )

    chain = power_chain_check(theta)
    checks.append(
        CheckResult(
            "power_chain",
            "Lemma 3.3 / Eqs. 14-18",
            chain["all"],
            "" if chain["all"] else str({k: v for k, v in chain.items() if not v}),
        )
    )

    fit, exact = theta_squared_decomposition(theta)
    fit_detail = f"coefficients ({', '.join(str(x) for x in fit)})" if fit else "no exact fit"
    checks.append(CheckResult("theta_square_fit", "Eq. 21 (fit reported)", bool(exact and fit), fit_detail))

    checks.append(CheckResult("selfdual", "footnote 1", hodge_star(theta) == theta))
    checks.append(
        CheckResult("theta_norm", "Eq. 13 trace", inner_product(theta, theta) == 14)
    )

    for k in (2, 3, 4):
        checks.extend(property_checks("theta8", k))
    checks.append(degenerate_checks())
    return VerificationOutcome("spin7", checks)


# ---------------------------------------------------------------------------
# G2 suite
# ---------------------------------------------------------------------------

def suite_g2() -> VerificationOutcome:
    checks: list[CheckResult] = []
    checks.append(
        CheckResult(
            "thetabar_is_dual",
            "Example 1.1",
            g2_four_form() == hodge_star(g2_three_form()),
        )
    )
    b2 = operator_for("thetabar7", 2)
    c, _ = _spectrum_check(
        "lambda2_spectrum",
        "Example 1.1 / footnote 6",
        b2.matrix,
        "b_thetabar7|L2R7",
        [_lin(2), _lin(-4)],
        [("rational", Fraction(2), 14), ("rational", Fraction(-4), 7)],
        count=2,
        expect_perfect=True,
    )
    checks.append(c)

    b3 = operator_for("thetabar7", 3)
    c, rep = _spectrum_check(
        "lambda3_spectrum",
        "Remark 3.6",
        b3.matrix,
        "b_thetabar7|L3R7",
        [_lin(-4), _lin(-2), _lin(Fraction(2, 3))],
        [
            ("rational", Fraction(-4), 1),
            ("rational", Fraction(-2), 7),
            ("rational", Fraction(2, 3), 27),
        ],
        count=3,
        expect_perfect=True,
    )
    minpoly_ok = rep.min_poly == Polynomial([Fraction(-16, 3), 4, Fraction(16, 3), 1])
    checks.append(CheckResult(c.check_id, c.anchor, c.passed and minpoly_ok, c.detail))

    for k in (2, 3):
        checks.extend(property_checks("thetabar7", k))
    return VerificationOutcome("g2", checks)


# ---------------------------------------------------------------------------
# lifts suite
# ---------------------------------------------------------------------------

def _corner_check(check_id, anchor, block, reference, expected_scalar):
    lam = proportionality_scalar(block, reference)
    ok = lam is not None and lam != 0
    note = f"scalar {lam}" + ("" if lam == expected_scalar else f" (stated normalization {expected_scalar})")
    return CheckResult(check_id, anchor, ok, note)


def suite_lifts() -> VerificationOutcome:
    checks: list[CheckResult] = []
    theta = spin7_four_form()
    b2 = operator_for("theta8", 2).matrix
    b3 = operator_for("theta8", 3).matrix
    b4 = operator_for("theta8", 4).matrix

    d_map = contraction_map(theta, "d")
    dt_map = contraction_map(theta, "dtilde")
    c_map = contraction_map(theta, "c")
    ct_map = contraction_map(theta, "ctilde")
    e_map = contraction_map(theta, "e")
    et_map = contraction_map(theta, "etilde")

    ident56 = RationalMatrix.identity(56)
    d_comp_ok = d_map @ dt_map == ident56.scale(Fraction(-6, 5)) + b3.scale(Fraction(3, 2))
    checks.append(CheckResult("d_composition", "Lemma 3.7 / Eq. 24", d_comp_ok))

    s3 = star_matrix(8, 3)
    star_conj = s3 @ d_map @ s3
    checks.append(
        CheckResult("d_star_conjugation", "Lemma 3.7 / Eq. 24", star_conj == dt_map.scale(-20))
    )

    p2_plus, p2_minus = order2_projections(operator_for("theta8", 2), Fraction(2), Fraction(-6))
    cc = c_map @ ct_map
    checks.append(
        CheckResult(
            "c_composition_minus6", "Lemma 3.9 / Eq. 27", cc @ p2_minus == p2_minus.scale(-24)
        )
    )
    minus2_basis = eigenspace_basis(b4, Fraction(-2))
    ctc = ct_map @ c_map
    ok = len(minus2_basis) == 7 and all(
        ctc.matvec(v) == [Fraction(-24) * x for x in v] for v in minus2_basis
    )
    checks.append(CheckResult("c_composition_minus2", "Lemma 3.9 / Eq. 27", ok))
    ker_ct_ok = (ct_map @ p2_plus).is_zero() and rank(ct_map) == 7
    checks.append(CheckResult("ctilde_kernel", "Lemma 3.9", ker_ct_ok))

    p3_minus4, p3_third = order2_projections(
        operator_for("theta8", 3), Fraction(-4), Fraction(2, 3)
    )
    checks.append(
        CheckResult("e_kernel", "Lemma 3.12 / Eq. 31", (e_map @ p3_third).is_zero())
    )
    ete = et_map @ e_map
    ete_scalar = proportionality_scalar(ete @ p3_minus4, p3_minus4)
    checks.append(
        CheckResult(
            "e_composition_minus4",
            "Lemma 3.12 / Eq. 31",
            ete @ p3_minus4 == p3_minus4.scale(-24),
            f"actual scalar {ete_scalar}",
        )
    )
    eet = e_map @ et_map
    eet_scalar = proportionality_scalar(eet, RationalMatrix.identity(8))
    checks.append(
        CheckResult(
            "e_composition_identity",
            "Lemma 3.12 / Eq. 31",
            eet == RationalMatrix.identity(8).scale(-24),
            f"actual scalar {eet_scalar}",
        )
    )

    # Hodge-dual lift spectra and block structure
    bhat5 = operator_for("theta8hat", 5).matrix
    bhat4 = operator_for("theta8hat", 4).matrix
    bhat3 = operator_for("theta8hat", 3).matrix

    c, rep5 = _spectrum_check(
        "lifted_lambda5",
        "Prop 3.8",
        bhat5,
        "b_theta8hat|L5R10",
        [
            _lin(0),
            _imag(Fraction(1024, 25)),
            _imag(Fraction(324, 25)),
            _imag(Fraction(36, 25)),
            _imag(Fraction(9, 25)),
        ],
        [
            ("rational", Fraction(0), 70),
            ("imaginary", Fraction(32, 5), 2),
            ("imaginary", Fraction(18, 5), 30),
            ("imaginary", Fraction(6, 5), 54),
            ("imaginary", Fraction(3, 5), 96),
        ],
    )
    checks.append(c)

    c, rep4h = _spectrum_check(
        "lifted_lambda4",
        "Prop 3.10",
        bhat4,
        "b_theta8hat|L4R10",
        [_lin(0), _imag(81), _imag(Fraction(9, 4)), _imag(72)],
        [
            ("rational", Fraction(0), 84),
            ("imaginary", Fraction(9), 16),
            ("imaginary", Fraction(3, 2), 96),
            ("imaginary", QuadExt(0, 6, 2), 14),
        ],
    )
    checks.append(c)

    c, rep3h = _spectrum_check(
        "lifted_lambda3",
        "Prop 3.11",
        bhat3,
        "b_theta8hat|L3R10",
        [_lin(0), _imag(324), _imag(36), _imag(252)],
        [
            ("rational", Fraction(0), 48),
            ("imaginary", Fraction(18), 14),
            ("imaginary", Fraction(6), 42),
            ("imaginary", QuadExt(0, 6, 7), 16),
        ],
    )
    checks.append(c)

    expected_sparsity = (
        (False, False, True),
        (False, True, False),
        (True, False, False),
    )
    for k, op, mid_ref, mid_scalar, corners, anchor in (
        (5, bhat5, b4, Fraction(9, 5), (dt_map, Fraction(6), d_map, Fraction(3, 10)), "Eq. 25"),
        (4, bhat4, b3, Fraction(9, 4), (ct_map, Fraction(6), c_map, Fraction(1, 2)), "Eq. 28"),
        (3, bhat3, b2, Fraction(-3), (et_map, Fraction(6), e_map, Fraction(1)), "Eq. 29"),
    ):
        split = SplitBasis(k)
        grid = block_decompose(op, split)
        checks.append(
            CheckResult(
                f"block_sparsity_l{k}", anchor, block_sparsity(grid) == expected_sparsity
            )
        )
        mid = proportionality_scalar(grid[1][1], kron_with_star2(mid_ref))
        checks.append(
            CheckResult(
                f"middle_scalar_l{k}", anchor, mid == mid_scalar, f"scalar {mid}"
            )
        )
        top_ref, top_scalar, bot_ref, bot_scalar = corners
        checks.append(_corner_check(f"corner_top_l{k}", anchor, grid[0][2], top_ref, top_scalar))
        checks.append(_corner_check(f"corner_bottom_l{k}", anchor, grid[2][0], bot_ref, bot_scalar))

    # Kernel of the degree-five lifted operator = zero eigenspace of L4R8 x R2
    split5 = SplitBasis(5)
    n5 = comb(10, 5)
    zero4 = eigenspace_basis(b4, Fraction(0))
    embedded = []
    for v in zero4:
        e9 = [Fraction(0)] * n5
        e10 = [Fraction(0)] * n5
        for i, x in enumerate(v):
            e9[split5.block2[2 * i]] = x
            e10[split5.block2[2 * i + 1]] = x
        embedded.extend([e9, e10])
    kernel_ok = (
        len(embedded) == 70
        and all(_is_zero_vec(bhat5.matvec(w)) for w in embedded)
        and _eigen_dim(rep5, "rational", Fraction(0)) == 70
    )
    checks.append(CheckResult("lifted_l5_kernel", "Prop 3.8 zero row", kernel_ok))

    # The two-plane coupling realizing the +-18i/5 pair
    minus4_basis = eigenspace_basis(b3, Fraction(-4))
    bhat5_sq = bhat5 @ bhat5
    mu_sq = Fraction(-324, 25)
    couple_ok = len(minus4_basis) == 8
    for v in minus4_basis:
        w1 = _embed_block(dt_map.matvec(v), split5.block1, n5)
        w2 = _embed_block(v, split5.block3, n5)
        img = bhat5.matvec(w2)
        in_block1 = all(not img[p] for p in split5.block2 + split5.block3)
        if not (
            in_block1
            and bhat5_sq.matvec(w2) == [mu_sq * x for x in w2]
            and bhat5_sq.matvec(w1) == [mu_sq * x for x in w1]
        ):
            couple_ok = False
            break
    checks.append(CheckResult("lifted_l5_coupling", "Prop 3.8 third row / Lemma 3.7", couple_ok))

    # Trivial lift on L4R10: block diagonal, multiplied dimensions, not perfect
    lifted = build_duality_operator(trivial_lift(theta, 10), 4)
    split4 = SplitBasis(4)
    grid = block_decompose(lifted.matrix, split4)
    diag_ok = block_sparsity(grid) == (
        (True, False, False),
        (False, True, False),
        (False, False, True),
    )
    checks.append(CheckResult("trivial_block_diagonal", "Eq. 22 / §3.3", diag_ok))
    checks.append(
        CheckResult("trivial_block1", "§3.3", grid[0][0] == b4, "block equals the base operator")
    )
    m3 = RationalMatrix.from_entries(
        56, 56, {(i, j): grid[1][1].entry(2 * i, 2 * j) for i in range(56) for j in range(56) if grid[1][1].entry(2 * i, 2 * j)}
    )
    kron_ok = grid[1][1] == kron(m3, RationalMatrix.identity(2))
    checks.append(CheckResult("trivial_block2_tensor", "§3.3 b x 1", kron_ok))

    m2 = grid[2][2]
    rep_lift = spectrum(lifted.matrix, name="b_theta8_trivial|L4R10", irreducible_count=10)
    dims_ok = True
    details = []
    base_rep = spectrum(b4, name="base")
    values = set()
    for desc, _ in base_rep.eigen:
        values.add(desc.value)
    for desc, _ in rep_lift.eigen:
        values.add(desc.value)
    ident56_ = RationalMatrix.identity(56)
    ident28 = RationalMatrix.identity(28)
    for val in sorted(values):
        d_base = _eigen_dim(base_rep, "rational", val) or 0
        d3 = 56 - rank(m3 - ident56_.scale(val))
        d2 = 28 - rank(m2 - ident28.scale(val))
        d_lift = _eigen_dim(rep_lift, "rational", val) or 0
        if d_lift != d_base + 2 * d3 + d2:
            dims_ok = False
            details.append(f"value {val}: {d_lift} != {d_base}+2*{d3}+{d2}")
    checks.append(
        CheckResult("trivial_multiplied_dims", "Eq. 22 / §3.3", dims_ok, "; ".join(details))
    )
    checks.append(
        CheckResult(
            "trivial_not_perfect",
            "§3.3 'not perfect in all cases'",
            rep_lift.perfect is False,
            f"order {rep_lift.order} vs 10 irreducible summands",
        )
    )

    for k in (3, 4, 5):
        checks.extend(property_checks("theta8hat", k, n_random=100))
    return VerificationOutcome("lifts", checks)


# ---------------------------------------------------------------------------
# Z8 suite
# ---------------------------------------------------------------------------

def suite_z8() -> VerificationOutcome:
    checks: list[CheckResult] = []
    sqrt2 = QuadExt(0, 1, 2)
    expected_dims = {
        2: [
            ("rational", Fraction(0), 6),
            ("rational", Fraction(1), 4),
            ("rational", Fraction(-1), 4),
            ("rational", Fraction(2), 1),
            ("rational", Fraction(-2), 1),
            ("surd", sqrt2, 2),
            ("surd", -sqrt2, 2),
            ("surd", 1 + sqrt2, 2),
            ("surd", 1 - sqrt2, 2),
            ("surd", -1 + sqrt2, 2),
            ("surd", -1 - sqrt2, 2),
        ],
        3: [
            ("rational", Fraction(0), 16),
            ("rational", Fraction(2), 8),
            ("rational", Fraction(-2), 8),
            ("surd", sqrt2, 4),
            ("surd", -sqrt2, 4),
            ("family", Polynomial([16, 0, -14, 0, 1]), 16),
        ],
        4: [
            ("rational", Fraction(0), 26),
            ("rational", Fraction(2), 16),
            ("rational", Fraction(-2), 16),
            ("rational", Fraction(4), 4),
            ("rational", Fraction(-4), 4),
            ("surd", 2 * sqrt2, 2),
            ("surd", -2 * sqrt2, 2),
        ],
    }
    for k in (2, 3, 4):
        op = cyclic.z8_operator(k)
        scale = cyclic.SCALE_BY_DEGREE[k]
        c, rep = _spectrum_check(
            f"z8_spectrum_k{k}",
            f"§4 k={k}",
            op,
            f"{scale}b_z8|L{k}R8",
            cyclic.expected_factors(k),
            expected_dims[k],
        )
        checks.append(
            CheckResult(
                c.check_id,
                c.anchor,
                c.passed,
                c.detail or f"c_{k}={scale}, fitted normalization s={cyclic.fitted_scale()}",
            )
        )
        checks.append(
            CheckResult(
                f"z8_commutes_k{k}", "§4 invariance", cyclic.commutes_with_sigma(k)
            )
        )
        checks.append(
            CheckResult(
                f"z8_sigma_mults_k{k}",
                f"§4 k={k} multiplicities",
                cyclic.sigma_multiplicities(k) == cyclic.EXPECTED_SIGMA_MULTIPLICITIES[k],
            )
        )
        eqs = cyclic.restricted_sigma_equations(k)
        bad = sorted(key for key, v in eqs.items() if key != "all" and not v)
        checks.append(
            CheckResult(
                f"z8_restricted_k{k}",
                f"§4 k={k} minimal equations",
                eqs["all"],
                "" if eqs["all"] else f"failed: {bad}",
            )
        )
        fix = cyclic.verify_fixture_vectors(k)
        badf = sorted(key for key, v in fix.items() if key != "all" and not v)
        checks.append(
            CheckResult(
                f"z8_fixtures_k{k}",
                f"Eqs. 33-46 (k={k})",
                fix["all"],
                "" if fix["all"] else f"failed: {badf}",
            )
        )
    for k in (2, 3, 4):
        checks.extend(property_checks("z8", k))
    checks.extend(property_checks("z8omega", 4, n_random=40))
    return VerificationOutcome("z8", checks)


# ---------------------------------------------------------------------------
# complex-structure suite
# ---------------------------------------------------------------------------

def complex_expected(n: int, k: int):
    """Expected factors and dimensions for the Kaehler-form operator."""
    factors = []
    expected = []
    for q in range(k // 2 + 1):
        if 2 * q == k:
            dim = comb(n, k // 2) ** 2
            if dim:
                factors.append(_lin(0))
                expected.append(("rational", Fraction(0), dim))
        else:
            mu = Fraction(k - 2 * q, k)
            dim = 2 * comb(n, k - q) * comb(n, q)
            if dim:
                factors.append(_imag(mu * mu))
                expected.append(("imaginary", mu, dim))
    return factors, expected


def suite_complex() -> VerificationOutcome:
    checks: list[CheckResult] = []
    for n in range(1, 5):
        j = complex_structure_form(n)
        for k in range(1, n + 1):
            b = operator_for(f"j{n}", k)
            factors, expected = complex_expected(n, k)
            c, rep = _spectrum_check(
                f"jn{n}_k{k}_spectrum",
                "Example 2.3",
                b.matrix,
                f"b_j{n}|L{k}R{2 * n}",
                factors,
                expected,
            )
            checks.append(c)
            deriv_ok = b.matrix == derivation_operator(j, k).scale(Fraction(1, k))
            checks.append(CheckResult(f"jn{n}_k{k}_derivation", "Remark 2.4", deriv_ok))

    # Hodge pairing on (n, k) = (3, 2): L2R6 versus L4R6
    j3 = complex_structure_form(3)
    compat = hodge_compat_check(j3, 2)
    checks.append(
        CheckResult(
            "j3_hodge_scaling",
            "Eq. 10",
            compat["scaling_law"],
            "" if compat["scaling_law"] else str(compat["failing_entry"]),
        )
    )
    rep2 = spectrum(operator_for("j3", 2).matrix, name="b_j3|L2R6")
    rep4 = spectrum(operator_for("j3", 4).matrix, name="b_j3|L4R6")
    ratio = Fraction(comb(2, 1), comb(4, 1))
    transport_ok = True
    for desc, dim in rep2.eigen:
        if desc.kind == "imaginary":
            if rep4.imaginary_dim(desc.value * ratio) != dim:
                transport_ok = False
        elif desc.kind == "rational" and desc.value == 0:
            if rep4.dim_of(Fraction(0)) != dim:
                transport_ok = False
    checks.append(CheckResult("j3_eigen_transport", "Eq. 10 / Remark 2.12", transport_ok))

    for n in range(1, 5):
        for k in range(1, n + 1):
            checks.extend(property_checks(f"j{n}", k, n_random=100 if n < 4 else 60))
    return VerificationOutcome("complex", checks)


# ---------------------------------------------------------------------------
# quaternionic suite
# ---------------------------------------------------------------------------

def suite_quaternionic() -> VerificationOutcome:
    checks: list[CheckResult] = []
    for m in (1, 2):
        b = operator_for(f"quat{m}", 2)
        rep = spectrum(b.matrix, name=f"b_quat{m}|L2R{4 * m}")
        rationals = {
            desc.value: dim for desc, dim in rep.eigen if desc.kind == "rational"
        }

        def pattern(c: Fraction) -> dict:
            expected: dict = {}
            for ratio, dim in (
                (Fraction(1), m * (2 * m + 1)),
                (Fraction(-1, 3), 3 * (2 * m * m - m - 1)),
                (Fraction(-(2 * m + 1), 3), 3),
            ):
                if dim:
                    expected[c * ratio] = expected.get(c * ratio, 0) + dim
            return expected

        fits = sorted(c for c in rationals if c != 0 and rationals == pattern(c))
        positive = [c for c in fits if c > 0]
        ok = bool(positive)
        if positive:
            detail = f"fitted scale c={positive[-1]}"
        elif fits:
            detail = f"no positive scale fits; exact fit at c={fits[0]}"
        else:
            detail = f"no scale fits; eigen {[(str(v), d) for v, d in sorted(rationals.items())]}"
        checks.append(CheckResult(f"quat{m}_spectrum", "Example 1.2", ok, detail))
        checks.extend(property_checks(f"quat{m}", 2))
    return VerificationOutcome("quaternionic", checks)


# ---------------------------------------------------------------------------
# hodge suite
# ---------------------------------------------------------------------------

def suite_hodge() -> VerificationOutcome:
    checks: list[CheckResult] = []
    cases = [
        ("theta8", 2),
        ("theta8", 3),
        ("thetabar7", 2),
        ("thetabar7", 3),
        ("z8", 2),
        ("z8", 3),
        ("j2", 1),
        ("quat2", 2),
    ]
    for name, k in cases:
        form = get_form(name)
        compat = hodge_compat_check(form, k)
        checks.append(
            CheckResult(
                f"scaling_{name}_k{k}",
                "Eq. 10",
                compat["scaling_law"],
                "" if compat["scaling_law"] else str(compat["failing_entry"]),
            )
        )
    for name in ("theta8", "z8"):
        compat = hodge_compat_check(get_form(name), 4)
        mid_ok = compat["scaling_law"] and compat["middle_left"] and compat["middle_right"]
        checks.append(CheckResult(f"middle_{name}", "Eq. 11", mid_ok))

    # Eigenvalue transport across complementary degrees for the spin(7) form
    b5 = operator_for("theta8", 5)
    c, _ = _spectrum_check(
        "theta8_l5_transport",
        "Eq. 10 / Remark 2.12",
        b5.matrix,
        "b_theta8|L5R8",
        [_lin(Fraction(-6, 5)), _lin(Fraction(1, 5))],
        [("rational", Fraction(-6, 5), 8), ("rational", Fraction(1, 5), 48)],
    )
    checks.append(c)

    for k in (1, 2):
        checks.extend(property_checks("epsilon10", k))
    return VerificationOutcome("hodge", checks)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITES = {
    "spin7": suite_spin7,
    "g2": suite_g2,
    "lifts": suite_lifts,
    "z8": suite_z8,
    "complex": suite_complex,
    "quaternionic": suite_quaternionic,
    "hodge": suite_hodge,
}

SUITE_ORDER = ("spin7", "g2", "lifts", "z8", "complex", "quaternionic", "hodge")


def run_suite(name: str) -> VerificationOutcome:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITE_ORDER)}") from None
    return fn()


def run_all(threads: int | None = None) -> list[VerificationOutcome]:
    if threads is None or threads <= 1:
        return [run_suite(name) for name in SUITE_ORDER]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = {name: pool.submit(run_suite, name) for name in SUITE_ORDER}
        return [futures[name].result() for name in SUITE_ORDER]
