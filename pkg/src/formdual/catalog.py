"""Constructors for every named invariant form used by the verification suite."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .field import QuadExt
from .forms import KForm, wedge
from .lifting import hodge_dual_lift

SQRT2 = QuadExt(0, 1, 2)

_G2_THREE = [(1, 2, 3), (4, 3, 5), (4, 7, 1), (5, 1, 6), (5, 7, 2), (6, 2, 4), (6, 7, 3)]
_G2_FOUR = [(1, 2, 4, 5), (1, 2, 7, 6), (1, 3, 4, 6), (1, 3, 5, 7), (2, 3, 5, 6), (2, 4, 3, 7), (4, 5, 6, 7)]
_SPIN7_EXTRA = [(1, 2, 3, 8), (4, 3, 5, 8), (4, 7, 1, 8), (5, 1, 6, 8), (5, 7, 2, 8), (6, 2, 4, 8), (6, 7, 3, 8)]
_Z8_FOUR = [(1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6), (4, 5, 6, 7), (5, 6, 7, 8), (6, 7, 8, 1), (7, 8, 1, 2), (8, 1, 2, 3)]


@lru_cache(maxsize=None)
def g2_three_form() -> KForm:
    """The seven-component three-form on R^7."""
    return KForm.from_terms(7, 3, [(idx, 1) for idx in _G2_THREE])


@lru_cache(maxsize=None)
def g2_four_form() -> KForm:
    """The Hodge dual of the three-form above, on R^7."""
    return KForm.from_terms(7, 4, [(idx, 1) for idx in _G2_FOUR])


@lru_cache(maxsize=None)
def spin7_four_form() -> KForm:
    """The self-dual invariant four-form on R^8 with 14 unit components."""
    terms = [(idx, 1) for idx in _G2_FOUR] + [(idx, 1) for idx in _SPIN7_EXTRA]
    return KForm.from_terms(8, 4, terms)


@lru_cache(maxsize=None)
def complex_structure_form(n: int) -> KForm:
    """The standard Kaehler two-form on R^{2n}."""
    if n < 1:
        raise ValueError("need n >= 1")
    return KForm.from_terms(2 * n, 2, [((2 * a - 1, 2 * a), 1) for a in range(1, n + 1)])


def _omega_triple(m: int) -> tuple[KForm, KForm, KForm]:
    """The standard hypercomplex triple of Kaehler forms on R^{4m}."""
    d = 4 * m
    w1, w2, w3 = [], [], []
    for a in range(1, m + 1):
        i = 4 * a - 3
        w1 += [((i, i + 1), 1), ((i + 2, i + 3), 1)]
        w2 += [((i, i + 2), 1), ((i + 1, i + 3), -1)]
        w3 += [((i, i + 3), 1), ((i + 1, i + 2), 1)]
    return tuple(KForm.from_terms(d, 2, w) for w in (w1, w2, w3))


@lru_cache(maxsize=None)
def quaternionic_four_form(m: int) -> KForm:
    """Sum of the squares of the hypercomplex Kaehler triple on R^{4m}."""
    if m < 1:
        raise ValueError("need m >= 1")
    w1, w2, w3 = _omega_triple(m)
    return wedge(w1, w1) + wedge(w2, w2) + wedge(w3, w3)


@lru_cache(maxsize=None)
def z8_four_form() -> KForm:
    """The cyclically-invariant four-form on R^8 with eight components."""
    return KForm.from_terms(8, 4, [(idx, 1) for idx in _Z8_FOUR])


@lru_cache(maxsize=None)
def z8_omega_partner() -> KForm:
    """The partner form omega = sqrt(2)(e2367 - e1458 + e1256 + e3478).

    Built as the difference combination of the u-vectors spanning the
    +-2*sqrt(2) eigenspaces; its coefficients live in Q(sqrt(2)).
    """
    half = Fraction(1, 2)
    u1p, u1m = _z8_u_vectors(1)
    u2p, u2m = _z8_u_vectors(2)
    return half * (u1p - u1m + u2p - u2m)


def _z8_u_vectors(which: int) -> tuple[KForm, KForm]:
    """The explicit u_1^± / u_2^± four-forms of the cyclic example."""
    if which == 1:
        base = [((2, 3, 4, 5), 1), ((1, 2, 3, 8), -1), ((1, 6, 7, 8), -1), ((4, 5, 6, 7), 1)]
        surd = [((2, 3, 6, 7), 1), ((1, 4, 5, 8), -1)]
    elif which == 2:
        base = [((1, 2, 3, 4), 1), ((1, 2, 7, 8), 1), ((3, 4, 5, 6), 1), ((5, 6, 7, 8), 1)]
        # the second surd coefficient is +1: forced by the shift orbit
        # u1 -> u2 -> u1 and by membership in the 2*sqrt(2) eigenspace
        surd = [((1, 2, 5, 6), 1), ((3, 4, 7, 8), 1)]
    else:
        raise ValueError("which must be 1 or 2")
    plus = KForm.from_terms(8, 4, base + [(idx, SQRT2 * c) for idx, c in surd])
    minus = KForm.from_terms(8, 4, base + [(idx, -SQRT2 * c) for idx, c in surd])
    return plus, minus


@lru_cache(maxsize=None)
def theta_hat_form() -> KForm:
    """The six-form on R^10 dual to the trivially lifted spin(7) form."""
    return hodge_dual_lift(spin7_four_form(), 10)


@lru_cache(maxsize=None)
def epsilon_plane_form() -> KForm:
    """The area form of the distinguished 2-plane inside R^10."""
    return KForm.basis_form(10, (9, 10))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    D: int
    form: KForm
    note: str


@lru_cache(maxsize=None)
def catalog() -> dict[str, CatalogEntry]:
    entries = [
        CatalogEntry("theta7", 7, g2_three_form(), "three-form with G2 symmetry on R^7"),
        CatalogEntry("thetabar7", 7, g2_four_form(), "four-form *theta with G2 symmetry on R^7"),
        CatalogEntry("theta8", 8, spin7_four_form(), "self-dual four-form with spin(7) symmetry on R^8"),
        CatalogEntry("theta8hat", 10, theta_hat_form(), "six-form dual of the lifted spin(7) form on R^10"),
        CatalogEntry("j1", 2, complex_structure_form(1), "Kaehler two-form on R^2"),
        CatalogEntry("j2", 4, complex_structure_form(2), "Kaehler two-form on R^4"),
        CatalogEntry("j3", 6, complex_structure_form(3), "Kaehler two-form on R^6"),
        CatalogEntry("j4", 8, complex_structure_form(4), "Kaehler two-form on R^8"),
        CatalogEntry("quat1", 4, quaternionic_four_form(1), "quaternionic four-form on R^4 (6x volume)"),
        CatalogEntry("quat2", 8, quaternionic_four_form(2), "quaternionic four-form on R^8"),
        CatalogEntry("z8", 8, z8_four_form(), "cyclically invariant four-form on R^8"),
        CatalogEntry("z8omega", 8, z8_omega_partner(), "partner of the cyclic four-form; Q(sqrt 2) coefficients"),
        CatalogEntry("epsilon10", 10, epsilon_plane_form(), "area form of the e9-e10 plane in R^10"),
    ]
    return {e.name: e for e in entries}


def get_form(name: str) -> KForm:
    try:
        return catalog()[name].form
    except KeyError:
        raise KeyError(f"unknown catalog form {name!r}; known: {', '.join(sorted(catalog()))}") from None
