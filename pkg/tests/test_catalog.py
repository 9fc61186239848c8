from fractions import Fraction
from math import comb

import pytest

from formdual.catalog import (
    catalog,
    complex_structure_form,
    g2_four_form,
    g2_three_form,
    get_form,
    quaternionic_four_form,
    spin7_four_form,
    z8_four_form,
    z8_omega_partner,
)
from formdual.forms import hodge_star, inner_product, wedge


def test_catalog_names_and_shapes():
    cat = catalog()
    for entry in cat.values():
        assert entry.form.D == entry.D
        assert len(entry.form.to_vector()) == comb(entry.D, entry.form.k)
    assert set(cat) >= {"theta7", "thetabar7", "theta8", "theta8hat", "z8", "z8omega"}


def test_get_form_unknown():
    with pytest.raises(KeyError):
        get_form("nope")


def test_four_form_is_dual_of_three_form():
    assert g2_four_form() == hodge_star(g2_three_form())


def test_spin7_form_self_dual_and_norms():
    theta = spin7_four_form()
    assert hodge_star(theta) == theta
    assert inner_product(theta, theta) == 14
    assert inner_product(g2_three_form(), g2_three_form()) == 7
    assert inner_product(z8_four_form(), z8_four_form()) == 8


def test_kahler_top_power_is_volume_multiple():
    w = complex_structure_form(3)
    top = wedge(wedge(w, w), w)
    assert top.component((1, 2, 3, 4, 5, 6)) == 6  # n! = 3!


def test_quaternionic_m1_is_volume_multiple():
    q = quaternionic_four_form(1)
    assert q.component((1, 2, 3, 4)) == 6


def test_z8_partner_in_surd_field():
    omega = z8_omega_partner()
    assert omega.D == 8 and omega.k == 4
    assert len(omega.coeffs) == 4
    assert inner_product(omega, omega) == Fraction(8)
