import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from formdual.combinat import basis
from formdual.forms import (
    KForm,
    hodge_star,
    inner_product,
    kform_from_json,
    kform_to_json,
    wedge,
)


def _random_form(rng, d, k, terms=5):
    all_idx = basis(d, k)
    chosen = rng.sample(all_idx, min(terms, len(all_idx)))
    return KForm.from_terms(d, k, [(idx, Fraction(rng.randint(-5, 5), rng.randint(1, 5))) for idx in chosen])


forms_2 = st.integers(0, 10**6).map(lambda s: _random_form(random.Random(s), 6, 2))
forms_3 = st.integers(0, 10**6).map(lambda s: _random_form(random.Random(s), 6, 3))


def test_from_terms_antisymmetrizes():
    f = KForm.from_terms(4, 2, [((2, 1), 1)])
    assert f.component((1, 2)) == -1
    g = KForm.from_terms(4, 2, [((1, 1), 1)])
    assert g.is_zero()


def test_vector_roundtrip():
    f = KForm.from_terms(5, 2, [((1, 2), Fraction(3, 7)), ((4, 5), -2)])
    assert KForm.from_vector(5, 2, f.to_vector()) == f


def test_json_roundtrip():
    f = KForm.from_terms(5, 2, [((1, 2), Fraction(3, 7)), ((4, 5), -2)])
    assert kform_from_json(kform_to_json(f)) == f


@given(a=forms_2, b=forms_3)
@settings(max_examples=50, deadline=None)
def test_wedge_graded_commutativity(a, b):
    assert wedge(a, b) == wedge(b, a).scale((-1) ** (a.k * b.k))


@given(a=forms_2, b=forms_2)
@settings(max_examples=50, deadline=None)
def test_wedge_bilinear(a, b):
    c = _random_form(random.Random(1), 6, 3)
    assert wedge(a + b, c) == wedge(a, c) + wedge(b, c)


@given(f=forms_3)
@settings(max_examples=50, deadline=None)
def test_hodge_star_involution_sign(f):
    # on R^6 with k=3: ** = (-1)^{k(D-k)} = -1
    assert hodge_star(hodge_star(f)) == f.scale((-1) ** (f.k * (f.D - f.k)))


@given(a=forms_2, b=forms_2)
@settings(max_examples=50, deadline=None)
def test_inner_product_symmetric_and_star_isometry(a, b):
    assert inner_product(a, b) == inner_product(b, a)
    assert inner_product(hodge_star(a), hodge_star(b)) == inner_product(a, b)


def test_wedge_with_dual_gives_norm_volume():
    f = KForm.from_terms(4, 2, [((1, 2), 2), ((3, 4), Fraction(1, 3))])
    vol = wedge(f, hodge_star(f))
    assert vol.component(tuple(range(1, 5))) == inner_product(f, f)


def test_mismatched_dimensions_rejected():
    f = KForm.basis_form(4, (1, 2))
    g = KForm.basis_form(5, (1, 2))
    with pytest.raises(ValueError):
        _ = f + g
