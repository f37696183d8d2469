"""Validation, mutation robustness and basic structure of the cell model."""

import pytest

from graycat.builders import (arrow_category, discrete_gray,
                              double_suspension_gray, free_invertible_two_cell,
                              free_two_cell, group_gray_groupoid, iso_category)
from graycat.cells import (mutations_of_category, mutations_of_gray_category,
                           mutations_of_sesquicategory, product_gray,
                           terminal_category, terminal_gray_category,
                           terminal_two_category, unique_functor_to_terminal,
                           identity_gray_functor)
from graycat.corpus import gray_categories, two_categories, categories


def test_terminal_structures_valid():
    assert terminal_category().validate().ok
    assert terminal_two_category().validate().ok
    assert terminal_gray_category().validate().ok


@pytest.mark.parametrize("name", sorted(gray_categories()))
def test_corpus_gray_categories_valid(name):
    assert gray_categories()[name].validate().ok


@pytest.mark.parametrize("name", sorted(two_categories()))
def test_corpus_two_categories_valid(name):
    assert two_categories()[name].validate().ok


@pytest.mark.parametrize("name", sorted(categories()))
def test_corpus_categories_valid(name):
    assert categories()[name].validate().ok


def test_free_living_invertible_two_cell_valid():
    # exhaustive axiom enumeration on the 2-object, 2-cell-pair 2-category
    assert free_invertible_two_cell().validate().ok


def test_broken_interchange_is_reported():
    t = free_two_cell()
    # whiskering "al" by the identity must stay "al"; flipping it breaks
    # functoriality/interchange coherence and must be caught
    t.lwhisk[("idb", "al")] = "IDu"
    rep = t.validate()
    assert not rep.ok
    assert any("al" in str(v) for v in rep.violations)


def test_mutations_of_small_gray_categories_are_caught():
    for name in ("bz2", "sigma2z3", "2_terminal2"):
        g = gray_categories()[name]
        count = 0
        for desc, mut in mutations_of_gray_category(g):
            count += 1
            assert not mut.validate().ok, (name, desc)
        assert count > 0, name


def test_mutations_of_two_categories_are_caught():
    for name in ("free2cell", "freeinv2cell", "D(arrow)"):
        t = two_categories()[name]
        for desc, mut in mutations_of_sesquicategory(t):
            assert not mut.validate().ok, (name, desc)


def test_mutations_of_categories():
    # identity-table flips are always caught; a comp flip can land on a
    # different valid category (e.g. the absorbing monoid from B(Z/2)), so
    # comp mutations assert caught-or-different-structure
    for name, c in categories().items():
        for desc, mut in mutations_of_category(c):
            rep = mut.validate()
            if desc.startswith("identity"):
                assert not rep.ok, (name, desc)
            elif rep.ok:
                assert mut.comp != c.comp, (name, desc)


def test_gray_functor_identity_and_terminal():
    for name, g in gray_categories().items():
        assert identity_gray_functor(g).validate(g, g).ok, name
        fun, term = unique_functor_to_terminal(g)
        assert fun.validate(g, term).ok, name


def test_gray_functor_breaking_interchanger_preservation_reported():
    g = double_suspension_gray(3)
    f = identity_gray_functor(g)
    f.map3["w1"] = "w2"          # swap a 3-cell image
    rep = f.validate(g, g)
    assert not rep.ok
    assert any(v.axiom.startswith("functor-") for v in rep.violations)


def test_product_gray_valid():
    bz2 = group_gray_groupoid(2)
    prod = product_gray(bz2, bz2)
    assert prod.validate().ok
    assert len(prod.onecells) == 4


def test_hom_view_is_two_category():
    g = double_suspension_gray(3)
    hom = g.hom("*", "*")
    assert hom.validate().ok
    assert len(hom.twocells) == 3


def test_discrete_gray():
    g = discrete_gray(["x", "y"])
    assert g.validate().ok
    assert sorted(g.objects) == ["x", "y"]
