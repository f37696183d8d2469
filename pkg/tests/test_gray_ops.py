"""The two-object classifier, object/1-cell-class category, groupoid
detection, representability counting and object biequivalence."""

import pytest

from graycat.adjunctions import c_star, chaotic_C
from graycat.builders import (arrow_category, cyclic_group_category,
                              double_suspension_gray, free_invertible_two_cell,
                              free_two_cell, group_gray_groupoid)
from graycat.cells import (empty_two_category, terminal_gray_category,
                           terminal_two_category)
from graycat.corpus import gray_categories, two_of_choices, z2_twist_sesqui
from graycat.gray_ops import (biequivalent_objects, hom_bijection_check,
                              is_gray_groupoid, pi_star, two_of)
from graycat.report import InputError


@pytest.mark.parametrize("name", sorted(two_of_choices()))
def test_two_of_valid(name):
    assert two_of(two_of_choices()[name]).validate().ok


def test_two_of_empty_is_discrete():
    g = two_of(empty_two_category())
    assert len(g.onecells) == 2 and len(g.objects) == 2


def test_two_of_terminal_is_free_living_onecell():
    g = two_of(terminal_two_category())
    assert len(g.onecells_between("0", "1")) == 1
    assert not g.onecells_between("1", "0")


def test_gray_groupoid_detection():
    assert is_gray_groupoid(group_gray_groupoid(2))[0]
    assert is_gray_groupoid(double_suspension_gray(3))[0]
    ok, wit = is_gray_groupoid(two_of(terminal_two_category()))
    assert not ok
    # the generating 1-cell of 2_1 (the X-object "*") has no reverse
    assert wit == ("onecell", "*")


def test_gray_groupoid_implies_homs_are_2_groupoids():
    # every hom of a Gray-groupoid has strictly invertible 1- and 2-cells
    for name in ("bz2", "bz4", "sigma2z3", "cstar-z2twist"):
        g = gray_categories()[name]
        assert is_gray_groupoid(g)[0]
        for x in g.objects:
            for y in g.objects:
                hom = g.hom(x, y)
                for p, (src, _) in hom.onecells.items():
                    assert any(hom.comp1.get((q, p)) == hom.id1[src]
                               for q in hom.onecells), (name, p)
                for m in hom.twocells:
                    assert hom.inverse2(m) is not None, (name, m)


def test_pi_star_terminal():
    cat, _ = pi_star(terminal_gray_category())
    assert len(cat.objects) == 1 and len(cat.morphisms) == 1
    assert cat.validate().ok


def test_pi_star_bz2_is_bz2():
    cat, cls = pi_star(group_gray_groupoid(2))
    assert len(cat.morphisms) == 2       # no nonidentity 2-cells: no merging
    assert cat.validate().ok


def test_pi_star_object_count_and_partition():
    for name, g in gray_categories().items():
        cat, cls = pi_star(g)
        assert len(cat.objects) == len(g.objects), name
        # classes partition the 1-cells of each hom
        for f, rep in cls.items():
            inner = rep[1:-1]
            assert g.onecells[inner] == g.onecells[f], name


def test_pi_star_chaotic_collapses_parallel_onecells():
    # C* C(arrow): every parallel pair is merged by the chaotic 2-cells
    cat = chaotic_C(cyclic_group_category(3))
    from graycat.corpus import u_star_of_two
    g = c_star(u_star_of_two(cat))
    pc, cls = pi_star(g)
    assert len(pc.morphisms_between("*", "*")) == 1


def test_biequivalent_objects():
    t21 = two_of(terminal_two_category())
    assert biequivalent_objects(t21, "0", "0")
    assert not biequivalent_objects(t21, "0", "1")
    bz2 = group_gray_groupoid(2)
    assert biequivalent_objects(bz2, "*", "*")
    with pytest.raises(InputError):
        biequivalent_objects(bz2, "*", "nope")


def test_hom_bijection_terminal_x():
    # three Gray-functors 2_1 -> 2_1: both endpoints and the generator
    t21 = two_of(terminal_two_category())
    ok, nf, nt = hom_bijection_check(t21, terminal_two_category())
    assert ok and nf == 3 and nt == 3


def test_hom_bijection_empty_x():
    # functors from 2_empty = object pairs
    for name in ("bz2", "discrete2"):
        g = gray_categories()[name]
        ok, nf, nt = hom_bijection_check(g, empty_two_category())
        assert ok and nf == len(g.objects) ** 2


def test_hom_bijection_free_two_cell_against_cstar():
    g = gray_categories()["cstar-z2twist"]
    ok, nf, nt = hom_bijection_check(g, free_two_cell())
    assert ok and nf == nt


def test_hom_bijection_corpus_wide():
    xs = two_of_choices()
    for gname in ("terminal", "bz2", "2_terminal2"):
        g = gray_categories()[gname]
        for xname in ("empty2", "terminal2"):
            ok, nf, nt = hom_bijection_check(g, xs[xname])
            assert ok, (gname, xname, nf, nt)
