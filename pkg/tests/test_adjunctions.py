"""The functor tower, the free/underlying counit, and the cofibrant
replacement comonad."""

import pytest

from graycat.adjunctions import (CounitE, add_identities_D, c_star, chaotic_C,
                                 check_comonad_laws, check_q_trivial_fibration,
                                 check_underlying_sesqui_of_q,
                                 cofibrant_replace, counit_E, forget_U,
                                 free_gray_L, is_surjection,
                                 q_naturality_check, u_star)
from graycat.builders import (arrow_category, cyclic_group_category,
                              double_suspension_gray, group_gray_groupoid,
                              iso_category, quotient_z4_to_z2)
from graycat.cells import (Sesquicategory, TwoFunctor, terminal_category,
                           terminal_gray_category, terminal_two_category)
from graycat.computads import FreeSesquiCat, underlying_computad
from graycat.corpus import categories, gray_categories, u_star_of_two, z2_twist_sesqui
from graycat.gray_ops import is_gray_groupoid
from graycat.report import UnsupportedOperation


# ---------------------------------------------------------------------------
# U, D, C


@pytest.mark.parametrize("name", sorted(categories()))
def test_ud_and_uc_are_identities(name):
    c = categories()[name]
    assert forget_U(add_identities_D(c)) == c
    assert forget_U(chaotic_C(c)) == c


def test_c_of_terminal_is_terminal():
    c = chaotic_C(terminal_category())
    t = terminal_two_category()
    assert len(c.objects) == 1 and len(c.onecells) == 1 and len(c.twocells) == 1


@pytest.mark.parametrize("name", sorted(categories()))
def test_d_and_c_outputs_valid(name):
    c = categories()[name]
    assert add_identities_D(c).validate().ok
    assert chaotic_C(c).validate().ok


# ---------------------------------------------------------------------------
# U*, C*, L


def test_u_star_c_star_counit():
    s = z2_twist_sesqui()
    assert u_star(c_star(s)) == s


def test_c_star_always_valid_and_invertible():
    for s in (z2_twist_sesqui(), u_star(group_gray_groupoid(2)),
              u_star_of_two(add_identities_D(arrow_category()))):
        g = c_star(s)
        assert g.validate().ok
        for m in g.threecells:
            assert g.inverse3(m) is not None


def test_c_star_of_two_parallel_twocells_hom_is_chaotic():
    s = z2_twist_sesqui()
    g = c_star(s)
    hom = g.hom("*", "*")
    # one object, two 1-cells, all four 2-cells present and invertible
    assert len(hom.objects) == 1 and len(hom.onecells) == 2
    assert len(hom.twocells) == 4


def test_c_star_groupoid_iff_input_invertible():
    assert is_gray_groupoid(c_star(z2_twist_sesqui()))[0]
    not_gpd = c_star(u_star_of_two(add_identities_D(arrow_category())))
    ok, wit = is_gray_groupoid(not_gpd)
    assert not ok and wit == ("onecell", "v")


def test_free_gray_L():
    bz2 = group_gray_groupoid(2)
    lz = free_gray_L(u_star(bz2), base=bz2)
    assert lz.counit_check().ok
    with pytest.raises(UnsupportedOperation):
        lz.threecells()
    assert lz.eval_formal_interchanger("Ig1", "Ig1") == "IIg0"
    lo = free_gray_L(u_star(bz2))
    with pytest.raises(UnsupportedOperation):
        lo.counit_check()


def test_L_on_discrete_is_discrete():
    from graycat.builders import discrete_gray
    g = discrete_gray(["x"])
    lz = free_gray_L(u_star(g), base=g)
    assert lz.counit_check().ok
    assert set(lz.onecells()) == set(g.onecells)


# ---------------------------------------------------------------------------
# the counit H V A -> A


def test_counit_discrete_bijective_below_generators():
    from graycat.builders import discrete_gray
    s = u_star(discrete_gray(["x", "y"]))
    ce = counit_E(s, bound=2)
    assert ce.check().ok
    free = FreeSesquiCat(ce.under.computad)
    # identity edges are kept, so words of identities evaluate to identities
    for p in free.paths(2):
        assert ce.eval1(p) == s.id1[p.start]


def test_counit_bz2_word_surjectivity():
    s = u_star(group_gray_groupoid(2))
    ce = counit_E(s, bound=2)
    assert ce.check().ok
    from graycat.computads import Path1
    assert ce.eval1(Path1("*", "*", ("g1", "g1"))) == "g0"


def test_counit_full_on_twocells():
    s = z2_twist_sesqui()
    ce = counit_E(s, bound=2)
    assert ce.check().ok


def test_is_surjection():
    s = z2_twist_sesqui()
    idf = TwoFunctor({"*": "*"}, {"e": "e"}, {"i": "i", "s": "s"})
    assert is_surjection(idf, s, s)[0]
    # inclusion of a proper sub-sesquicategory: identity 2-cell only
    sub = Sesquicategory(
        objects=frozenset({"*"}), onecells={"e": ("*", "*")},
        twocells={"i": ("e", "e")}, id1={"*": "e"}, id2={"e": "i"},
        comp1={("e", "e"): "e"}, vcomp={("i", "i"): "i"},
        lwhisk={("e", "i"): "i"}, rwhisk={("i", "e"): "i"})
    inc = TwoFunctor({"*": "*"}, {"e": "e"}, {"i": "i"})
    ok, wit = is_surjection(inc, sub, s)
    assert not ok and wit[0] == "twocell-full"


# ---------------------------------------------------------------------------
# cofibrant replacement and the comonad


@pytest.mark.parametrize("name", ("terminal", "bz2", "sigma2z3", "cstar-z2twist"))
def test_q_is_trivial_fibration(name):
    g = gray_categories()[name]
    qa = cofibrant_replace(g, bound=2)
    assert check_q_trivial_fibration(qa).ok


def test_q_terminal_words_of_identities():
    qa = cofibrant_replace(terminal_gray_category(), bound=3)
    words = qa.onecell_words()
    assert len(words) == 4          # lengths 0..3 over the single identity
    for w in words:
        assert qa.eval1(w) == "id*"
    # 3-cells between parallel 2-cell words form a singleton
    twos = qa.twocell_words()
    assert all(len(qa.threecells_between(a, b)) == 1
               for a in twos[:5] for b in twos[:5]
               if (qa.eval2(a), qa.eval2(b)) is not None)


@pytest.mark.parametrize("name", ("terminal", "bz2", "sigma2z3"))
def test_underlying_sesqui_of_q(name):
    g = gray_categories()[name]
    assert check_underlying_sesqui_of_q(g, bound=2).ok


@pytest.mark.parametrize("name", ("terminal", "bz2", "bz3", "sigma2z3",
                                  "cstar-z2twist"))
def test_comonad_laws(name):
    g = gray_categories()[name]
    bound = 3 if name in ("terminal", "bz2") else 2
    assert check_comonad_laws(g, bound=bound).ok


def test_q_naturality():
    qf, bz4, bz2 = quotient_z4_to_z2()
    assert q_naturality_check(qf, bz4, bz2, bound=2).ok
    from graycat.cells import identity_gray_functor
    g = gray_categories()["sigma2z3"]
    assert q_naturality_check(identity_gray_functor(g), g, g, bound=2).ok
