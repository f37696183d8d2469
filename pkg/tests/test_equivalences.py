"""Equivalence detection, adjoint promotion, the tetrahedron machinery and
the 2-category fibration lemma."""

import pytest

from graycat.adjunctions import c_star, chaotic_C, add_identities_D
from graycat.builders import (arrow_category, cyclic_group_category,
                              double_suspension_gray, free_invertible_two_cell,
                              group_gray_groupoid, iso_category)
from graycat.cells import TwoFunctor, terminal_two_category
from graycat.corpus import gray_categories, u_star_of_two, z2_twist_sesqui
from graycat.equivalences import (AdjointBiequivalence, build_adjoint_biequivalence,
                                  check_tetrahedra, complete_T,
                                  complete_adjoint_biequivalence,
                                  enumerate_adjoint_biequivalences,
                                  is_biequivalence, is_equivalence_1cell,
                                  is_fibration_2cat, lift_adjoint_equivalence,
                                  promote_equivalence,
                                  promote_to_adjoint_equivalence)
from graycat.gray_ops import two_of
from graycat.report import ConsistencyError


def test_identity_is_equivalence():
    t = terminal_two_category()
    wit = is_equivalence_1cell(t, "id*")
    assert wit == ("id*", "ID*", "ID*")


def test_generating_onecell_of_2_1_not_equivalence():
    g = two_of(terminal_two_category())
    hom_level = g.hom("0", "1")
    # there is no reverse 1-cell at the Gray level
    assert is_biequivalence(g, "*") is None


def test_chaotic_iso_all_equivalences():
    c = chaotic_C(iso_category())
    for f in c.onecells:
        assert is_equivalence_1cell(c, f) is not None


def test_strict_iso_with_identity_twocells_is_equivalence():
    d = add_identities_D(iso_category())
    assert is_equivalence_1cell(d, "u") is not None
    assert is_equivalence_1cell(add_identities_D(arrow_category()), "v") is None


def test_promote_identity():
    t = terminal_two_category()
    adj = promote_to_adjoint_equivalence(t, "id*", "id*", "ID*")
    assert adj.counit == "ID*"
    assert adj.validate(t).ok


def test_promote_uniqueness_in_chaotic():
    c = chaotic_C(iso_category())
    wit = is_equivalence_1cell(c, "u")
    g, unit, _ = wit
    adj = promote_to_adjoint_equivalence(c, "u", g, unit)
    assert adj.validate(c).ok
    # exhaustive count: exactly one counit satisfies the triangle
    x, y = c.onecells["u"]
    fg = c.comp1[("u", g)]
    count = sum(
        1 for eps in c.twocells_between(fg, c.id1[y])
        if c.vcomp[(c.rwhisk[(eps, "u")], c.lwhisk[("u", unit)])] == c.id2["u"])
    assert count == 1


def test_free_invertible_two_cell_equivalence():
    t = free_invertible_two_cell()
    # u and v are equivalent 1-cells but not equivalences (no reverse 1-cell)
    assert is_equivalence_1cell(t, "u") is None
    assert t.is_invertible2("al")


def test_biequivalence_in_groupoids():
    for name in ("bz2", "bz3", "bz4", "sigma2z3", "cstar-z2twist"):
        g = gray_categories()[name]
        for f in g.onecells:
            assert is_biequivalence(g, f) is not None, (name, f)


def test_biequivalence_preserved_by_functors():
    from graycat.corpus import morphism_corpus
    for m in morphism_corpus():
        for f in m.dom.onecells:
            if is_biequivalence(m.dom, f) is not None:
                assert is_biequivalence(m.cod, m.fun.map1[f]) is not None, \
                    (m.name, f)


def test_complete_adjoint_biequivalence_identity():
    g = gray_categories()["terminal"]
    eta, s = complete_adjoint_biequivalence(g, "id*", "id*", "ID*")
    assert (eta, s) == ("ID*", "III*")


def test_complete_T_unique_nontrivial():
    """In the 3-cell-cyclic-group suspension the first tetrahedron reduces to
    S + T = 0, so each S forces a distinct unique T."""
    g = double_suspension_gray(3)
    eta = promote_equivalence(g.hom("*", "*"), "ID")
    for s_cell, want_t in (("w0", "w0"), ("w1", "w2"), ("w2", "w1")):
        partial = AdjointBiequivalence("id", "id", eta, eta, s_cell, "")
        assert complete_T(g, partial) == want_t


def test_complete_T_counts_are_one_corpus_wide():
    for name in ("terminal", "bz2", "sigma2z3", "cstar-z2twist"):
        g = gray_categories()[name]
        for ab in enumerate_adjoint_biequivalences(g):
            partial = AdjointBiequivalence(ab.f, ab.g, ab.eta, ab.eps,
                                           ab.s_cell, "")
            t = complete_T(g, partial)       # raises unless exactly one
            full = AdjointBiequivalence(ab.f, ab.g, ab.eta, ab.eps,
                                        ab.s_cell, t)
            assert check_tetrahedra(g, full) == (True, True), (name, ab.f)


def test_check_tetrahedra_on_built_structures():
    for name in ("terminal", "bz2", "bz3", "sigma2z3", "cstar-z2twist"):
        g = gray_categories()[name]
        for f in sorted(g.onecells):
            if is_biequivalence(g, f) is None:
                continue
            ab = build_adjoint_biequivalence(g, f)
            assert check_tetrahedra(g, ab) == (True, True), (name, f)


def test_corrupted_T_fails_first_tetrahedron():
    g = double_suspension_gray(3)
    ab = build_adjoint_biequivalence(g, "id")
    bad_t = {"w0": "w1", "w1": "w2", "w2": "w0"}[ab.t_cell]
    bad = AdjointBiequivalence(ab.f, ab.g, ab.eta, ab.eps, ab.s_cell, bad_t)
    first, second = check_tetrahedra(g, bad)
    assert not first
    assert not second        # both pastings reduce to the same sum here


def test_is_fibration_2cat():
    term = terminal_two_category()
    for name, t in (("D(iso)", add_identities_D(iso_category())),
                    ("C(iso)", chaotic_C(iso_category())),
                    ("free", free_invertible_two_cell())):
        to_term = TwoFunctor({x: "*" for x in t.objects},
                             {f: "id*" for f in t.onecells},
                             {a: "ID*" for a in t.twocells})
        assert is_fibration_2cat(to_term, t, term)[0], name
        idf = TwoFunctor({x: x for x in t.objects},
                         {f: f for f in t.onecells},
                         {a: a for a in t.twocells})
        assert is_fibration_2cat(idf, t, t)[0], name


def test_endpoint_inclusions_against_fibration_condition():
    # into D(iso): the equivalence u must lift strictly; inclusion of the
    # endpoint b provides it (u itself), so the inclusion is a fibration;
    # into D(arrow) there are no non-identity equivalences, vacuously true
    term = terminal_two_category()
    d_iso = add_identities_D(iso_category())
    inc = TwoFunctor({"*": "b"}, {"id*": "idb"}, {"ID*": "Didb"})
    ok, wit = is_fibration_2cat(inc, term, d_iso)
    assert not ok              # the equivalence u : a -> b has no lift upstairs
    d_arrow = add_identities_D(arrow_category())
    inc2 = TwoFunctor({"*": "b"}, {"id*": "idb"}, {"ID*": "Didb"})
    ok2, _ = is_fibration_2cat(inc2, term, d_arrow)
    assert ok2                 # no equivalences to lift beyond identities


def test_lift_adjoint_equivalence_identity_projection():
    t = chaotic_C(iso_category())
    idf = TwoFunctor({x: x for x in t.objects},
                     {f: f for f in t.onecells},
                     {a: a for a in t.twocells})
    adj = promote_equivalence(t, "u")
    beta = t.id2["u"]
    out = lift_adjoint_equivalence(idf, t, t, "u", "u", adj.bwd, adj.unit,
                                   adj.counit, beta, "u", beta)
    assert out.validate(t).ok
    assert out.fwd == "u" and out.bwd == adj.bwd


def test_lift_adjoint_equivalence_chaotic_projection():
    # project C(iso) onto the chaotic point and lift the adjoint equivalence
    dom = chaotic_C(iso_category())
    cod = terminal_two_category()
    p = TwoFunctor({x: "*" for x in dom.objects},
                   {f: "id*" for f in dom.onecells},
                   {a: "ID*" for a in dom.twocells})
    assert is_fibration_2cat(p, dom, cod)[0]
    adj_down = promote_equivalence(cod, "id*")
    adj_up = promote_equivalence(dom, "u")
    beta_bar = dom.id2["u"]
    out = lift_adjoint_equivalence(p, dom, cod, "u", "id*", "id*", "ID*",
                                   "ID*", cod.id2["id*"], "u", beta_bar)
    assert out.validate(dom).ok
    assert p.map1[out.fwd] == "id*" and p.map2[out.unit] == "ID*"
