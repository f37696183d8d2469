"""The bundled desk-scale corpus: categories, 2-categories, Gray-categories,
computads, functors between them, composable pairs and retract squares.

Everything the property suites and the acceptance criteria quantify over
lives here, with stable names.
"""

from __future__ import annotations

from dataclasses import dataclass

from .adjunctions import add_identities_D, c_star, chaotic_C, u_star
from .builders import (arrow_category, coproduct_gray, cyclic_group_category,
                       discrete_category, discrete_gray, double_suspension_gray,
                       free_invertible_two_cell, free_two_cell,
                       group_gray_groupoid, iso_category, quotient_z4_to_z2)
from .cells import (Category, GrayCategory, GrayFunctor, Sesquicategory,
                    TwoCategory, compose_gray_functors, empty_two_category,
                    identity_gray_functor, terminal_category,
                    terminal_gray_category, terminal_two_category,
                    unique_functor_to_terminal)
from .computads import Computad, Path1, empty_path, path_from_edges
from .gray_ops import two_of
from .model import generating_cofibrations_gray, two_of_functor
from .pathobj import path_object, path_object_factorization


def z2_twist_sesqui() -> Sesquicategory:
    """One object, one 1-cell, 2-cells forming Z/2."""
    return Sesquicategory(
        objects=frozenset({"*"}), onecells={"e": ("*", "*")},
        twocells={"i": ("e", "e"), "s": ("e", "e")},
        id1={"*": "e"}, id2={"e": "i"},
        comp1={("e", "e"): "e"},
        vcomp={("i", "i"): "i", ("i", "s"): "s", ("s", "i"): "s", ("s", "s"): "i"},
        lwhisk={("e", "i"): "i", ("e", "s"): "s"},
        rwhisk={("i", "e"): "i", ("s", "e"): "s"})


def categories():
    return {
        "terminal": terminal_category(),
        "arrow": arrow_category(),
        "iso": iso_category(),
        "bz2cat": cyclic_group_category(2),
        "discrete2": discrete_category(["a", "b"]),
    }


def two_categories():
    base = {
        "terminal2": terminal_two_category(),
        "empty2": empty_two_category(),
        "free2cell": free_two_cell(),
        "freeinv2cell": free_invertible_two_cell(),
    }
    for name, cat in (("arrow", arrow_category()), ("iso", iso_category()),
                      ("bz2cat", cyclic_group_category(2))):
        base[f"D({name})"] = add_identities_D(cat)
        base[f"C({name})"] = chaotic_C(cat)
    return base

def two_of_choices():
    """The four X used for the bundled 2_X classifiers."""
    return {
        "empty2": empty_two_category(),
        "terminal2": terminal_two_category(),
        "free2cell": free_two_cell(),
        "freeinv2cell": free_invertible_two_cell(),
    }


def gray_categories():
    out = {
        "terminal": terminal_gray_category(),
        "bz2": group_gray_groupoid(2),
        "bz3": group_gray_groupoid(3),
        "bz4": group_gray_groupoid(4),
        "sigma2z3": double_suspension_gray(3),
        "discrete2": discrete_gray(["x", "y"]),
        "cstar-z2twist": c_star(z2_twist_sesqui()),
        "cstar-arrow": c_star(u_star_of_two(add_identities_D(arrow_category()))),
    }
    for name, x in two_of_choices().items():
        out[f"2_{name}"] = two_of(x)
    return out


def u_star_of_two(t: TwoCategory) -> Sesquicategory:
    """A 2-category regarded as a sesquicategory."""
    return Sesquicategory(t.objects, dict(t.onecells), dict(t.twocells),
                          dict(t.id1), dict(t.id2), dict(t.comp1),
                          dict(t.vcomp), dict(t.lwhisk), dict(t.rwhisk))


def gray_groupoids():
    gs = gray_categories()
    return {k: gs[k] for k in ("terminal", "bz2", "bz3", "bz4", "sigma2z3",
                               "discrete2", "cstar-z2twist")}


def computads():
    c1 = Computad(frozenset({"x", "y", "z"}),
                  {"f": ("x", "y"), "g": ("y", "z")}, {})
    fg = path_from_edges(c1, ("f", "g"))
    c1 = Computad(c1.vertices, c1.edges, {"al": (fg, fg)})
    c2 = Computad(frozenset({"x", "y"}),
                  {"a": ("x", "y"), "b": ("x", "y")}, {})
    pa = path_from_edges(c2, ("a",))
    pb = path_from_edges(c2, ("b",))
    c2 = Computad(c2.vertices, c2.edges, {"s": (pa, pb), "t": (pb, pa)})
    c3 = Computad(frozenset({"x"}), {"e": ("x", "x")}, {})
    pe2 = path_from_edges(c3, ("e", "e"))
    pe1 = path_from_edges(c3, ("e",))
    c3 = Computad(c3.vertices, c3.edges, {"m": (pe2, pe1)})
    return {"whisker-loop": c1, "parallel-pair": c2, "monoid-like": c3}


@dataclass
class Morphism:
    name: str
    fun: GrayFunctor
    dom: GrayCategory
    cod: GrayCategory
    groupoids: bool = False


def _include_terminal_into(g, obj):
    term = terminal_gray_category()
    return GrayFunctor({"*": obj}, {"id*": g.id1[obj]},
                       {"ID*": g.id2[g.id1[obj]]},
                       {"III*": g.id3[g.id2[g.id1[obj]]]}), term


def _collapse_to_base(g: GrayCategory, base_obj):
    """The functor sending everything to the identity tower at base_obj of
    its own image; only valid for one-object targets."""
    return None


def morphism_corpus():
    """About twenty Gray-functors with their (dom, cod), used by the
    classifier and closure suites."""
    gs = gray_categories()
    out = []

    def add(name, fun, dom, cod, groupoids=False):
        out.append(Morphism(name, fun, dom, cod, groupoids))

    for key in ("terminal", "bz2", "sigma2z3", "cstar-z2twist", "2_terminal2"):
        add(f"id[{key}]", identity_gray_functor(gs[key]), gs[key], gs[key],
            groupoids=key != "2_terminal2")
    for key in ("bz2", "bz3", "sigma2z3", "discrete2"):
        fun, term = unique_functor_to_terminal(gs[key])
        add(f"to-terminal[{key}]", fun, gs[key], term, groupoids=True)
    qf, bz4, bz2 = quotient_z4_to_z2()
    add("quotient[bz4->bz2]", qf, bz4, bz2, groupoids=True)
    inc, term = _include_terminal_into(gs["bz2"], "*")
    add("include[1->bz2]", inc, term, gs["bz2"], groupoids=True)
    inc2, term2 = _include_terminal_into(gs["discrete2"], "x")
    add("include[1->discrete2]", inc2, term2, gs["discrete2"], groupoids=True)
    # path-object legs for B(Z/2)
    po = path_object(gs["bz2"])
    add("D[bz2->P]", po.d, gs["bz2"], po.pb, groupoids=True)
    add("P[P->bz2]", po.p, po.pb, gs["bz2"], groupoids=True)
    add("Pprime[P->bz2]", po.p_prime, po.pb, gs["bz2"], groupoids=True)
    prod, pairing, _ = path_object_factorization(gs["bz2"], po)
    add("pairing[P->bz2xbz2]", pairing, po.pb, prod, groupoids=True)
    # a hom-level non-fibration: 2_j for the inclusion arrow -> iso
    from .cells import TwoFunctor
    d_arrow = add_identities_D(arrow_category())
    d_iso = add_identities_D(iso_category())
    j = TwoFunctor({"a": "a", "b": "b"},
                   {"ida": "ida", "idb": "idb", "v": "u"},
                   {"Dida": "Dida", "Didb": "Didb", "Dv": "Du"})
    tw, t_dom, t_cod = two_of_functor(j, d_arrow, d_iso)
    add("2_j[arrow->iso]", tw, t_dom, t_cod)
    # generating cofibrations
    for name, fun, dom, cod in generating_cofibrations_gray():
        add(f"gen-cofib[{name}]", fun, dom, cod)
    return out


def composable_pairs():
    """(F, G, a, b, c) with F : a -> b and G : b -> c for the 2-out-of-3 suite."""
    gs = gray_categories()
    bz2 = gs["bz2"]
    po = path_object(bz2)
    idb = identity_gray_functor(bz2)
    to_t, term = unique_functor_to_terminal(bz2)
    inc, _ = _include_terminal_into(bz2, "*")
    qf, bz4, _ = quotient_z4_to_z2()
    to_t4, _ = unique_functor_to_terminal(bz4)
    return [
        (po.d, po.p, bz2, po.pb, bz2),
        (po.d, po.p_prime, bz2, po.pb, bz2),
        (idb, idb, bz2, bz2, bz2),
        (inc, to_t, term, bz2, term),
        (qf, to_t, bz4, bz2, term),
        (idb, to_t, bz2, bz2, term),
    ]


def retract_squares():
    """(F, F2, i, r, j, s, a, b, a2, b2): F2 is a retract of F."""
    gs = gray_categories()
    bz2 = gs["bz2"]
    term = terminal_gray_category()
    idb = identity_gray_functor(bz2)
    idt = identity_gray_functor(term)
    inc, _ = _include_terminal_into(bz2, "*")
    to_t, _ = unique_functor_to_terminal(bz2)
    squares = [
        # the identity on the terminal is a retract of the identity on B(Z/2)
        (idb, idt, inc, to_t, inc, to_t, bz2, bz2, term, term),
    ]
    # the quotient is a retract of quotient + terminal summand
    qf, bz4, bz2c = quotient_z4_to_z2()
    big_dom = coproduct_gray(bz4, term)
    big_cod = coproduct_gray(bz2c, term)
    big = GrayFunctor(
        {**{f"L.{k}": f"L.{v}" for k, v in qf.obj_map.items()},
         "R.*": "R.*"},
        {**{f"L.{k}": f"L.{v}" for k, v in qf.map1.items()},
         "R.id*": "R.id*"},
        {**{f"L.{k}": f"L.{v}" for k, v in qf.map2.items()},
         "R.ID*": "R.ID*"},
        {**{f"L.{k}": f"L.{v}" for k, v in qf.map3.items()},
         "R.III*": "R.III*"})

    def summand_in(g):
        return GrayFunctor({k: f"L.{k}" for k in g.objects},
                           {k: f"L.{k}" for k in g.onecells},
                           {k: f"L.{k}" for k in g.twocells},
                           {k: f"L.{k}" for k in g.threecells})

    def collapse(g, cop):
        omap = {f"L.{k}": k for k in g.objects}
        omap["R.*"] = sorted(g.objects)[0]
        base = sorted(g.objects)[0]
        m1 = {f"L.{k}": k for k in g.onecells}
        m1["R.id*"] = g.id1[base]
        m2 = {f"L.{k}": k for k in g.twocells}
        m2["R.ID*"] = g.id2[g.id1[base]]
        m3 = {f"L.{k}": k for k in g.threecells}
        m3["R.III*"] = g.id3[g.id2[g.id1[base]]]
        return GrayFunctor(omap, m1, m2, m3)

    squares.append((big, qf, summand_in(bz4), collapse(bz4, big_dom),
                    summand_in(bz2c), collapse(bz2c, big_cod),
                    big_dom, big_cod, bz4, bz2c))
    return squares


def nonexamples():
    """Hand-built failures, two per predicate."""
    gs = gray_categories()
    out = {}
    qf, bz4, bz2 = quotient_z4_to_z2()
    to_t, term = unique_functor_to_terminal(bz2)
    out["not-weq"] = [("bz2->terminal", to_t, bz2, term),
                      ("bz4->bz2", qf, bz4, bz2)]
    inc2, term2 = _include_terminal_into(gs["discrete2"], "x")
    ms = {m.name: m for m in morphism_corpus()}
    tw = ms["2_j[arrow->iso]"]
    out["not-fibration"] = [("1->discrete2", inc2, term2, gs["discrete2"]),
                            ("2_j[arrow->iso]", tw.fun, tw.dom, tw.cod)]
    sig_to_t, _ = unique_functor_to_terminal(gs["sigma2z3"])
    out["not-trivial-fibration"] = [
        ("sigma2z3->terminal", sig_to_t, gs["sigma2z3"], term),
        ("1->discrete2", inc2, term2, gs["discrete2"])]
    return out
