"""Hand-rolled small categories, 2-categories and Gray-categories.

These are the primitive corpus ingredients; derived corpus entries (chaotic
completions, classifiers, images) are assembled in corpus.py.
"""

from __future__ import annotations

from .cells import Category, GrayCategory, GrayFunctor, TwoCategory


# ---------------------------------------------------------------------------
# categories


def cyclic_group_category(n, prefix="g"):
    """B(Z/n) as a one-object category; morphism k is written g0, g1, ..."""
    objects = frozenset({"*"})
    mor = {f"{prefix}{k}": ("*", "*") for k in range(n)}
    comp = {(f"{prefix}{a}", f"{prefix}{b}"): f"{prefix}{(a + b) % n}"
            for a in range(n) for b in range(n)}
    return Category(objects, mor, {"*": f"{prefix}0"}, comp)


def arrow_category():
    """The free-living arrow 0 -> 1."""
    return Category(frozenset({"a", "b"}),
                    {"ida": ("a", "a"), "idb": ("b", "b"), "v": ("a", "b")},
                    {"a": "ida", "b": "idb"},
                    {("ida", "ida"): "ida", ("idb", "idb"): "idb",
                     ("v", "ida"): "v", ("idb", "v"): "v"})


def iso_category():
    """The free-living isomorphism."""
    return Category(frozenset({"a", "b"}),
                    {"ida": ("a", "a"), "idb": ("b", "b"),
                     "u": ("a", "b"), "u-": ("b", "a")},
                    {"a": "ida", "b": "idb"},
                    {("ida", "ida"): "ida", ("idb", "idb"): "idb",
                     ("u", "ida"): "u", ("idb", "u"): "u",
                     ("u-", "idb"): "u-", ("ida", "u-"): "u-",
                     ("u-", "u"): "ida", ("u", "u-"): "idb"})


def discrete_category(names):
    objects = frozenset(names)
    return Category(objects, {f"id{x}": (x, x) for x in objects},
                    {x: f"id{x}" for x in objects},
                    {(f"id{x}", f"id{x}"): f"id{x}" for x in objects})


# ---------------------------------------------------------------------------
# 2-categories


def empty_two():
    return TwoCategory(frozenset(), {}, {}, {}, {}, {}, {}, {}, {})


def _fill_whiskers(one, two, id1, id2, comp1):
    """Whisker tables for 2-categories whose non-identity 2-cells are only
    ever whiskered by identity 1-cells: identity 2-cells whisker onto the
    composite's identity, everything else is untouched."""
    inv_id2 = {v: k for k, v in id2.items()}
    lwhisk, rwhisk = {}, {}
    for a, (s, _) in two.items():
        x, y = one[s]
        for h, (hs, _ht) in one.items():
            if hs != y:
                continue
            if h == id1[y]:
                lwhisk[(h, a)] = a
            elif a in inv_id2:
                lwhisk[(h, a)] = id2[comp1[(h, inv_id2[a])]]
            else:
                raise ValueError(f"no whisker rule for ({h}, {a})")
        for k, (_ks, kt) in one.items():
            if kt != x:
                continue
            if k == id1[x]:
                rwhisk[(a, k)] = a
            elif a in inv_id2:
                rwhisk[(a, k)] = id2[comp1[(inv_id2[a], k)]]
            else:
                raise ValueError(f"no whisker rule for ({a}, {k})")
    return lwhisk, rwhisk


def free_two_cell():
    """Two objects, two parallel 1-cells, one 2-cell u => v (plus identities)."""
    one = {"ida": ("a", "a"), "idb": ("b", "b"), "u": ("a", "b"), "v": ("a", "b")}
    two = {"IDida": ("ida", "ida"), "IDidb": ("idb", "idb"),
           "IDu": ("u", "u"), "IDv": ("v", "v"), "al": ("u", "v")}
    comp1 = {("ida", "ida"): "ida", ("idb", "idb"): "idb",
             ("u", "ida"): "u", ("idb", "u"): "u",
             ("v", "ida"): "v", ("idb", "v"): "v"}
    vcomp = {}
    for a, (s, t) in two.items():
        for b, (s2, t2) in two.items():
            if t == s2:
                if b.startswith("ID"):
                    vcomp[(b, a)] = a
                elif a.startswith("ID"):
                    vcomp[(b, a)] = b
    id1 = {"a": "ida", "b": "idb"}
    id2 = {"ida": "IDida", "idb": "IDidb", "u": "IDu", "v": "IDv"}
    lwhisk, rwhisk = _fill_whiskers(one, two, id1, id2, comp1)
    return TwoCategory(frozenset({"a", "b"}), one, two, id1, id2,
                       comp1, vcomp, lwhisk, rwhisk)


def free_invertible_two_cell():
    """Two objects, two parallel 1-cells, a strictly invertible 2-cell pair."""
    one = {"ida": ("a", "a"), "idb": ("b", "b"), "u": ("a", "b"), "v": ("a", "b")}
    two = {"IDida": ("ida", "ida"), "IDidb": ("idb", "idb"),
           "IDu": ("u", "u"), "IDv": ("v", "v"),
           "al": ("u", "v"), "al-": ("v", "u")}
    comp1 = {("ida", "ida"): "ida", ("idb", "idb"): "idb",
             ("u", "ida"): "u", ("idb", "u"): "u",
             ("v", "ida"): "v", ("idb", "v"): "v"}
    vcomp = {}
    for a, (s, t) in two.items():
        for b, (s2, t2) in two.items():
            if t != s2:
                continue
            if b.startswith("ID"):
                vcomp[(b, a)] = a
            elif a.startswith("ID"):
                vcomp[(b, a)] = b
            elif (b, a) == ("al-", "al"):
                vcomp[(b, a)] = "IDu"
            elif (b, a) == ("al", "al-"):
                vcomp[(b, a)] = "IDv"
    id1 = {"a": "ida", "b": "idb"}
    id2 = {"ida": "IDida", "idb": "IDidb", "u": "IDu", "v": "IDv"}
    lwhisk, rwhisk = _fill_whiskers(one, two, id1, id2, comp1)
    return TwoCategory(frozenset({"a", "b"}), one, two, id1, id2,
                       comp1, vcomp, lwhisk, rwhisk)


# ---------------------------------------------------------------------------
# Gray-categories


def group_gray_groupoid(n, prefix="g"):
    """B(Z/n) as a one-object Gray-groupoid with only identity 2- and 3-cells."""
    mor = [f"{prefix}{k}" for k in range(n)]
    one = {m: ("*", "*") for m in mor}
    two = {f"I{m}": (m, m) for m in mor}
    three = {f"II{m}": (f"I{m}", f"I{m}") for m in mor}
    comp1 = {(f"{prefix}{a}", f"{prefix}{b}"): f"{prefix}{(a + b) % n}"
             for a in range(n) for b in range(n)}
    vcomp2 = {(f"I{m}", f"I{m}"): f"I{m}" for m in mor}
    vcomp3 = {(f"II{m}", f"II{m}"): f"II{m}" for m in mor}
    whisk2l = {(h, f"I{m}"): f"I{comp1[(h, m)]}" for h in mor for m in mor}
    whisk2r = {(f"I{m}", k): f"I{comp1[(m, k)]}" for m in mor for k in mor}
    whisk3l = {(h, f"II{m}"): f"II{comp1[(h, m)]}" for h in mor for m in mor}
    whisk3r = {(f"II{m}", k): f"II{comp1[(m, k)]}" for m in mor for k in mor}
    whisk32l = {(f"I{m}", f"II{m}"): f"II{m}" for m in mor}
    whisk32r = {(f"II{m}", f"I{m}"): f"II{m}" for m in mor}
    interchanger = {(f"I{b}", f"I{a}"): f"II{comp1[(b, a)]}" for b in mor for a in mor}
    return GrayCategory(
        objects=frozenset({"*"}), onecells=one, twocells=two, threecells=three,
        id1={"*": f"{prefix}0"}, id2={m: f"I{m}" for m in mor},
        id3={f"I{m}": f"II{m}" for m in mor},
        comp1=comp1, vcomp2=vcomp2, vcomp3=vcomp3,
        whisk2l=whisk2l, whisk2r=whisk2r, whisk3l=whisk3l, whisk3r=whisk3r,
        whisk32l=whisk32l, whisk32r=whisk32r, interchanger=interchanger)


def quotient_z4_to_z2():
    """The reduction-mod-2 Gray-functor B(Z/4) -> B(Z/2)."""
    dom = group_gray_groupoid(4)
    cod = group_gray_groupoid(2)
    omap = {"*": "*"}
    m1 = {f"g{k}": f"g{k % 2}" for k in range(4)}
    m2 = {f"Ig{k}": f"Ig{k % 2}" for k in range(4)}
    m3 = {f"IIg{k}": f"IIg{k % 2}" for k in range(4)}
    return GrayFunctor(omap, m1, m2, m3), dom, cod


def double_suspension_gray(n, prefix="w"):
    """One object, one 1-cell, one 2-cell, 3-cells the cyclic group Z/n."""
    cells3 = [f"{prefix}{k}" for k in range(n)]
    three = {m: ("ID", "ID") for m in cells3}
    vcomp3 = {(f"{prefix}{a}", f"{prefix}{b}"): f"{prefix}{(a + b) % n}"
              for a in range(n) for b in range(n)}
    return GrayCategory(
        objects=frozenset({"*"}),
        onecells={"id": ("*", "*")},
        twocells={"ID": ("id", "id")},
        threecells=three,
        id1={"*": "id"}, id2={"id": "ID"}, id3={"ID": f"{prefix}0"},
        comp1={("id", "id"): "id"},
        vcomp2={("ID", "ID"): "ID"},
        vcomp3=vcomp3,
        whisk2l={("id", "ID"): "ID"}, whisk2r={("ID", "id"): "ID"},
        whisk3l={("id", m): m for m in cells3},
        whisk3r={(m, "id"): m for m in cells3},
        whisk32l={("ID", m): m for m in cells3},
        whisk32r={(m, "ID"): m for m in cells3},
        interchanger={("ID", "ID"): f"{prefix}0"})


def discrete_gray(names):
    objects = frozenset(names)
    one = {f"id{x}": (x, x) for x in objects}
    two = {f"I{x}": (f"id{x}", f"id{x}") for x in objects}
    three = {f"II{x}": (f"I{x}", f"I{x}") for x in objects}
    return GrayCategory(
        objects=objects, onecells=one, twocells=two, threecells=three,
        id1={x: f"id{x}" for x in objects},
        id2={f"id{x}": f"I{x}" for x in objects},
        id3={f"I{x}": f"II{x}" for x in objects},
        comp1={(f"id{x}", f"id{x}"): f"id{x}" for x in objects},
        vcomp2={(f"I{x}", f"I{x}"): f"I{x}" for x in objects},
        vcomp3={(f"II{x}", f"II{x}"): f"II{x}" for x in objects},
        whisk2l={(f"id{x}", f"I{x}"): f"I{x}" for x in objects},
        whisk2r={(f"I{x}", f"id{x}"): f"I{x}" for x in objects},
        whisk3l={(f"id{x}", f"II{x}"): f"II{x}" for x in objects},
        whisk3r={(f"II{x}", f"id{x}"): f"II{x}" for x in objects},
        whisk32l={(f"I{x}", f"II{x}"): f"II{x}" for x in objects},
        whisk32r={(f"II{x}", f"I{x}"): f"II{x}" for x in objects},
        interchanger={(f"I{x}", f"I{x}"): f"II{x}" for x in objects})


def coproduct_gray(g1: GrayCategory, g2: GrayCategory, p1="L.", p2="R."):
    """Disjoint union; cell identifiers get distinguishing prefixes."""
    def re1(d, pre):
        return {pre + k: tuple(pre + c for c in v) for k, v in d.items()}

    def retab(d, pre):
        return {tuple(pre + c for c in k): pre + v for k, v in d.items()}

    def build(g, pre):
        return dict(
            objects={pre + x for x in g.objects},
            onecells=re1(g.onecells, pre), twocells=re1(g.twocells, pre),
            threecells=re1(g.threecells, pre),
            id1={pre + k: pre + v for k, v in g.id1.items()},
            id2={pre + k: pre + v for k, v in g.id2.items()},
            id3={pre + k: pre + v for k, v in g.id3.items()},
            comp1=retab(g.comp1, pre), vcomp2=retab(g.vcomp2, pre),
            vcomp3=retab(g.vcomp3, pre),
            whisk2l=retab(g.whisk2l, pre), whisk2r=retab(g.whisk2r, pre),
            whisk3l=retab(g.whisk3l, pre), whisk3r=retab(g.whisk3r, pre),
            whisk32l=retab(g.whisk32l, pre), whisk32r=retab(g.whisk32r, pre),
            interchanger=retab(g.interchanger, pre))

    a, b = build(g1, p1), build(g2, p2)
    merged = {}
    for key in a:
        if key == "objects":
            merged[key] = frozenset(a[key] | b[key])
        else:
            merged[key] = {**a[key], **b[key]}
    return GrayCategory(**merged)
