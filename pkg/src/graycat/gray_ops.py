"""Derived constructions on Gray-categories: the two-object classifier 2_X,
the object-and-1-cell-classes category, groupoid detection, representability
counting and object biequivalence."""

from __future__ import annotations

from .cells import Category, GrayCategory, TwoCategory
from .equivalences import is_equivalence_twocell
from .report import ConsistencyError, InputError
from .search import enumerate_gray_functors, enumerate_two_functors


def two_of(x: TwoCategory) -> GrayCategory:
    """The Gray-category with objects 0, 1, hom(0,1) = X and endo-homs terminal.

    Cell identifiers of X are kept verbatim; the forced terminal-hom cells use
    reserved names which must not occur in X.
    """
    reserved = {"0", "1", "!0", "!1", "!!0", "!!1", "!!!0", "!!!1"}
    if reserved & (set(x.onecells) | set(x.twocells) | set(x.objects)):
        raise InputError("input 2-category uses identifiers reserved by two_of")
    one = {f: ("0", "1") for f in x.objects}
    one["!0"] = ("0", "0")
    one["!1"] = ("1", "1")
    two = {a: st for a, st in x.onecells.items()}
    two["!!0"] = ("!0", "!0")
    two["!!1"] = ("!1", "!1")
    three = {m: st for m, st in x.twocells.items()}
    three["!!!0"] = ("!!0", "!!0")
    three["!!!1"] = ("!!1", "!!1")
    comp1 = {("!0", "!0"): "!0", ("!1", "!1"): "!1"}
    for f in x.objects:
        comp1[(f, "!0")] = f
        comp1[("!1", f)] = f
    vcomp2 = dict(x.comp1)
    vcomp2[("!!0", "!!0")] = "!!0"
    vcomp2[("!!1", "!!1")] = "!!1"
    whisk2l = {("!0", "!!0"): "!!0", ("!1", "!!1"): "!!1"}
    whisk2r = {("!!0", "!0"): "!!0", ("!!1", "!1"): "!!1"}
    for a in x.onecells:
        whisk2l[("!1", a)] = a
        whisk2r[(a, "!0")] = a
    for f in x.objects:
        whisk2l[(f, "!!0")] = x.id1[f]
        whisk2r[("!!1", f)] = x.id1[f]
    vcomp3 = dict(x.vcomp)
    vcomp3[("!!!0", "!!!0")] = "!!!0"
    vcomp3[("!!!1", "!!!1")] = "!!!1"
    whisk3l = {("!0", "!!!0"): "!!!0", ("!1", "!!!1"): "!!!1"}
    whisk3r = {("!!!0", "!0"): "!!!0", ("!!!1", "!1"): "!!!1"}
    for m in x.twocells:
        whisk3l[("!1", m)] = m
        whisk3r[(m, "!0")] = m
    for f in x.objects:
        whisk3l[(f, "!!!0")] = x.id2[x.id1[f]]
        whisk3r[("!!!1", f)] = x.id2[x.id1[f]]
    whisk32l = dict(x.lwhisk)
    whisk32l[("!!0", "!!!0")] = "!!!0"
    whisk32l[("!!1", "!!!1")] = "!!!1"
    whisk32r = dict(x.rwhisk)
    whisk32r[("!!!0", "!!0")] = "!!!0"
    whisk32r[("!!!1", "!!1")] = "!!!1"
    interchanger = {("!!0", "!!0"): "!!!0", ("!!1", "!!1"): "!!!1"}
    for a in x.onecells:
        interchanger[("!!1", a)] = three_id(x, a)
        interchanger[(a, "!!0")] = three_id(x, a)
    g = GrayCategory(
        objects=frozenset({"0", "1"}),
        onecells=one, twocells=two, threecells=three,
        id1={"0": "!0", "1": "!1"},
        id2={**{f: x.id1[f] for f in x.objects}, "!0": "!!0", "!1": "!!1"},
        id3={**{a: x.id2[a] for a in x.onecells}, "!!0": "!!!0", "!!1": "!!!1"},
        comp1=comp1, vcomp2=vcomp2, vcomp3=vcomp3,
        whisk2l=whisk2l, whisk2r=whisk2r, whisk3l=whisk3l, whisk3r=whisk3r,
        whisk32l=whisk32l, whisk32r=whisk32r, interchanger=interchanger)
    return g


def three_id(x: TwoCategory, a):
    """Identity 3-cell on the 2_X 2-cell a (= identity 2-cell of X on a)."""
    return x.id2[a]


def is_gray_groupoid(g: GrayCategory):
    """True iff every cell has a strict inverse; witness is the first failure."""
    for f in sorted(g.onecells):
        if g.inverse1(f) is None:
            return False, ("onecell", f)
    for p in sorted(g.twocells):
        if g.inverse2(p) is None:
            return False, ("twocell", p)
    for m in sorted(g.threecells):
        if g.inverse3(m) is None:
            return False, ("threecell", m)
    return True, None


def equivalence_classes_of_onecells(g: GrayCategory):
    """Partition the 1-cells of each hom by 'there is an equivalence 2-cell'."""
    parent = {f: f for f in g.onecells}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            lo, hi = sorted((ra, rb))
            parent[hi] = lo

    for p in sorted(g.twocells):
        f, f2 = g.twocells[p]
        if f == f2:
            continue
        if is_equivalence_twocell(g, p) is not None:
            union(f, f2)
    return {f: find(f) for f in g.onecells}


def pi_star(g: GrayCategory):
    """The category of objects and equivalence-classes of 1-cells.

    Returns (category, class_map) where class_map sends each 1-cell to the
    identifier of its class representative.  Composition is verified to be
    well defined on representatives.
    """
    cls = equivalence_classes_of_onecells(g)

    def mor_id(rep):
        return f"[{rep}]"

    morphisms = {}
    for f, rep in cls.items():
        morphisms[mor_id(rep)] = g.onecells[f]
    identity = {x: mor_id(cls[g.id1[x]]) for x in g.objects}
    comp = {}
    for gf, rep_g in cls.items():
        for ff, rep_f in cls.items():
            if g.tgt1(ff) != g.src1(gf):
                continue
            comp[(mor_id(rep_g), mor_id(rep_f))] = mor_id(cls[g.comp1[(gf, ff)]])
    # well-definedness: all representative composites land in one class
    for gf in sorted(g.onecells):
        for ff in sorted(g.onecells):
            if g.tgt1(ff) != g.src1(gf):
                continue
            got = mor_id(cls[g.comp1[(gf, ff)]])
            want = comp[(mor_id(cls[gf]), mor_id(cls[ff]))]
            if got != want:
                raise ConsistencyError(
                    f"composition not well defined on classes at ({gf}, {ff})")
    cat = Category(objects=g.objects, morphisms=morphisms, identity=identity, comp=comp)
    return cat, {f: mor_id(rep) for f, rep in cls.items()}


def biequivalent_objects(g: GrayCategory, a, b):
    """True iff a and b are isomorphic in pi_star(g)."""
    if a not in g.objects or b not in g.objects:
        raise InputError(f"unknown object: {a if a not in g.objects else b}")
    cat, _ = pi_star(g)
    if a == b:
        return True
    for m in cat.morphisms_between(a, b):
        if cat.is_iso(m):
            return True
    return False


def hom_bijection_check(g: GrayCategory, x: TwoCategory, budget=None):
    """Check the representability of 2_X: Gray-functors 2_X -> G biject with
    triples (A, B, 2-functor X -> G(A,B)).

    Both sides are enumerated independently; returns (ok, n_functors, n_triples).
    """
    tx = two_of(x)
    functors = list(enumerate_gray_functors(tx, g, budget=budget))
    triples = []
    for a in sorted(g.objects):
        for b in sorted(g.objects):
            hom = g.hom(a, b)
            for tf in enumerate_two_functors(x, hom, budget=budget):
                triples.append((a, b, tf))
    if len(functors) != len(triples):
        return False, len(functors), len(triples)
    # the canonical map restricts a Gray-functor to (F0, F1, hom-component)
    canon = set()
    for fun in functors:
        a, b = fun.obj_map["0"], fun.obj_map["1"]
        key = (a, b,
               tuple(sorted((f, fun.map1[f]) for f in x.objects)),
               tuple(sorted((c, fun.map2[c]) for c in x.onecells)),
               tuple(sorted((m, fun.map3[m]) for m in x.twocells)))
        canon.add(key)
    expect = set()
    for a, b, tf in triples:
        key = (a, b,
               tuple(sorted(tf.obj_map.items())),
               tuple(sorted(tf.map1.items())),
               tuple(sorted(tf.map2.items())))
        expect.add(key)
    return canon == expect, len(functors), len(triples)
