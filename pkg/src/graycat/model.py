"""Model-structure predicates on finite Gray-categories: weak equivalences,
fibrations (both characterizations), trivial fibrations, lifting searches,
cofibrancy certificates, closure suites and the Gray-groupoid specializations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .adjunctions import u_star
from .builders import arrow_category, discrete_category, free_two_cell
from .cells import (Category, CatFunctor, GrayCategory, GrayFunctor, TwoCategory,
                    TwoFunctor, compose_gray_functors, empty_gray_category,
                    terminal_gray_category)
from .computads import Computad, FreeSesquiCat, eval_path, FreeIdempotent, retract_computad
from .equivalences import (enumerate_adjoint_biequivalences, is_biequivalence,
                           is_equivalence_1cell, is_equivalence_twocell,
                           is_fibration_2cat)
from .gray_ops import pi_star, two_of
from .report import BudgetExceeded, InputError, ValidationReport
from .search import enumerate_gray_functors, functor_constraints_from_precompose


@dataclass
class Flag:
    status: bool | None = None       # None = inconclusive
    witness: tuple | None = None
    detail: str = ""


@dataclass
class MorphismVerdict:
    """Classification record for a Gray-functor; trivial_fibration must equal
    weak_equivalence and fibration whenever all three are decided."""

    flags: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)

    def set(self, name, status, witness=None, detail=""):
        self.flags[name] = Flag(status, witness, detail)

    def get(self, name):
        return self.flags[name].status if name in self.flags else None

    def consistent(self):
        weq, fib, tf = (self.get("weak_equivalence"), self.get("fibration"),
                        self.get("trivial_fibration"))
        if None in (weq, fib, tf):
            return True
        return tf == (weq and fib)

    def report_lines(self):
        out = []
        for name in sorted(self.flags):
            f = self.flags[name]
            status = {True: "true", False: "false", None: "inconclusive"}[f.status]
            out.append((name, status, f.witness))
        return out


# ---------------------------------------------------------------------------
# hom-level helpers


def hom_functor_is_equivalence(t: TwoFunctor, dom: TwoCategory, cod: TwoCategory,
                               a, a2, fa, fa2):
    """The hom-category functor dom(a,a2) -> cod(fa,fa2): full, faithful and
    essentially surjective up to invertible 2-cells."""
    dom_one = dom.onecells_between(a, a2)
    for f in dom_one:
        for g in dom_one:
            seen = {}
            img = set()
            for p in dom.twocells_between(f, g):
                fp = t.map2[p]
                if fp in seen:
                    return False, ("faithful", p, seen[fp])
                seen[fp] = p
                img.add(fp)
            for c in cod.twocells_between(t.map1[f], t.map1[g]):
                if c not in img:
                    return False, ("full", f, g, c)
    for c in cod.onecells_between(fa, fa2):
        ok = False
        for f in dom_one:
            for p in cod.twocells_between(c, t.map1[f]):
                if cod.is_invertible2(p):
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False, ("essentially-surjective", c)
    return True, None


def two_functor_is_biequivalence(t: TwoFunctor, dom: TwoCategory, cod: TwoCategory):
    """Locally an equivalence of hom-categories plus biessential surjectivity."""
    for a in sorted(dom.objects):
        for a2 in sorted(dom.objects):
            ok, wit = hom_functor_is_equivalence(
                t, dom, cod, a, a2, t.obj_map[a], t.obj_map[a2])
            if not ok:
                return False, (a, a2) + wit
    for x in sorted(cod.objects):
        ok = False
        for a in sorted(dom.objects):
            for v in cod.onecells_between(x, t.obj_map[a]):
                if is_equivalence_1cell(cod, v) is not None:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False, ("biessentially-surjective", x)
    return True, None


# ---------------------------------------------------------------------------
# the three main predicates


def is_weak_equivalence(f: GrayFunctor, dom: GrayCategory, cod: GrayCategory):
    verdict = MorphismVerdict()
    for a in sorted(dom.objects):
        for b in sorted(dom.objects):
            hom_t = f.hom_two_functor(dom, a, b)
            ok, wit = two_functor_is_biequivalence(
                hom_t, dom.hom(a, b), cod.hom(f.obj_map[a], f.obj_map[b]))
            if not ok:
                verdict.set("weak_equivalence", False, (a, b) + tuple(wit),
                            "hom 2-functor is not a biequivalence")
                return verdict
    # pi_star F essentially surjective: every object biequivalent to an image
    pc, ccls = pi_star(cod)
    for x in sorted(cod.objects):
        ok = False
        for a in sorted(dom.objects):
            fa = f.obj_map[a]
            if x == fa:
                ok = True
                break
            for m in pc.morphisms_between(x, fa):
                if pc.is_iso(m):
                    ok = True
                    break
            if ok:
                break
        if not ok:
            verdict.set("weak_equivalence", False, ("pi-star-ess-surj", x))
            return verdict
    verdict.set("weak_equivalence", True)
    return verdict


def induced_pi_star_functor(f: GrayFunctor, dom: GrayCategory, cod: GrayCategory):
    dcat, dcls = pi_star(dom)
    ccat, ccls = pi_star(cod)
    mor_map = {}
    for onecell, cls_id in dcls.items():
        mor_map[cls_id] = ccls[f.map1[onecell]]
    return CatFunctor(dict(f.obj_map), mor_map), dcat, ccat, dcls, ccls


def is_fibration(f: GrayFunctor, dom: GrayCategory, cod: GrayCategory):
    """Condition (i): each hom is a 2-Cat fibration; (ii): pi_star F is an
    isofibration with lifts having specified codomain."""
    verdict = MorphismVerdict()
    for a in sorted(dom.objects):
        for b in sorted(dom.objects):
            hom_t = f.hom_two_functor(dom, a, b)
            ok, wit = is_fibration_2cat(
                hom_t, dom.hom(a, b), cod.hom(f.obj_map[a], f.obj_map[b]))
            if not ok:
                verdict.set("fibration", False, (a, b) + tuple(wit),
                            "hom 2-functor is not a fibration")
                return verdict
    pf, dcat, ccat, dcls, ccls = induced_pi_star_functor(f, dom, cod)
    for a in sorted(dom.objects):
        fa = f.obj_map[a]
        for b in sorted(cod.objects):
            for m in ccat.morphisms_between(b, fa):
                if not ccat.is_iso(m):
                    continue
                ok = False
                for a2 in sorted(dom.objects):
                    if f.obj_map[a2] != b:
                        continue
                    for m2 in dcat.morphisms_between(a2, a):
                        if dcat.is_iso(m2) and pf.mor_map[m2] == m:
                            ok = True
                            break
                    if ok:
                        break
                if not ok:
                    verdict.set("fibration", False, ("iso-lifting", a, b, m))
                    return verdict
    verdict.set("fibration", True)
    return verdict


def has_adjoint_biequiv_lifting(f: GrayFunctor, dom: GrayCategory, cod: GrayCategory):
    """Condition (ii*): every adjoint biequivalence downstairs whose target
    object is the image of a specified upstairs object lifts on the nose."""
    verdict = MorphismVerdict()
    ups = {}
    for e in sorted(dom.objects):
        ups.setdefault(f.obj_map[e], []).append(e)
    for fe, es in sorted(ups.items()):
        downs = enumerate_adjoint_biequivalences(cod, tgt_obj=fe)
        for ab in downs:
            lifted = False
            for e in es:
                for ab2 in enumerate_adjoint_biequivalences(dom, tgt_obj=e):
                    if (f.map1[ab2.f] == ab.f and f.map1[ab2.g] == ab.g
                            and f.map2[ab2.eta.fwd] == ab.eta.fwd
                            and f.map2[ab2.eta.bwd] == ab.eta.bwd
                            and f.map3[ab2.eta.unit] == ab.eta.unit
                            and f.map3[ab2.eta.counit] == ab.eta.counit
                            and f.map2[ab2.eps.fwd] == ab.eps.fwd
                            and f.map2[ab2.eps.bwd] == ab.eps.bwd
                            and f.map3[ab2.eps.unit] == ab.eps.unit
                            and f.map3[ab2.eps.counit] == ab.eps.counit
                            and f.map3[ab2.s_cell] == ab.s_cell
                            and f.map3[ab2.t_cell] == ab.t_cell):
                        lifted = True
                        break
                if lifted:
                    break
            if not lifted:
                verdict.set("adjoint_biequiv_lifting", False,
                            (ab.f, ab.g, ab.s_cell, ab.t_cell, fe))
                return verdict
    verdict.set("adjoint_biequiv_lifting", True)
    return verdict


def is_trivial_fibration(f, dom=None, cod=None):
    """Flattened characterization: surjective on objects and locally a trivial
    fibration (full on 1-cells; full on 2-cells; full and faithful on 3-cells).

    Accepts either (GrayFunctor, dom, cod) or a LazyGrayCategory (the
    cofibrant-replacement counit q, checked within its word bound)."""
    from .adjunctions import LazyGrayCategory, check_q_trivial_fibration
    verdict = MorphismVerdict()
    if isinstance(f, LazyGrayCategory):
        rep = check_q_trivial_fibration(f)
        verdict.bounds["word"] = f.bound
        verdict.set("trivial_fibration", rep.ok,
                    None if rep.ok else tuple(str(v) for v in rep.violations[:1]))
        return verdict
    hit = set(f.obj_map.values())
    for x in sorted(cod.objects):
        if x not in hit:
            verdict.set("trivial_fibration", False, ("objects-surjective", x))
            return verdict
    for a in sorted(dom.objects):
        for b in sorted(dom.objects):
            fa, fb = f.obj_map[a], f.obj_map[b]
            ups = dom.onecells_between(a, b)
            img1 = {f.map1[c] for c in ups}
            for c in cod.onecells_between(fa, fb):
                if c not in img1:
                    verdict.set("trivial_fibration", False, ("1cell-full", a, b, c))
                    return verdict
            for u in ups:
                for v in ups:
                    img2 = {f.map2[p] for p in dom.twocells_between(u, v)}
                    for c in cod.twocells_between(f.map1[u], f.map1[v]):
                        if c not in img2:
                            verdict.set("trivial_fibration", False,
                                        ("2cell-full", u, v, c))
                            return verdict
    for p in sorted(dom.twocells):
        for q in sorted(dom.twocells):
            if dom.twocells[p] != dom.twocells[q]:
                continue
            seen = {}
            img3 = set()
            for m in dom.threecells_between(p, q):
                fm = f.map3[m]
                if fm in seen:
                    verdict.set("trivial_fibration", False,
                                ("3cell-faithful", m, seen[fm]))
                    return verdict
                seen[fm] = m
                img3.add(fm)
            for c in cod.threecells_between(f.map2[p], f.map2[q]):
                if c not in img3:
                    verdict.set("trivial_fibration", False, ("3cell-full", p, q, c))
                    return verdict
    verdict.set("trivial_fibration", True)
    return verdict


def classify(f: GrayFunctor, dom: GrayCategory, cod: GrayCategory,
             with_lifting=True):
    """Full MorphismVerdict; cross-checks the §-level characterizations."""
    verdict = MorphismVerdict()
    for src in (is_weak_equivalence(f, dom, cod), is_fibration(f, dom, cod),
                is_trivial_fibration(f, dom, cod)):
        verdict.flags.update(src.flags)
    if with_lifting:
        verdict.flags.update(has_adjoint_biequiv_lifting(f, dom, cod).flags)
    return verdict


# ---------------------------------------------------------------------------
# Gray-groupoid specializations


def gpd_fibration_check(f: GrayFunctor, dom: GrayCategory, cod: GrayCategory):
    """The groupoid fibration bullets: strict lifting of 1-cells into images,
    of 2-cells with fixed target, and of 3-cells with fixed target."""
    for e in sorted(dom.objects):
        fe = f.obj_map[e]
        for c in sorted(cod.onecells):
            if cod.tgt1(c) != fe:
                continue
            if not any(dom.tgt1(u) == e and f.map1[u] == c for u in dom.onecells):
                return False, ("1cell-lift", e, c)
    for u in sorted(dom.onecells):
        fu = f.map1[u]
        for c in sorted(cod.twocells):
            if cod.tgt2(c) != fu:
                continue
            if not any(dom.tgt2(p) == u and f.map2[p] == c for p in dom.twocells):
                return False, ("2cell-lift", u, c)
    for p in sorted(dom.twocells):
        fp = f.map2[p]
        for c in sorted(cod.threecells):
            if cod.tgt3(c) != fp:
                continue
            if not any(dom.tgt3(m) == p and f.map3[m] == c for m in dom.threecells):
                return False, ("3cell-lift", p, c)
    return True, None


def gpd_weq_check(f: GrayFunctor, dom: GrayCategory, cod: GrayCategory):
    """The groupoid weak-equivalence bullets, completed by the forced
    2-cell-level condition and 3-cell faithfulness (see decisions ledger)."""
    for b in sorted(cod.objects):
        if not any(cod.onecells_between(b, f.obj_map[e]) for e in dom.objects):
            return False, ("object", b)
    for d in sorted(dom.objects):
        for e in sorted(dom.objects):
            for b in cod.onecells_between(f.obj_map[d], f.obj_map[e]):
                ok = False
                for u in dom.onecells_between(d, e):
                    if cod.twocells_between(b, f.map1[u]):
                        ok = True
                        break
                if not ok:
                    return False, ("1cell", d, e, b)
    for u in sorted(dom.onecells):
        for v in sorted(dom.onecells):
            if dom.onecells[u] != dom.onecells[v]:
                continue
            for b in cod.twocells_between(f.map1[u], f.map1[v]):
                ok = False
                for p in dom.twocells_between(u, v):
                    if cod.threecells_between(b, f.map2[p]):
                        ok = True
                        break
                if not ok:
                    return False, ("2cell", u, v, b)
    for p in sorted(dom.twocells):
        for q in sorted(dom.twocells):
            if dom.twocells[p] != dom.twocells[q]:
                continue
            seen = {}
            img = set()
            for m in dom.threecells_between(p, q):
                fm = f.map3[m]
                if fm in seen:
                    return False, ("3cell-faithful", m, seen[fm])
                seen[fm] = m
                img.add(fm)
            for y in cod.threecells_between(f.map2[p], f.map2[q]):
                if y not in img:
                    return False, ("3cell-full", p, q, y)
    return True, None


# ---------------------------------------------------------------------------
# closure suite


def weq_closure_suite(pairs, retracts):
    """2-out-of-3 over composable pairs and retract closure over squares.

    pairs: iterables of (F, G, a, b, c) with F : a -> b, G : b -> c.
    retracts: (F, F2, i, r, j, s, a, b, a2, b2) exhibiting F2 : a2 -> b2 as a
    retract of F : a -> b (r i = 1, s j = 1, F i = j F2, F2 r = s F).
    """
    rep = ValidationReport()
    for n, (f, g, a, b, c) in enumerate(pairs):
        wf = is_weak_equivalence(f, a, b).get("weak_equivalence")
        wg = is_weak_equivalence(g, b, c).get("weak_equivalence")
        gf = compose_gray_functors(g, f)
        wgf = is_weak_equivalence(gf, a, c).get("weak_equivalence")
        votes = [wf, wg, wgf]
        if votes.count(True) == 2 and votes.count(False) == 1:
            rep.add("two-out-of-three", (n,), f"flags {votes}")
    for n, (f, f2, i, r, j, s, a, b, a2, b2) in enumerate(retracts):
        wf = is_weak_equivalence(f, a, b).get("weak_equivalence")
        wf2 = is_weak_equivalence(f2, a2, b2).get("weak_equivalence")
        ri = compose_gray_functors(r, i)
        sj = compose_gray_functors(s, j)
        if any(ri.obj_map[x] != x for x in ri.obj_map) or any(
                sj.obj_map[x] != x for x in sj.obj_map):
            rep.add("retract-shape", (n,), "not a retract")
            continue
        if wf and not wf2:
            rep.add("retract-closure", (n,))
    return rep


# ---------------------------------------------------------------------------
# lifting search and generating cofibrations


def llp_search(i: GrayFunctor, i_dom, i_cod, p: GrayFunctor, p_dom, p_cod,
               u: GrayFunctor, v: GrayFunctor, budget=200000):
    """Search a diagonal filler h with h i = u and p h = v.

    Returns ("filled", h), ("none", None) after exhaustion, or
    ("inconclusive", None) when the budget is hit.
    """
    pu = compose_gray_functors(p, u)
    vi = compose_gray_functors(v, i)
    if (pu.obj_map, pu.map1, pu.map2, pu.map3) != (vi.obj_map, vi.map1, vi.map2, vi.map3):
        raise InputError("square does not commute")
    cons = functor_constraints_from_precompose(i, u)
    if cons is None:
        return "none", None
    fixed_obj, fixed1, fixed2, fixed3 = cons
    try:
        for h in enumerate_gray_functors(i_cod, p_dom,
                                         fixed_obj=fixed_obj, fixed1=fixed1,
                                         fixed2=fixed2, fixed3=fixed3,
                                         fiber=(p, v), budget=budget):
            return "filled", h
    except BudgetExceeded:
        return "inconclusive", None
    return "none", None


def parallel_pair_two_category():
    """Two objects, two parallel non-identity 1-cells, identity 2-cells only."""
    c = discrete_category(["a", "b"])
    one = {"ida": ("a", "a"), "idb": ("b", "b"), "u": ("a", "b"), "v": ("a", "b")}
    two = {f"D{m}": (m, m) for m in one}
    comp1 = {("ida", "ida"): "ida", ("idb", "idb"): "idb",
             ("u", "ida"): "u", ("idb", "u"): "u",
             ("v", "ida"): "v", ("idb", "v"): "v"}
    lwhisk, rwhisk = {}, {}
    for m, (x, y) in one.items():
        for h, (hs, _) in one.items():
            if hs == y:
                lwhisk[(h, f"D{m}")] = f"D{comp1[(h, m)]}"
        for k, (_, kt) in one.items():
            if kt == x:
                rwhisk[(f"D{m}", k)] = f"D{comp1[(m, k)]}"
    return TwoCategory(frozenset({"a", "b"}), one, two,
                       {"a": "ida", "b": "idb"}, {m: f"D{m}" for m in one},
                       comp1, {(f"D{m}", f"D{m}"): f"D{m}" for m in one},
                       lwhisk, rwhisk)


def double_two_cell_two_category():
    """Like free_two_cell but with two parallel generating 2-cells."""
    base = free_two_cell()
    two = dict(base.twocells)
    two["be"] = ("u", "v")
    vcomp = dict(base.vcomp)
    for m, (s, t) in two.items():
        for nn, (s2, t2) in two.items():
            if t != s2 or (nn, m) in vcomp:
                continue
            if nn.startswith("ID"):
                vcomp[(nn, m)] = m
            elif m.startswith("ID"):
                vcomp[(nn, m)] = nn
    lwhisk = dict(base.lwhisk)
    rwhisk = dict(base.rwhisk)
    lwhisk[("idb", "be")] = "be"
    rwhisk[("be", "ida")] = "be"
    return TwoCategory(base.objects, dict(base.onecells), two, dict(base.id1),
                       dict(base.id2), dict(base.comp1), vcomp, lwhisk, rwhisk)


def generating_cofibrations_2cat():
    """The four standard generating cofibrations of the 2-category model
    structure, as (name, j, X, Y) tuples."""
    from .cells import empty_two_category, terminal_two_category
    out = []
    x0 = empty_two_category()
    y0 = terminal_two_category()
    out.append(("empty-to-point", TwoFunctor({}, {}, {}), x0, y0))
    x1 = add_id_two(discrete_category(["a", "b"]))
    y1 = add_id_two(arrow_category())
    out.append(("points-to-arrow",
                TwoFunctor({"a": "a", "b": "b"},
                           {"ida": "ida", "idb": "idb"},
                           {"Dida": "Dida", "Didb": "Didb"}), x1, y1))
    x2 = parallel_pair_two_category()
    y2 = free_two_cell()
    out.append(("parallel-to-2cell",
                TwoFunctor({"a": "a", "b": "b"},
                           {m: m for m in x2.onecells},
                           {"Dida": "IDida", "Didb": "IDidb",
                            "Du": "IDu", "Dv": "IDv"}), x2, y2))
    x3 = double_two_cell_two_category()
    y3 = free_two_cell()
    out.append(("merge-2cells",
                TwoFunctor({"a": "a", "b": "b"},
                           {m: m for m in x3.onecells},
                           {**{f"ID{m}": f"ID{m}" for m in x3.onecells},
                            "al": "al", "be": "al"}), x3, y3))
    return out


def add_id_two(c: Category) -> TwoCategory:
    from .adjunctions import add_identities_D
    return add_identities_D(c)


def two_of_functor(j: TwoFunctor, x: TwoCategory, y: TwoCategory):
    """The Gray-functor 2_j : 2_X -> 2_Y induced by a 2-functor j : X -> Y."""
    tx, ty = two_of(x), two_of(y)
    obj_map = {"0": "0", "1": "1"}
    map1 = {**{f: j.obj_map[f] for f in x.objects}, "!0": "!0", "!1": "!1"}
    map2 = {**{a: j.map1[a] for a in x.onecells}, "!!0": "!!0", "!!1": "!!1"}
    map3 = {**{m: j.map2[m] for m in x.twocells}, "!!!0": "!!!0", "!!!1": "!!!1"}
    return GrayFunctor(obj_map, map1, map2, map3), tx, ty


def generating_cofibrations_gray():
    """0 -> 1 plus 2_j for each generating cofibration j of 2-Cat."""
    out = [("initial-to-terminal",
            GrayFunctor({}, {}, {}, {}), empty_gray_category(),
            terminal_gray_category())]
    for name, j, x, y in generating_cofibrations_2cat():
        f, tx, ty = two_of_functor(j, x, y)
        out.append((f"2_{name}", f, tx, ty))
    return out


# ---------------------------------------------------------------------------
# cofibrancy certificates


def is_cofibrant(a, witness=None, bound=3):
    """Certificate-based cofibrancy: verify the underlying sesquicategory is
    free on a computad, either by a candidate computad whose cells name cells
    of a, or by a retract datum (a FreeIdempotent).  Returns (ok, computad).
    """
    from .adjunctions import LazyGrayCategory
    if isinstance(a, LazyGrayCategory):
        return True, a.under.computad
    if isinstance(witness, FreeIdempotent):
        comp, _ = retract_computad(witness, bound)
        return True, comp
    if witness is None or not isinstance(witness, Computad):
        raise InputError("is_cofibrant needs a computad witness or retract datum")
    s = u_star(a)
    free = FreeSesquiCat(witness)
    seen = {}
    for p in free.paths(bound):
        val = eval_path(s, p)
        if val in seen and seen[val] != p:
            return False, None
        seen[val] = p
    for f in s.onecells:
        if f not in seen:
            return False, None
    return True, witness
