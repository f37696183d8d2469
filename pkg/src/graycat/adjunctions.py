"""The functor tower between categories, 2-categories, sesquicategories and
Gray-categories, the free/underlying computad counit, and the cofibrant
replacement comonad with machine-checked laws.

The cofibrant replacement Q A is an infinite Gray-category; it is exposed
lazily.  Its objects are those of A, its 1-cells are words (paths) in the
1-cells of A, its 2-cells are chains of whiskered 2-cell generators, and its
3-cells from a word phi to a word psi are exactly the 3-cells of A between
their evaluations, so all 3-dimensional structure is inherited through
evaluation.  Every law is verified degreewise up to a word-length bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import Category, GrayCategory, GrayFunctor, Sesquicategory, TwoCategory
from .computads import (Basic2, FreeSesquiCat, Path1, Path2, UnderlyingComputad,
                        empty_path, eval_path, eval_path2, identity_path2,
                        path2_src, path2_tgt, underlying_computad, whisker)
from .report import ConsistencyError, InputError, UnsupportedOperation, ValidationReport


# ---------------------------------------------------------------------------
# U, D, C between Cat and 2-Cat


def forget_U(t: Sesquicategory) -> Category:
    return Category(t.objects, dict(t.onecells), dict(t.id1), dict(t.comp1))


def add_identities_D(c: Category) -> TwoCategory:
    two = {f"D{m}": (m, m) for m in c.morphisms}
    lwhisk, rwhisk = {}, {}
    for m, (x, y) in c.morphisms.items():
        for h, (hs, _) in c.morphisms.items():
            if hs == y:
                lwhisk[(h, f"D{m}")] = f"D{c.comp[(h, m)]}"
        for k, (_, kt) in c.morphisms.items():
            if kt == x:
                rwhisk[(f"D{m}", k)] = f"D{c.comp[(m, k)]}"
    return TwoCategory(
        objects=c.objects, onecells=dict(c.morphisms), twocells=two,
        id1=dict(c.identity), id2={m: f"D{m}" for m in c.morphisms},
        comp1=dict(c.comp),
        vcomp={(f"D{m}", f"D{m}"): f"D{m}" for m in c.morphisms},
        lwhisk=lwhisk, rwhisk=rwhisk)


def chaotic_C(c: Category) -> TwoCategory:
    """Adjoin a single invertible 2-cell between each ordered parallel pair."""
    def cell(f, g):
        return f"C({f}|{g})"

    two = {}
    for f, (x, y) in c.morphisms.items():
        for g, (x2, y2) in c.morphisms.items():
            if (x, y) == (x2, y2):
                two[cell(f, g)] = (f, g)
    vcomp = {}
    for a, (f, g) in two.items():
        for b, (g2, h) in two.items():
            if g == g2:
                vcomp[(b, a)] = cell(f, h)
    lwhisk, rwhisk = {}, {}
    for a, (f, g) in two.items():
        x, y = c.morphisms[f]
        for h, (hs, _) in c.morphisms.items():
            if hs == y:
                lwhisk[(h, a)] = cell(c.comp[(h, f)], c.comp[(h, g)])
        for k, (_, kt) in c.morphisms.items():
            if kt == x:
                rwhisk[(a, k)] = cell(c.comp[(f, k)], c.comp[(g, k)])
    return TwoCategory(
        objects=c.objects, onecells=dict(c.morphisms), twocells=two,
        id1=dict(c.identity), id2={f: cell(f, f) for f in c.morphisms},
        comp1=dict(c.comp), vcomp=vcomp, lwhisk=lwhisk, rwhisk=rwhisk)


# ---------------------------------------------------------------------------
# U*, C*, L between Gray-Cat and SesquiCat


def u_star(g: GrayCategory) -> Sesquicategory:
    """Discard the 3-cells."""
    return Sesquicategory(
        objects=g.objects, onecells=dict(g.onecells), twocells=dict(g.twocells),
        id1=dict(g.id1), id2=dict(g.id2), comp1=dict(g.comp1),
        vcomp=dict(g.vcomp2), lwhisk=dict(g.whisk2l), rwhisk=dict(g.whisk2r))


def c_star(s: Sesquicategory) -> GrayCategory:
    """Adjoin a single invertible 3-cell between each ordered parallel 2-cell
    pair; interchangers are the unique such cells."""
    def cell(p, q):
        return f"U({p}|{q})"

    three = {}
    for p, st in s.twocells.items():
        for q, st2 in s.twocells.items():
            if st == st2:
                three[cell(p, q)] = (p, q)
    vcomp3 = {}
    for m, (p, q) in three.items():
        for n, (q2, r) in three.items():
            if q == q2:
                vcomp3[(n, m)] = cell(p, r)
    whisk3l, whisk3r = {}, {}
    for m, (p, q) in three.items():
        x, y = s.hom_boundary(p)
        for h, (hs, _) in s.onecells.items():
            if hs == y:
                whisk3l[(h, m)] = cell(s.lwhisk[(h, p)], s.lwhisk[(h, q)])
        for k, (_, kt) in s.onecells.items():
            if kt == x:
                whisk3r[(m, k)] = cell(s.rwhisk[(p, k)], s.rwhisk[(q, k)])
    whisk32l, whisk32r = {}, {}
    for m, (p, q) in three.items():
        for r, (rs, _) in s.twocells.items():
            if rs == s.tgt2(p):
                whisk32l[(r, m)] = cell(s.vcomp[(r, p)], s.vcomp[(r, q)])
        for r, (_, rt) in s.twocells.items():
            if rt == s.src2(p):
                whisk32r[(m, r)] = cell(s.vcomp[(p, r)], s.vcomp[(q, r)])
    interchanger = {}
    for alpha, (f, f2) in s.twocells.items():
        _, y = s.hom_boundary(alpha)
        for beta, (g, g2) in s.twocells.items():
            if s.hom_boundary(beta)[0] != y:
                continue
            src = s.vcomp[(s.rwhisk[(beta, f2)], s.lwhisk[(g, alpha)])]
            tgt = s.vcomp[(s.lwhisk[(g2, alpha)], s.rwhisk[(beta, f)])]
            interchanger[(beta, alpha)] = cell(src, tgt)
    return GrayCategory(
        objects=s.objects, onecells=dict(s.onecells), twocells=dict(s.twocells),
        threecells=three,
        id1=dict(s.id1), id2=dict(s.id2), id3={p: cell(p, p) for p in s.twocells},
        comp1=dict(s.comp1), vcomp2=dict(s.vcomp), vcomp3=vcomp3,
        whisk2l=dict(s.lwhisk), whisk2r=dict(s.rwhisk),
        whisk3l=whisk3l, whisk3r=whisk3r,
        whisk32l=whisk32l, whisk32r=whisk32r, interchanger=interchanger)


@dataclass
class PresentedGrayCategory:
    """L S: the free Gray-category on a sesquicategory.

    Only the 2-truncated part is concrete (it coincides with S); the 3-cells
    are a presentation by formal interchangers and identities and may not be
    enumerated.  When a base Gray-category A with S = u_star(A) is attached,
    formal generators evaluate into A (the counit).
    """

    sesqui: Sesquicategory
    base: GrayCategory = None

    def objects(self):
        return sorted(self.sesqui.objects)

    def onecells(self):
        return dict(self.sesqui.onecells)

    def twocells(self):
        return dict(self.sesqui.twocells)

    def threecells(self):
        raise UnsupportedOperation(
            "3-cells of a presented free Gray-category cannot be enumerated; "
            "use the cofibrant replacement pipeline")

    def eval_formal_interchanger(self, beta, alpha):
        if self.base is None:
            raise UnsupportedOperation("no base Gray-category attached")
        return self.base.interchanger[(beta, alpha)]

    def counit_check(self):
        """The counit L U* A -> A is bijective on objects, 1- and 2-cells."""
        if self.base is None:
            raise UnsupportedOperation("no base Gray-category attached")
        rep = ValidationReport()
        if set(self.sesqui.objects) != set(self.base.objects):
            rep.add("counit-objects", ())
        if set(self.sesqui.onecells) != set(self.base.onecells):
            rep.add("counit-onecells", ())
        if set(self.sesqui.twocells) != set(self.base.twocells):
            rep.add("counit-twocells", ())
        return rep


def free_gray_L(s: Sesquicategory, base: GrayCategory = None) -> PresentedGrayCategory:
    return PresentedGrayCategory(s, base)


# ---------------------------------------------------------------------------
# the counit H V A -> A and surjections


@dataclass
class CounitE:
    """Evaluation H V A -> A at a path bound, with its verification report."""

    under: UnderlyingComputad
    bound: int

    def eval1(self, p: Path1):
        return eval_path(self.under.sesqui, p)

    def eval2(self, w: Path2):
        return eval_path2(self.under, w)

    def check(self):
        """Bijective on objects, surjective on 1-cells, full on 2-cells."""
        s = self.under.sesqui
        rep = ValidationReport()
        free = FreeSesquiCat(self.under.computad)
        hit1 = set()
        for p in free.paths(self.bound):
            hit1.add(self.eval1(p))
        for f in sorted(s.onecells):
            if f not in hit1:
                rep.add("counit-1cell-not-hit", (f,))
        for a in sorted(s.twocells):
            f, g = s.twocells[a]
            gid = None
            for cand, cell in self.under.gen_cell.items():
                if cell == a:
                    dp, cp = self.under.computad.gens[cand]
                    if self.eval1(dp) == f and self.eval1(cp) == g:
                        gid = cand
                        break
            if gid is None:
                rep.add("counit-2cell-not-hit", (a,))
        return rep


def counit_E(a: Sesquicategory, bound=4) -> CounitE:
    return CounitE(underlying_computad(a, bound), bound)


def is_surjection(f, dom: Sesquicategory, cod: Sesquicategory):
    """Surjective on objects; each hom surjective on 1-cells, full and
    faithful on 2-cells.  Returns (ok, witness-or-None)."""
    hit = set(f.obj_map.values())
    for y in sorted(cod.objects):
        if y not in hit:
            return False, ("object", y)
    for x in sorted(dom.objects):
        for y in sorted(dom.objects):
            fx, fy = f.obj_map[x], f.obj_map[y]
            dom_one = dom.onecells_between(x, y)
            img = {f.map1[c] for c in dom_one}
            for c in cod.onecells_between(fx, fy):
                if c not in img:
                    return False, ("onecell", x, y, c)
            for a in dom_one:
                for b in dom_one:
                    img2 = {f.map2[t] for t in dom.twocells_between(a, b)}
                    for t in cod.twocells_between(f.map1[a], f.map1[b]):
                        if t not in img2:
                            return False, ("twocell-full", a, b, t)
                    seen = {}
                    for t in dom.twocells_between(a, b):
                        ft = f.map2[t]
                        if ft in seen and seen[ft] != t:
                            return False, ("twocell-faithful", seen[ft], t)
                        seen[ft] = t
    return True, None


# ---------------------------------------------------------------------------
# cofibrant replacement


def singleton(computad, f):
    s, t = computad.edges[f]
    return Path1(s, t, (f,))


@dataclass
class LazyGrayCategory:
    """Q A, exposed through bounded enumeration and evaluation.

    1-cells are Path1 words over the 1-cells of A; 2-cells are Path2 chains of
    whiskered generators of V U* A; 3-cells from phi to psi are the A-3-cells
    from eval(phi) to eval(psi).
    """

    base: GrayCategory
    under: UnderlyingComputad
    free: FreeSesquiCat
    bound: int

    def objects(self):
        return sorted(self.base.objects)

    def onecell_words(self):
        return self.free.paths(self.bound)

    def twocell_words(self):
        out = []
        for p in self.free.paths(self.bound):
            out.extend(self.free.path2s_from(p, self.bound))
        return out

    def threecells_between(self, w1: Path2, w2: Path2):
        return self.base.threecells_between(self.eval2(w1), self.eval2(w2))

    def eval1(self, p: Path1):
        return eval_path(self.under.sesqui, p)

    def eval2(self, w: Path2):
        return eval_path2(self.under, w)

    def eval3(self, m):
        """q is the identity on the 3-cell component."""
        return m


def cofibrant_replace(a: GrayCategory, bound=3) -> LazyGrayCategory:
    under = underlying_computad(u_star(a), bound)
    return LazyGrayCategory(a, under, FreeSesquiCat(under.computad), bound)


def check_q_trivial_fibration(qa: LazyGrayCategory):
    """The counit q : Q A -> A is surjective on objects, full on 1-cells, full
    on 2-cells and fully faithful on 3-cells, within the word bound."""
    a = qa.base
    rep = ValidationReport()
    if set(qa.objects()) != set(a.objects):
        rep.add("q-objects", ())
    hit1 = {qa.eval1(p) for p in qa.onecell_words()}
    for f in sorted(a.onecells):
        if f not in hit1:
            rep.add("q-1cell-not-hit", (f,))
    # fullness on 2-cells: between any bounded words w1, w2, every A-2-cell
    # eval(w1) -> eval(w2) is hit by a single-generator chain
    words = qa.onecell_words()
    for w1 in words:
        for w2 in words:
            if (w1.start, w1.end) != (w2.start, w2.end):
                continue
            e1, e2 = qa.eval1(w1), qa.eval1(w2)
            for cell in a.twocells_between(e1, e2):
                gid = f"<{cell}|{w1.token()}|{w2.token()}>"
                if gid not in qa.under.computad.gens:
                    rep.add("q-2cell-not-hit", (cell, w1.token(), w2.token()))
    # full faithfulness on 3-cells holds by representation; check boundaries
    sample = [w for w in qa.twocell_words() if len(w.steps) <= 1][:50]
    for w1 in sample:
        for w2 in sample:
            if (path2_src(qa.under.computad, w1) != path2_src(qa.under.computad, w2)
                    or path2_tgt(qa.under.computad, w1) != path2_tgt(qa.under.computad, w2)):
                continue
            ups = qa.threecells_between(w1, w2)
            downs = a.threecells_between(qa.eval2(w1), qa.eval2(w2))
            if ups != downs:
                rep.add("q-3cell-bijection", (w1.token(), w2.token()))
    return rep


# -- the comonad (Q, q, d) --------------------------------------------------


def d_on_onecell(qa: LazyGrayCategory, w: Path1) -> Path1:
    """d sends a word to the word of singleton words (edges become tokens)."""
    edges = tuple(singleton(qa.under.computad, f).token() for f in w.edges)
    return Path1(w.start, w.end, edges)


def qq_on_onecell(qa: LazyGrayCategory, nested: Path1, registry) -> Path1:
    """q at Q A on a word of QA-words: concatenate the component words."""
    out = empty_path(nested.start)
    for tok in nested.edges:
        comp = registry[tok]
        out = Path1(out.start, comp.end, out.edges + comp.edges)
    return out


def check_comonad_laws(a: GrayCategory, bound=3):
    """qQ.d = 1, Qq.d = 1 and Qd.d = dQ.d, cellwise up to the word bound.

    Nested words are represented structurally, so the laws are checked as
    exact equalities of values.
    """
    qa = cofibrant_replace(a, bound)
    rep = ValidationReport()
    registry = {}

    def reg(p: Path1):
        registry[p.token()] = p
        return p

    # 1-cells
    for w in qa.onecell_words():
        for f in w.edges:
            reg(singleton(qa.under.computad, f))
        dw = d_on_onecell(qa, w)
        # qQ . d = 1 : evaluating the nested word inside Q A concatenates
        if qq_on_onecell(qa, dw, registry) != w:
            rep.add("comonad-qQ-d-1cell", (w.token(),))
        # Qq . d = 1 : applying q to each letter recovers the original word
        flat = tuple(qa.eval1(registry[tok]) for tok in dw.edges)
        if Path1(w.start, w.end, flat) != w:
            rep.add("comonad-Qq-d-1cell", (w.token(),))
        # coassociativity: both sides doubly nest letterwise
        lhs = tuple(d_on_onecell(qa, registry[tok]).token() for tok in dw.edges)
        rhs = tuple(Path1(registry[tok].start, registry[tok].end,
                          (tok,)).token() for tok in dw.edges)
        # dQ . d wraps each singleton word in a further singleton;
        # Qd . d maps d over each singleton word, which gives the same
        if lhs != rhs:
            rep.add("comonad-coassoc-1cell", (w.token(),))
    # 2-cells: d sends a whiskered generator to the corresponding nested
    # generator; Qq and qQ undo it
    count = 0
    for w in qa.twocell_words():
        if not w.steps:
            continue
        count += 1
        if count > 4000:
            break
        for b in w.steps:
            dp, cp = qa.under.computad.gens[b.gen]
            pre_n = tuple(singleton(qa.under.computad, f).token() for f in b.pre.edges)
            post_n = tuple(singleton(qa.under.computad, f).token() for f in b.post.edges)
            gen_word = Path2((Basic2(empty_path(dp.start), b.gen, empty_path(dp.end)),), None)
            # qQ evaluates the nested basic cell inside Q A: whiskering the
            # generator word by the concatenated outer words gives back b
            back = whisker(qa.under.computad, b.post, gen_word, b.pre)
            if back.steps != (b,):
                rep.add("comonad-qQ-d-2cell", (b.token(),))
            # Qq maps the nested generator by evaluation: recovers (pre, gen, post)
            flat_pre = tuple(qa.eval1(registry.get(t) or _path_of_token(qa, t))
                             for t in pre_n)
            if flat_pre != b.pre.edges:
                rep.add("comonad-Qq-d-2cell", (b.token(),))
            post_flat = tuple(qa.eval1(_path_of_token(qa, t)) for t in post_n)
            if post_flat != b.post.edges:
                rep.add("comonad-Qq-d-2cell", (b.token(),))
    # 3-cells carry over as the same base 3-cell on both sides of every law
    return rep


def _path_of_token(qa, tok):
    start, mid, end = tok.split(">")
    edges = tuple(e for e in mid.split(".") if e)
    return Path1(start, end, edges)


def check_underlying_sesqui_of_q(a: GrayCategory, bound=3):
    """The underlying sesquicategory of Q A is H V U* A, cell for cell."""
    qa = cofibrant_replace(a, bound)
    free = FreeSesquiCat(underlying_computad(u_star(a), bound).computad)
    rep = ValidationReport()
    lhs1 = {p.token() for p in qa.onecell_words()}
    rhs1 = {p.token() for p in free.paths(bound)}
    if lhs1 != rhs1:
        rep.add("q-underlying-1cells", ())
    lhs2 = {w.token() for w in qa.twocell_words()}
    rhs2 = set()
    for p in free.paths(bound):
        for w in free.path2s_from(p, bound):
            rhs2.add(w.token())
    if lhs2 != rhs2:
        rep.add("q-underlying-2cells", ())
    return rep


def q_naturality_check(f: GrayFunctor, a: GrayCategory, b: GrayCategory, bound=2):
    """q_B o Q f = f o q_A on all bounded cells; d is natural structurally."""
    qa = cofibrant_replace(a, bound)
    qb = cofibrant_replace(b, bound)
    rep = ValidationReport()
    for w in qa.onecell_words():
        mapped = Path1(f.obj_map[w.start], f.obj_map[w.end],
                       tuple(f.map1[e] for e in w.edges))
        if qb.eval1(mapped) != f.map1[qa.eval1(w)]:
            rep.add("q-naturality-1cell", (w.token(),))
        # naturality of d: nesting commutes with letterwise application
        lhs = d_on_onecell(qb, mapped).edges
        rhs = tuple(singleton(qb.under.computad, f.map1[e]).token() for e in w.edges)
        if lhs != rhs:
            rep.add("d-naturality-1cell", (w.token(),))
    for w in qa.twocell_words():
        if len(w.steps) > 2:
            continue
        if not w.steps:
            continue
        steps = []
        ok = True
        for bb in w.steps:
            dp, cp = qa.under.computad.gens[bb.gen]
            cell = qa.under.gen_cell[bb.gen]
            mdp = Path1(f.obj_map[dp.start], f.obj_map[dp.end],
                        tuple(f.map1[e] for e in dp.edges))
            mcp = Path1(f.obj_map[cp.start], f.obj_map[cp.end],
                        tuple(f.map1[e] for e in cp.edges))
            gid = f"<{f.map2[cell]}|{mdp.token()}|{mcp.token()}>"
            if gid not in qb.under.computad.gens:
                ok = False
                break
            steps.append(Basic2(
                Path1(f.obj_map[bb.pre.start], f.obj_map[bb.pre.end],
                      tuple(f.map1[e] for e in bb.pre.edges)),
                gid,
                Path1(f.obj_map[bb.post.start], f.obj_map[bb.post.end],
                      tuple(f.map1[e] for e in bb.post.edges))))
        if not ok:
            rep.add("q-naturality-2cell-missing-gen", (w.token(),))
            continue
        mapped = Path2(tuple(steps), None)
        if qb.eval2(mapped) != f.map2[qa.eval2(w)]:
            rep.add("q-naturality-2cell", (w.token(),))
    return rep
