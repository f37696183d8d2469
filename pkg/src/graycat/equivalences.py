"""Equivalences, adjoint equivalences, biequivalences and adjoint biequivalences.

All existentials are resolved by exhaustive search over the finite cell sets,
with deterministic lexicographic tie-breaking so witnesses are reproducible.
The two tetrahedron pasting composites are compiled once, here, as fixed
sequences of whiskerings, vertical compositions and interchanger insertions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import GrayCategory, Sesquicategory, TwoCategory, TwoFunctor
from .report import ConsistencyError, ValidationReport


# ---------------------------------------------------------------------------
# 2-category level


def invertible_twocells(t: Sesquicategory):
    return [a for a in sorted(t.twocells) if t.is_invertible2(a)]


def is_equivalence_1cell(t: TwoCategory, f):
    """Decide whether f is an equivalence; witness is (g, unit, counit).

    unit : 1 -> gf and counit : fg -> 1 are invertible 2-cells, found by
    exhaustive search in lexicographic order.
    """
    x, y = t.onecells[f]
    for g in t.onecells_between(y, x):
        gf = t.comp1[(g, f)]
        fg = t.comp1[(f, g)]
        for unit in t.twocells_between(t.id1[x], gf):
            if not t.is_invertible2(unit):
                continue
            for counit in t.twocells_between(fg, t.id1[y]):
                if t.is_invertible2(counit):
                    return g, unit, counit
    return None


@dataclass
class AdjointEquivalence2:
    """An adjoint equivalence (fwd, bwd, unit, counit) inside a 2-category."""

    fwd: str
    bwd: str
    unit: str       # 1_src -> bwd . fwd
    counit: str     # fwd . bwd -> 1_tgt

    def validate(self, t: TwoCategory):
        rep = ValidationReport()
        if self.fwd not in t.onecells or self.bwd not in t.onecells:
            rep.add("adjeq-dangling", (self.fwd, self.bwd))
            return rep
        x, y = t.onecells[self.fwd]
        if t.onecells.get(self.bwd) != (y, x):
            rep.add("adjeq-bwd-boundary", (self.bwd,))
            return rep
        gf = t.comp1[(self.bwd, self.fwd)]
        fg = t.comp1[(self.fwd, self.bwd)]
        if t.twocells.get(self.unit) != (t.id1[x], gf):
            rep.add("adjeq-unit-boundary", (self.unit,))
        if t.twocells.get(self.counit) != (fg, t.id1[y]):
            rep.add("adjeq-counit-boundary", (self.counit,))
        if not rep.ok:
            return rep
        if not t.is_invertible2(self.unit):
            rep.add("adjeq-unit-invertible", (self.unit,))
        if not t.is_invertible2(self.counit):
            rep.add("adjeq-counit-invertible", (self.counit,))
        tri1 = t.vcomp[(t.rwhisk[(self.counit, self.fwd)], t.lwhisk[(self.fwd, self.unit)])]
        if tri1 != t.id2[self.fwd]:
            rep.add("triangle-1", (self.fwd,))
        tri2 = t.vcomp[(t.lwhisk[(self.bwd, self.counit)], t.rwhisk[(self.unit, self.bwd)])]
        if tri2 != t.id2[self.bwd]:
            rep.add("triangle-2", (self.bwd,))
        return rep


def promote_to_adjoint_equivalence(t: TwoCategory, f, g, eta):
    """Find the unique counit making (f, g, eta, -) an adjoint equivalence.

    Requires f to be an equivalence and eta : 1 -> gf invertible; the search
    verifies the uniqueness claim and that the second triangle then holds.
    """
    x, y = t.onecells[f]
    if t.twocells[eta] != (t.id1[x], t.comp1[(g, f)]) or not t.is_invertible2(eta):
        raise ConsistencyError(f"eta {eta} is not an invertible 2-cell 1 -> gf")
    fg = t.comp1[(f, g)]
    found = []
    for eps in t.twocells_between(fg, t.id1[y]):
        tri1 = t.vcomp[(t.rwhisk[(eps, f)], t.lwhisk[(f, eta)])]
        if tri1 == t.id2[f]:
            found.append(eps)
    if len(found) != 1:
        raise ConsistencyError(
            f"expected exactly one counit for ({f}, {g}, {eta}); found {len(found)}")
    cand = AdjointEquivalence2(f, g, eta, found[0])
    rep = cand.validate(t)
    if not rep.ok:
        raise ConsistencyError(f"promoted structure invalid: {rep}")
    return cand


def promote_equivalence(t: TwoCategory, f):
    """Make an equivalence f into an adjoint equivalence (first witness)."""
    wit = is_equivalence_1cell(t, f)
    if wit is None:
        raise ConsistencyError(f"{f} is not an equivalence")
    g, unit, _ = wit
    return promote_to_adjoint_equivalence(t, f, g, unit)


def is_fibration_2cat(p: TwoFunctor, dom: TwoCategory, cod: TwoCategory):
    """Model-structure fibration test for a 2-functor.

    (a) every equivalence into the image of an object lifts to an equivalence
        with that object as target; (b) every invertible 2-cell with lifted
        target 1-cell lifts to an invertible 2-cell.
    Returns (ok, counterexample-or-None).
    """
    for e in sorted(dom.objects):
        fe = p.obj_map[e]
        for v in sorted(cod.onecells):
            if cod.tgt1(v) != fe or is_equivalence_1cell(cod, v) is None:
                continue
            ok = False
            for v2 in sorted(dom.onecells):
                if dom.tgt1(v2) != e or p.map1[v2] != v:
                    continue
                if is_equivalence_1cell(dom, v2) is not None:
                    ok = True
                    break
            if not ok:
                return False, ("equivalence-lifting", e, v)
    for g in sorted(dom.onecells):
        fg = p.map1[g]
        for b in sorted(cod.twocells):
            if cod.tgt2(b) != fg or not cod.is_invertible2(b):
                continue
            ok = False
            for b2 in sorted(dom.twocells):
                if dom.tgt2(b2) != g or p.map2[b2] != b:
                    continue
                if dom.is_invertible2(b2):
                    ok = True
                    break
            if not ok:
                return False, ("2cell-lifting", g, b)
    return True, None


def lift_adjoint_equivalence(p: TwoFunctor, dom: TwoCategory, cod: TwoCategory,
                             f, g, g_star, eta, eps, beta, g_bar, beta_bar):
    """Lift the adjoint equivalence (g, g_star, eta, eps) along the fibration p.

    f is an equivalence upstairs, beta : g -> Pf invertible downstairs, and
    beta_bar : g_bar -> f an invertible lift of beta.  Follows the proof
    sequence: promote f, transport beta to beta_star, lift it, build eta'
    with P eta' = eta, then derive the unique counit and check P eps' = eps.
    """
    adj_f = promote_equivalence(dom, f)
    f1, eta1 = adj_f.bwd, adj_f.unit
    pf, pf1 = p.map1[f], p.map1[f1]
    # the unique invertible beta_star : g_star -> P f1 making the transport
    # square commute: (g_star . beta) o eta == (beta_star^-1 . Pf) o P(eta1)
    lhs = cod.vcomp[(cod.lwhisk[(g_star, beta)], eta)]
    found = []
    for cand in cod.twocells_between(g_star, pf1):
        inv = cod.inverse2(cand)
        if inv is None:
            continue
        rhs = cod.vcomp[(cod.rwhisk[(inv, pf)], p.map2[eta1])]
        if rhs == lhs:
            found.append(cand)
    if len(found) != 1:
        raise ConsistencyError(f"beta_star not unique: {len(found)} candidates")
    beta_star = found[0]
    # lift beta_star to an invertible 2-cell with target f1
    lifted = None
    for q in sorted(dom.twocells):
        if dom.tgt2(q) == f1 and p.map2[q] == beta_star and dom.is_invertible2(q):
            lifted = q
            break
    if lifted is None:
        raise ConsistencyError("beta_star does not lift (p is not a fibration?)")
    g_bar_star = dom.src2(lifted)
    beta_bar_star = lifted
    # eta' := (g_bar_star . beta_bar^-1) o (beta_bar_star^-1 . f) o eta1
    inv_bb = dom.inverse2(beta_bar)
    inv_bbs = dom.inverse2(beta_bar_star)
    step = dom.vcomp[(dom.rwhisk[(inv_bbs, f)], eta1)]
    eta_prime = dom.vcomp[(dom.lwhisk[(g_bar_star, inv_bb)], step)]
    if p.map2[eta_prime] != eta:
        raise ConsistencyError("P eta' != eta")
    out = promote_to_adjoint_equivalence(dom, g_bar, g_bar_star, eta_prime)
    checks = (p.map1[out.fwd] == g, p.map1[out.bwd] == g_star,
              p.map2[out.unit] == eta, p.map2[out.counit] == eps,
              p.obj_map[dom.src1(out.fwd)] == cod.src1(g),
              p.obj_map[dom.tgt1(out.fwd)] == cod.tgt1(g))
    if not all(checks):
        raise ConsistencyError(f"lifted structure does not project correctly: {checks}")
    return out


# ---------------------------------------------------------------------------
# Gray-category level


def is_equivalence_twocell(g: GrayCategory, p):
    """A 2-cell of a Gray-category is an equivalence iff it is an equivalence
    1-cell of its hom 2-category."""
    x, y = g.hom_boundary2(p)
    return is_equivalence_1cell(g.hom(x, y), p)


def is_biequivalence(g: GrayCategory, f):
    """Witness (rev, unit, counit) with unit : 1 ~ rev.f and counit : f.rev ~ 1
    equivalence 2-cells, or None."""
    a, b = g.onecells[f]
    for rev in g.onecells_between(b, a):
        gf = g.comp1[(rev, f)]
        fg = g.comp1[(f, rev)]
        for unit in g.twocells_between(g.id1[a], gf):
            if is_equivalence_twocell(g, unit) is None:
                continue
            for counit in g.twocells_between(fg, g.id1[b]):
                if is_equivalence_twocell(g, counit) is not None:
                    return rev, unit, counit
    return None


@dataclass
class AdjointBiequivalence:
    """The six-tuple (f, g, eta, eps, S, T) of an adjoint biequivalence.

    eta and eps are adjoint equivalences in the relevant endo-hom 2-categories,
    with eta.fwd : 1_A -> gf and eps.fwd : fg -> 1_B;
    S : (eps f).(f eta) => 1_f and T : 1_g => (g eps).(eta g) are invertible
    3-cells; both tetrahedron equations must hold.
    """

    f: str
    g: str
    eta: AdjointEquivalence2
    eps: AdjointEquivalence2
    s_cell: str
    t_cell: str

    def s_boundary(self, gc: GrayCategory):
        f, g, eta, eps = self.f, self.g, self.eta.fwd, self.eps.fwd
        src = gc.vcomp2[(gc.whisk2r[(eps, f)], gc.whisk2l[(f, eta)])]
        return src, gc.id2[f]

    def t_boundary(self, gc: GrayCategory):
        f, g, eta, eps = self.f, self.g, self.eta.fwd, self.eps.fwd
        tgt = gc.vcomp2[(gc.whisk2l[(g, eps)], gc.whisk2r[(eta, g)])]
        return gc.id2[g], tgt

    def validate(self, gc: GrayCategory):
        rep = ValidationReport()
        a, b = gc.onecells[self.f]
        if gc.onecells.get(self.g) != (b, a):
            rep.add("abq-g-boundary", (self.g,))
            return rep
        rep.merge(self.eta.validate(gc.hom(a, a)))
        rep.merge(self.eps.validate(gc.hom(b, b)))
        if gc.twocells.get(self.eta.fwd) != (gc.id1[a], gc.comp1[(self.g, self.f)]):
            rep.add("abq-eta-boundary", (self.eta.fwd,))
        if gc.twocells.get(self.eps.fwd) != (gc.comp1[(self.f, self.g)], gc.id1[b]):
            rep.add("abq-eps-boundary", (self.eps.fwd,))
        if not rep.ok:
            return rep
        if gc.threecells.get(self.s_cell) != self.s_boundary(gc):
            rep.add("abq-S-boundary", (self.s_cell,))
        if gc.threecells.get(self.t_cell) != self.t_boundary(gc):
            rep.add("abq-T-boundary", (self.t_cell,))
        if not rep.ok:
            return rep
        if gc.inverse3(self.s_cell) is None:
            rep.add("abq-S-invertible", (self.s_cell,))
        if gc.inverse3(self.t_cell) is None:
            rep.add("abq-T-invertible", (self.t_cell,))
        first, second = check_tetrahedra(gc, self)
        if not first:
            rep.add("tetrahedron-1", (self.f,))
        if not second:
            rep.add("tetrahedron-2", (self.f,))
        return rep


def first_tetrahedron(gc: GrayCategory, ab: AdjointBiequivalence):
    """Evaluate the first tetrahedron pasting; the equation holds iff the
    result is the identity 3-cell on eta."""
    f, g = ab.f, ab.g
    eta, eps, s, t = ab.eta.fwd, ab.eps.fwd, ab.s_cell, ab.t_cell
    tf = gc.whisk3r[(t, f)]                                   # 1_gf => (g eps f).(eta g f)
    step1 = gc.whisk32r[(tf, eta)]
    ef = gc.whisk2r[(eps, f)]
    gef = gc.whisk2l[(g, ef)]
    step2 = gc.whisk32l[(gef, gc.interchanger[(eta, eta)])]
    gs = gc.whisk3l[(g, s)]                                   # (g eps f).(g f eta) => 1_gf
    step3 = gc.whisk32r[(gs, eta)]
    return gc.vcomp3[(step3, gc.vcomp3[(step2, step1)])]


def second_tetrahedron(gc: GrayCategory, ab: AdjointBiequivalence):
    """Evaluate the second tetrahedron pasting; identity on eps iff it holds."""
    f, g = ab.f, ab.g
    eta, eps, s, t = ab.eta.fwd, ab.eps.fwd, ab.s_cell, ab.t_cell
    ft = gc.whisk3l[(f, t)]                                   # 1_fg => (f g eps).(f eta g)
    step1 = gc.whisk32l[(eps, ft)]
    feta = gc.whisk2l[(f, eta)]
    fetag = gc.whisk2r[(feta, g)]
    step2 = gc.whisk32r[(gc.interchanger[(eps, eps)], fetag)]
    sg = gc.whisk3r[(s, g)]                                   # (eps f g).(f eta g) => 1_fg
    step3 = gc.whisk32l[(eps, sg)]
    return gc.vcomp3[(step3, gc.vcomp3[(step2, step1)])]


def check_tetrahedra(gc: GrayCategory, ab: AdjointBiequivalence):
    first = first_tetrahedron(gc, ab) == gc.id3[ab.eta.fwd]
    second = second_tetrahedron(gc, ab) == gc.id3[ab.eps.fwd]
    return first, second


def complete_adjoint_biequivalence(gc: GrayCategory, f, g, eps):
    """Given a biequivalence f, a reverse g and an equivalence eps : fg ~ 1,
    search eta : 1 ~ gf and an invertible S : (eps f).(f eta) => 1_f.

    Follows the proof of the existence clause: search eta whose composite with
    eps f is isomorphic to the identity, then certify eta is an equivalence.
    """
    a, b = gc.onecells[f]
    gf = gc.comp1[(g, f)]
    ef = gc.whisk2r[(eps, f)]
    for eta in gc.twocells_between(gc.id1[a], gf):
        comp = gc.vcomp2[(ef, gc.whisk2l[(f, eta)])]
        for s in gc.threecells_between(comp, gc.id2[f]):
            if gc.inverse3(s) is None:
                continue
            if is_equivalence_twocell(gc, eta) is None:
                continue
            return eta, s
    raise ConsistencyError(
        f"no (eta, S) exists for ({f}, {g}, {eps}); f is not a biequivalence "
        "or eps is not an equivalence")


def complete_T(gc: GrayCategory, ab_partial: AdjointBiequivalence):
    """The unique invertible T satisfying the first tetrahedron equation.

    ab_partial carries f, g, eta, eps, S; its t_cell is ignored.  Exhaustive
    search over parallel invertible 3-cells; the count being exactly one is
    the content of the uniqueness clause and is asserted.
    """
    src, tgt = ab_partial.t_boundary(gc)
    found = []
    for t in gc.threecells_between(src, tgt):
        if gc.inverse3(t) is None:
            continue
        cand = AdjointBiequivalence(ab_partial.f, ab_partial.g, ab_partial.eta,
                                    ab_partial.eps, ab_partial.s_cell, t)
        if first_tetrahedron(gc, cand) == gc.id3[ab_partial.eta.fwd]:
            found.append(t)
    if len(found) != 1:
        raise ConsistencyError(
            f"expected exactly one T for {ab_partial.f}; found {len(found)}")
    return found[0]


def build_adjoint_biequivalence(gc: GrayCategory, f):
    """Complete a biequivalence f to a full adjoint biequivalence."""
    wit = is_biequivalence(gc, f)
    if wit is None:
        raise ConsistencyError(f"{f} is not a biequivalence")
    g, _, eps0 = wit
    a, b = gc.onecells[f]
    eta0, s = complete_adjoint_biequivalence(gc, f, g, eps0)
    eta = promote_equivalence_2cell(gc, eta0)
    eps = promote_equivalence_2cell(gc, eps0)
    partial = AdjointBiequivalence(f, g, eta, eps, s, t_cell="")
    t = complete_T(gc, partial)
    ab = AdjointBiequivalence(f, g, eta, eps, s, t)
    rep = ab.validate(gc)
    if not rep.ok:
        raise ConsistencyError(f"built adjoint biequivalence invalid: {rep}")
    return ab


def promote_equivalence_2cell(gc: GrayCategory, p):
    """Promote an equivalence 2-cell to an adjoint equivalence in its hom."""
    x, y = gc.hom_boundary2(p)
    return promote_equivalence(gc.hom(x, y), p)


def enumerate_adjoint_biequivalences(gc: GrayCategory, f=None, tgt_obj=None):
    """All adjoint biequivalences, optionally with fixed f or fixed target object.

    Exhaustive and deterministic; meant for desk-scale corpus categories.
    """
    out = []
    for f0 in sorted(gc.onecells):
        if f is not None and f0 != f:
            continue
        a, b = gc.onecells[f0]
        if tgt_obj is not None and b != tgt_obj:
            continue
        gf_pool = gc.onecells_between(b, a)
        for g0 in gf_pool:
            gf = gc.comp1[(g0, f0)]
            fg = gc.comp1[(f0, g0)]
            hom_a = gc.hom(a, a)
            hom_b = gc.hom(b, b)
            for eta_f in gc.twocells_between(gc.id1[a], gf):
                etas = _adjoint_equivalences_on(hom_a, eta_f)
                if not etas:
                    continue
                for eps_f in gc.twocells_between(fg, gc.id1[b]):
                    epss = _adjoint_equivalences_on(hom_b, eps_f)
                    if not epss:
                        continue
                    for eta in etas:
                        for eps in epss:
                            partial = AdjointBiequivalence(f0, g0, eta, eps, "", "")
                            s_src, s_tgt = partial.s_boundary(gc)
                            for s in gc.threecells_between(s_src, s_tgt):
                                if gc.inverse3(s) is None:
                                    continue
                                t_src, t_tgt = partial.t_boundary(gc)
                                for t in gc.threecells_between(t_src, t_tgt):
                                    if gc.inverse3(t) is None:
                                        continue
                                    ab = AdjointBiequivalence(f0, g0, eta, eps, s, t)
                                    if all(check_tetrahedra(gc, ab)):
                                        out.append(ab)
    return out


def _adjoint_equivalences_on(hom: TwoCategory, fwd):
    """All adjoint equivalence structures with the given forward 1-cell."""
    out = []
    x, y = hom.onecells[fwd]
    for bwd in hom.onecells_between(y, x):
        for unit in hom.twocells_between(hom.id1[x], hom.comp1[(bwd, fwd)]):
            for counit in hom.twocells_between(hom.comp1[(fwd, bwd)], hom.id1[y]):
                cand = AdjointEquivalence2(fwd, bwd, unit, counit)
                if cand.validate(hom).ok:
                    out.append(cand)
    return out
