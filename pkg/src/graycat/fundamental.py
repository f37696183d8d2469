"""The fundamental-Gray-groupoid presentation of a truncated simplicial set,
and evaluation of presentation words back into a Gray-groupoid (the counit),
with the §-by-§ normalization executed as directed rewriting.

The presentation is emitted only; no word-problem solver is shipped.  The
rewriting used by the spot check applies exactly the orientations the
normalization argument supplies: formal-inverse elimination and pairwise
composition, each witnessed by a 2-simplex generator of the nerve.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cells import GrayCategory
from .report import ConsistencyError, InputError, ValidationReport
from .simplicial import NerveSSet, TruncatedSimplicialSet, _t2, _t3, _t4, nerve


# ---------------------------------------------------------------------------
# the presentation


@dataclass
class GrayPresentation:
    gens1: dict              # name -> (1-simplex, sign)
    gens2: dict              # name -> 2-simplex
    gens3: dict              # name -> 3-simplex
    relations: list          # 4-simplex ids

    def summary(self):
        return (len(self.gens1), len(self.gens2), len(self.gens3),
                len(self.relations))


def _is_identity_1(g: GrayCategory, f):
    return f in g.id1.values()


def _is_identity_2(g: GrayCategory, p):
    return p in g.id2.values()


def criterion_nondegenerate_2(nv: NerveSSet, t):
    """The identity-count reading of triangle nondegeneracy: a generator
    unless two or more of the inner edge cells and the filling 2-cell are
    identities.

    This agrees with degeneracy-freeness except for triangles whose two inner
    edges are identities but whose filling 2-cell is not; those triangles are
    indispensable for 2-cell fullness of the counit, so the presentation uses
    degeneracy-freeness (see the decisions ledger).
    """
    f01, f12, _, al = nv.pay2[t]
    g = nv.gray
    idents = sum((_is_identity_1(g, f01), _is_identity_1(g, f12),
                  _is_identity_2(g, al)))
    return idents <= 1


def pi3_presentation(x: TruncatedSimplicialSet) -> GrayPresentation:
    """Generators from the nondegenerate simplices (with formal inverses at
    dimension 1), one relation per nondegenerate 4-simplex."""
    gens1 = {}
    for f in x.nondegenerate(1):
        gens1[f"[{f}]"] = (f, 1)
        gens1[f"[{f}]~"] = (f, -1)
    gens2 = {f"[{t}]": t for t in x.nondegenerate(2)}
    gens3 = {f"[{t}]": t for t in x.nondegenerate(3)}
    return GrayPresentation(gens1, gens2, gens3, list(x.nondegenerate(4)))


# ---------------------------------------------------------------------------
# words over the presentation and counit evaluation


@dataclass(frozen=True)
class Word1:
    """A path of generator letters and formal inverses, first applied first."""

    start: str
    letters: tuple           # ((1-simplex id, +1 | -1), ...)

    def display(self):
        if not self.letters:
            return f"1_{self.start}"
        # rightmost-first notation for display
        parts = [f"[{f}]" + ("~" if s < 0 else "") for f, s in reversed(self.letters)]
        return "".join(parts)


def word_endpoint(g: GrayCategory, w: Word1):
    at = w.start
    for f, s in w.letters:
        x, y = g.onecells[f]
        if s > 0:
            if x != at:
                raise InputError(f"word {w.display()} breaks at {f}")
            at = y
        else:
            if y != at:
                raise InputError(f"word {w.display()} breaks at {f}~")
            at = x
    return at


def reduce_word(w: Word1) -> Word1:
    """Free-groupoid reduction: cancel adjacent inverse pairs."""
    out = []
    for letter in w.letters:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return Word1(w.start, tuple(out))


def counit_eval1(g: GrayCategory, w: Word1):
    """Evaluate a 1-cell word: generators to their cells, formal inverses to
    the strict inverses, composites by comp1."""
    out = g.id1[w.start]
    for f, s in w.letters:
        cell = f if s > 0 else g.inverse1(f)
        if cell is None:
            raise InputError(f"{f} has no strict inverse")
        out = g.comp1[(cell, out)]
    return out


def counit_eval2(g: GrayCategory, nv: NerveSSet, letters):
    """Evaluate a vertical chain of 2-simplex generators (with signs)."""
    out = None
    for t, s in letters:
        al = nv.pay2[t][3]
        cell = al if s > 0 else g.inverse2(al)
        out = cell if out is None else g.vcomp2[(cell, out)]
    return out


def counit_eval3(g: GrayCategory, nv: NerveSSet, letters):
    """Evaluate a vertical chain of 3-simplex generators (with signs)."""
    out = None
    for t, s in letters:
        xc = nv.pay3[t][1]
        cell = xc if s > 0 else g.inverse3(xc)
        out = cell if out is None else g.vcomp3[(cell, out)]
    return out


# ---------------------------------------------------------------------------
# normalization of 1-cell words (the counit surjectivity argument)


def _composition_triangle(g: GrayCategory, f1, f2):
    """The nerve triangle composing two 1-cells; its generator rewrites
    [f2][f1] to [f2 f1]."""
    return _t2(f1, f2, g.comp1[(f2, f1)], g.id2[g.comp1[(f2, f1)]])


def _inverse_triangle(g: GrayCategory, f):
    """The triangle exhibiting the strict inverse; whiskered, it connects the
    formal inverse [f]~ to [inverse(f)]."""
    inv = g.inverse1(f)
    x = g.src1(f)
    return _t2(f, inv, g.id1[x], g.id2[g.id1[x]])


def normalize_word(g: GrayCategory, nv: NerveSSet, w: Word1):
    """Rewrite a word to length <= 1 through generator 2-cells.

    Returns (final word, trace) where each trace entry is
    (step-kind, position, witnessing 2-simplex id).  The witnessing simplex
    is checked to exist in the nerve.
    """
    w = reduce_word(w)
    trace = []
    letters = list(w.letters)
    # eliminate formal inverses
    for i, (f, s) in enumerate(letters):
        if s < 0:
            t = _inverse_triangle(g, f)
            if t not in nv.dim(2):
                raise ConsistencyError(f"inverse triangle missing for {f}")
            letters[i] = (g.inverse1(f), 1)
            trace.append(("inverse-elimination", i, t))
    # drop identity letters (they are not generators; evaluation unchanged)
    letters = [(f, s) for f, s in letters if not _is_identity_1(g, f)]
    # pairwise composition
    while len(letters) > 1:
        (f1, _), (f2, _) = letters[0], letters[1]
        t = _composition_triangle(g, f1, f2)
        if t not in nv.dim(2):
            raise ConsistencyError(f"composition triangle missing for {f1},{f2}")
        comp = g.comp1[(f2, f1)]
        trace.append(("compose", 0, t))
        if _is_identity_1(g, comp):
            letters = letters[2:]
        else:
            letters = [(comp, 1)] + letters[2:]
    return Word1(w.start, tuple(letters)), trace


def enumerate_words(g: GrayCategory, nv: NerveSSet, bound):
    """All reduced words of length <= bound over the 1-generators."""
    letters = []
    for f in nv.nondegenerate(1):
        letters.append((f, 1))
        letters.append((f, -1))
    out = []
    for x in sorted(g.objects):
        frontier = [Word1(x, ())]
        out.extend(frontier)
        for _ in range(bound):
            nxt = []
            for w in frontier:
                at = word_endpoint(g, w)
                for f, s in letters:
                    fr = g.src1(f) if s > 0 else g.tgt1(f)
                    if fr != at:
                        continue
                    w2 = Word1(x, w.letters + ((f, s),))
                    if reduce_word(w2).letters != w2.letters:
                        continue
                    nxt.append(w2)
            out.extend(nxt)
            frontier = nxt
    return out


# ---------------------------------------------------------------------------
# the pentagon relation for composable 3-generators


def pentagon_relation_boundary(g: GrayCategory, x1, x2):
    """The 4-simplex boundary encoding [X2][X1] = [X2 X1] for composable
    3-cells X1 : alpha -> gamma and X2 : gamma -> beta between 2-cells
    f -> g_cell; returns the five 3-simplex identifiers."""
    alpha = g.src3(x1)
    gamma = g.tgt3(x1)
    beta = g.tgt3(x2)
    f, gcell = g.twocells[alpha]
    x, _ = g.onecells[f]
    idx = g.id1[x]
    t_i = _t2(idx, idx, idx, g.id2[idx])
    t_f = _t2(idx, f, f, g.id2[f])
    t_al = _t2(idx, f, gcell, alpha)
    t_be = _t2(idx, f, gcell, beta)
    t_ga = _t2(idx, f, gcell, gamma)
    d0 = _t3(t_f, t_f, t_f, t_i, g.id3[g.id2[f]])
    d1 = _t3(t_f, t_be, t_ga, t_i, g.inverse3(x2))
    d2 = _t3(t_f, t_be, t_al, t_i, g.inverse3(g.vcomp3[(x2, x1)]))
    d3 = _t3(t_f, t_ga, t_al, t_i, g.inverse3(x1))
    d4 = _t3(t_i, t_i, t_i, t_i, g.id3[g.id2[idx]])
    return (d0, d1, d2, d3, d4)


# ---------------------------------------------------------------------------
# the spot check


@dataclass
class CounitReport:
    rep: ValidationReport
    words_checked: int = 0
    twocells_checked: int = 0
    threecells_checked: int = 0
    pentagons_checked: int = 0

    @property
    def ok(self):
        return self.rep.ok


def counit_spotcheck(g: GrayCategory, bound=3, nv: NerveSSet = None) -> CounitReport:
    """Identity on objects; every word normalizes to length <= 1 preserving
    evaluation; 2- and 3-cell fullness; the pentagon relation on composable
    3-generator pairs."""
    if nv is None:
        nv = nerve(g)
    rep = ValidationReport()
    out = CounitReport(rep)
    # objects: dimension-0 simplices are exactly the objects
    if set(nv.dim(0)) != set(g.objects):
        rep.add("counit-objects", ())
    # word normalization
    for w in enumerate_words(g, nv, bound):
        out.words_checked += 1
        val = counit_eval1(g, w)
        final, trace = normalize_word(g, nv, w)
        if len(final.letters) > 1:
            rep.add("word-not-normalized", (w.display(),))
            continue
        if counit_eval1(g, final) != val:
            rep.add("word-evaluation-changed", (w.display(),))
        for kind, pos, witness in trace:
            if witness not in nv.dim(2):
                rep.add("word-witness-missing", (w.display(), kind, pos))
    # 2-cell fullness: every non-identity 2-cell arises from a generator
    degen2 = {v for (m, _, _), v in nv.degeneracies.items() if m == 1}
    for p in sorted(g.twocells):
        if _is_identity_2(g, p):
            continue
        out.twocells_checked += 1
        f, q = g.twocells[p]
        x, _ = g.onecells[f]
        t = _t2(g.id1[x], f, q, p)
        if t in nv.dim(2) and t not in degen2:
            continue
        found = any(nv.pay2[t2][3] == p for t2 in nv.dim(2) if t2 not in degen2)
        if not found:
            rep.add("2cell-not-full", (p,))
    # 3-cell fullness: every non-identity 3-cell arises from a 3-generator
    id3s = set(g.id3.values())
    degen3 = {v for (m, _, _), v in nv.degeneracies.items() if m == 2}
    for m in sorted(g.threecells):
        if m in id3s:
            continue
        out.threecells_checked += 1
        found = any(nv.pay3[t][1] == m for t in nv.dim(3) if t not in degen3)
        if not found:
            rep.add("3cell-not-full", (m,))
    # pentagon relations for composable non-identity 3-generator pairs
    for x1 in sorted(g.threecells):
        if x1 in id3s:
            continue
        for x2 in sorted(g.threecells):
            if x2 in id3s or g.src3(x2) != g.tgt3(x1):
                continue
            out.pentagons_checked += 1
            ds = pentagon_relation_boundary(g, x1, x2)
            if _t4(ds) not in nv.dim(4):
                rep.add("pentagon-relation-missing", (x1, x2))
    return out


def relations_hold_under_evaluation(g: GrayCategory, nv: NerveSSet = None):
    """Every 4-simplex relation maps to a true 3-cell equation in g: rebuild
    both pastings of each nondegenerate 4-simplex boundary and compare."""
    from .simplicial import _boundary_data, four_simplex_equation
    if nv is None:
        nv = nerve(g)
    rep = ValidationReport()
    for t in nv.nondegenerate(4):
        edges, alphas, xs = _boundary_data(nv, nv.pay4[t])
        lhs, rhs = four_simplex_equation(g, edges, alphas, xs)
        if lhs != rhs:
            rep.add("relation-fails", (t,))
    return rep
