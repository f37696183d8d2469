"""Fully tabulated finite categories, sesquicategories, 2-categories and Gray-categories.

Every structure is a set of opaque string identifiers per dimension plus total
finite tables.  Nothing is quotiented and nothing is assumed by constructors:
``validate()`` is a separate pass that reports every violated axiom instance.

Conventions, used consistently everywhere:

* composition is written right-to-left: ``comp1[(g, f)]`` is "g after f";
* ``vcomp[(b, a)]`` is the vertical composite "b after a";
* ``lwhisk[(h, a)]`` post-whiskers the 2-cell ``a : f -> f'`` (with f, f': x -> y)
  by the 1-cell ``h : y -> z``, giving ``h a : hf -> hf'``;
* ``rwhisk[(a, k)]`` pre-whiskers by ``k : w -> x``, giving ``a k : fk -> f'k``;
* the interchanger of a Gray-category is oriented
  ``beta_alpha : (beta f') . (g alpha)  =>  (g' alpha) . (beta f)``
  for alpha : f -> f' in hom(A,B) and beta : g -> g' in hom(B,C).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .report import ValidationReport


# ---------------------------------------------------------------------------
# ordinary categories


@dataclass
class Category:
    objects: frozenset
    morphisms: dict          # id -> (src, tgt)
    identity: dict           # object -> morphism id
    comp: dict               # (g, f) -> morphism id

    def src(self, m):
        return self.morphisms[m][0]

    def tgt(self, m):
        return self.morphisms[m][1]

    def morphisms_between(self, x, y):
        return sorted(m for m, (s, t) in self.morphisms.items() if s == x and t == y)

    def composable_pairs(self):
        for g, (gs, _) in self.morphisms.items():
            for f, (_, ft) in self.morphisms.items():
                if ft == gs:
                    yield g, f

    def is_iso(self, m):
        s, t = self.morphisms[m]
        for n, (ns, nt) in self.morphisms.items():
            if ns == t and nt == s:
                if (self.comp.get((n, m)) == self.identity[s]
                        and self.comp.get((m, n)) == self.identity[t]):
                    return n
        return None

    def validate(self):
        rep = ValidationReport()
        for m, (s, t) in sorted(self.morphisms.items()):
            if s not in self.objects:
                rep.add("dangling-object", ("morphisms", m, s))
            if t not in self.objects:
                rep.add("dangling-object", ("morphisms", m, t))
        for x in sorted(self.objects):
            i = self.identity.get(x)
            if i is None or i not in self.morphisms:
                rep.add("identity-missing", ("identity", x))
            elif self.morphisms[i] != (x, x):
                rep.add("identity-boundary", ("identity", x, i))
        if not rep.ok:
            return rep
        pairs = set(self.composable_pairs())
        if set(self.comp) != pairs:
            for key in sorted(set(self.comp) - pairs):
                rep.add("comp-key-not-composable", ("comp",) + key)
            for key in sorted(pairs - set(self.comp)):
                rep.add("comp-missing", ("comp",) + key)
            return rep
        for (g, f), h in sorted(self.comp.items()):
            if h not in self.morphisms:
                rep.add("dangling-morphism", ("comp", g, f, h))
                continue
            if self.morphisms[h] != (self.src(f), self.tgt(g)):
                rep.add("comp-boundary", ("comp", g, f, h))
        if not rep.ok:
            return rep
        for m, (s, t) in sorted(self.morphisms.items()):
            if self.comp.get((m, self.identity[s])) != m:
                rep.add("unit-right", ("comp", m, self.identity[s]))
            if self.comp.get((self.identity[t], m)) != m:
                rep.add("unit-left", ("comp", self.identity[t], m))
        for h in sorted(self.morphisms):
            for g in sorted(self.morphisms):
                if self.tgt(g) != self.src(h):
                    continue
                for f in sorted(self.morphisms):
                    if self.tgt(f) != self.src(g):
                        continue
                    if self.comp[(self.comp[(h, g)], f)] != self.comp[(h, self.comp[(g, f)])]:
                        rep.add("assoc", ("comp", h, g, f))
        return rep


def terminal_category():
    return Category(frozenset({"*"}), {"id*": ("*", "*")}, {"*": "id*"}, {("id*", "id*"): "id*"})


# ---------------------------------------------------------------------------
# sesquicategories and 2-categories


@dataclass
class Sesquicategory:
    """Objects, 1-cells and 2-cells with whiskering but no interchange law."""

    objects: frozenset
    onecells: dict           # id -> (src object, tgt object)
    twocells: dict           # id -> (src 1-cell, tgt 1-cell), parallel
    id1: dict                # object -> 1-cell
    id2: dict                # 1-cell -> 2-cell
    comp1: dict              # (g, f) -> 1-cell
    vcomp: dict              # (b, a) -> 2-cell
    lwhisk: dict             # (h, a) -> 2-cell
    rwhisk: dict             # (a, k) -> 2-cell

    # -- lookup helpers ----------------------------------------------------

    def src1(self, f):
        return self.onecells[f][0]

    def tgt1(self, f):
        return self.onecells[f][1]

    def src2(self, a):
        return self.twocells[a][0]

    def tgt2(self, a):
        return self.twocells[a][1]

    def onecells_between(self, x, y):
        return sorted(f for f, (s, t) in self.onecells.items() if s == x and t == y)

    def twocells_between(self, f, g):
        return sorted(a for a, (s, t) in self.twocells.items() if s == f and t == g)

    def hom_boundary(self, a):
        """Objects (x, y) such that the 2-cell a lives in hom(x, y)."""
        f = self.src2(a)
        return self.onecells[f]

    def inverse2(self, a):
        """Strict vertical inverse of a 2-cell, or None."""
        s, t = self.twocells[a]
        for b in self.twocells_between(t, s):
            if (self.vcomp.get((b, a)) == self.id2[s]
                    and self.vcomp.get((a, b)) == self.id2[t]):
                return b
        return None

    def is_invertible2(self, a):
        return self.inverse2(a) is not None

    def hcomp(self, b, a):
        """Derived horizontal composite (g' alpha).(beta f) of adjacent 2-cells."""
        f, _ = self.twocells[a]
        _, g2 = self.twocells[b]
        return self.vcomp[(self.lwhisk[(g2, a)], self.rwhisk[(b, f)])]

    # -- validation --------------------------------------------------------

    def _validate_structural(self, rep):
        for f, (s, t) in sorted(self.onecells.items()):
            if s not in self.objects or t not in self.objects:
                rep.add("dangling-object", ("onecells", f))
        for a, (s, t) in sorted(self.twocells.items()):
            if s not in self.onecells or t not in self.onecells:
                rep.add("dangling-onecell", ("twocells", a))
            elif self.onecells[s] != self.onecells[t]:
                rep.add("globularity", ("twocells", a), "source/target 1-cells not parallel")
        for x in sorted(self.objects):
            i = self.id1.get(x)
            if i not in self.onecells:
                rep.add("identity1-missing", ("id1", x))
            elif self.onecells[i] != (x, x):
                rep.add("identity1-boundary", ("id1", x, i))
        for f in sorted(self.onecells):
            i = self.id2.get(f)
            if i not in self.twocells:
                rep.add("identity2-missing", ("id2", f))
            elif self.twocells[i] != (f, f):
                rep.add("identity2-boundary", ("id2", f, i))

    def _table_domains(self):
        comp1_keys = {(g, f) for g in self.onecells for f in self.onecells
                      if self.tgt1(f) == self.src1(g)}
        vcomp_keys = {(b, a) for a in self.twocells for b in self.twocells
                      if self.tgt2(a) == self.src2(b)}
        lw_keys, rw_keys = set(), set()
        for a in self.twocells:
            if self.src2(a) not in self.onecells:
                continue
            x, y = self.hom_boundary(a)
            for h, (hs, _) in self.onecells.items():
                if hs == y:
                    lw_keys.add((h, a))
            for k, (_, kt) in self.onecells.items():
                if kt == x:
                    rw_keys.add((a, k))
        return comp1_keys, vcomp_keys, lw_keys, rw_keys

    def _validate_totality(self, rep):
        comp1_keys, vcomp_keys, lw_keys, rw_keys = self._table_domains()
        for name, table, keys, pool in (
                ("comp1", self.comp1, comp1_keys, self.onecells),
                ("vcomp", self.vcomp, vcomp_keys, self.twocells),
                ("lwhisk", self.lwhisk, lw_keys, self.twocells),
                ("rwhisk", self.rwhisk, rw_keys, self.twocells)):
            for key in sorted(keys - set(table)):
                rep.add("table-missing-entry", (name,) + key)
            for key in sorted(set(table) - keys):
                rep.add("table-bad-key", (name,) + key)
            for key in sorted(keys & set(table)):
                if table[key] not in pool:
                    rep.add("dangling-value", (name,) + key + (table[key],))

    def _validate_axioms(self, rep):
        one, two = self.onecells, self.twocells
        # boundary phase: wrong-boundary table values make deeper law checks
        # meaningless, so report and stop before the law phase
        for (g, f), h in sorted(self.comp1.items()):
            if self.onecells[h] != (self.src1(f), self.tgt1(g)):
                rep.add("comp1-boundary", ("comp1", g, f, h))
        for (b, a), c in sorted(self.vcomp.items()):
            if self.twocells[c] != (self.src2(a), self.tgt2(b)):
                rep.add("vcomp-boundary", ("vcomp", b, a, c))
        for (h, a), b in sorted(self.lwhisk.items()):
            want = (self.comp1.get((h, self.src2(a))), self.comp1.get((h, self.tgt2(a))))
            if self.twocells[b] != want:
                rep.add("lwhisk-boundary", ("lwhisk", h, a, b))
        for (a, k), b in sorted(self.rwhisk.items()):
            want = (self.comp1.get((self.src2(a), k)), self.comp1.get((self.tgt2(a), k)))
            if self.twocells[b] != want:
                rep.add("rwhisk-boundary", ("rwhisk", a, k, b))
        if not rep.ok:
            return
        # law phase: with total tables and correct boundaries every derived
        # key below exists
        for f, (x, y) in sorted(one.items()):
            if self.comp1.get((f, self.id1[x])) != f:
                rep.add("unit1-right", ("comp1", f, self.id1[x]))
            if self.comp1.get((self.id1[y], f)) != f:
                rep.add("unit1-left", ("comp1", self.id1[y], f))
        for h in sorted(one):
            for g in sorted(one):
                if self.tgt1(g) != self.src1(h):
                    continue
                for f in sorted(one):
                    if self.tgt1(f) != self.src1(g):
                        continue
                    if self.comp1[(self.comp1[(h, g)], f)] != self.comp1[(h, self.comp1[(g, f)])]:
                        rep.add("assoc1", ("comp1", h, g, f))
        for a, (f, g) in sorted(two.items()):
            if self.vcomp.get((a, self.id2[f])) != a:
                rep.add("unit2-right", ("vcomp", a, self.id2[f]))
            if self.vcomp.get((self.id2[g], a)) != a:
                rep.add("unit2-left", ("vcomp", self.id2[g], a))
        for c in sorted(two):
            for b in sorted(two):
                if self.tgt2(b) != self.src2(c):
                    continue
                for a in sorted(two):
                    if self.tgt2(a) != self.src2(b):
                        continue
                    if self.vcomp[(self.vcomp[(c, b)], a)] != self.vcomp[(c, self.vcomp[(b, a)])]:
                        rep.add("assoc2", ("vcomp", c, b, a))
        # whiskering is functorial in the 2-cell argument
        for (b, a), c in sorted(self.vcomp.items()):
            x, y = self.hom_boundary(a)
            for h in sorted(one):
                if self.src1(h) != y:
                    continue
                if self.lwhisk[(h, c)] != self.vcomp[(self.lwhisk[(h, b)], self.lwhisk[(h, a)])]:
                    rep.add("lwhisk-vcomp", ("lwhisk", h, b, a))
            for k in sorted(one):
                if self.tgt1(k) != x:
                    continue
                if self.rwhisk[(c, k)] != self.vcomp[(self.rwhisk[(b, k)], self.rwhisk[(a, k)])]:
                    rep.add("rwhisk-vcomp", ("rwhisk", b, a, k))
        for f in sorted(one):
            a = self.id2[f]
            x, y = self.onecells[f]
            for h in sorted(one):
                if self.src1(h) == y and self.lwhisk[(h, a)] != self.id2[self.comp1[(h, f)]]:
                    rep.add("lwhisk-id2", ("lwhisk", h, f))
            for k in sorted(one):
                if self.tgt1(k) == x and self.rwhisk[(a, k)] != self.id2[self.comp1[(f, k)]]:
                    rep.add("rwhisk-id2", ("rwhisk", f, k))
        # whiskering compatible with comp1 and identity 1-cells
        for a in sorted(two):
            x, y = self.hom_boundary(a)
            if self.lwhisk[(self.id1[y], a)] != a:
                rep.add("lwhisk-unit1", ("lwhisk", self.id1[y], a))
            if self.rwhisk[(a, self.id1[x])] != a:
                rep.add("rwhisk-unit1", ("rwhisk", a, self.id1[x]))
            for h1 in sorted(one):
                if self.src1(h1) != y:
                    continue
                for h2 in sorted(one):
                    if self.src1(h2) != self.tgt1(h1):
                        continue
                    if self.lwhisk[(self.comp1[(h2, h1)], a)] != self.lwhisk[(h2, self.lwhisk[(h1, a)])]:
                        rep.add("lwhisk-comp1", ("lwhisk", h2, h1, a))
            for k1 in sorted(one):
                if self.tgt1(k1) != x:
                    continue
                for k2 in sorted(one):
                    if self.tgt1(k2) != self.src1(k1):
                        continue
                    if self.rwhisk[(a, self.comp1[(k1, k2)])] != self.rwhisk[(self.rwhisk[(a, k1)], k2)]:
                        rep.add("rwhisk-comp1", ("rwhisk", a, k1, k2))
            for h in sorted(one):
                if self.src1(h) != y:
                    continue
                for k in sorted(one):
                    if self.tgt1(k) != x:
                        continue
                    if self.rwhisk[(self.lwhisk[(h, a)], k)] != self.lwhisk[(h, self.rwhisk[(a, k)])]:
                        rep.add("whisk-middle", ("whisk", h, a, k))

    def validate(self):
        rep = ValidationReport()
        self._validate_structural(rep)
        if not rep.ok:
            return rep
        self._validate_totality(rep)
        if not rep.ok:
            return rep
        self._validate_axioms(rep)
        return rep


@dataclass
class TwoCategory(Sesquicategory):
    """A sesquicategory satisfying the strict interchange law."""

    def validate(self):
        rep = super().validate()
        if not rep.ok:
            return rep
        for a in sorted(self.twocells):
            fa, fa2 = self.twocells[a]
            _, y = self.onecells[fa]
            for b in sorted(self.twocells):
                gb, gb2 = self.twocells[b]
                if self.src1(gb) != y:
                    continue
                left = self.vcomp[(self.rwhisk[(b, fa2)], self.lwhisk[(gb, a)])]
                right = self.vcomp[(self.lwhisk[(gb2, a)], self.rwhisk[(b, fa)])]
                if left != right:
                    rep.add("interchange", ("interchange", a, b))
        return rep


def terminal_two_category():
    return TwoCategory(
        objects=frozenset({"*"}),
        onecells={"id*": ("*", "*")},
        twocells={"ID*": ("id*", "id*")},
        id1={"*": "id*"}, id2={"id*": "ID*"},
        comp1={("id*", "id*"): "id*"},
        vcomp={("ID*", "ID*"): "ID*"},
        lwhisk={("id*", "ID*"): "ID*"},
        rwhisk={("ID*", "id*"): "ID*"})


def empty_two_category():
    return TwoCategory(frozenset(), {}, {}, {}, {}, {}, {}, {}, {})


# ---------------------------------------------------------------------------
# Gray-categories


@dataclass
class GrayCategory:
    """A finite Gray-category with flat global tables.

    Cell identifiers are globally unique per dimension across all homs; the
    hom 2-category at an object pair is exposed as a TwoCategory view whose
    objects are 1-cells, whose 1-cells are 2-cells and whose 2-cells are
    3-cells of the Gray-category.
    """

    objects: frozenset
    onecells: dict           # id -> (src object, tgt object)
    twocells: dict           # id -> (src 1-cell, tgt 1-cell)
    threecells: dict         # id -> (src 2-cell, tgt 2-cell)
    id1: dict                # object -> 1-cell
    id2: dict                # 1-cell -> 2-cell
    id3: dict                # 2-cell -> 3-cell
    comp1: dict              # (g, f) -> 1-cell
    vcomp2: dict             # (q, p) -> 2-cell
    vcomp3: dict             # (N, M) -> 3-cell, composition along a shared 2-cell boundary
    whisk2l: dict            # (h, p) -> 2-cell
    whisk2r: dict            # (p, h) -> 2-cell
    whisk3l: dict            # (h, M) -> 3-cell
    whisk3r: dict            # (M, h) -> 3-cell
    whisk32l: dict           # (p, M) -> 3-cell: p . M, whisker 3-cell by 2-cell on the left
    whisk32r: dict           # (M, p) -> 3-cell
    interchanger: dict       # (beta, alpha) -> 3-cell for horizontally adjacent 2-cells

    _hom_cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- lookups -----------------------------------------------------------

    def src1(self, f):
        return self.onecells[f][0]

    def tgt1(self, f):
        return self.onecells[f][1]

    def src2(self, p):
        return self.twocells[p][0]

    def tgt2(self, p):
        return self.twocells[p][1]

    def src3(self, m):
        return self.threecells[m][0]

    def tgt3(self, m):
        return self.threecells[m][1]

    def hom_boundary2(self, p):
        """Object pair (x, y) of the hom containing the 2-cell p."""
        return self.onecells[self.src2(p)]

    def onecells_between(self, x, y):
        return sorted(f for f, (s, t) in self.onecells.items() if s == x and t == y)

    def twocells_between(self, f, g):
        return sorted(p for p, (s, t) in self.twocells.items() if s == f and t == g)

    def threecells_between(self, p, q):
        return sorted(m for m, (s, t) in self.threecells.items() if s == p and t == q)

    def hom(self, x, y):
        """The hom TwoCategory at (x, y); cached."""
        key = (x, y)
        if key not in self._hom_cache:
            obs = frozenset(self.onecells_between(x, y))
            one = {p: st for p, st in self.twocells.items()
                   if self.src2(p) in obs}
            two = {m: st for m, st in self.threecells.items()
                   if self.src3(m) in one}
            self._hom_cache[key] = TwoCategory(
                objects=obs,
                onecells=one,
                twocells=two,
                id1={f: self.id2[f] for f in obs},
                id2={p: self.id3[p] for p in one},
                comp1={k: v for k, v in self.vcomp2.items() if k[0] in one and k[1] in one},
                vcomp={k: v for k, v in self.vcomp3.items() if k[0] in two and k[1] in two},
                lwhisk={k: v for k, v in self.whisk32l.items() if k[0] in one and k[1] in two},
                rwhisk={k: v for k, v in self.whisk32r.items() if k[0] in two and k[1] in one})
        return self._hom_cache[key]

    def inverse1(self, f):
        """Strict comp1-inverse of a 1-cell, or None."""
        x, y = self.onecells[f]
        for g in self.onecells_between(y, x):
            if self.comp1.get((g, f)) == self.id1[x] and self.comp1.get((f, g)) == self.id1[y]:
                return g
        return None

    def inverse2(self, p):
        s, t = self.twocells[p]
        for q in self.twocells_between(t, s):
            if (self.vcomp2.get((q, p)) == self.id2[s]
                    and self.vcomp2.get((p, q)) == self.id2[t]):
                return q
        return None

    def inverse3(self, m):
        s, t = self.threecells[m]
        for n in self.threecells_between(t, s):
            if (self.vcomp3.get((n, m)) == self.id3[s]
                    and self.vcomp3.get((m, n)) == self.id3[t]):
                return n
        return None

    def adjacent_twocell_pairs(self):
        """Ordered pairs (beta, alpha) with alpha in hom(A,B), beta in hom(B,C)."""
        out = []
        for alpha in self.twocells:
            _, y = self.hom_boundary2(alpha)
            for beta in self.twocells:
                if self.hom_boundary2(beta)[0] == y:
                    out.append((beta, alpha))
        return sorted(out)

    def interchanger_boundary(self, beta, alpha):
        f, f2 = self.twocells[alpha]
        g, g2 = self.twocells[beta]
        src = self.vcomp2[(self.whisk2r[(beta, f2)], self.whisk2l[(g, alpha)])]
        tgt = self.vcomp2[(self.whisk2l[(g2, alpha)], self.whisk2r[(beta, f)])]
        return src, tgt

    # -- validation ----------------------------------------------------------

    def _structural(self, rep):
        for f, (s, t) in sorted(self.onecells.items()):
            if s not in self.objects or t not in self.objects:
                rep.add("dangling-object", ("onecells", f))
        for p, (s, t) in sorted(self.twocells.items()):
            if s not in self.onecells or t not in self.onecells:
                rep.add("dangling-onecell", ("twocells", p))
            elif self.onecells[s] != self.onecells[t]:
                rep.add("globularity2", ("twocells", p))
        for m, (s, t) in sorted(self.threecells.items()):
            if s not in self.twocells or t not in self.twocells:
                rep.add("dangling-twocell", ("threecells", m))
            elif self.twocells[s] != self.twocells[t]:
                rep.add("globularity3", ("threecells", m))
        for x in sorted(self.objects):
            i = self.id1.get(x)
            if i not in self.onecells or self.onecells[i] != (x, x):
                rep.add("identity1", ("id1", x))
        for f in sorted(self.onecells):
            i = self.id2.get(f)
            if i not in self.twocells or self.twocells[i] != (f, f):
                rep.add("identity2", ("id2", f))
        for p in sorted(self.twocells):
            i = self.id3.get(p)
            if i not in self.threecells or self.threecells[i] != (p, p):
                rep.add("identity3", ("id3", p))

    def _sesqui_level(self):
        """The underlying 2-truncated structure (objects, 1-cells, 2-cells)."""
        return Sesquicategory(
            objects=self.objects, onecells=self.onecells, twocells=self.twocells,
            id1=self.id1, id2=self.id2, comp1=self.comp1, vcomp=self.vcomp2,
            lwhisk=self.whisk2l, rwhisk=self.whisk2r)

    def _whisk3_keys(self):
        lw, rw = set(), set()
        for m in self.threecells:
            if self.src3(m) not in self.twocells:
                continue
            x, y = self.onecells[self.src2(self.src3(m))]
            for h, (hs, _) in self.onecells.items():
                if hs == y:
                    lw.add((h, m))
            for k, (_, kt) in self.onecells.items():
                if kt == x:
                    rw.add((m, k))
        return lw, rw

    def validate(self):
        rep = ValidationReport()
        self._structural(rep)
        if not rep.ok:
            return rep
        # underlying sesquicategory axioms at dimensions <= 2
        rep.merge(self._sesqui_level().validate())
        if not rep.ok:
            return rep
        # each hom is a valid 2-category
        for x in sorted(self.objects):
            for y in sorted(self.objects):
                sub = self.hom(x, y).validate()
                for v in sub.violations:
                    rep.add("hom-" + v.axiom, (x, y) + v.where, v.detail)
        # hom cell sets partition the global 3-cell tables
        hom_one = set()
        for x in self.objects:
            for y in self.objects:
                hom_one |= set(self.hom(x, y).onecells)
        if hom_one != set(self.twocells):
            rep.add("hom-partition", ("twocells",))
        if not rep.ok:
            return rep
        self._validate_whisk3(rep)
        if not rep.ok:
            return rep
        self._validate_interchangers(rep)
        return rep

    def _validate_whisk3(self, rep):
        lw_keys, rw_keys = self._whisk3_keys()
        for name, table, keys in (("whisk3l", self.whisk3l, lw_keys),
                                  ("whisk3r", self.whisk3r, rw_keys)):
            for key in sorted(keys - set(table)):
                rep.add("table-missing-entry", (name,) + key)
            for key in sorted(set(table) - keys):
                rep.add("table-bad-key", (name,) + key)
        if not rep.ok:
            return
        for (h, m), n in sorted(self.whisk3l.items()):
            want = (self.whisk2l[(h, self.src3(m))], self.whisk2l[(h, self.tgt3(m))])
            if self.threecells[n] != want:
                rep.add("whisk3l-boundary", ("whisk3l", h, m, n))
        for (m, k), n in sorted(self.whisk3r.items()):
            want = (self.whisk2r[(self.src3(m), k)], self.whisk2r[(self.tgt3(m), k)])
            if self.threecells[n] != want:
                rep.add("whisk3r-boundary", ("whisk3r", m, k, n))
        if not rep.ok:
            return
        # whiskering by a 1-cell is a 2-functor between homs
        for (nn, m), c in sorted(self.vcomp3.items()):
            x, y = self.onecells[self.src2(self.src3(m))]
            for h in sorted(self.onecells):
                if self.src1(h) != y:
                    continue
                if self.whisk3l[(h, c)] != self.vcomp3[(self.whisk3l[(h, nn)], self.whisk3l[(h, m)])]:
                    rep.add("whisk3l-vcomp3", ("whisk3l", h, nn, m))
            for k in sorted(self.onecells):
                if self.tgt1(k) != x:
                    continue
                if self.whisk3r[(c, k)] != self.vcomp3[(self.whisk3r[(nn, k)], self.whisk3r[(m, k)])]:
                    rep.add("whisk3r-vcomp3", ("whisk3r", nn, m, k))
        for p in sorted(self.twocells):
            m = self.id3[p]
            x, y = self.hom_boundary2(p)
            for h in sorted(self.onecells):
                if self.src1(h) == y and self.whisk3l[(h, m)] != self.id3[self.whisk2l[(h, p)]]:
                    rep.add("whisk3l-id3", ("whisk3l", h, p))
            for k in sorted(self.onecells):
                if self.tgt1(k) == x and self.whisk3r[(m, k)] != self.id3[self.whisk2r[(p, k)]]:
                    rep.add("whisk3r-id3", ("whisk3r", p, k))
        # compatibility with comp1 and identity 1-cells, plus the middle law
        for m in sorted(self.threecells):
            x, y = self.onecells[self.src2(self.src3(m))]
            if self.whisk3l[(self.id1[y], m)] != m:
                rep.add("whisk3l-unit1", ("whisk3l", self.id1[y], m))
            if self.whisk3r[(m, self.id1[x])] != m:
                rep.add("whisk3r-unit1", ("whisk3r", m, self.id1[x]))
            for h1 in sorted(self.onecells):
                if self.src1(h1) != y:
                    continue
                for h2 in sorted(self.onecells):
                    if self.src1(h2) != self.tgt1(h1):
                        continue
                    if self.whisk3l[(self.comp1[(h2, h1)], m)] != self.whisk3l[(h2, self.whisk3l[(h1, m)])]:
                        rep.add("whisk3l-comp1", ("whisk3l", h2, h1, m))
            for k1 in sorted(self.onecells):
                if self.tgt1(k1) != x:
                    continue
                for k2 in sorted(self.onecells):
                    if self.tgt1(k2) != self.src1(k1):
                        continue
                    if self.whisk3r[(m, self.comp1[(k1, k2)])] != self.whisk3r[(self.whisk3r[(m, k1)], k2)]:
                        rep.add("whisk3r-comp1", ("whisk3r", m, k1, k2))
            for h in sorted(self.onecells):
                if self.src1(h) != y:
                    continue
                for k in sorted(self.onecells):
                    if self.tgt1(k) != x:
                        continue
                    if self.whisk3r[(self.whisk3l[(h, m)], k)] != self.whisk3l[(h, self.whisk3r[(m, k)])]:
                        rep.add("whisk3-middle", ("whisk3", h, m, k))
        # 1-cell whiskering commutes with hom-level whiskering of 3-cells by 2-cells
        for (p, m), n in sorted(self.whisk32l.items()):
            x, y = self.hom_boundary2(p)
            for h in sorted(self.onecells):
                if self.src1(h) != y:
                    continue
                if self.whisk3l[(h, n)] != self.whisk32l[(self.whisk2l[(h, p)], self.whisk3l[(h, m)])]:
                    rep.add("whisk3l-whisk32l", ("whisk3l", h, p, m))
            for k in sorted(self.onecells):
                if self.tgt1(k) != x:
                    continue
                if self.whisk3r[(n, k)] != self.whisk32l[(self.whisk2r[(p, k)], self.whisk3r[(m, k)])]:
                    rep.add("whisk3r-whisk32l", ("whisk3r", p, m, k))
        for (m, p), n in sorted(self.whisk32r.items()):
            x, y = self.hom_boundary2(p)
            for h in sorted(self.onecells):
                if self.src1(h) != y:
                    continue
                if self.whisk3l[(h, n)] != self.whisk32r[(self.whisk3l[(h, m)], self.whisk2l[(h, p)])]:
                    rep.add("whisk3l-whisk32r", ("whisk3l", h, m, p))
            for k in sorted(self.onecells):
                if self.tgt1(k) != x:
                    continue
                if self.whisk3r[(n, k)] != self.whisk32r[(self.whisk3r[(m, k)], self.whisk2r[(p, k)])]:
                    rep.add("whisk3r-whisk32r", ("whisk3r", m, p, k))

    def _validate_interchangers(self, rep):
        pairs = set(self.adjacent_twocell_pairs())
        for key in sorted(pairs - set(self.interchanger)):
            rep.add("interchanger-missing", ("interchanger",) + key)
        for key in sorted(set(self.interchanger) - pairs):
            rep.add("interchanger-bad-key", ("interchanger",) + key)
        if not rep.ok:
            return
        ic = self.interchanger
        for (beta, alpha), m in sorted(ic.items()):
            if m not in self.threecells:
                rep.add("dangling-threecell", ("interchanger", beta, alpha, m))
                continue
            if self.threecells[m] != self.interchanger_boundary(beta, alpha):
                rep.add("interchanger-boundary", ("interchanger", beta, alpha, m))
        if not rep.ok:
            return
        for (beta, alpha), m in sorted(ic.items()):
            if self.inverse3(m) is None:
                rep.add("interchanger-invertible", ("interchanger", beta, alpha, m))
        for (beta, alpha), m in sorted(ic.items()):
            f, f2 = self.twocells[alpha]
            g, g2 = self.twocells[beta]
            # naturality in alpha
            for gam in sorted(self.threecells):
                if self.src3(gam) != alpha:
                    continue
                alpha2 = self.tgt3(gam)
                lhs = self.vcomp3[(ic[(beta, alpha2)],
                                   self.whisk32l[(self.whisk2r[(beta, f2)], self.whisk3l[(g, gam)])])]
                rhs = self.vcomp3[(self.whisk32r[(self.whisk3l[(g2, gam)], self.whisk2r[(beta, f)])], m)]
                if lhs != rhs:
                    rep.add("interchanger-naturality-alpha", ("interchanger", beta, alpha, gam))
            # naturality in beta
            for lam in sorted(self.threecells):
                if self.src3(lam) != beta:
                    continue
                beta2 = self.tgt3(lam)
                lhs = self.vcomp3[(ic[(beta2, alpha)],
                                   self.whisk32r[(self.whisk3r[(lam, f2)], self.whisk2l[(g, alpha)])])]
                rhs = self.vcomp3[(self.whisk32l[(self.whisk2l[(g2, alpha)], self.whisk3r[(lam, f)])], m)]
                if lhs != rhs:
                    rep.add("interchanger-naturality-beta", ("interchanger", beta, alpha, lam))
            # compatibility with vertical composition in alpha
            for alpha2 in sorted(self.twocells):
                if self.src2(alpha2) != f2:
                    continue
                if (beta, alpha2) not in ic:
                    continue
                comp = self.vcomp2[(alpha2, alpha)]
                want = self.vcomp3[(self.whisk32l[(self.whisk2l[(g2, alpha2)], m)],
                                    self.whisk32r[(ic[(beta, alpha2)], self.whisk2l[(g, alpha)])])]
                if ic[(beta, comp)] != want:
                    rep.add("interchanger-vcomp-alpha", ("interchanger", beta, alpha2, alpha))
            # compatibility with vertical composition in beta
            for beta2 in sorted(self.twocells):
                if self.src2(beta2) != g2:
                    continue
                if (beta2, alpha) not in ic:
                    continue
                comp = self.vcomp2[(beta2, beta)]
                want = self.vcomp3[(self.whisk32r[(ic[(beta2, alpha)], self.whisk2r[(beta, f)])],
                                    self.whisk32l[(self.whisk2r[(beta2, f2)], m)])]
                if ic[(comp, alpha)] != want:
                    rep.add("interchanger-vcomp-beta", ("interchanger", beta2, beta, alpha))
            # identity 2-cells give identity interchangers
            if beta == self.id2[g] and m != self.id3[self.whisk2l[(g, alpha)]]:
                rep.add("interchanger-id-beta", ("interchanger", beta, alpha))
            if alpha == self.id2[f] and m != self.id3[self.whisk2r[(beta, f)]]:
                rep.add("interchanger-id-alpha", ("interchanger", beta, alpha))
            # compatibility with 1-cell whiskering on the outside and in the middle
            _, c = self.onecells[g]
            a, _ = self.onecells[f]
            for h in sorted(self.onecells):
                if self.src1(h) == c:
                    if self.whisk3l[(h, m)] != ic[(self.whisk2l[(h, beta)], alpha)]:
                        rep.add("interchanger-whisk-left", ("interchanger", h, beta, alpha))
            for e in sorted(self.onecells):
                if self.tgt1(e) == a:
                    if self.whisk3r[(m, e)] != ic[(beta, self.whisk2r[(alpha, e)])]:
                        rep.add("interchanger-whisk-right", ("interchanger", beta, alpha, e))
            for k in sorted(self.onecells):
                if self.onecells[k][1] != self.src1(g):
                    continue
                if self.onecells[k][0] != self.tgt1(f):
                    continue
                if ic[(self.whisk2r[(beta, k)], alpha)] != ic[(beta, self.whisk2l[(k, alpha)])]:
                    rep.add("interchanger-whisk-middle", ("interchanger", beta, k, alpha))


def terminal_gray_category():
    return GrayCategory(
        objects=frozenset({"*"}),
        onecells={"id*": ("*", "*")},
        twocells={"ID*": ("id*", "id*")},
        threecells={"III*": ("ID*", "ID*")},
        id1={"*": "id*"}, id2={"id*": "ID*"}, id3={"ID*": "III*"},
        comp1={("id*", "id*"): "id*"},
        vcomp2={("ID*", "ID*"): "ID*"},
        vcomp3={("III*", "III*"): "III*"},
        whisk2l={("id*", "ID*"): "ID*"}, whisk2r={("ID*", "id*"): "ID*"},
        whisk3l={("id*", "III*"): "III*"}, whisk3r={("III*", "id*"): "III*"},
        whisk32l={("ID*", "III*"): "III*"}, whisk32r={("III*", "ID*"): "III*"},
        interchanger={("ID*", "ID*"): "III*"})


def empty_gray_category():
    return GrayCategory(frozenset(), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {},
                        {}, {}, {}, {}, {})


# ---------------------------------------------------------------------------
# functors


@dataclass
class CatFunctor:
    obj_map: dict
    mor_map: dict

    def validate(self, dom: Category, cod: Category):
        rep = ValidationReport()
        for x in sorted(dom.objects):
            if self.obj_map.get(x) not in cod.objects:
                rep.add("functor-object-map", ("obj_map", x))
        for m in sorted(dom.morphisms):
            fm = self.mor_map.get(m)
            if fm not in cod.morphisms:
                rep.add("functor-mor-map", ("mor_map", m))
                continue
            s, t = dom.morphisms[m]
            if cod.morphisms[fm] != (self.obj_map[s], self.obj_map[t]):
                rep.add("functor-mor-boundary", ("mor_map", m))
        if not rep.ok:
            return rep
        for x in sorted(dom.objects):
            if self.mor_map[dom.identity[x]] != cod.identity[self.obj_map[x]]:
                rep.add("functor-identity", ("mor_map", x))
        for (g, f), h in sorted(dom.comp.items()):
            if self.mor_map[h] != cod.comp[(self.mor_map[g], self.mor_map[f])]:
                rep.add("functor-comp", ("mor_map", g, f))
        return rep


@dataclass
class TwoFunctor:
    """A map of sesquicategories or 2-categories (same data either way)."""

    obj_map: dict
    map1: dict
    map2: dict

    def validate(self, dom: Sesquicategory, cod: Sesquicategory):
        rep = ValidationReport()
        for x in sorted(dom.objects):
            if self.obj_map.get(x) not in cod.objects:
                rep.add("functor-object-map", ("obj_map", x))
        for f in sorted(dom.onecells):
            ff = self.map1.get(f)
            if ff not in cod.onecells:
                rep.add("functor-1cell-map", ("map1", f))
            elif cod.onecells[ff] != tuple(self.obj_map[o] for o in dom.onecells[f]):
                rep.add("functor-1cell-boundary", ("map1", f))
        for a in sorted(dom.twocells):
            fa = self.map2.get(a)
            if fa not in cod.twocells:
                rep.add("functor-2cell-map", ("map2", a))
            elif cod.twocells[fa] != tuple(self.map1[c] for c in dom.twocells[a]):
                rep.add("functor-2cell-boundary", ("map2", a))
        if not rep.ok:
            return rep
        for x in sorted(dom.objects):
            if self.map1[dom.id1[x]] != cod.id1[self.obj_map[x]]:
                rep.add("functor-id1", ("map1", x))
        for f in sorted(dom.onecells):
            if self.map2[dom.id2[f]] != cod.id2[self.map1[f]]:
                rep.add("functor-id2", ("map2", f))
        for (g, f), h in sorted(dom.comp1.items()):
            if self.map1[h] != cod.comp1[(self.map1[g], self.map1[f])]:
                rep.add("functor-comp1", ("map1", g, f))
        for (b, a), c in sorted(dom.vcomp.items()):
            if self.map2[c] != cod.vcomp[(self.map2[b], self.map2[a])]:
                rep.add("functor-vcomp", ("map2", b, a))
        for (h, a), b in sorted(dom.lwhisk.items()):
            if self.map2[b] != cod.lwhisk[(self.map1[h], self.map2[a])]:
                rep.add("functor-lwhisk", ("map2", h, a))
        for (a, k), b in sorted(dom.rwhisk.items()):
            if self.map2[b] != cod.rwhisk[(self.map2[a], self.map1[k])]:
                rep.add("functor-rwhisk", ("map2", a, k))
        return rep


@dataclass
class GrayFunctor:
    obj_map: dict
    map1: dict
    map2: dict
    map3: dict

    def apply_obj(self, x):
        return self.obj_map[x]

    def apply1(self, f):
        return self.map1[f]

    def apply2(self, p):
        return self.map2[p]

    def apply3(self, m):
        return self.map3[m]

    def validate(self, dom: GrayCategory, cod: GrayCategory):
        rep = ValidationReport()
        for x in sorted(dom.objects):
            if self.obj_map.get(x) not in cod.objects:
                rep.add("functor-object-map", ("obj_map", x))
        for f in sorted(dom.onecells):
            ff = self.map1.get(f)
            if ff not in cod.onecells:
                rep.add("functor-1cell-map", ("map1", f))
            elif cod.onecells[ff] != tuple(self.obj_map[o] for o in dom.onecells[f]):
                rep.add("functor-1cell-boundary", ("map1", f))
        for p in sorted(dom.twocells):
            fp = self.map2.get(p)
            if fp not in cod.twocells:
                rep.add("functor-2cell-map", ("map2", p))
            elif cod.twocells[fp] != tuple(self.map1[c] for c in dom.twocells[p]):
                rep.add("functor-2cell-boundary", ("map2", p))
        for m in sorted(dom.threecells):
            fm = self.map3.get(m)
            if fm not in cod.threecells:
                rep.add("functor-3cell-map", ("map3", m))
            elif cod.threecells[fm] != tuple(self.map2[c] for c in dom.threecells[m]):
                rep.add("functor-3cell-boundary", ("map3", m))
        if not rep.ok:
            return rep
        for x in sorted(dom.objects):
            if self.map1[dom.id1[x]] != cod.id1[self.obj_map[x]]:
                rep.add("functor-id1", ("map1", x))
        for f in sorted(dom.onecells):
            if self.map2[dom.id2[f]] != cod.id2[self.map1[f]]:
                rep.add("functor-id2", ("map2", f))
        for p in sorted(dom.twocells):
            if self.map3[dom.id3[p]] != cod.id3[self.map2[p]]:
                rep.add("functor-id3", ("map3", p))
        for (g, f), h in sorted(dom.comp1.items()):
            if self.map1[h] != cod.comp1[(self.map1[g], self.map1[f])]:
                rep.add("functor-comp1", ("map1", g, f))
        for (q, p), r in sorted(dom.vcomp2.items()):
            if self.map2[r] != cod.vcomp2[(self.map2[q], self.map2[p])]:
                rep.add("functor-vcomp2", ("map2", q, p))
        for (n, m), c in sorted(dom.vcomp3.items()):
            if self.map3[c] != cod.vcomp3[(self.map3[n], self.map3[m])]:
                rep.add("functor-vcomp3", ("map3", n, m))
        for (h, p), qq in sorted(dom.whisk2l.items()):
            if self.map2[qq] != cod.whisk2l[(self.map1[h], self.map2[p])]:
                rep.add("functor-whisk2l", ("map2", h, p))
        for (p, h), qq in sorted(dom.whisk2r.items()):
            if self.map2[qq] != cod.whisk2r[(self.map2[p], self.map1[h])]:
                rep.add("functor-whisk2r", ("map2", p, h))
        for (h, m), n in sorted(dom.whisk3l.items()):
            if self.map3[n] != cod.whisk3l[(self.map1[h], self.map3[m])]:
                rep.add("functor-whisk3l", ("map3", h, m))
        for (m, h), n in sorted(dom.whisk3r.items()):
            if self.map3[n] != cod.whisk3r[(self.map3[m], self.map1[h])]:
                rep.add("functor-whisk3r", ("map3", m, h))
        for (p, m), n in sorted(dom.whisk32l.items()):
            if self.map3[n] != cod.whisk32l[(self.map2[p], self.map3[m])]:
                rep.add("functor-whisk32l", ("map3", p, m))
        for (m, p), n in sorted(dom.whisk32r.items()):
            if self.map3[n] != cod.whisk32r[(self.map3[m], self.map2[p])]:
                rep.add("functor-whisk32r", ("map3", m, p))
        for (beta, alpha), m in sorted(dom.interchanger.items()):
            if self.map3[m] != cod.interchanger[(self.map2[beta], self.map2[alpha])]:
                rep.add("functor-interchanger", ("map3", beta, alpha))
        return rep

    def hom_two_functor(self, dom: GrayCategory, x, y):
        """The induced 2-functor hom(x,y) -> hom(Fx,Fy)."""
        h = dom.hom(x, y)
        return TwoFunctor(
            obj_map={f: self.map1[f] for f in h.objects},
            map1={p: self.map2[p] for p in h.onecells},
            map2={m: self.map3[m] for m in h.twocells})


def identity_gray_functor(g: GrayCategory):
    return GrayFunctor({x: x for x in g.objects},
                       {f: f for f in g.onecells},
                       {p: p for p in g.twocells},
                       {m: m for m in g.threecells})


def compose_gray_functors(g2: GrayFunctor, g1: GrayFunctor):
    """g2 after g1."""
    return GrayFunctor({x: g2.obj_map[y] for x, y in g1.obj_map.items()},
                       {f: g2.map1[y] for f, y in g1.map1.items()},
                       {p: g2.map2[y] for p, y in g1.map2.items()},
                       {m: g2.map3[y] for m, y in g1.map3.items()})


def unique_functor_to_terminal(g: GrayCategory):
    t = terminal_gray_category()
    return GrayFunctor({x: "*" for x in g.objects},
                       {f: "id*" for f in g.onecells},
                       {p: "ID*" for p in g.twocells},
                       {m: "III*" for m in g.threecells}), t


# ---------------------------------------------------------------------------
# products


def _pair(a, b):
    return f"{a}&{b}"


def product_gray(g1: GrayCategory, g2: GrayCategory):
    """The finite product Gray-category g1 x g2 with componentwise tables."""
    objects = frozenset(_pair(a, b) for a in g1.objects for b in g2.objects)
    one, two, three = {}, {}, {}
    for f, (s, t) in g1.onecells.items():
        for f2, (s2, t2) in g2.onecells.items():
            one[_pair(f, f2)] = (_pair(s, s2), _pair(t, t2))
    for p, (s, t) in g1.twocells.items():
        for p2, (s2, t2) in g2.twocells.items():
            two[_pair(p, p2)] = (_pair(s, s2), _pair(t, t2))
    for m, (s, t) in g1.threecells.items():
        for m2, (s2, t2) in g2.threecells.items():
            three[_pair(m, m2)] = (_pair(s, s2), _pair(t, t2))

    def tab1(t1, t2):
        out = {}
        for k1, v1 in t1.items():
            for k2, v2 in t2.items():
                out[(_pair(k1[0], k2[0]), _pair(k1[1], k2[1]))] = _pair(v1, v2)
        return out

    return GrayCategory(
        objects=objects, onecells=one, twocells=two, threecells=three,
        id1={_pair(a, b): _pair(g1.id1[a], g2.id1[b]) for a in g1.objects for b in g2.objects},
        id2={_pair(f, f2): _pair(g1.id2[f], g2.id2[f2]) for f in g1.onecells for f2 in g2.onecells},
        id3={_pair(p, p2): _pair(g1.id3[p], g2.id3[p2]) for p in g1.twocells for p2 in g2.twocells},
        comp1=tab1(g1.comp1, g2.comp1),
        vcomp2=tab1(g1.vcomp2, g2.vcomp2),
        vcomp3=tab1(g1.vcomp3, g2.vcomp3),
        whisk2l=tab1(g1.whisk2l, g2.whisk2l),
        whisk2r=tab1(g1.whisk2r, g2.whisk2r),
        whisk3l=tab1(g1.whisk3l, g2.whisk3l),
        whisk3r=tab1(g1.whisk3r, g2.whisk3r),
        whisk32l=tab1(g1.whisk32l, g2.whisk32l),
        whisk32r=tab1(g1.whisk32r, g2.whisk32r),
        interchanger=tab1(g1.interchanger, g2.interchanger))


def pair_gray_functors(f1: GrayFunctor, f2: GrayFunctor):
    """<f1, f2> into the product of the codomains; f1, f2 share a domain."""
    return GrayFunctor(
        {x: _pair(f1.obj_map[x], f2.obj_map[x]) for x in f1.obj_map},
        {f: _pair(f1.map1[f], f2.map1[f]) for f in f1.map1},
        {p: _pair(f1.map2[p], f2.map2[p]) for p in f1.map2},
        {m: _pair(f1.map3[m], f2.map3[m]) for m in f1.map3})


# ---------------------------------------------------------------------------
# mutation testing support


def _table_mutations(name, table, pool):
    for key in sorted(table):
        for alt in sorted(pool):
            if alt != table[key]:
                yield name, key, alt


def mutations_of_sesquicategory(s: Sesquicategory):
    """Yield (description, mutated copy) for every single-entry table flip."""
    import copy
    specs = [("id1", s.id1, s.onecells), ("id2", s.id2, s.twocells),
             ("comp1", s.comp1, s.onecells), ("vcomp", s.vcomp, s.twocells),
             ("lwhisk", s.lwhisk, s.twocells), ("rwhisk", s.rwhisk, s.twocells),
             ("twocells", s.twocells,
              {(a, b) for a in s.onecells for b in s.onecells})]
    for name, table, pool in specs:
        for tname, key, alt in _table_mutations(name, table, pool):
            mut = copy.deepcopy(s)
            getattr(mut, tname)[key] = alt
            yield f"{tname}[{key}] -> {alt}", mut


def mutations_of_gray_category(g: GrayCategory):
    import copy
    specs = [("id1", g.id1, g.onecells), ("id2", g.id2, g.twocells),
             ("id3", g.id3, g.threecells),
             ("comp1", g.comp1, g.onecells), ("vcomp2", g.vcomp2, g.twocells),
             ("vcomp3", g.vcomp3, g.threecells),
             ("whisk2l", g.whisk2l, g.twocells), ("whisk2r", g.whisk2r, g.twocells),
             ("whisk3l", g.whisk3l, g.threecells), ("whisk3r", g.whisk3r, g.threecells),
             ("whisk32l", g.whisk32l, g.threecells), ("whisk32r", g.whisk32r, g.threecells),
             ("interchanger", g.interchanger, g.threecells)]
    for name, table, pool in specs:
        for tname, key, alt in _table_mutations(name, table, pool):
            mut = copy.deepcopy(g)
            mut._hom_cache = {}
            getattr(mut, tname)[key] = alt
            yield f"{tname}[{key}] -> {alt}", mut


def mutations_of_category(c: Category):
    import copy
    specs = [("identity", c.identity, c.morphisms), ("comp", c.comp, c.morphisms)]
    for name, table, pool in specs:
        for tname, key, alt in _table_mutations(name, table, pool):
            mut = copy.deepcopy(c)
            getattr(mut, tname)[key] = alt
            yield f"{tname}[{key}] -> {alt}", mut
