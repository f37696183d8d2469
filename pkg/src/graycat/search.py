"""Backtracking enumeration of 2-functors and Gray-functors.

Used for representability counts and for lifting searches.  Identity cells are
propagated eagerly; composite tables are checked level by level so dead
branches are cut before descending a dimension.  An optional node budget turns
exhaustion into a BudgetExceeded error (an inconclusive verdict, distinct from
"none exists").
"""

from __future__ import annotations

from .cells import GrayCategory, GrayFunctor, Sesquicategory, TwoFunctor
from .report import BudgetExceeded


class _Budget:
    def __init__(self, limit, what):
        self.limit = limit
        self.used = 0
        self.what = what

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.what, self.limit)


def _level_assign(cells, boundary_of, image_pool, image_boundary, partial, budget):
    """Yield total assignments extending `partial` for one cell dimension.

    boundary_of(c) must already be expressed in codomain terms (via the maps
    fixed at lower dimensions).
    """
    todo = [c for c in sorted(cells) if c not in partial]
    for c, img in partial.items():
        if image_boundary(img) != boundary_of(c):
            return

    def rec(i, assign):
        budget.tick()
        if i == len(todo):
            yield dict(assign)
            return
        c = todo[i]
        want = boundary_of(c)
        for img in image_pool:
            if image_boundary(img) != want:
                continue
            assign[c] = img
            yield from rec(i + 1, assign)
            del assign[c]

    yield from rec(0, dict(partial))


def enumerate_two_functors(dom: Sesquicategory, cod: Sesquicategory,
                           fixed_obj=None, fixed1=None, fixed2=None,
                           budget=None):
    """Yield every (sesqui/2-)functor dom -> cod, deterministically ordered."""
    bud = _Budget(budget, "two-functor enumeration")
    objs = sorted(dom.objects)
    cod_objs = sorted(cod.objects)

    def rec_obj(i, omap):
        bud.tick()
        if i == len(objs):
            yield dict(omap)
            return
        x = objs[i]
        pool = [fixed_obj[x]] if fixed_obj and x in fixed_obj else cod_objs
        for y in pool:
            omap[x] = y
            yield from rec_obj(i + 1, omap)
            del omap[x]

    for omap in rec_obj(0, {}):
        part1 = {dom.id1[x]: cod.id1[omap[x]] for x in objs}
        if fixed1:
            bad = False
            for k, v in fixed1.items():
                if part1.get(k, v) != v:
                    bad = True
                    break
                part1[k] = v
            if bad:
                continue
        pool1 = sorted(cod.onecells)
        for m1 in _level_assign(dom.onecells, lambda f: tuple(omap[o] for o in dom.onecells[f]),
                                pool1, lambda f: cod.onecells[f], part1, bud):
            if any(m1[h] != cod.comp1[(m1[g], m1[f])] for (g, f), h in dom.comp1.items()):
                continue
            part2 = {dom.id2[f]: cod.id2[m1[f]] for f in dom.onecells}
            if fixed2:
                bad = False
                for k, v in fixed2.items():
                    if part2.get(k, v) != v:
                        bad = True
                        break
                    part2[k] = v
                if bad:
                    continue
            pool2 = sorted(cod.twocells)
            for m2 in _level_assign(dom.twocells, lambda a: tuple(m1[c] for c in dom.twocells[a]),
                                    pool2, lambda a: cod.twocells[a], part2, bud):
                if any(m2[c] != cod.vcomp[(m2[b], m2[a])] for (b, a), c in dom.vcomp.items()):
                    continue
                if any(m2[b] != cod.lwhisk[(m1[h], m2[a])] for (h, a), b in dom.lwhisk.items()):
                    continue
                if any(m2[b] != cod.rwhisk[(m2[a], m1[k])] for (a, k), b in dom.rwhisk.items()):
                    continue
                yield TwoFunctor(dict(omap), m1, m2)


def enumerate_gray_functors(dom: GrayCategory, cod: GrayCategory,
                            fixed_obj=None, fixed1=None, fixed2=None, fixed3=None,
                            fiber=None, budget=None):
    """Yield every Gray-functor dom -> cod.

    `fiber = (p, v)` restricts to functors h with p o h = v, where p is a
    Gray-functor out of cod and v one out of dom (used by lifting searches).
    """
    bud = _Budget(budget, "gray-functor enumeration")
    objs = sorted(dom.objects)
    cod_objs = sorted(cod.objects)
    p, v = fiber if fiber else (None, None)

    def obj_ok(x, y):
        return p is None or p.obj_map[y] == v.obj_map[x]

    def c1_ok(f, ff):
        return p is None or p.map1[ff] == v.map1[f]

    def c2_ok(q, qq):
        return p is None or p.map2[qq] == v.map2[q]

    def c3_ok(m, mm):
        return p is None or p.map3[mm] == v.map3[m]

    def rec_obj(i, omap):
        bud.tick()
        if i == len(objs):
            yield dict(omap)
            return
        x = objs[i]
        pool = [fixed_obj[x]] if fixed_obj and x in fixed_obj else cod_objs
        for y in pool:
            if not obj_ok(x, y):
                continue
            omap[x] = y
            yield from rec_obj(i + 1, omap)
            del omap[x]

    def merge(partial, fixed):
        if not fixed:
            return partial
        for k, val in fixed.items():
            if partial.get(k, val) != val:
                return None
            partial[k] = val
        return partial

    for omap in rec_obj(0, {}):
        part1 = merge({dom.id1[x]: cod.id1[omap[x]] for x in objs}, fixed1)
        if part1 is None:
            continue
        pool1 = sorted(f for f in cod.onecells)
        for m1 in _level_assign(dom.onecells, lambda f: tuple(omap[o] for o in dom.onecells[f]),
                                pool1, lambda f: cod.onecells[f], part1, bud):
            if any(not c1_ok(f, ff) for f, ff in m1.items()):
                continue
            if any(m1[h] != cod.comp1[(m1[g], m1[f])] for (g, f), h in dom.comp1.items()):
                continue
            part2 = merge({dom.id2[f]: cod.id2[m1[f]] for f in dom.onecells}, fixed2)
            if part2 is None:
                continue
            pool2 = sorted(cod.twocells)
            for m2 in _level_assign(dom.twocells, lambda q: tuple(m1[c] for c in dom.twocells[q]),
                                    pool2, lambda q: cod.twocells[q], part2, bud):
                if any(not c2_ok(q, qq) for q, qq in m2.items()):
                    continue
                if any(m2[c] != cod.vcomp2[(m2[b], m2[a])] for (b, a), c in dom.vcomp2.items()):
                    continue
                if any(m2[b] != cod.whisk2l[(m1[h], m2[a])] for (h, a), b in dom.whisk2l.items()):
                    continue
                if any(m2[b] != cod.whisk2r[(m2[a], m1[k])] for (a, k), b in dom.whisk2r.items()):
                    continue
                part3 = merge({dom.id3[q]: cod.id3[m2[q]] for q in dom.twocells}, fixed3)
                if part3 is None:
                    continue
                pool3 = sorted(cod.threecells)
                for m3 in _level_assign(dom.threecells,
                                        lambda m: tuple(m2[c] for c in dom.threecells[m]),
                                        pool3, lambda m: cod.threecells[m], part3, bud):
                    if any(not c3_ok(m, mm) for m, mm in m3.items()):
                        continue
                    if any(m3[c] != cod.vcomp3[(m3[n], m3[m])] for (n, m), c in dom.vcomp3.items()):
                        continue
                    if any(m3[n] != cod.whisk3l[(m1[h], m3[m])] for (h, m), n in dom.whisk3l.items()):
                        continue
                    if any(m3[n] != cod.whisk3r[(m3[m], m1[k])] for (m, k), n in dom.whisk3r.items()):
                        continue
                    if any(m3[n] != cod.whisk32l[(m2[q], m3[m])] for (q, m), n in dom.whisk32l.items()):
                        continue
                    if any(m3[n] != cod.whisk32r[(m3[m], m2[q])] for (m, q), n in dom.whisk32r.items()):
                        continue
                    if any(m3[n] != cod.interchanger[(m2[b], m2[a])]
                           for (b, a), n in dom.interchanger.items()):
                        continue
                    yield GrayFunctor(dict(omap), m1, m2, m3)


def functor_constraints_from_precompose(i: GrayFunctor, u: GrayFunctor):
    """Partial assignment forcing h o i = u; None if i-images conflict."""
    fixed_obj, fixed1, fixed2, fixed3 = {}, {}, {}, {}
    for x, ix in i.obj_map.items():
        want = u.obj_map[x]
        if fixed_obj.get(ix, want) != want:
            return None
        fixed_obj[ix] = want
    for f, jf in i.map1.items():
        want = u.map1[f]
        if fixed1.get(jf, want) != want:
            return None
        fixed1[jf] = want
    for q, jq in i.map2.items():
        want = u.map2[q]
        if fixed2.get(jq, want) != want:
            return None
        fixed2[jq] = want
    for m, jm in i.map3.items():
        want = u.map3[m]
        if fixed3.get(jm, want) != want:
            return None
        fixed3[jm] = want
    return fixed_obj, fixed1, fixed2, fixed3
