"""Truncated simplicial sets (dimensions 0..4), the nerve of a finite
Gray-groupoid with proof-directed horn fillers, Kan and trivial-fibration
checks, the fundamental-presentation emitter and counit evaluation support.

Dimension 4 is coskeletal: a 4-simplex is a boundary tuple whose induced
3-cell equation holds, so no data is stored above the boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cells import GrayCategory, GrayFunctor
from .report import (BudgetExceeded, ConsistencyError, InputError,
                     UnsupportedOperation, ValidationReport)

TOP = 4


@dataclass
class TruncatedSimplicialSet:
    simplices: dict          # n -> {id: faces tuple (len n+1); () at n=0}
    degeneracies: dict       # (n, id, i) -> id at dimension n+1, for n < TOP
    coskeletal: bool = True

    def dim(self, n):
        return self.simplices.get(n, {})

    def faces(self, n, x):
        return self.simplices[n][x]

    def validate(self):
        rep = ValidationReport()
        for n in range(1, TOP + 1):
            for x, fs in sorted(self.dim(n).items()):
                if len(fs) != n + 1:
                    rep.add("face-count", (n, x))
                    continue
                for f in fs:
                    if f not in self.dim(n - 1):
                        rep.add("dangling-face", (n, x, f))
        if not rep.ok:
            return rep
        for n in range(2, TOP + 1):
            for x, fs in sorted(self.dim(n).items()):
                for j in range(1, n + 1):
                    for i in range(j):
                        if self.faces(n - 1, fs[j])[i] != self.faces(n - 1, fs[i])[j - 1]:
                            rep.add("simplicial-identity-dd", (n, x, i, j))
        for n in range(0, TOP):
            for x in sorted(self.dim(n)):
                for i in range(n + 1):
                    key = (n, x, i)
                    if key not in self.degeneracies:
                        rep.add("degeneracy-missing", key)
                        continue
                    s = self.degeneracies[key]
                    if s not in self.dim(n + 1):
                        rep.add("degeneracy-dangling", key)
                        continue
                    fs = self.faces(n + 1, s)
                    for j in range(n + 2):
                        if j == i or j == i + 1:
                            if fs[j] != x:
                                rep.add("simplicial-identity-ds-id", (n, x, i, j))
                        elif j < i:
                            if fs[j] != self.degeneracies.get((n - 1, self.faces(n, x)[j], i - 1)):
                                rep.add("simplicial-identity-ds-lt", (n, x, i, j))
                        else:
                            if fs[j] != self.degeneracies.get((n - 1, self.faces(n, x)[j - 1], i)):
                                rep.add("simplicial-identity-ds-gt", (n, x, i, j))
        for n in range(0, TOP - 1):
            for x in sorted(self.dim(n)):
                for j in range(n + 1):
                    for i in range(j + 1):
                        lhs = self.degeneracies[(n + 1, self.degeneracies[(n, x, j)], i)]
                        rhs = self.degeneracies[(n + 1, self.degeneracies[(n, x, i)], j + 1)]
                        if lhs != rhs:
                            rep.add("simplicial-identity-ss", (n, x, i, j))
        if self.coskeletal:
            seen = {}
            for x, fs in sorted(self.dim(TOP).items()):
                if fs in seen:
                    rep.add("coskeletal-duplicate", (TOP, x, seen[fs]))
                seen[fs] = x
        return rep

    def nondegenerate(self, n):
        if n == 0:
            return sorted(self.dim(0))
        degen = {v for (m, _, _), v in self.degeneracies.items() if m == n - 1}
        return sorted(x for x in self.dim(n) if x not in degen)


def validate_sset(x: TruncatedSimplicialSet):
    return x.validate()


# ---------------------------------------------------------------------------
# standard builders


def _tname(t):
    return ".".join(str(v) for v in t)


def _simplex_subset(n, keep):
    simpl = {k: {} for k in range(TOP + 1)}
    degen = {}
    for k in range(TOP + 1):
        for t in itertools.combinations_with_replacement(range(n + 1), k + 1):
            if not keep(t):
                continue
            faces = tuple(_tname(t[:i] + t[i + 1:]) for i in range(k + 1)) if k else ()
            simpl[k][_tname(t)] = faces
    for k in range(TOP):
        for t in itertools.combinations_with_replacement(range(n + 1), k + 1):
            if _tname(t) not in simpl[k]:
                continue
            for i in range(k + 1):
                degen[(k, _tname(t), i)] = _tname(t[:i + 1] + t[i:])
    return TruncatedSimplicialSet(simpl, degen)


def delta(n):
    if n > TOP:
        raise InputError(f"dimension {n} beyond truncation {TOP}")
    return _simplex_subset(n, lambda t: True)


def boundary_delta(n):
    if n > TOP:
        raise InputError(f"dimension {n} beyond truncation {TOP}")
    return _simplex_subset(n, lambda t: set(t) != set(range(n + 1)))


def horn_complex(n, r):
    if n > TOP:
        raise InputError(f"dimension {n} beyond truncation {TOP}")
    full = set(range(n + 1))
    return _simplex_subset(n, lambda t: bool(full - set(t) - {r}))


@dataclass
class SimplicialMap:
    maps: dict               # n -> {id -> id}

    def validate(self, dom: TruncatedSimplicialSet, cod: TruncatedSimplicialSet):
        rep = ValidationReport()
        for n in range(TOP + 1):
            for x in sorted(dom.dim(n)):
                y = self.maps.get(n, {}).get(x)
                if y is None or y not in cod.dim(n):
                    rep.add("map-missing", (n, x))
        if not rep.ok:
            return rep
        for n in range(1, TOP + 1):
            for x in sorted(dom.dim(n)):
                got = cod.faces(n, self.maps[n][x])
                want = tuple(self.maps[n - 1][f] for f in dom.faces(n, x))
                if got != want:
                    rep.add("map-faces", (n, x))
        for n in range(TOP):
            for x in sorted(dom.dim(n)):
                for i in range(n + 1):
                    got = cod.degeneracies[(n, self.maps[n][x], i)]
                    want = self.maps[n + 1][dom.degeneracies[(n, x, i)]]
                    if got != want:
                        rep.add("map-degeneracies", (n, x, i))
        return rep


def build_gn(n):
    """The boundary inclusion into the (n+2)-simplex."""
    if n + 2 > TOP:
        raise InputError(f"g_{n} needs dimension {n + 2} > truncation {TOP}")
    dom = boundary_delta(n + 2)
    cod = delta(n + 2)
    return dom, cod, SimplicialMap({k: {x: x for x in dom.dim(k)}
                                    for k in range(TOP + 1)})


# ---------------------------------------------------------------------------
# the nerve of a Gray-groupoid


@dataclass
class NerveSSet(TruncatedSimplicialSet):
    gray: GrayCategory = None
    pay2: dict = field(default_factory=dict)   # id -> (f01, f12, f02, alpha)
    pay3: dict = field(default_factory=dict)   # id -> (faces d0..d3, X)
    pay4: dict = field(default_factory=dict)   # id -> faces d0..d4


def _t2(f01, f12, f02, al):
    return f"2({f01},{f12},{f02},{al})"


def _t3(d0, d1, d2, d3, x):
    return f"3({d0};{d1};{d2};{d3}|{x})"


def _t4(ds):
    return "4(" + ";".join(ds) + ")"


def _pasting_lhs(g: GrayCategory, a023, f23, a012):
    return g.vcomp2[(a023, g.whisk2l[(f23, a012)])]


def _pasting_rhs(g: GrayCategory, a013, a123, f01):
    return g.vcomp2[(a013, g.whisk2r[(a123, f01)])]


def four_simplex_equation(g: GrayCategory, edges, alphas, xs):
    """Both pastings of the 3-cells on the boundary of a would-be 4-simplex;
    the boundary bounds a 4-simplex iff they agree."""
    f01, f12, f23, f34 = edges[(0, 1)], edges[(1, 2)], edges[(2, 3)], edges[(3, 4)]
    a = alphas
    step1 = g.whisk32r[(xs[1], g.whisk2l[(g.comp1[(f34, f23)], a[(0, 1, 2)])])]
    step2 = g.whisk32l[(a[(0, 2, 4)], g.interchanger[(a[(2, 3, 4)], a[(0, 1, 2)])])]
    step3 = g.whisk32r[(xs[3], g.whisk2r[(a[(2, 3, 4)], g.comp1[(f12, f01)])])]
    step4 = g.whisk32l[(a[(0, 1, 4)], g.whisk3r[(g.inverse3(xs[0]), f01)])]
    lhs = g.vcomp3[(step4, g.vcomp3[(step3, g.vcomp3[(step2, step1)])])]
    step_a = g.whisk32l[(a[(0, 3, 4)], g.whisk3l[(f34, xs[4])])]
    step_b = g.whisk32r[(xs[2], g.whisk2r[(g.whisk2l[(f34, a[(1, 2, 3)])], f01)])]
    rhs = g.vcomp3[(step_b, step_a)]
    return lhs, rhs


def _boundary_data(nerve_ss, ds):
    """Edges, 2-cells and 3-cells carried by a compatible 5-tuple of
    3-simplices (ds[r] omits vertex r)."""
    edges, alphas = {}, {}
    for (i, j, k) in itertools.combinations(range(5), 3):
        r = min(set(range(5)) - {i, j, k})
        sub = [v for v in range(5) if v != r]
        pos = {sub.index(i), sub.index(j), sub.index(k)}
        omit = ({0, 1, 2, 3} - pos).pop()
        t2 = nerve_ss.pay3[ds[r]][0][omit]
        f01_, f12_, f02_, al = nerve_ss.pay2[t2]
        alphas[(i, j, k)] = al
        edges[(i, j)] = f01_
        edges[(j, k)] = f12_
        edges[(i, k)] = f02_
    xs = {r: nerve_ss.pay3[ds[r]][1] for r in range(5)}
    return edges, alphas, xs


def nerve(g: GrayCategory) -> NerveSSet:
    """Dimension 0: objects; 1: 1-cells; 2: triangles with a filling 2-cell;
    3: tetrahedra with a filling 3-cell; 4: boundary tuples whose 3-cell
    equation holds (coskeletal)."""
    from .gray_ops import is_gray_groupoid
    ok, wit = is_gray_groupoid(g)
    if not ok:
        raise InputError(f"nerve needs a Gray-groupoid; non-invertible {wit}")
    simpl = {0: {x: () for x in g.objects},
             1: {f: (g.tgt1(f), g.src1(f)) for f in g.onecells}}
    pay2, pay3, pay4 = {}, {}, {}
    d2 = {}
    for f01 in sorted(g.onecells):
        for f12 in sorted(g.onecells):
            if g.src1(f12) != g.tgt1(f01):
                continue
            comp = g.comp1[(f12, f01)]
            for f02 in g.onecells_between(g.src1(f01), g.tgt1(f12)):
                for al in g.twocells_between(comp, f02):
                    tid = _t2(f01, f12, f02, al)
                    d2[tid] = (f12, f02, f01)
                    pay2[tid] = (f01, f12, f02, al)
    simpl[2] = d2
    d3 = {}
    for x3, (f01, f12, f02, a012) in sorted(pay2.items()):
        for x0, (e01, e12, e02, a123) in sorted(pay2.items()):
            if e01 != f12:
                continue
            f23, f13 = e12, e02
            for x1, (h01, h12, h02, a023) in sorted(pay2.items()):
                if h01 != f02 or h12 != f23:
                    continue
                f03 = h02
                for x2, (k01, k12, k02, a013) in sorted(pay2.items()):
                    if k01 != f01 or k12 != f13 or k02 != f03:
                        continue
                    lhs = _pasting_lhs(g, a023, f23, a012)
                    rhs = _pasting_rhs(g, a013, a123, f01)
                    for xc in g.threecells_between(lhs, rhs):
                        tid = _t3(x0, x1, x2, x3, xc)
                        d3[tid] = (x0, x1, x2, x3)
                        pay3[tid] = ((x0, x1, x2, x3), xc)
    simpl[3] = d3
    nv = NerveSSet(simpl, {}, True, g, pay2, pay3, pay4)
    d4 = {}
    for ds in _compatible_tuples(nv, 3, 5):
        edges, alphas, xs = _boundary_data(nv, ds)
        lhs, rhs = four_simplex_equation(g, edges, alphas, xs)
        if lhs == rhs:
            tid = _t4(ds)
            d4[tid] = ds
            pay4[tid] = ds
    simpl[4] = d4
    nv.simplices = simpl
    nv.pay4 = pay4
    _nerve_degeneracies(nv)
    return nv


def _compatible_tuples(ss: TruncatedSimplicialSet, n, count):
    """Tuples (x_0..x_{count-1}) of n-simplices with the face compatibilities
    of a (count-1)-simplex boundary: d_i x_j = d_{j-1} x_i for i < j."""
    out = []

    def rec(i, chosen):
        if i == count:
            out.append(tuple(chosen))
            return
        for x in sorted(ss.dim(n)):
            good = True
            if n >= 1:
                for j, prev in enumerate(chosen):
                    if ss.faces(n, x)[j] != ss.faces(n, prev)[i - 1]:
                        good = False
                        break
            if good:
                rec(i + 1, chosen + [x])

    rec(0, [])
    return out


def _nerve_degeneracies(nv: NerveSSet):
    g = nv.gray
    deg = {}
    for x in nv.dim(0):
        deg[(0, x, 0)] = g.id1[x]
    for f in nv.dim(1):
        x, y = g.onecells[f]
        deg[(1, f, 0)] = _t2(g.id1[x], f, f, g.id2[f])
        deg[(1, f, 1)] = _t2(f, g.id1[y], f, g.id2[f])
    for t in nv.dim(2):
        for i in range(3):
            x0, x1, x2, x3 = _degenerate_faces(nv, 2, t, i, deg)
            lhs = _pasting_lhs(g, nv.pay2[x1][3], nv.pay2[x0][1], nv.pay2[x3][3])
            tid = _t3(x0, x1, x2, x3, g.id3[lhs])
            if tid not in nv.dim(3):
                raise ConsistencyError(f"degenerate 3-simplex missing: {tid}")
            deg[(2, t, i)] = tid
    for t in nv.dim(3):
        for i in range(4):
            faces = _degenerate_faces(nv, 3, t, i, deg)
            tid = _t4(faces)
            if tid not in nv.dim(4):
                raise ConsistencyError(f"degenerate 4-simplex missing: {tid}")
            deg[(3, t, i)] = tid
    nv.degeneracies = deg


def _degenerate_faces(ss, n, x, i, deg):
    """Faces of s_i(x), forced by the simplicial identities."""
    fs = ss.faces(n, x)
    out = []
    for j in range(n + 2):
        if j == i or j == i + 1:
            out.append(x)
        elif j < i:
            out.append(deg[(n - 1, fs[j], i - 1)])
        else:
            out.append(deg[(n - 1, fs[j - 1], i)])
    return tuple(out)


def nerve_map(f: GrayFunctor, ndom: NerveSSet, ncod: NerveSSet) -> SimplicialMap:
    """N F for a Gray-functor between the underlying groupoids."""
    m0 = {x: f.obj_map[x] for x in ndom.dim(0)}
    m1 = {c: f.map1[c] for c in ndom.dim(1)}
    m2 = {t: _t2(f.map1[f01], f.map1[f12], f.map1[f02], f.map2[al])
          for t, (f01, f12, f02, al) in ndom.pay2.items()}
    m3 = {t: _t3(*(m2[d] for d in faces), f.map3[xc])
          for t, (faces, xc) in ndom.pay3.items()}
    m4 = {t: _t4(tuple(m3[d] for d in ds)) for t, ds in ndom.pay4.items()}
    return SimplicialMap({0: m0, 1: m1, 2: m2, 3: m3, 4: m4})


# ---------------------------------------------------------------------------
# horns


@dataclass(frozen=True)
class Horn:
    n: int
    r: int
    faces: tuple             # length n+1; the r-th entry is None

    def given(self):
        return {i: f for i, f in enumerate(self.faces) if i != self.r}


def horn_is_valid(ss: TruncatedSimplicialSet, h: Horn):
    giv = h.given()
    if h.n == 1:
        return all(f in ss.dim(0) for f in giv.values())
    for j in sorted(giv):
        for i in sorted(giv):
            if i >= j:
                continue
            if ss.faces(h.n - 1, giv[j])[i] != ss.faces(h.n - 1, giv[i])[j - 1]:
                return False
    return True


def enumerate_horns(ss: TruncatedSimplicialSet, n, budget=None):
    out = []
    count = 0
    for r in range(n + 1):
        if n == 1:
            for v in sorted(ss.dim(0)):
                faces = [None, None]
                faces[1 - r] = v
                out.append(Horn(1, r, tuple(faces)))
            continue

        def rec(i, chosen):
            nonlocal count
            count += 1
            if budget is not None and count > budget:
                raise BudgetExceeded("horn enumeration", budget)
            if i == n + 1:
                out.append(Horn(n, r, tuple(chosen)))
                return
            if i == r:
                rec(i + 1, chosen + [None])
                return
            for x in sorted(ss.dim(n - 1)):
                good = True
                for j, prev in enumerate(chosen):
                    if prev is None or j >= i:
                        continue
                    if ss.faces(n - 1, x)[j] != ss.faces(n - 1, prev)[i - 1]:
                        good = False
                        break
                if good:
                    rec(i + 1, chosen + [x])

        rec(0, [])
    return out


def search_filler(ss: TruncatedSimplicialSet, h: Horn):
    """Exhaustive filler search for a general truncated simplicial set."""
    for x, fs in sorted(ss.dim(h.n).items()):
        if all(fs[i] == f for i, f in h.given().items()):
            return x
    return None


# ---------------------------------------------------------------------------
# proof-directed horn filling over a nerve map


class _FunctorView:
    """Total cell-level maps reconstructed from a simplicial map of nerves.

    Every 2-cell p : f -> g appears as the filler of the triangle
    (id, f, g, p) and every 3-cell as the filler of its degenerate-boundary
    tetrahedron, so the underlying Gray-functor data is recoverable.
    """

    def __init__(self, ne: NerveSSet, nb: NerveSSet, nf: SimplicialMap):
        self.e, self.b = ne.gray, nb.gray
        e = self.e
        self.m1 = dict(nf.maps[1])
        self.m2 = {}
        for p in e.twocells:
            f, g = e.twocells[p]
            x, _ = e.onecells[f]
            t = _t2(e.id1[x], f, g, p)
            self.m2[p] = nb.pay2[nf.maps[2][t]][3]
        self.m3 = {}
        for m in e.threecells:
            al, be = e.threecells[m]
            f, g = e.twocells[al]
            x, _ = e.onecells[f]
            idx = e.id1[x]
            t123 = _t2(idx, f, f, e.id2[f])
            t023 = _t2(idx, f, g, al)
            t013 = _t2(idx, f, g, be)
            t012 = _t2(idx, idx, idx, e.id2[idx])
            tid = _t3(t123, t023, t013, t012, m)
            self.m3[m] = nb.pay3[nf.maps[3][tid]][1]

    def map1(self, f):
        return self.m1[f]

    def map2(self, p):
        return self.m2[p]

    def map3(self, m):
        return self.m3[m]

    def lift2_target(self, tgt, down):
        for p in sorted(self.e.twocells):
            if self.e.tgt2(p) == tgt and self.m2[p] == down:
                return p
        return None

    def lift3_target(self, tgt, down):
        for m in sorted(self.e.threecells):
            if self.e.tgt3(m) == tgt and self.m3[m] == down:
                return m
        return None


def fill_horn_square(ne: NerveSSet, nb: NerveSSet, nf: SimplicialMap,
                     h: Horn, bottom):
    """Lift a horn of N E against N F over a full bottom simplex of N B,
    using the proof constructions for each (n, r)."""
    n = h.n
    giv = h.given()
    bfaces = nb.faces(n, bottom) if n >= 1 else ()
    for i, f in giv.items():
        if nf.maps[n - 1][f] != bfaces[i]:
            raise InputError("horn does not lie over the bottom simplex")
    if n == 1:
        e = ne.gray
        if h.r == 1:
            u = giv[0]
            for c in sorted(e.onecells):
                if e.tgt1(c) == u and nf.maps[1][c] == bottom:
                    return c
            raise ConsistencyError("no 1-cell lift with given target")
        u = giv[1]
        for c in sorted(e.onecells):
            if e.src1(c) == u and nf.maps[1][c] == bottom:
                return c
        raise ConsistencyError("no 1-cell lift with given source")
    if n == 2:
        return _fill_2horn(ne, nb, nf, h, bottom)
    if n == 3:
        return _fill_3horn(ne, nb, nf, h, bottom)
    if n == 4:
        return _fill_4horn(ne, nb, nf, h, bottom)
    raise UnsupportedOperation(f"horn dimension {n}")


def _require(ne, nf, n, tid, bottom):
    if tid not in ne.dim(n):
        raise ConsistencyError(f"constructed filler {tid} not in nerve")
    if nf.maps[n][tid] != bottom:
        raise ConsistencyError(f"filler {tid} does not lie over {bottom}")
    return tid


def _fill_2horn(ne, nb, nf, h, bottom):
    e, b = ne.gray, nb.gray
    view = _FunctorView(ne, nb, nf)
    _, _, _, beta = nb.pay2[bottom]
    bf12 = nb.pay2[bottom][1]
    if h.r == 1:
        f, g = h.faces[2], h.faces[0]
        gf = e.comp1[(g, f)]
        gam = view.lift2_target(gf, b.inverse2(beta))
        if gam is None:
            raise ConsistencyError("no 2-cell lift (r=1)")
        al = e.inverse2(gam)
        return _require(ne, nf, 2, _t2(f, g, e.src2(gam), al), bottom)
    if h.r == 0:
        g, u = h.faces[2], h.faces[1]
        f = e.inverse1(u)
        k = b.inverse1(bf12)
        gamma_p = b.whisk2l[(k, b.whisk2r[(beta, view.map1(f))])]
        gf = e.comp1[(g, f)]
        gam0 = view.lift2_target(gf, b.inverse2(gamma_p))
        if gam0 is None:
            raise ConsistencyError("no 2-cell lift (r=0)")
        al = e.inverse2(gam0)
        hcell = e.tgt2(al)
        w = e.inverse1(hcell)
        delta = e.whisk2r[(e.whisk2l[(w, al)], u)]
        return _require(ne, nf, 2, _t2(g, w, u, delta), bottom)
    w, u = h.faces[0], h.faces[1]
    winv = e.inverse1(w)
    beta2 = b.whisk2l[(view.map1(winv), beta)]
    gam0 = view.lift2_target(e.comp1[(winv, u)], beta2)
    if gam0 is None:
        raise ConsistencyError("no 2-cell lift (r=2)")
    gcell = e.src2(gam0)
    delta = e.whisk2l[(w, gam0)]
    return _require(ne, nf, 2, _t2(gcell, w, u, delta), bottom)


def _fill_3horn(ne, nb, nf, h, bottom):
    e, b = ne.gray, nb.gray
    view = _FunctorView(ne, nb, nf)
    r = h.r
    down_faces, y = nb.pay3[bottom]
    al = {i: ne.pay2[t] for i, t in h.given().items()}
    if r == 1:
        f01, f12, f02, a012 = al[3]
        _, f23, f13, a123 = al[0]
        _, _, f03, a013 = al[2]
        p_cell = e.whisk2l[(f23, a012)]
        r_cell = e.vcomp2[(a013, e.whisk2r[(a123, f01)])]
        a_prime = e.vcomp2[(r_cell, e.inverse2(p_cell))]
        fp = b.whisk2l[(view.map1(f23), view.map2(a012))]
        z = b.whisk32r[(y, b.inverse2(fp))]
        w = view.lift3_target(a_prime, z)
        if w is None:
            raise ConsistencyError("no 3-cell lift (r=1)")
        a023 = e.src3(w)
        x = e.whisk32r[(w, p_cell)]
        t1 = _t2(f02, f23, f03, a023)
        return _require(ne, nf, 3,
                        _t3(h.faces[0], t1, h.faces[2], h.faces[3], x), bottom)
    if r == 2:
        f01, f12, f02, a012 = al[3]
        _, f23, f13, a123 = al[0]
        _, _, f03, a023 = al[1]
        p_cell = e.whisk2r[(a123, f01)]
        l_cell = e.vcomp2[(a023, e.whisk2l[(f23, a012)])]
        a_prime = e.vcomp2[(l_cell, e.inverse2(p_cell))]
        fp = b.whisk2r[(view.map2(a123), view.map1(f01))]
        z = b.whisk32r[(b.inverse3(y), b.inverse2(fp))]
        w = view.lift3_target(a_prime, z)
        if w is None:
            raise ConsistencyError("no 3-cell lift (r=2)")
        a013 = e.src3(w)
        x = e.whisk32r[(e.inverse3(w), p_cell)]
        t2 = _t2(f01, f13, f03, a013)
        return _require(ne, nf, 3,
                        _t3(h.faces[0], h.faces[1], t2, h.faces[3], x), bottom)
    if r == 0:
        f01, f12, f02, a012 = al[3]
        _, f23, f03, a023 = al[1]
        _, f13, _, a013 = al[2]
        q_prime = e.vcomp2[(e.inverse2(a013),
                            e.vcomp2[(a023, e.whisk2l[(f23, a012)])])]
        a_prime = e.whisk2r[(q_prime, e.inverse1(f01))]
        fa013 = view.map2(a013)
        z0 = b.whisk32l[(b.inverse2(fa013), b.inverse3(y))]
        z = b.whisk3r[(z0, view.map1(e.inverse1(f01)))]
        w = view.lift3_target(a_prime, z)
        if w is None:
            raise ConsistencyError("no 3-cell lift (r=0)")
        a123 = e.src3(w)
        x = e.whisk32l[(a013, e.whisk3r[(e.inverse3(w), f01)])]
        t0 = _t2(f12, f23, f13, a123)
        return _require(ne, nf, 3,
                        _t3(t0, h.faces[1], h.faces[2], h.faces[3], x), bottom)
    # r == 3
    f12, f23, f13, a123 = al[0]
    f02, _, f03, a023 = al[1]
    f01, _, _, a013 = al[2]
    r_cell = e.vcomp2[(a013, e.whisk2r[(a123, f01)])]
    mid = e.vcomp2[(e.inverse2(a023), r_cell)]
    a_prime = e.whisk2l[(e.inverse1(f23), mid)]
    fa023 = view.map2(a023)
    z0 = b.whisk32l[(b.inverse2(fa023), y)]
    z = b.whisk3l[(view.map1(e.inverse1(f23)), z0)]
    w = view.lift3_target(a_prime, z)
    if w is None:
        raise ConsistencyError("no 3-cell lift (r=3)")
    a012 = e.src3(w)
    x = e.whisk32l[(a023, e.whisk3l[(f23, w)])]
    t3 = _t2(f01, f12, f02, a012)
    return _require(ne, nf, 3,
                    _t3(h.faces[0], h.faces[1], h.faces[2], t3, x), bottom)


def _fill_4horn(ne, nb, nf, h, bottom):
    """The missing 3-face is determined: its 2-faces come from the given
    faces and its 3-cell is the unique solution of the boundary equation."""
    e = ne.gray
    r = h.r
    missing_faces = [None] * 4
    for i in sorted(h.given()):
        x = h.given()[i]
        if i < r:
            missing_faces[i] = ne.faces(3, x)[r - 1]
        else:
            missing_faces[i - 1] = ne.faces(3, x)[r]
    cand_boundary = tuple(missing_faces)
    pays = [ne.pay2[t] for t in cand_boundary]
    lhs2 = _pasting_lhs(e, pays[1][3], pays[0][1], pays[3][3])
    rhs2 = _pasting_rhs(e, pays[2][3], pays[0][3], pays[3][0])
    for xc in e.threecells_between(lhs2, rhs2):
        tid = _t3(*cand_boundary, xc)
        if tid not in ne.dim(3):
            continue
        ds_try = list(h.faces)
        ds_try[r] = tid
        edges, alphas, xs = _boundary_data(ne, tuple(ds_try))
        lhs, rhs = four_simplex_equation(e, edges, alphas, xs)
        if lhs != rhs:
            continue
        if nf.maps[3][tid] != nb.pay4[bottom][r]:
            continue
        return _require(ne, nf, 4, _t4(tuple(ds_try)), bottom)
    raise ConsistencyError("no filler for 4-horn")


def horn_filler(nv: NerveSSet, h: Horn):
    """Fill a horn in a nerve via the lifting machinery over the terminal
    groupoid (all objects are fibrant)."""
    from .cells import unique_functor_to_terminal
    to_term, term = unique_functor_to_terminal(nv.gray)
    nterm = nerve(term)
    nf = nerve_map(to_term, nv, nterm)
    bottom = sorted(nterm.dim(h.n))[0]
    return fill_horn_square(nv, nterm, nf, h, bottom)


def kan_check(ss: TruncatedSimplicialSet, maxdim=4, budget=None):
    """Kan condition up to maxdim: (ok, first unfillable horn or None)."""
    use_proof = isinstance(ss, NerveSSet)
    if use_proof:
        from .cells import unique_functor_to_terminal
        to_term, term = unique_functor_to_terminal(ss.gray)
        nterm = nerve(term)
        nf = nerve_map(to_term, ss, nterm)
    for n in range(1, maxdim + 1):
        for h in enumerate_horns(ss, n, budget):
            if use_proof:
                try:
                    fill_horn_square(ss, nterm, nf, h, sorted(nterm.dim(n))[0])
                except ConsistencyError:
                    return False, h
            else:
                if search_filler(ss, h) is None:
                    return False, h
    return True, None


# ---------------------------------------------------------------------------
# trivial fibration and Kan fibration checks for simplicial maps


def simplicial_map_is_trivial_fibration(phi: SimplicialMap,
                                        dom: TruncatedSimplicialSet,
                                        cod: TruncatedSimplicialSet,
                                        maxdim=4, budget=None):
    """Right lifting property against the boundary inclusions up to maxdim."""
    image0 = {phi.maps[0][x] for x in dom.dim(0)}
    for y in sorted(cod.dim(0)):
        if y not in image0:
            return False, (0, y)
    count = 0
    for n in range(1, maxdim + 1):
        for sphere in _compatible_tuples(dom, n - 1, n + 1):
            count += 1
            if budget is not None and count > budget:
                raise BudgetExceeded("sphere enumeration", budget)
            img = tuple(phi.maps[n - 1][x] for x in sphere)
            for y, yfs in sorted(cod.dim(n).items()):
                if yfs != img:
                    continue
                if not any(xfs == sphere and phi.maps[n][x] == y
                           for x, xfs in dom.dim(n).items()):
                    return False, (n, sphere, y)
    return True, None


def horn_square_rlp(nf: SimplicialMap, ndom: NerveSSet, ncod: NerveSSet,
                    maxdim=4, budget=None):
    """Fill every horn square against N F: the Kan-fibration condition."""
    for n in range(1, maxdim + 1):
        for h in enumerate_horns(ndom, n, budget):
            for y, yfs in sorted(ncod.dim(n).items()):
                if any(nf.maps[n - 1][h.faces[i]] != yfs[i] for i in h.given()):
                    continue
                try:
                    fill_horn_square(ndom, ncod, nf, h, y)
                except ConsistencyError as exc:
                    return False, (h, y, str(exc))
    return True, None
