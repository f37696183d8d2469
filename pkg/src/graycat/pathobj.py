"""The path object P B of a Gray-category B.

Objects are biequivalences a : A -> A'; a 1-cell (f, f', phi) carries an
equivalence 2-cell phi : bf ~ f'a; a 2-cell (xi, xi', Xi) carries an
invertible 3-cell Xi : psi.(b xi) => (xi' a).phi; a 3-cell is a compatible
pair (M, M').  The Gray structure is assembled from B's tables; interchangers
are componentwise pairs.  The result is validated exhaustively, so any slip in
the whisker formulas surfaces as a nonempty report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import GrayCategory, GrayFunctor, pair_gray_functors, product_gray
from .equivalences import is_biequivalence, is_equivalence_twocell
from .report import ConsistencyError


def _ob(a):
    return f"P0[{a}]"


@dataclass
class PathObject:
    pb: GrayCategory
    d: GrayFunctor            # B -> PB
    p: GrayFunctor            # PB -> B, source leg
    p_prime: GrayFunctor      # PB -> B, target leg
    obj_payload: dict         # PB object -> biequivalence 1-cell of B
    one_payload: dict         # PB 1-cell -> (f, f', phi)
    two_payload: dict         # PB 2-cell -> (xi, xi', Xi)
    three_payload: dict       # PB 3-cell -> (M, M')


def path_object(b: GrayCategory, validate=True) -> PathObject:
    biequivs = [f for f in sorted(b.onecells) if is_biequivalence(b, f) is not None]
    objects = frozenset(_ob(a) for a in biequivs)
    obj_payload = {_ob(a): a for a in biequivs}

    # 1-cells
    one, one_payload, one_index = {}, {}, {}
    for a in biequivs:
        aa, aa2 = b.onecells[a]
        for bb in biequivs:
            ba, ba2 = b.onecells[bb]
            for f in b.onecells_between(aa, ba):
                for f2 in b.onecells_between(aa2, ba2):
                    src = b.comp1[(bb, f)]
                    tgt = b.comp1[(f2, a)]
                    for phi in b.twocells_between(src, tgt):
                        if is_equivalence_twocell(b, phi) is None:
                            continue
                        cid = f"P1[{a}|{bb}|{f}|{f2}|{phi}]"
                        one[cid] = (_ob(a), _ob(bb))
                        one_payload[cid] = (f, f2, phi)
                        one_index[(a, bb, f, f2, phi)] = cid

    def find1(a, bb, f, f2, phi):
        key = (a, bb, f, f2, phi)
        if key not in one_index:
            raise ConsistencyError(f"path-object 1-cell missing: {key}")
        return one_index[key]

    id1 = {}
    for a in biequivs:
        aa, aa2 = b.onecells[a]
        id1[_ob(a)] = find1(a, a, b.id1[aa], b.id1[aa2], b.id2[a])

    comp1 = {}
    for gid, (src_g, tgt_g) in one.items():
        g, g2, psi = one_payload[gid]
        for fid, (src_f, tgt_f) in one.items():
            if tgt_f != src_g:
                continue
            f, f2, phi = one_payload[fid]
            a = obj_payload[src_f]
            c = obj_payload[tgt_g]
            gf = b.comp1[(g, f)]
            g2f2 = b.comp1[(g2, f2)]
            chi = b.vcomp2[(b.whisk2l[(g2, phi)], b.whisk2r[(psi, f)])]
            comp1[(gid, fid)] = find1(a, c, gf, g2f2, chi)

    # 2-cells
    two, two_payload, two_index = {}, {}, {}
    for fid, (src_o, tgt_o) in one.items():
        f, f2, phi = one_payload[fid]
        a = obj_payload[src_o]
        bb = obj_payload[tgt_o]
        for gid, (src_o2, tgt_o2) in one.items():
            if (src_o2, tgt_o2) != (src_o, tgt_o):
                continue
            g, g2, psi = one_payload[gid]
            for xi in b.twocells_between(f, g):
                for xi2 in b.twocells_between(f2, g2):
                    xsrc = b.vcomp2[(psi, b.whisk2l[(bb, xi)])]
                    xtgt = b.vcomp2[(b.whisk2r[(xi2, a)], phi)]
                    for xcell in b.threecells_between(xsrc, xtgt):
                        if b.inverse3(xcell) is None:
                            continue
                        cid = f"P2[{fid}>{gid}|{xi}|{xi2}|{xcell}]"
                        two[cid] = (fid, gid)
                        two_payload[cid] = (xi, xi2, xcell)
                        two_index[(fid, gid, xi, xi2, xcell)] = cid

    def find2(fid, gid, xi, xi2, xcell):
        key = (fid, gid, xi, xi2, xcell)
        if key not in two_index:
            raise ConsistencyError(f"path-object 2-cell missing: {key}")
        return two_index[key]

    id2 = {}
    for fid in one:
        f, f2, phi = one_payload[fid]
        id2[fid] = find2(fid, fid, b.id2[f], b.id2[f2], b.id3[phi])

    vcomp2 = {}
    for s1, (fid, gid) in two.items():
        xi, xi2, x1 = two_payload[s1]
        f, f2, phi = one_payload[fid]
        a = obj_payload[one[fid][0]]
        bb = obj_payload[one[fid][1]]
        for s2, (gid2, kid) in two.items():
            if gid2 != gid:
                continue
            ze, ze2, z2 = two_payload[s2]
            new1 = b.vcomp2[(ze, xi)]
            new2 = b.vcomp2[(ze2, xi2)]
            step_a = b.whisk32r[(z2, b.whisk2l[(bb, xi)])]
            step_b = b.whisk32l[(b.whisk2r[(ze2, a)], x1)]
            newx = b.vcomp3[(step_b, step_a)]
            vcomp2[(s2, s1)] = find2(fid, kid, new1, new2, newx)

    whisk2l, whisk2r = {}, {}
    for hid, (src_h, tgt_h) in one.items():
        h, h2, chi = one_payload[hid]
        for sid, (fid, gid) in two.items():
            if one[fid][1] != src_h:
                continue
            xi, xi2, xcell = two_payload[sid]
            f, f2, phi = one_payload[fid]
            g, g2, psi = one_payload[gid]
            step1 = b.whisk32l[(b.whisk2l[(h2, psi)], b.interchanger[(chi, xi)])]
            step2 = b.whisk32r[(b.whisk3l[(h2, xcell)], b.whisk2r[(chi, f)])]
            newx = b.vcomp3[(step2, step1)]
            whisk2l[(hid, sid)] = find2(
                comp1[(hid, fid)], comp1[(hid, gid)],
                b.whisk2l[(h, xi)], b.whisk2l[(h2, xi2)], newx)
    for sid, (fid, gid) in two.items():
        xi, xi2, xcell = two_payload[sid]
        f, f2, phi = one_payload[fid]
        g, g2, psi = one_payload[gid]
        for eid, (src_e, tgt_e) in one.items():
            if tgt_e != one[fid][0]:
                continue
            e, e2, delta = one_payload[eid]
            step1 = b.whisk32l[(b.whisk2l[(g2, delta)], b.whisk3r[(xcell, e)])]
            ic = b.interchanger[(xi2, delta)]
            ic_inv = b.inverse3(ic)
            step2 = b.whisk32r[(ic_inv, b.whisk2r[(phi, e)])]
            newx = b.vcomp3[(step2, step1)]
            whisk2r[(sid, eid)] = find2(
                comp1[(fid, eid)], comp1[(gid, eid)],
                b.whisk2r[(xi, e)], b.whisk2r[(xi2, e2)], newx)

    # 3-cells
    three, three_payload, three_index = {}, {}, {}
    for s1, (fid, gid) in two.items():
        xi, xi2, x1 = two_payload[s1]
        f, f2, phi = one_payload[fid]
        g, g2, psi = one_payload[gid]
        a = obj_payload[one[fid][0]]
        bb = obj_payload[one[fid][1]]
        for s2, (fid2, gid2) in two.items():
            if (fid2, gid2) != (fid, gid):
                continue
            ze, ze2, z2 = two_payload[s2]
            for m in b.threecells_between(xi, ze):
                for m2 in b.threecells_between(xi2, ze2):
                    lhs = b.vcomp3[(b.whisk32r[(b.whisk3r[(m2, a)], phi)], x1)]
                    rhs = b.vcomp3[(z2, b.whisk32l[(psi, b.whisk3l[(bb, m)])])]
                    if lhs != rhs:
                        continue
                    cid = f"P3[{s1}>{s2}|{m}|{m2}]"
                    three[cid] = (s1, s2)
                    three_payload[cid] = (m, m2)
                    three_index[(s1, s2, m, m2)] = cid

    def find3(s1, s2, m, m2):
        key = (s1, s2, m, m2)
        if key not in three_index:
            raise ConsistencyError(f"path-object 3-cell missing: {key}")
        return three_index[key]

    id3 = {}
    for sid in two:
        xi, xi2, _ = two_payload[sid]
        id3[sid] = find3(sid, sid, b.id3[xi], b.id3[xi2])

    vcomp3 = {}
    for t1, (s1, s2) in three.items():
        m, m2 = three_payload[t1]
        for t2, (s2b, s3) in three.items():
            if s2b != s2:
                continue
            n, n2 = three_payload[t2]
            vcomp3[(t2, t1)] = find3(s1, s3, b.vcomp3[(n, m)], b.vcomp3[(n2, m2)])

    whisk3l, whisk3r = {}, {}
    for hid in one:
        h, h2, _ = one_payload[hid]
        for tid, (s1, s2) in three.items():
            if one[two[s1][0]][1] != one[hid][0]:
                continue
            m, m2 = three_payload[tid]
            whisk3l[(hid, tid)] = find3(
                whisk2l[(hid, s1)], whisk2l[(hid, s2)],
                b.whisk3l[(h, m)], b.whisk3l[(h2, m2)])
    for tid, (s1, s2) in three.items():
        m, m2 = three_payload[tid]
        for eid in one:
            if one[eid][1] != one[two[s1][0]][0]:
                continue
            e, e2, _ = one_payload[eid]
            whisk3r[(tid, eid)] = find3(
                whisk2r[(s1, eid)], whisk2r[(s2, eid)],
                b.whisk3r[(m, e)], b.whisk3r[(m2, e2)])

    whisk32l, whisk32r = {}, {}
    for sid, (fid, gid) in two.items():
        xi, xi2, _ = two_payload[sid]
        for tid, (s1, s2) in three.items():
            if two[s1][1] == fid:
                m, m2 = three_payload[tid]
                whisk32l[(sid, tid)] = find3(
                    vcomp2[(sid, s1)], vcomp2[(sid, s2)],
                    b.whisk32l[(xi, m)], b.whisk32l[(xi2, m2)])
            if two[s1][0] == gid:
                m, m2 = three_payload[tid]
                whisk32r[(tid, sid)] = find3(
                    vcomp2[(s1, sid)], vcomp2[(s2, sid)],
                    b.whisk32r[(m, xi)], b.whisk32r[(m2, xi2)])

    interchanger = {}
    for beta, (fid_b, gid_b) in two.items():
        up, up2, _ = two_payload[beta]
        for alpha, (fid_a, gid_a) in two.items():
            if one[fid_a][1] != one[fid_b][0]:
                continue
            xi, xi2, _ = two_payload[alpha]
            src = vcomp2[(whisk2r[(beta, gid_a)], whisk2l[(fid_b, alpha)])]
            tgt = vcomp2[(whisk2l[(gid_b, alpha)], whisk2r[(beta, fid_a)])]
            interchanger[(beta, alpha)] = find3(
                src, tgt,
                b.interchanger[(up, xi)], b.interchanger[(up2, xi2)])

    pb = GrayCategory(
        objects=objects, onecells=one, twocells=two, threecells=three,
        id1=id1, id2=id2, id3=id3,
        comp1=comp1, vcomp2=vcomp2, vcomp3=vcomp3,
        whisk2l=whisk2l, whisk2r=whisk2r, whisk3l=whisk3l, whisk3r=whisk3r,
        whisk32l=whisk32l, whisk32r=whisk32r, interchanger=interchanger)
    if validate:
        rep = pb.validate()
        if not rep.ok:
            raise ConsistencyError(f"path object invalid: {rep}")

    d = GrayFunctor(
        obj_map={x: _ob(b.id1[x]) for x in b.objects},
        map1={f: find1(b.id1[b.src1(f)], b.id1[b.tgt1(f)], f, f, b.id2[f])
              for f in b.onecells},
        map2={p: find2(
            _d1(b, one_index, p, "src"), _d1(b, one_index, p, "tgt"),
            p, p, b.id3[p]) for p in b.twocells},
        map3={m: find3(
            _d2(b, one_index, two_index, b.src3(m)),
            _d2(b, one_index, two_index, b.tgt3(m)), m, m)
            for m in b.threecells})
    p_leg = GrayFunctor(
        obj_map={x: b.src1(obj_payload[x]) for x in objects},
        map1={c: one_payload[c][0] for c in one},
        map2={c: two_payload[c][0] for c in two},
        map3={c: three_payload[c][0] for c in three})
    p2_leg = GrayFunctor(
        obj_map={x: b.tgt1(obj_payload[x]) for x in objects},
        map1={c: one_payload[c][1] for c in one},
        map2={c: two_payload[c][1] for c in two},
        map3={c: three_payload[c][1] for c in three})
    return PathObject(pb, d, p_leg, p2_leg, obj_payload, one_payload,
                      two_payload, three_payload)


def _d1(b, one_index, p, which):
    f = b.src2(p) if which == "src" else b.tgt2(p)
    x, y = b.onecells[f]
    return one_index[(b.id1[x], b.id1[y], f, f, b.id2[f])]


def _d2(b, one_index, two_index, p):
    f, g = b.twocells[p]
    return two_index[(_d1(b, one_index, p, "src"), _d1(b, one_index, p, "tgt"),
                      p, p, b.id3[p])]


def path_object_factorization(b: GrayCategory, po: PathObject):
    """The product B x B, the pairing <P, P'> and the diagonal through D."""
    prod = product_gray(b, b)
    pairing = pair_gray_functors(po.p, po.p_prime)
    diag = pair_gray_functors(
        GrayFunctor({x: x for x in b.objects}, {f: f for f in b.onecells},
                    {p: p for p in b.twocells}, {m: m for m in b.threecells}),
        GrayFunctor({x: x for x in b.objects}, {f: f for f in b.onecells},
                    {p: p for p in b.twocells}, {m: m for m in b.threecells}))
    return prod, pairing, diag


def path_object_cell_classifiers(b: GrayCategory, po: PathObject):
    """The three componentwise classifier biconditionals, checked on every
    cell of P B; returns a list of failures (empty when all hold)."""
    from .equivalences import is_biequivalence as bq
    failures = []
    for c, (f, f2, _) in sorted(po.one_payload.items()):
        lhs = bq(po.pb, c) is not None
        rhs = bq(b, f) is not None and bq(b, f2) is not None
        if lhs != rhs:
            failures.append(("1cell-biequivalence", c, lhs, rhs))
    for c, (xi, xi2, _) in sorted(po.two_payload.items()):
        lhs = is_equivalence_twocell(po.pb, c) is not None
        rhs = (is_equivalence_twocell(b, xi) is not None
               and is_equivalence_twocell(b, xi2) is not None)
        if lhs != rhs:
            failures.append(("2cell-equivalence", c, lhs, rhs))
    for c, (m, m2) in sorted(po.three_payload.items()):
        lhs = po.pb.inverse3(c) is not None
        rhs = b.inverse3(m) is not None and b.inverse3(m2) is not None
        if lhs != rhs:
            failures.append(("3cell-invertible", c, lhs, rhs))
    return failures


def path_object_groupoid_check(b: GrayCategory, po: PathObject = None):
    """P B is a Gray-groupoid whenever B is one; the constructive inverses
    from the proof are recovered by the strict-inverse search."""
    from .gray_ops import is_gray_groupoid
    ok, wit = is_gray_groupoid(b)
    if not ok:
        return False, ("input-not-groupoid", wit)
    if po is None:
        po = path_object(b)
    return is_gray_groupoid(po.pb)
