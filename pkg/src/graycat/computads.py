"""Computads, free sesquicategories, the whisker word problem and the funny
tensor product.

Cells of a free sesquicategory are canonical representatives by construction:
a 1-cell is a path of edges, a 2-cell is a path of whiskered generators
(basic 2-cells), so equality of cells is equality of values and the word
problem is solved by the representation.

Paths store their edges in application order (first edge applied first);
``concat1(p, q)`` is "p after q" to match the right-to-left composition
convention used by the cell tables elsewhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cells import Category, Sesquicategory
from .report import BudgetExceeded, ConsistencyError, InputError, ValidationReport


# ---------------------------------------------------------------------------
# paths and basic cells


@dataclass(frozen=True)
class Path1:
    start: str
    end: str
    edges: tuple

    def __len__(self):
        return len(self.edges)

    def token(self):
        return f"{self.start}>{'.'.join(self.edges)}>{self.end}"

    @property
    def is_empty(self):
        return not self.edges


def empty_path(x):
    return Path1(x, x, ())


def edge_path(computad, e):
    s, t = computad.edges[e]
    return Path1(s, t, (e,))


def concat1(p: Path1, q: Path1) -> Path1:
    """p after q."""
    if q.end != p.start:
        raise InputError(f"paths not composable: {q.token()} then {p.token()}")
    return Path1(q.start, p.end, q.edges + p.edges)


def path_from_edges(computad, edges, start=None):
    if not edges:
        if start is None:
            raise InputError("empty path needs its object")
        return empty_path(start)
    s = computad.edges[edges[0]][0]
    p = Path1(s, s, ())
    for e in edges:
        p = concat1(edge_path(computad, e), p)
    return p


@dataclass(frozen=True)
class Basic2:
    """A whiskered generator: pre is applied first, post last."""

    pre: Path1
    gen: str
    post: Path1

    def token(self):
        return f"({self.post.token()}*{self.gen}*{self.pre.token()})"


@dataclass(frozen=True)
class Path2:
    """A vertical chain of basic 2-cells; the empty chain carries its 1-cell."""

    steps: tuple
    anchor: Path1 = None

    def __len__(self):
        return len(self.steps)

    def token(self):
        if not self.steps:
            return f"[@{self.anchor.token()}]"
        return "[" + ";".join(b.token() for b in self.steps) + "]"


# ---------------------------------------------------------------------------
# computads


@dataclass
class Computad:
    vertices: frozenset
    edges: dict      # id -> (src vertex, tgt vertex)
    gens: dict       # id -> (source Path1, target Path1)

    def validate(self):
        rep = ValidationReport()
        for e, (s, t) in sorted(self.edges.items()):
            if s not in self.vertices or t not in self.vertices:
                rep.add("dangling-vertex", ("edges", e))
        for g, (dp, cp) in sorted(self.gens.items()):
            for p in (dp, cp):
                if p.start not in self.vertices or p.end not in self.vertices:
                    rep.add("dangling-vertex", ("gens", g))
                run = p.start
                for e in p.edges:
                    if e not in self.edges:
                        rep.add("dangling-edge", ("gens", g, e))
                        break
                    if self.edges[e][0] != run:
                        rep.add("path-broken", ("gens", g, e))
                        break
                    run = self.edges[e][1]
                else:
                    if p.edges and run != p.end:
                        rep.add("path-endpoint", ("gens", g))
            if (dp.start, dp.end) != (cp.start, cp.end):
                rep.add("globular", ("gens", g),
                        "source and target paths do not share endpoints")
        return rep


def validate_computad(g: Computad):
    return g.validate()


def basic_src(computad: Computad, b: Basic2) -> Path1:
    dp, _ = computad.gens[b.gen]
    return concat1(b.post, concat1(dp, b.pre))


def basic_tgt(computad: Computad, b: Basic2) -> Path1:
    _, cp = computad.gens[b.gen]
    return concat1(b.post, concat1(cp, b.pre))


def path2_src(computad, p: Path2) -> Path1:
    if not p.steps:
        return p.anchor
    return basic_src(computad, p.steps[0])


def path2_tgt(computad, p: Path2) -> Path1:
    if not p.steps:
        return p.anchor
    return basic_tgt(computad, p.steps[-1])


def identity_path2(p: Path1) -> Path2:
    return Path2((), p)


def vcompose(computad, p: Path2, q: Path2) -> Path2:
    """p after q; strictly associative and unital by representation."""
    if path2_tgt(computad, q) != path2_src(computad, p):
        raise InputError("2-cell paths not vertically composable")
    if not p.steps and not q.steps:
        return q
    return Path2(q.steps + p.steps, None if (q.steps or p.steps) else q.anchor)


def whisker(computad, ell: Path1, p: Path2, r: Path1) -> Path2:
    """ell . p . r with r applied first; elementwise on basic cells."""
    if not p.steps:
        return Path2((), concat1(ell, concat1(p.anchor, r)))
    steps = tuple(Basic2(concat1(b.pre, r), b.gen, concat1(ell, b.post))
                  for b in p.steps)
    return Path2(steps, None)


def decompose_indecomposables(p: Path2):
    """The unique decomposition into basic 2-cells: the underlying list."""
    return list(p.steps)


def totally_indecomposable_factor(b: Basic2):
    """The maximal whisker decomposition (outgoing, generator, incoming)."""
    return b.post, b.gen, b.pre


def pi_measure(p: Path2) -> int:
    """Sum of the whisker lengths over the decomposition."""
    return sum(len(b.pre) + len(b.post) for b in p.steps)


# ---------------------------------------------------------------------------
# the free sesquicategory on a computad


class FreeSesquiCat:
    """H G: paths as 1-cells, chains of basic cells as 2-cells.

    Cell sets are infinite in general; enumeration methods take explicit
    bounds and are exhaustive within them.
    """

    def __init__(self, computad: Computad):
        rep = computad.validate()
        if not rep.ok:
            raise InputError(f"invalid computad: {rep}")
        self.computad = computad

    def objects(self):
        return sorted(self.computad.vertices)

    def paths(self, max_len, start=None, end=None):
        """All paths with at most max_len edges, optionally with fixed ends."""
        out = []
        frontier = [empty_path(x) for x in sorted(self.computad.vertices)
                    if start is None or x == start]
        for p in frontier:
            if end is None or p.end == end:
                out.append(p)
        for _ in range(max_len):
            nxt = []
            for p in frontier:
                for e in sorted(self.computad.edges):
                    if self.computad.edges[e][0] == p.end:
                        q = concat1(edge_path(self.computad, e), p)
                        nxt.append(q)
                        if end is None or q.end == end:
                            out.append(q)
            frontier = nxt
        return out

    def basics_from(self, src: Path1):
        """All basic 2-cells whose source path is src."""
        out = []
        n = len(src.edges)
        for g, (dp, _) in sorted(self.computad.gens.items()):
            k = len(dp.edges)
            for i in range(n - k + 1):
                if src.edges[i:i + k] != dp.edges:
                    continue
                pre_edges = src.edges[:i]
                post_edges = src.edges[i + k:]
                pre = Path1(src.start, dp.start, pre_edges)
                post = Path1(dp.end, src.end, post_edges)
                # empty generator boundaries can sit at any matching object
                if not dp.edges:
                    at = src.start
                    run = [src.start]
                    for e in pre_edges:
                        at = self.computad.edges[e][1]
                        run.append(at)
                    if run[-1] != dp.start:
                        continue
                if pre.edges and self._path_end(pre) != dp.start:
                    continue
                out.append(Basic2(pre, g, post))
        return out

    def _path_end(self, p):
        at = p.start
        for e in p.edges:
            at = self.computad.edges[e][1]
        return at

    def path2s_from(self, src: Path1, max_steps):
        """All 2-cell chains out of src with at most max_steps basic cells."""
        out = [identity_path2(src)]
        frontier = [identity_path2(src)]
        for _ in range(max_steps):
            nxt = []
            for p in frontier:
                base = path2_tgt(self.computad, p)
                for b in self.basics_from(base):
                    q = Path2(p.steps + (b,), None)
                    nxt.append(q)
                    out.append(q)
            frontier = nxt
        return out

    def path2s_between(self, src: Path1, tgt: Path1, max_steps):
        return [p for p in self.path2s_from(src, max_steps)
                if path2_tgt(self.computad, p) == tgt]


def free_sesquicategory(g: Computad) -> FreeSesquiCat:
    return FreeSesquiCat(g)


# ---------------------------------------------------------------------------
# the underlying computad of a sesquicategory


@dataclass
class UnderlyingComputad:
    """V S truncated at a path-length bound, remembering the 2-cell behind
    each generator and the sesquicategory it came from."""

    computad: Computad
    gen_cell: dict           # generator id -> 2-cell of the sesquicategory
    bound: int
    sesqui: Sesquicategory


def eval_path(s: Sesquicategory, p: Path1):
    """Compose a path of 1-cells of s (edges named by 1-cell ids)."""
    out = s.id1[p.start]
    for e in p.edges:
        out = s.comp1[(e, out)]
    return out


def underlying_computad(s: Sesquicategory, bound: int) -> UnderlyingComputad:
    """Vertices = objects, edges = all 1-cells, one 2-generator per 2-cell
    between composites of parallel paths of length <= bound."""
    vertices = frozenset(s.objects)
    edges = {f: st for f, st in s.onecells.items()}
    comp = Computad(vertices, edges, {})
    free = FreeSesquiCat(comp)
    gens, gen_cell = {}, {}
    for x in sorted(s.objects):
        for p in free.paths(bound, start=x):
            for q in free.paths(bound, start=x, end=p.end):
                cp, cq = eval_path(s, p), eval_path(s, q)
                for cell in s.twocells_between(cp, cq):
                    gid = f"<{cell}|{p.token()}|{q.token()}>"
                    gens[gid] = (p, q)
                    gen_cell[gid] = cell
    comp2 = Computad(vertices, edges, gens)
    return UnderlyingComputad(comp2, gen_cell, bound, s)


def eval_basic(u: UnderlyingComputad, b: Basic2):
    """Evaluate a whiskered generator in the original sesquicategory."""
    s = u.sesqui
    cell = u.gen_cell[b.gen]
    out = s.rwhisk[(cell, eval_path(s, b.pre))]
    return s.lwhisk[(eval_path(s, b.post), out)]


def eval_path2(u: UnderlyingComputad, p: Path2):
    s = u.sesqui
    if not p.steps:
        return s.id2[eval_path(s, p.anchor)]
    out = eval_basic(u, p.steps[0])
    for b in p.steps[1:]:
        out = s.vcomp[(eval_basic(u, b), out)]
    return out


# ---------------------------------------------------------------------------
# retracts of free sesquicategories


@dataclass
class FreeIdempotent:
    """An idempotent sesquifunctor e on H G, given on generators.

    vmap : vertex -> vertex; emap : edge -> Path1; gmap : generator -> Path2.
    The fixed cells form the retract, with I the inclusion and R = e.
    """

    computad: Computad
    vmap: dict
    emap: dict
    gmap: dict

    def apply_path(self, p: Path1) -> Path1:
        out = empty_path(self.vmap[p.start])
        for e in p.edges:
            out = concat1(self.emap[e], out)
        return out

    def apply_path2(self, p: Path2) -> Path2:
        if not p.steps:
            return identity_path2(self.apply_path(p.anchor))
        comp = self.computad
        out = None
        for b in p.steps:
            img = whisker(comp, self.apply_path(b.post), self.gmap[b.gen],
                          self.apply_path(b.pre))
            out = img if out is None else vcompose(comp, img, out)
        return out

    def check_idempotent(self):
        rep = ValidationReport()
        for v in sorted(self.computad.vertices):
            if self.vmap[self.vmap[v]] != self.vmap[v]:
                rep.add("idempotent-vertex", (v,))
        for e, (s, t) in sorted(self.computad.edges.items()):
            img = self.emap[e]
            if (img.start, img.end) != (self.vmap[s], self.vmap[t]):
                rep.add("functor-edge-boundary", (e,))
        for g, (dp, cp) in sorted(self.computad.gens.items()):
            img = self.gmap[g]
            if (path2_src(self.computad, img) != self.apply_path(dp)
                    or path2_tgt(self.computad, img) != self.apply_path(cp)):
                rep.add("functor-gen-boundary", (g,))
        if not rep.ok:
            return rep
        for e in sorted(self.computad.edges):
            if self.apply_path(self.emap[e]) != self.emap[e]:
                rep.add("idempotent-edge", (e,))
        for g in sorted(self.computad.gens):
            if self.apply_path2(self.gmap[g]) != self.gmap[g]:
                rep.add("idempotent-gen", (g,))
        return rep


def identity_idempotent(computad: Computad) -> FreeIdempotent:
    return FreeIdempotent(
        computad,
        {v: v for v in computad.vertices},
        {e: edge_path(computad, e) for e in computad.edges},
        {g: Path2((Basic2(empty_path(computad.gens[g][0].start), g,
                          empty_path(computad.gens[g][0].end)),), None)
         for g in computad.gens})


def _factor_fixed_path(p: Path1, fixed_paths, indecomposables):
    """Factor a fixed path into indecomposable fixed paths, first applied first."""
    if not p.edges:
        return []
    for k in range(1, len(p.edges) + 1):
        prefix_edges = p.edges[:k]
        cand = [q for q in indecomposables
                if q.edges == prefix_edges and q.start == p.start]
        if not cand:
            continue
        q = cand[0]
        rest = Path1(q.end, p.end, p.edges[k:])
        tail = _factor_fixed_path(rest, fixed_paths, indecomposables)
        if tail is not None:
            return [q] + tail
    return None


def retract_computad(idem: FreeIdempotent, bound=4):
    """The computad of totally indecomposable cells of the retract, plus the
    isomorphism witness (maps in both directions, checked within the bound).

    The retract is presented through its idempotent on H G, mirroring I and R;
    the generator search strips whiskers while the whisker-length measure
    strictly decreases.
    """
    rep = idem.check_idempotent()
    if not rep.ok:
        raise InputError(f"not an idempotent: {rep}")
    comp = idem.computad
    free = FreeSesquiCat(comp)
    fixed_vertices = sorted(v for v in comp.vertices if idem.vmap[v] == v)
    fixed_paths = [p for p in free.paths(bound)
                   if p.start in fixed_vertices and idem.apply_path(p) == p]
    fixed_set = set(fixed_paths)
    nonempty = [p for p in fixed_paths if p.edges]
    indec_paths = []
    for p in nonempty:
        split = False
        for k in range(1, len(p.edges)):
            a = Path1(p.start, None, p.edges[:k])
            # recompute endpoint of the prefix
            at = p.start
            for e in p.edges[:k]:
                at = comp.edges[e][1]
            a = Path1(p.start, at, p.edges[:k])
            b = Path1(at, p.end, p.edges[k:])
            if a in fixed_set and b in fixed_set:
                split = True
                break
        if not split:
            indec_paths.append(p)

    fixed_2 = []
    for p in fixed_paths:
        for c in free.path2s_from(p, bound):
            if c.steps and idem.apply_path2(c) == c:
                fixed_2.append(c)
    fixed_2_set = set(fixed_2)

    def is_decomposable(c):
        for k in range(1, len(c.steps)):
            lo = Path2(c.steps[:k], None)
            hi = Path2(c.steps[k:], None)
            if lo in fixed_2_set and hi in fixed_2_set:
                return True
        return False

    def strip_once(c):
        """One whisker-stripping step inside the retract, if any (pi decreases)."""
        steps = c.steps
        max_r = min(len(b.pre) for b in steps)
        max_l = min(len(b.post) for b in steps)
        for lr in range(max_r + 1):
            for ll in range(max_l + 1):
                if lr == 0 and ll == 0:
                    continue
                r_eds = steps[0].pre.edges[:lr]
                l_eds = steps[0].post.edges[len(steps[0].post.edges) - ll:]
                if any(b.pre.edges[:lr] != r_eds for b in steps):
                    continue
                if any(b.post.edges[len(b.post.edges) - ll:] != l_eds for b in steps):
                    continue
                new_steps = []
                for b in steps:
                    pre = Path1(comp.edges[r_eds[-1]][1] if lr else b.pre.start,
                                b.pre.end, b.pre.edges[lr:])
                    post = Path1(b.post.start,
                                 comp.edges[l_eds[0]][0] if ll else b.post.end,
                                 b.post.edges[:len(b.post.edges) - ll])
                    new_steps.append(Basic2(pre, b.gen, post))
                cand = Path2(tuple(new_steps), None)
                if cand not in fixed_2_set:
                    continue
                r_path = Path1(steps[0].pre.start,
                               new_steps[0].pre.start, r_eds)
                l_path = Path1(new_steps[0].post.end, steps[0].post.end, l_eds)
                if r_path not in fixed_set and r_eds:
                    continue
                if l_path not in fixed_set and l_eds:
                    continue
                return cand
        return None

    totally_indec = []
    for c in fixed_2:
        if is_decomposable(c):
            continue
        if strip_once(c) is None:
            totally_indec.append(c)

    new_edges = {p.token(): (p.start, p.end) for p in indec_paths}

    def refactor(p: Path1) -> Path1:
        parts = _factor_fixed_path(p, fixed_set, indec_paths)
        if parts is None:
            raise ConsistencyError(f"fixed path {p.token()} does not factor")
        return Path1(p.start, p.end, tuple(q.token() for q in parts))

    new_gens = {}
    gen_of = {}
    for c in totally_indec:
        gid = "q" + c.token()
        new_gens[gid] = (refactor(path2_src(comp, c)), refactor(path2_tgt(comp, c)))
        gen_of[gid] = c
    result = Computad(frozenset(fixed_vertices), new_edges, new_gens)
    return result, gen_of


# ---------------------------------------------------------------------------
# funny tensor product


def _normalize_blocks(a: Category, b: Category, blocks):
    """Compose adjacent same-side blocks and drop identities; no reordering."""
    ids_a = set(a.identity.values())
    ids_b = set(b.identity.values())
    out = []
    for side, m in blocks:
        if (side == "A" and m in ids_a) or (side == "B" and m in ids_b):
            continue
        if out and out[-1][0] == side:
            prev = out[-1][1]
            cat = a if side == "A" else b
            comp = cat.comp[(m, prev)]
            out.pop()
            if not ((side == "A" and comp in ids_a) or (side == "B" and comp in ids_b)):
                out.append((side, comp))
        else:
            out.append((side, m))
    return tuple(out)


def funny_tensor(a: Category, b: Category, budget=20000) -> Category:
    """Objects are pairs; morphisms are reduced alternating words in one-sided
    moves, with in-category composition the only relation."""
    objects = frozenset(f"{x}&{y}" for x in a.objects for y in b.objects)

    def word_tgt(start, word):
        xa, xb = start
        for side, m in word:
            if side == "A":
                xa = a.tgt(m)
            else:
                xb = b.tgt(m)
        return (xa, xb)

    def word_id(start, word):
        body = ";".join(f"{s}:{m}" for s, m in word)
        return f"w({start[0]}&{start[1]}|{body})"

    words = {}
    frontier = []
    for x in sorted(a.objects):
        for y in sorted(b.objects):
            key = ((x, y), ())
            words[key] = word_id((x, y), ())
            frontier.append(key)
    while frontier:
        if len(words) > budget:
            raise BudgetExceeded("funny tensor enumeration", budget)
        nxt = []
        for start, word in frontier:
            ta, tb = word_tgt(start, word)
            moves = ([("A", m) for m in sorted(a.morphisms) if a.src(m) == ta]
                     + [("B", m) for m in sorted(b.morphisms) if b.src(m) == tb])
            for mv in moves:
                new = _normalize_blocks(a, b, list(word) + [mv])
                key = (start, new)
                if key not in words:
                    words[key] = word_id(start, new)
                    nxt.append(key)
        frontier = nxt

    morphisms, identity, comp = {}, {}, {}
    for (start, word), mid in words.items():
        xa, xb = word_tgt(start, word)
        morphisms[mid] = (f"{start[0]}&{start[1]}", f"{xa}&{xb}")
        if not word:
            identity[f"{start[0]}&{start[1]}"] = mid
    for (s1, w1), m1 in words.items():
        t1 = word_tgt(s1, w1)
        for (s2, w2), m2 in words.items():
            if s2 != t1:
                continue
            new = _normalize_blocks(a, b, list(w1) + list(w2))
            comp[(m2, m1)] = words[(s1, new)]
    return Category(objects, morphisms, identity, comp)
