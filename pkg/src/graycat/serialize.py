"""Canonical text serialization shared by the CLI.

One schema per structure kind: a `kind` header, one line per cell or table
entry, a closing `end`.  Section order is fixed, entries are sorted, and the
printer's output is the canonical form, so parse -> print is byte-identical
on canonical files.  Unknown directives are rejected.
"""

from __future__ import annotations

from .cells import Category, CatFunctor, GrayCategory, GrayFunctor, Sesquicategory, TwoCategory, TwoFunctor
from .computads import Basic2, Computad, FreeIdempotent, Path1, Path2, empty_path
from .report import InputError
from .simplicial import SimplicialMap, TruncatedSimplicialSet, TOP

_BAD = set(" \t,[]*;@()|")


def _check_id(tok):
    if not tok or any(c in _BAD for c in tok):
        raise InputError(f"identifier not serializable: {tok!r}")
    return tok


def _lines(kind, sections):
    out = [f"kind {kind}"]
    for name, rows in sections:
        for row in sorted(rows):
            out.append(name + " " + " ".join(str(t) for t in row))
    out.append("end")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# writers


def write_category(c: Category):
    return _lines("category", [
        ("object", [(x,) for x in c.objects]),
        ("morphism", [(m, s, t) for m, (s, t) in c.morphisms.items()]),
        ("id", [(x, m) for x, m in c.identity.items()]),
        ("comp", [(g, f, h) for (g, f), h in c.comp.items()]),
    ])


def _two_sections(t):
    return [
        ("object", [(x,) for x in t.objects]),
        ("onecell", [(f, s, tt) for f, (s, tt) in t.onecells.items()]),
        ("twocell", [(a, s, tt) for a, (s, tt) in t.twocells.items()]),
        ("id1", [(x, f) for x, f in t.id1.items()]),
        ("id2", [(f, a) for f, a in t.id2.items()]),
        ("comp1", [(g, f, h) for (g, f), h in t.comp1.items()]),
        ("vcomp", [(b, a, c) for (b, a), c in t.vcomp.items()]),
        ("lwhisk", [(h, a, b) for (h, a), b in t.lwhisk.items()]),
        ("rwhisk", [(a, h, b) for (a, h), b in t.rwhisk.items()]),
    ]


def write_two_category(t: TwoCategory):
    return _lines("twocategory", _two_sections(t))


def write_sesquicategory(t: Sesquicategory):
    return _lines("sesquicategory", _two_sections(t))


def write_gray_category(g: GrayCategory):
    return _lines("graycategory", [
        ("object", [(x,) for x in g.objects]),
        ("onecell", [(f, s, t) for f, (s, t) in g.onecells.items()]),
        ("twocell", [(p, s, t) for p, (s, t) in g.twocells.items()]),
        ("threecell", [(m, s, t) for m, (s, t) in g.threecells.items()]),
        ("id1", [(x, f) for x, f in g.id1.items()]),
        ("id2", [(f, p) for f, p in g.id2.items()]),
        ("id3", [(p, m) for p, m in g.id3.items()]),
        ("comp1", [(a, b, c) for (a, b), c in g.comp1.items()]),
        ("vcomp2", [(a, b, c) for (a, b), c in g.vcomp2.items()]),
        ("vcomp3", [(a, b, c) for (a, b), c in g.vcomp3.items()]),
        ("whisk2l", [(a, b, c) for (a, b), c in g.whisk2l.items()]),
        ("whisk2r", [(a, b, c) for (a, b), c in g.whisk2r.items()]),
        ("whisk3l", [(a, b, c) for (a, b), c in g.whisk3l.items()]),
        ("whisk3r", [(a, b, c) for (a, b), c in g.whisk3r.items()]),
        ("whisk32l", [(a, b, c) for (a, b), c in g.whisk32l.items()]),
        ("whisk32r", [(a, b, c) for (a, b), c in g.whisk32r.items()]),
        ("interchange", [(a, b, c) for (a, b), c in g.interchanger.items()]),
    ])


def _path_token(p: Path1):
    if not p.edges:
        return f"[@{p.start}]"
    return "[" + ",".join(p.edges) + "]"


def write_computad(c: Computad):
    lines = ["kind computad"]
    for v in sorted(c.vertices):
        lines.append(f"vertex {v}")
    for e, (s, t) in sorted(c.edges.items()):
        lines.append(f"edge {e}: {s} -> {t}")
    for g, (dp, cp) in sorted(c.gens.items()):
        lines.append(f"gen {g}: {_path_token(dp)} => {_path_token(cp)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def write_gray_functor(f: GrayFunctor):
    return _lines("grayfunctor", [
        ("ob", list(f.obj_map.items())),
        ("cell1", list(f.map1.items())),
        ("cell2", list(f.map2.items())),
        ("cell3", list(f.map3.items())),
    ])


def write_two_functor(f: TwoFunctor):
    return _lines("twofunctor", [
        ("ob", list(f.obj_map.items())),
        ("cell1", list(f.map1.items())),
        ("cell2", list(f.map2.items())),
    ])


def write_sset(x: TruncatedSimplicialSet):
    rows = []
    for n in range(TOP + 1):
        for s, fs in x.dim(n).items():
            rows.append((n, s) + fs)
    deg = [(n, s, i, v) for (n, s, i), v in x.degeneracies.items()]
    return _lines("sset", [
        ("coskeletal", [(1 if x.coskeletal else 0,)]),
        ("simplex", rows),
        ("degeneracy", deg),
    ])


def write_sset_map(m: SimplicialMap):
    rows = []
    for n, table in m.maps.items():
        for a, b in table.items():
            rows.append((n, a, b))
    return _lines("ssetmap", [("map", rows)])


def write_free_idempotent(e: FreeIdempotent):
    lines = ["kind freemap"]
    for v, w in sorted(e.vmap.items()):
        lines.append(f"vmap {v} {w}")
    for ed, p in sorted(e.emap.items()):
        lines.append(f"emap {ed} {_path_token(p)}")
    for g, p2 in sorted(e.gmap.items()):
        lines.append(f"gmap {g} {_path2_token(p2)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def _path2_token(p: Path2):
    if not p.steps:
        return "@" + _path_token(p.anchor)
    return ";".join(f"{_path_token(b.pre)}*{b.gen}*{_path_token(b.post)}"
                    for b in p.steps)


# ---------------------------------------------------------------------------
# parsing


def _rows(text, kind):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != f"kind {kind}":
        raise InputError(f"expected 'kind {kind}' header")
    if lines[-1] != "end":
        raise InputError("missing 'end'")
    for ln in lines[1:-1]:
        parts = ln.split()
        yield parts[0], parts[1:], ln


def read_kind(text):
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if not first.startswith("kind "):
        raise InputError("missing 'kind' header")
    return first.split(None, 1)[1]


def parse_category(text):
    objects, morphisms, identity, comp = set(), {}, {}, {}
    for key, args, ln in _rows(text, "category"):
        if key == "object" and len(args) == 1:
            objects.add(args[0])
        elif key == "morphism" and len(args) == 3:
            morphisms[args[0]] = (args[1], args[2])
        elif key == "id" and len(args) == 2:
            identity[args[0]] = args[1]
        elif key == "comp" and len(args) == 3:
            comp[(args[0], args[1])] = args[2]
        else:
            raise InputError(f"bad line: {ln}")
    return Category(frozenset(objects), morphisms, identity, comp)


def _parse_two_body(text, kind):
    data = {"objects": set(), "onecells": {}, "twocells": {}, "id1": {},
            "id2": {}, "comp1": {}, "vcomp": {}, "lwhisk": {}, "rwhisk": {}}
    for key, args, ln in _rows(text, kind):
        if key == "object" and len(args) == 1:
            data["objects"].add(args[0])
        elif key == "onecell" and len(args) == 3:
            data["onecells"][args[0]] = (args[1], args[2])
        elif key == "twocell" and len(args) == 3:
            data["twocells"][args[0]] = (args[1], args[2])
        elif key in ("id1", "id2") and len(args) == 2:
            data[key][args[0]] = args[1]
        elif key in ("comp1", "vcomp", "lwhisk", "rwhisk") and len(args) == 3:
            data[key][(args[0], args[1])] = args[2]
        else:
            raise InputError(f"bad line: {ln}")
    cls = TwoCategory if kind == "twocategory" else Sesquicategory
    return cls(frozenset(data["objects"]), data["onecells"], data["twocells"],
               data["id1"], data["id2"], data["comp1"], data["vcomp"],
               data["lwhisk"], data["rwhisk"])


def parse_two_category(text):
    return _parse_two_body(text, "twocategory")


def parse_sesquicategory(text):
    return _parse_two_body(text, "sesquicategory")


def parse_gray_category(text):
    singles = {"id1", "id2", "id3"}
    doubles = {"comp1", "vcomp2", "vcomp3", "whisk2l", "whisk2r", "whisk3l",
               "whisk3r", "whisk32l", "whisk32r", "interchange"}
    data = {k: {} for k in ({"onecells", "twocells", "threecells"}
                            | singles | doubles)}
    objects = set()
    for key, args, ln in _rows(text, "graycategory"):
        if key == "object" and len(args) == 1:
            objects.add(args[0])
        elif key == "onecell" and len(args) == 3:
            data["onecells"][args[0]] = (args[1], args[2])
        elif key == "twocell" and len(args) == 3:
            data["twocells"][args[0]] = (args[1], args[2])
        elif key == "threecell" and len(args) == 3:
            data["threecells"][args[0]] = (args[1], args[2])
        elif key in singles and len(args) == 2:
            data[key][args[0]] = args[1]
        elif key in doubles and len(args) == 3:
            data[key][(args[0], args[1])] = args[2]
        else:
            raise InputError(f"bad line: {ln}")
    return GrayCategory(
        frozenset(objects), data["onecells"], data["twocells"],
        data["threecells"], data["id1"], data["id2"], data["id3"],
        data["comp1"], data["vcomp2"], data["vcomp3"],
        data["whisk2l"], data["whisk2r"], data["whisk3l"], data["whisk3r"],
        data["whisk32l"], data["whisk32r"], data["interchange"])


def _parse_path(tok, edges):
    if not (tok.startswith("[") and tok.endswith("]")):
        raise InputError(f"bad path literal: {tok}")
    body = tok[1:-1]
    if body.startswith("@"):
        return empty_path(body[1:])
    names = [e for e in body.split(",") if e]
    if not names:
        raise InputError(f"empty path needs an anchor: {tok}")
    for e in names:
        if e not in edges:
            raise InputError(f"dangling edge in path: {e}")
    start = edges[names[0]][0]
    end = edges[names[-1]][1]
    return Path1(start, end, tuple(names))


def parse_computad(text):
    vertices, edges, gens = set(), {}, {}
    pending = []
    for key, args, ln in _rows(text, "computad"):
        if key == "vertex" and len(args) == 1:
            vertices.add(args[0])
        elif key == "edge" and len(args) == 4 and args[2] == "->":
            name = args[0].rstrip(":")
            edges[name] = (args[1], args[3])
        elif key == "gen" and len(args) == 4 and args[2] == "=>":
            pending.append((args[0].rstrip(":"), args[1], args[3]))
        else:
            raise InputError(f"bad line: {ln}")
    for name, dp, cp in pending:
        gens[name] = (_parse_path(dp, edges), _parse_path(cp, edges))
    return Computad(frozenset(vertices), edges, gens)


def parse_gray_functor(text):
    obj_map, m1, m2, m3 = {}, {}, {}, {}
    for key, args, ln in _rows(text, "grayfunctor"):
        table = {"ob": obj_map, "cell1": m1, "cell2": m2, "cell3": m3}.get(key)
        if table is None or len(args) != 2:
            raise InputError(f"bad line: {ln}")
        table[args[0]] = args[1]
    return GrayFunctor(obj_map, m1, m2, m3)


def parse_two_functor(text):
    obj_map, m1, m2 = {}, {}, {}
    for key, args, ln in _rows(text, "twofunctor"):
        table = {"ob": obj_map, "cell1": m1, "cell2": m2}.get(key)
        if table is None or len(args) != 2:
            raise InputError(f"bad line: {ln}")
        table[args[0]] = args[1]
    return TwoFunctor(obj_map, m1, m2)


def parse_sset(text):
    simpl = {n: {} for n in range(TOP + 1)}
    degen = {}
    cosk = True
    for key, args, ln in _rows(text, "sset"):
        if key == "coskeletal" and len(args) == 1:
            cosk = args[0] == "1"
        elif key == "simplex" and len(args) >= 2:
            n = int(args[0])
            if n and len(args) != n + 3:
                raise InputError(f"bad simplex arity: {ln}")
            simpl[n][args[1]] = tuple(args[2:])
        elif key == "degeneracy" and len(args) == 4:
            degen[(int(args[0]), args[1], int(args[2]))] = args[3]
        else:
            raise InputError(f"bad line: {ln}")
    return TruncatedSimplicialSet(simpl, degen, cosk)


def parse_sset_map(text):
    maps = {n: {} for n in range(TOP + 1)}
    for key, args, ln in _rows(text, "ssetmap"):
        if key == "map" and len(args) == 3:
            maps[int(args[0])][args[1]] = args[2]
        else:
            raise InputError(f"bad line: {ln}")
    return SimplicialMap(maps)


def _parse_path2(tok, computad):
    if tok.startswith("@"):
        return Path2((), _parse_path(tok[1:], computad.edges))
    steps = []
    for part in tok.split(";"):
        bits = part.split("*")
        if len(bits) != 3:
            raise InputError(f"bad basic cell: {part}")
        pre = _parse_path(bits[0], computad.edges)
        post = _parse_path(bits[2], computad.edges)
        steps.append(Basic2(pre, bits[1], post))
    return Path2(tuple(steps), None)


def parse_free_idempotent(text, computad: Computad):
    vmap, emap, gmap = {}, {}, {}
    for key, args, ln in _rows(text, "freemap"):
        if key == "vmap" and len(args) == 2:
            vmap[args[0]] = args[1]
        elif key == "emap" and len(args) == 2:
            emap[args[0]] = _parse_path(args[1], computad.edges)
        elif key == "gmap" and len(args) == 2:
            gmap[args[0]] = _parse_path2(args[1], computad)
        else:
            raise InputError(f"bad line: {ln}")
    return FreeIdempotent(computad, vmap, emap, gmap)


WRITERS = {
    Category: ("category", write_category),
    TwoCategory: ("twocategory", write_two_category),
    Sesquicategory: ("sesquicategory", write_sesquicategory),
    GrayCategory: ("graycategory", write_gray_category),
    Computad: ("computad", write_computad),
    GrayFunctor: ("grayfunctor", write_gray_functor),
    TwoFunctor: ("twofunctor", write_two_functor),
}

PARSERS = {
    "category": parse_category,
    "twocategory": parse_two_category,
    "sesquicategory": parse_sesquicategory,
    "graycategory": parse_gray_category,
    "computad": parse_computad,
    "grayfunctor": parse_gray_functor,
    "twofunctor": parse_two_functor,
    "sset": parse_sset,
    "ssetmap": parse_sset_map,
}


def write_structure(obj):
    from .simplicial import NerveSSet
    if isinstance(obj, NerveSSet):
        return write_sset(obj)
    if isinstance(obj, TruncatedSimplicialSet):
        return write_sset(obj)
    if isinstance(obj, SimplicialMap):
        return write_sset_map(obj)
    for cls, (_, writer) in WRITERS.items():
        if type(obj) is cls:
            return writer(obj)
    raise InputError(f"no writer for {type(obj).__name__}")


def parse_structure(text):
    kind = read_kind(text)
    if kind not in PARSERS:
        raise InputError(f"unknown kind: {kind}")
    return PARSERS[kind](text)
