"""Batch command-line front door.

Exit codes: 0 = all asserted properties hold, 1 = a property failed,
2 = inconclusive (budget hit), 3 = input error.  The machine format is flat
``key=value`` lines, deterministic across runs; bounds are always echoed.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import adjunctions, fundamental, model, serialize, simplicial
from .cells import GrayCategory, TwoCategory, compose_gray_functors
from .computads import free_sesquicategory, identity_idempotent, retract_computad
from .equivalences import build_adjoint_biequivalence, check_tetrahedra
from .gray_ops import two_of
from .pathobj import (path_object, path_object_cell_classifiers,
                      path_object_factorization)
from .report import BudgetExceeded, GraycatError, InputError


class Report:
    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.failed = False
        self.inconclusive = False

    def emit(self, key, value):
        self.lines.append((key, value))

    def flag(self, key, status):
        value = {True: "true", False: "false", None: "inconclusive"}[status]
        self.emit(key, value)
        if status is False:
            self.failed = True
        if status is None:
            self.inconclusive = True

    def render(self):
        if self.fmt == "machine":
            return "\n".join(f"{k}={v}" for k, v in self.lines)
        width = max((len(k) for k, _ in self.lines), default=0)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in self.lines)

    @property
    def status(self):
        if self.failed:
            return 1
        if self.inconclusive:
            return 2
        return 0


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return serialize.parse_structure(fh.read())
    except OSError as exc:
        raise InputError(str(exc))


def _save(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize.write_structure(obj))


def _echo_bounds(rep, args):
    for name in ("bound_path", "bound_word", "budget", "maxdim"):
        if hasattr(args, name):
            rep.emit(name.replace("_", "-"), getattr(args, name))


def cmd_validate(args, rep):
    obj = _load(args.input)
    result = obj.validate()
    rep.emit("kind", serialize.read_kind(open(args.input).read()))
    rep.flag("valid", result.ok)
    for v in result.violations[:50]:
        rep.emit("violation", str(v))


def cmd_classify(args, rep):
    fun = _load(args.functor)
    dom = _load(args.dom)
    cod = _load(args.cod)
    if not isinstance(dom, GrayCategory) or not isinstance(cod, GrayCategory):
        raise InputError("classify needs Gray-category domain and codomain")
    bad = fun.validate(dom, cod)
    if not bad.ok:
        raise InputError(f"functor invalid: {bad.violations[0]}")
    verdict = model.classify(fun, dom, cod, with_lifting=not args.no_lifting)
    for name in sorted(verdict.flags):
        flag = verdict.flags[name]
        # a computed false is a successful classification, not a failure
        rep.emit(name, {True: "true", False: "false", None: "inconclusive"}[flag.status])
        if flag.status is None:
            rep.inconclusive = True
        if flag.witness is not None:
            rep.emit(f"{name}-witness", ",".join(str(w) for w in flag.witness))
    weq, fib, tf = (verdict.get("weak_equivalence"), verdict.get("fibration"),
                    verdict.get("trivial_fibration"))
    rep.flag("consistency-tf-eq-weq-and-fib", tf == (weq and fib))
    if not args.no_lifting:
        rep.flag("consistency-fib-eq-lifting",
                 fib == verdict.get("adjoint_biequiv_lifting"))


def cmd_path_object(args, rep):
    b = _load(args.input)
    po = path_object(b)
    prod, pairing, diag = path_object_factorization(b, po)
    pd = compose_gray_functors(pairing, po.d)
    rep.emit("objects", len(po.pb.objects))
    rep.emit("onecells", len(po.pb.onecells))
    rep.emit("twocells", len(po.pb.twocells))
    rep.emit("threecells", len(po.pb.threecells))
    rep.flag("factorizes-diagonal",
             (pd.obj_map, pd.map1, pd.map2, pd.map3)
             == (diag.obj_map, diag.map1, diag.map2, diag.map3))
    rep.flag("d-weak-equivalence",
             model.is_weak_equivalence(po.d, b, po.pb).get("weak_equivalence"))
    rep.flag("pairing-fibration",
             model.is_fibration(pairing, po.pb, prod).get("fibration"))
    failures = path_object_cell_classifiers(b, po)
    rep.flag("cell-classifiers", not failures)
    if args.out:
        _save(args.out, po.pb)


def cmd_nerve(args, rep):
    g = _load(args.input)
    nv = simplicial.nerve(g)
    for n in range(5):
        rep.emit(f"simplices-dim{n}", len(nv.dim(n)))
    rep.flag("valid", nv.validate().ok)
    if args.out:
        _save(args.out, nv)


def cmd_kan_check(args, rep):
    obj = _load(args.input)
    if isinstance(obj, GrayCategory):
        obj = simplicial.nerve(obj)
    try:
        ok, wit = simplicial.kan_check(obj, args.maxdim, args.budget)
    except BudgetExceeded:
        rep.flag("kan", None)
        return
    rep.flag("kan", ok)
    if wit is not None:
        rep.emit("unfillable-horn", f"n={wit.n} r={wit.r}")


def cmd_cofibrant_replace(args, rep):
    a = _load(args.input)
    qa = adjunctions.cofibrant_replace(a, args.bound_word)
    rep.emit("onecell-words", len(qa.onecell_words()))
    rep.emit("twocell-words", len(qa.twocell_words()))
    rep.flag("q-trivial-fibration", adjunctions.check_q_trivial_fibration(qa).ok)
    rep.flag("underlying-sesqui-free",
             adjunctions.check_underlying_sesqui_of_q(a, args.bound_word).ok)


def cmd_comonad_check(args, rep):
    a = _load(args.input)
    result = adjunctions.check_comonad_laws(a, args.bound_word)
    rep.flag("comonad-laws", result.ok)
    for v in result.violations[:20]:
        rep.emit("violation", str(v))


def cmd_pi3(args, rep):
    obj = _load(args.input)
    if isinstance(obj, GrayCategory):
        obj = simplicial.nerve(obj)
    pres = fundamental.pi3_presentation(obj)
    g1, g2, g3, rel = pres.summary()
    rep.emit("generators-1", g1)
    rep.emit("generators-2", g2)
    rep.emit("generators-3", g3)
    rep.emit("relations", rel)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for name in sorted(pres.gens1):
                fh.write(f"gen1 {name}\n")
            for name in sorted(pres.gens2):
                fh.write(f"gen2 {name}\n")
            for name in sorted(pres.gens3):
                fh.write(f"gen3 {name}\n")
            for t in pres.relations:
                fh.write(f"relation {t}\n")


def cmd_counit_check(args, rep):
    g = _load(args.input)
    result = fundamental.counit_spotcheck(g, args.bound_word)
    rep.emit("words-checked", result.words_checked)
    rep.emit("twocells-checked", result.twocells_checked)
    rep.emit("threecells-checked", result.threecells_checked)
    rep.emit("pentagons-checked", result.pentagons_checked)
    rep.flag("counit-spotcheck", result.ok)
    rel = fundamental.relations_hold_under_evaluation(g)
    rep.flag("relations-hold", rel.ok)


def cmd_funny_tensor(args, rep):
    a = _load(args.a)
    b = _load(args.b)
    t = __import__("graycat.computads", fromlist=["funny_tensor"]).funny_tensor(
        a, b, budget=args.budget)
    rep.emit("objects", len(t.objects))
    rep.emit("morphisms", len(t.morphisms))
    rep.flag("valid", t.validate().ok)
    if args.out:
        _save(args.out, t)


def cmd_free_sesqui(args, rep):
    comp = _load(args.input)
    free = free_sesquicategory(comp)
    paths = free.paths(args.bound_path)
    rep.emit("paths", len(paths))
    n2 = sum(len(free.path2s_from(p, args.bound_path)) for p in paths)
    rep.emit("twocell-chains", n2)
    rep.flag("computad-valid", comp.validate().ok)


def cmd_retract_computad(args, rep):
    comp = _load(args.computad)
    if args.idempotent:
        with open(args.idempotent, "r", encoding="utf-8") as fh:
            idem = serialize.parse_free_idempotent(fh.read(), comp)
    else:
        idem = identity_idempotent(comp)
    result, gen_of = retract_computad(idem, args.bound_path)
    rep.emit("vertices", len(result.vertices))
    rep.emit("edges", len(result.edges))
    rep.emit("gens", len(result.gens))
    rep.flag("valid", result.validate().ok)
    if args.out:
        _save(args.out, result)


def cmd_adjoint_biequiv(args, rep):
    g = _load(args.input)
    ab = build_adjoint_biequivalence(g, args.onecell)
    rep.emit("f", ab.f)
    rep.emit("g", ab.g)
    rep.emit("eta", ab.eta.fwd)
    rep.emit("eps", ab.eps.fwd)
    rep.emit("S", ab.s_cell)
    rep.emit("T", ab.t_cell)
    first, second = check_tetrahedra(g, ab)
    rep.flag("tetrahedron-1", first)
    rep.flag("tetrahedron-2", second)


def cmd_two_of(args, rep):
    x = _load(args.input)
    if not isinstance(x, TwoCategory):
        raise InputError("two-of needs a 2-category input")
    g = two_of(x)
    rep.emit("objects", len(g.objects))
    rep.emit("onecells", len(g.onecells))
    rep.flag("valid", g.validate().ok)
    if args.out:
        _save(args.out, g)


def cmd_gn(args, rep):
    dom, cod, inc = simplicial.build_gn(args.n)
    rep.emit("boundary-simplices", sum(len(dom.dim(k)) for k in range(5)))
    rep.emit("simplex-simplices", sum(len(cod.dim(k)) for k in range(5)))
    if args.out_boundary:
        _save(args.out_boundary, dom)
    if args.out_simplex:
        _save(args.out_simplex, cod)
    if args.out_map:
        _save(args.out_map, inc)
    rep.flag("valid", dom.validate().ok and cod.validate().ok
             and inc.validate(dom, cod).ok)


COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "path-object": cmd_path_object,
    "nerve": cmd_nerve,
    "kan-check": cmd_kan_check,
    "cofibrant-replace": cmd_cofibrant_replace,
    "comonad-check": cmd_comonad_check,
    "pi3": cmd_pi3,
    "counit-check": cmd_counit_check,
    "funny-tensor": cmd_funny_tensor,
    "free-sesqui": cmd_free_sesqui,
    "retract-computad": cmd_retract_computad,
    "adjoint-biequiv": cmd_adjoint_biequiv,
    "two-of": cmd_two_of,
    "gn": cmd_gn,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="graycat",
        description="desk-scale computations with finite Gray-categories")
    default_budget = int(os.environ.get("GRAYCAT_BUDGET", "200000"))
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.add_argument("--bound-path", type=int, default=4)
        p.add_argument("--bound-word", type=int, default=3)
        p.add_argument("--budget", type=int, default=default_budget)
        p.add_argument("--maxdim", type=int, default=4)

    p = sub.add_parser("validate");  p.add_argument("input");  common(p)
    p = sub.add_parser("classify")
    p.add_argument("functor")
    p.add_argument("--dom", required=True)
    p.add_argument("--cod", required=True)
    p.add_argument("--no-lifting", action="store_true")
    common(p)
    p = sub.add_parser("path-object")
    p.add_argument("input"); p.add_argument("--out"); common(p)
    p = sub.add_parser("nerve")
    p.add_argument("input"); p.add_argument("--out"); common(p)
    p = sub.add_parser("kan-check"); p.add_argument("input"); common(p)
    p = sub.add_parser("cofibrant-replace"); p.add_argument("input"); common(p)
    p = sub.add_parser("comonad-check"); p.add_argument("input"); common(p)
    p = sub.add_parser("pi3")
    p.add_argument("input"); p.add_argument("--out"); common(p)
    p = sub.add_parser("counit-check"); p.add_argument("input"); common(p)
    p = sub.add_parser("funny-tensor")
    p.add_argument("a"); p.add_argument("b"); p.add_argument("--out"); common(p)
    p = sub.add_parser("free-sesqui"); p.add_argument("input"); common(p)
    p = sub.add_parser("retract-computad")
    p.add_argument("computad")
    p.add_argument("--idempotent")
    p.add_argument("--out")
    common(p)
    p = sub.add_parser("adjoint-biequiv")
    p.add_argument("input"); p.add_argument("--onecell", required=True); common(p)
    p = sub.add_parser("two-of")
    p.add_argument("input"); p.add_argument("--out"); common(p)
    p = sub.add_parser("gn")
    p.add_argument("n", type=int)
    p.add_argument("--out-boundary"); p.add_argument("--out-simplex")
    p.add_argument("--out-map")
    common(p)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.format)
    rep.emit("command", args.command)
    _echo_bounds(rep, args)
    try:
        COMMANDS[args.command](args, rep)
    except BudgetExceeded as exc:
        rep.emit("error", str(exc))
        print(rep.render())
        return 2
    except InputError as exc:
        rep.emit("error", str(exc))
        print(rep.render())
        return 3
    except GraycatError as exc:
        rep.emit("error", str(exc))
        print(rep.render())
        return 1
    print(rep.render())
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
