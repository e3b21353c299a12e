"""Command-line front end.

Exit status: 0 on success, 1 on input errors, 2 when the verdict is
"inconclusive" or "unresolved".
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Callable, Sequence

from . import __version__
from .apolarity import DualForm, annihilator, ann_hilbert_row, tensor_form
from .border import (
    EnumerationConfig,
    Report,
    enumerate_monomial_apolar_ideals,
    ideal_strings,
    monomial_border_rank,
    plateau_identifiability,
    slip_ext_filter,
    tensor_wildness,
    wild_tensor_certificate,
)
from .groebner import buchberger, parse_order, saturate_irrelevant
from .homological import ext1_degree0_dim, hom_degree0_dim
from .parse import infer_ring, parse_ideal, read_tensor
from .ring import ONE, GradedRing, Ideal, Polynomial
from . import vsp

INCONCLUSIVE = ("inconclusive", "unresolved")


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument helpers

def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        a, b = int(lo), int(hi)
    except ValueError:
        raise InputError(f"range must look like a..b, got {text!r}") from None
    if a < 0 or b < a:
        raise InputError(f"empty or negative range {text!r}")
    return a, b


def parse_degree(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise InputError(f"bad multidegree {text!r}") from None


def _ring(args, text: str = "", dual: bool = False) -> GradedRing:
    if args.ring:
        return GradedRing.parse(args.ring)
    return infer_ring(text, dual=dual)


def _form(args, text: str) -> DualForm:
    ring = _ring(args, text, dual=True)
    return DualForm.parse(text, ring)


def _ideal(args, text: str) -> Ideal:
    if text is None:
        raise InputError("--ideal is required")
    ring = _ring(args, text)
    return parse_ideal(text, ring)


def _mono(ring: GradedRing, m) -> str:
    return Polynomial._raw(ring, {tuple(m): ONE}).format()


def _order(args, ring):
    return parse_order(args.order, ring) if getattr(args, "order", None) else None


# ---------------------------------------------------------------------------
# commands: each returns a Report

def cmd_ring(args) -> Report:
    ring = GradedRing.parse(args.descriptor)
    rep = Report("ring", {"ring": args.descriptor}, "ok")
    rep.add("variables", list(ring.names))
    rep.add("dual variables", list(ring.dual_names))
    rep.add("block sizes", list(ring.block_sizes))
    rep.add("grading", [list(g) for g in ring.grading])
    return rep


def cmd_ann(args) -> Report:
    F = _form(args, args.form)
    ann = annihilator(F)
    rep = Report("ann", {"form": F.format()}, "ok")
    rep.add("generators", ideal_strings(ann))
    if F.ring.single_block:
        rep.add("HF(S/Ann)", ann_hilbert_row(F))
    return rep


def cmd_hf(args) -> Report:
    if args.form:
        F = _form(args, args.form)
        I = annihilator(F, certify=False)
    else:
        I = _ideal(args, args.ideal)
    gb = buchberger(I)
    rep = Report("hf", {"ideal": ideal_strings(I)}, "ok")
    if args.degree:
        v = parse_degree(args.degree)
        rep.add(f"HF{v}", gb.hilbert_function(v))
    else:
        if not I.ring.single_block:
            raise InputError("use --degree for multigraded rings")
        lo, hi = parse_range(args.range)
        rep.input["range"] = [lo, hi]
        rep.add("values", [gb.hilbert_function((k,)) for k in range(lo, hi + 1)])
    return rep


def cmd_gb(args) -> Report:
    I = _ideal(args, args.ideal)
    gb = buchberger(I, _order(args, I.ring))
    rep = Report("gb", {"ideal": ideal_strings(I), "order": args.order or "grevlex"}, "ok")
    rep.add("basis", [str(g) for g in gb.elements])
    rep.add("leading monomials", [_mono(I.ring, m) for m in gb.lts])
    return rep


def cmd_sat(args) -> Report:
    I = _ideal(args, args.ideal)
    K = saturate_irrelevant(I)
    rep = Report("sat", {"ideal": ideal_strings(I)}, "ok")
    rep.add("saturation", ideal_strings(K))
    return rep


def cmd_hom0(args) -> Report:
    I = _ideal(args, args.ideal)
    rep = Report("hom0", {"ideal": ideal_strings(I)}, "ok")
    rep.add("dim Hom(I, S/I)_0", hom_degree0_dim(I))
    return rep


def cmd_ext1(args) -> Report:
    I = _ideal(args, args.ideal)
    J = parse_ideal(args.J, I.ring)
    rep = Report("ext1", {"J": ideal_strings(J), "I": ideal_strings(I)}, "ok")
    rep.add("dim Ext^1(J/I, S/J)_0", ext1_degree0_dim(J, I, method=args.method))
    return rep


def cmd_enumerate(args) -> Report:
    t0 = time.perf_counter()
    F = None
    if args.form:
        F = _form(args, args.form)
        ring = F.ring
    else:
        ring = GradedRing.parse(args.ring) if args.ring else infer_ring(args.ideal or "", dual=False)
    if args.ideal:
        base = parse_ideal(args.ideal, ring)
    elif F is not None:
        ann = annihilator(F)
        top = args.base_degree
        base = Ideal(ring, [g for g in ann.gens if g.degree()[0] <= top]) if top is not None else Ideal(ring, [])
    else:
        base = Ideal(ring, [])
    cap = args.cap
    if args.legacy_cap:
        cap = args.r
    cfg = EnumerationConfig(base, args.r, cap=cap, form=F, branch_limit=args.branch_limit)
    res = enumerate_monomial_apolar_ideals(cfg)
    rep = Report("enumerate", {"base": ideal_strings(base), "r": args.r, "cap": res.cap}, "ok")
    if F is not None:
        rep.input["form"] = F.format()
    rep.add("count", len(res.ideals))
    rep.add("added monomials", [[_mono(ring, m) for m in a] for a in res.added])
    if args.filter:
        kept, _, dims = slip_ext_filter(res.ideals)
        rep.add("kept by Ext^1 filter", [ideal_strings(I) for I in kept])
        rep.add("kept count", len(kept))
    rep.timings["total"] = round(time.perf_counter() - t0, 4)
    return rep


def cmd_monomial_br(args) -> Report:
    F = _form(args, args.form)
    _, rep = monomial_border_rank(F)
    return rep


def cmd_wild3(args) -> Report:
    if args.tensor:
        shape, entries = read_tensor(args.tensor)
        F = tensor_form(shape, entries)
    else:
        F = None
    if args.certificate:
        return wild_tensor_certificate(seed=args.seed)
    if F is None:
        raise InputError("--tensor is required")
    _, rep = tensor_wildness(F, args.m)
    return rep


def cmd_identifiable(args) -> Report:
    F = _form(args, args.form)
    return plateau_identifiability(F, args.r)


def cmd_vspbar(args) -> Report:
    kind = args.kind
    if kind == "binary":
        _, _, rep = vsp.sylvester_binary(_form(args, _need(args.form, "form")))
        return rep
    if kind == "cubic":
        return vsp.ternary_cubic_vspbar(_form(args, _need(args.form, "form")), seed=args.seed)
    if kind == "cw":
        return vsp.cw_cubic_vspbar(_need(args.cw, "--cw"), _need(args.n, "--n"))
    if kind == "ci":
        F = _form(args, _need(args.form, "form"))
        J = parse_ideal(args.ideal, F.ring) if args.ideal else vsp.monomial_ci(F)
        return vsp.ci_vspbar(F, J)
    if kind == "monomial":
        a, b, c = sorted(parse_degree(_need(args.abc, "--abc")))
        return vsp.monomial_vps_report(a, b, c)
    if kind == "omega":
        a, e, r = parse_degree(_need(args.abc, "--abc"))
        seeds = tuple(args.seed + k for k in range(3))
        _, rep = vsp.generic_omega_rank(a, e, r, seeds=seeds)
        return rep
    if kind == "schubert":
        return vsp.schubert_certificates()
    if kind == "reducible":
        return vsp.reducible_certificates()
    if kind == "nondegenerate":
        return vsp.nondegenerate_no_linear_factor(_form(args, _need(args.form, "form")),
                                                  _need(args.n, "--n"), seed=args.seed)
    raise InputError(f"unknown vspbar kind {kind!r}")


def _need(value, name):
    if value is None:
        raise InputError(f"{name} is required")
    return value


def cmd_corpus(args) -> Report:
    from .corpus import replay
    return replay(update=args.update, workers=_threads())


def _threads() -> int:
    raw = os.environ.get("BORDERLINE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"BORDERLINE_THREADS must be an integer, got {raw!r}") from None


COMMANDS: dict[str, Callable] = {
    "ring": cmd_ring,
    "ann": cmd_ann,
    "hf": cmd_hf,
    "gb": cmd_gb,
    "sat": cmd_sat,
    "hom0": cmd_hom0,
    "ext1": cmd_ext1,
    "enumerate": cmd_enumerate,
    "monomial-br": cmd_monomial_br,
    "wild3": cmd_wild3,
    "identifiable": cmd_identifiable,
    "vspbar": cmd_vspbar,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="P2, P1xP1, blocks=[3,3,3] (inferred from the input if omitted)")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = argparse.ArgumentParser(prog="borderline", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"borderline {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ring", parents=[common], help="describe a ring")
    s.add_argument("descriptor")

    s = sub.add_parser("ann", parents=[common], help="annihilator of a form")
    s.add_argument("form")

    s = sub.add_parser("hf", parents=[common], help="Hilbert function of S/I")
    s.add_argument("--ideal")
    s.add_argument("--form", help="use S/Ann(form)")
    s.add_argument("--range", default="0..6")
    s.add_argument("--degree", help="a single multidegree, e.g. 1,1,0")

    for name, hlp in (("gb", "reduced Groebner basis"), ("sat", "saturation by the irrelevant ideal"),
                      ("hom0", "dim Hom(I, S/I)_0")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("--ideal", required=True)
        s.add_argument("--order", help="grevlex, lex:y2<y1<y0, weight:[...] ...")

    s = sub.add_parser("ext1", parents=[common], help="dim Ext^1(J/I, S/J)_0")
    s.add_argument("--ideal", required=True, help="the smaller ideal I")
    s.add_argument("--J", required=True, help="the larger ideal J")
    s.add_argument("--method", default="auto", choices=("auto", "local", "resolution"))

    s = sub.add_parser("enumerate", parents=[common], help="monomial apolar ideals of length r")
    s.add_argument("--ideal", help="base ideal J0")
    s.add_argument("--form", help="only ideals annihilating this form")
    s.add_argument("--base-degree", type=int, help="use Ann(form) generators up to this degree as J0")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--cap", type=int, help="degree cap D")
    s.add_argument("--legacy-cap", action="store_true", help="use D = r")
    s.add_argument("--branch-limit", type=int, default=100_000)
    s.add_argument("--filter", action="store_true", help="apply the Ext^1 filter")

    s = sub.add_parser("monomial-br", parents=[common], help="border rank of a monomial")
    s.add_argument("form")

    s = sub.add_parser("wild3", parents=[common], help="wildness of a concise 3-tensor")
    s.add_argument("--tensor", help="@file.json with shape and entries")
    s.add_argument("--m", type=int)
    s.add_argument("--certificate", action="store_true",
                   help="replay the P^3 certificate of the built-in wild tensor")

    s = sub.add_parser("identifiable", parents=[common], help="plateau identifiability test")
    s.add_argument("form")
    s.add_argument("--r", type=int, required=True)

    s = sub.add_parser("vspbar", parents=[common], help="VSP-bar classification reports")
    s.add_argument("kind", choices=("binary", "cubic", "cw", "ci", "monomial", "omega",
                                    "schubert", "reducible", "nondegenerate"))
    s.add_argument("form", nargs="?")
    s.add_argument("--ideal", help="complete intersection J for kind=ci")
    s.add_argument("--cw", choices=("A", "B", "C"))
    s.add_argument("--n", type=int)
    s.add_argument("--abc", help="a,b,c for kind=monomial, a,e,r for kind=omega")

    s = sub.add_parser("corpus", parents=[common], help="replay the golden corpus")
    s.add_argument("--update", action="store_true", help="rewrite the stored expectations")
    return p


def render(rep: Report) -> str:
    lines = [f"{rep.procedure}: {rep.verdict}"]
    for c in rep.certificates:
        mark = "" if "passed" not in c else (" [ok]" if c["passed"] else " [FAIL]")
        value = c["value"]
        if isinstance(value, list) and value and all(isinstance(x, (int, str)) for x in value):
            value = " ".join(str(x) for x in value) if all(isinstance(x, int) for x in value) else ", ".join(value)
        lines.append(f"  {c['name']}: {value}{mark}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = COMMANDS[args.command](args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True, default=str))
    else:
        print(render(rep))
    if rep.verdict == "mismatch":
        return 1
    return 2 if rep.verdict in INCONCLUSIVE else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
