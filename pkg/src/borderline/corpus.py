"""Golden corpus: fixed CLI invocations replayed against stored reports.

Timings are dropped before comparison, everything else must match
byte for byte after canonical JSON serialization.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .border import Report

EXPECTED = Path(__file__).with_name("data") / "corpus.json"

DIAGONAL = '{"shape": [3, 3, 3], "entries": [[[1,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,1,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,1]]]}'

ENTRIES: dict[str, list[str]] = {
    "hf-monomial-ann": ["hf", "--ring", "P2", "--ideal", "y0^2,y1^3,y2^4", "--range", "0..6"],
    "ann-monomial": ["ann", "x0*x1^2*x2^3"],
    "ann-ikeda": ["ann", "x0^3*x1*x2 + x0*x1^3*x3 + x2^3*x3^2"],
    "hf-p1xp1": ["hf", "--ring", "P1xP1", "--ideal", "a1*b1, a2*b2", "--degree", "1,1"],
    "gb-L-lex": ["gb", "--ring", "P2", "--ideal", "y0*y2^2 + y1^3, y0^2*y2, y0^2*y1",
                 "--order", "lex:y0<y1<y2"],
    "sat-truncated": ["sat", "--ring", "P2", "--ideal", "y0^2*y1, y0^2*y2, y0*y1^2, y0*y2^2"],
    "hom0-khat": ["hom0", "--ring", "P2", "--ideal",
                  "y0^2*y1^2, y0^2*y2^2, y0^3*y2, y0^2*y1*y2^3, y0^3*y1^2, y0^4*y1, y1*y2^5, y0*y2^5"],
    "ext1-ci": ["ext1", "--ring", "P2", "--J", "y0^2, y1^3", "--ideal", "y0^2*y1, y0^2*y2, y1^3*y0, y1^3*y2, y0^3, y1^4"],
    "enumerate-triangle": ["enumerate", "--form", "x0*x1*x2", "--r", "4"],
    "monomial-br-4": ["monomial-br", "x0*x1*x2"],
    "monomial-br-6": ["monomial-br", "x0*x1^2*x2^3"],
    "monomial-br-9": ["monomial-br", "x0^2*x1^2*x2^2"],
    "wild3-diagonal": ["wild3", "--m", "3", "--tensor", DIAGONAL],
    "wild3-certificate": ["wild3", "--certificate"],
    "identifiable-fermat": ["identifiable", "x0^3 + x1^3 + x2^3", "--r", "3"],
    "identifiable-monomial": ["identifiable", "x0*x1^2*x2^3", "--r", "6"],
    "vspbar-binary": ["vspbar", "binary", "x0^2*x1^2"],
    "vspbar-cusp": ["vspbar", "cubic", "x1^2*x2 - x0^3"],
    "vspbar-triangle": ["vspbar", "cubic", "x0*x1*x2"],
    "vspbar-cw-B3": ["vspbar", "cw", "--cw", "B", "--n", "3"],
    "vspbar-ci-a3": ["vspbar", "ci", "x0*x1^3*x2^4"],
    "vspbar-monomial-222": ["vspbar", "monomial", "--abc", "2,2,2"],
    "vspbar-omega-837": ["vspbar", "omega", "--abc", "8,3,7"],
    "vspbar-schubert": ["vspbar", "schubert"],
    "vspbar-reducible": ["vspbar", "reducible"],
}


def canonical(rep: Report) -> str:
    data = rep.to_json()
    data.pop("timings", None)
    return json.dumps(data, sort_keys=True, default=str)


def run_entry(name: str) -> tuple[str, str]:
    from .cli import COMMANDS, build_parser
    args = build_parser().parse_args(ENTRIES[name])
    return name, canonical(COMMANDS[args.command](args))


def run_all(workers: int = 1) -> dict[str, str]:
    names = sorted(ENTRIES)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pairs = list(pool.map(run_entry, names))
    else:
        pairs = [run_entry(n) for n in names]
    return dict(sorted(pairs))


def replay(update: bool = False, workers: int = 1) -> Report:
    got = run_all(workers)
    rep = Report("corpus", {"entries": len(got)}, "ok")
    if update:
        EXPECTED.parent.mkdir(exist_ok=True)
        EXPECTED.write_text(json.dumps({k: json.loads(v) for k, v in got.items()},
                                       indent=1, sort_keys=True) + "\n")
        rep.add("written", str(EXPECTED.name))
        return rep
    expected = {k: json.dumps(v, sort_keys=True) for k, v in
                json.loads(EXPECTED.read_text()).items()}
    bad = sorted(k for k in set(got) | set(expected) if got.get(k) != expected.get(k))
    for k in sorted(got):
        rep.add(k, "match" if k not in bad else "DIFF", k not in bad)
    if bad:
        rep.verdict = "mismatch"
    return rep
