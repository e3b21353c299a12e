import json
import subprocess
import sys

import pytest

from borderline.cli import main
from borderline.corpus import ENTRIES, replay, run_all

DIAG = {"shape": [3, 3, 3],
        "entries": [[[int(i == j == k) for k in range(3)] for j in range(3)] for i in range(3)]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hf_row(capsys):
    code, out, _ = run(capsys, "hf", "--ring", "P2", "--ideal", "y0^2,y1^3,y2^4", "--range", "0..6")
    assert code == 0
    assert "1 3 5 6 5 3 1" in out


def test_ann_json_schema(capsys):
    code, out, _ = run(capsys, "ann", "x0*x1^2*x2^3", "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"input", "procedure", "verdict", "certificates", "timings"}
    gens = next(c["value"] for c in data["certificates"] if c["name"] == "generators")
    assert gens == ["y0^2", "y1^3", "y2^4"]
    for c in data["certificates"]:
        assert {"name", "value"} <= set(c)


def test_multigraded_hf(capsys):
    code, out, _ = run(capsys, "hf", "--ring", "P1xP1", "--ideal", "a1*b1, a2*b2", "--degree", "1,1")
    assert code == 0 and "2" in out


def test_monomial_border_rank(capsys):
    code, out, _ = run(capsys, "monomial-br", "x0*x1^2*x2^3", "--json")
    assert code == 0
    assert json.loads(out)["verdict"] == 6


def test_unknown_variable_is_input_error(capsys):
    code, _, err = run(capsys, "hf", "--ring", "P2", "--ideal", "y0^2, z^3")
    assert code == 1
    assert "error" in err


def test_bad_range_is_input_error(capsys):
    code, _, _ = run(capsys, "hf", "--ring", "P2", "--ideal", "y0^2", "--range", "5..2")
    assert code == 1


def test_unresolved_exit_code(capsys):
    code, out, _ = run(capsys, "vspbar", "ci", "x0*x1^5*x2^6")
    assert code == 2
    assert "unresolved" in out


def test_wild3_from_file(capsys, tmp_path):
    path = tmp_path / "diag.json"
    path.write_text(json.dumps(DIAG))
    code, out, _ = run(capsys, "wild3", "--tensor", f"@{path}", "--m", "3", "--json")
    assert code == 0
    assert json.loads(out)["verdict"] == "not wild"


def test_wild3_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "wild3", "--tensor", f"@{tmp_path / 'nope.json'}")
    assert code == 1


def test_gb_with_lex_order(capsys):
    code, out, _ = run(capsys, "gb", "--ring", "P2", "--ideal", "y0*y2^2 + y1^3, y0^2*y2, y0^2*y1",
                       "--order", "lex:y0<y1<y2", "--json")
    assert code == 0
    assert json.loads(out)["procedure"] == "gb"


def test_enumerate_with_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "--form", "x0*x1*x2", "--r", "4", "--filter", "--json")
    assert code == 0
    data = json.loads(out)
    values = {c["name"]: c["value"] for c in data["certificates"]}
    assert values["count"] == 3 and values["kept count"] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "borderline", "monomial-br", "x0*x1*x2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "4" in proc.stdout


def test_corpus_matches_expectations():
    rep = replay()
    assert rep.verdict == "ok", [c for c in rep.certificates if not c.get("passed", True)]
    assert len(rep.certificates) >= len(ENTRIES)


def test_corpus_is_deterministic():
    assert run_all() == run_all()


@pytest.mark.parametrize("workers", [2])
def test_corpus_parallel_matches_serial(workers):
    assert run_all(workers) == run_all(1)
