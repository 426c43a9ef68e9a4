import json
from pathlib import Path

import pytest

from gradext.cli import main, parse_expect

DATA = Path(__file__).resolve().parent.parent / "data"
RING = str(DATA / "ring.json")
M2 = str(DATA / "M2.json")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_hilbert(capsys):
    code, out = run(capsys, "hilbert", "--ring", RING)
    assert code == 0
    assert json.loads(out.out)["H_R"] == [[0, 1], [1, 4], [2, 3]]


def test_ext_on_M2(capsys):
    code, out = run(capsys, "ext", "--ring", RING, "--module", M2, "--from", "1", "--to", "5")
    dims = [r["total_dim"] for r in json.loads(out.out)["ext"]]
    assert code == 0 and dims[0] == 0 and all(dims[1:])


def test_resolve_k(capsys):
    code, out = run(capsys, "resolve", "--ring", RING, "--module", "k", "--length", "4")
    rep = json.loads(out.out)
    assert code == 0 and rep["ranks"] == [1, 4, 13, 40, 121] and rep["linear"]


def test_tr_check_expectation(capsys):
    code, out = run(capsys, "tr-check", "--ring", RING, "--module", M2, "--from", "-3", "--to", "4",
                    "--expect", "i<2")
    assert code == 0 and json.loads(out.out)["verdict"] is True
    code, _ = run(capsys, "tr-check", "--ring", RING, "--module", M2, "--expect", "i<3")
    assert code == 1


def test_groebner_check(capsys):
    code, out = run(capsys, "groebner-check", "--ring", RING, "--order", "degrevlex:V>X>Y>Z")
    rep = json.loads(out.out)
    assert code == 0 and rep["groebner"] is False and rep["failing_pair"] == [0, 5]
    code, out = run(capsys, "groebner-check", "--ring", RING)
    assert len(json.loads(out.out)["orders"]) == 8


@pytest.mark.parametrize("argv", [
    ["verify-paper", "--alpha", "1"],
    ["verify-paper", "--window", "2"],
    ["hilbert", "--ring", "/nonexistent.json"],
    ["tr-check", "--ring", RING, "--module", M2, "--expect", "j<2"],
    ["groebner-check", "--ring", RING, "--order", "degrevlex:V>X"],
])
def test_bad_input_exits_2(capsys, argv):
    assert main(argv) == 2


def test_malformed_ring_file(tmp_path, capsys):
    bad = tmp_path / "ring.json"
    bad.write_text(json.dumps({"variables": ["x"], "relations": ["x*"]}))
    assert main(["hilbert", "--ring", str(bad)]) == 2
    bad.write_text("[1, 2]")
    assert main(["hilbert", "--ring", str(bad)]) == 2


def test_ragged_module_file(tmp_path, capsys):
    bad = tmp_path / "m.json"
    bad.write_text(json.dumps({"matrix": [["V", "X"], ["Y"]]}))
    assert main(["ext", "--ring", RING, "--module", str(bad)]) == 2


def test_verify_paper_small(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify-paper", "--smax", "2", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    pattern = next(c for c in rep["checks"] if c["name"] == "tr_pattern")
    assert [f["s"] for f in pattern["families"]] == [1, 2]
    assert rep["H_R"] == [[0, 1], [1, 4], [2, 3]]


def test_expect_parser():
    f = parse_expect("i > -2")
    assert f(-1) and not f(-2)
