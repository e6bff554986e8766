import json
import subprocess
import sys
from pathlib import Path

import pytest

from glens.cli import dump_json, main
from glens.dynamics import MooreMachine, toggle, wire
from glens.instances import ClassicLensMor

FIXTURES = Path(__file__).parent / "fixtures"


def fx(name):
    return str(FIXTURES / name)


def invoke(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


EXIT_MATRIX = [
    (("laws", "--kind", "category", "walking_arrow.json"), 0),
    (("laws", "--kind", "category", "commutative_square.json"), 0),
    (("laws", "--kind", "category", "walking_arrow_bad_comp.json"), 1),
    (("laws", "--kind", "category", "nonassociative.json"), 1),
    (("laws", "--kind", "category", "missing_pair.json"), 2),
    (("laws", "--kind", "category", "truncated.json"), 2),
    (("laws", "--kind", "category", "garbage.json"), 2),
    (("laws", "--kind", "category", "wrong_schema.json"), 2),
    (("laws", "--kind", "category", "does_not_exist.json"), 2),
    (("laws", "--kind", "category", "toggle.json"), 2),
    (("laws", "--kind", "indexed", "indexed_constant.json"), 0),
    (("laws", "--kind", "indexed", "slice2.json"), 0),
    (("laws", "--kind", "indexed", "walking_arrow.json"), 2),
    (("laws", "--kind", "smc", "finset_cartesian.json"), 0),
    (("laws", "--kind", "smc", "bad_comonoid.json"), 1),
    (("iso", "--construction", "twisted-arrow", "walking_arrow.json"), 0),
    (("iso", "--construction", "twisted-arrow", "nonassociative.json"), 1),
    (("iso", "--construction", "tfae", "constant_terminal.json"), 0),
    (("iso", "--construction", "tfae", "coslice_walking_arrow.json"), 0),
    (("iso", "--construction", "recover-usual", "finset_cartesian.json"), 0),
    (("iso", "--construction", "recover-usual", "truncated.json"), 2),
    (("compose", "--kind", "classic", "classic_id_2_2.json", "relabel_wiring.json"), 0),
    (("compose", "--kind", "classic", "toggle.json", "relabel_wiring.json"), 0),
    (("compose", "--kind", "classic", "lens_2_1.json", "relabel_wiring.json"), 1),
    (("compose", "--kind", "classic", "prism_a.json", "relabel_wiring.json"), 2),
    (("compose", "--kind", "prism", "prism_a.json", "prism_b.json"), 0),
    (("compose", "--kind", "prism", "prism_b.json", "prism_a.json"), 1),
    (("compose", "--kind", "generic", "generic_a.json", "generic_b.json"), 0),
    (("compose", "--kind", "generic", "generic_b.json", "generic_b.json"), 1),
    (("simulate", "toggle.json", "--inputs", "1,1,0,1", "--oracle"), 0),
    (("simulate", "toggle.json", "--inputs", "1,2"), 1),
    (("simulate", "toggle.json", "--initial", "5"), 1),
    (("simulate", "toggle.json", "--inputs", "1,a"), 2),
    (("simulate", "toggle_bad_update.json"), 2),
    (("enumerate-comonoids", "--size", "2"), 0),
    (("--limit", "10", "enumerate-comonoids", "--size", "3"), 1),
]


def _resolve(argv):
    return [fx(a) if a.endswith(".json") else a for a in argv]


@pytest.mark.parametrize("argv, expected", EXIT_MATRIX, ids=[" ".join(a) for a, _ in EXIT_MATRIX])
def test_exit_codes(capsys, argv, expected):
    code, out, err = invoke(capsys, *_resolve(argv))
    assert code == expected, out + err
    if expected == 2:
        assert "malformed input" in err


@pytest.mark.parametrize("fmt", ["text", "json"])
@pytest.mark.parametrize(
    "argv",
    [
        ("laws", "--kind", "category", "nonassociative.json"),
        ("iso", "--construction", "twisted-arrow", "commutative_square.json"),
        ("laws", "--kind", "smc", "bad_comonoid.json"),
        ("enumerate-comonoids", "--size", "3"),
        ("simulate", "toggle.json", "--inputs", "1,1,0,1", "--oracle"),
        ("laws", "--kind", "category", "truncated.json"),
    ],
)
def test_reports_are_byte_identical(capsys, fmt, argv):
    runs = [invoke(capsys, "--format", fmt, *_resolve(argv)) for _ in range(2)]
    assert runs[0] == runs[1]
    assert "time" not in runs[0][1]


def test_report_cites_planted_pair(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "laws", "--kind", "category", fx("walking_arrow_bad_comp.json"))
    report = json.loads(out)
    assert code == 1 and report["status"] == "fail"
    assert report["schema"] == "glens/v1/report"
    cex = report["results"][0]["counterexamples"][0]
    assert cex["law"] == "composite typing" and cex["witness"][:2] == [1, 2]


def test_parse_error_names_location(capsys):
    _, _, err = invoke(capsys, "laws", "--kind", "category", fx("truncated.json"))
    assert "truncated.json:" in err and ":20:" in err
    _, _, err = invoke(capsys, "simulate", fx("toggle_bad_update.json"))
    assert "$.update[3]" in err


def test_identity_composition_is_byte_identical(capsys, tmp_path):
    out = tmp_path / "out.json"
    code, _, _ = invoke(capsys, "compose", "--kind", "classic", "-o", str(out), fx("classic_id_2_2.json"), fx("relabel_wiring.json"))
    assert code == 0
    assert out.read_bytes() == (FIXTURES / "relabel_wiring.json").read_bytes()


def test_machine_compose_matches_wire(capsys):
    code, out, _ = invoke(capsys, "compose", "--kind", "classic", fx("toggle.json"), fx("relabel_wiring.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc.pop("schema") == "glens/v1/machine"
    w = ClassicLensMor.from_json(json.loads((FIXTURES / "relabel_wiring.json").read_text()))
    assert MooreMachine.from_json(doc) == wire(toggle(), w)


def test_simulate_toggle(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "simulate", fx("toggle.json"), "--inputs", "1,1,0,1", "--initial", "0", "--oracle")
    doc = json.loads(out)
    assert code == 0
    assert doc["outputs"] == [0, 1, 0, 0, 1] and doc["final"] == 1
    assert doc["convention"].startswith("interface <B|A>")


def test_simulate_empty_word(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "simulate", fx("toggle.json"), "--inputs", "")
    assert code == 0 and json.loads(out)["outputs"] == [0]


@pytest.mark.parametrize("n, candidates", [(0, 1), (2, 16), (3, 729)])
def test_enumerate(capsys, n, candidates):
    code, out, _ = invoke(capsys, "enumerate-comonoids", "--format", "json", "--smc", "finset-cartesian", "--size", str(n))
    doc = json.loads(out)
    assert code == 0
    assert doc["counts"] == {"candidates": candidates, "comonoids": 1}


def test_twisted_arrow_counts(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "iso", "--construction", "twisted-arrow", fx("walking_arrow.json"))
    counts = json.loads(out)["counts"]
    assert code == 0 and counts["source objects"] == counts["target objects"] == 3


def test_env_limit(capsys, monkeypatch):
    monkeypatch.setenv("GLENS_LIMIT", "10")
    code, _, _ = invoke(capsys, "enumerate-comonoids", "--size", "3")
    assert code == 1
    code, _, _ = invoke(capsys, "--limit", "1000", "enumerate-comonoids", "--size", "3")
    assert code == 0


def test_timing_is_opt_in(capsys):
    _, out, _ = invoke(capsys, "--timing", "laws", "--kind", "category", fx("walking_arrow.json"))
    assert "wall time" in out


def test_fixtures_are_canonical():
    for path in FIXTURES.glob("*.json"):
        text = path.read_text()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError:
            continue
        assert dump_json(doc) == text, path.name


def test_console_script(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "glens", "laws", "--kind", "category", fx("walking_arrow.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.endswith("status: pass\n")
