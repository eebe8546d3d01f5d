import json
import shutil
import subprocess
import sys

import pytest

from orbiclass.cli import EXIT_BOUND, EXIT_OK, EXIT_PARSE, main
from orbiclass.formats import action_to_text, complex_to_text
from orbiclass.topology.fixtures import antipodal_action, cross_polytope_boundary


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_classify_dihedral(capsys):
    code, rep, _ = run_json(capsys, "classify", "--family", "dihedral(4)")
    assert code == EXIT_OK
    assert rep["schema"] == "orbiclass/1"
    assert rep["order"] == 8
    assert rep["verdicts"]["pl"] == {"manifold": True, "boundary_nonempty": True}
    assert rep["model"] == "half_space"


def test_classify_negative_identity_refusal(capsys):
    code, rep, _ = run_json(capsys, "classify", "--family", "negative_identity(3)")
    assert code == EXIT_OK
    assert not any(v["manifold"] for v in rep["verdicts"].values())
    d = rep["decomposition"]
    assert d["status"] == "refused"
    assert d["witness"]["fixed_codim"] == 3
    entries = d["witness"]["matrix"]["entries"]
    diag = [entries[i * 3 + i]["c"][0][0] for i in range(3)]
    assert diag == ["-1", "-1", "-1"]


def test_classify_binary_icosahedral(capsys):
    code, rep, _ = run_json(capsys, "classify", "--family", "binary_icosahedral()")
    assert code == EXIT_OK
    v = rep["verdicts"]
    assert v["homology"]["manifold"] and not v["topological"]["manifold"] and not v["pl"]["manifold"]
    assert rep["decomposition"]["k"] == 1


def test_text_format(capsys):
    code, out, _ = run(capsys, "classify", "--family", "dihedral(3)", "--format", "text")
    assert code == EXIT_OK
    assert "schema: orbiclass/1" in out.splitlines()
    assert "verdicts.topological.manifold: yes" in out


def test_unknown_family_is_parse_error(capsys):
    code, rep, err = run_json(capsys, "classify", "--family", "bogus(3)")
    assert code == EXIT_PARSE
    assert rep["schema"] == "orbiclass/1"
    assert rep["error"]["type"] == "ParseError"
    assert rep["error"]["location"] == "--family"
    assert err.startswith("ParseError")


def test_malformed_group_file(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"dimension": 2,\n "generators": [}\n')
    code, rep, _ = run_json(capsys, "classify", "--input", str(p))
    assert code == EXIT_PARSE
    assert rep["error"]["location"].startswith("line 2")


def test_missing_file(capsys, tmp_path):
    code, rep, _ = run_json(capsys, "classify", "--input", str(tmp_path / "nope.json"))
    assert code == EXIT_PARSE


def test_non_orthogonal_generator(capsys, tmp_path):
    g = {"dimension": 1, "generators": [{"rows": 1, "cols": 1, "entries": [{"m": 1, "c": [["2", "1"]]}]}]}
    p = tmp_path / "g.json"
    p.write_text(json.dumps(g))
    code, rep, _ = run_json(capsys, "classify", "--input", str(p))
    assert code == EXIT_PARSE
    assert rep["error"]["type"] == "NonOrthogonalGenerator"
    assert rep["error"]["index"] == 0


def test_cap_exceeded(capsys):
    code, rep, _ = run_json(capsys, "classify", "--family", "binary_icosahedral()", "--cap", "50")
    assert code == EXIT_BOUND
    assert rep["error"] == {"type": "CapExceeded", "message": rep["error"]["message"], "cap": 50}


def test_cap_in_group_file_is_respected(capsys, tmp_path):
    _, gj, _ = run_json(capsys, "catalog", "--family", "dihedral(12)")
    gj["cap"] = 10
    p = tmp_path / "g.json"
    p.write_text(json.dumps(gj))
    assert main(["classify", "--input", str(p)]) == EXIT_BOUND
    capsys.readouterr()


def test_nonpositive_cap_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["classify", "--family", "dihedral(3)", "--cap", "0"])
    assert info.value.code == 2
    capsys.readouterr()


def test_catalog_round_trip(capsys, tmp_path):
    code, gj, _ = run_json(capsys, "catalog", "--family", "signed_permutation_reflections(3)")
    assert code == EXIT_OK
    p = tmp_path / "b3.json"
    p.write_text(json.dumps(gj))
    _, a, _ = run_json(capsys, "classify", "--input", str(p))
    _, b, _ = run_json(capsys, "classify", "--family", "signed_permutation_reflections(3)")
    assert a["order"] == b["order"] == 48
    assert a["verdicts"] == b["verdicts"]


def test_catalog_listing(capsys):
    code, rep, _ = run_json(capsys, "catalog")
    assert code == EXIT_OK
    names = {f["name"] for f in rep["families"]}
    assert {"dihedral", "binary_icosahedral", "direct_sum"} <= names
    assert "cell600" in rep["fixtures"]
    assert rep["examples"]["binary_icosahedral()"] == 120


def test_conjugate_is_seeded(capsys):
    args = ("classify", "--family", "dihedral(6)", "--conjugate")
    _, a, _ = run(capsys, *args, "--seed", "7")
    _, b, _ = run(capsys, *args, "--seed", "7")
    assert a == b
    rep = json.loads(a)
    assert rep["source"]["conjugated_with_seed"] == 7
    assert rep["verdicts"]["pl"]["manifold"]


def test_threads_do_not_change_output(capsys):
    args = ("classify", "--family", "direct_sum(binary_icosahedral(), permutation_reflections(2))")
    _, a, _ = run(capsys, *args, "--threads", "1")
    _, b, _ = run(capsys, *args, "--threads", "2")
    assert a == b


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "classify", "--family", "dihedral(3)", "--output", str(dest))
    assert code == EXIT_OK and out == ""
    assert json.loads(dest.read_text())["order"] == 6
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]


def test_verify_octahedron(capsys):
    code, rep, _ = run_json(capsys, "verify-complex", "--fixture", "octahedron", "--no-action")
    assert code == EXIT_OK
    c = rep["complex"]
    assert c["f_vector"] == [6, 12, 8]
    assert c["homology"]["groups"] == ["Z", "0", "Z"]
    assert c["homology_manifold"]["manifold"] is True
    assert c["pi1"]["enumeration"]["order"] == 1
    assert "quotient" not in rep


def test_verify_triangle(capsys):
    code, rep, _ = run_json(capsys, "verify-complex", "--fixture", "triangle")
    assert code == EXIT_OK
    wb = rep["complex"]["homology_manifold_with_boundary"]
    assert wb["manifold"] is True
    assert sorted(map(sorted, wb["boundary_facets"])) == [[0, 1], [0, 2], [1, 2]]


def test_verify_with_action_file(capsys, tmp_path):
    kp, ap = tmp_path / "K.txt", tmp_path / "A.txt"
    kp.write_text(complex_to_text(cross_polytope_boundary(3)))
    ap.write_text(action_to_text(antipodal_action(3)))
    code, rep, _ = run_json(capsys, "verify-complex", "--input", str(kp), "--action", str(ap))
    assert code == EXIT_OK
    q = rep["quotient"]
    assert q["pi1"]["enumeration"]["order"] == 2
    assert q["pi1"]["abelian_invariants"] == [2]
    assert q["homology_manifold"]["manifold"] is True


def test_coset_bound_exit_code(capsys):
    code, rep, _ = run_json(capsys, "verify-complex", "--fixture", "hexagon", "--no-action", "--coset-bound", "5")
    assert code == EXIT_BOUND
    assert rep["complex"]["pi1"]["enumeration"]["status"] == "exceeds_bound"


def test_quotient_text(capsys):
    code, out, _ = run(capsys, "quotient", "--fixture", "octahedron", "--format", "text")
    assert code == EXIT_OK
    assert out.startswith("dim 2 vertices ")


def test_quotient_json(capsys):
    code, rep, _ = run_json(capsys, "quotient", "--fixture", "polygon:8")
    assert code == EXIT_OK
    assert rep["schema"] == "orbiclass/1"
    assert rep["subdivided_f_vector"] == [32, 32]
    assert len(rep["projection"]) == 32


def test_quotient_needs_action(capsys):
    code, rep, _ = run_json(capsys, "quotient", "--fixture", "triangle")
    assert code == EXIT_PARSE


def test_invalid_action(capsys, tmp_path):
    ap = tmp_path / "A.txt"
    ap.write_text("0 1 2 3 4\n")
    code, rep, _ = run_json(capsys, "verify-complex", "--fixture", "octahedron", "--action", str(ap))
    assert code == EXIT_PARSE


def test_unknown_fixture(capsys):
    code, rep, _ = run_json(capsys, "verify-complex", "--fixture", "klein_bottle_9")
    assert code == EXIT_PARSE
    assert rep["error"]["location"] == "--fixture"


@pytest.mark.skipif(shutil.which("orbiclass") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["orbiclass", "classify", "--family", "cyclic_rotation(5)"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0
    assert json.loads(p.stdout)["verdicts"]["pl"] == {"manifold": True, "boundary_nonempty": False}


def test_module_entry():
    p = subprocess.run([sys.executable, "-m", "orbiclass.cli", "classify", "--family", "bogus()"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 2
