import hashlib
import json

import pytest

import solvharm
from tests.conftest import SPECS
from tests.conftest import paired_spec


def spec_path(name):
    return str(SPECS / f"{name}.json")


def run(capsys, *argv):
    code = solvharm.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build(capsys):
    code, out, _ = run(capsys, "build", spec_path("dr_1_2"))
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 4
    assert doc["nilpotency_step"] == 2
    assert not doc["flat_model"]


def test_build_flat_model(capsys):
    code, out, _ = run(capsys, "build", spec_path("abelian"))
    assert code == 0
    assert json.loads(out)["spectrum"] is None


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", spec_path("dr_1_2"))
    assert code == 0
    assert json.loads(out)["verdict"] == "DamekRicci"
    code, out, _ = run(capsys, "classify", spec_path("thirds"))
    assert code == 2
    assert json.loads(out)["first_failure"] == "thirds_exclusion"


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "build", str(tmp_path / "nowhere.json"))
    assert code == solvharm.EX_USAGE
    assert "cannot read" in err


def test_not_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{kind: raw")
    code, _, _ = run(capsys, "build", str(path))
    assert code == solvharm.EX_DATAERR


def test_schema_violation(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"kind": "damek_ricci", "dim_z": 0, "dim_u": 2}))
    code, _, err = run(capsys, "classify", str(path))
    assert code == solvharm.EX_DATAERR
    assert "rejected" in err


def test_algebra_violation(capsys, tmp_path):
    path = tmp_path / "skew.json"
    path.write_text(json.dumps({"kind": "raw", "dim": 2, "brackets": [[0, 1, 1, 1], [1, 0, 1, 1]]}))
    code, _, _ = run(capsys, "build", str(path))
    assert code == solvharm.EX_DATAERR


def test_usage_errors(capsys):
    code, _, _ = run(capsys, "levitate", spec_path("dr_1_2"))
    assert code == solvharm.EX_USAGE
    code, _, _ = run(capsys, "geodesic", spec_path("dr_1_2"), "--phi", "0.3")
    assert code == solvharm.EX_USAGE
    code, _, _ = run(capsys, "density", spec_path("dr_1_2"), "--grid", "0,1,2")
    assert code == solvharm.EX_USAGE
    code, _, _ = run(capsys, "geodesic", spec_path("dr_1_2"), "--phi", "0.3", "--tmax", "1", "--samples", "1")
    assert code == solvharm.EX_USAGE


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        solvharm.main(["--version"])
    assert exc.value.code == 0
    assert solvharm.__version__ in capsys.readouterr().out


def test_output_manifest(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "classify", spec_path("dr_1_2"), "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["verdict"] == "DamekRicci"
    manifest = json.loads((tmp_path / "report.json.manifest.json").read_text())
    with open(spec_path("dr_1_2"), "rb") as f:
        assert manifest["input_sha256"] == hashlib.sha256(f.read()).hexdigest()
    assert manifest["subcommand"] == "classify"
    assert manifest["version"] == solvharm.__version__
    assert manifest["parameters"]["processes"] == 1


def test_seed_recorded(capsys, tmp_path):
    target = tmp_path / "curvature.json"
    code, _, _ = run(capsys, "--seed", "11", "curvature", spec_path("dr_1_2"), "--output", str(target))
    assert code == 0
    assert json.loads((tmp_path / "curvature.json.manifest.json").read_text())["seed"] == 11


def test_geodesic_csv(capsys):
    code, out, _ = run(capsys, "geodesic", spec_path("dr_1_2"), "--phi", "0.8", "--tmax", "2", "--samples", "21")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,q,Phi"
    assert len(lines) == 22
    t, q, Phi = (float(x) for x in lines[1].split(","))
    assert t == 0.0
    assert q ** 2 + Phi ** 2 == pytest.approx(1.0)


def test_density_csv(capsys):
    code, out, _ = run(capsys, "density", spec_path("thirds"), "--grid", "0.5,1,2,0,1,2", "--steps", "64")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,phi,V,Vratio"
    assert len(lines) == 5
    assert float(lines[1].split(",")[3]) == pytest.approx(1.0)


def test_density_rejects_small_t(capsys):
    code, _, _ = run(capsys, "density", spec_path("thirds"), "--grid", "0,1,2,0,1,2")
    assert code == solvharm.EX_SOFTWARE


def test_series_on_thirds(capsys):
    code, out, _ = run(capsys, "series", spec_path("thirds"), "--order", "10")
    assert code == 0
    doc = json.loads(out)
    assert doc["thirds"]["t9"] == ["1/6804", "0/1", "-1/20412", "0/1", "5/183708", "0/1", "-1/551124"]
    assert doc["coth"]["vanishes"] is True
    assert doc["volume_phi2"]["agrees"] is True
    assert [block["kind"] for block in doc["blocks"]] == ["scalar_x", "matrix_v"]


def test_series_order_too_large(capsys):
    code, _, _ = run(capsys, "series", spec_path("thirds"), "--order", "40")
    assert code == solvharm.EX_SOFTWARE


def test_curvature_report(capsys):
    code, out, _ = run(capsys, "curvature", spec_path("dr_1_2"), "--report")
    assert code == 0
    doc = json.loads(out)
    assert doc["C"] == pytest.approx(-1.5)
    assert doc["H"] == pytest.approx(9.0 / 8.0)
    assert doc["nonpositivity"]["nonpositive"] is True
    assert "ledger" in doc


def test_classify_positive_curvature(capsys, tmp_path):
    path = tmp_path / "positive.json"
    path.write_text(json.dumps(paired_spec([("1/2", 2), (1, 1)], [(0, 1, 2)])))
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 3
    doc = json.loads(out)
    assert doc["verdict"] == "Inconclusive"
    assert doc["note"].startswith("NonpositivityFail")
