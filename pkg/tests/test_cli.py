import json

from torictop import fixtures
from torictop.cli import main
from torictop.errors import ConsistencyError


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def run_json(capsys, *argv):
    rc, out = run_cli(capsys, *argv)
    assert rc == 0, out
    return json.loads(out)


def test_hvec_square(capsys):
    rep = run_json(capsys, "hvec", "--fixture", "polygon4")
    assert rep["results"]["h"] == [1, 2, 1]
    assert rep["results"]["f"] == [1, 4, 4]
    assert rep["results"]["dehn_sommerville"]["symmetric"] is True


def test_hvec_from_file(capsys, tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"n": 2, "complex": {"m": 4, "facets": [[1, 2], [2, 3], [3, 4], [4, 1]]}}))
    rep = run_json(capsys, "hvec", "--input", str(path))
    assert rep["results"]["h"] == [1, 2, 1]


def test_zk_simplex(capsys):
    rep = run_json(capsys, "zk", "--fixture", "simplex2", "--coeff", "Z")
    assert rep["results"]["total"] == [{"degree": 5, "rank": 1, "torsion": []}]


def test_zk_accepts_bare_complex(capsys, tmp_path):
    path = tmp_path / "cyc.json"
    path.write_text(json.dumps({"m": 4, "facets": [[1, 2], [2, 3], [3, 4], [4, 1]]}))
    rep = run_json(capsys, "zk", "--input", str(path), "--coeff", "F2")
    degrees = {d["degree"]: d["rank"] for d in rep["results"]["total"]}
    assert degrees == {3: 2, 6: 1}


def test_qtm_reports_dims(capsys):
    rep = run_json(capsys, "qtm", "--fixture", "cp2", "--coeff", "F3")
    assert rep["results"]["dims"] == {"0": 1, "2": 1, "4": 1}


def test_split_cp3(capsys):
    rep = run_json(capsys, "split", "--fixture", "cp3", "--p", "5")
    wedges = [p["sphere_wedge"] for p in rep["results"]["pieces"]]
    assert wedges == [[[3, 1]], [[5, 1]], [[7, 1]], []]


def test_split_rigidity_bytes(capsys):
    rep1 = run_json(capsys, "split", "--fixture", "cp1xcp1", "--p", "5")
    rep2 = run_json(capsys, "split", "--fixture", "hirzebruch", "--p", "5")
    assert rep1["input_digest"] != rep2["input_digest"]
    bytes1 = json.dumps(rep1["results"], sort_keys=True)
    bytes2 = json.dumps(rep2["results"], sort_keys=True)
    assert bytes1 == bytes2


def test_split_accepts_raw_betti_numbers(capsys, tmp_path):
    path = tmp_path / "betti.json"
    path.write_text(json.dumps({"b": [1, 2, 1]}))
    rep = run_json(capsys, "split", "--input", str(path), "--p", "5")
    assert rep["results"]["pieces"][0]["sphere_wedge"] == [[3, 2]]


def test_split_rejects_non_primitive_override(capsys):
    rc = main(["split", "--fixture", "cp2", "--p", "5", "--u", "4"])
    assert rc == 2


def test_bott3_fixture_reduces_to_valid_cube_presentation(capsys):
    from torictop import cube_parameters

    P, lam = fixtures.load_quasitoric("bott3")
    pres = cube_parameters(P, lam)
    assert pres.valid


def test_split_warns_below_n(capsys):
    rep = run_json(capsys, "split", "--fixture", "cp3", "--p", "3")
    assert rep["results"]["form"] == "general"
    assert rep["warnings"]


def test_projection_command(capsys):
    rep = run_json(capsys, "projection", "--fixture", "cp1xcp1", "--p", "5")
    assert rep["results"]["triviality"]["certified"] is True
    groups = rep["results"]["decomposition"]["groups"]
    count = sum(len(g["summands"]) for g in groups.values())
    assert count == 15


def test_projection_below_n_warns_and_gives_no_verdict(capsys):
    rep = run_json(capsys, "projection", "--fixture", "bott3", "--p", "3")
    assert rep["warnings"]
    assert rep["results"]["triviality"]["certified"] is None


def test_split_accepts_polytope_only_fixture(capsys):
    rep = run_json(capsys, "split", "--fixture", "polygon6", "--p", "5")
    assert rep["results"]["betti"] == [1, 4, 1]


def test_zk_size_filter_flag(capsys):
    rep = run_json(capsys, "zk", "--fixture", "polygon4", "--sizes", "2", "--coeff", "Q")
    assert rep["results"]["trivial_count"] + len(rep["results"]["summands"]) == 6
    degrees = {d["degree"]: d["rank"] for d in rep["results"]["total"]}
    assert degrees == {3: 2}


def test_nontrivial_command(capsys):
    rep = run_json(capsys, "nontrivial", "--fixture", "qtm_polygon5")
    assert rep["results"]["verdict"]["conclusion"] == "not-null"
    assert rep["results"]["p_local"]["computed"] is False


def test_nontrivial_two_simplices(capsys):
    rep = run_json(capsys, "nontrivial", "--two-simplices", "5", "2")
    assert rep["results"]["verdict"]["conclusion"] == "not-null"


def test_cube_census_command(capsys):
    rep = run_json(capsys, "cube-census")
    assert rep["results"]["valid_count"] == 25
    assert rep["results"]["uncertified"] == []


def test_bott_command(capsys, tmp_path):
    path = tmp_path / "tower.json"
    path.write_text(json.dumps({"dims": [1, 1], "params": [[], [[2]]]}))
    rep = run_json(capsys, "bott", "--input", str(path))
    assert rep["results"]["valid"] is True
    assert rep["results"]["h"] == [1, 2, 1]
    # emitted data round-trips through the quasitoric input schema
    qtm_obj = {"polytope": rep["results"]["polytope"], "lambda": rep["results"]["lambda"]}
    path2 = tmp_path / "tower_qtm.json"
    path2.write_text(json.dumps(qtm_obj))
    rep2 = run_json(capsys, "qtm", "--input", str(path2), "--coeff", "F2")
    assert rep2["results"]["dims"] == {"0": 1, "2": 2, "4": 1}


def test_fixture_listing_and_dump(capsys):
    rep = run_json(capsys, "fixtures")
    names = [e["name"] for e in rep["results"]["available"]]
    assert names == fixtures.names()
    rep = run_json(capsys, "fixtures", "--name", "cube3")
    assert rep["results"]["kind"] == "polytope"


def test_every_fixture_validates_and_runs(capsys):
    for name in fixtures.names():
        kind = fixtures.load(name)["kind"]
        if kind == "quasitoric":
            rc, _ = run_cli(capsys, "qtm", "--fixture", name, "--coeff", "F2")
        else:
            rc, _ = run_cli(capsys, "hvec", "--fixture", name)
        assert rc == 0, name


def test_determinism_byte_for_byte(capsys):
    _, out1 = run_cli(capsys, "projection", "--fixture", "bott3", "--p", "5")
    _, out2 = run_cli(capsys, "projection", "--fixture", "bott3", "--p", "5")
    assert out1 == out2
    _, out3 = run_cli(capsys, "cube-census")
    _, out4 = run_cli(capsys, "cube-census")
    assert out3 == out4


def test_reports_reparse(capsys):
    for argv in (
        ["hvec", "--fixture", "cube3"],
        ["zk", "--fixture", "polygon5", "--coeff", "F2"],
        ["split", "--fixture", "bott3", "--p", "7"],
    ):
        rc, out = run_cli(capsys, *argv)
        assert rc == 0
        rep = json.loads(out)
        assert {"command", "input_digest", "version", "warnings", "results"} <= set(rep)


def test_exit_code_2_on_bad_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    rc = main(["hvec", "--input", str(path)])
    err = capsys.readouterr().err
    assert rc == 2 and "input error" in err


def test_exit_code_2_on_invalid_matrix(capsys, tmp_path):
    obj = {
        "polytope": {"n": 2, "complex": {"m": 4, "facets": [[1, 2], [2, 3], [3, 4], [4, 1]]}},
        "lambda": [[1, 0, 1, 0], [0, 1, 0, 2]],
    }
    path = tmp_path / "bad_qtm.json"
    path.write_text(json.dumps(obj))
    rc = main(["qtm", "--input", str(path)])
    assert rc == 2


def test_exit_code_2_on_missing_fixture(capsys):
    rc = main(["hvec", "--fixture", "does-not-exist"])
    assert rc == 2


def test_exit_code_3_on_consistency_failure(capsys, monkeypatch):
    # a theorem violation cannot be triggered by honest input, so simulate one
    import torictop.cli as cli

    def boom(*a, **k):
        raise ConsistencyError("simulated")

    monkeypatch.setattr(cli, "cohomology_ring", boom)
    rc = main(["qtm", "--fixture", "cp2"])
    err = capsys.readouterr().err
    assert rc == 3 and "consistency" in err


def test_text_mode(capsys):
    rc, out = run_cli(capsys, "hvec", "--fixture", "polygon6", "--text")
    assert rc == 0
    assert out.startswith("# hvec")
    assert "h: [1, 4, 1]" in out


def test_output_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    rc, out = run_cli(capsys, "hvec", "--fixture", "simplex3", "--output", str(dest))
    assert rc == 0 and out == ""
    rep = json.loads(dest.read_text())
    assert rep["results"]["h"] == [1, 1, 1, 1]
