"""Command-line interface: report payloads, exit codes, determinism, and
the shard/merge path."""

import json

from hermcodes.cli import main


def run_cli(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(args + ["--out", str(out)])
    payload = json.loads(out.read_text()) if out.exists() else None
    return code, payload, out


def test_params_exact(tmp_path):
    code, report, _ = run_cli(["params", "--p", "2", "--e", "1", "--n", "3", "--d", "2"], tmp_path)
    assert code == 0
    assert report["computed"] == {"m": 37, "k": 10, "dmin": 12, "dmin_status": "exact"}
    assert report["match"] == {"m": True, "k": True, "dmin": True}
    assert report["schema"] == 1


def test_params_witness_fallback(tmp_path):
    code, report, _ = run_cli(["params", "--p", "2", "--e", "1", "--n", "4", "--d", "2"], tmp_path)
    assert code == 0
    assert report["computed"]["dmin"] == 88
    assert report["computed"]["dmin_status"] == "witness_upper_bound_only"
    assert report["theoretical"]["dmin"] == 88


def test_params_q3(tmp_path):
    code, report, _ = run_cli(["params", "--p", "3", "--e", "1", "--n", "2", "--d", "1"], tmp_path)
    assert code == 0
    assert report["computed"] == {"m": 37, "k": 3, "dmin": 27, "dmin_status": "exact"}


def test_params_unknown_bound_exit_code(tmp_path):
    code, report, _ = run_cli(["params", "--p", "5", "--e", "1", "--n", "5", "--d", "4"], tmp_path)
    assert code == 3
    assert report["computed"] is None
    assert report["theoretical"]["dmin"] is None


def test_params_rejects_degree_outside_regime(tmp_path):
    code = main(["params", "--p", "2", "--e", "1", "--n", "3", "--d", "3"])
    assert code == 1


def test_params_assume_conjecture(tmp_path):
    # the conjectural bound fills the open cell, but the variety itself is
    # beyond the enumeration budget, so the run is a budget refusal
    code, report, _ = run_cli(
        ["params", "--p", "5", "--e", "1", "--n", "5", "--d", "4", "--assume-conjecture"],
        tmp_path,
    )
    assert code == 2
    assert report["computed"] is None
    assert report["theoretical"]["dmin"] is not None
    assert report["theoretical"]["provenance"] == "conjecture"


def test_params_artifacts(tmp_path):
    weights = tmp_path / "weights.csv"
    generator = tmp_path / "generator.txt"
    code, report, _ = run_cli(
        [
            "params", "--p", "2", "--e", "1", "--n", "2", "--d", "1",
            "--weights-csv", str(weights), "--generator-out", str(generator),
        ],
        tmp_path,
    )
    assert code == 0
    assert weights.read_text().splitlines() == ["weight,count", "8,3", "10,16", "12,2"]
    header = generator.read_text().splitlines()[0]
    assert header == "2 1 2 1 1,1,1 13 3"


def test_verify_suites(tmp_path):
    code, report, _ = run_cli(["verify", "--p", "2", "--e", "1", "--suite", "projspace"], tmp_path)
    assert code == 0 and report["passed"]
    code, report, _ = run_cli(
        ["verify", "--p", "2", "--e", "1", "--suite", "bounds", "--n", "3", "--d", "2"], tmp_path
    )
    assert code == 0 and report["passed"]
    names = [c["name"] for c in report["checks"]]
    assert "oracle_cone_n3_d2" in names and "maximizer_structure_n3_d2" in names


def test_oracle_report(tmp_path):
    code, report, _ = run_cli(["oracle", "--p", "2", "--e", "1", "--n", "2", "--d", "2"], tmp_path)
    assert code == 0
    assert report["result"]["max_count"] == 9
    assert report["result"]["n_maximizers"] == 3
    assert report["matches_bound"] is True
    assert report["characterization"]["union_of_generator_lines"] is True
    assert report["characterization"]["generator_lines"] == [2]


def test_oracle_q3(tmp_path):
    code, report, _ = run_cli(["oracle", "--p", "3", "--e", "1", "--n", "2", "--d", "2"], tmp_path)
    assert code == 0
    assert report["result"]["max_count"] == 19
    assert report["scan"]["total_forms"] == 66430


def test_oracle_space_variety(tmp_path):
    code, report, _ = run_cli(
        ["oracle", "--p", "2", "--e", "1", "--n", "2", "--d", "2", "--variety", "space"], tmp_path
    )
    assert code == 0
    assert report["result"]["max_count"] == 9
    assert report["bound"]["source"] == "serre"
    assert report["characterization"] is None


def test_oracle_budget_refusal(tmp_path):
    code, report, _ = run_cli(
        ["oracle", "--p", "2", "--e", "1", "--n", "3", "--d", "3"], tmp_path
    )
    assert code == 2
    assert "error" in report


def test_shard_merge_byte_identical(tmp_path):
    base = ["oracle", "--p", "2", "--e", "1", "--n", "2", "--d", "2"]
    partial_paths = []
    for i in range(4):
        _, _, path = run_cli(base + ["--shard", f"{i}/4"], tmp_path, name=f"shard{i}.json")
        partial_paths.append(str(path))
    _, _, full_path = run_cli(base, tmp_path, name="full.json")
    code = main(["merge", *partial_paths, "--out", str(tmp_path / "merged.json")])
    assert code == 0
    assert (tmp_path / "merged.json").read_bytes() == full_path.read_bytes()
    # grouped merge: combine two halves first, then merge the halves
    assert main(["merge", *partial_paths[:2], "--out", str(tmp_path / "left.json")]) == 0
    assert main(["merge", *partial_paths[2:], "--out", str(tmp_path / "right.json")]) == 0
    left = json.loads((tmp_path / "left.json").read_text())
    assert left["partial"] is True and left["merged"] is True
    code = main(
        ["merge", str(tmp_path / "left.json"), str(tmp_path / "right.json"),
         "--out", str(tmp_path / "grouped.json")]
    )
    assert code == 0
    assert (tmp_path / "grouped.json").read_bytes() == full_path.read_bytes()


def test_rerun_byte_identical(tmp_path):
    args = ["construct", "--p", "2", "--e", "1", "--n", "3", "--d", "2"]
    _, _, first = run_cli(args, tmp_path, name="a.json")
    _, _, second = run_cli(args, tmp_path, name="b.json")
    assert first.read_bytes() == second.read_bytes()


def test_construct_report(tmp_path):
    code, report, _ = run_cli(["construct", "--p", "2", "--e", "1", "--n", "4", "--d", "2"], tmp_path)
    assert code == 0
    w = report["witness"]
    assert w["predicted_count"] == 93 and w["intersection_count"] == 93
    c = report["code"]
    assert c["witness_weight"] == 88 and c["matches_theoretical"] is True
    assert len(c["codeword_support"]) == 88


def test_construct_q3(tmp_path):
    code, report, _ = run_cli(["construct", "--p", "3", "--e", "1", "--n", "3", "--d", "3"], tmp_path)
    assert code == 0
    assert report["witness"]["intersection_count"] == 109
    assert report["code"]["m"] == 253
    assert report["code"]["witness_weight"] == 144


def test_cli_stdout(capsys):
    code = main(["params", "--p", "2", "--e", "1", "--n", "2", "--d", "1"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["computed"]["dmin"] == 8
