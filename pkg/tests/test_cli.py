import json

import pytest

from bellmatch.bellinger import rank
from bellmatch.cli import main
from bellmatch.loader import career2019_paths, load_career2019


@pytest.fixture(scope="module")
def career_args():
    criteria_path, alternatives_path = career2019_paths()
    return ["--criteria", str(criteria_path), "--alternatives", str(alternatives_path)]


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_table(capsys, career_args):
    code, out, err = run_cli(capsys, ["rank", *career_args])
    assert code == 0
    assert err == ""
    assert "best: p4" in out


def test_rank_json_reparses_to_in_memory_result(capsys, career_args):
    code, out, _ = run_cli(capsys, ["rank", *career_args, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    ranking = rank(load_career2019())
    assert doc["best"] == ranking.best
    assert tuple(doc["order"]) == ranking.order
    for aid, total in ranking.totals.items():
        assert abs(doc["totals"][aid] - total) <= 1e-9


def test_match_outputs_reference_pairs(capsys, career_args):
    code, out, _ = run_cli(capsys, ["match", *career_args, "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert [tuple(p) for p in doc["matching"]["pairs"]] == [
        ("c1", "p4"), ("c2", "p3"), ("c3", "p1"), ("c4", "p2"), ("c5", "p5")
    ]
    assert doc["matching"]["proposer_side"] == "a"


def test_match_alternative_proposers_same_pairs_here(capsys, career_args):
    code, out, _ = run_cli(
        capsys, ["match", *career_args, "--proposers", "alternatives", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert [tuple(p) for p in doc["matching"]["pairs"]] == [
        ("c1", "p4"), ("c2", "p3"), ("c3", "p1"), ("c4", "p2"), ("c5", "p5")
    ]
    assert doc["matching"]["proposer_side"] == "b"


def test_match_row_value_strategy_runs(capsys, career_args):
    code, out, _ = run_cli(
        capsys, ["match", *career_args, "--strategy", "row-value", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["matching"]["pairs"]) == 5


def test_compare_reports_top_pair(capsys, career_args):
    code, out, _ = run_cli(capsys, ["compare", *career_args])
    assert code == 0
    assert "best variant by total rating: p4" in out
    assert "top pair: c1-p4" in out
    assert "top pair partner equals best variant: yes" in out


def test_subsets_prints_exact_count(capsys):
    code, out, err = run_cli(capsys, ["subsets", "--n", "11", "--k", "5"])
    assert code == 0
    assert out == "462\n"
    assert err == ""


def test_subsets_invalid_exits_1(capsys):
    code, out, err = run_cli(capsys, ["subsets", "--n", "5", "--k", "6"])
    assert code == 1
    assert "invalid subset size" in err


def test_sensitivity_runs_are_byte_identical(capsys, career_args):
    argv = ["sensitivity", *career_args, "--delta", "0.01", "--samples", "200", "--seed", "11"]
    code1, out1, _ = run_cli(capsys, argv)
    code2, out2, _ = run_cli(capsys, argv)
    assert code1 == code2 == 0
    assert out1.encode() == out2.encode()
    assert "base best: p4" in out1


def test_data_error_exits_1(capsys, tmp_path, career_args):
    missing = str(tmp_path / "missing.csv")
    code, out, err = run_cli(
        capsys, ["rank", "--criteria", missing, "--alternatives", missing]
    )
    assert code == 1
    assert err.startswith("error:")


def test_validation_error_exits_1(capsys, tmp_path, career_args):
    criteria_path, _ = career2019_paths()
    empty = tmp_path / "alts.csv"
    empty.write_text("id,name," + ",".join(f"c{i}" for i in range(1, 12)) + "\n")
    code, out, err = run_cli(
        capsys, ["rank", "--criteria", str(criteria_path), "--alternatives", str(empty)]
    )
    assert code == 1
    assert "at least 2 alternatives required" in err


def test_clamp_flag_allows_out_of_range_data(capsys, tmp_path):
    criteria_path, alternatives_path = career2019_paths()
    text = alternatives_path.read_text(encoding="utf-8").replace("2502.87", "1000")
    patched = tmp_path / "alts.csv"
    patched.write_text(text, encoding="utf-8")
    argv = ["rank", "--criteria", str(criteria_path), "--alternatives", str(patched)]
    assert run_cli(capsys, argv)[0] == 1
    code, out, _ = run_cli(capsys, [*argv, "--clamp"])
    assert code == 0
    assert "best:" in out


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["rank"])  # required flags missing
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["unknown-command"])
    assert excinfo.value.code == 2
