import json

from click.testing import CliRunner

from eulersums.cli import main


def run(*args):
    return CliRunner().invoke(main, args)


def test_convert_index_to_word():
    res = run("convert", "--", "-1,2,2,-4,3,-5,-6")
    assert res.exit_code == 0
    assert "cacacaaabaabaaaacaaaaab" in res.output
    assert "g1g2g2b4b3g5b6" in res.output


def test_convert_word_to_index():
    res = run("convert", "acc")
    assert res.exit_code == 0
    assert "-2,1" in res.output


def test_convert_rejects_trailing_a():
    res = run("convert", "ba")
    assert res.exit_code == 2


def test_convert_rejects_garbage():
    res = run("convert", "2,x")
    assert res.exit_code == 2


def test_convert_json_stable():
    a = run("convert", "--format", "json", "acc").output
    b = run("convert", "--format", "json", "acc").output
    assert a == b
    doc = json.loads(a)
    assert doc["index"] == "-2,1" and doc["version"]


def test_reduce_weight2_fixture_check():
    res = run("reduce", "--weight", "2", "--check-fixtures")
    assert res.exit_code == 0
    assert "fixture check: PASS" in res.output


def test_reduce_weight3_json():
    res = run("reduce", "--weight", "3", "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["rows"]["3"] == ["8/1", "0/1", "0/1"]
    assert doc["corank"] == {"fds": 8, "fds_eds": 3}
    assert doc["integrality"] == []


def test_reduce_weight4_reports_row_not_in_fixture():
    res = run("reduce", "--weight", "4", "--check-fixtures")
    assert res.exit_code == 0
    assert "z(-1,-1,2) not in fixture" in res.output


def test_reduce_json_byte_stable():
    a = run("reduce", "--weight", "3", "--format", "json").output
    b = run("reduce", "--weight", "3", "--format", "json").output
    assert a == b


def test_reduce_usage_error():
    assert run("reduce", "--weight", "1").exit_code == 2


def test_verify_n1():
    res = run("verify", "--n", "1", "--prec", "30")
    assert res.exit_code == 0
    assert "PASS" in res.output


def test_verify_json():
    res = run("verify", "--n", "2", "--prec", "30", "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["ok"] is True
    assert doc["checks"]["1"]["key"]["ok"] is True


def test_eval_word():
    res = run("eval", "--prec", "30", "ab")
    assert res.exit_code == 0
    assert "1.6449340668" in res.output


def test_eval_index_json():
    res = run("eval", "--prec", "30", "--format", "json", "--", "-2,1")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["value"].startswith("0.150257112894")


def test_eval_divergent_is_usage_error():
    assert run("eval", "--", "1,2").exit_code == 2


def test_rank_command():
    res = run("rank", "--weight", "3", "--format", "json")
    doc = json.loads(res.output)
    assert doc["corank_fds_eds"] == 3 and doc["atoms"] == 12


def test_verify_json_stable_across_jobs():
    a = run("verify", "--n", "2", "--prec", "30", "--format", "json", "--jobs", "1")
    b = run("verify", "--n", "2", "--prec", "30", "--format", "json", "--jobs", "2")
    assert a.exit_code == 0 and b.exit_code == 0
    assert a.output == b.output


def test_reduce_zlobin_weight5_fixture():
    res = run("reduce", "--weight", "5", "--basis", "zlobin", "--check-fixtures", "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["fixture"]["mismatches"] == []
    assert doc["rows"]["3,1,1"][3] == "-448/39"
