import csv
import io
import json
import subprocess
import sys

import pytest

from hurwitz_atlas.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_hurwitz_example():
    res = call_json("hurwitz", "--surface", "sphere", "--profiles", "2,1;2,1;2,1;2,1")
    assert res["value"] == "9/2"
    assert res["degree"] == 3 and res["euler_char"] == 2
    assert res["schema"] == "hurwitz-atlas/1"


def test_hurwitz_no_profiles_needs_degree():
    assert call("hurwitz", "--surface", "torus")[0] == 2
    assert call_json("hurwitz", "--surface", "torus", "--degree", "30")["value"] == "5604"


@pytest.mark.parametrize(
    "argv",
    [
        ["hurwitz", "--surface", "rp2", "--profiles", "2", "--degree", "3"],
        ["hurwitz", "--surface", "rp2", "--profiles", "2;2,1"],
        ["hurwitz", "--surface", "rp2", "--profiles", "2,x"],
        ["hurwitz", "--surface", "moon", "--profiles", "2"],
        ["hurwitz", "--surface", "sphere", "--profiles", "2", "--exponent", "2"],
        ["map", "--faces", "(1,2"],
        ["map", "--faces", "(1,2)"],
        ["classmul", "--d", "3", "--a", "2", "--b", "3"],
        ["wick", "--faces", "(1,-1)", "--degree", "2", "--profiles", "2"],
        ["verify", "--suite", "nonsense"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


def test_resource_limits():
    assert call("oracle", "--surface", "torus", "--degree", "8")[0] == 3
    assert call("oracle", "--surface", "genus:2", "--degree", "5", "--budget", "100")[0] == 3
    assert call("char", "--d", "13")[0] == 3
    assert call("--char-cap", "4", "char", "--d", "5")[0] == 3
    assert call("--degree-cap", "3", "series", "--kind", "bkp", "--max-degree", "5")[0] == 3


def test_oracle():
    res = call_json("oracle", "--surface", "sphere", "--profiles", "2,1;2,1;2,1;2,1")
    assert res["count"] == 27 and res["value"] == "9/2"
    naive = call_json("oracle", "--surface", "klein", "--degree", "2", "--naive")
    assert naive["count"] == 4 and naive["naive"]


def test_weighted(tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"3": "1", "2,1": "1", "1,1,1": "1"}))
    res = call_json("hurwitz", "--surface", "sphere", "--profiles", "2,1;2,1", "--weight-file", str(path))
    assert res["value"] == call_json("hurwitz", "--surface", "sphere", "--profiles", "2,1;2,1")["value"]
    path.write_text(json.dumps({"3": "1"}))
    assert call("hurwitz", "--surface", "sphere", "--profiles", "2,1", "--weight-file", str(path))[0] == 2


def test_max_length():
    res = call_json("hurwitz", "--surface", "torus", "--degree", "5", "--max-length", "1")
    assert res["value"] == "1"


def test_char_csv_rows_revlex():
    code, out, _ = call("char", "--d", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["lambda", "dim", "4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert [r[0] for r in rows[1:]] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert rows[2] == ["3,1", "3", "-1", "0", "-1", "1", "3"]


def test_char_json():
    res = call_json("char", "--d", "3")
    assert list(res["rows"]) == ["3", "2,1", "1,1,1"]
    assert res["rows"]["2,1"]["chi"] == {"3": -1, "2,1": 0, "1,1,1": 2}


def test_classmul():
    res = call_json("classmul", "--d", "3", "--a", "2,1", "--b", "2,1")
    assert res["product"] == {"3": "3", "1,1,1": "3"}
    assert list(res["product"]) == ["3", "1,1,1"]
    brute = call_json("classmul", "--d", "3", "--a", "2,1", "--b", "2,1", "--brute-force")
    assert brute["product"] == res["product"]


def test_map_commands():
    res = call_json("map", "--faces", "(1,2,-1,-2)")
    assert res["ok"] and res["euler_char"] == 0 and res["V"] == 1
    dual = call_json("map", "--faces", "(1,-1)", "dual")
    assert dual["star_words"] == [[1], [-1]]
    assert call_json("map", "--faces", "(1) (-1)", "euler")["euler_char"] == 2


def test_wick():
    res = call_json("wick", "--faces", "(1,-1)", "--degree", "2", "--profiles", "2;2")
    assert res["value"] == res["engine_value"] == "1/2"
    res = call_json("wick", "--faces", "(1,-1)", "--degree", "2", "--profiles", "1,1;1,1", "--face-profiles", "2")
    assert res["value"] == res["engine_value"] == "0"


def test_series():
    bkp = call_json("series", "--kind", "bkp", "--max-degree", "2")
    assert bkp["series"]["coefficients"] == {"": "1", "1": "1", "1,1": "1"}
    rp2 = call_json("series", "--kind", "rp2", "--max-degree", "3")
    entry = next(e for e in rp2["entries"] if e["profile"] == "3")
    assert entry["value"] == "1/3"
    simple = call_json("series", "--kind", "simple", "--max-degree", "3", "--max-u", "4")
    assert simple["series"]["components"][4]["1,1,1"] == "9/2"


def test_verify_single_suite():
    res = call_json("verify", "--suite", "characters,symfun", "--max-degree", "4")
    assert res["ok"] and [s["suite"] for s in res["suites"]] == ["characters", "symfun"]


def test_verify_all():
    code, out, err = call("verify", "--suite", "all", "--max-degree", "4")
    assert code == 0, out
    assert json.loads(out)["ok"]


def test_deterministic_output():
    argv = ["series", "--kind", "simple", "--max-degree", "4", "--max-u", "2"]
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hurwitz_atlas", "hurwitz", "--surface", "klein", "--degree", "2"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["value"] == "2"


def test_cap_flags_do_not_leak():
    from hurwitz_atlas import symfun

    before = symfun.DEFAULT_DEGREE_CAP
    assert call("--degree-cap", "2", "series", "--kind", "bkp", "--max-degree", "4")[0] == 3
    assert symfun.DEFAULT_DEGREE_CAP == before
