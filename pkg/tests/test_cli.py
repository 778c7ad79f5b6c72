import io
import json
import math
import xml.etree.ElementTree as ET
from collections import Counter
from pathlib import Path

import jsonschema
import pytest

from hexamoment.cli import main

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def check_schema(doc, name):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    jsonschema.validate(doc, schema)


def test_count_text_and_json():
    assert run("count", "1", "1", "1") == (0, "2\n")
    assert run("count", "2", "2", "2") == (0, "20\n")
    code, out = run("--format", "json", "count", "6", "6", "6")
    doc = json.loads(out)
    check_schema(doc, "count")
    assert doc["count"] == "1478619421136"


def test_format_after_subcommand():
    code, out = run("count", "2", "2", "2", "--format", "json")
    assert json.loads(out)["count"] == "20"


@pytest.mark.parametrize("argv", [
    ("count", "0", "1", "1"),
    ("count", "1", "1"),
    ("count", "x", "1", "1"),
    ("nonsense",),
    ("moments", "2", "2", "2", "--format", "csv"),
    ("--limit", "0", "count", "1", "1", "1"),
    ("sample", "1", "1", "1", "--count", "2", "--render", "svg"),
    ("verify", "1", "2"),
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as err:
        code, _ = run(*argv)
        raise SystemExit(code)
    assert err.value.code == 1


def test_limit_exit_code():
    assert run("--limit", "5", "count", "3", "3", "3")[0] == 3
    assert run("--limit", "5", "--force", "count", "3", "3", "3") == (0, "980\n")


def test_env_limit(monkeypatch):
    monkeypatch.setenv("HEXAMOMENT_LIMIT", "3")
    assert run("count", "3", "3", "3")[0] == 3
    assert run("--limit", "100", "count", "3", "3", "3")[0] == 0


def test_prob_table_unit_json():
    code, out = run("prob-table", "1", "1", "1")
    doc = json.loads(out)
    check_schema(doc, "prob-table")
    assert doc["rows"] == [{"x": 1, "y": 0, "p": "1/2"}, {"x": 1, "y": 1, "p": "1/2"}]
    assert doc["total"] == "1"


def test_prob_table_csv_footer():
    code, out = run("prob-table", "1", "1", "1", "--format", "csv")
    assert out.splitlines() == [
        "a,b,c,x,y,p_num,p_den",
        "1,1,1,1,0,1,2",
        "1,1,1,1,1,1,2",
        "1,1,1,*,*,1,1",
    ]
    code, out = run("prob-table", "3", "5", "4", "--format", "csv")
    assert out.splitlines()[-1] == "3,5,4,*,*,15,1"


def test_prob_table_float():
    code, out = run("--float", "prob-table", "2", "2", "2")
    doc = json.loads(out)
    check_schema(doc, "prob-table")
    assert all(math.isclose(r["p"]["float"], eval(r["p"]["exact"].replace("/", "/ "))) for r in doc["rows"])


def test_moments():
    code, out = run("moments", "2", "2", "2")
    doc = json.loads(out)
    check_schema(doc, "moments")
    assert code == 0 and doc["vertical"] == "18" and doc["consistent"] is True
    doc = json.loads(run("moments", "3", "5", "4")[1])
    assert doc["horizontal"] == "40"
    doc = json.loads(run("--float", "moments", "3", "5", "4")[1])
    check_schema(doc, "moments")
    assert doc["horizontal"] == {"exact": "40", "float": 40.0}


def test_moments_text():
    code, out = run("moments", "1", "1", "1", "--format", "text")
    assert "vertical 1" in out.splitlines()


def test_verify_ok_and_fault():
    code, out = run("verify", "--max", "2")
    doc = json.loads(out)
    check_schema(doc, "verify")
    assert code == 0 and doc["passed"] is True
    code, out = run("verify", "--inject-fault", "1", "1", "1")
    doc = json.loads(out)
    check_schema(doc, "verify")
    assert code == 2 and doc["passed"] is False
    assert any(not ch["passed"] for ch in doc["checks"])


def test_verify_text():
    code, out = run("verify", "2", "2", "2", "--format", "text")
    assert code == 0 and out.splitlines()[-1] == "ALL PASS"
    code, out = run("verify", "2", "2", "2", "--format", "text", "--inject-fault")
    assert code == 2 and out.splitlines()[-1] == "FAILURES"
    assert any(line.startswith("FAIL ") for line in out.splitlines())


def test_sample_deterministic():
    a = run("sample", "3", "5", "4", "--seed", "9", "--count", "3")
    b = run("sample", "3", "5", "4", "--seed", "9", "--count", "3")
    assert a == b and a[0] == 0
    doc = json.loads(a[1])
    check_schema(doc, "sample")
    assert [s["index"] for s in doc["samples"]] == [0, 1, 2]
    assert all(len(s["horizontals"]) == 15 for s in doc["samples"])


def test_sample_frequency_unit_box():
    n = 20_000
    doc = json.loads(run("sample", "1", "1", "1", "--seed", "5", "--count", str(n))[1])
    hits = Counter(tuple(s["horizontals"][0]) for s in doc["samples"])
    assert abs(hits[(1, 0)] - n / 2) <= 5 * math.sqrt(n / 4)


def test_sample_svg():
    code, out = run("sample", "3", "5", "4", "--render", "svg", "--seed", "1")
    root = ET.fromstring(out)
    ns = {"s": "http://www.w3.org/2000/svg"}
    kinds = Counter(p.get("class") for p in root.findall("s:polygon", ns))
    assert kinds["lozenge-h"] == 15
    assert out == run("sample", "3", "5", "4", "--render", "svg", "--seed", "1")[1]


def test_sample_ascii():
    code, out = run("sample", "2", "2", "2", "--render", "ascii")
    assert code == 0 and "=" in out
