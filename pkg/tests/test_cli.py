import io
import json
import subprocess
import sys

import jsonschema
import pytest

from supergrading import schemas
from supergrading.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_pyramids_json_validates():
    code, out, _ = call("pyramids", "--p", "3,1", "--q", "4,2")
    assert code == 0
    data = json.loads(out)
    for d in data:
        jsonschema.validate(d, schemas.PYRAMID)
    assert {tuple(r["f"] for r in d["rows"]) for d in data} >= {
        (-3, -3, -1, -1), (-3, -2, -1, 0), (-3, -1, -1, 1)}


def test_pyramids_art_and_table():
    code, out, _ = call("pyramids", "--p", "2", "--q", "1", "--format", "art")
    assert code == 0
    assert out.count("# ") == 3 and "[+] [+]" in out
    code, out, _ = call("pyramids", "--p", "2", "--q", "1", "--format", "table")
    assert out.splitlines()[0] == "index\toffsets\th"
    assert out.splitlines()[1] == "0\t-1,-1\t-1,1,-1"


def test_good_gradings_with_oracle():
    code, out, _ = call("good-gradings", "--p", "2", "--q", "1", "--oracle")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schemas.GOOD_GRADINGS)
    assert data["count"] == 3 and all(g["good"] for g in data["gradings"])
    assert data["oracle"] == {"margin": 3, "count": 3, "equal": True}


def test_dynkin_output():
    code, out, _ = call("dynkin", "--p", "3")
    data = json.loads(out)
    jsonschema.validate(data, schemas.DYNKIN)
    assert data["h"] == [-2, 0, 2]
    assert data["f"] == [[0, 2, 0], [0, 0, 2], [0, 0, 0]]
    assert data["sl2"] and data["good"] and data["goodViaCentralizer"]


def test_extend_examples():
    code, out, _ = call("extend", "--p", "3,1", "--q", "4,2")
    assert code == 0 and len(json.loads(out)) == 3
    code, out, _ = call("extend", "--p", "3,1", "--q", "4,2",
                        "--even-offsets=-2,-2", "--odd-offsets=-3,1")
    assert code == 0 and json.loads(out) == []


def test_centralizer_outputs():
    code, out, _ = call("centralizer", "--p", "3,1", "--q", "4,2")
    data = json.loads(out)
    jsonschema.validate(data, schemas.CENTRALIZER)
    assert (data["dimEven"], data["dimOdd"], data["agree"]) == (4, 0, True)
    code, out, _ = call("centralizer", "--algebra", "osp", "--p", "1", "--q", "1,1")
    data = json.loads(out)
    jsonschema.validate(data, schemas.CENTRALIZER)
    assert (data["dimEven"], data["dimOdd"], data["agree"]) == (3, 2, True)


def test_diagram_eq_output():
    code, out, _ = call("diagram-eq", "--word1", "ed", "--degrees1", "0",
                        "--word2", "de", "--degrees2", "0")
    data = json.loads(out)
    jsonschema.validate(data, schemas.DIAGRAM_EQ)
    assert data["equivalent"] and data["sameGrading"]
    assert data["witness"] == [{"kind": "odd", "k": 0}]
    code, out, _ = call("diagram-eq", "--word1", "ed", "--degrees1", "2",
                        "--word2", "de", "--degrees2", "2")
    data = json.loads(out)
    jsonschema.validate(data, schemas.DIAGRAM_EQ)
    assert data["witness"] is None and not data["sameGrading"]


@pytest.mark.parametrize("argv", [
    ("pyramids", "--p", "3,1", "--q", "4,2", "--format", "art"),
    ("good-gradings", "--p", "2,1", "--q", "2"),
    ("centralizer", "--p", "2,2", "--q", "2"),
    ("diagram-eq", "--word1", "eed", "--degrees1", "0,0", "--word2", "dee", "--degrees2", "0,0"),
])
def test_output_is_deterministic(argv):
    assert call(*argv) == call(*argv)


def test_exit_codes():
    assert call("pyramids", "--p", "2")[0] == 0
    # domain errors
    assert call("pyramids", "--p", "0,1")[0] == 1
    assert call("pyramids")[0] == 1
    code, _, err = call("centralizer", "--algebra", "osp", "--p", "2", "--q", "2")
    assert code == 1 and "orthosymplectic" in err
    assert call("centralizer", "--algebra", "osp", "--p", "1", "--q", "1")[0] == 1
    assert call("diagram-eq", "--word1", "ed", "--degrees1", "0",
                "--word2", "ee", "--degrees2", "0")[0] == 1
    # usage errors
    assert call("pyramids", "--p", "a,b")[0] == 2
    assert call("no-such-command")[0] == 2
    assert call()[0] == 2
    assert call("centralizer", "--algebra", "sp", "--p", "1")[0] == 2


def test_unsorted_partition_warns():
    code, out, err = call("pyramids", "--p", "1,3", "--q", "2,4")
    assert code == 0 and "warning" in err
    assert out == call("pyramids", "--p", "3,1", "--q", "4,2")[1]


def test_verify_scope_lines():
    code, out, _ = call("verify", "--scope", "groupoid", "--bound", "3")
    assert code == 0
    lines = [ln for ln in out.splitlines() if not ln.startswith("  ")]
    assert lines and all(": PASS (" in ln for ln in lines)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "supergrading", "dynkin", "--p", "2",
                           "--format", "art"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "[+] [+]\n"
