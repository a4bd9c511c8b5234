# -*- coding: utf-8 -*-
import io
import json

import pytest

from coxsig import RunConfig, normalize_type, run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv) + ["--quiet"], out=out)
    return code, out.getvalue()


def test_group_command():
    code, text = invoke("group", "H3")
    doc = json.loads(text)
    assert code == 0
    assert doc["order"] == "120" and doc["rank"] == 3


def test_sigvec_example_row():
    code, text = invoke("sigvec", "H3", "--alpha", "2,4,3", "--labeling", "example73")
    doc = json.loads(text)
    assert code == 0
    vec = [int(v) for v in doc["vector"]]
    assert sum(vec) == 1260
    assert sorted(v for v in vec if v) == [18, 36, 468, 738]
    assert len(doc["classes"]) == 10


def test_iss_b2_json():
    code, text = invoke("iss", "B2", "--format", "json", "--verify")
    doc = json.loads(text)
    assert code == 0
    assert len(doc["signatures"]) == 5
    assert doc["triangular"] is True
    assert doc["verification"]["passed"] is True


def test_iss_csv_has_header():
    code, text = invoke("iss", "A2", "--format", "csv")
    assert code == 0
    assert text.splitlines()[0].startswith("alpha,")


def test_cuspcheck_f4_partner():
    code, text = invoke("cuspcheck", "F4", "--word", "1213213234", "--target", "4")
    doc = json.loads(text)
    assert code == 0
    assert doc["flag"] == 0
    assert "elapsed" not in doc


def test_cuspcheck_output_independent_of_threads():
    base = ["cuspcheck", "F4", "--word", "1213213234", "--target", "5"]
    _, one = invoke(*base, "--threads", "1")
    _, four = invoke(*base, "--threads", "4")
    assert one == four
    assert json.loads(one)["flag"] == 1


def test_restrict_command():
    code, text = invoke("restrict", "--from", "S4", "--to", "S3", "--rep", "young:3,1")
    doc = json.loads(text)
    assert code == 0
    assert doc["decomposition"] == {"young:3": 1, "young:2,1": 1}


def test_dpoly_and_decompose(tmp_path):
    code, text = invoke("dpoly", "S3", "--rep", "reflection")
    assert code == 0
    doc = json.loads(text)
    path = tmp_path / "p.json"
    path.write_text(json.dumps(doc["poly"]))
    code, text = invoke("decompose", "A2", "--poly", str(path))
    assert code == 0
    assert json.loads(text)["decomposition"] == {"young:2,1": 1}


def test_classes_csv():
    code, text = invoke("classes", "A3", "--format", "csv")
    lines = text.splitlines()
    assert code == 0
    assert lines[0].split(",")[:3] == ["index", "name", "size"]
    assert len(lines) == 6


def test_cuspdata_export(tmp_path):
    path = tmp_path / "reps.json"
    code, text = invoke("cuspdata", "H3", "--output", str(path))
    assert code == 0
    assert json.loads(path.read_text()) == json.loads(text)


def test_verify_a2():
    code, text = invoke("verify", "A2", "--samples", "10")
    doc = json.loads(text)
    assert code == 0
    assert doc["passed"] is True
    assert "main_theorem" in doc["checks"]


def test_domain_error_exit_code():
    assert invoke("group", "Z9")[0] == 1
    assert invoke("sigvec", "H3", "--alpha", "1,2")[0] == 1


def test_usage_error_exit_code():
    assert invoke("frobnicate", "H3")[0] == 2
    assert invoke("sigvec", "H3")[0] == 2


def test_thread_count_is_a_usage_error():
    assert invoke("cuspcheck", "F4", "--word", "1213213234", "--target", "4", "--threads", "0")[0] == 2
    assert invoke("classes", "A2", "--threads", "dos")[0] == 2


def test_classes_latex():
    code, text = invoke("classes", "A3", "--format", "latex")
    assert code == 0
    assert text.lstrip().startswith("\\begin{tabular}")
    assert "\\end{tabular}" in text
    assert text.count("\\\\") >= 6


def test_output_is_deterministic():
    assert invoke("classes", "B3") == invoke("classes", "B3")


def test_type_aliases_and_config():
    assert normalize_type("S4") == "A3"
    assert normalize_type("H3") == "H3"
    with pytest.raises(ValueError):
        RunConfig("A2", "group", threads=0)
    with pytest.raises(ValueError):
        RunConfig("A2", "group", format="xml")
