import io
import json

import pytest

from src.cli import build_parser, run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_genfun_text():
    code, text = invoke("genfun", "--basis", "2,0,0,1", "--format", "text")
    assert code == 0
    assert text == "R^2 + 2*D*R + D^2 + L^2\nZ(1,1,1) = 5\n"


@pytest.mark.parametrize("method", ["determinant", "permanent", "census"])
def test_genfun_json_methods_agree(method):
    code, text = invoke("genfun", "--basis", "2,2,-2,4", "--method", method)
    assert code == 0
    payload = json.loads(text)
    assert payload["hnf"] == {"a": 6, "b": 2, "c": 2}
    assert payload["basis"] == [[2, -2], [2, 4]]
    assert payload["method"] == method
    assert len(payload["polynomial"]) == 10
    assert payload["count"] == sum(term["coeff"] for term in payload["polynomial"])


def test_rank_deficient_basis_exits_1(capsys):
    code, _ = invoke("genfun", "--basis", "1,2,2,4")
    assert code == 1
    assert "rank-deficient lattice" in capsys.readouterr().err


def test_malformed_basis_exits_2():
    assert invoke("genfun", "--basis", "1,2,3")[0] == 2
    assert invoke("genfun", "--basis", "a,b,c,d")[0] == 2


def test_usage_errors_exit_2():
    assert invoke("bogus")[0] == 2
    assert invoke("genfun")[0] == 2
    assert invoke("render", "--basis", "1,0,0,1")[0] == 2


def test_cap_exceeded_exits_1(capsys):
    code, _ = invoke("enumerate", "--basis", "2,2,-2,4", "--cap", "10")
    assert code == 1
    assert "cap exceeded" in capsys.readouterr().err


def test_enumerate_text():
    code, text = invoke("enumerate", "--basis", "2,0,0,1", "--format", "text")
    assert code == 0
    assert [line.split("\t")[0] for line in text.splitlines()] == ["LL", "DD", "DR", "RD", "RR"]


def test_types_json():
    code, text = invoke("types", "--basis", "2,2,-2,4")
    payload = json.loads(text)
    assert code == 0
    assert payload["summary"]["monomials"] == 10
    assert len(payload["types"]) == 10


def test_classes_text():
    code, text = invoke("classes", "--basis", "2,0,0,1", "--mod-shift", "--format", "text")
    assert code == 0
    assert text == "R^2 + D*R + D^2 + L^2\nZ(1,1,1) = 4\n"


def test_classes_json_with_involution():
    code, text = invoke("classes", "--basis", "2,2,-2,4", "--mod-shift", "--mod-involution")
    payload = json.loads(text)
    assert code == 0
    assert payload["mod_involution"] is True
    assert payload["orbits"] == payload["count"]


def test_flips_json():
    code, text = invoke("flips", "--basis", "2,2,-2,4", "--fingerprint", "0,3")
    payload = json.loads(text)
    assert code == 0
    assert payload["type"] == {"L": 2, "D": 2, "R": 8}
    assert payload["connected"] is True
    assert payload["site_counts"]["LLRRRDRDRRRR"] == 2


def test_flips_unrealizable_fingerprint_exits_1():
    assert invoke("flips", "--basis", "2,2,-2,4", "--fingerprint", "0,1")[0] == 1


def test_render_counts():
    code, text = invoke("render", "--basis", "1,0,0,1", "--cells", "R", "--reps", "1")
    assert code == 0
    assert text.count("<polygon") == 1
    code, text = invoke("render", "--basis", "2,0,0,1", "--cells", "DR", "--reps", "2")
    assert text.count("<polygon") == 8


def test_render_invalid_cells_exits_1():
    assert invoke("render", "--basis", "2,0,0,1", "--cells", "LD")[0] == 1


def test_render_fingerprint_to_file(tmp_path):
    path = tmp_path / "plane.svg"
    code, text = invoke(
        "render", "--basis", "2,2,-2,4", "--fingerprint", "0,3", "--method", "octants", "--out", str(path)
    )
    assert code == 0
    assert text == ""
    assert path.read_text().count('class="lozenge-R"') == 9 * 8


def test_render_tiling_file_basis_mismatch(tmp_path):
    path = tmp_path / "strip.json"
    path.write_text(json.dumps({"hnf": {"a": 2, "b": 1, "c": 0}, "cells": "DR"}))
    assert invoke("render", "--tiling", str(path), "--reps", "1")[0] == 0
    assert invoke("render", "--tiling", str(path), "--basis", "1,0,0,1")[0] == 1


def test_verify_passes_and_is_deterministic():
    code, first = invoke("verify", "--max-index", "6")
    assert code == 0
    assert json.loads(first)["passed"] is True
    assert invoke("verify", "--max-index", "6")[1] == first


def test_verify_text_with_extra_basis():
    code, text = invoke("verify", "--max-index", "2", "--basis", "2,2,-2,4", "--format", "text")
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "passed"
    assert lines[-2].startswith("(6,2,2)\t")


def test_parser_defaults():
    args = build_parser().parse_args(["genfun", "--basis", "1,0,0,1"])
    assert args.cap is None
    assert args.format == "json"
    assert args.method == "determinant"


def test_permanent_uses_its_own_default_cap(capsys):
    code, _ = invoke("genfun", "--basis", "15,0,0,1", "--method", "permanent")
    assert code == 1
    assert "permanent cap exceeded: index 15 > cap 14" in capsys.readouterr().err
    assert invoke("genfun", "--basis", "2,0,0,1", "--method", "permanent", "--cap", "2")[0] == 0


def test_render_unsupported_extension_exits_2(tmp_path):
    code, _ = invoke("render", "--basis", "2,0,0,1", "--cells", "DR", "--out", str(tmp_path / "x.txt"))
    assert code == 2
    assert not (tmp_path / "x.txt").exists()


def test_render_missing_tiling_file_exits_1(tmp_path, capsys):
    code, _ = invoke("render", "--tiling", str(tmp_path / "absent.json"))
    assert code == 1
    assert capsys.readouterr().err.startswith("error:")


@pytest.mark.parametrize(
    "content",
    [
        json.dumps({"hnf": {"a": 2, "b": 1, "c": 5}, "cells": "DR"}),
        json.dumps({"hnf": {"a": 2, "b": 1, "c": 0}}),
        json.dumps(["DR"]),
        "{not json",
    ],
)
def test_render_malformed_tiling_file_exits_1(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    assert invoke("render", "--tiling", str(path))[0] == 1


def test_verify_writes_report(tmp_path):
    path = tmp_path / "reports" / "verify.json"
    code, text = invoke("verify", "--max-index", "3", "--out", str(path))
    assert code == 0
    report = json.loads(path.read_text())
    assert report == json.loads(text)
    assert all(entry["checks"]["homogeneous_degree"] for entry in report["lattices"])
