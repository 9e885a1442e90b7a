import json

import pytest

from skewkit.cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, build_parser, main

STAIRCASE = '{"lambda": [4, 3, 2, 1], "mu": [2]}'
STAIRCASE_T = '{"lambda": [4, 3, 2, 1], "mu": [1, 1]}'
HOOK = '{"lambda": [2, 1]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--diagram", '{"lambda": [2, 2], "mu": [1]}')
    assert code == EXIT_OK
    assert out == '[{"partition":[2,1],"coeff":1}]'


def test_equal_reports_equivalence(capsys):
    code, out, _ = run(capsys, "--format", "text", "equal", "--a", STAIRCASE, "--b", STAIRCASE_T)
    assert code == EXIT_OK
    assert out == "equivalent"


def test_equal_reports_first_difference(capsys):
    code, out, _ = run(capsys, "equal", "--a", '{"lambda": [2]}', "--b", '{"lambda": [1, 1]}')
    assert code == EXIT_FAILED
    payload = json.loads(out)
    assert payload["equivalent"] is False
    assert payload["first_difference"] == {"partition": [1, 1], "coeff_a": 0, "coeff_b": 1}


def test_invalid_input_exits_with_two(capsys):
    code, out, err = run(capsys, "expand", "--diagram", "not-json")
    assert code == EXIT_INVALID
    assert out == ""
    assert err.startswith("error:")

    code, _, _ = run(capsys, "expand", "--diagram", '{"lambda": [1, 2]}')
    assert code == EXIT_INVALID


def test_diagram_argument_from_file(capsys, tmp_path):
    path = tmp_path / "hook.json"
    path.write_text(HOOK, encoding="utf-8")
    code, out, _ = run(capsys, "expand", "--diagram", str(path))
    assert code == EXIT_OK
    assert json.loads(out) == [{"partition": [2, 1], "coeff": 1}]


def test_compose_with_verification(capsys):
    code, out, _ = run(capsys, "compose", "--d", HOOK, "--e", HOOK, "--w", '{"lambda": [1]}', "--verify")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["composed"] == json.loads(STAIRCASE)
    assert payload["case"] == "d"
    assert payload["identity"]["holds"] is True


def test_compose_rejects_bad_placement(capsys):
    code, _, err = run(capsys, "compose", "--d", HOOK, "--e", HOOK, "--w", '{"lambda": [2]}')
    assert code == EXIT_INVALID
    assert "error:" in err


def test_hypotheses(capsys):
    code, out, _ = run(capsys, "hypotheses", "--e", HOOK, "--w", '{"lambda": [1]}')
    assert code == EXIT_OK
    assert json.loads(out)["overall_I_to_IV"] is True

    code, out, _ = run(capsys, "hypotheses", "--e", HOOK, "--all")
    assert code == EXIT_OK
    assert len(json.loads(out)) >= 2


def test_hamel_goulden(capsys):
    code, out, _ = run(capsys, "hg", "--diagram", '{"lambda": [3, 3, 3, 1], "mu": [1]}', "--show-matrix")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["intervals"] == [[-3, 2], [-1, 1]]
    assert len(payload["matrix"]) == 2


def test_sylvester(capsys):
    code, out, _ = run(capsys, "sylvester", "--matrix", "[[2, 1, 0], [1, 3, 1], [0, 1, 4]]", "--subset", "[1]")
    assert code == EXIT_OK
    assert json.loads(out) == {"holds": True}

    code, _, _ = run(capsys, "sylvester", "--matrix", "[[1, 2], [3, 4]]", "--subset", "[0, 1]")
    assert code == EXIT_INVALID

    code, _, _ = run(capsys, "sylvester", "--matrix", "[[1, 2]]", "--subset", "[]")
    assert code == EXIT_INVALID


def test_render(capsys):
    code, out, _ = run(capsys, "--format", "text", "render", "--diagram", HOOK, "--w", '{"lambda": [1]}')
    assert code == EXIT_OK
    assert out == "×w\nw"


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "--diagram", STAIRCASE, "--max-cells", "8")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["irreducible"] is False
    assert payload["chain"]["predicted_class_size"] == 4


def test_classes_writes_report(capsys, tmp_path):
    out_path = tmp_path / "classes.json"
    code, out, _ = run(capsys, "classes", "--max-cells", "4", "--workers", "1", "--out", str(out_path))
    assert code == EXIT_OK
    summary = json.loads(out)
    assert summary["diagrams"] == 16
    assert summary["nontrivial"] == []
    assert len(json.loads(out_path.read_text(encoding="utf-8"))["classes"]) == summary["class_count"]


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "properties", "--max-cells", "3", "--seed", "2")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["suite"] == "properties"
    assert payload["passed"] is True


def test_parser_rejects_unknown_suite():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["verify", "--suite", "bogus"])


@pytest.mark.parametrize("payload", [
    '{"lambda": "ab"}',
    '{"lambda": [2, 1], "mu": 5}',
    '{"lambda": [1.5, 1]}',
    '{"lambda": null}',
    '{"art": 5}',
    '{"cells": [[0, "x"]]}',
    '{"cells": [[0, 0, 1]]}',
    '[2, 1]',
])
def test_malformed_diagram_json_exits_with_two(capsys, payload):
    code, out, err = run(capsys, "expand", "--diagram", payload)
    assert code == EXIT_INVALID
    assert out == ""
    assert err.startswith("error:")


@pytest.mark.parametrize("workers", ["0", "-3", "many"])
def test_classes_rejects_bad_worker_counts(capsys, workers):
    with pytest.raises(SystemExit) as exc:
        main(["classes", "--max-cells", "3", "--workers", workers])
    assert exc.value.code == EXIT_INVALID


def test_invalid_input_is_logged_to_file_only(capsys, settings_env, tmp_path):
    settings_env(log_dir=tmp_path)
    code, _, err = run(capsys, "expand", "--diagram", '{"lambda": [1, 2]}')
    assert code == EXIT_INVALID
    assert err.strip().splitlines() == [err.strip()]
    assert err.startswith("error:")
    entries = (tmp_path / "skewkit_error.log").read_text(encoding="utf-8").strip().splitlines()
    record = json.loads(entries[-1].split(" - ", 3)[3])
    assert record["category"] == "cli"
    assert record["data"]["error_type"] == "InvalidDiagramError"
