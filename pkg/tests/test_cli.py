import json
import os
import re
import shlex
from pathlib import Path

import pytest

from isomerism.cli import main

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).parent / "golden"


def readme_examples():
    """(command, documented output or None) for every ``$ isomerism`` line in README console blocks."""
    text = (ROOT / "README.md").read_text(encoding="utf-8")
    out = []
    for block in re.findall(r"```console\n(.*?)```", text, re.S):
        current = None
        for line in block.splitlines():
            if line.startswith("$ "):
                current = [line[2:], []]
                out.append(current)
            elif current is not None:
                current[1].append(line)
    return [(cmd, "\n".join(lines) + "\n" if lines else None) for cmd, lines in out]


def slug(cmd):
    return re.sub(r"[^A-Za-z0-9]+", "-", cmd).strip("-")


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


EXAMPLES = readme_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 8
    assert all(cmd.startswith("isomerism ") for cmd, _ in EXAMPLES)


@pytest.mark.parametrize("cmd,shown", EXAMPLES, ids=[slug(c) for c, _ in EXAMPLES])
def test_readme_example_matches_golden(cmd, shown, capsys, monkeypatch):
    monkeypatch.chdir(ROOT)
    code, out, _ = run(shlex.split(cmd)[1:], capsys)
    assert code == 0
    path = GOLDEN / f"{slug(cmd)}.txt"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")
    if shown is not None:
        assert out == shown


def test_repeated_runs_identical(capsys, monkeypatch):
    monkeypatch.chdir(ROOT)
    for cmd in ["inverse --constraints data/main_query.json",
                "identify --preset thm21-s3 --format json",
                "orbits --preset thm21-c6 --shape 4,1,1 --format json"]:
        first = run(shlex.split(cmd), capsys)[1]
        second = run(shlex.split(cmd), capsys)[1]
        assert first == second and first


def test_count_example(capsys):
    assert run(["count", "--group", "(123456)", "--shape", "4,2"], capsys)[:2] == (0, "3\n")


def test_orbits_json_contains_size_two_orbit(capsys):
    code, out, _ = run(["orbits", "--preset", "thm21-s3", "--shape", "3,3", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data["orbits"]) == 4
    small = [o for o in data["orbits"] if o["size"] == 2]
    assert small and set(small[0]["members"]) == {"({1,2,3},{4,5,6})", "({4,5,6},{1,2,3})"}


def test_genetic_dot_edges(capsys):
    code, out, _ = run(["genetic", "--preset", "thm21-c6", "--upper", "4,2", "--lower", "3,3",
                        "--format", "dot"], capsys)
    assert code == 0 and out.count("->") == 9


def test_genetic_verbose_json(capsys):
    code, out, _ = run(["genetic", "--preset", "thm21-s3", "--upper", "4,2", "--lower", "4,1,1",
                        "--format", "json", "--verbose"], capsys)
    data = json.loads(out)
    assert len(data["edges"]) == 5
    assert sum(m for _, _, m in data["multiplicity"]) > 0
    assert len(data["lower_orbits"]) == 5


def test_inverse_json_and_stats(capsys, monkeypatch):
    monkeypatch.chdir(ROOT)
    code, out, err = run(["inverse", "--constraints", "data/main_query.json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["classes"]) == 3
    assert "search_stats" not in out
    assert json.loads(err)["search_stats"]["matched"] == 3
    gens = [g for c in data["classes"] for g in c["group"]["generators"]]
    assert all(g.startswith("(") for g in gens)


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.dot"
    code, out, _ = run(["identify", "--preset", "thm21-c6", "--format", "dot", "--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8").startswith("digraph")


def test_verify_all_classes(capsys):
    code, out, _ = run(["verify", "--all-classes", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert data["burnside_vs_enumeration"]["groups"] == 56
    assert len(data["linear_system"]) == 4


def test_verify_failure_exits_2(capsys, monkeypatch):
    import isomerism.cli as cli
    monkeypatch.setattr(cli, "burnside_count", lambda G, lam: -1)
    code, out, _ = run(["verify", "--preset", "thm21-c6"], capsys)
    assert code == 2 and out.rstrip().endswith("FAIL")


def error_of(err):
    return json.loads(err)["error"]


@pytest.mark.parametrize("argv,kind", [
    (["count", "--group", "(12", "--shape", "4,2"], "parse_error"),
    (["count", "--preset", "nope", "--shape", "4,2"], "unknown_preset"),
    (["count", "--group", "(123)", "--shape", "4,2", "--shape", "3,1"], "validation_error"),
    (["count", "--group", "(17)", "--shape", "4,2"], "parse_error"),
    (["count", "--group", "(12)", "--shape", "4,2", "--degree", "7"], "validation_error"),
    (["count", "--shape", "4,2"], "validation_error"),
    (["count", "--group", "(12)", "--shape", "2,4"], "validation_error"),
    (["genetic", "--preset", "thm21-c6", "--upper", "3,3", "--lower", "4,1,1"], "validation_error"),
    (["identify", "--preset", "thm21-c6", "--shape", "3,3", "--shape", "4,1,1"], "validation_error"),
    (["bogus"], "validation_error"),
    (["count", "--preset", "thm21-c6", "--shape", "3,2"], "validation_error"),
])
def test_errors_are_json(argv, kind, capsys):
    code, out, err = run(argv, capsys)
    assert code == 1 and out == ""
    assert error_of(err)["type"] == kind


def test_parse_error_has_position(capsys):
    err = run(["count", "--group", "(12)(13)", "--shape", "4,2"], capsys)[2]
    e = error_of(err)
    assert e["position"] == 5 and e["text"] == "(12)(13)"


def test_unknown_preset_lists_presets(capsys):
    e = error_of(run(["census", "--preset", "nope"], capsys)[2])
    assert e["presets"] == ["thm21-c6", "thm21-d12", "thm21-s3"]


def test_bad_constraint_files(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('[{"shape": [4, 2], "relation": ">", "value": 3}]', encoding="utf-8")
    assert run(["inverse", "--constraints", str(bad)], capsys)[0] == 1
    assert run(["inverse", "--constraints", str(tmp_path / "missing.json")], capsys)[0] == 1
    bad.write_text('[{"shape": [4, 2], "relation": "=", "value": 3}, '
                   '{"shape": [3, 1], "relation": "=", "value": 1}]', encoding="utf-8")
    assert error_of(run(["inverse", "--constraints", str(bad)], capsys)[2])["type"] == "validation_error"


def test_internal_inconsistency_exit_3(capsys, monkeypatch):
    import isomerism.cli as cli
    from isomerism.tabloids import InternalConsistencyError

    def boom(G, lam):
        raise InternalConsistencyError("non-integral orbit count")
    monkeypatch.setattr(cli, "burnside_count", boom)
    code, _, err = run(["count", "--preset", "thm21-c6", "--shape", "4,2"], capsys)
    assert code == 3 and error_of(err)["type"] == "internal_inconsistency"
