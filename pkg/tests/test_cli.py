import pytest

from schurkit.cli import main

EXPANSION_E_GOLDEN = """\
[3,2] 1
[3,1,1] 1
[2,2,1] 2
[2,1,1,1] 2
[1,1,1,1,1] 1
"""

EXPANSION_H_GOLDEN = """\
[5] 1
[4,1] 2
[3,2] 2
[3,1,1] 1
[2,2,1] 1
"""

PW_GOLDEN = """\
1 2 3 3 4
3 4 5
4
7
shape [5,3,1,1]
greene [5,3,1,1] [4,2,2,1,1]
"""

CANONICAL_GOLDEN = """\
1 1 1 1 2 2 3
2 2 3
3 3
"""


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_pw_golden(capsys):
    code, out = run(capsys, ["pw", "1374433254"])
    assert code == 0
    assert out == PW_GOLDEN


def test_pw_greene_example(capsys):
    code, out = run(capsys, ["pw", "2133"])
    assert code == 0
    assert out.endswith("shape [3,1]\ngreene [3,1] [2,1,1]\n")


def test_expand_goldens(capsys):
    code, out = run(capsys, ["expand", "[2,2,1]", "--from", "e", "--to", "s"])
    assert code == 0 and out == EXPANSION_E_GOLDEN
    code, out = run(capsys, ["expand", "[2,2,1]", "--from", "h", "--to", "s"])
    assert code == 0 and out == EXPANSION_H_GOLDEN
    code, out = run(capsys, ["expand", "[2]", "--from", "s", "--to", "s"])
    assert code == 0 and out == "[2] 1\n"
    code, out = run(capsys, ["expand", "[1,1]", "--from", "m", "--to", "s"])
    assert code == 0 and out == "[1,1] 1\n"
    code, out = run(capsys, ["expand", "[2]", "--from", "m", "--to", "s"])
    assert code == 0 and out == "[2] 1\n[1,1] -1\n"


def test_kostka(capsys):
    code, out = run(capsys, ["kostka", "[3,2]", "[2,2,1]"])
    assert code == 0 and out == "2\n"
    code, out = run(capsys, ["kostka", "[7,3,2]", "[4,4,4]", "--canonical"])
    assert code == 0 and out == CANONICAL_GOLDEN


def test_schur_methods_agree(capsys):
    outputs = set()
    for method in ("bialternant", "jt-h", "jt-e", "tableaux", "abacus"):
        code, out = run(capsys, ["schur", "[2,1]", "--vars", "3", "--method", method])
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1
    code, out = run(capsys, ["schur", "[]", "--vars", "3"])
    assert code == 0 and out == "1\n"
    code, out = run(capsys, ["schur", "[1,1,1]", "--vars", "2"])
    assert code == 0 and out == "0\n"


def test_lr(capsys):
    code, out = run(capsys, ["lr", "[2,1]", "[2,1]"])
    assert code == 0
    assert out.splitlines()[3] == "[3,2,1] 2"
    code, out = run(capsys, ["lr", "[2,1]", "[2,1]", "--outer", "[3,2,1]"])
    assert code == 0 and out == "2\n"


def test_insert(tmp_path, capsys):
    f = tmp_path / "tab.txt"
    f.write_text("1 3 3 5 8\n2 4 6 6\n3 5 8\n4\n")
    code, out = run(capsys, ["insert", str(f), "3"])
    assert code == 0
    assert out == "1 3 3 3 8\n2 4 5 6\n3 5 6\n4 8\n"


def test_rsk(capsys):
    code, out = run(capsys, ["rsk", "0,1;1,0"])
    assert code == 0
    assert out == "P:\n1\n2\nQ:\n1\n2\n"
    code, out = run(capsys, ["rsk", "1,0;0,1", "--star"])
    assert code == 0
    code, out = run(capsys, ["rsk", "2", "--burge"])
    assert code == 0
    assert out == "P:\n1\n1\nQ:\n1\n1\n"


def test_abacus(capsys):
    code, out = run(capsys, ["abacus", "510032046"])
    assert code == 0
    assert out == "sign -1\nshape [3,3,2,2]\nweight 1*x1*x2^5*x3^4*x4^7*x6^8\n"


def test_paths(capsys):
    code, out = run(
        capsys, ["paths", "--model", "h", "--shape", "[2,1]", "--vars", "2"]
    )
    assert code == 0
    assert out.startswith("model h\nshape [2,1]\nvars 2\nnoncrossing systems: 2\n")
    assert "tableau:" in out and "weight" in out
    code, out = run(
        capsys, ["paths", "--model", "giambelli", "--shape", "[2,2]", "--vars", "2",
                 "--limit", "1"]
    )
    assert code == 0 and "system 1" in out


def test_outputs_are_stable_across_runs(capsys):
    commands = [
        ["expand", "[2,2,1]", "--from", "e", "--to", "s"],
        ["pw", "1374433254"],
        ["pw", "2133"],
        ["kostka", "[7,3,2]", "[4,4,4]", "--canonical"],
        ["schur", "[2,1]", "--vars", "3"],
        ["lr", "[2,1]", "[2,1]"],
        ["paths", "--model", "e", "--shape", "[2,1]", "--vars", "2"],
    ]
    for argv in commands:
        _, first = run(capsys, argv)
        _, second = run(capsys, argv)
        assert first == second and first.endswith("\n")


def test_error_exit_codes(capsys):
    assert main(["kostka", "[2,2]", "[3,1]", "--canonical"]) == 1
    capsys.readouterr()
    assert main(["schur", "[2,1", "--vars", "2"]) == 2
    capsys.readouterr()
    assert main(["schur", "[2]", "--vars", "notanint"]) == 2
    capsys.readouterr()
    assert main(["nosuchcommand"]) == 2
    capsys.readouterr()
    assert main(["insert", "/nonexistent/file", "3"]) == 1
    capsys.readouterr()
    with pytest.raises(SystemExit):
        from schurkit.cli import entrypoint

        import sys

        old = sys.argv
        sys.argv = ["schurkit", "schur", "[]", "--vars", "1"]
        try:
            entrypoint()
        finally:
            sys.argv = old
    capsys.readouterr()
