import json

import pytest

from braidrep.cli import main
from braidrep.matrix import RepMatrix


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_trivial_exit_codes(capsys):
    code, out, _ = run(capsys, "trivial", "--n", "2", "--word", "1,-1")
    assert code == 0 and out.strip() == "trivial (LKB)"
    code, out, _ = run(capsys, "trivial", "--n", "2", "--word", "1")
    assert code == 1 and out.strip() == "nontrivial (LKB)"


def test_kernel_word_via_cli(capsys):
    word = "1,1,-2,-5,-5,4,-3,-4,5,5,2,-1,-1,-1,2,5,-4,-3,4,-5,-2,1,1,1,-2,-5,-5,4,3,-4,5,5,2,-1,-1,-1,2,5,-4,3,4,-5,-2,1"
    code, out, _ = run(capsys, "trivial", "--n", "6", "--word", word)
    assert code == 1 and "nontrivial (LKB)" in out
    # the same word has trivial Burau image: visible via the matrix command
    code, out, _ = run(capsys, "matrix", "--rep", "burau", "--n", "6", "--word", word, "--format", "json")
    assert code == 0
    assert RepMatrix.from_json_obj(json.loads(out)).is_identity()


def test_equal(capsys):
    code, out, _ = run(capsys, "equal", "--n", "3", "--w1", "1,2,1", "--w2", "2,1,2")
    assert code == 0 and out.strip() == "equal (LKB)"
    code, out, _ = run(capsys, "equal", "--n", "3", "--w1", "1", "--w2", "2")
    assert code == 1 and out.strip() == "not equal (LKB)"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "trivial", "--n", "3", "--word", "1,x")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "trivial", "--n", "3", "--word", "7")
    assert code == 2
    code, _, err = run(capsys, "normal-form", "--n", "3", "--word", "-1")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_resource_guards(capsys):
    code, _, err = run(capsys, "growth", "--n", "5", "--radius", "1")
    assert code == 3 and "resource guard" in err
    code, _, err = run(capsys, "growth", "--n", "3", "--radius", "4")
    assert code == 3
    code, _, err = run(capsys, "trivial", "--n", "12", "--word", "1")
    assert code == 3
    code, _, err = run(capsys, "verify", "--suite", "all", "--n", "9")
    assert code == 3


def test_matrix_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "matrix", "--rep", "lkb", "--n", "3", "--word", "1,2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["dim"] == 3
    assert obj["order"] == "lex-refpair"
    assert all(len(item) == 3 for item in obj["entries"])
    from braidrep.braid import BraidWord
    from braidrep.lkb import lkb_of_word

    assert RepMatrix.from_json_obj(obj) == lkb_of_word(BraidWord(3, (1, 2)))


def test_matrix_pretty(capsys):
    code, out, _ = run(capsys, "matrix", "--rep", "burau", "--n", "2", "--word", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert "1 - t" in lines[0]


def test_normal_form_output(capsys):
    code, out, _ = run(capsys, "normal-form", "--n", "3", "--word", "1,2,1,1")
    assert code == 0
    assert out.splitlines() == ["1,2,1", "1"]
    code, out, _ = run(capsys, "normal-form", "--n", "3", "--word", "")
    assert code == 0 and out.strip() == "identity"


def test_length_omega_output(capsys):
    code, out, _ = run(capsys, "length-omega", "--n", "3", "--word", "1,2,1")
    assert code == 0 and out.strip() == "1"


def test_growth_census(capsys):
    code, out, _ = run(capsys, "growth", "--n", "3", "--radius", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 1"
    assert lines[1] == "1 10"
    assert len(lines) == 3


def test_bratteli(capsys):
    code, out, _ = run(capsys, "bratteli", "--n", "6", "--diagram", "1,1,1,1")
    assert code == 0 and out.strip() == "15"
    code, out, _ = run(capsys, "bratteli", "--n", "2")
    assert code == 0
    assert out.splitlines() == ["- 1", "2 1", "1,1 1"]
    code, _, err = run(capsys, "bratteli", "--n", "3", "--diagram", "2")
    assert code == 2  # inadmissible diagram at that level


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "full-twist", "--n", "3")
    assert code == 0
    assert "PASS: full twist acts by q^6 t^2" in out
    assert out.strip().endswith("1/1 checks passed")


def test_verify_bmw(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bmw", "--n", "3")
    assert code == 0
    assert "E2*S1^+1*E2" in out


def test_verify_all_n4(capsys):
    # the combined suite at n=4 is the CLI's own desk-scale contract
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n", "4")
    assert code == 0
    assert "FAIL" not in out
