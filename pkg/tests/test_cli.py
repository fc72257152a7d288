import io
import json
from pathlib import Path

import pytest

from ringlab.cli import run, split_argv, UsageError

DATA = Path(__file__).parent / "data"


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    code, out, err = invoke(*argv, "--format", "json")
    assert code == 0, err
    # round-trip: re-emitting the parsed payload reproduces the bytes
    payload = json.loads(out)
    assert json.dumps(payload, indent=2) + "\n" == out
    return payload


def test_split_argv_keeps_dashed_values():
    flags, pos = split_argv(["--window", "-2:2,-2:2", "-x^2+1", "--res", "40"])
    assert flags == {"window": "-2:2,-2:2", "res": "40"}
    assert pos == ["-x^2+1"]
    with pytest.raises(UsageError):
        split_argv(["--nope", "1"])


def test_parse_command_text_and_json():
    code, out, _ = invoke("parse", "y^2 - x^2*(x+1)")
    assert code == 0 and out == "-x^3 - x^2 + y^2\n"
    payload = invoke_json("parse", "x^2 - 1")
    assert payload == {
        "vars": ["x"],
        "domain": "q",
        "terms": [{"exps": [2], "coeff": "1"}, {"exps": [0], "coeff": "-1"}],
    }


def test_variety_documented_example():
    payload = invoke_json("variety", "--field", "fp:5", "--vars", "x", "x^2+1")
    assert payload["points"] == [[2], [3]]
    code, out, _ = invoke("variety", "--field", "fp:5", "--vars", "x", "x^2+1")
    assert code == 0 and out == "2\n3\n"


def test_zideal_prime_documented_text():
    code, out, _ = invoke("zideal", "prime", "6")
    assert code == 0
    assert out == "not prime: 6 = 2*3 with 2,3 not in (6)\n"
    code, out, _ = invoke("zideal", "prime", "7")
    assert out == "prime: (7)\n"
    code, out, _ = invoke("zideal", "prime", "0")
    assert out == "prime (zero ideal)\n"
    code, out, _ = invoke("zideal", "prime", "1")
    assert out.startswith("not prime: (1)")


def test_zideal_gens_and_contains():
    code, out, _ = invoke("zideal", "gens", "6", "10")
    assert code == 0 and out == "(2)\n"
    assert invoke_json("zideal", "gens", "6", "10")["generator"] == 2
    code, out, _ = invoke("zideal", "contains", "3", "6")
    assert out == "true\n"
    code, out, _ = invoke("zideal", "contains", "6", "2")
    assert out == "false\n"


def test_ideals_mod_text_and_json():
    code, out, _ = invoke("ideals-mod", "6")
    assert code == 0
    assert out.splitlines() == ["{0, 1, 2, 3, 4, 5}", "{0, 2, 4}", "{0, 3}", "{0}"]
    payload = invoke_json("ideals-mod", "5")
    assert payload["count"] == 2


def test_member_and_ideal_eq():
    code, out, _ = invoke("member", "--bound", "1", "x^2-1", "x-1")
    assert code == 0 and out == "member\n  cofactor 1: x + 1\n"
    payload = invoke_json("member", "--bound", "2", "--field", "fp:5", "--vars", "x", "1", "x")
    assert payload["verdict"] == "non_member"
    assert payload["witness"] == ["0"]
    code, out, _ = invoke("ideal-eq", "--bound", "3", "x^2-1; x^3-1", "x-1")
    assert out == "equal within bound 3\n"
    code, out, _ = invoke("ideal-eq", "--bound", "2", "--field", "fp:2", "x", "x; y")
    assert "right generator y is not in the left ideal" in out


def test_member_requires_bound():
    code, out, err = invoke("member", "x^2-1", "x-1")
    assert code == 1 and out == "" and "--bound" in err


def test_radical_command():
    code, out, _ = invoke("radical", "x^2")
    assert code == 0 and out == "x\n"
    code, out, _ = invoke("radical", "(x^2+1)^2")
    assert out == "x^2 + 1\n"


def test_chain_demo_command():
    code, out, _ = invoke("chain-demo", "2")
    assert code == 0
    assert out.splitlines() == [
        "step 1: x2 not in (x1); witness (0, 1, 0)",
        "step 2: x3 not in (x1, x2); witness (0, 0, 1)",
    ]
    payload = invoke_json("chain-demo", "6")
    assert len(payload["steps"]) == 6


def test_hbt_command():
    payload = invoke_json("hbt", "--field", "fp:5", "x^2-1", "x^3-1")
    assert payload["verified_equal"] is True
    assert payload["leading_profile"] == [False, True, True, True]
    assert payload["extracted"]["terms"] == [
        {"exps": [1], "coeff": "1"}, {"exps": [0], "coeff": "4"}]


def test_videal_viv_decompose_prime_check():
    payload = invoke_json("videal", "--field", "fp:2", "0,0")
    assert payload["field"] == 2
    assert len(payload["generators"]) == 3
    payload = invoke_json("viv", "--field", "fp:5", "--vars", "x", "x^2")
    assert payload["points"] == [[0]]
    payload = invoke_json("decompose", "--field", "fp:2", "0,0", "1,1")
    assert payload["components"] == [[[0, 0]], [[1, 1]]]
    code, out, _ = invoke("prime-check", "--field", "fp:2", "0,0")
    assert out == "prime\n"
    payload = invoke_json("prime-check", "--field", "fp:2", "0,0", "1,1")
    assert payload["prime"] is False
    assert payload["witnesses"] is not None


def test_plot_documented_example_and_golden():
    code, out, _ = invoke("plot", "--window", "-2:2,-2:2", "--res", "64",
                          "y^2 - x^2*(x+1)")
    assert code == 0
    assert out == (DATA / "nodal_cubic_64.txt").read_text()


def test_plot_json_and_svg():
    payload = invoke_json("plot", "--window", "-1:1,-1:1", "--res", "8", "x")
    assert payload["res"] == [8, 8]
    assert payload["rows"] == ["...##..."] * 8
    assert payload["window"] == ["-1", "1", "-1", "1"]
    code, out, _ = invoke("plot", "--format", "svg", "--window", "-1:1,-1:1",
                          "--res", "8", "x")
    assert code == 0 and out.startswith("<svg")


def test_plot_vertical_line_default_window():
    code, out, _ = invoke("plot", "--res", "8", "x")
    assert code == 0
    assert all(row.count("#") == 2 for row in out.splitlines())


def test_exit_code_one_for_syntax_and_usage():
    code, out, err = invoke("parse", "x +")
    assert code == 1 and out == "" and "position 3" in err
    code, out, err = invoke("parse", "x + w")
    assert code == 1 and "w" in err
    code, out, err = invoke("frobnicate", "1")
    assert code == 1
    code, out, err = invoke("plot", "--window", "oops", "x")
    assert code == 1
    code, out, err = invoke("parse", "--format", "svg", "x")
    assert code == 1  # svg only makes sense for plot


def test_exit_code_two_for_domain_errors():
    code, out, err = invoke("variety", "--vars", "x", "x^2+1")  # default field q
    assert code == 2 and out == ""
    code, out, err = invoke("parse", "--field", "fp:6", "x")
    assert code == 2
    code, out, err = invoke("radical", "x*y")
    assert code == 2
    code, out, err = invoke("radical", "--field", "fp:5", "x^5")
    assert code == 2
    code, out, err = invoke("chain-demo", "3", "--vars", "x1,x2")
    assert code == 2


def test_exit_code_three_for_resource_limits():
    code, out, err = invoke("ideals-mod", "20000")
    assert code == 3 and out == ""
    code, out, err = invoke("variety", "--field", "fp:101", "--vars", "x,y,z", "x")
    assert code == 3


def test_help_exits_zero():
    code, out, _ = invoke("--help")
    assert code == 0 and "commands:" in out
    code, _, _ = invoke()
    assert code == 0
