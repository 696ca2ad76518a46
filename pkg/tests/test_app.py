import json

import pytest

from app import main
from hopf_structure import coproduct
from pbw_algebra import AlgebraElement
from reports import PASS, validate_report

SMALL = ["--max-n", "1", "--degree-cap", "1", "--samples", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


def test_normalize(capsys):
    assert run(capsys, "normalize", "d a") == (0, "1 + t^-2 b c", "")


def test_normalize_with_parameters(capsys):
    code, out, _ = run(capsys, "normalize", "--preset", "s1", "mu a + nu")
    assert (code, out) == (0, "1")


def test_coproduct(capsys):
    code, out, _ = run(capsys, "coproduct", "a")
    assert code == 0
    assert out == str(coproduct(AlgebraElement.generator("a")))


def test_antipode(capsys):
    assert run(capsys, "antipode", "a")[:2] == (0, "d")


@pytest.mark.parametrize("argv", [["normalize", "b^-1"], ["normalize", "a +"], ["x", "--n", "1", "--preset", "rplus"]])
def test_rejected_input(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")


def test_usage_errors(capsys):
    assert main(["verify", "nonsense"]) == 2
    assert main([]) == 2
    assert main(["normalize", "a", "--preset", "custom"]) == 2
    capsys.readouterr()


def test_expand(capsys):
    assert run(capsys, "expand", "--s", "0", "--preset", "s1")[:2] == (0, "r[b^0] = v_0")
    assert run(capsys, "expand", "--s", "-1", "--preset", "s1")[0] == 2


def test_expand_on_special_series(capsys):
    assert run(capsys, "expand", "--s", "1", "--preset", "special")[0] == 2


def test_x_on_special_series(capsys):
    code, out, _ = run(capsys, "x", "--n", "1", "--preset", "special")
    assert code == 0
    assert out


def test_x_defaults_to_the_special_series(capsys):
    default = run(capsys, "x", "--n", "1")
    assert default[0] == 0
    assert default[1] == run(capsys, "x", "--n", "1", "--preset", "special")[1]


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "coideal", "--preset", "s1", *SMALL)
    assert code == 0
    assert out.splitlines()[-1].endswith(": PASS")


def test_verify_not_applicable(capsys):
    assert run(capsys, "verify", "expansion", "--preset", "special")[0] == 2


def test_verify_json_and_output(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "doublecoset", "--preset", "rplus", "--json", "--output", str(tmp_path), *SMALL)
    assert code == 0
    report = validate_report(json.loads(out))
    assert report["status"] == PASS
    stored = json.loads((tmp_path / "doublecoset-rplus.json").read_text(encoding="utf-8"))
    assert stored == report


def test_config_file(capsys, tmp_path):
    config = tmp_path / "custom.conf"
    config.write_text("preset = custom\nmu = 0\nnu = 1\n", encoding="utf-8")
    code, out, _ = run(capsys, "--config", str(config), "normalize", "mu + nu")
    assert (code, out) == (0, "1")
    assert run(capsys, "--config", str(tmp_path / "missing.conf"), "normalize", "a")[0] == 2


def test_v_prints_class_representative(capsys):
    assert run(capsys, "v", "--n", "1", "--preset", "s1")[:2] == (0, "a + t sqrtD b")
    assert run(capsys, "v", "--n", "0", "--preset", "rplus")[:2] == (0, "1")


def test_reduce(capsys):
    assert run(capsys, "reduce", "--preset", "s1", "a b")[:2] == (0, "a b")
