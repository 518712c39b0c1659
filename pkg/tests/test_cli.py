import json

import pytest

from vii_moduli.cli import run
from vii_moduli.moduli import ModuliReport

ENOKI5 = ["--surface", "enoki", "--vol-c", "1", "--deg-k", "5"]


def call(capsys, argv):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_report_json(capsys):
    code, out, _ = call(capsys, ["report", *ENOKI5, "--format", "json"])
    assert code == 0
    assert '"counts":{"card_R_le_rho":"12",' in out
    d = json.loads(out)
    assert list(d) == [
        "surface", "rho", "center", "boundary", "singular_pairs",
        "boundary_touches", "punctures_U", "counts", "smooth",
    ]
    assert ModuliReport.from_dict(d).to_dict() == d


def test_classify(capsys):
    code, out, _ = call(capsys, ["classify", "--surface", "half", "--vol-c", "2", "--bundle", "A:0,0,0"])
    assert (code, out) == (0, "stable simple; canonical=PointA0\n")
    code, out, _ = call(capsys, ["classify", *ENOKI5, "--bundle", "E:0,-1,0"])
    assert out == "unstable simple; canonical=PointE(0,-1,0)\n"
    code, out, _ = call(capsys, ["classify", *ENOKI5, "--bundle", "E:0,-1,0", "--format", "json"])
    assert json.loads(out)["subbundles"] == ["1,0,0", "0,-1,0"]


def test_rr(capsys):
    assert call(capsys, ["rr", "--n", "2"])[1] == "chi(K^2) = -1\n"
    out = call(capsys, ["rr", "--n", "0", "--surface", "half", "--vol-c", "2"])[1]
    assert out == "chi(K^0) = 0\nh(K^0) = (h0=1, h1=1, h2=0)\n"


def test_enumerate_r(capsys):
    code, out, _ = call(capsys, ["enumerate-r", *ENOKI5, "--max-degree", "1/2"])
    assert out.splitlines() == ["0,0,0", "0,0,1/2", "0,1/2,0", "0,1/2,1/2"]


def test_simple_report(capsys):
    argv = ["simple-report", "--surface", "parabolic", "--vol-c", "1", "--vol-e", "1",
            "--lo", "-1", "--hi", "1", "--format", "json"]
    d = json.loads(call(capsys, argv)[1])
    assert d["plane_minus_discrete"] is True and d["nonseparated_groups"] == []


def test_render_and_out(tmp_path, capsys):
    path = tmp_path / "disc.svg"
    assert run(["render", *ENOKI5, "--width", "300", "--height", "200", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert path.read_text().count('class="chord"') == 10


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "s.json"
    cfg.write_text(json.dumps({"surface": "enoki", "vol_c": "1", "deg_k": "5"}))
    a = call(capsys, ["report", "--config", str(cfg), "--format", "json"])[1]
    b = call(capsys, ["report", *ENOKI5, "--format", "json"])[1]
    assert a == b
    # flags override the file
    c = call(capsys, ["report", "--config", str(cfg), "--deg-k=-1", "--format", "json"])[1]
    assert json.loads(c)["smooth"] is True


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nope"],
        ["report"],
        ["report", "--surface", "enoki"],
        ["report", *ENOKI5, "--format", "png"],
        ["rr"],
        ["report", "--surface", "enoki", "--vol-c", "x/y", "--deg-k", "1"],
        ["classify", *ENOKI5, "--bundle", "Q:1"],
        ["simple-report", *ENOKI5, "--lo", "2", "--hi", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = call(capsys, argv)
    assert code == 1 and out == "" and err.startswith("usage error:")


@pytest.mark.parametrize(
    "argv, name",
    [
        (["classify", "--surface", "half", "--vol-c", "2", "--bundle", "E:0,0,1/4"], "AmbiguousFamily"),
        (["classify", *ENOKI5, "--bundle", "A:0,1,1/7"], "OnlyTrivialExtension"),
        (["classify", *ENOKI5, "--bundle", "E:1,0,0"], "WrongChernClass"),
        (["classify", *ENOKI5, "--bundle", "S:0,0,0|0,0,0"], "ConstraintViolation"),
        (["report", "--surface", "half", "--vol-c", "2", "--deg-k", "3"], "ConstraintViolation"),
        (["report", "--surface", "enoki", "--vol-c", "1"], "ConstraintViolation"),
    ],
)
def test_domain_errors(capsys, argv, name):
    code, out, err = call(capsys, argv)
    assert code == 2 and err.startswith(f"error: {name}:") and err.count("\n") == 1


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0


def test_no_color_env(capsys, monkeypatch):
    monkeypatch.setenv("VII_MODULI_NO_COLOR", "1")
    out = call(capsys, ["report", *ENOKI5])[1]
    assert "\x1b[" not in out and out.startswith("surface: enoki")
