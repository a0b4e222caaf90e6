"""Tests for the command line surface."""

import argparse
import json

import pytest

from downup_engine.main import DownUpEngine, build_parser, main, parse_window

CLASSIC = {"algebra": {"r": 1, "s": 2, "gamma": 0, "phi": "h"}}
SL2_LIKE = {"algebra": {"r": 1, "s": 1, "gamma": -1, "phi": "h"}}
NONCONFORMAL = {"algebra": {"r": 2, "s": 2, "gamma": 0, "phi": "h"}}


def run(capsys, argv, config):
    code = main(argv, config=config)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normalize_text(capsys):
    code, out, _ = run(capsys, ["normalize", "d*u"], CLASSIC)
    assert code == 0
    assert out == "2*u*d + h\n"


def test_normalize_json(capsys):
    code, out, _ = run(capsys, ["normalize", "d*u", "--json"], CLASSIC)
    assert code == 0
    envelope = json.loads(out)
    assert envelope["ok"]
    assert envelope["result"] == {
        "input": "d*u",
        "normal_form": "2*u*d + h",
        "terms": [{"u": 1, "h": 0, "d": 1, "coeff": "2"}, {"u": 0, "h": 1, "d": 0, "coeff": "1"}],
    }


def test_mul_matches_normalize(capsys):
    _, out, _ = run(capsys, ["mul", "d", "u"], CLASSIC)
    assert out == "2*u*d + h\n"


def test_classify_json_matches_golden(capsys, golden_dir):
    config = {"algebra": {"r": 2, "s": 4, "gamma": 0, "phi": 0}}
    code, out, _ = run(capsys, ["classify", "--json"], config)
    assert code == 0
    expected = json.loads((golden_dir / "classify" / "conformal_divisible_psi_zero.json").read_text())
    assert json.loads(out)["result"] == expected


def test_relgroup_text(capsys):
    config = {"algebra": {"r": 2, "s": "1/2", "phi": 0}}
    code, out, _ = run(capsys, ["relgroup"], config)
    assert code == 0
    assert out == "<(1,-1)>\n"


def test_conformal_reports_the_obstruction(capsys):
    code, out, _ = run(capsys, ["conformal"], NONCONFORMAL)
    assert code == 0
    assert out.splitlines()[0] == "not conformal: s=r^1 and a_1!=0"


def test_conformal_json(capsys):
    code, out, _ = run(capsys, ["conformal", "--json"], CLASSIC)
    result = json.loads(out)["result"]
    assert code == 0
    assert result["conformal"] is True
    assert all(result["relations"].values())


def test_module_fhw(capsys):
    code, out, _ = run(capsys, ["module", "fhw", "1", "2", "--json"], SL2_LIKE)
    result = json.loads(out)["result"]
    assert code == 0
    assert result["dim"] == 3
    assert result["annihilators_verified"] is True


def test_exotic_accepts_negative_integers(capsys):
    code, out, _ = run(capsys, ["exotic", "r1", "-1", "1", "1", "2", "--json", "--window=-8..8"], CLASSIC)
    result = json.loads(out)["result"]
    assert code == 0
    assert all(result["relations"].values())


def test_kernel_error_exit_code(capsys):
    code, out, err = run(capsys, ["split"], CLASSIC)
    assert code == 3
    assert out == ""
    assert "error: IsConformal:" in err


def test_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, ["normalize", "2h"], CLASSIC)
    assert code == 2
    lines = err.splitlines()
    assert any(line.startswith("error: SyntaxError:") for line in lines)
    assert " ^" in lines


def test_error_envelope(capsys):
    code, out, _ = run(capsys, ["normalize", "x", "--json"], CLASSIC)
    assert code == 2
    envelope = json.loads(out)
    assert envelope["ok"] is False
    assert envelope["error"]["name"] == "UnknownSymbol"


@pytest.mark.parametrize(
    "config, code",
    [
        ({"algebra": {"r": 0.5}}, 2),
        ({"algebra": {"r": 0, "s": 1}}, 3),
        ({"algebra": {"declared_relation": [1]}}, 2),
    ],
)
def test_config_errors(capsys, config, code):
    assert run(capsys, ["normalize", "u"], config)[0] == code


def test_output_mode_from_config(capsys):
    config = {**CLASSIC, "output": {"mode": "json"}}
    _, out, _ = run(capsys, ["normalize", "h"], config)
    assert json.loads(out)["result"]["normal_form"] == "h"


def test_engine_reads_bounds():
    bounds = {"window": [-3, 3], "relation_search": 5, "rewrite_degree": 4}
    engine = DownUpEngine(config={**CLASSIC, "bounds": bounds})
    assert engine.window == (-3, 3)
    assert engine.relation_bound == 5
    assert engine.rewrite_degree == 4
    assert DownUpEngine(config=CLASSIC).rewrite_degree == 12


def test_decompose_reports_graded_coordinates(capsys):
    code, out, _ = run(capsys, ["decompose", "d*u + u*d*u", "--json"], CLASSIC)
    assert code == 0
    assert json.loads(out)["result"]["graded"] == {"0": "2*W + h", "1": "u*(2*W + h)"}


def test_decompose_respects_rewrite_degree(capsys):
    config = {**CLASSIC, "bounds": {"rewrite_degree": 1}}
    assert run(capsys, ["decompose", "u*d"], config)[0] == 0
    code, _, err = run(capsys, ["decompose", "(u*d)^2"], config)
    assert code == 3
    assert "DegreeBoundExceeded" in err


@pytest.mark.parametrize("exc", [ValueError("boom"), KeyError("boom"), RuntimeError("boom")])
def test_unexpected_errors_exit_3(capsys, monkeypatch, exc):
    def explode(self, source):
        raise exc

    monkeypatch.setattr(DownUpEngine, "normalize", explode)
    code, out, err = run(capsys, ["normalize", "u"], CLASSIC)
    assert code == 3
    assert out == ""
    assert f"error: InternalError: {type(exc).__name__}" in err


def test_unexpected_error_envelope(capsys, monkeypatch):
    def explode(self, source):
        raise ValueError("boom")

    monkeypatch.setattr(DownUpEngine, "normalize", explode)
    code, out, _ = run(capsys, ["normalize", "u", "--json"], CLASSIC)
    envelope = json.loads(out)
    assert code == 3
    assert envelope["ok"] is False
    assert envelope["error"] == {"name": "InternalError", "message": "ValueError: boom"}


def test_parse_window():
    assert parse_window("-3..4") == (-3, 4)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_window("4..-3")


def test_parser_rejects_unknown_module_kind():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["module", "bogus", "1"])


def test_decompose(capsys):
    code, out, _ = run(capsys, ["decompose", "u + d + h"], CLASSIC)
    assert code == 0
    assert out.splitlines() == ["degree -1: d", "degree 0: h", "degree 1: u", "length: 3"]


def test_iso_shifts_gamma_first(capsys):
    config = {"algebra": {"r": 3, "s": 2, "gamma": 5, "phi": "2*h"}}
    code, out, _ = run(capsys, ["iso", "--json"], config)
    result = json.loads(out)["result"]
    assert code == 0
    assert result["steps"][0] == "gamma_shift"
    assert result["source"]["gamma"] == "5"
    assert result["target"]["gamma"] == "0"
    assert set(result["images"]) == {"h", "u", "d"}


def test_central(capsys):
    config = {"algebra": {"r": -1, "s": -1, "phi": 0}}
    _, out, _ = run(capsys, ["central", "--json"], config)
    labels = [e["label"] for e in json.loads(out)["result"]["elements"]]
    assert labels == ["h^2", "H^2", "u^2", "d^2"]

    _, out, _ = run(capsys, ["central"], {"algebra": {"r": 2, "s": 3, "phi": "h"}})
    assert out == "no central elements from the orders of r and s\n"


@pytest.mark.parametrize("expr, expected", [("u^3", True), ("d^3", True), ("u", False)])
def test_annihilate(capsys, expr, expected):
    code, out, _ = run(capsys, ["annihilate", "fhw:1:2", expr, "--json"], SL2_LIKE)
    assert code == 0
    assert json.loads(out)["result"]["annihilates"] is expected


def test_annihilate_rejects_bad_descriptor(capsys):
    code, _, err = run(capsys, ["annihilate", "fhw:1", "u"], SL2_LIKE)
    assert code == 2
    assert "error: UsageError:" in err


def test_orbit(capsys):
    code, out, _ = run(capsys, ["orbit", "1", "0", "--window=-2..2", "--json"], SL2_LIKE)
    result = json.loads(out)["result"]
    assert code == 0
    assert "simplicity" in result
