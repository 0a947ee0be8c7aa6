"""End-to-end tests of the command-line interface and its exit codes."""

import math

import pytest

from trigratio.cli import (
    EXIT_DOMAIN,
    EXIT_FALSIFIED,
    EXIT_OK,
    EXIT_USAGE,
    parse_number,
    run,
)


def test_parse_number_pi_fractions():
    assert parse_number("pi/2") == pytest.approx(math.pi / 2.0)
    assert parse_number("pi/14") == pytest.approx(math.pi / 14.0)
    assert parse_number("0.25") == 0.25
    assert parse_number("1e-3") == 1e-3


def test_parse_number_rejects_garbage():
    import argparse

    with pytest.raises(argparse.ArgumentTypeError):
        parse_number("pi/0")
    with pytest.raises(argparse.ArgumentTypeError):
        parse_number("two")


def test_eval_ok(capsys):
    assert run(["eval", "--family", "trig-sin", "--p", "2", "--x", "1.0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "f=0.24483487621925" in out
    assert "ratio=1.75516512378074" in out


def test_eval_domain_error(capsys):
    assert run(["eval", "--family", "trig-sin", "--p", "2", "--x", "2.0"]) == EXIT_DOMAIN


def test_bounds_ok(capsys):
    assert run(["bounds", "--family", "trig-cos", "--p", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "lower=0.375 " in out
    assert "direction=increasing" in out


def test_verify_grid_ok(capsys):
    assert run(["verify", "--family", "trig-sin", "--p", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("certified") == 3


def test_verify_rigorous_ok(capsys):
    assert (
        run(["verify", "--family", "trig-cos", "--p", "2", "--mode", "rigorous"])
        == EXIT_OK
    )
    out = capsys.readouterr().out
    assert "mode=rigorous" in out


def test_verify_hyp_cos_p2_reports_falsified_sign(capsys):
    code = run(["verify", "--family", "hyp-cos", "--p", "2"])
    out = capsys.readouterr().out
    assert code == EXIT_FALSIFIED
    assert "sign-D:hyp-cos:p=2:POS: falsified" in out
    assert "envelope:hyp-cos:p=2: certified" in out


def test_verify_rigorous_hyperbolic_rejected(capsys):
    code = run(["verify", "--family", "hyp-sin", "--p", "3", "--mode", "rigorous"])
    assert code == EXIT_DOMAIN


def test_cheb_by_degree(capsys):
    assert run(["cheb", "--n", "6", "--t", "0.995"]) == EXIT_OK
    assert "6.452480548800" in capsys.readouterr().out


def test_cheb_by_corollary(capsys):
    assert run(["cheb", "--p", "7", "--y", "0.1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "lo=6.4399999999999995" in out  # 17g rendering of 7 - (48/42)*0.49
    assert "hi=6.5023265620569" in out


def test_cheb_argument_exclusivity(capsys):
    assert run(["cheb", "--n", "6"]) == EXIT_USAGE
    assert run(["cheb", "--n", "6", "--t", "0.5", "--p", "7", "--y", "0.1"]) == EXIT_USAGE


def test_unknown_family_is_usage_error():
    assert run(["eval", "--family", "bogus", "--p", "2", "--x", "0.5"]) == EXIT_USAGE


def test_missing_subcommand_is_usage_error():
    assert run([]) == EXIT_USAGE


def test_table_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "table.csv"
    args = [
        "table", "--family", "trig-sin", "--p", "2",
        "--points", "64", "--out", str(out_path),
    ]
    assert run(args) == EXIT_OK
    raw = out_path.read_bytes()
    assert raw.endswith(b"\n") and b"\r" not in raw
    lines = raw.decode("utf-8").splitlines()
    assert lines[0] == "x,f,lower,upper,margin_lower,margin_upper"
    assert len(lines) == 65
    from trigratio.families import FamilyKind, eval_f

    for line in lines[1:]:
        x, f, lower, upper, ml, mu = map(float, line.split(","))
        # 17 significant digits round-trip float64 exactly
        assert f == eval_f(FamilyKind.TRIG_SIN, 2, x)
        assert ml == f - lower and mu == upper - f
        assert lower < f < upper


def test_table_idempotent(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["table", "--family", "hyp-cos", "--p", "4", "--points", "32", "--out"]
    assert run(args + [str(a)]) == EXIT_OK
    assert run(args + [str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_table_rejects_single_point():
    assert run(["table", "--family", "trig-sin", "--p", "2", "--points", "1", "--out", "/tmp/x.csv"]) == EXIT_USAGE
