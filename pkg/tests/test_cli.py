import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qeuler.cli import main, parse_literal, parse_mode, render_number
from qeuler.scalar import Number


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "qeuler", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


# -- literal round trip -----------------------------------------------------

def test_parse_literal_forms():
    assert parse_literal("3") == 3
    assert parse_literal("-7") == -7
    assert parse_literal("3/10") == Fraction(3, 10)
    assert parse_literal("0.25") == 0.25
    assert parse_literal("0.4+0.3i") == complex(0.4, 0.3)
    assert parse_literal("0.4-0.3i") == complex(0.4, -0.3)
    assert parse_literal("1e-3") == 1e-3
    for bad in ("", "zz", "1/0x"):
        with pytest.raises((ValueError, ZeroDivisionError)):
            parse_literal(bad)


def test_render_exact():
    assert render_number(Number.exact(4, 5)) == "4/5"
    assert render_number(Number.exact(-6, 13)) == "-6/13"
    assert render_number(Number.exact(3)) == "3"


def test_render_float():
    assert render_number(Number.of(0.5)) == "0.5"
    assert render_number(Number.of(complex(0.4, 0.3))) == "0.4+0.3i"
    assert render_number(Number.of(complex(0.4, -0.3))) == "0.4-0.3i"


@given(st.fractions(min_value=-100, max_value=100, max_denominator=997))
def test_roundtrip_exact(fr):
    text = render_number(Number(fr))
    assert parse_literal(text) == fr


@given(st.floats(min_value=-1e6, max_value=1e6,
                 allow_nan=False, allow_infinity=False),
       st.floats(min_value=-1e6, max_value=1e6,
                 allow_nan=False, allow_infinity=False))
@settings(max_examples=80)
def test_roundtrip_complex(re_part, im_part):
    v = Number.of(complex(re_part, im_part))
    back = parse_literal(render_number(v))
    assert complex(back) == complex(v)


def test_parse_mode():
    assert parse_mode("exact") == ("exact", None)
    assert parse_mode("float") == ("float", 53)
    assert parse_mode("float:113") == ("float", 113)
    with pytest.raises(ValueError):
        parse_mode("double")


# -- eval -------------------------------------------------------------------

def test_eval_order_r_exact():
    code, out, _ = run_cli("eval", "--family", "order-r", "--n", "1",
                           "--r", "1", "--q", "1/2", "--x", "1",
                           "--mode", "exact")
    assert code == 0
    assert out.strip() == "4/5"


def test_eval_zeta_at_zero():
    code, out, _ = run_cli("eval", "--family", "zeta", "--s", "0",
                           "--r", "3", "--q", "1/3", "--x", "2",
                           "--mode", "exact")
    assert code == 0
    assert out.strip() == "1"


def test_eval_chi_value():
    code, out, _ = run_cli("eval", "--family", "chi", "--n", "0",
                           "--q", "1/2", "--x", "0",
                           "--character", "f=3;values=0,1,-1",
                           "--mode", "exact")
    assert code == 0
    assert out.strip() == "-1"


def test_eval_json_shape():
    code, out, _ = run_cli("eval", "--family", "order-r", "--n", "2",
                           "--r", "2", "--q", "0.5", "--x", "1",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "order-r"
    assert set(doc["value"]) == {"display", "re", "im"}
    assert "tail_bound" in doc
    # exact mode carries num/den instead
    code, out, _ = run_cli("eval", "--family", "order-r", "--n", "2",
                           "--r", "2", "--q", "1/2", "--x", "1",
                           "--mode", "exact", "--format", "json")
    doc = json.loads(out)
    assert set(doc["value"]) == {"display", "num", "den"}
    assert Fraction(doc["value"]["num"], doc["value"]["den"]) == \
        Fraction(doc["value"]["display"])


def test_eval_validation_names_flag():
    code, _, err = run_cli("eval", "--family", "chi", "--n", "1",
                           "--q", "1/2")
    assert code == 2
    assert "--character" in err
    code, _, err = run_cli("eval", "--family", "basic", "--n", "1",
                           "--q", "1/2", "--h", "1")
    assert code == 2
    assert "--h" in err
    code, _, err = run_cli("eval", "--family", "basic", "--q", "1/2")
    assert code == 2
    assert "--n" in err
    code, _, err = run_cli("eval", "--family", "basic", "--n", "1",
                           "--q", "3/2")
    assert code == 2
    assert "--q" in err


def test_eval_divergence_guard_exit_3():
    code, _, err = run_cli("eval", "--family", "hr", "--n", "1", "--h", "1",
                           "--r", "3", "--q", "0.5", "--x", "1",
                           "--method", "series")
    assert code == 3
    assert "divergence guard" in err


def test_eval_barnes_requires_consistent_r():
    code, _, err = run_cli("eval", "--family", "barnes", "--n", "1",
                           "--q", "0.5", "--x", "1",
                           "--barnes", "a=1,2;b=0,0", "--r", "3")
    assert code == 2
    assert "--r" in err


def test_eval_float_bits_mode():
    code, out, _ = run_cli("eval", "--family", "basic", "--n", "1",
                           "--q", "1/2", "--x", "0", "--mode", "float:113")
    assert code == 0
    assert abs(float(out.strip()) - (-0.4)) < 1e-12


def test_eval_high_precision_renders_own_digits():
    # decimal q rereads exactly before widening; output shows ~34 digits
    code, out, _ = run_cli("eval", "--family", "basic", "--n", "3",
                           "--q", "0.9", "--x", "2", "--mode", "float:113")
    assert code == 0
    import mpmath
    from qeuler import euler_poly, QParam
    exact = euler_poly(3, QParam.of(Fraction(9, 10)), Fraction(2)).fraction
    with mpmath.workprec(160):
        target = mpmath.mpf(exact.numerator) / exact.denominator
        assert abs(mpmath.mpf(out.strip()) - target) < mpmath.mpf("1e-30")


def test_eval_digits_flag():
    code, out, _ = run_cli("eval", "--family", "zeta", "--s", "1.5+0.5i",
                           "--x", "2", "--q", "0.4", "--digits", "6")
    assert code == 0
    assert out.strip() == "0.62859-0.0966483i"
    code, out, _ = run_cli("eval", "--family", "basic", "--n", "1", "--x", "0",
                           "--q", "1/3", "--mode", "exact", "--digits", "4")
    assert code == 0
    assert out.strip() == "-3/10"  # exact rendering ignores digits
    code, _, err = run_cli("eval", "--family", "basic", "--n", "1", "--x", "0",
                           "--q", "0.5", "--digits", "0")
    assert code == 2
    assert "--digits" in err


# -- table ------------------------------------------------------------------

def test_table_matches_eval_cell_by_cell():
    code, out, _ = run_cli("table", "--family", "basic", "--n", "0..3",
                           "--q", "1/2", "--x", "0,1", "--mode", "exact",
                           "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "x", "value", "tail_bound"]
    assert len(rows) == 9
    for n_s, x_s, value, _bound in rows[1:]:
        c2, out2, _ = run_cli("eval", "--family", "basic", "--n", n_s,
                              "--q", "1/2", "--x", x_s, "--mode", "exact")
        assert c2 == 0
        assert out2.strip() == value


def test_table_zeta_axis():
    code, out, _ = run_cli("table", "--family", "zeta", "--s", "0,-1,-2",
                           "--r", "2", "--q", "1/2", "--x", "1",
                           "--mode", "exact", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["columns"] == ["s", "x", "value", "tail_bound"]
    assert [r["s"] for r in doc["rows"]] == ["0", "-1", "-2"]
    assert doc["rows"][0]["value"] == "1"


def test_table_bad_range():
    code, _, err = run_cli("table", "--family", "basic", "--n", "5..1",
                           "--q", "1/2")
    assert code == 2
    assert "--n" in err


# -- config file ------------------------------------------------------------

def test_config_file_supplies_defaults(tmp_path):
    # family and q are required flags; the config file alone satisfies them
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "order-r", "q": "1/2",
                               "mode": "exact", "r": 1}))
    code, out, _ = run_cli("eval", "--config", str(cfg), "--n", "1", "--x", "1")
    assert code == 0
    assert out.strip() == "4/5"


def test_config_file_validates_choices(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "nope"}))
    code, _, err = run_cli("eval", "--config", str(cfg), "--n", "1",
                           "--q", "1/2")
    assert code == 2
    assert "--config" in err and "invalid choice" in err


def test_config_file_flags_win(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"mode": "float"}))
    code, out, _ = run_cli("eval", "--config", str(cfg), "--family", "basic",
                           "--n", "1", "--q", "1/2", "--x", "1",
                           "--mode", "exact")
    assert code == 0
    assert out.strip() == "4/5"


def test_config_file_unknown_key(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"fam": "basic"}))
    code, _, err = run_cli("eval", "--config", str(cfg), "--family", "basic",
                           "--n", "1", "--q", "1/2")
    assert code == 2
    assert "--config" in err


# -- verify -----------------------------------------------------------------

def test_verify_recurrence_green():
    code, out, _ = run_cli("verify", "--only", "recurrence", "--n-max", "10")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["total"] == 30


def test_verify_divergent_override_exit_2():
    code, _, err = run_cli("verify", "--only", "thm7", "--h", "1", "--r", "2")
    assert code == 2
    assert "divergence guard" in err
    assert "h-r+1 >= 1" in err


def test_verify_tau_zero_exit_1():
    code, out, _ = run_cli("verify", "--only", "prop1", "--n-max", "1",
                           "--tau", "0")
    assert code == 1
    doc = json.loads(out)
    assert doc["summary"]["failed"] > 0


def test_verify_plain_format():
    code, out, _ = run_cli("verify", "--only", "gaussbinomial",
                           "--format", "plain")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert lines[-1].startswith("total=")


def test_verify_unknown_tag():
    code, _, err = run_cli("verify", "--only", "thm99")
    assert code == 2
    assert "--only" in err


def test_main_callable_in_process(capsys):
    rc = main(["eval", "--family", "basic", "--n", "2", "--q", "1/2",
               "--x", "0", "--mode", "exact"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "-4/15"
