"""Command-line interface: grammar, verbs, determinism and exit codes."""

import io
from contextlib import redirect_stdout

import pytest

from ordalg import groups as g
from ordalg.cli import main
from ordalg.errors import ParseError
from ordalg.parsing import (
    format_pea_file,
    parse_descriptor,
    parse_element,
    parse_interval_pea,
    parse_pea_file,
    parse_subgroup,
)
from ordalg.pea import finite_chain
from ordalg.scalars import QuadraticNumber, ScalarSubgroup
from fractions import Fraction


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_parse_descriptors():
    assert parse_descriptor("lex(Q, Z^2)") == g.Lex(g.QQ, g.IntVector(2))
    assert parse_descriptor("Z/4") == g.Scalar(ScalarSubgroup.cyclic(4))
    assert parse_descriptor("Q[sqrt 2]") == g.Scalar(ScalarSubgroup.quadratic(2))
    assert parse_descriptor("prod(Z^2, Aff)") == g.Product(g.IntVector(2), g.AffineQ())


def test_parse_lex_head_rule():
    with pytest.raises(ParseError) as err:
        parse_descriptor("lex(Z^2, Z)")
    assert "linearly ordered" in str(err.value)


def test_parse_elements():
    desc = parse_descriptor("lex(Q, Z)")
    assert parse_element(desc, "(1/2, -3)") == (Fraction(1, 2), Fraction(-3))
    vec = parse_element(parse_descriptor("Z^3"), "(1, 2, -3)")
    assert vec == (1, 2, -3)
    q = parse_element(parse_descriptor("Q[sqrt 2]"), "1/2 + 3*sqrt(2)")
    assert q == QuadraticNumber(Fraction(1, 2), Fraction(3), 2)


def test_parse_subgroups():
    assert parse_subgroup("Z/1") == ScalarSubgroup.cyclic(1)
    assert parse_subgroup("Q") == ScalarSubgroup.rationals()
    assert parse_subgroup("Q[sqrt 3]") == ScalarSubgroup.quadratic(3)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_descriptor("lex(Q,")
    assert err.value.line == 1


def test_pea_file_round_trip(tmp_path):
    E = finite_chain(2)
    text = format_pea_file(E)
    verdict = parse_pea_file(text)
    assert verdict.valid and verdict.pea.size == 3


def test_gamma_parsing():
    E = parse_interval_pea("gamma(lex(Q, Z), (1, 0))")
    assert E.unit == (Fraction(1), Fraction(0))


def test_cli_check_axioms_pass(tmp_path):
    path = tmp_path / "chain.pea"
    path.write_text(format_pea_file(finite_chain(2)))
    code, output = run_cli("check-axioms", str(path))
    assert code == 0
    assert "#! verdict=pass" in output


def test_cli_check_axioms_fail(tmp_path):
    path = tmp_path / "bad.pea"
    path.write_text("pea n=3 zero=0 one=2\nadd 0 0 0\nadd 0 1 1\nadd 1 0 1\n")
    code, output = run_cli("check-axioms", str(path))
    assert code == 1
    assert "#! verdict=fail" in output
    assert "axiom=PE2" in output


def test_cli_states(tmp_path):
    path = tmp_path / "chain4.pea"
    path.write_text(format_pea_file(finite_chain(4)))
    code, output = run_cli("states", str(path))
    assert code == 0
    assert "extremal states: 1" in output
    assert "0 1/4 1/2 3/4 1" in output


def test_cli_ideals(tmp_path):
    path = tmp_path / "bool.pea"
    from ordalg.pea import boolean_algebra

    path.write_text(format_pea_file(boolean_algebra(2)))
    code, output = run_cli("ideals", str(path))
    assert code == 0
    assert "radical=0" in output


def test_cli_check_rdp_matches_worked_example():
    code, output = run_cli(
        "check-rdp",
        "--group", "lex(Z, Z)",
        "--level", "rdp1",
        "--a1", "(3, 7)",
        "--a2", "(0, 4)",
        "--b1", "(1, 2)",
        "--b2", "(2, 9)",
        "--oracle", "--box", "45",
    )
    assert code == 0
    assert "(2, 5)" in output  # c12 from the case table
    assert "#! verdict=pass" in output
    assert "oracle=found" in output


def test_cli_interpolate():
    code, output = run_cli(
        "interpolate",
        "--group", "lex(Q, Z)",
        "--a1", "(0, 5)", "--a2", "(0, 7)",
        "--b1", "(1, -3)", "--b2", "(1, -9)",
    )
    assert code == 0
    assert "interpolant: (1/2, 0)" in output


def test_cli_decompose_interval():
    code, output = run_cli(
        "decompose", "--pea", "gamma(lex(Z/4, Z), (1, 0))", "--H", "Z/4", "--seed", "5"
    )
    assert code == 0
    assert "ordered: True" in output


def test_cli_classify_perfect():
    code, output = run_cli(
        "classify-perfect",
        "--pea", "gamma(lex(Q, Z^2), (1, (0, 0)))",
        "--H", "Q",
        "--seed", "3",
    )
    assert code == 0
    assert "strong_h_perfect: True" in output


def test_cli_represent_and_corrupt():
    code, output = run_cli(
        "represent", "--H", "Z/4", "--G", "Z",
        "--shuffle", "translate(1)", "--samples", "120", "--seed", "2",
    )
    assert code == 0 and "#! verdict=pass" in output
    code2, output2 = run_cli(
        "represent", "--H", "Z/4", "--G", "Z",
        "--shuffle", "translate(1)", "--samples", "120", "--seed", "2",
        "--corrupt",
    )
    assert code2 == 1
    assert "hom_failures=0" not in output2


def test_cli_functor():
    code, output = run_cli(
        "functor", "--hom", "scale(2)", "--G", "Z", "--H", "Q", "--samples", "60"
    )
    assert code == 0
    assert "identity law: True" in output


def test_cli_byte_identical_runs():
    argv = [
        "represent", "--H", "Q", "--G", "Z^2",
        "--shuffle", "permute(1,0)", "--samples", "80", "--seed", "9",
    ]
    first = run_cli(*argv)
    second = run_cli(*argv)
    assert first == second


def test_cli_error_exit_code():
    code, output = run_cli("check-rdp", "--group", "lex(Z^2, Z)",
                           "--a1", "(0,0)", "--a2", "(0,0)", "--b1", "(0,0)", "--b2", "(0,0)")
    assert code == 2
    assert "error:" in output


def test_cli_decompose_finite_file(tmp_path):
    path = tmp_path / "chain.pea"
    path.write_text(format_pea_file(finite_chain(2)))
    code, output = run_cli("decompose", "--pea", str(path), "--H", "Z/2")
    assert code == 0
    assert "E_0 = {0}" in output
    assert "E_1/2 = {1}" in output


def test_cli_oracle_rdp():
    code, output = run_cli(
        "oracle-rdp", "--group", "lex(Z, Z)",
        "--a1", "(1, 2)", "--a2", "(0, 3)",
        "--b1", "(1, 5)", "--b2", "(0, 0)",
        "--box", "25",
    )
    assert code == 0
    assert "#! verdict=pass" in output
