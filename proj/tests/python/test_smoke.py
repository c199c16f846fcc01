"""Smoke tests for the psicalc extension module and CLI JSON output."""

import json
import os
import subprocess

import pytest

psicalc = pytest.importorskip("psicalc")


def test_psi_golden():
    assert psicalc.psi(60) == "x^8 - 7*x^6 + 14*x^4 - 8*x^2 + 1"
    assert psicalc.psi(1) == "x - 2"
    assert psicalc.psi(2) == "x + 2"
    assert psicalc.psi_expr(60) == "q-_15 q-_1/(q-_5 q-_3)"
    assert psicalc.psi_coeffs(12) == ["1", "0", "-3"]


def test_methods_agree():
    for n in range(3, 80):
        assert psicalc.psi(n) == psicalc.psi_wz(n)
        assert psicalc.psi(n) == psicalc.psi_barnes(n)
        assert psicalc.psi(n) == psicalc.psi_numeric(n)


def test_degree_law():
    for n in range(3, 200):
        assert psicalc.psi_degree(n) == psicalc.euler_phi(n) // 2


def test_sequences_and_factorizations():
    assert psicalc.c(5) == "x^5 - 4*x^3 + 3*x"
    assert psicalc.t(3) == "x^3 - 3*x"
    assert psicalc.p_plus(1) == "x + 1"
    assert psicalc.factor("T", 15) == [4, 12, 20, 60]
    assert psicalc.factor("W", 1) == [3]
    assert psicalc.is_irreducible_t(8)
    assert not psicalc.is_irreducible_t(12)
    assert psicalc.is_irreducible_vw(3)


def test_precision_error():
    with pytest.raises(psicalc.PrecisionExceeded):
        psicalc.psi_numeric(150, 16)


def test_verify_suite():
    ok, lines = psicalc.verify(10)
    assert ok
    assert all(line.startswith("PASS") for line in lines)


def test_cli_json_roundtrip():
    cli = os.environ.get("PSICALC_CLI")
    if not cli:
        pytest.skip("PSICALC_CLI not set")
    record = json.loads(
        subprocess.check_output([cli, "psi", "60", "--format", "json"], text=True)
    )
    assert record["n"] == 60
    assert record["degree"] == 8
    assert record["expr"]["num"] == ["q-_15", "q-_1"]
    assert record["expr"]["den"] == ["q-_5", "q-_3"]
    # round-trip: rebuild the polynomial from JSON coefficients and
    # compare against the text rendering
    coeffs = [int(c) for c in record["coeffs"]]
    degree = record["degree"]
    x = [degree - i for i in range(len(coeffs))]
    rebuilt = {e: c for e, c in zip(x, coeffs) if c != 0}
    text = subprocess.check_output([cli, "psi", "60"], text=True).strip()
    parsed = {}
    for term in text.replace(" - ", " +-").split(" +"):
        term = term.strip().replace("*", "")
        if "x" in term:
            head, _, exp = term.partition("x^")
            if not exp:
                head, exp = term[:-1], "1"
            coeff = int(head) if head not in ("", "-") else (-1 if head == "-" else 1)
            parsed[int(exp)] = coeff
        else:
            parsed[0] = int(term)
    assert parsed == rebuilt
