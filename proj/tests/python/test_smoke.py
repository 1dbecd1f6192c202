import json
import os
import subprocess
from math import comb

import pytest

import qseries as qs

ZZ = qs.CoefficientRing.exact()
F5 = qs.CoefficientRing.modulo(5)


def brute_partitions(n):
    # p(n) via the pentagonal recurrence, independent of the library.
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1, g2 = j * (3 * j - 1) // 2, j * (3 * j + 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p


def test_series_basics():
    a = qs.TruncatedSeries(ZZ, [1, -1])
    inv = qs.invert(a)
    assert inv.coefficients() == [1, 1]
    assert inv.order == 1
    s = qs.make(ZZ, 5, [(0, 1), (2, 3)])
    assert (s * s).coefficients() == [1, 0, 6, 0, 9, 0]
    assert repr(qs.pochhammer(1, ZZ, 5)) == "1 - q - q^2 + q^5 + O(q^6)"
    assert (s ** 0).coefficients() == [1, 0, 0, 0, 0, 0]
    assert qs.dissect(qs.TruncatedSeries(ZZ, list(range(10))), 5, 4).coefficients() == [4, 9]
    assert qs.reduce_mod(s, 5).ring == F5


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        qs.TruncatedSeries(ZZ, [1]) + qs.TruncatedSeries(F5, [1])
    with pytest.raises(ValueError):
        qs.invert(qs.TruncatedSeries(ZZ, [2, 1]))
    with pytest.raises(qs.OrderTooSmall):
        qs.replay_k4_proof(10)


def test_tables_match_independent_values():
    assert qs.partition_table(300) == brute_partitions(300)
    big = qs.partition_table(500)[500]
    assert big == 2300165032574323995027
    assert qs.two_color_table(6, 18)[18] == 487
    inv = qs.invert(qs.pochhammer(1, ZZ, 80) * qs.pochhammer(4, ZZ, 80))
    assert inv.coefficients() == qs.two_color_table(4, 80)


def test_frobenius_binomials():
    # (1 - x)^5 = 1 - x^5 mod 5 is the one-factor case.
    assert all(comb(5, i) % 5 == 0 for i in range(1, 5))
    assert qs.check_frobenius_congruence(2, 5, 100)["passed"]


def test_congruences():
    r = qs.verify_family(4, 40)
    assert r["verdict"] == "holds_up_to"
    assert r["counterexample"] is None
    r = qs.verify_family(12, 5)
    assert r["verdict"] == "fails"
    assert r["counterexample"]["value"] == "78"
    reports = qs.characterize_all(8)
    holds = {r["k"] for r in reports if r["verdict"] == "holds_up_to"}
    assert holds == {1, 2, 3, 4, 5, 7, 8, 10, 15, 17, 20}
    assert qs.delta_alpha(4) == 547
    a = qs.residue_analysis()
    assert a["triangular_residues"] == [0, 1, 3]


def test_replay():
    steps = qs.replay_k4_proof(60)
    assert [s["step_id"] for s in steps] == [f"s{i}" for i in range(1, 15)]
    assert all(s["passed"] for s in steps)
    assert steps[-1]["order"] == 11


@pytest.mark.skipif("QSERIES_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_json_envelope():
    out = subprocess.run(
        [os.environ["QSERIES_CLI"], "characterize", "--bound", "2", "--format", "json"],
        capture_output=True, text=True, check=False)
    assert out.returncode == 1
    envelope = json.loads(out.stdout)
    assert envelope["command"] == "characterize"
    assert envelope["status"] == "failed"
    assert envelope["parameters"]["bound"] == 2
    assert len(envelope["results"]) == 24
    assert envelope["results"][5]["counterexample"]["value"] == "487"
