"""Acceptance criteria 1 to 9, one test each.

The session summary prints one PASS/FAIL line per criterion; criterion 10
(suite wall time) is judged by the hook in ``conftest.py`` after the run.
"""

import itertools
import json
import math
import time
from fractions import Fraction

import pytest
import sympy as sp

from tangential_period import cli, fixtures
from tangential_period.bell import ordinary_bell, partial_bell
from tangential_period.field import classify, dump_field
from tangential_period.halfreturn import half_return, involution_defect
from tangential_period.oracle import (
    SimulationConfig, convergence_report, numeric_period, numeric_tilde_period,
)
from tangential_period.period import corollary_values, period_constants

from conftest import cubic_center, random_centers

DEFAULT = SimulationConfig()


def run_cli(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = cli.run([*argv, "--out", str(out)])
    return code, json.loads(out.read_text())


def write(tmp_path, field, name):
    path = tmp_path / f"{name}.json"
    path.write_text(dump_field(field))
    return str(path)


@pytest.fixture(scope="module")
def center_family():
    """At least 50 generated mirrored centers plus the named center fixtures."""
    named = [fixtures.e1(), fixtures.e2(), fixtures.e3(), fixtures.e2_quartic(), cubic_center()]
    return random_centers(50, seed=2024) + named


def test_criterion_01(tmp_path):
    """criterion 1: E1 period constants (0,4,0,0,0), numeric period 0.4 at x0=0.1, under 1 s"""
    src = write(tmp_path, fixtures.e1(), "e1")
    start = time.perf_counter()
    code, report = run_cli(tmp_path, "period", "--input", src, "--order", "4")
    code2, sim = run_cli(tmp_path, "simulate", "--input", src, "--grid", "0.1:0.1:1")
    elapsed = time.perf_counter() - start
    assert code == code2 == 0
    assert report["That"] == ["0", "4", "0", "0", "0"]
    assert abs(sim["rows"][0]["period"] - 0.4) < 1e-8
    assert elapsed < 1.0


def test_criterion_02():
    """criterion 2: E2 first period constant 3 = closed form, numeric period 0.3 at x0=0.1"""
    field = fixtures.e2()
    data = period_constants(field, 3)
    assert data.That[1] == 3 == corollary_values(field)[1]
    assert abs(numeric_period(field, 0.1, DEFAULT).period - 0.3) < 1e-8


def test_criterion_03():
    """criterion 3: E3 classifies as (2,1), first period constant 4, numeric agreement"""
    field = fixtures.e3()
    c = classify(field)
    assert (c.kplus, c.kminus) == (2, 1)
    data = period_constants(field, 3)
    assert data.That[1] == 4
    assert abs(numeric_period(field, 0.1, DEFAULT).period - data.T(0.1)) < 1e-8


def test_criterion_04(center_family):
    """criterion 4: T0 = 0 and T1 > 0 exactly on >= 50 generated centers plus fixtures"""
    assert len(center_family) >= 55
    failures = []
    for field in center_family:
        That = period_constants(field).That
        if not (That[0] == 0 and That[1] > 0 and isinstance(That[1], Fraction)):
            failures.append(field)
    assert not failures


def test_criterion_05(center_family):
    """criterion 5: series T0, T1 equal the closed-form values on every center of criterion 4"""
    for field in center_family:
        assert period_constants(field).That[:2] == corollary_values(field)


def test_criterion_06():
    """criterion 6: reparametrized numeric period = 2(x0 - phi_num(x0)) within 1e-7, E1-E3"""
    worst = 0.0
    for field in (fixtures.e1(), fixtures.e2(), fixtures.e3()):
        for x0 in DEFAULT.x_grid:
            phi_num = numeric_period(field, x0, DEFAULT).landing_x_plus
            tilde = numeric_tilde_period(field, x0, DEFAULT)
            worst = max(worst, abs(tilde - 2 * (x0 - phi_num)))
    assert worst < 1e-7


def test_criterion_07():
    """criterion 7: partial Bell equals brute-force enumeration for p <= 8; conversion identity"""
    xs = sp.symbols("x1:9")
    for p in range(1, 9):
        for q in range(1, p + 1):
            m = p - q + 1
            args = list(xs[:m])
            brute = sp.Integer(0)
            for b in itertools.product(*(range(p // j + 1) for j in range(1, m + 1))):
                if sum(b) == q and sum(j * bj for j, bj in enumerate(b, 1)) == p:
                    term = sp.Integer(math.factorial(p))
                    for j, bj in enumerate(b, 1):
                        term *= (args[j - 1] / math.factorial(j)) ** bj / math.factorial(bj)
                    brute += term
            assert sp.expand(partial_bell(p, q, args) - brute) == 0
            scaled = [math.factorial(j) * a for j, a in enumerate(args, 1)]
            lhs = ordinary_bell(p, q, args) * Fraction(math.factorial(p), math.factorial(q))
            assert sp.expand(lhs - partial_bell(p, q, scaled)) == 0


def test_criterion_08():
    """criterion 8: log-log residual slope >= N + 0.5 on [1e-3, 1e-1], N = 4, quartic-perturbed E2"""
    field = fixtures.e2_quartic(100)
    n = 4
    cfg = SimulationConfig(abs_tol=1e-22, rel_tol=1e-14, event_tol=1e-20)
    data = period_constants(field, n)
    # the period is not a polynomial of degree <= N
    assert any(period_constants(field, 8).That[n + 1:])
    report = convergence_report(field, n, cfg, data=data)
    assert min(report.x) == pytest.approx(1e-3) and max(report.x) == pytest.approx(1e-1)
    assert not report.saturated and report.points_used == len(report.x)
    assert report.slope >= n + 0.5


def test_criterion_09(tmp_path, center_family):
    """criterion 9: half-return maps are involutions on all centers; E5 exits 3 at index 2"""
    for field in center_family:
        for side in (1, -1):
            data = half_return(field, side)
            assert involution_defect(data.phi).is_zero()
    src = write(tmp_path, fixtures.e5(), "e5")
    code, report = run_cli(tmp_path, "period", "--input", src, "--order", "4")
    assert code == 3
    assert report["first_mismatch_index"] == 2
