"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Timings are wall clock on a warm process; the session fixture exercises every
kernel once so JIT compilation is not billed to any criterion.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

import jsonschema
import pytest

import qeuler as Q
from qeuler.verify import SuiteConfig, run_suite

CHI3 = Q.character_from_table(3, [0, 1, -1])


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    cfg = Q.SeriesConfig(max_terms=50, tolerance=1e-3)
    qf = Q.QParam.of(0.5)
    Q.euler_poly_order(1, 1, qf, 1, "series", cfg)
    Q.zeta_multi(0.5, 1, qf, 1, cfg)
    bp = Q.BarnesParams((1, 2), (0, 0))
    Q.barnes_euler(1, bp, qf, 1, "series", cfg)
    Q.barnes_zeta(0.5, bp, qf, 1, cfg)
    yield


def _timed(config):
    t0 = time.perf_counter()
    rep = run_suite(config)
    return rep, time.perf_counter() - t0


def _report(name, ok, wall, limit, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} {name} wall={wall:.2f}s" \
           f" limit={limit:.0f}s {detail}".rstrip()
    print(line)
    assert ok, line


def test_criterion_1_prop1_grid():
    rep, wall = _timed(SuiteConfig(only=("prop1",)))
    ok = rep.failed == 0 and rep.total == 216 and wall < 5.0
    _report("criterion-1 closed-vs-series grid", ok, wall, 5,
            f"entries={rep.total} failed={rep.failed}")


def test_criterion_2_recurrence_exact():
    rep, wall = _timed(SuiteConfig(only=("recurrence",)))
    ok = rep.failed == 0 and rep.total == 30 and wall < 1.0
    all_exact = all(e.mode == "exact" for e in rep.entries)
    _report("criterion-2 exact recurrence", ok and all_exact, wall, 1,
            f"entries={rep.total} failed={rep.failed}")


def test_criterion_3_interpolation_block():
    t0 = time.perf_counter()
    total = failed = 0
    for tag in ("thm3", "thm5", "thm7", "thm10", "thm11", "finaldisplay"):
        rep = run_suite(SuiteConfig(only=(tag,)))
        total += rep.total
        failed += rep.failed
    wall = time.perf_counter() - t0
    ok = failed == 0 and wall < 30.0
    _report("criterion-3 zeta interpolation block", ok, wall, 30,
            f"entries={total} failed={failed}")


def test_criterion_4_chi_hr_distribution():
    rep, wall = _timed(SuiteConfig(only=("thm8",)))
    exact_entries = [e for e in rep.entries
                     if e.mode == "exact" and not e.informational]
    float_entries = [e for e in rep.entries if e.mode == "float"]
    ok = (rep.failed == 0 and wall < 10.0
          and len(exact_entries) == 10 and len(float_entries) == 10)
    _report("criterion-4 distribution relation", ok, wall, 10,
            f"exact={len(exact_entries)} float={len(float_entries)} "
            f"failed={rep.failed}")


def test_criterion_5_classical_limits():
    rep, wall = _timed(SuiteConfig(only=("qlimit",)))
    ok = rep.failed == 0 and wall < 10.0
    _report("criterion-5 classical limits", ok, wall, 10,
            f"entries={rep.total} failed={rep.failed}")


def test_criterion_6_binomial_identities():
    t0 = time.perf_counter()
    g = run_suite(SuiteConfig(only=("gaussbinomial",)))
    nb = run_suite(SuiteConfig(only=("negbinomial",)))
    wall = time.perf_counter() - t0
    ok = g.failed == 0 and nb.failed == 0 and g.total == 13 and wall < 2.0
    _report("criterion-6 q-binomial identities", ok, wall, 2,
            f"gauss={g.total} negbinom={nb.total}")


def test_criterion_7_normalizations():
    t0 = time.perf_counter()
    qe = Q.QParam.of(Fraction(1, 2))
    qf = Q.QParam.of(0.5)
    cfg = Q.SeriesConfig(max_terms=400, tolerance=1e-10)
    one = Q.Number.exact(1)
    triv = Q.trivial_character()
    bp0 = Q.BarnesParams((1, 2), (0, 0))
    ok = True
    # exact lane: finite forms give 1 on the nose
    for r in (1, 2, 3, 4):
        ok &= Q.zeta_multi(0, r, qe, 2, cfg) == one
        ok &= Q.euler_poly_order(0, r, qe, 1, "closed") == one
    ok &= Q.euler_poly(0, qe, 1) == one
    ok &= Q.euler_poly_hr(0, 1, 1, qe, 1, "closed") == one
    ok &= Q.zeta_multi_h(0, 1, 1, qe, 1, cfg) == one
    ok &= Q.euler_chi(0, triv, qe, 1, "distribution") == one
    ok &= Q.euler_chi_order(0, 2, triv, qe, 1, cfg, method="closed") == one
    ok &= Q.euler_chi_hr(0, 1, 1, triv, qe, 1, "distribution") == one
    ok &= Q.barnes_euler(0, bp0, qe, 1, "closed") == one
    # float lane: series routes agree to tolerance plus certified tails
    checks = [
        Q.euler_poly_order(0, 2, qf, 1, "series", cfg, with_tail=True),
        Q.euler_chi(0, triv, qf, 1, "series", cfg, with_tail=True),
        Q.barnes_euler_chi(0, triv, bp0, qf, 1, cfg, with_tail=True),
        Q.zeta_multi(0, 2, qf, 1, cfg, method="series", with_tail=True),
        Q.l_multi(0, triv, 2, qf, 1, cfg, with_tail=True),
        Q.l_multi_h(0, triv, 1, 1, qf, 1, cfg, with_tail=True),
        Q.barnes_zeta(0, bp0, qf, 1, cfg, with_tail=True),
        Q.barnes_l(0, triv, bp0, qf, 1, cfg, with_tail=True),
    ]
    for sv in checks:
        ok &= abs(complex(sv.value) - 1) <= 1e-10 + sv.tail_bound
    wall = time.perf_counter() - t0
    ok = bool(ok) and wall < 1.0
    _report("criterion-7 normalizations", ok, wall, 1)


def test_criterion_8_specialization_lattice():
    rep, wall = _timed(SuiteConfig(only=("specializationlattice",)))
    ok = rep.failed == 0 and rep.total == 20 and wall < 5.0
    _report("criterion-8 specialization lattice", ok, wall, 5,
            f"points={rep.total} failed={rep.failed}")


VERIFY_REPORT_SCHEMA = {
    "type": "object",
    "required": ["config_fingerprint", "entries", "summary"],
    "properties": {
        "config_fingerprint": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "params", "lhs", "rhs", "abs_diff",
                             "bound", "pass"],
                "properties": {
                    "id": {"type": "string"},
                    "params": {"type": "object"},
                    "lhs": {"type": "string"},
                    "rhs": {"type": "string"},
                    "abs_diff": {"type": ["number", "null"]},
                    "bound": {"type": "number"},
                    "pass": {"type": "boolean"},
                    "mode": {"enum": ["exact", "float"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "passed", "failed", "wall_ms"],
            "properties": {
                "total": {"type": "integer"},
                "passed": {"type": "integer"},
                "failed": {"type": "integer"},
                "wall_ms": {"type": "integer"},
            },
        },
    },
}


def test_criterion_9_cli_default_suite():
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "qeuler", "verify", "--suite", "default"],
        capture_output=True, text=True)
    wall = time.perf_counter() - t0
    doc = json.loads(proc.stdout) if proc.stdout else {}
    jsonschema.validate(doc, VERIFY_REPORT_SCHEMA)
    ok = (proc.returncode == 0 and wall < 60.0
          and doc["summary"]["total"] >= 200
          and doc["summary"]["failed"] == 0)
    _report("criterion-9 cli default suite", ok, wall, 60,
            f"exit={proc.returncode} entries={doc['summary']['total']}")
