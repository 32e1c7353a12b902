"""The ten acceptance criteria, one test each.

Every test records a PASS/FAIL line (shown in the terminal summary and on
stdout with ``-s``) before asserting, so a red criterion still reports what it saw.
"""

import time

import pytest

from invsemi.battery import EXPECTED_CENSUS, EXPECTED_VERDICTS
from invsemi.catalog import A0, B0, SL3, SL3_QUOTIENT, table1_catalog
from invsemi.census import match_table1, run_census
from invsemi.classify import classify, verdict_counts
from invsemi.model import is_homomorphism, validate
from invsemi.rules import failing_rules, system_a0, system_b0
from invsemi.sweep import exhaustive_sweep, random_sweep

from conftest import ACCEPTANCE_LINES

SEED = 20240


def record(n, title, ok, detail, seconds, limit):
    ok = ok and seconds < limit
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {title}: {detail} ({seconds:.1f}s, limit {limit}s)"
    ACCEPTANCE_LINES[n] = line
    print(line)
    assert ok, line


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


@pytest.fixture(scope="module")
def order4():
    return timed(lambda: run_census(4))


@pytest.fixture(scope="module")
def sweeps():
    return {s: exhaustive_sweep(s, n_bases=3, max_len=7) for s in ("a0", "b0")}


@pytest.fixture(scope="module")
def random_reports():
    return {s: random_sweep(s, seed=SEED, count=10_000, n_bases=4, max_len=12) for s in ("a0", "b0")}


def _census_check(n):
    res, secs = timed(lambda: run_census(n))
    got = {k: getattr(res.report, k) for k in EXPECTED_CENSUS[n]}
    return got == EXPECTED_CENSUS[n], ", ".join(f"{k}={v}" for k, v in got.items()), secs


def test_criterion_01_census_order_2():
    ok, detail, secs = _census_check(2)
    record(1, "census order 2", ok, detail, secs, 1)


def test_criterion_02_census_order_3():
    ok, detail, secs = _census_check(3)
    record(2, "census order 3", ok, detail, secs, 1)


def test_criterion_03_census_order_4(order4):
    res, secs = order4
    got = {k: getattr(res.report, k) for k in EXPECTED_CENSUS[4]}
    record(3, "census order 4", got == EXPECTED_CENSUS[4],
           ", ".join(f"{k}={v}" for k, v in got.items()), secs, 300)


def test_criterion_04_table1_round_trip(order4):
    res, _ = order4
    m, secs = timed(lambda: match_table1(res.involution_semigroups, table1_catalog()))
    all_valid = all(validate(e.semigroup) for e in table1_catalog())
    ok = m.ok and len(m.pairs) == 25 and all_valid
    detail = (f"{len(m.pairs)} pairs, unmatched catalog {m.unmatched_catalog}, "
              f"unmatched enumerated {len(m.unmatched_enumerated)}, invalid {m.invalid_catalog}")
    record(4, "Table 1 round trip", ok, detail, secs, 30)


def test_criterion_05_classifier_labels(order4):
    res, _ = order4
    counts, secs = timed(lambda: verdict_counts([{"verdict": classify(S).label}
                                                 for S in res.involution_semigroups]))
    detail = ", ".join(f"{k}x{v}" for k, v in sorted(counts.items()))
    record(5, "classifier labels", counts == EXPECTED_VERDICTS and "Unresolved" not in counts,
           detail, secs, 60)


def test_criterion_06_basis_satisfaction():
    (bad_a, bad_b), secs = timed(lambda: (failing_rules(A0, system_a0()),
                                          failing_rules(B0, system_b0(), tags=("4", "7", "9"))))
    n_a = len(system_a0().names())
    detail = f"A0 fails {len(bad_a)} of {n_a} rule variants (4a-4e, 6a-6f); B0 fails {len(bad_b)} of (4), (7), (9)"
    record(6, "basis satisfaction", not bad_a and not bad_b, detail, secs, 10)


@pytest.mark.slow
def test_criterion_07_decision_matches_model(sweeps, random_reports):
    ok = all(r.decision_ok for r in sweeps.values()) and all(r.ok for r in random_reports.values())
    secs = sum(r.seconds for r in sweeps.values()) + sum(r.seconds for r in random_reports.values())
    detail = "; ".join(
        [f"{r.system} exhaustive: {r.words} words, {r.key_classes} classes, "
         f"{len(r.split_classes) + len(r.merged_classes)} discrepancies" for r in sweeps.values()]
        + [f"{r.system} random: {r.pairs} pairs, {len(r.discrepancies)} discrepancies, "
           f"{len(r.star_asymmetries)} star asymmetries" for r in random_reports.values()])
    record(7, "decide agrees with the model", ok, detail, secs, 600)


@pytest.mark.slow
def test_criterion_08_normalization_soundness(sweeps):
    ok = all(not r.normalization_failures and r.mixed_nonzero > 0 for r in sweeps.values())
    detail = "; ".join(f"{r.system}: {r.mixed_nonzero} mixed non-zero words, "
                       f"{len(r.normalization_failures)} failures" for r in sweeps.values())
    record(8, "normalization soundness", ok, detail, sum(r.seconds for r in sweeps.values()), 600)


@pytest.mark.slow
def test_criterion_09_zero_words(sweeps):
    ok = all(not r.zero_mismatches for r in sweeps.values())
    detail = "; ".join(f"{r.system}: {r.zero_words} zero words ({r.derived_zero_witnesses} via rewriting), "
                       f"{len(r.zero_mismatches)} mismatches" for r in sweeps.values())
    record(9, "zero-word characterization", ok, detail, sum(r.seconds for r in sweeps.values()), 600)


def test_criterion_10_quotient_onto_sl3():
    (a, b), secs = timed(lambda: (is_homomorphism(A0, SL3, SL3_QUOTIENT), is_homomorphism(B0, SL3, SL3_QUOTIENT)))
    record(10, "quotient onto Sl3", a and b, f"A0 {'ok' if a else 'fails'}, B0 {'ok' if b else 'fails'}", secs, 1)
