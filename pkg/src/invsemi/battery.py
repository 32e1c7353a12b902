"""The self-test battery: census counts, catalog match, classifier labels, rule
satisfaction, the decision sweeps and the quotient maps."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .catalog import A0, B0, SL3, SL3_QUOTIENT, table1_catalog
from .census import match_table1, run_census
from .classify import classify, verdict_counts
from .model import is_homomorphism
from .rules import failing_rules, system_a0, system_b0

EXPECTED_CENSUS = {
    2: {"involution_semigroups": 3, "trivial_involution": 3, "nontrivial_involution": 0},
    3: {"involution_semigroups": 15, "trivial_involution": 12, "nontrivial_involution": 3},
    4: {"semigroups_up_to_iso_antiiso": 126, "no_involution": 62, "involution_semigroups": 83,
        "trivial_involution": 58, "nontrivial_involution": 25},
}

EXPECTED_VERDICTS = {"C0": 58, "C1": 19, "C2": 2, "C3": 1, "C4": 1, "KnownBasis": 2}

DEFAULT_SEED = 20240


@dataclass
class Item:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail, "seconds": round(self.seconds, 3)}


def _timed(name, fn) -> Item:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing item is a failing item
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Item(name, ok, detail, time.perf_counter() - t0)


def census_item(n: int, jobs: int = 1, cache_dir=None) -> Item:
    def run():
        rep = run_census(n, jobs, cache_dir).report
        got = {k: getattr(rep, k) for k in EXPECTED_CENSUS[n]}
        return got == EXPECTED_CENSUS[n], ", ".join(f"{k}={v}" for k, v in got.items())
    return _timed(f"census n={n}", run)


@lru_cache(maxsize=4)
def _census4(jobs, cache_dir):
    return run_census(4, jobs, cache_dir)


def table1_item(jobs: int = 1, cache_dir=None, catalog=None) -> Item:
    def run():
        res = _census4(jobs, cache_dir)
        m = match_table1(res.involution_semigroups, catalog if catalog is not None else table1_catalog())
        detail = f"{len(m.pairs)} matched"
        for label, items in (("unmatched catalog", m.unmatched_catalog),
                             ("unmatched enumerated", m.unmatched_enumerated),
                             ("invalid catalog", m.invalid_catalog)):
            if items:
                detail += f"; {label}: {', '.join(items)}"
        return m.ok and len(m.pairs) == 25, detail
    return _timed("Table 1 round trip", run)


def classifier_item(jobs: int = 1, cache_dir=None) -> Item:
    def run():
        res = _census4(jobs, cache_dir)
        rows = [{"verdict": classify(S).label} for S in res.involution_semigroups]
        counts = verdict_counts(rows)
        return counts == EXPECTED_VERDICTS, ", ".join(f"{k}x{v}" for k, v in sorted(counts.items()))
    return _timed("classifier labels", run)


def rules_item() -> Item:
    def run():
        bad_a = failing_rules(A0, system_a0())
        bad_b = failing_rules(B0, system_b0(), tags=("4", "7", "9"))
        n_a = len(system_a0().names())
        detail = f"A0: {n_a - len(bad_a)}/{n_a} rule variants hold; B0 (4,7,9): " \
                 f"{'all hold' if not bad_b else 'failing ' + ', '.join(bad_b)}"
        return not bad_a and not bad_b, detail
    return _timed("basis satisfaction", run)


def quotient_item() -> Item:
    def run():
        a = is_homomorphism(A0, SL3, SL3_QUOTIENT)
        b = is_homomorphism(B0, SL3, SL3_QUOTIENT)
        return a and b, f"A0 -> Sl3 {'ok' if a else 'fails'}, B0 -> Sl3 {'ok' if b else 'fails'}"
    return _timed("quotient onto Sl3", run)


def sweep_items(n_bases: int = 3, max_len: int = 7) -> list[Item]:
    from .sweep import exhaustive_sweep
    out = []
    for system in ("a0", "b0"):
        def run(system=system):
            r = exhaustive_sweep(system, n_bases, max_len)
            return r.ok, r.summary()
        out.append(_timed(f"exhaustive sweep {system.upper()}", run))
    return out


def random_items(seed: int = DEFAULT_SEED, count: int = 10_000) -> list[Item]:
    from .sweep import random_sweep
    out = []
    for system in ("a0", "b0"):
        def run(system=system):
            r = random_sweep(system, seed, count)
            return r.ok, r.summary()
        out.append(_timed(f"random pairs {system.upper()}", run))
    return out


def run_battery(quick: bool = False, seed: int = DEFAULT_SEED, jobs: int = 1, cache_dir=None,
                catalog=None) -> list[Item]:
    items = [census_item(2, jobs, cache_dir), census_item(3, jobs, cache_dir), census_item(4, jobs, cache_dir),
             table1_item(jobs, cache_dir, catalog), classifier_item(jobs, cache_dir), rules_item(),
             quotient_item()]
    items += random_items(seed, 1_000 if quick else 10_000)
    if not quick:
        items += sweep_items()
    return items
