"""Enumeration of small semigroups and involution semigroups.

Tables are generated by a row-major backtracking fill that rejects a partial
table as soon as a fully defined associativity triple fails.  Classes are then
collected by canonical keys (least relabeling over all permutations).
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .catalog import CatalogEntry, table1_catalog
from .model import (InvolutionSemigroup, canonical, canonical_form0, canonical_key, involution_obstructions,
                    involutions_of, relabel0)

MAX_ORDER = 5


GATED_ORDER = 5


class OrderGated(ValueError):
    """Order 5 runs for a long time; callers must opt in and name a cache directory."""


def _check_order(n: int) -> None:
    if not (1 <= n <= MAX_ORDER):
        raise ValueError(f"order {n} outside 1..{MAX_ORDER}")


def _triples_ok(t, n) -> bool:
    for x in range(n):
        rx = t[x]
        for y in range(n):
            xy = rx[y]
            if xy < 0:
                continue
            ry = t[y]
            rxy = t[xy]
            for z in range(n):
                yz = ry[z]
                if yz < 0:
                    continue
                l, r = rxy[z], rx[yz]
                if l >= 0 and r >= 0 and l != r:
                    return False
    return True


def _triple_ok(t, x, y, z) -> bool:
    xy, yz = t[x][y], t[y][z]
    if xy < 0 or yz < 0:
        return True
    l, r = t[xy][z], t[x][yz]
    return l < 0 or r < 0 or l == r


def _cell_ok(t, n, a, b) -> bool:
    """Associativity of every triple whose evaluation reads the cell (a, b).

    Triples not reading it were already consistent before it was filled.
    """
    r = range(n)
    for z in r:
        if not _triple_ok(t, a, b, z):
            return False
    for x in r:
        if not _triple_ok(t, x, a, b):
            return False
    for x in r:
        for y in r:
            if t[x][y] == a and not _triple_ok(t, x, y, b):
                return False
            if t[x][y] == b and not _triple_ok(t, a, x, y):
                return False
    return True


def _fill(t, n, cell, out):
    if cell == n * n:
        out.append(tuple(tuple(row) for row in t))
        return
    a, b = divmod(cell, n)
    # idempotent-first ordering on the diagonal: try a itself first
    order = [a] + [v for v in range(n) if v != a] if a == b else range(n)
    for v in order:
        t[a][b] = v
        if _cell_ok(t, n, a, b):
            _fill(t, n, cell + 1, out)
    t[a][b] = -1


def labeled_semigroups(n: int, first_row=None) -> list[tuple]:
    """All associative 0-based tables on {0..n-1}; optionally with a fixed first row."""
    _check_order(n)
    t = [[-1] * n for _ in range(n)]
    out: list = []
    if first_row is None:
        _fill(t, n, 0, out)
    else:
        t[0] = list(first_row)
        if _triples_ok(t, n):
            _fill(t, n, n, out)
    return out


def _first_rows(n):
    """First rows that are least under relabelings fixing element 0.

    Such a relabeling maps a first row r to b -> p(r[p^-1(b)]); every class
    has a member whose first row is least in its orbit, so the rest can be skipped.
    """
    perms = [(0,) + p for p in itertools.permutations(range(1, n))]
    out = []
    for r in itertools.product(range(n), repeat=n):
        images = []
        for p in perms:
            img = [0] * n
            for b in range(n):
                img[p[b]] = p[r[b]]
            images.append(tuple(img))
        if r == min(images):
            out.append(r)
    return out


def _canon_chunk(args):
    """Canonical forms of the tables with the given first rows.

    Each new table's whole relabeling orbit is marked as seen, so only one
    table per class is canonicalized.
    """
    n, rows = args
    perms = list(itertools.permutations(range(n)))
    seen: set = set()
    keys: set = set()
    for row in rows:
        for t in labeled_semigroups(n, row):
            if t in seen:
                continue
            orbit = [relabel0(t, None, p)[0] for p in perms]
            seen.update(orbit)
            keys.add(min(orbit))
    return list(keys)


def _transpose(t):
    return tuple(zip(*t))


def enumerate_semigroups(n: int, anti: bool = True, jobs: int = 1) -> list[tuple]:
    """Canonical 1-based tables, one per class (iso, or iso+anti-iso when ``anti``)."""
    _check_order(n)
    rows = _first_rows(n)
    if jobs > 1:
        chunks = [(n, rows[i::jobs]) for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_canon_chunk, chunks))
    else:
        parts = [_canon_chunk((n, rows))]
    iso = [tuple(tuple(v + 1 for v in row) for row in t) for t in sorted({k for part in parts for k in part})]
    return merge_anti_isomorphic(iso) if anti else iso


def merge_anti_isomorphic(iso_tables) -> list[tuple]:
    """One canonical table per iso+anti-iso class, from canonical 1-based iso representatives."""
    classes = set()
    for t in iso_tables:
        t0 = tuple(tuple(v - 1 for v in row) for row in t)
        classes.add(min(t0, canonical_form0(_transpose(t0))[0]))
    return [tuple(tuple(v + 1 for v in row) for row in t) for t in sorted(classes)]


def enumerate_involution_semigroups(n: int, jobs: int = 1, semigroups=None) -> list[InvolutionSemigroup]:
    """One canonical representative per isomorphism class of (S, *)."""
    _check_order(n)
    tables = semigroups if semigroups is not None else enumerate_semigroups(n, anti=False, jobs=jobs)
    found = {}
    for t in tables:
        for inv in involutions_of(t):
            S = InvolutionSemigroup(t, inv)
            k = canonical_key(S)
            if k not in found:
                found[k] = canonical(S)
    return [found[k] for k in sorted(found)]


@dataclass(frozen=True)
class CensusReport:
    n: int
    equivalence: str
    semigroups_up_to_iso: int
    semigroups_up_to_iso_antiiso: int
    no_involution: int
    involution_semigroups: int
    trivial_involution: int
    nontrivial_involution: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)


EQUIVALENCE_TAG = "iso-unary"


@dataclass
class CensusResult:
    report: CensusReport
    semigroups_iso: list
    semigroups_antiiso: list
    involution_semigroups: list
    pruned_by_obstructions: int


def run_census(n: int, jobs: int = 1, cache_dir: str | os.PathLike | None = None,
               allow_gated: bool = False) -> CensusResult:
    _check_order(n)
    if n >= GATED_ORDER and not (allow_gated and cache_dir):
        raise OrderGated(f"order {n} is best-effort only: pass allow_gated=True and a cache directory")
    iso = _cached_tables(n, "iso", cache_dir, lambda: enumerate_semigroups(n, anti=False, jobs=jobs))
    anti = _cached_tables(n, "iso+anti-iso", cache_dir, lambda: merge_anti_isomorphic(iso))
    pruned = 0
    no_inv = 0
    for t in anti:
        if involution_obstructions(t):
            pruned += 1
            no_inv += 1
        elif not involutions_of(t):
            no_inv += 1
    inv_sgs = enumerate_involution_semigroups(n, semigroups=iso)
    trivial = sum(1 for S in inv_sgs if S.has_trivial_involution())
    report = CensusReport(
        n=n,
        equivalence=EQUIVALENCE_TAG,
        semigroups_up_to_iso=len(iso),
        semigroups_up_to_iso_antiiso=len(anti),
        no_involution=no_inv,
        involution_semigroups=len(inv_sgs),
        trivial_involution=trivial,
        nontrivial_involution=len(inv_sgs) - trivial,
    )
    return CensusResult(report, iso, anti, inv_sgs, pruned)


def census(n: int, jobs: int = 1, cache_dir=None, allow_gated: bool = False) -> CensusReport:
    return run_census(n, jobs, cache_dir, allow_gated).report


# ---------------------------------------------------------------- cache files

def _table_line(t) -> str:
    n = len(t)
    mul = "".join(str(v) for row in t for v in row)
    return f"n={n} mul={mul} inv={''.join(str(i) for i in range(1, n + 1))}"


def write_cache(path, n: int, tag: str, tables) -> None:
    lines = [f"# census n={n} equivalence={tag}"] + [_table_line(t) for t in tables]
    Path(path).write_text("\n".join(lines) + "\n")


def read_cache(path, n: int, tag: str):
    text = Path(path).read_text().splitlines()
    if not text or text[0].strip() != f"# census n={n} equivalence={tag}":
        return None
    out = []
    for line in text[1:]:
        if line.strip():
            out.append(InvolutionSemigroup.from_text(line).mul)
    return out


def _cached_tables(n, tag, cache_dir, compute):
    if cache_dir is None:
        return compute()
    path = Path(cache_dir) / f"semigroups-n{n}-{tag.replace('+', '_')}.txt"
    if path.exists():
        got = read_cache(path, n, tag)
        if got is not None:
            return got
    tables = compute()
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    write_cache(path, n, tag, tables)
    return tables


# ---------------------------------------------------------------- Table 1

@dataclass
class Table1Match:
    pairs: list  # (catalog name, canonical text line)
    unmatched_catalog: list
    unmatched_enumerated: list
    invalid_catalog: list

    @property
    def ok(self) -> bool:
        return not (self.unmatched_catalog or self.unmatched_enumerated or self.invalid_catalog)


def match_table1(enumerated, catalog: list[CatalogEntry] | None = None) -> Table1Match:
    """Pair the non-trivial order-four classes with the catalog up to isomorphism."""
    from .model import validate
    catalog = table1_catalog() if catalog is None else catalog
    targets = [S for S in enumerated if not S.has_trivial_involution()]
    by_key = {canonical_key(S): S for S in targets}
    pairs, lost, invalid = [], [], []
    used = set()
    for e in catalog:
        S = e.semigroup
        if not validate(S):
            invalid.append(e.name)
            continue
        k = canonical_key(S)
        if k in by_key and k not in used:
            used.add(k)
            pairs.append((e.name, by_key[k].to_text()))
        else:
            lost.append(e.name)
    extra = [S.to_text() for k, S in by_key.items() if k not in used]
    return Table1Match(pairs, lost, extra, invalid)
