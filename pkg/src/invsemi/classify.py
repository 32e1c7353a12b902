"""Assign each involution semigroup the first sufficient finite-basis condition it meets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .catalog import A0, B0, table1_catalog
from .model import (InvolutionSemigroup, c4_identities_report, canonical_key, find_permutation_identity,
                    is_commutative, is_isomorphic, nilpotency_degree, periodicity,
                    permutation_identity_holds, satisfies_xyz_eq_xz)

DEFAULT_PERM_BOUND = 6

TAGS = ("C0", "C1", "C2", "C3", "C4", "KnownBasis", "Unresolved")


@dataclass(frozen=True)
class FBVerdict:
    tag: str
    evidence: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        if self.tag == "C2":
            return f"C2({self.evidence['degree']})"
        if self.tag == "KnownBasis":
            return f"KnownBasis({self.evidence['model']})"
        return self.tag


def classify(S: InvolutionSemigroup, perm_bound: int = DEFAULT_PERM_BOUND) -> FBVerdict:
    if S.has_trivial_involution():
        return FBVerdict("C0", {"reason": "identity involution; the semigroup reduct has order <= 5"})
    if is_commutative(S):
        p = periodicity(S)
        return FBVerdict("C1", {"periodicity": [p.m0, p.k0]})
    d = nilpotency_degree(S)
    if d is not None:
        return FBVerdict("C2", {"degree": d})
    if satisfies_xyz_eq_xz(S):
        return FBVerdict("C3", {"identity": "xyz ~ xz"})
    failed = []
    c4 = c4_identities_report(S)
    if c4 is None:
        perm = find_permutation_identity(S, perm_bound)
        if perm is not None:
            return FBVerdict("C4", {"permutation_length": perm[0], "permutation": list(perm[1])})
        failed.append(f"no permutation identity up to length {perm_bound} (bound exhausted)")
    else:
        failed.append(f"{c4[0]} fails at {c4[1]}")
    for name, model in (("A0", A0), ("B0", B0)):
        iso = is_isomorphic(S, model)
        if iso is not None:
            return FBVerdict("KnownBasis", {"model": name, "isomorphism": list(iso)})
    return FBVerdict("Unresolved", {"failed": ["not commutative", "not nilpotent", "xyz ~ xz fails"] + failed})


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: bool
    witness: object = None


def check_condition_hypotheses(S: InvolutionSemigroup, condition: str,
                               perm_bound: int = DEFAULT_PERM_BOUND) -> list[Hypothesis]:
    """Itemised hypothesis checks for one of the conditions C1..C4."""
    p = periodicity(S)
    periodic = Hypothesis("periodic", True, {"m0": p.m0, "k0": p.k0})
    if condition == "C1":
        return [periodic, Hypothesis("commutative", is_commutative(S), _noncommuting_pair(S))]
    if condition == "C2":
        d = nilpotency_degree(S)
        return [Hypothesis("x1...xn ~ 0 for some n", d is not None, d)]
    if condition == "C3":
        return [Hypothesis("xyz ~ xz", satisfies_xyz_eq_xz(S), _xyz_counterexample(S))]
    if condition == "C4":
        perm = find_permutation_identity(S, perm_bound)
        bad = c4_identities_report(S)
        return [
            periodic,
            Hypothesis("permutative", perm is not None,
                       perm if perm is not None else f"none up to length {perm_bound}"),
            Hypothesis("x*Tx ~ xTx ~ xTx* and x*x ~ xx ~ xx*", bad is None, bad),
        ]
    raise ValueError(f"unknown condition {condition!r}")


def _noncommuting_pair(S):
    for a in range(1, S.n + 1):
        for b in range(a + 1, S.n + 1):
            if S.mul[a - 1][b - 1] != S.mul[b - 1][a - 1]:
                return {"x": a, "y": b}
    return None


def _xyz_counterexample(S):
    m = S.mul
    for x in range(1, S.n + 1):
        for y in range(1, S.n + 1):
            for z in range(1, S.n + 1):
                if m[m[x - 1][y - 1] - 1][z - 1] != m[x - 1][z - 1]:
                    return {"x": x, "y": y, "z": z}
    return None


def verify_verdict(S: InvolutionSemigroup, v: FBVerdict) -> bool:
    """Re-check the evidence attached to a verdict independently."""
    from .model import satisfies_zero
    from .words import Letter
    if v.tag == "C2":
        d = v.evidence["degree"]
        w = tuple(Letter(chr(ord("a") + i)) for i in range(d))
        return satisfies_zero(S, w)
    if v.tag == "C4":
        perm = [k - 1 for k in v.evidence["permutation"]]
        return permutation_identity_holds(S, perm)
    return True


def table1_names() -> dict:
    return {canonical_key(e.semigroup): e.name for e in table1_catalog()}


def classify_census(structures, perm_bound: int = DEFAULT_PERM_BOUND) -> list[dict]:
    names = table1_names()
    out = []
    for S in structures:
        v = classify(S, perm_bound)
        row = {
            "canonical_table": S.mul_digits(),
            "inv": S.inv_digits(),
            "verdict": v.label,
            "evidence": v.evidence,
        }
        name = names.get(canonical_key(S))
        if name:
            row["table1_name"] = name
        out.append(row)
    return out


def verdict_counts(rows: list[dict]) -> dict:
    counts: dict = {}
    for r in rows:
        tag = r["verdict"].split("(")[0]
        counts[tag] = counts.get(tag, 0) + 1
    return counts


def report_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=1)
