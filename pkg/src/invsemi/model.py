"""Finite involution semigroups given by Cayley tables.

Elements are ``1..n`` at every public boundary (tables, assignments, reports).
Internally the table is stored 0-based for fast indexing.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import Letter, Word, bases, render

DEFAULT_VAR_CAP = 8


class VariableCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class InvolutionSemigroup:
    """``mul[a][b]`` and ``inv[a]`` hold 1-based elements."""

    mul: tuple
    inv: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.mul)
        if n < 1 or any(len(row) != n for row in self.mul) or len(self.inv) != n:
            raise ValueError("table must be square and inv must have n entries")
        for x in itertools.chain(itertools.chain.from_iterable(self.mul), self.inv):
            if not (isinstance(x, int) and 1 <= x <= n):
                raise ValueError(f"entry {x!r} out of range 1..{n}")
        object.__setattr__(self, "_m0", tuple(tuple(v - 1 for v in row) for row in self.mul))
        object.__setattr__(self, "_i0", tuple(v - 1 for v in self.inv))

    @property
    def n(self) -> int:
        return len(self.mul)

    @classmethod
    def from_digits(cls, mul: str, inv: str | None = None, name: str = "") -> "InvolutionSemigroup":
        mul = mul.replace(" ", "")
        n = math.isqrt(len(mul))
        if n * n != len(mul) or not mul.isdigit():
            raise ValueError(f"mul digit string of length {len(mul)} is not a square table")
        rows = tuple(tuple(int(c) for c in mul[r * n:(r + 1) * n]) for r in range(n))
        inv_t = tuple(range(1, n + 1)) if inv is None else tuple(int(c) for c in inv)
        return cls(rows, inv_t, name)

    @classmethod
    def from_text(cls, line: str, name: str = "") -> "InvolutionSemigroup":
        m = re.fullmatch(r"\s*n=(\d)\s+mul=(\d+)\s+inv=(\d+)\s*", line)
        if not m:
            raise ValueError(f"not a table line: {line!r}")
        s = cls.from_digits(m.group(2), m.group(3), name)
        if s.n != int(m.group(1)):
            raise ValueError("declared order does not match table size")
        return s

    def to_text(self) -> str:
        if self.n > 9:
            raise ValueError("text format supports n <= 9")
        return f"n={self.n} mul={self.mul_digits()} inv={self.inv_digits()}"

    def mul_digits(self) -> str:
        return "".join(str(v) for row in self.mul for v in row)

    def inv_digits(self) -> str:
        return "".join(str(v) for v in self.inv)

    def has_trivial_involution(self) -> bool:
        return all(self.inv[a] == a + 1 for a in range(self.n))

    def relabel(self, perm: Sequence[int]) -> "InvolutionSemigroup":
        """Image under the bijection a -> perm[a-1] (1-based)."""
        n = self.n
        mul = [[0] * n for _ in range(n)]
        inv = [0] * n
        for a in range(n):
            inv[perm[a] - 1] = perm[self.inv[a] - 1]
            for b in range(n):
                mul[perm[a] - 1][perm[b] - 1] = perm[self.mul[a][b] - 1]
        return InvolutionSemigroup(tuple(map(tuple, mul)), tuple(inv), self.name)


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failure: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def first_nonassociative(m0: Sequence[Sequence[int]]):
    n = len(m0)
    for a in range(n):
        for b in range(n):
            ab = m0[a][b]
            for c in range(n):
                if m0[ab][c] != m0[a][m0[b][c]]:
                    return (a + 1, b + 1, c + 1)
    return None


def validate(S: InvolutionSemigroup) -> ValidationReport:
    m, i = S._m0, S._i0
    bad = first_nonassociative(m)
    if bad:
        return ValidationReport(False, "associativity", bad)
    for a in range(S.n):
        if i[i[a]] != a:
            return ValidationReport(False, "inv is not an involution", (a + 1,))
    for a in range(S.n):
        for b in range(S.n):
            if i[m[a][b]] != m[i[b]][i[a]]:
                return ValidationReport(False, "inv is not an antimorphism", (a + 1, b + 1))
    return ValidationReport(True)


# ---------------------------------------------------------------- evaluation

def _letter_value(S, l: Letter, a: dict) -> int:
    try:
        v = a[l.base] - 1
    except KeyError:
        raise KeyError(f"unassigned base symbol {l.base!r}") from None
    return S._i0[v] if l.starred else v


def evaluate(S: InvolutionSemigroup, w: Sequence[Letter], a: dict) -> int:
    if not w:
        raise ValueError("cannot evaluate the empty word")
    m = S._m0
    acc = _letter_value(S, w[0], a)
    for l in w[1:]:
        acc = m[acc][_letter_value(S, l, a)]
    return acc + 1


def ordered_bases(*words: Iterable[Letter]) -> list[str]:
    out: set = set()
    for w in words:
        out |= bases(w)
    return sorted(out)


def _compile(S, w, index):
    """Word as (value-selector) pairs for the fast inner loop."""
    return [(index[l.base], l.starred) for l in w]


def _eval_compiled(m, inv, code, vals):
    i, s = code[0]
    acc = inv[vals[i]] if s else vals[i]
    for i, s in code[1:]:
        acc = m[acc][inv[vals[i]] if s else vals[i]]
    return acc


def assignments(n: int, names: Sequence[str]):
    """All assignments in lexicographic order (first base varies slowest)."""
    for vals in itertools.product(range(1, n + 1), repeat=len(names)):
        yield dict(zip(names, vals))


def satisfies(S: InvolutionSemigroup, lhs: Sequence[Letter], rhs: Sequence[Letter],
              var_cap: int = DEFAULT_VAR_CAP):
    """None when ``lhs ~ rhs`` holds in S, else a counterexample.

    Assignments are scanned from the largest element downwards (the first base
    varies slowest), so the reported counterexample is deterministic.
    """
    if not lhs or not rhs:
        raise ValueError("identity sides must be nonempty")
    names = ordered_bases(lhs, rhs)
    if len(names) > var_cap:
        raise VariableCapExceeded(f"{len(names)} variables exceeds cap {var_cap}")
    index = {b: k for k, b in enumerate(names)}
    cl, cr = _compile(S, lhs, index), _compile(S, rhs, index)
    m, inv = S._m0, S._i0
    for vals in itertools.product(range(S.n - 1, -1, -1), repeat=len(names)):
        if _eval_compiled(m, inv, cl, vals) != _eval_compiled(m, inv, cr, vals):
            return {b: v + 1 for b, v in zip(names, vals)}
    return None


def fresh_base(*words: Iterable[Letter]) -> str:
    used = set()
    for w in words:
        used |= bases(w)
    for c in "zyxwvutsrqponmlkjihgfedcba":
        if c not in used:
            return c
    raise ValueError("no fresh base symbol left")


def satisfies_zero(S: InvolutionSemigroup, w: Sequence[Letter], var_cap: int = DEFAULT_VAR_CAP) -> bool:
    """``w ~ 0`` read as ``w x ~ w ~ x w`` for a fresh x."""
    x = (Letter(fresh_base(w)),)
    w = tuple(w)
    verdict = satisfies(S, w + x, w, var_cap) is None and satisfies(S, x + w, w, var_cap) is None
    z = zero_element(S)
    if z is not None:
        names = ordered_bases(w)
        always_zero = all(evaluate(S, w, a) == z for a in assignments(S.n, names))
        if always_zero != verdict:
            raise AssertionError("zero semantics disagree; this cannot happen in a semigroup with zero")
    return verdict


def value_vector(S: InvolutionSemigroup, w: Sequence[Letter], names: Sequence[str]) -> tuple:
    """Values of ``w`` under every assignment to ``names`` (lexicographic order)."""
    index = {b: k for k, b in enumerate(names)}
    code = _compile(S, w, index)
    m, inv = S._m0, S._i0
    return tuple(_eval_compiled(m, inv, code, vals)
                 for vals in itertools.product(range(S.n), repeat=len(names)))


# ---------------------------------------------------------------- structural predicates

def zero_element(S: InvolutionSemigroup):
    m = S._m0
    for z in range(S.n):
        if all(m[z][a] == z and m[a][z] == z for a in range(S.n)):
            return z + 1
    return None


def is_commutative(S: InvolutionSemigroup) -> bool:
    m = S._m0
    return all(m[a][b] == m[b][a] for a in range(S.n) for b in range(a + 1, S.n))


@dataclass(frozen=True)
class PeriodicityProfile:
    m0: int
    k0: int


def index_and_period(m0: Sequence[Sequence[int]], a: int) -> tuple[int, int]:
    """(index, period) of the monogenic subsemigroup generated by 0-based a."""
    seen = {}
    p = a
    k = 1
    while p not in seen:
        seen[p] = k
        p = m0[p][a]
        k += 1
    return seen[p], k - seen[p]


def periodicity(S: InvolutionSemigroup) -> PeriodicityProfile:
    pairs = [index_and_period(S._m0, a) for a in range(S.n)]
    return PeriodicityProfile(max(i for i, _ in pairs), math.lcm(*(p for _, p in pairs)))


def nilpotency_degree(S: InvolutionSemigroup):
    z = zero_element(S)
    if z is None:
        return None
    z -= 1
    m = S._m0
    products = set(range(S.n))  # all products of length d
    for d in range(1, S.n + 2):
        if products == {z}:
            return d
        products = {m[p][a] for p in products for a in range(S.n)}
    return None


def satisfies_xyz_eq_xz(S: InvolutionSemigroup) -> bool:
    m = S._m0
    r = range(S.n)
    return all(m[m[x][y]][z] == m[x][z] for x in r for y in r for z in r)


def c4_identities_report(S: InvolutionSemigroup):
    """First failure of x*Tx ~ xTx ~ xTx* or of its T-deleted form, else None.

    Returns ``(identity, {"x": .., "T": ..})`` with 1-based elements.
    """
    m, inv = S._m0, S._i0
    r = range(S.n)
    for x in r:
        for t in r:
            a = m[m[inv[x]][t]][x]
            b = m[m[x][t]][x]
            c = m[m[x][t]][inv[x]]
            if not (a == b == c):
                return ("x*Tx ~ xTx ~ xTx*", {"x": x + 1, "T": t + 1})
    for x in r:
        if not (m[inv[x]][x] == m[x][x] == m[x][inv[x]]):
            return ("x*x ~ xx ~ xx*", {"x": x + 1})
    return None


def satisfies_C4_identities(S: InvolutionSemigroup) -> bool:
    return c4_identities_report(S) is None


def permutation_identity_holds(S: InvolutionSemigroup, perm: Sequence[int]) -> bool:
    """x_1...x_m ~ x_{perm[0]}...x_{perm[m-1]} (perm 0-based)."""
    m = S._m0
    k = len(perm)
    for vals in itertools.product(range(S.n), repeat=k):
        a = vals[0]
        b = vals[perm[0]]
        for i in range(1, k):
            a = m[a][vals[i]]
            b = m[b][vals[perm[i]]]
        if a != b:
            return False
    return True


def find_permutation_identity(S: InvolutionSemigroup, max_len: int = 6):
    """First (m, permutation) with a non-identity permutation identity, m = 2..max_len.

    Permutations are reported 1-based.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    for k in range(2, max_len + 1):
        ident = tuple(range(k))
        for perm in itertools.permutations(range(k)):
            if perm != ident and permutation_identity_holds(S, perm):
                return k, tuple(p + 1 for p in perm)
    return None


def permutation_identity_word(perm: Sequence[int]) -> tuple[Word, Word]:
    names = "abcdefghijklmnopqrstuvwxyz"
    lhs = tuple(Letter(names[i]) for i in range(len(perm)))
    rhs = tuple(Letter(names[p - 1]) for p in perm)
    return lhs, rhs


# ---------------------------------------------------------------- involutions

def _table0(table) -> tuple:
    """Accept a 1-based table (tuple of rows) and return the 0-based form."""
    return tuple(tuple(v - 1 for v in row) for row in table)


def involutions_of(table) -> list[tuple]:
    """All involutory anti-automorphisms of the semigroup, 1-based tuples."""
    m = _table0(table)
    n = len(m)
    out = []
    for sigma in itertools.permutations(range(n)):
        if any(sigma[sigma[a]] != a for a in range(n)):
            continue
        if all(sigma[m[a][b]] == m[sigma[b]][sigma[a]] for a in range(n) for b in range(n)):
            out.append(tuple(s + 1 for s in sigma))
    return out


def involution_obstructions(table) -> list[str]:
    """Cheap necessary conditions for the existence of an involution.

    Every involution fixes each element of the form a a* and must preserve
    index/period and idempotency, and fix identity, left/right zeros families
    as sets.  Here each condition is tested in the form "some involution can
    exist at all"; a nonempty result proves there is none.
    """
    m = _table0(table)
    n = len(m)
    r = range(n)
    problems = []

    ip = [index_and_period(m, a) for a in r]
    idem = [m[a][a] == a for a in r]
    # candidate images under any involution: same index/period and idempotency
    cand = [{b for b in r if ip[b] == ip[a] and idem[b] == idem[a]} for a in r]

    # a unit (two-sided identity) and a zero are unique, hence fixed
    units = [e for e in r if all(m[e][a] == a and m[a][e] == a for a in r)]
    zeros = [z for z in r if all(m[z][a] == z and m[a][z] == z for a in r)]
    lzeros = [z for z in r if all(m[z][a] == z for a in r)]
    rzeros = [z for z in r if all(m[a][z] == z for a in r)]
    # an antimorphism swaps left zeros and right zeros
    if len(lzeros) != len(rzeros):
        problems.append("left zeros and right zeros cannot be exchanged")
    for e in units + zeros:
        cand[e] &= {e}

    if any(not c for c in cand):
        problems.append("index/period or idempotent preservation leaves no image")

    # some candidate map must be an involution fixing every a a* and sending ab to b*a*
    found = False
    for sigma in itertools.product(*[sorted(c) for c in cand]):
        if any(sigma[sigma[a]] != a for a in r):
            continue
        if any(sigma[m[a][sigma[a]]] != m[a][sigma[a]] for a in r):
            continue
        found = True
        break
    if not found and not problems:
        problems.append("no candidate map fixes every element a a*")
    return problems


# ---------------------------------------------------------------- isomorphism

def relabel0(m, inv, perm):
    n = len(m)
    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        pa = perm[a]
        row = mul[pa]
        for b in range(n):
            row[perm[b]] = perm[m[a][b]]
    iv = None
    if inv is not None:
        iv = [0] * n
        for a in range(n):
            iv[perm[a]] = perm[inv[a]]
        iv = tuple(iv)
    return tuple(map(tuple, mul)), iv


def canonical_form0(m, inv=None):
    """Lexicographically least relabeling over all permutations (0-based)."""
    n = len(m)
    best = None
    for perm in itertools.permutations(range(n)):
        mul, iv = relabel0(m, inv, perm)
        key = (mul, iv)
        if best is None or key < best:
            best = key
    return best


def canonical_key(S: InvolutionSemigroup) -> bytes:
    mul, iv = canonical_form0(S._m0, S._i0)
    return bytes(v for row in mul for v in row) + b"|" + bytes(iv)


def canonical(S: InvolutionSemigroup) -> InvolutionSemigroup:
    mul, iv = canonical_form0(S._m0, S._i0)
    return InvolutionSemigroup(tuple(tuple(v + 1 for v in row) for row in mul),
                               tuple(v + 1 for v in iv), S.name)


def is_isomorphic(S1: InvolutionSemigroup, S2: InvolutionSemigroup):
    """A 1-based bijection p with p(ab)=p(a)p(b) and p(a*)=p(a)*, or None."""
    if S1.n != S2.n:
        return None
    m1, i1, m2, i2 = S1._m0, S1._i0, S2._m0, S2._i0
    n = S1.n
    for perm in itertools.permutations(range(n)):
        if any(perm[i1[a]] != i2[perm[a]] for a in range(n)):
            continue
        if all(perm[m1[a][b]] == m2[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return tuple(p + 1 for p in perm)
    return None


def is_homomorphism(S: InvolutionSemigroup, T: InvolutionSemigroup, mapping) -> bool:
    """``mapping`` is a dict or sequence from 1-based S elements to T elements."""
    f = (lambda a: mapping[a]) if isinstance(mapping, dict) else (lambda a: mapping[a - 1])
    for a in range(1, S.n + 1):
        if f(S.inv[a - 1]) != T.inv[f(a) - 1]:
            return False
        for b in range(1, S.n + 1):
            if f(S.mul[a - 1][b - 1]) != T.mul[f(a) - 1][f(b) - 1]:
                return False
    return True


def describe_assignment(a: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(a.items()))


def describe_identity(lhs, rhs) -> str:
    return f"{render(lhs)} ~ {render(rhs)}"
