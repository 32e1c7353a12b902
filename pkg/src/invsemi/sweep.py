"""Exhaustive and randomized comparison of the decision procedure with the models.

The exhaustive part covers every word of bounded length over a few base
letters.  Rather than looping over all pairs, it compares two partitions of
that universe: the classes of ``word_class`` and the classes of model value
vectors (the values of a word under all assignments to the base letters).  A
pair of words is decided ``holds`` exactly when their keys agree and satisfies
the model exactly when their value vectors agree, so the two partitions are
equal if and only if decision and model agree on every pair.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

import numpy as np

from .decide import DecisionInconsistency, Theory, decide, theory, word_class
from .model import InvolutionSemigroup, zero_element
from .normal import (ZeroWordError, flip_form, parse_a_standard, parse_b_standard, zero_factor, zero_pattern)
from .rules import instantiate, match_at, verify_trace
from .words import Letter, mixed_bases, render, star_word

BASE_NAMES = "abcd"


def letters(n_bases: int) -> list[Letter]:
    return [Letter(b, s) for b in BASE_NAMES[:n_bases] for s in (False, True)]


def value_table(S: InvolutionSemigroup, n_bases: int, max_len: int):
    """Yield (length, words, vectors) with vectors[i] the values of words[i] (0-based)
    under all assignments of the bases, first base slowest."""
    m = np.array(S._m0, dtype=np.int8)
    inv = np.array(S._i0, dtype=np.int8)
    assign = np.array(list(itertools.product(range(S.n), repeat=n_bases)), dtype=np.int8)
    lets = letters(n_bases)
    lv = np.stack([inv[assign[:, BASE_NAMES.index(l.base)]] if l.starred
                   else assign[:, BASE_NAMES.index(l.base)] for l in lets])
    words = [(l,) for l in lets]
    vecs = lv.copy()
    yield 1, words, vecs
    for k in range(2, max_len + 1):
        vecs = m[vecs[:, None, :], lv[None, :, :]].reshape(-1, lv.shape[1])
        words = [w + (l,) for w in words for l in lets]
        yield k, words, vecs


@dataclass
class SweepReport:
    system: str
    n_bases: int
    max_len: int
    words: int = 0
    mixed_nonzero: int = 0
    zero_words: int = 0
    derived_zero_witnesses: int = 0
    key_classes: int = 0
    value_classes: int = 0
    split_classes: list = field(default_factory=list)    # one key, several value vectors
    merged_classes: list = field(default_factory=list)   # one value vector, several keys
    zero_mismatches: list = field(default_factory=list)
    normalization_failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def decision_ok(self) -> bool:
        return not (self.split_classes or self.merged_classes)

    @property
    def ok(self) -> bool:
        return self.decision_ok and not (self.zero_mismatches or self.normalization_failures)

    def summary(self) -> str:
        return (f"{self.system}: {self.words} words (<= {self.n_bases} bases, length <= {self.max_len}), "
                f"{self.key_classes} classes, {self.mixed_nonzero} mixed non-zero, {self.zero_words} zero "
                f"({self.derived_zero_witnesses} found after rewriting); "
                f"{len(self.split_classes) + len(self.merged_classes)} partition discrepancies, "
                f"{len(self.zero_mismatches)} zero mismatches, "
                f"{len(self.normalization_failures)} normalization failures; {self.seconds:.1f}s")


def _check_witness(th: Theory, w, wit) -> bool:
    """A zero witness is a pattern/factor in a word derivable from ``w`` (or an empty middle)."""
    if wit.trace is not None:
        if tuple(wit.trace.start) != tuple(w) or not verify_trace(wit.trace, th.system):
            return False
    elif tuple(wit.word) != tuple(w):
        return False
    target = wit.word
    if wit.kind == "pattern":
        return zero_pattern(target) is not None
    if wit.kind == "factor":
        return zero_factor(target) is not None
    form = parse_a_standard(target)
    return form is not None and not any(form.ps)


def exhaustive_sweep(system: str, n_bases: int = 3, max_len: int = 7, check_traces: bool = True,
                     limit_failures: int = 20) -> SweepReport:
    th = theory(system)
    t0 = time.perf_counter()
    rep = SweepReport(th.name, n_bases, max_len)
    zero = zero_element(th.model) - 1
    parse = parse_a_standard if th.name == "A0" else parse_b_standard
    key_vec: dict = {}
    vec_key: dict = {}
    # value vectors of every word are kept so standard forms can be looked up
    all_vecs: dict = {}

    for length, words, vecs in value_table(th.model, n_bases, max_len):
        rows = [v.tobytes() for v in vecs]
        for w, vb, row in zip(words, rows, vecs):
            all_vecs[w] = vb
            rep.words += 1
            if not mixed_bases(w):
                key = word_class(th, w)
            else:
                model_zero = bool((row == zero).all())
                try:
                    form, tr = th.normalize(w, with_trace=check_traces)
                except ZeroWordError as exc:
                    rep.zero_words += 1
                    rep.derived_zero_witnesses += exc.witness.derived
                    if not model_zero or not _check_witness(th, w, exc.witness):
                        if len(rep.zero_mismatches) < limit_failures:
                            rep.zero_mismatches.append((render(w), "witness but not zero in model"))
                    key = ("zero",)
                else:
                    rep.mixed_nonzero += 1
                    if model_zero and len(rep.zero_mismatches) < limit_failures:
                        rep.zero_mismatches.append((render(w), "zero in model, no witness"))
                    flipped, ftr = flip_form(form, with_trace=check_traces)
                    bad = None
                    if parse(form.word) is None or parse(flipped.word) is None:
                        bad = "not standard"
                    elif check_traces and not (verify_trace(tr, th.system) and verify_trace(ftr, th.system)):
                        bad = "trace rejected"
                    elif _vec(th.model, form.word, n_bases, all_vecs) != vb or \
                            _vec(th.model, flipped.word, n_bases, all_vecs) != vb:
                        bad = "standard form not model-equivalent"
                    if bad and len(rep.normalization_failures) < limit_failures:
                        rep.normalization_failures.append((render(w), bad))
                    key = ("mixed", min(render(form.word), render(flipped.word)))
            prev = key_vec.setdefault(key, vb)
            if prev != vb and len(rep.split_classes) < limit_failures:
                rep.split_classes.append((key, render(w)))
            prevk = vec_key.setdefault(vb, key)
            if prevk != key and len(rep.merged_classes) < limit_failures:
                rep.merged_classes.append((prevk, key, render(w)))
    rep.key_classes = len(key_vec)
    rep.value_classes = len(vec_key)
    rep.seconds = time.perf_counter() - t0
    return rep


_VEC_CACHE: dict = {}


def _vec(S, w, n_bases, known):
    """Value vector bytes of ``w`` over the first ``n_bases`` bases."""
    w = tuple(w)
    if known is not None and w in known:
        return known[w]
    key = (S.name, S.mul, S.inv, w, n_bases)
    hit = _VEC_CACHE.get(key)
    if hit is None:
        m = np.array(S._m0, dtype=np.int8)
        inv = np.array(S._i0, dtype=np.int8)
        assign = np.array(list(itertools.product(range(S.n), repeat=n_bases)), dtype=np.int8)
        acc = None
        for l in w:
            col = assign[:, BASE_NAMES.index(l.base)]
            val = inv[col] if l.starred else col
            acc = val if acc is None else m[acc, val]
        hit = acc.tobytes()
        if len(_VEC_CACHE) < 200_000:
            _VEC_CACHE[key] = hit
    return hit


# ---------------------------------------------------------------- random pairs

def random_word(rng: random.Random, n_bases: int, max_len: int):
    lets = letters(n_bases)
    return tuple(rng.choice(lets) for _ in range(rng.randint(1, max_len)))


def random_rewrite(rng: random.Random, w, system, max_len: int, attempts: int = 30):
    """One random application of a rule of ``system`` to ``w`` (or None)."""
    names = system.names()
    for _ in range(attempts):
        name = rng.choice(names)
        direction = rng.choice(("fwd", "bwd"))
        lhs, rhs = system.oriented(name, direction)
        if {l.base for l in rhs} - {l.base for l in lhs}:
            continue
        pos = rng.randrange(len(w))
        for subst, end in itertools.islice(match_at(lhs, w, pos), 8):
            out = w[:pos] + instantiate(rhs, subst) + w[end:]
            if len(out) <= max_len:
                return out
    return None


def _mutate(rng: random.Random, w, n_bases: int):
    w = list(w)
    op = rng.randrange(4)
    i = rng.randrange(len(w))
    if op == 0 and len(w) > 1:
        j = rng.randrange(len(w))
        w[i], w[j] = w[j], w[i]
    elif op == 1:
        w[i] = w[i].star()
    elif op == 2 and len(w) > 1:
        del w[i]
    else:
        w.insert(i, rng.choice(letters(n_bases)))
    return tuple(w)


def random_nonzero_shape(rng: random.Random, n_bases: int, max_len: int):
    """A word shaped prefix x middle x* with the middle built from simple letters and
    connected blocks; such words are usually not zero."""
    names = list(BASE_NAMES[:n_bases])
    rng.shuffle(names)
    pivot = Letter(names.pop(), rng.random() < 0.5)
    cut = rng.randint(0, len(names))
    pre_names, mid_names = names[:cut], names[cut:]
    prefix = [Letter(b, rng.random() < 0.5) for b in pre_names for _ in range(rng.randint(1, 2))]
    rng.shuffle(prefix)
    middle: list = []
    pol = {b: rng.random() < 0.5 for b in mid_names}
    for b in mid_names:
        l = Letter(b, pol[b])
        middle.extend([l] * rng.choice((1, 1, 2, 3)))
    rng.shuffle(middle)
    w = tuple(prefix) + (pivot,) + tuple(middle) + (pivot.star(),)
    return w[:max_len] if len(w) > max_len else w


def random_pairs(seed: int, count: int, system: str, n_bases: int = 4, max_len: int = 12):
    """Seeded pairs cycling through four kinds: independent words, a rule walk
    (same class), a small mutation, and two walks from a non-zero shaped word,
    the second occasionally mutated."""
    rng = random.Random(seed)
    th = theory(system)

    def walk(w):
        for _ in range(rng.randint(1, 6)):
            nxt = random_rewrite(rng, w, th.system, max_len)
            if nxt is not None:
                w = nxt
        return w

    for k in range(count):
        u = random_word(rng, rng.randint(1, n_bases), max_len)
        kind = k % 4
        if kind == 0:
            v = random_word(rng, rng.randint(1, n_bases), max_len)
        elif kind == 1:
            v = walk(u)
        elif kind == 2:
            v = _mutate(rng, u, n_bases) or u
        else:
            w0 = random_nonzero_shape(rng, n_bases, max_len)
            u, v = walk(w0), walk(w0)
            if rng.random() < 0.3:
                v = _mutate(rng, v, n_bases) or v
        yield u, v


@dataclass
class RandomReport:
    system: str
    pairs: int = 0
    holds: int = 0
    certificates: dict = field(default_factory=dict)
    discrepancies: list = field(default_factory=list)
    star_asymmetries: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.discrepancies or self.star_asymmetries)

    def summary(self) -> str:
        certs = ", ".join(f"{k} {v}" for k, v in sorted(self.certificates.items()))
        return (f"{self.system}: {self.pairs} random pairs, {self.holds} hold ({certs}); "
                f"{len(self.discrepancies)} discrepancies, {len(self.star_asymmetries)} star asymmetries; "
                f"{self.seconds:.1f}s")


def random_sweep(system: str, seed: int = 20240, count: int = 10_000, n_bases: int = 4,
                 max_len: int = 12) -> RandomReport:
    rep = RandomReport(theory(system).name)
    t0 = time.perf_counter()
    for u, v in random_pairs(seed, count, system, n_bases, max_len):
        rep.pairs += 1
        try:
            d = decide(system, u, v)
        except DecisionInconsistency as exc:
            rep.discrepancies.append((render(u), render(v), str(exc)))
            continue
        rep.holds += d.holds
        rep.certificates[d.certificate] = rep.certificates.get(d.certificate, 0) + 1
        if rep.pairs % 10 == 0:
            ds = decide(system, star_word(u), star_word(v))
            if ds.holds != d.holds:
                rep.star_asymmetries.append((render(u), render(v)))
    rep.seconds = time.perf_counter() - t0
    return rep
