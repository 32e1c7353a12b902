"""Zero words, standard forms and normalization with derivation traces.

A mixed word that is not zero is rewritten into the shape

    x_1 ... x_n  x  p_0 q_1 p_1 ... q_m p_m  x*

where the prefix letters and the pivot ``x`` are in alphabetical order, the
middle shares no base with the prefix, the ``p_i`` consist of simple letters
and the ``q_i`` are disjoint connected blocks in a fixed ordered shape
(``y^2`` or ``y z_1^2 ... z_k^2 y`` for the A-form, square runs
``z_1^2 ... z_k^2`` for the B-form).  Every rewrite is recorded as a rule
application so the resulting trace can be replayed independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import lemma_data
from .rules import (DerivationStep, DerivationTrace, RuleSystem, apply_rule, system_a0, system_b0)
from .words import Letter, Word, bases, components, is_scattered_subword, mixed_bases, render, star_word, word


class NormalizationError(ValueError):
    """The input violates a precondition (bipartite input or zero word)."""


class NormalizationInvariantError(AssertionError):
    """An internal invariant failed; this would be a genuine finding."""


# ---------------------------------------------------------------- zero witnesses

@dataclass(frozen=True)
class ZeroWitness:
    """A zero pattern (or zero shape) found in ``word``.

    ``word`` is the input itself unless ``trace`` is set, in which case the
    trace derives ``word`` from the input with the rule system.
    """

    kind: str  # "pattern", "factor" or "empty-middle"
    pattern: Word
    positions: tuple
    word: Word = ()
    trace: DerivationTrace | None = None

    @property
    def derived(self) -> bool:
        return self.trace is not None and bool(self.trace.steps)

    def describe(self) -> str:
        if self.kind == "empty-middle":
            text = f"standard form {render(self.pattern)} has no simple letter in its middle"
        else:
            pos = ",".join(str(p) for p in self.positions)
            text = f"{self.kind} {render(self.pattern)} at positions {pos}"
        if self.derived:
            text += f" of {render(self.word)}, reached in {len(self.trace.steps)} rule steps"
        return text

    def moved_to(self, w, trace: DerivationTrace | None) -> "ZeroWitness":
        return ZeroWitness(self.kind, self.pattern, self.positions, tuple(w), trace)


class ZeroWordError(NormalizationError):
    """Normalization met a zero word; ``witness`` certifies it."""

    def __init__(self, witness: ZeroWitness, start):
        super().__init__(f"{render(start)} is a zero word ({witness.describe()})")
        self.witness = witness


def zero_pattern(w) -> ZeroWitness | None:
    """An instance of x x* x, x x* y y* or x y y* x occurring as a scattered subword of ``w``."""
    w = tuple(w)
    mixed = mixed_bases(w)
    if not mixed:
        return None
    mixed_letters = sorted(Letter(b, s) for b in mixed for s in (False, True))
    for x in mixed_letters:
        p = (x, x.star(), x)
        hit = is_scattered_subword(p, w)
        if hit:
            return ZeroWitness("pattern", p, hit, w)
    for x in mixed_letters:
        for y in mixed_letters:
            p = (x, x.star(), y, y.star())
            hit = is_scattered_subword(p, w)
            if hit:
                return ZeroWitness("pattern", p, hit, w)
    for x in sorted(set(w)):
        for y in mixed_letters:
            p = (x, y, y.star(), x)
            hit = is_scattered_subword(p, w)
            if hit:
                return ZeroWitness("pattern", p, hit, w)
    return None


def zero_factor(w) -> ZeroWitness | None:
    """A contiguous factor x x* (or x* x)."""
    w = tuple(w)
    for i in range(len(w) - 1):
        if w[i + 1] == w[i].star():
            return ZeroWitness("factor", w[i:i + 2], (i + 1, i + 2), w)
    return None


def a_zero_witness(w) -> ZeroWitness | None:
    """Certificate that the mixed word ``w`` is zero modulo the A0 identities.

    The three patterns are looked for in ``w`` and then in every intermediate
    word of the normalization; a pattern that only appears after rewriting is
    returned together with the derivation that exposes it.
    """
    w = tuple(w)
    if not mixed_bases(w):
        return None
    hit = zero_pattern(w)
    if hit:
        return hit
    try:
        _normalize_a_shape(w, _system_a())
    except ZeroWordError as exc:
        return exc.witness
    return None


def b_zero_witness(w) -> ZeroWitness | None:
    """A-witness, a factor x x* / x* x, or a standard form whose middle has no simple letter."""
    w = tuple(w)
    if not mixed_bases(w):
        return None
    hit = zero_pattern(w) or zero_factor(w)
    if hit:
        return hit
    try:
        normalize_b(w, with_trace=False)
    except ZeroWordError as exc:
        return exc.witness
    return None


# ---------------------------------------------------------------- standard forms

@dataclass(frozen=True)
class StandardForm:
    """Prefix, pivot and middle; ``blocks`` alternates p_0, q_1, p_1, ..., q_m, p_m."""

    prefix: Word
    pivot: Letter
    blocks: tuple
    kind: str  # "A" or "B"

    @property
    def middle(self) -> Word:
        return tuple(l for b in self.blocks for l in b)

    @property
    def word(self) -> Word:
        return self.prefix + (self.pivot,) + self.middle + (self.pivot.star(),)

    @property
    def ps(self) -> tuple:
        return self.blocks[0::2]

    @property
    def qs(self) -> tuple:
        return self.blocks[1::2]

    def render(self) -> str:
        return render(self.word)


def _split_pivot(w):
    """(prefix, pivot, middle) for a word shaped prefix x middle x* with one x and one x*."""
    if len(w) < 2:
        return None
    mix = mixed_bases(w)
    end = w[-1]
    if len(mix) != 1 or end.base not in mix:
        return None
    idx = [i for i, l in enumerate(w) if l.base == end.base]
    if len(idx) != 2 or w[idx[0]] != end.star():
        return None
    i = idx[0]
    return w[:i], w[i], w[i + 1:-1]


def _prefix_ok(prefix, pivot, middle) -> bool:
    letters = prefix + (pivot,)
    for a, b in zip(letters, letters[1:]):
        if not a.base < b.base:
            return False
    return not (bases(letters) & bases(middle))


def is_minimal_ordered(q) -> bool:
    if len(q) == 2:
        return q[0] == q[1]
    if len(q) < 4 or q[0] != q[-1] or len(q) % 2:
        return False
    inner = q[1:-1]
    prev = q[0].base
    for k in range(0, len(inner), 2):
        a, b = inner[k], inner[k + 1]
        if a != b or not prev < a.base:
            return False
        prev = a.base
    return True


def is_square_block(q) -> bool:
    if not q or len(q) % 2:
        return False
    prev = ""
    for k in range(0, len(q), 2):
        a, b = q[k], q[k + 1]
        if a != b or not prev < a.base:
            return False
        prev = a.base
    return True


def _parse_middle_a(middle):
    blocks = [()]
    for s, e in components(middle):
        comp = middle[s:e]
        if len(comp) == 1:
            blocks[-1] = blocks[-1] + comp
        elif is_minimal_ordered(comp):
            blocks.extend([comp, ()])
        else:
            return None
    return tuple(blocks)


def _parse_middle_b(middle):
    """Split into p_0 q_1 ... p_m with maximal square runs as q's."""
    blocks = [()]
    in_run = False
    for s, e in components(middle):
        comp = middle[s:e]
        if len(comp) == 1:
            blocks[-1] = blocks[-1] + comp
            in_run = False
        elif len(comp) == 2 and comp[0] == comp[1]:
            if in_run:
                blocks[-2] = blocks[-2] + comp
            else:
                blocks.extend([comp, ()])
                in_run = True
        else:
            return None
    if not all(blocks[0::2]) or not all(is_square_block(q) for q in blocks[1::2]):
        return None
    return tuple(blocks)


def parse_a_standard(w) -> StandardForm | None:
    w = tuple(w)
    parts = _split_pivot(w)
    if parts is None or not _prefix_ok(*parts):
        return None
    prefix, pivot, middle = parts
    blocks = _parse_middle_a(middle)
    if blocks is None:
        return None
    return StandardForm(prefix, pivot, blocks, "A")


def parse_b_standard(w) -> StandardForm | None:
    w = tuple(w)
    parts = _split_pivot(w)
    if parts is None or not _prefix_ok(*parts):
        return None
    prefix, pivot, middle = parts
    blocks = _parse_middle_b(middle)
    if blocks is None:
        return None
    return StandardForm(prefix, pivot, blocks, "B")


def is_a_standard(w) -> bool:
    return parse_a_standard(w) is not None


def is_b_standard(w) -> bool:
    return parse_b_standard(w) is not None


# ---------------------------------------------------------------- rewriting with a record

@lru_cache(maxsize=None)
def _lemma(name: str):
    d = lemma_data.LEMMAS[name]
    steps = tuple((r, di, p, {k: word(v) for k, v in sub.items()}) for r, di, p, sub in d["steps"])
    return word(d["lhs"]), word(d["rhs"]), steps


class Rewriter:
    """Current word plus the list of rule applications that produced it."""

    def __init__(self, w, system: RuleSystem):
        self.start = self.w = tuple(w)
        self.system = system
        self.steps: list = []

    def apply(self, rule: str, direction: str, pos: int, **subst) -> None:
        lhs, rhs = self.system.oriented(rule, direction)
        self.w = apply_rule(self.w, lhs, rhs, pos, subst)
        self.steps.append(DerivationStep(rule, direction, pos, subst))

    def apply_ctx(self, rule: str, direction: str, pos: int, T, **subst) -> None:
        """Apply a context rule, switching to its T-deleted companion when T is empty."""
        if T:
            self.apply(rule, direction, pos, T=tuple(T), **subst)
        else:
            self.apply(rule + "~", direction, pos, **subst)

    def lemma(self, name: str, pos: int, **tau) -> None:
        """Expand a stored lemma under the substitution ``tau`` of its pattern letters."""
        lhs, rhs, steps = _lemma(name)

        def image(p):
            out = []
            for l in p:
                img = tau[l.base]
                out.extend(star_word(img) if l.starred else img)
            return tuple(out)

        cur = lhs
        for rule, d, p, sub in steps:
            self.apply(rule, d, pos + len(image(cur[:p])), **{k: image(v) for k, v in sub.items()})
            l2, r2 = self.system.oriented(rule, d)
            cur = apply_rule(cur, l2, r2, p, sub)
        if cur != rhs:
            raise NormalizationInvariantError(f"lemma {name} replay mismatch")

    def trace(self) -> DerivationTrace:
        return DerivationTrace(self.start, list(self.steps), self.w)


# ---------------------------------------------------------------- blocks

def _variant(name: str, u, w) -> str:
    suffix = ("u" if not u else "") + ("w" if not w else "")
    return name + ("-" + suffix if suffix else "")


def _block_a(rw: Rewriter, start: int, length: int) -> int:
    """Rewrite the connected bipartite factor at [start, start+length) into y^2 or
    y z_1^2 ... z_k^2 y with alphabetical bases; return the new length."""
    q = rw.w[start:start + length]
    if len(bases(q)) == 1:
        while length > 2:
            rw.apply("4e.1", "bwd", start, x=(q[0],))
            length -= 1
        return length

    y = q[0]
    # make the block end with its first letter
    while True:
        q = rw.w[start:start + length]
        j = max(i for i, l in enumerate(q) if l == y)
        if j == length - 1:
            break
        inner, tail = q[1:j], q[j + 1:]
        inner_set = set(inner)
        r = next(l for l in tail if l in inner_set)
        i_s = 1 + max(i for i, l in enumerate(inner) if l == r)
        i_t = j + 1 + tail.index(r)
        mid = q[i_s + 1:i_t]
        rw.apply("4e.2", "fwd", start + i_s, x=(r,), y=mid)
        length += len(mid) - 1

    while True:
        # drop inner copies of the outer letter
        while True:
            inner = rw.w[start + 1:start + length - 1]
            if y not in inner:
                break
            k = inner.index(y)
            u, w = inner[:k], inner[k + 1:]
            tau = {"x": (y,)}
            if u:
                tau["u"] = u
            if w:
                tau["w"] = w
            rw.lemma(_variant("drop", u, w), start, **tau)
            length -= 1

        # bubble sort the inner letters by base
        changed = True
        while changed:
            changed = False
            inner = rw.w[start + 1:start + length - 1]
            for i in range(len(inner) - 1):
                a, b = inner[i], inner[i + 1]
                if a.base > b.base:
                    u, w = inner[:i], inner[i + 2:]
                    if not u and not w:
                        rw.apply("6b", "fwd", start, x=(y,), y=(a,), z=(b,))
                    else:
                        tau = {"x": (y,), "a": (a,), "b": (b,)}
                        if u:
                            tau["u"] = u
                        if w:
                            tau["w"] = w
                        rw.lemma(_variant("swap", u, w), start, **tau)
                    inner = rw.w[start + 1:start + length - 1]
                    changed = True

        # every inner letter exactly squared
        inner = rw.w[start + 1:start + length - 1]
        runs = []
        i = 0
        while i < len(inner):
            j = i
            while j < len(inner) and inner[j] == inner[i]:
                j += 1
            runs.append((i, j - i))
            i = j
        for i, k in reversed(runs):
            a = inner[i]
            while k > 2:
                rw.apply("4e.1", "bwd", start + 1 + i, x=(a,))
                k -= 1
                length -= 1
            if k == 1:
                cur = rw.w[start + 1:start + length - 1]
                u, w = cur[:i], cur[i + 1:]
                tau = {"x": (y,), "a": (a,)}
                if u:
                    tau["u"] = u
                if w:
                    tau["w"] = w
                rw.lemma(_variant("square", u, w), start, **tau)
                length += 1

        inner = rw.w[start + 1:start + length - 1]
        if y.base < inner[0].base:
            return length
        # the smallest inner letter becomes the outer one
        z = inner[0]
        rest = inner[2:]
        if rest:
            rw.lemma("outer", start, x=(y,), a=(z,), w=rest)
        else:
            rw.lemma("outer-w", start, x=(y,), a=(z,))
        y = z


def _sort_square_run(rw: Rewriter, start: int, length: int) -> None:
    changed = True
    while changed:
        changed = False
        run = rw.w[start:start + length]
        for k in range(0, length - 2, 2):
            a, b = run[k], run[k + 2]
            if a.base > b.base:
                rw.apply("7", "fwd", start + k, x=(a,), y=(b,))
                run = rw.w[start:start + length]
                changed = True


def _block_to_squares(rw: Rewriter, start: int, length: int) -> None:
    """y z_1^2 ... z_k^2 y  ->  y^2 z_1^2 ... z_k^2 (same length)."""
    if length == 2:
        return
    q = rw.w[start:start + length]
    y, inner = q[0], q[1:-1]
    rw.apply("6a.1", "fwd", start, x=(y,), y=inner)
    rw.apply("6a.3", "fwd", start + 1, x=(y,), y=inner)
    # y y inner y y: carry the trailing y y leftwards over each square
    pos = start + 2 + len(inner) - 2
    while pos >= start + 2:
        z = rw.w[pos]
        rw.apply("7", "fwd", pos, x=(z,), y=(y,))
        pos -= 2
    rw.apply("4e.1", "bwd", start, x=(y,))
    rw.apply("4e.1", "bwd", start, x=(y,))


# ---------------------------------------------------------------- the normalizer

class _Shape:
    """Bookkeeping for words of the shape prefix X middle X*."""

    def __init__(self, rw: Rewriter, plen: int):
        self.rw = rw
        self.plen = plen

    @property
    def prefix(self):
        return self.rw.w[:self.plen]

    @property
    def pivot(self):
        return self.rw.w[self.plen]

    @property
    def middle(self):
        return self.rw.w[self.plen + 1:-1]

    def zero_check(self, factor: bool = False) -> None:
        hit = zero_pattern(self.rw.w) or (zero_factor(self.rw.w) if factor else None)
        if hit:
            raise ZeroWordError(hit.moved_to(self.rw.w, self.rw.trace()), self.rw.start)

    def check(self):
        w = self.rw.w
        if w[-1] != self.pivot.star() or any(l.base == self.pivot.base for l in self.middle):
            raise NormalizationInvariantError(f"lost the pivot shape in {render(w)}")

    # prefix moves ---------------------------------------------------
    def move_to_end(self, i: int) -> None:
        p = self.prefix
        self.rw.apply_ctx("6c.1", "fwd", i, self.middle, y=(p[i],), z=p[i + 1:], x=(self.pivot,))

    def dedupe_end(self) -> None:
        self.rw.apply_ctx("6d.1", "fwd", self.plen - 2, self.middle, y=(self.prefix[-1],), x=(self.pivot,))
        self.plen -= 1

    def collapse_pivot(self) -> None:
        self.rw.apply_ctx("4d.1", "fwd", self.plen - 1, self.middle, x=(self.pivot,))
        self.plen -= 1

    def raise_pivot(self) -> None:
        """... L X m X*  ->  ... X L m L*"""
        self.rw.apply_ctx("6e", "fwd", self.plen - 1, self.middle, x=(self.prefix[-1],), y=(self.pivot,))

    def sort_prefix(self) -> None:
        while self.pivot in self.prefix:
            i = self.prefix.index(self.pivot)
            if i < self.plen - 1:
                self.move_to_end(i)
            self.collapse_pivot()
        done = 0
        for letter in sorted(set(self.prefix)):
            first = True
            while True:
                region = self.prefix[:self.plen - done]
                if letter not in region:
                    break
                i = region.index(letter)
                if i < self.plen - 1:
                    self.move_to_end(i)
                if first:
                    done += 1
                    first = False
                else:
                    self.dedupe_end()
        p = self.prefix
        for a, b in zip(p, p[1:]):
            if a.base == b.base:
                raise NormalizationInvariantError(f"prefix has a mixed pair: {render(self.rw.w)}")
        if p and p[-1].base > self.pivot.base:
            self.raise_pivot()
            self.sort_prefix()

    # prefix/middle overlaps ------------------------------------------
    def pull_starred(self, k: int) -> None:
        """Prefix holds Y, middle holds Y* at index k: remove that Y* and move the
        part of the middle after it (starred) into the prefix."""
        rw = self.rw
        mid = self.middle
        yl = mid[k].star()
        m1, m2 = mid[:k], mid[k + 1:]
        p = self.prefix
        r = max(i for i, l in enumerate(p) if l == yl)
        x = (self.pivot,)
        if r < self.plen - 1:
            rw.apply("6c.1", "fwd", r, y=(yl,), z=p[r + 1:], x=x, T=mid)
        q = self.plen - 1
        rw.apply("6e", "fwd", q, x=(yl,), y=x, T=mid)
        rw.apply_ctx("4c", "fwd", q + 1, m1, x=(yl,), y=m2 + (yl.star(),))
        if m2:
            rw.apply_ctx("6c.1", "fwd", q + 1, m1, y=(yl,), z=star_word(m2), x=(yl,))
        rw.apply_ctx("4d.1", "fwd", q + 1 + len(m2), m1, x=(yl,))
        if m2:
            rw.apply_ctx("6c.1", "fwd", q, m1, y=x, z=star_word(m2), x=(yl,))
        rw.apply_ctx("6e", "fwd", q + len(m2), m1, x=x, y=(yl,))
        self.plen += len(m2)

    def pull_same(self, k: int) -> None:
        """Prefix and middle both hold Y (middle index k): drop that Y and move the
        part of the middle before it into the prefix."""
        mid = self.middle
        self.rw.apply("4b", "fwd", self.plen, x=(self.pivot,), y=mid)
        self.pull_starred(len(mid) - 1 - k)
        if self.middle:
            self.rw.apply("4b", "fwd", self.plen, x=(self.pivot,), y=self.middle)

    def separate(self) -> None:
        while True:
            pre = set(self.prefix)
            pre_bases = bases(pre)
            mid = self.middle
            k = next((i for i, l in enumerate(mid) if l.base in pre_bases), None)
            if k is None:
                return
            if mid[k] in pre:
                self.pull_same(k)
            else:
                self.pull_starred(k)
            self.check()
            self.zero_check()

    # middle ------------------------------------------------------------
    def middle_components(self):
        off = self.plen + 1
        return [(off + s, e - s) for s, e in components(self.middle)]

    def normalize_blocks_a(self) -> None:
        for start, length in reversed(self.middle_components()):
            if length >= 2:
                _block_a(self.rw, start, length)

    def flip(self) -> None:
        if self.middle:
            self.rw.apply("4b", "fwd", self.plen, x=(self.pivot,), y=self.middle)


def _choose_pivot_pair(w):
    """Closest pair (i, j) with w[j] = w[i]* and no letter of that base strictly between."""
    best = None
    last = {}
    for j, l in enumerate(w):
        i = last.get(l.base)
        if i is not None and w[i] == l.star():
            if best is None or j - i < best[1] - best[0]:
                best = (i, j)
        last[l.base] = j
    return best


def _start(w, system: RuleSystem) -> _Shape:
    w = tuple(w)
    if not mixed_bases(w):
        raise NormalizationError(f"{render(w)} is bipartite")
    hit = zero_pattern(w)
    if hit:
        raise ZeroWordError(hit, w)
    rw = Rewriter(w, system)
    i, j = _choose_pivot_pair(w)
    if j < len(w) - 1:
        rw.apply_ctx("4c", "fwd", i, w[i + 1:j], x=(w[i],), y=w[j + 1:])
    shape = _Shape(rw, len(w) - 1 - (j - i))
    shape.check()
    shape.zero_check()
    if shape.pivot.star() in shape.prefix:
        raise NormalizationInvariantError(f"pivot mirror left in prefix of {render(rw.w)}")
    return shape


def _finish(shape: _Shape, parse, kind: str):
    form = parse(shape.rw.w)
    if form is None:
        raise NormalizationInvariantError(f"{render(shape.rw.w)} is not in {kind}-standard form")
    return form


def _normalize_a_shape(w, system) -> _Shape:
    shape = _start(w, system)
    shape.separate()
    shape.sort_prefix()
    shape.normalize_blocks_a()
    return shape


def normalize_a(w, with_trace: bool = True, system: RuleSystem | None = None):
    """(StandardForm, DerivationTrace) for a mixed word with no zero witness."""
    system = system or _system_a()
    shape = _normalize_a_shape(w, system)
    form = _finish(shape, parse_a_standard, "A")
    return form, shape.rw.trace() if with_trace else None


def _square_runs(shape: _Shape):
    """Maximal runs of squares in the middle as (start, length), absolute."""
    runs = []
    for start, length in shape.middle_components():
        if length == 2:
            if runs and runs[-1][0] + runs[-1][1] == start:
                runs[-1] = (runs[-1][0], runs[-1][1] + 2)
            else:
                runs.append((start, 2))
    return runs


def _absorb_front(shape: _Shape, length: int) -> None:
    rw = shape.rw
    x = (shape.pivot,)
    rw.apply_ctx("4d.1", "bwd", shape.plen, shape.middle, x=x)
    for k in range(0, length, 2):
        pos = shape.plen + k
        rw.apply("7", "fwd", pos, x=x, y=(rw.w[pos + 2],))
    shape.plen += length + 1


def _absorb_back(shape: _Shape, length: int) -> None:
    rw = shape.rw
    x = (shape.pivot,)
    xs = (shape.pivot.star(),)
    rw.apply_ctx("4d.2", "fwd", shape.plen, shape.middle, x=x)
    end = len(rw.w) - 2  # index of the first of the two trailing x*
    for _ in range(length // 2):
        rw.apply("7", "fwd", end - 2, x=(rw.w[end - 2],), y=xs)
        end -= 2
    rest = rw.w[shape.plen + 1:end]
    rw.apply_ctx("4d.2", "bwd", shape.plen, rest, x=x)
    q = rw.w[shape.plen + 2 + len(rest):]
    rw.apply_ctx("4c", "fwd", shape.plen, rest, x=x, y=q)
    shape.plen += length


def _squares_everywhere(shape: _Shape) -> None:
    for start, length in reversed(shape.middle_components()):
        if length >= 2:
            _block_to_squares(shape.rw, start, length)
    for start, length in _square_runs(shape):
        _sort_square_run(shape.rw, start, length)


def normalize_b(w, with_trace: bool = True, system: RuleSystem | None = None):
    """(StandardForm, DerivationTrace) for a mixed word with no B-zero witness."""
    system = system or _system_b()
    w = tuple(w)
    hit = zero_factor(w)
    if hit:
        raise ZeroWordError(hit, w)
    shape = _normalize_a_shape(w, system)
    shape.zero_check(factor=True)
    if not any(_parse_middle_a(shape.middle)[0::2]):
        form = shape.rw.w
        raise ZeroWordError(ZeroWitness("empty-middle", form, (), form, shape.rw.trace()), w)
    _squares_everywhere(shape)
    runs = _square_runs(shape)
    if runs and runs[0][0] == shape.plen + 1:
        _absorb_front(shape, runs[0][1])
        shape.sort_prefix()
    runs = _square_runs(shape)
    if runs and runs[-1][0] + runs[-1][1] == len(shape.rw.w) - 1:
        _absorb_back(shape, runs[-1][1])
        shape.sort_prefix()
    form = _finish(shape, parse_b_standard, "B")
    return form, shape.rw.trace() if with_trace else None


def flip_form(form: StandardForm, with_trace: bool = True, system: RuleSystem | None = None):
    """Star the middle of a standard form and restore the ordered block shape."""
    if form.kind == "A":
        system = system or _system_a()
        rw = Rewriter(form.word, system)
        shape = _Shape(rw, len(form.prefix))
        shape.flip()
        shape.normalize_blocks_a()
        out = _finish(shape, parse_a_standard, "A")
    else:
        system = system or _system_b()
        rw = Rewriter(form.word, system)
        shape = _Shape(rw, len(form.prefix))
        shape.flip()
        for start, length in _square_runs(shape):
            _sort_square_run(rw, start, length)
        out = _finish(shape, parse_b_standard, "B")
    return out, rw.trace() if with_trace else None


@lru_cache(maxsize=None)
def _system_a() -> RuleSystem:
    return system_a0()


@lru_cache(maxsize=None)
def _system_b() -> RuleSystem:
    return system_b0()
