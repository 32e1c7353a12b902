"""Identity rules over rule variables, their application to words, and derivation traces.

A rule is a pair of pattern words whose letters are rule variables (possibly
starred).  Applying a rule at a position replaces the instance of one side by
the instance of the other.  The rule system automatically offers, for every
identity, its star-mirror (both sides starred) and, when a context variable
``T`` is present, the companion with ``T`` deleted.  Zero identities ``p ~ 0``
are used through the two absorbing forms ``p y ~ p`` and ``y p ~ p``.

Rule names used in traces are ``<tag>`` optionally followed by ``~`` (context
variable deleted), ``*`` (star-mirror) or ``>R`` / ``>L`` (zero absorption on
the right / left).  Directions are ``fwd`` (lhs to rhs) and ``bwd``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .words import Letter, Word, parse_word, render, star_word, word

CONTEXT_VAR = "T"


@dataclass(frozen=True)
class IdentityRule:
    tag: str
    lhs: Word
    rhs: Word = ()
    zero_rule: bool = False

    def __post_init__(self):
        if not self.lhs or (not self.zero_rule and not self.rhs):
            raise ValueError(f"rule {self.tag}: sides must be nonempty")

    def describe(self) -> str:
        rhs = "0" if self.zero_rule else render(self.rhs)
        return f"{render(self.lhs)} ~ {rhs}"


def _vars(p: Sequence[Letter]) -> set:
    return {l.base for l in p}


def _pat(text: str) -> Word:
    return parse_word(text, allow_upper=True)


def identity_chain(tag: str, *members: str, zero: bool = False, all_pairs: bool = False) -> list[IdentityRule]:
    """Rules for ``m1 ~ m2 ~ ... [~ 0]``; suffixes .1, .2, ... number the pairs."""
    pats = [_pat(m) for m in members]
    pairs = ([(i, j) for i in range(len(pats)) for j in range(i + 1, len(pats))] if all_pairs
             else [(i, i + 1) for i in range(len(pats) - 1)])
    out = []
    for k, (i, j) in enumerate(pairs, 1):
        t = tag if len(pairs) == 1 else f"{tag}.{k}"
        out.append(IdentityRule(t, pats[i], pats[j]))
    if zero:
        out.append(IdentityRule(f"{tag}.0" if pairs else tag, pats[-1], (), zero_rule=True))
    return out


def _basis_a0_rules() -> list[IdentityRule]:
    return (
        identity_chain("4a", "x x* x", zero=True)
        + identity_chain("4b", "x y x*", "x y* x*")
        + identity_chain("4c", "x T x* y", "y* x T x*")
        + identity_chain("4d", "x x T x*", "x T x*", "x T x* x*")
        + [IdentityRule("4e.1", _pat("x x"), _pat("x x x"))]
        + [IdentityRule(f"4e.{k}", _pat(a), _pat(b)) for k, (a, b) in
           enumerate([("x y x", "y x y"), ("y x y", "x y x y"), ("x y x", "x y x y")], 2)]
    )


def _derived_a0_rules() -> list[IdentityRule]:
    return (
        identity_chain("6a", "x y x", "x x y x", "x y y x", "x y x x", all_pairs=True)
        + identity_chain("6b", "x y z x", "x z y x")
        + [IdentityRule("6c.1", _pat("y z x T x*"), _pat("z y x T x*")),
           IdentityRule("6c.2", _pat("x T x* y z"), _pat("x T x* z y")),
           IdentityRule("6d.1", _pat("y y x T x*"), _pat("y x T x*")),
           IdentityRule("6d.2", _pat("x T x* y y"), _pat("x T x* y"))]
        + identity_chain("6e", "x y T y*", "y x T x*")
        + identity_chain("6f", "y x x* y", "y y* z z*", "x* x x*", "x x* x")
    )


def _rule7() -> list[IdentityRule]:
    return identity_chain("7", "x x y y", "y y x x")


def _rule9() -> list[IdentityRule]:
    return identity_chain("9", "x x*", "x x* x", "x* x", zero=True)


@dataclass
class RuleSystem:
    name: str
    rules: list

    def __post_init__(self):
        self._table: dict = {}
        for r in self.rules:
            for name, lhs, rhs in _variants(r):
                if name in self._table:
                    raise ValueError(f"duplicate rule name {name}")
                self._table[name] = (lhs, rhs, r)

    def names(self) -> list[str]:
        return list(self._table)

    def oriented(self, name: str, direction: str) -> tuple[Word, Word]:
        try:
            lhs, rhs, _ = self._table[name]
        except KeyError:
            raise KeyError(f"rule {name!r} is not in system {self.name}") from None
        if direction == "fwd":
            return lhs, rhs
        if direction == "bwd":
            return rhs, lhs
        raise ValueError(f"direction must be fwd or bwd, not {direction!r}")

    def identity(self, name: str) -> IdentityRule:
        return self._table[name][2]

    def extended(self, name: str, extra: list) -> "RuleSystem":
        return RuleSystem(name, list(self.rules) + list(extra))

    def word_identities(self):
        """(name, lhs, rhs) for every named variant, including zero absorptions."""
        for name, (lhs, rhs, _) in self._table.items():
            yield name, lhs, rhs


def _drop_context(p: Word) -> Word:
    return tuple(l for l in p if l.base != CONTEXT_VAR)


def _fresh_var(r: IdentityRule) -> str:
    used = _vars(r.lhs) | _vars(r.rhs)
    for c in "wvutsrqp":
        if c not in used:
            return c
    raise ValueError("no fresh rule variable")


def _variants(r: IdentityRule):
    forms = []
    if r.zero_rule:
        v = (Letter(_fresh_var(r)),)
        forms.append((r.tag + ">R", r.lhs + v, r.lhs))
        forms.append((r.tag + ">L", v + r.lhs, r.lhs))
    else:
        forms.append((r.tag, r.lhs, r.rhs))
    out = []
    for name, lhs, rhs in forms:
        out.append((name, lhs, rhs))
        if CONTEXT_VAR in _vars(lhs):
            out.append((name + "~", _drop_context(lhs), _drop_context(rhs)))
    mirrored = []
    for name, lhs, rhs in out:
        ml, mr = star_word(lhs), star_word(rhs)
        if (ml, mr) != (lhs, rhs):
            mirrored.append((name + "*", ml, mr))
    return out + mirrored


def basis_a0() -> RuleSystem:
    return RuleSystem("A0-basis", _basis_a0_rules())


def basis_b0() -> RuleSystem:
    return RuleSystem("B0-basis", _basis_a0_rules() + _rule7())


def derived_rules_a0() -> list[IdentityRule]:
    return _derived_a0_rules()


def derived_rules_b0() -> list[IdentityRule]:
    return _rule9()


def system_a0() -> RuleSystem:
    """Basis plus the derived identities; the vocabulary used by normalization traces."""
    return RuleSystem("A0", _basis_a0_rules() + _derived_a0_rules())


def system_b0() -> RuleSystem:
    return RuleSystem("B0", _basis_a0_rules() + _derived_a0_rules() + _rule7() + _rule9())


# ---------------------------------------------------------------- application

class RuleApplicationError(ValueError):
    pass


def instantiate(pattern: Sequence[Letter], subst: dict) -> Word:
    out: list = []
    for l in pattern:
        try:
            img = subst[l.base]
        except KeyError:
            raise RuleApplicationError(f"variable {l.base} is not bound") from None
        if not img:
            raise RuleApplicationError(f"variable {l.base} bound to the empty word")
        out.extend(star_word(img) if l.starred else img)
    return tuple(out)


def apply_rule(w: Sequence[Letter], lhs: Sequence[Letter], rhs: Sequence[Letter],
               position: int, subst: dict) -> Word:
    """Replace the instance of ``lhs`` at ``position`` by the instance of ``rhs``."""
    src = instantiate(lhs, subst)
    dst = instantiate(rhs, subst)
    w = tuple(w)
    if position < 0 or tuple(w[position:position + len(src)]) != src:
        raise RuleApplicationError(
            f"pattern {render(src)} does not occur at position {position} of {render(w)}")
    return w[:position] + dst + w[position + len(src):]


def match_at(pattern: Sequence[Letter], w: Sequence[Letter], pos: int,
             subst: dict | None = None) -> Iterator[tuple[dict, int]]:
    """Substitutions making ``pattern`` match a factor of ``w`` starting at ``pos``.

    Yields (subst, end).  Variable images are tried shortest first.
    """
    subst = dict(subst or {})

    def go(k: int, i: int):
        if k == len(pattern):
            yield dict(subst), i
            return
        l = pattern[k]
        if l.base in subst:
            img = subst[l.base]
            if l.starred:
                img = star_word(img)
            if tuple(w[i:i + len(img)]) == img:
                yield from go(k + 1, i + len(img))
            return
        rest = len(pattern) - k - 1
        for j in range(i + 1, len(w) - rest + 1):
            seg = tuple(w[i:j])
            subst[l.base] = star_word(seg) if l.starred else seg
            yield from go(k + 1, j)
            del subst[l.base]

    yield from go(0, pos)


def rewrites(w: Sequence[Letter], system: RuleSystem, names=None, max_len: int | None = None):
    """Every single-step rewrite of ``w``: yields (name, direction, pos, subst, result).

    Variables that occur only on the target side are not enumerated; such
    orientations are skipped.
    """
    w = tuple(w)
    for name in names or system.names():
        for direction in ("fwd", "bwd"):
            lhs, rhs = system.oriented(name, direction)
            if _vars(rhs) - _vars(lhs):
                continue
            for pos in range(len(w)):
                for subst, end in match_at(lhs, w, pos):
                    out = w[:pos] + instantiate(rhs, subst) + w[end:]
                    if max_len is None or len(out) <= max_len:
                        yield name, direction, pos, subst, out


# ---------------------------------------------------------------- traces

@dataclass(frozen=True)
class DerivationStep:
    rule: str
    direction: str
    position: int
    subst: dict

    def to_json(self) -> dict:
        return {"rule": self.rule, "dir": self.direction, "pos": self.position,
                "subst": {k: render(v) for k, v in sorted(self.subst.items())}}

    @classmethod
    def from_json(cls, d: dict) -> "DerivationStep":
        return cls(d["rule"], d["dir"], int(d["pos"]), {k: word(v) for k, v in d["subst"].items()})


@dataclass
class DerivationTrace:
    start: Word
    steps: list = field(default_factory=list)
    end: Word | None = None

    def to_json(self) -> str:
        return json.dumps({"start": render(self.start),
                           "end": render(self.end if self.end is not None else self.start),
                           "steps": [s.to_json() for s in self.steps]})

    @classmethod
    def from_json(cls, text: str) -> "DerivationTrace":
        d = json.loads(text)
        return cls(word(d["start"]), [DerivationStep.from_json(s) for s in d["steps"]], word(d["end"]))


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    failed_step: int | None = None  # 1-based index of the first bad step
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def replay(trace: DerivationTrace, system: RuleSystem) -> list[Word]:
    words = [tuple(trace.start)]
    for s in trace.steps:
        lhs, rhs = system.oriented(s.rule, s.direction)
        words.append(apply_rule(words[-1], lhs, rhs, s.position, s.subst))
    return words


def verify_trace(trace: DerivationTrace, system: RuleSystem, model=None) -> TraceCheck:
    """Replay every step; optionally confirm each word is model-equivalent to the start."""
    from .model import satisfies
    cur = tuple(trace.start)
    for k, s in enumerate(trace.steps, 1):
        try:
            lhs, rhs = system.oriented(s.rule, s.direction)
            cur = apply_rule(cur, lhs, rhs, s.position, s.subst)
        except (KeyError, ValueError) as exc:
            return TraceCheck(False, k, str(exc))
        if model is not None and satisfies(model, trace.start, cur) is not None:
            return TraceCheck(False, k, "intermediate word is not model-equivalent to the start")
    end = trace.end if trace.end is not None else trace.start
    if cur != tuple(end):
        return TraceCheck(False, len(trace.steps) or 1,
                          f"replay ends at {render(cur)}, trace declares {render(end)}")
    return TraceCheck(True)


def search_derivation(start: Sequence[Letter], goal: Sequence[Letter], system: RuleSystem,
                      names=None, max_len: int = 10, max_states: int = 200_000):
    """Bidirectional breadth-first search for a derivation (diagnostic only).

    Returns a DerivationTrace or None when the explored space is exhausted.
    """
    start, goal = tuple(start), tuple(goal)
    if start == goal:
        return DerivationTrace(start, [], goal)
    back_a = {start: None}
    back_b = {goal: None}
    front_a, front_b = [start], [goal]

    def expand(front, back, other):
        nxt = []
        for w in front:
            for name, d, pos, subst, out in rewrites(w, system, names, max_len):
                if out in back:
                    continue
                back[out] = (w, DerivationStep(name, d, pos, subst))
                if out in other:
                    return out, nxt
                nxt.append(out)
        return None, nxt

    while front_a and front_b and len(back_a) + len(back_b) < max_states:
        if len(front_a) <= len(front_b):
            meet, front_a = expand(front_a, back_a, back_b)
        else:
            meet, front_b = expand(front_b, back_b, back_a)
        if meet is not None:
            return _join(meet, back_a, back_b, system, start, goal)
    return None


def _reverse_step(before: Word, step: DerivationStep, system: RuleSystem) -> DerivationStep:
    """The step that undoes ``step`` applied to ``before``."""
    return DerivationStep(step.rule, "bwd" if step.direction == "fwd" else "fwd", step.position, step.subst)


def _join(meet, back_a, back_b, system, start, goal) -> DerivationTrace:
    left = []
    w = meet
    while back_a[w] is not None:
        prev, step = back_a[w]
        left.append(step)
        w = prev
    left.reverse()
    right = []
    w = meet
    while back_b[w] is not None:
        prev, step = back_b[w]
        right.append(_reverse_step(prev, step, system))
        w = prev
    return DerivationTrace(start, left + right, goal)


def failing_rules(model, system: RuleSystem, tags=None) -> dict:
    """Named variants of ``system`` that fail in ``model``, with a counterexample each.

    ``tags`` restricts the check to identities whose tag starts with one of the
    given prefixes (``"4"`` selects 4a..4e).  Zero identities are checked through
    their absorbing forms, which is the fresh-letter reading of ``p ~ 0``.
    """
    from .model import satisfies
    out = {}
    for name, lhs, rhs in system.word_identities():
        tag = system.identity(name).tag
        if tags is not None and not any(tag.startswith(t) for t in tags):
            continue
        hit = satisfies(model, lhs, rhs)
        if hit is not None:
            out[name] = hit
    return out
