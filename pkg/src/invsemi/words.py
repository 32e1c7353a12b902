"""Words and terms of the free involution monoid.

A word is a plain tuple of :class:`Letter` values.  Letters compare by base
symbol first and star flag second, so sorting a collection of letters gives
alphabetical order in the sense used by the standard forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class Letter(NamedTuple):
    base: str
    starred: bool = False

    def star(self) -> "Letter":
        return Letter(self.base, not self.starred)

    def plain(self) -> "Letter":
        return Letter(self.base, False) if self.starred else self

    def __str__(self) -> str:
        return self.base + ("*" if self.starred else "")


Word = tuple  # tuple[Letter, ...]


class WordSyntaxError(ValueError):
    """Raised by the parsers; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# ---------------------------------------------------------------- terms

@dataclass(frozen=True)
class Leaf:
    base: str


@dataclass(frozen=True)
class Concat:
    children: tuple


@dataclass(frozen=True)
class Star:
    child: object


Term = object  # Leaf | Concat | Star


def flatten(t) -> Word:
    """Push every star down to the letters and return the resulting word."""
    out: list[Letter] = []

    def walk(node, starred: bool) -> None:
        if isinstance(node, Leaf):
            out.append(Letter(node.base, starred))
        elif isinstance(node, Star):
            walk(node.child, not starred)
        elif isinstance(node, Concat):
            kids = reversed(node.children) if starred else node.children
            for kid in kids:
                walk(kid, starred)
        else:
            raise TypeError(f"not a term node: {node!r}")

    walk(t, False)
    if not out:
        raise ValueError("empty term")
    return tuple(out)


def term_of_word(w: Sequence[Letter]) -> Term:
    nodes = [Star(Leaf(l.base)) if l.starred else Leaf(l.base) for l in w]
    if not nodes:
        raise ValueError("empty word has no term")
    return nodes[0] if len(nodes) == 1 else Concat(tuple(nodes))


def render_term(t) -> str:
    if isinstance(t, Leaf):
        return t.base
    if isinstance(t, Star):
        inner = render_term(t.child)
        return inner + "*" if isinstance(t.child, Leaf) else f"({inner})*"
    parts = []
    for kid in t.children:
        s = render_term(kid)
        parts.append(f"({s})" if isinstance(kid, Concat) else s)
    return "".join(parts)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:([A-Za-z])|(\*)|\^\s*(\d+)|(\()|(\)))")


class _Parser:
    def __init__(self, text: str, allow_parens: bool, allow_upper: bool):
        self.text = text
        self.pos = 0
        self.allow_parens = allow_parens
        self.allow_upper = allow_upper

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def offset(self) -> int:
        return len(self.text[: self.pos].encode())

    def factors(self, closing: bool) -> list:
        items = []
        while True:
            c = self.peek()
            if c == "" or (c == ")" and closing):
                break
            items.append(self.factor())
        if not items:
            raise WordSyntaxError("expected a letter or '('", self.offset())
        return items

    def factor(self):
        c = self.peek()
        if c == "(":
            if not self.allow_parens:
                raise WordSyntaxError("parentheses are not allowed in a word", self.offset())
            self.pos += 1
            kids = self.factors(closing=True)
            if self.peek() != ")":
                raise WordSyntaxError("unbalanced '('", self.offset())
            self.pos += 1
            node = kids[0] if len(kids) == 1 else Concat(tuple(kids))
        elif c.isascii() and c.isalpha() and (c.islower() or self.allow_upper):
            self.pos += 1
            node = Leaf(c)
        elif c == "":
            raise WordSyntaxError("unexpected end of input", self.offset())
        else:
            raise WordSyntaxError(f"unexpected character {c!r}", self.offset())
        if self.peek() == "*":
            self.pos += 1
            node = Star(node)
        if self.peek() == "^":
            at = self.offset()
            self.pos += 1
            self.skip_ws()
            m = re.match(r"\d+", self.text[self.pos:])
            if not m:
                raise WordSyntaxError("expected an exponent after '^'", at)
            k = int(m.group())
            if k == 0:
                raise WordSyntaxError("exponent 0 is not allowed", at)
            self.pos += m.end()
            node = node if k == 1 else Concat((node,) * k)
        return node


def parse_term(text: str, *, allow_upper: bool = False) -> Term:
    p = _Parser(text, allow_parens=True, allow_upper=allow_upper)
    kids = p.factors(closing=False)
    return kids[0] if len(kids) == 1 else Concat(tuple(kids))


def parse_word(text: str, *, allow_upper: bool = False, allow_empty: bool = False) -> Word:
    """Parse ``"x* x y^2"`` style text.  Parentheses are rejected."""
    if allow_empty and text.strip() in ("", "1"):
        return ()
    p = _Parser(text, allow_parens=False, allow_upper=allow_upper)
    kids = p.factors(closing=False)
    return flatten(kids[0] if len(kids) == 1 else Concat(tuple(kids)))


def word(text: str) -> Word:
    """Shorthand used throughout tests and scripts; accepts the empty string."""
    return parse_word(text, allow_empty=True, allow_upper=True)


def render(w: Sequence[Letter], compress: bool = False) -> str:
    if not compress:
        return "".join(str(l) for l in w)
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(str(w[i]) + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return "".join(out)


# ---------------------------------------------------------------- basic operations

def star_word(w: Sequence[Letter]) -> Word:
    return tuple(Letter(l.base, not l.starred) for l in reversed(w))


def plain_projection(w: Sequence[Letter]) -> Word:
    return tuple(Letter(l.base, False) for l in w)


def content(w: Iterable[Letter]) -> frozenset:
    return frozenset(w)


def bases(w: Iterable[Letter]) -> frozenset:
    return frozenset(l.base for l in w)


def mixed_bases(w: Iterable[Letter]) -> frozenset:
    seen = set(w)
    return frozenset(l.base for l in seen if not l.starred and Letter(l.base, True) in seen)


@dataclass(frozen=True)
class WordStats:
    content: frozenset
    occ: dict
    simple_vars: frozenset
    mixed_pairs: frozenset
    head: Letter
    tail: Letter
    length: int


def stats(w: Sequence[Letter]) -> WordStats:
    if not w:
        raise ValueError("stats of the empty word")
    occ: dict = {}
    base_occ: dict = {}
    for l in w:
        occ[l] = occ.get(l, 0) + 1
        base_occ[l.base] = base_occ.get(l.base, 0) + 1
    simple = frozenset(l for l in occ if base_occ[l.base] == 1)
    return WordStats(
        content=frozenset(occ),
        occ=occ,
        simple_vars=simple,
        mixed_pairs=mixed_bases(occ),
        head=w[0],
        tail=w[-1],
        length=len(w),
    )


def is_scattered_subword(p: Sequence[Letter], w: Sequence[Letter]):
    """Greedy subsequence match; returns 1-based positions or None."""
    if not p:
        raise ValueError("pattern must be nonempty")
    pos = []
    k = 0
    for i, l in enumerate(w):
        if l == p[k]:
            pos.append(i + 1)
            k += 1
            if k == len(p):
                return tuple(pos)
    return None


def are_disjoint(w1: Iterable[Letter], w2: Iterable[Letter]) -> bool:
    return not (bases(w1) & bases(w2))


def cut_points(w: Sequence[Letter]) -> list[int]:
    """Indices i (0 < i < |w|) where w[:i] and w[i:] are disjoint."""
    last = {}
    for i, l in enumerate(w):
        last[l.base] = i
    cuts = []
    reach = -1
    for i, l in enumerate(w[:-1]):
        reach = max(reach, last[l.base])
        if reach == i:
            cuts.append(i + 1)
    return cuts


def components(w: Sequence[Letter]) -> list[tuple[int, int]]:
    """The finest factorisation of ``w`` into pairwise disjoint connected factors,
    as half-open index intervals."""
    if not w:
        return []
    edges = [0] + cut_points(w) + [len(w)]
    return list(zip(edges, edges[1:]))


def is_connected(w: Sequence[Letter]) -> bool:
    return bool(w) and not cut_points(w)


@dataclass(frozen=True)
class WordStructure:
    is_mixed: bool
    is_bipartite: bool
    is_connected: bool
    is_simple: bool


def is_simple_word(w: Sequence[Letter]) -> bool:
    """Every base occurs once."""
    return len(bases(w)) == len(w)


def structure(w: Sequence[Letter]) -> WordStructure:
    if not w:
        raise ValueError("structure of the empty word")
    mixed = bool(mixed_bases(w))
    return WordStructure(mixed, not mixed, is_connected(w), is_simple_word(w))
