"""Word problem for the two four-element involution semigroups with a finite basis.

Every word falls into one of three kinds: bipartite (no mixed pair), zero, or
mixed non-zero.  Bipartite words are compared through their content and the
model value of their plain projections; zero words form one class; mixed
non-zero words are compared through a canonical standard form.  ``decide``
turns this into a verdict with a certificate and cross-checks it against
brute-force substitution in the model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .catalog import A0, B0, SL3, SL3_QUOTIENT
from .model import InvolutionSemigroup, satisfies, value_vector
from .normal import ZeroWordError, a_zero_witness, b_zero_witness, flip_form, normalize_a, normalize_b
from .rules import RuleSystem, system_a0, system_b0
from .words import Word, bases, content, mixed_bases, plain_projection, render


class DecisionInconsistency(AssertionError):
    """The syntactic verdict and the model disagree; never expected."""


@dataclass(frozen=True)
class Theory:
    name: str
    model: InvolutionSemigroup
    system: RuleSystem
    zero_witness: object
    normalize: object


@lru_cache(maxsize=None)
def theory(name: str) -> Theory:
    key = name.lower()
    if key == "a0":
        return Theory("A0", A0, system_a0(), a_zero_witness, normalize_a)
    if key == "b0":
        return Theory("B0", B0, system_b0(), b_zero_witness, normalize_b)
    raise ValueError(f"no decision procedure for {name!r}; use a0 or b0")


def _as_theory(t) -> Theory:
    return t if isinstance(t, Theory) else theory(t)


def canonical_mixed(system, w, with_traces: bool = False):
    """The smaller rendering of the standard form of ``w`` and of its flipped form.

    With ``with_traces`` returns (word, [normalization trace, flip trace]).
    """
    best, traces = _canonical(_as_theory(system), w, with_traces)
    return (best, traces) if with_traces else best


def _canonical(th: Theory, w, with_traces: bool):
    form, tr = th.normalize(w, with_trace=with_traces)
    flipped, ftr = flip_form(form, with_trace=with_traces)
    best = min((form, flipped), key=lambda f: render(f.word))
    return best.word, ([tr, ftr] if with_traces else None)


def word_class(system, w) -> tuple:
    """A key such that two words are identified by the theory iff their keys agree."""
    th = _as_theory(system)
    w = tuple(w)
    if not mixed_bases(w):
        names = sorted(bases(w))
        return ("bipartite", tuple(sorted(content(w))), value_vector(th.model, plain_projection(w), names))
    try:
        return ("mixed", render(canonical_mixed(th, w)))
    except ZeroWordError:
        return ("zero",)


@dataclass
class Decision:
    holds: bool
    certificate: str
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "certificate": self.certificate,
                "details": self.details, "counterexample": self.counterexample}


def _sl3_witness(u, v):
    """An assignment into Sl3 separating u and v, lifted along Sl3 -> A0/B0 (as a section)."""
    hit = satisfies(SL3, u, v)
    if hit is None:
        return None, None
    lift = {q: p for p, q in sorted(SL3_QUOTIENT.items(), reverse=True)}
    return hit, {b: lift[val] for b, val in hit.items()}


def decide(system, u, v, var_cap: int = 8, traces: bool = False) -> Decision:
    th = _as_theory(system)
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise ValueError("both sides must be nonempty")
    d = _decide(th, u, v, traces)
    oracle = satisfies(th.model, u, v, var_cap)
    if (oracle is None) != d.holds:
        raise DecisionInconsistency(
            f"{th.name}: {render(u)} ~ {render(v)} decided {d.holds} ({d.certificate}) but the model says "
            f"{oracle is None}")
    if not d.holds and d.counterexample is None:
        d.counterexample = oracle
    return d


def _decide(th: Theory, u: Word, v: Word, traces: bool) -> Decision:
    mu, mv = bool(mixed_bases(u)), bool(mixed_bases(v))
    if not mu and not mv:
        cu, cv = content(u), content(v)
        if cu != cv:
            sl3, lifted = _sl3_witness(u, v)
            return Decision(False, "BothBipartite",
                            {"content": "differs", "sl3_assignment": sl3}, lifted)
        pu, pv = plain_projection(u), plain_projection(v)
        hit = satisfies(th.model, pu, pv)
        return Decision(hit is None, "BothBipartite",
                        {"content": "equal", "plain_projection": [render(pu), render(pv)],
                         "oracle": "exhaustive substitution"}, hit)
    if mu != mv:
        sl3, lifted = _sl3_witness(u, v)
        return Decision(False, "MixedBipartiteMismatch", {"sl3_assignment": sl3}, lifted)
    zu, zv = th.zero_witness(u), th.zero_witness(v)
    if zu is not None and zv is not None:
        return Decision(True, "BothZero", {"witnesses": [zu.describe(), zv.describe()]})
    if (zu is None) != (zv is None):
        z = zu or zv
        return Decision(False, "ZeroNonzeroMismatch",
                        {"zero_side": "lhs" if zu else "rhs", "witness": z.describe()},
                        satisfies(th.model, u, v))
    cu, tu = _canonical(th, u, traces)
    cv, tv = _canonical(th, v, traces)
    details = {"canonical": [render(cu), render(cv)]}
    if traces:
        details["traces"] = {"lhs": [t.to_json() for t in tu], "rhs": [t.to_json() for t in tv]}
    if cu == cv:
        return Decision(True, "CanonicalMatch", details)
    return Decision(False, "CanonicalMismatch", details, satisfies(th.model, u, v))
