import pytest

from invsemi.catalog import A0, B0
from invsemi.rules import (DerivationStep, DerivationTrace, RuleApplicationError, apply_rule,
                           basis_a0, basis_b0, derived_rules_a0, failing_rules, replay, rewrites,
                           search_derivation, system_a0, system_b0, verify_trace)
from invsemi.words import render, star_word, word


def step(rule, d, pos, **subst):
    return DerivationStep(rule, d, pos, {k: word(v) for k, v in subst.items()})


def test_a0_satisfies_its_basis_and_derived_rules():
    assert failing_rules(A0, system_a0()) == {}


def test_b0_satisfies_its_basis():
    assert failing_rules(B0, basis_b0()) == {}
    assert failing_rules(B0, system_b0(), tags=("4", "7", "9")) == {}


def test_a0_fails_the_extra_b0_rules():
    bad = failing_rules(A0, system_b0())
    assert bad and {system_b0().identity(n).tag.split(".")[0] for n in bad} == {"7", "9"}


def _shape(lhs, rhs):
    """The identity up to renaming of its variables and orientation."""
    def enc(first, second):
        names = {}
        return tuple(tuple((names.setdefault(l.base, len(names)), l.starred) for l in w)
                     for w in (first, second))
    return min(enc(lhs, rhs), enc(rhs, lhs))


@pytest.mark.parametrize("system", [system_a0(), system_b0()], ids=["a0", "b0"])
def test_system_is_closed_under_mirror(system):
    shapes = {_shape(l, r) for _, l, r in system.word_identities()}
    for name, lhs, rhs in system.word_identities():
        assert _shape(star_word(lhs), star_word(rhs)) in shapes, name


def test_derived_rule_list_covers_6a_to_6f():
    tags = {r.tag.split(".")[0] for r in derived_rules_a0()}
    assert tags == {"6a", "6b", "6c", "6d", "6e", "6f"}
    assert len(basis_a0().rules) < len(system_a0().rules)


def test_apply_4b_at_root():
    lhs, rhs = system_a0().oriented("4b", "fwd")
    assert apply_rule(word("x y x*"), lhs, rhs, 0, {"x": word("x"), "y": word("y")}) == word("x y* x*")


def test_apply_4e_inside_context():
    lhs, rhs = system_a0().oriented("4e.1", "fwd")
    assert apply_rule(word("a x x b"), lhs, rhs, 1, {"x": word("x")}) == word("a x x x b")


def test_empty_context_is_rejected():
    lhs, rhs = system_a0().oriented("4c", "fwd")
    with pytest.raises(RuleApplicationError):
        apply_rule(word("x x* y"), lhs, rhs, 0, {"x": word("x"), "T": (), "y": word("y")})
    lhs, rhs = system_a0().oriented("4c~", "fwd")
    assert apply_rule(word("x x* y"), lhs, rhs, 0, {"x": word("x"), "y": word("y")}) == word("y* x x*")


def test_mismatch_is_rejected():
    lhs, rhs = system_a0().oriented("4b", "fwd")
    with pytest.raises(RuleApplicationError):
        apply_rule(word("x y x"), lhs, rhs, 0, {"x": word("x"), "y": word("y")})


def test_6f_chain_trace_is_accepted():
    t = DerivationTrace(word("y x x* y"), [
        step("4c~", "bwd", 0, x="x", y="y*"),
        step("6e~", "fwd", 1, x="x*", y="y*"),
        step("6c.1~", "fwd", 0, y="x", z="y*", x="x*"),
        step("4a>L", "fwd", 0, w="y*", x="x"),
    ], word("x x* x"))
    assert verify_trace(t, system_a0(), model=A0)
    assert [render(w) for w in replay(t, system_a0())][0] == "yxx*y"


def test_wrong_end_rejected_at_step_one():
    t = DerivationTrace(word("x y x*"), [step("4b", "fwd", 0, x="x", y="y")], word("x y x*"))
    r = verify_trace(t, system_a0())
    assert not r and r.failed_step == 1


def test_bad_step_index_reported():
    t = DerivationTrace(word("x y x*"), [step("4b", "fwd", 0, x="x", y="y"),
                                         step("4b", "fwd", 1, x="x", y="y")], word("x y x*"))
    assert verify_trace(t, system_a0()).failed_step == 2


def test_empty_trace():
    assert verify_trace(DerivationTrace(word("x y"), [], word("x y")), system_a0())


def test_trace_json_round_trip():
    t = DerivationTrace(word("x y x*"), [step("4b", "fwd", 0, x="x", y="y")], word("x y* x*"))
    back = DerivationTrace.from_json(t.to_json())
    assert back.start == t.start and back.end == t.end and back.steps == t.steps


def test_model_check_catches_unsound_rule():
    # a B0-only rule is not sound in A0
    t = DerivationTrace(word("x x y y"), [step("7", "fwd", 0, x="x", y="y")], word("y y x x"))
    assert verify_trace(t, system_b0())
    assert not verify_trace(t, system_b0(), model=A0)


def test_rewrites_are_model_equivalent():
    from invsemi.model import satisfies
    w = word("x y x* z")
    outs = list(rewrites(w, system_a0(), max_len=6))
    assert outs
    for _, _, _, _, out in outs:
        assert satisfies(A0, w, out) is None


def test_search_finds_short_derivation():
    t = search_derivation(word("x y x*"), word("x y* x*"), system_a0(), max_len=4)
    assert t is not None and verify_trace(t, system_a0(), model=A0)
