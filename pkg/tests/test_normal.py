import random

import pytest
from hypothesis import assume, given

from invsemi.catalog import A0, B0
from invsemi.model import evaluate, satisfies, satisfies_zero, zero_element
from invsemi.normal import (NormalizationError, ZeroWordError, a_zero_witness, b_zero_witness, flip_form,
                            is_a_standard, is_b_standard, is_minimal_ordered, is_square_block,
                            normalize_a, normalize_b, parse_a_standard, parse_b_standard)
from invsemi.rules import replay, system_a0, system_b0, verify_trace
from invsemi.sweep import random_nonzero_shape
from invsemi.words import mixed_bases, render, word

from conftest import words

SETUPS = {
    "A": (A0, system_a0(), a_zero_witness, normalize_a, is_a_standard),
    "B": (B0, system_b0(), b_zero_witness, normalize_b, is_b_standard),
}


def test_zero_pattern_in_scattered_shape():
    z = a_zero_witness(word("a x b x* c x d"))
    assert z is not None and z.kind == "pattern" and render(z.pattern) == "xx*x"
    assert z.positions == (2, 4, 6) and not z.derived


def test_bipartite_words_have_no_witness():
    for w in ("x y x", "x* y* x*", "a b c"):
        assert a_zero_witness(word(w)) is None and b_zero_witness(word(w)) is None


def test_adjacent_pair_is_zero_only_in_b():
    w = word("y x x* z")
    assert a_zero_witness(w) is None
    assert not satisfies_zero(A0, w)
    assert evaluate(A0, w, {"x": 4, "y": 4, "z": 3}) != zero_element(A0)
    z = b_zero_witness(w)
    assert z.kind == "factor" and render(z.pattern) == "xx*" and z.positions == (2, 3)
    assert satisfies_zero(B0, w)


def test_zero_found_only_after_rewriting():
    # no literal zero pattern, yet the word is zero; the witness carries its derivation
    w = word("a b c a b* c")
    z = a_zero_witness(w)
    assert z is not None and z.derived
    assert verify_trace(z.trace, system_a0(), model=A0)
    assert replay(z.trace, system_a0())[-1] == z.word
    assert satisfies_zero(A0, w)


def test_already_standard_input_is_fixed():
    form, trace = normalize_a(word("x y x*"))
    assert form.word == word("x y x*") and trace.steps == []
    form, trace = normalize_b(word("x s y y t x*"))
    assert form.render() == "xsyytx*"


def test_rotation_of_suffix():
    form, trace = normalize_a(word("a x b x* c"))
    assert form.render() == "ac*xbx*"
    assert verify_trace(trace, system_a0(), model=A0)


def test_normalize_a_output_is_equivalent():
    w = word("x y x* y")
    form, trace = normalize_a(w)
    assert is_a_standard(form.word)
    assert satisfies(A0, w, form.word) is None
    assert verify_trace(trace, system_a0(), model=A0)


def test_b_block_fusion_example():
    w = word("x y z z y w x*")
    form, trace = normalize_b(w)
    assert form.render() == "xyzwz*"
    assert is_b_standard(form.word)
    assert satisfies(B0, w, form.word) is None
    assert verify_trace(trace, system_b0(), model=B0)


def test_empty_middle_is_a_zero_word():
    with pytest.raises(ZeroWordError) as exc:
        normalize_b(word("x y y x*"))
    assert satisfies_zero(B0, word("x y y x*"))
    assert exc.value.witness is not None


def test_preconditions():
    with pytest.raises(NormalizationError):
        normalize_a(word("x y"))
    with pytest.raises(ZeroWordError):
        normalize_a(word("x x* x"))


def test_standardness_examples():
    assert is_a_standard(word("x y x*"))
    assert not is_a_standard(word("x x* x"))
    assert is_minimal_ordered(word("y y")) and is_minimal_ordered(word("a b b c c a"))
    assert not is_minimal_ordered(word("a c c b b a"))
    assert not is_minimal_ordered(word("y a a y"))
    assert is_square_block(word("a a b b")) and not is_square_block(word("b b a a"))
    f = parse_a_standard(word("a c* x b x*"))
    assert f is not None and f.prefix == word("a c*") and f.ps == (word("b"),)
    assert parse_b_standard(word("x y y x*")) is None


@pytest.mark.parametrize("kind", ["A", "B"])
def test_random_nonzero_words_normalize_soundly(kind):
    model, system, witness, normalize, standard = SETUPS[kind]
    rng = random.Random(7)
    done = 0
    while done < 200:
        w = random_nonzero_shape(rng, 4, 12)
        if witness(w) is not None:
            continue
        form, trace = normalize(w)
        assert standard(form.word), render(w)
        assert verify_trace(trace, system), render(w)
        assert satisfies(model, w, form.word) is None, render(w)
        flipped, ftr = flip_form(form)
        assert standard(flipped.word)
        assert verify_trace(ftr, system)
        assert satisfies(model, form.word, flipped.word) is None
        done += 1


@pytest.mark.parametrize("kind", ["A", "B"])
@given(w=words("abcd", min_size=2, max_size=9))
def test_witness_agrees_with_model(kind, w):
    model, system, witness, normalize, standard = SETUPS[kind]
    assume(mixed_bases(w))
    z = witness(w)
    assert (z is not None) == satisfies_zero(model, w)
    if z is not None and z.trace is not None:
        assert verify_trace(z.trace, system)
    if z is None:
        form, trace = normalize(w)
        assert standard(form.word)
        assert satisfies(model, w, form.word) is None
