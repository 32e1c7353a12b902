import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invsemi.words import (Concat, Leaf, Letter, Star, WordSyntaxError, are_disjoint, bases, content,
                           cut_points, flatten, is_connected, is_scattered_subword, mixed_bases,
                           parse_term, parse_word, plain_projection, render, star_word, stats,
                           structure, term_of_word, word)

from conftest import words

x, y, z = Letter("x"), Letter("y"), Letter("z")
xs, ys, zs = x.star(), y.star(), z.star()


def test_parse_long_example():
    w = parse_word("x* x y* x^2 y z* x* y")
    assert w == (xs, x, ys, x, x, y, zs, xs, y)
    assert render(w) == "x*xy*xxyz*x*y"
    assert render(w, compress=True) == "x*xy*x^2yz*x*y"


def test_parse_single_letter():
    assert parse_word("x") == (x,)


def test_flatten_nested_term():
    assert flatten(parse_term("x(x^2(yx*)*)*zy*")) == word("x y x* x* x* z y*")


def test_flatten_small_terms():
    assert flatten(Star(Star(Leaf("x")))) == (x,)
    assert flatten(Star(Concat((Leaf("x"), Leaf("y"))))) == (ys, xs)


@pytest.mark.parametrize("text", ["", "x^0", "x**(", "(x", "x)", "1", "x^", "X"])
def test_parse_rejects(text):
    with pytest.raises(WordSyntaxError):
        parse_term(text)


def test_parse_word_rejects_parentheses():
    with pytest.raises(WordSyntaxError):
        parse_word("(xy)*")


def test_syntax_error_reports_offset():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("xy?z")
    assert exc.value.offset == 2


def test_star_word_examples():
    assert star_word((x, y)) == (ys, xs)
    assert star_word((xs, y, zs)) == (z, ys, x)


def test_stats_example():
    s = stats(parse_word("x* x y* x^2 y z* x* y"))
    assert s.content == {x, xs, y, ys, zs}
    assert (s.occ[x], s.occ[xs], s.occ[y], s.occ[ys], s.occ[zs]) == (3, 2, 2, 1, 1)
    assert s.head == xs and s.tail == y and s.length == 9
    assert s.mixed_pairs == {"x", "y"}
    assert s.simple_vars == {zs}


def test_stats_trivial_and_mixed():
    s = stats((x,))
    assert s.content == {x} and s.head == s.tail == x and s.simple_vars == {x}
    assert stats((x, xs)).mixed_pairs == {"x"}
    assert not structure((x, xs)).is_bipartite
    with pytest.raises(ValueError):
        stats(())


def test_plain_projection_example():
    assert plain_projection(parse_word("x* x y* x^2 y z* x* y")) == word("x x y x x y z x y")
    assert plain_projection((ys, zs)) == (y, z)


def test_scattered_subword_examples():
    assert is_scattered_subword((x, xs, x), (y, x, z, xs, x)) == (2, 4, 5)
    assert is_scattered_subword((x, xs, x), word("a x b x* c x d")) is not None
    assert is_scattered_subword((y,), (x,)) is None


def test_structure_examples():
    assert is_connected(word("x y x"))
    assert not is_connected(word("x x y y"))
    assert cut_points(word("x x y y")) == [2]
    assert not are_disjoint((x, y), (xs, z))
    assert are_disjoint((x, y), (zs,))


@given(words(), words())
def test_star_is_an_antimorphism(u, v):
    assert star_word(star_word(u)) == u
    assert star_word(u + v) == star_word(v) + star_word(u)


@given(words())
def test_render_parse_round_trip(w):
    assert parse_word(render(w)) == w
    assert parse_word(render(w, compress=True)) == w
    assert flatten(parse_term(render(w))) == w
    assert flatten(term_of_word(w)) == w


@given(words())
def test_plain_projection_properties(w):
    p = plain_projection(w)
    assert len(p) == len(w)
    assert {l.base for l in content(p)} == bases(w)
    assert mixed_bases(w) == mixed_bases(star_word(w))


@given(words(max_size=6), words(min_size=1, max_size=3))
def test_scattered_subword_matches_brute_force(w, p):
    hit = is_scattered_subword(p, w)
    brute = [c for c in itertools.combinations(range(len(w)), len(p)) if all(w[i] == q for i, q in zip(c, p))]
    if brute:
        assert hit == tuple(i + 1 for i in brute[0])
    else:
        assert hit is None


@st.composite
def terms(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return Leaf(draw(st.sampled_from("xyz")))
    if draw(st.booleans()):
        return Star(draw(terms(depth=depth - 1)))
    return Concat(tuple(draw(st.lists(terms(depth=depth - 1), min_size=1, max_size=3))))


@given(terms(), terms(), terms())
def test_flatten_ignores_bracketing(a, b, c):
    left = Concat((Concat((a, b)), c))
    right = Concat((a, Concat((b, c))))
    assert flatten(left) == flatten(right) == flatten(a) + flatten(b) + flatten(c)
    assert flatten(Star(left)) == star_word(flatten(left))
