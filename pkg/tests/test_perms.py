import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetgroups import (MAX_DEGREE, Assignment, Perm, Word, all_perms, compose,
                       conjugate_assignment, evaluate_word, inverse,
                       is_transitive, order, parse_cycles)

perms4 = st.sampled_from(all_perms(4))
words4 = st.lists(
    st.tuples(st.integers(min_value=0, max_value=3), st.sampled_from([1, -1])),
    max_size=20,
).map(Word.from_letters)


def assignment4(seed) -> Assignment:
    return Assignment(("P", "Q", "R", "S"), tuple(seed))


def test_identity_and_apply():
    e = Perm.identity(3)
    assert e.degree == 3
    assert e.is_identity()
    assert [e(i) for i in (1, 2, 3)] == [1, 2, 3]
    p = Perm((2, 1, 3))
    assert p.apply(1) == 2 and p(2) == 1


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Perm((1, 1, 2))
    with pytest.raises(ValueError):
        Perm((0, 1, 2))
    with pytest.raises(ValueError):
        Perm((2, 3, 4))


def test_rightmost_factor_acts_first():
    # the pinned convention: with P = (12) and R = (13) the word PR is the
    # three-cycle (132), because R moves the point before P does
    P, R = Perm((2, 1, 3)), Perm((3, 2, 1))
    assert (P * R).cycle_string() == "(132)"
    a = Assignment(("P", "R"), (P, R))
    w = Word.from_letters([(0, 1), (1, 1)])
    assert evaluate_word(w, a).cycle_string() == "(132)"


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        Perm((2, 1)) * Perm((2, 1, 3))


def test_cycles_start_at_least_point():
    p = Perm((2, 3, 1, 4, 6, 5))
    assert p.cycles() == [(1, 2, 3), (5, 6)]
    assert p.cycle_string() == "(123)(56)"
    assert Perm.identity(4).cycles() == []
    assert Perm.identity(4).cycle_string() == "(1)"


def test_cycle_string_spaces_points_past_nine():
    ten = Perm(tuple(list(range(2, 11)) + [1]))
    assert ten.cycle_string() == "(1 2 3 4 5 6 7 8 9 10)"


def test_order_is_lcm_of_cycle_lengths():
    assert Perm.identity(5).order() == 1
    assert Perm((2, 3, 1, 4, 6, 5)).order() == 6
    assert order(Perm((2, 1, 3))) == 2


def test_parse_cycles_forms():
    assert parse_cycles("(12)(34)", 4) == Perm((2, 1, 4, 3))
    assert parse_cycles("(132)", 3) == Perm((3, 1, 2))
    assert parse_cycles("(1 10 2)", 10).apply(1) == 10
    assert parse_cycles("(1, 3, 2)", 3) == Perm((3, 1, 2))
    assert parse_cycles("(1)", 2) == Perm.identity(2)
    assert parse_cycles("()", 3) == Perm.identity(3)


def test_parse_cycles_errors():
    for bad in ["((12))", "(12", "12", "(12)(21)", "(15)", "(1x)"]:
        with pytest.raises(ValueError):
            parse_cycles(bad, 4)


def test_all_perms_ordering_and_bounds():
    ps = all_perms(3)
    assert len(ps) == 6
    assert ps[0].is_identity()
    assert [p.images for p in ps] == sorted(p.images for p in ps)
    with pytest.raises(ValueError):
        all_perms(0)
    with pytest.raises(ValueError):
        all_perms(MAX_DEGREE + 1)


def test_assignment_validation():
    with pytest.raises(ValueError):
        Assignment(("P",), (Perm((1, 2)), Perm((2, 1))))
    with pytest.raises(ValueError):
        Assignment((), ())
    with pytest.raises(ValueError):
        Assignment(("P", "Q"), (Perm((1, 2)), Perm((1, 2, 3))))
    a = Assignment(("P", "Q"), (Perm((2, 1)), Perm((1, 2))))
    assert a.degree == 2
    assert a.image_of("P") == Perm((2, 1))
    with pytest.raises(KeyError):
        a.image_of("Z")
    assert a.as_dict() == {"P": "(12)", "Q": "(1)"}


def test_evaluate_word_unknown_generator_index():
    a = Assignment(("P",), (Perm((2, 1)),))
    with pytest.raises(KeyError):
        evaluate_word(Word.gen(3), a)


def test_is_transitive_small_cases():
    assert is_transitive(Assignment(("P",), (Perm((1,)),)))
    assert not is_transitive(Assignment(("P",), (Perm((1, 2)),)))
    assert is_transitive(Assignment(("P",), (Perm((2, 1)),)))
    # two 2-cycles on 4 points generate a transitive group together
    a = Assignment(("P", "Q"), (Perm((2, 1, 3, 4)), Perm((1, 2, 4, 3))))
    assert not is_transitive(a)
    b = Assignment(("P", "Q"), (Perm((2, 1, 3, 4)), Perm((1, 3, 2, 4))))
    assert not is_transitive(b)
    c = Assignment(("P", "Q"), (Perm((2, 1, 4, 3)), Perm((3, 4, 1, 2))))
    assert is_transitive(c)


@given(perms4, perms4, perms4)
def test_composition_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms4)
def test_inverse_laws(p):
    assert (p * ~p).is_identity()
    assert (~p * p).is_identity()
    assert inverse(p) == ~p
    assert ~~p == p


@given(perms4, perms4)
def test_compose_matches_pointwise_definition(f, g):
    h = compose(f, g)
    assert all(h(x) == f(g(x)) for x in range(1, 5))


@given(st.tuples(perms4, perms4, perms4, perms4), words4, words4)
def test_evaluate_word_is_a_homomorphism(seed, u, v):
    a = assignment4(seed)
    assert evaluate_word(u * v, a) == evaluate_word(u, a) * evaluate_word(v, a)
    assert evaluate_word(~u, a) == ~evaluate_word(u, a)


@given(st.tuples(perms4, perms4, perms4, perms4), perms4)
def test_conjugation_relabels_points(seed, sigma):
    a = assignment4(seed)
    conj = conjugate_assignment(a, sigma)
    # the conjugate permutation moves relabeled points the relabeled way
    for p, q in zip(a.perms, conj.perms):
        assert all(q(sigma(x)) == sigma(p(x)) for x in range(1, 5))
    assert is_transitive(conj) == is_transitive(a)
    assert [p.order() for p in conj.perms] == [p.order() for p in a.perms]


@given(st.tuples(perms4, perms4, perms4, perms4), perms4, perms4)
def test_conjugation_composes(seed, sigma, tau):
    a = assignment4(seed)
    twice = conjugate_assignment(conjugate_assignment(a, sigma), tau)
    assert twice == conjugate_assignment(a, tau * sigma)
