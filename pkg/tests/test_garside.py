import itertools
import random

import pytest

from braidrep.braid import BraidWord, Permutation, all_permutations, refpairs
from braidrep.garside import (
    NormalForm,
    all_half_permutations,
    gb,
    gb_oracle,
    generator_action,
    greedy_normal_form,
    half_permutation_from_json,
    half_permutation_to_json,
    is_half_permutation,
    lf_positive,
    positive_action,
    positive_fraction,
    random_half_permutation,
    simple_head,
)
from braidrep.lkb import lkb_of_word
from braidrep.verify import random_positive_word, random_word, rewritten_equivalent


def s(n, i):
    return Permutation.transposition(n, i)


def brute_force_lf(word: BraidWord) -> Permutation:
    """Independent oracle: the longest simple left-dividing the positive word.

    x left-divides w iff some positive word equal to w starts with a reduced
    word of x; decided here with the LKB equality oracle by checking that
    x^-1 w is representable positively, via exhaustive search over short
    positive words of the right length.
    """
    n = word.n
    target = lkb_of_word(word)
    best = Permutation.identity(n)
    for x in all_permutations(n):
        k = len(word) - x.length()
        if k < 0 or x.length() <= best.length():
            continue
        prefix = lkb_of_word(x.reduced_word())
        found = any(
            prefix * lkb_of_word(BraidWord(n, rest)) == target
            for rest in itertools.product(range(1, n), repeat=k)
        )
        if found:
            best = x
    return best


def test_simple_head_examples():
    # nothing transfers: s1 * s1 does not have length 2
    assert simple_head(s(3, 1), s(3, 1)) == (s(3, 1), s(3, 1))
    # the head of a single simple is the simple itself
    for x in all_permutations(3):
        head, rest = simple_head(Permutation.identity(3), x)
        assert head == x and rest.is_identity()
    # lengths add: head absorbs everything
    assert simple_head(s(3, 1), s(3, 2)) == (s(3, 1) * s(3, 2), Permutation.identity(3))


def test_simple_head_preserves_product():
    rng = random.Random(31)
    for n in (3, 4, 5):
        perms = list(all_permutations(n))
        for _ in range(100):
            u, v = rng.choice(perms), rng.choice(perms)
            head, rest = simple_head(u, v)
            lhs = lkb_of_word(u.reduced_word() * v.reduced_word())
            rhs = lkb_of_word(head.reduced_word() * rest.reduced_word())
            assert lhs == rhs
            # left-weighted: no generator can still be transferred
            assert not (rest.left_descents() - head.right_descents())


def test_lf_examples():
    for n in (2, 3, 4):
        for i in range(1, n):
            assert lf_positive(BraidWord(n, (i,))) == s(n, i)
    assert lf_positive(BraidWord(2, (1, 1))) == s(2, 1)
    assert lf_positive(BraidWord(3, (1, 2))) == s(3, 1) * s(3, 2)
    assert lf_positive(BraidWord(3)) == Permutation.identity(3)
    with pytest.raises(ValueError):
        lf_positive(BraidWord(3, (-1,)))


def test_lf_against_brute_force():
    rng = random.Random(32)
    for _ in range(25):
        w = random_positive_word(3, 5, rng)
        assert lf_positive(w) == brute_force_lf(w)
    for _ in range(10):
        w = random_positive_word(4, 4, rng)
        assert lf_positive(w) == brute_force_lf(w)


def test_transfer_identity_exhaustive_n4():
    # LF(xy) = LF(x LF(y)) over all pairs of simples; the leftmost factor of
    # the two-simple product is computed by the word fold on one side and by
    # the local transfer on the other.
    count = 0
    for x in all_permutations(4):
        wx = x.reduced_word()
        for y in all_permutations(4):
            assert lf_positive(wx * y.reduced_word()) == simple_head(x, y)[0]
            count += 1
    assert count == 576


@pytest.mark.parametrize("n", [5, 6])
def test_transfer_identity_random(n):
    rng = random.Random(33 + n)
    for _ in range(120):
        u = random_positive_word(n, 8, rng)
        v = random_positive_word(n, 8, rng)
        assert lf_positive(u * v) == lf_positive(u * lf_positive(v).reduced_word())


def test_normal_form_braid_relations():
    assert greedy_normal_form(BraidWord(3, (1, 2, 1))) == greedy_normal_form(
        BraidWord(3, (2, 1, 2))
    )
    assert greedy_normal_form(BraidWord(4, (1, 3))) == greedy_normal_form(
        BraidWord(4, (3, 1))
    )
    assert greedy_normal_form(BraidWord(3)) == NormalForm(3, ())
    with pytest.raises(ValueError):
        greedy_normal_form(BraidWord(3, (-1,)))


def test_normal_form_left_weighted_and_faithful():
    rng = random.Random(34)
    for n in (3, 4, 5):
        for _ in range(60):
            w = random_positive_word(n, 10, rng)
            nf = greedy_normal_form(w)
            assert all(not f.is_identity() for f in nf.factors)
            for a, b in zip(nf.factors, nf.factors[1:]):
                assert simple_head(a, b) == (a, b)
            assert lkb_of_word(nf.to_word()) == lkb_of_word(w)


def test_normal_form_emptiness_is_triviality():
    from braidrep.lkb import is_trivial

    rng = random.Random(40)
    for _ in range(40):
        w = random_positive_word(4, 6, rng)
        assert greedy_normal_form(w).is_trivial() == is_trivial(w)


def test_normal_form_is_equality_oracle():
    rng = random.Random(35)
    for n in (3, 4, 5):
        for _ in range(60):
            u = random_positive_word(n, 8, rng)
            if rng.random() < 0.5:
                v = rewritten_equivalent(u, 6, rng)
            else:
                v = random_positive_word(n, 8, rng)
            nf_equal = greedy_normal_form(u) == greedy_normal_form(v)
            lkb_equal = lkb_of_word(u) == lkb_of_word(v)
            assert nf_equal == lkb_equal


def test_half_permutation_predicate():
    assert is_half_permutation(3, frozenset())
    assert is_half_permutation(3, frozenset({(1, 3)}))
    assert is_half_permutation(4, frozenset({(1, 2), (2, 4), (1, 4)}))
    assert not is_half_permutation(4, frozenset({(1, 2), (2, 4)}))


def test_half_permutation_json():
    import json

    rng = random.Random(30)
    for _ in range(20):
        a = random_half_permutation(4, rng)
        wire = json.dumps(half_permutation_to_json(a))
        assert half_permutation_from_json(json.loads(wire)) == a
    assert half_permutation_to_json(frozenset({(2, 3), (1, 2), (1, 3)})) == [
        [1, 2],
        [1, 3],
        [2, 3],
    ]


def test_half_permutation_counts():
    # every inversion set is a half-permutation, so there are at least n! of them
    for n in (3, 4):
        half_perms = set(all_half_permutations(n))
        assert {x.inversion_set() for x in all_permutations(n)} <= half_perms


def test_gb_examples():
    assert gb(3, frozenset()) == Permutation.identity(3)
    for n in (3, 4, 5):
        assert gb(n, frozenset(refpairs(n))) == Permutation.longest(n)
    for x in all_permutations(4):
        assert gb(4, x.inversion_set()) == x
    with pytest.raises(ValueError):
        gb(4, frozenset({(1, 2), (2, 4)}))  # not transitively closed


def test_gb_matches_oracle_exhaustively():
    for n in (2, 3, 4):
        for a in all_half_permutations(n):
            assert gb(n, a) == gb_oracle(n, a)


def test_gb_oracle_spot():
    # betweenness kills (1,3) when neither (1,2) nor (2,3) is present
    assert gb_oracle(3, frozenset({(1, 3)})) == Permutation.identity(3)
    assert gb(3, frozenset({(1, 3)})) == Permutation.identity(3)


def test_generator_action_preserves_half_permutations():
    for a in all_half_permutations(4):
        for k in (1, 2, 3):
            assert is_half_permutation(4, generator_action(4, k, a))
    rng = random.Random(36)
    for n in (5, 6):
        for _ in range(40):
            a = random_half_permutation(n, rng)
            for k in range(1, n):
                assert is_half_permutation(n, generator_action(n, k, a))


def test_action_equivariance_exhaustive_n4():
    # GB(xA) == LF(x GB(A)) for every simple x and every half-permutation A
    simples = list(all_permutations(4))
    for a in all_half_permutations(4):
        gb_a = gb(4, a).reduced_word()
        for x in simples:
            word = x.reduced_word()
            assert gb(4, positive_action(word, a)) == lf_positive(word * gb_a)


def test_action_equivariance_random_n5():
    rng = random.Random(37)
    for _ in range(150):
        a = random_half_permutation(5, rng)
        k = rng.randint(1, 4)
        word = BraidWord(5, (k,))
        assert gb(5, generator_action(5, k, a)) == lf_positive(word * gb(5, a).reduced_word())


def test_action_is_monoid_action():
    rng = random.Random(38)
    for _ in range(150):
        a = random_half_permutation(4, rng)
        u = random_positive_word(4, 6, rng)
        v = random_positive_word(4, 6, rng)
        assert positive_action(u * v, a) == positive_action(u, positive_action(v, a))
    with pytest.raises(ValueError):
        positive_action(BraidWord(4, (-1,)), frozenset())
    with pytest.raises(ValueError):
        generator_action(4, 5, frozenset())


def test_positive_fraction_trivial_cases():
    w = BraidWord(4, (1, 3, 2))
    x, y = positive_fraction(w)
    assert (x, y) == (w, BraidWord(4))
    x, y = positive_fraction(BraidWord(2, (-1,)))
    assert x.is_positive and y.is_positive
    assert lkb_of_word(BraidWord(2, (-1,))) * lkb_of_word(y) == lkb_of_word(x)


def test_positive_fraction_random():
    rng = random.Random(39)
    for n in (3, 4):
        for _ in range(40):
            w = random_word(n, 7, rng)
            x, y = positive_fraction(w)
            assert x.is_positive and y.is_positive
            # w = x y^-1  <=>  w y = x under the faithful representation
            assert lkb_of_word(w) * lkb_of_word(y) == lkb_of_word(x)
