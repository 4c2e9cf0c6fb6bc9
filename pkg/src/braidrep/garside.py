"""
Garside combinatorics for positive braids.

The simple elements (permutation braids) are identified with permutations
throughout: the positive lift of x in the symmetric group is the unique
positive braid of length |x| projecting to x, and these lifts multiply like
their permutations exactly when lengths add.  On top of that identification
this module provides

- the leftmost-factor computation, folding the transfer rule
  LF(xy) = LF(x*LF(y)) over a positive word,
- the left-weighted (greedy) normal form, which is a complete equality
  oracle for positive words,
- the greatest-braid map GB from half-permutations to simples,
- the induced monoid action of positive words on subsets of Ref, read off
  the t-constant terms of the LKB generator matrices, and
- the decomposition of an arbitrary word as x * y^-1 with x, y positive.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import random
from typing import Iterable, Iterator

from .braid import BraidWord, Permutation, all_permutations, permutation_from_inversions, refpairs
from .errors import InternalCheckError


def simple_head(u: Permutation, v: Permutation) -> tuple[Permutation, Permutation]:
    """Left-weight the pair of simples (u, v) without changing their product.

    While some generator both extends u on the right and starts v, it is
    transferred; the smallest eligible index is always taken, so the result
    is deterministic.  The returned head is the leftmost factor of the
    product of the two simples.
    """
    n = u.n
    while True:
        eligible = v.left_descents() - u.right_descents()
        if not eligible:
            return u, v
        s = Permutation.transposition(n, min(eligible))
        u = u * s
        v = s * v


def lf_positive(word: BraidWord) -> Permutation:
    """Leftmost factor of a positive word: the longest simple left-divisor."""
    if not word.is_positive:
        raise ValueError("leftmost factor is defined for positive words only")
    acc = Permutation.identity(word.n)
    for e in reversed(word.letters):
        acc = simple_head(Permutation.transposition(word.n, e), acc)[0]
    return acc


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """Left-weighted sequence of non-identity simples.

    Two positive words represent the same braid iff their normal forms are
    identical.
    """

    n: int
    factors: tuple[Permutation, ...]

    def is_trivial(self) -> bool:
        return not self.factors

    def to_word(self) -> BraidWord:
        word = BraidWord(self.n)
        for f in self.factors:
            word = word * f.reduced_word()
        return word


def greedy_normal_form(word: BraidWord) -> NormalForm:
    if not word.is_positive:
        raise ValueError("normal form is defined for positive words only")
    n = word.n
    factors = [Permutation.transposition(n, e) for e in word.letters]
    changed = True
    while changed:
        changed = False
        for p in range(len(factors) - 1):
            head, rest = simple_head(factors[p], factors[p + 1])
            if head != factors[p]:
                factors[p], factors[p + 1] = head, rest
                changed = True
    return NormalForm(n, tuple(f for f in factors if not f.is_identity()))


# -- half-permutations and the greatest braid --------------------------------


def is_half_permutation(n: int, pairs: frozenset[tuple[int, int]]) -> bool:
    """Transitive closure test: (i,j), (j,k) in A forces (i,k) in A."""
    for (i, j) in pairs:
        for (j2, k) in pairs:
            if j2 == j and (i, k) not in pairs:
                return False
    return True


def all_half_permutations(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    ref = refpairs(n)
    for r in range(len(ref) + 1):
        for combo in itertools.combinations(ref, r):
            a = frozenset(combo)
            if is_half_permutation(n, a):
                yield a


def half_permutation_to_json(pairs: frozenset[tuple[int, int]]) -> list[list[int]]:
    """Wire form: sorted list of [i, j] pairs."""
    return [[i, j] for i, j in sorted(pairs)]


def half_permutation_from_json(obj) -> frozenset[tuple[int, int]]:
    return frozenset((int(i), int(j)) for i, j in obj)


def random_half_permutation(n: int, rng: random.Random) -> frozenset[tuple[int, int]]:
    """A random subset of Ref, transitively closed after sampling."""
    pairs = {p for p in refpairs(n) if rng.random() < 0.4}
    changed = True
    while changed:
        changed = False
        for (i, j) in list(pairs):
            for (j2, k) in list(pairs):
                if j2 == j and (i, k) not in pairs:
                    pairs.add((i, k))
                    changed = True
    return frozenset(pairs)


def gb(n: int, pairs: Iterable[tuple[int, int]]) -> Permutation:
    """Greatest braid: the simple whose inversion set is the greatest
    inversion set contained in the given half-permutation.

    Works by removing pairs (i, k) that violate the betweenness property of
    inversion sets until a fixpoint; validated exhaustively against
    ``gb_oracle`` for n <= 5 in the test suite.
    """
    a = set(pairs)
    if not is_half_permutation(n, frozenset(a)):
        raise ValueError("input is not a half-permutation")
    changed = True
    while changed:
        changed = False
        for (i, k) in sorted(a):
            if any(
                (i, j) not in a and (j, k) not in a for j in range(i + 1, k)
            ):
                a.remove((i, k))
                changed = True
                break
    return permutation_from_inversions(n, a)


def gb_oracle(n: int, pairs: Iterable[tuple[int, int]]) -> Permutation:
    """Brute force over all of S_n: the permutation with the largest inversion
    set contained in the given set.

    The largest such set must contain every other candidate (greatest, not
    merely maximal); this is asserted rather than assumed.
    """
    a = frozenset(pairs)
    candidates = [
        (x, inv)
        for x in all_permutations(n)
        if (inv := x.inversion_set()) <= a
    ]
    best, best_set = max(candidates, key=lambda item: len(item[1]))
    for _, inv in candidates:
        if not inv <= best_set:
            raise InternalCheckError("no greatest inversion subset: incomparable maxima")
    return best


# -- the action of positive words on subsets of Ref ---------------------------


@functools.lru_cache(maxsize=None)
def _t_constant_support(n: int, k: int) -> dict[tuple[int, int], frozenset[tuple[int, int]]]:
    """For each row pair s', the column pairs s whose matrix entry has a
    nonzero t-constant term in the LKB generator matrix of sigma_k.

    Every nonzero constant term is one of 1, q, 1-q, hence positive for all
    q in (0, 1); this makes the induced set map independent of q, which is
    asserted here.
    """
    from .laurent import LaurentPoly
    from .lkb import lkb_generator

    allowed = {
        LaurentPoly.one(),
        LaurentPoly.var_q(),
        LaurentPoly.one() - LaurentPoly.var_q(),
    }
    matrix = lkb_generator(n, k)
    pairs = refpairs(n)
    support: dict[tuple[int, int], frozenset[tuple[int, int]]] = {}
    for r, s_prime in enumerate(pairs):
        cols = []
        for c, s in enumerate(pairs):
            const = matrix.entries[r][c].t_constant_term()
            if const:
                if const not in allowed:
                    raise InternalCheckError(
                        f"unexpected t-constant term {const.pretty()} in generator table"
                    )
                cols.append(s)
        support[s_prime] = frozenset(cols)
    return support


def generator_action(
    n: int, k: int, pairs: frozenset[tuple[int, int]]
) -> frozenset[tuple[int, int]]:
    """Image of a subset of Ref under the generator sigma_k.

    A pair s' survives exactly when every pair contributing a positive
    t-constant term to row s' already lies in the input set.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for n={n}")
    support = _t_constant_support(n, k)
    return frozenset(s for s, cols in support.items() if cols <= pairs)


def positive_action(
    word: BraidWord, pairs: frozenset[tuple[int, int]]
) -> frozenset[tuple[int, int]]:
    """Monoid action of a positive word, rightmost letter acting first."""
    if not word.is_positive:
        raise ValueError("the Ref action is defined for positive words only")
    for e in reversed(word.letters):
        pairs = generator_action(word.n, e, pairs)
    return pairs


# -- positive fractions --------------------------------------------------------


def positive_fraction(word: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Write the word as x * y^-1 with x and y positive.

    Each inverse letter is replaced using the half-twist D:
    sigma_i^-1 = D^-1 * (D sigma_i^-1), whose second factor is the simple
    complementing sigma_i in D, and the accumulated D^-1 powers are pushed to
    the right through positive letters with the index-reversing conjugation
    i -> n-i.  The factorization is verified representation-side in the test
    suite rather than trusted.
    """
    n = word.n
    w0 = Permutation.longest(n)
    delta_word = w0.reduced_word()
    positive: list[int] = []
    d = 0
    for e in word.letters:
        if e > 0:
            positive.append(e if d % 2 == 0 else n - e)
        else:
            d += 1
            tail = (w0 * Permutation.transposition(n, -e)).reduced_word()
            if d % 2 == 0:
                positive.extend(tail.letters)
            else:
                positive.extend(n - j for j in tail.letters)
    y = BraidWord(n)
    for _ in range(d):
        y = y * delta_word
    return BraidWord(n, tuple(positive)), y
