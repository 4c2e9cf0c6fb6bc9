"""
The Lawrence-Krammer-Bigelow representation and the word-problem tools
built on its faithfulness.

The module V has basis x_s indexed by the pairs s = (i, j), 1 <= i < j <= n,
taken in lexicographic order, over Laurent polynomials in q and t.  The
action of the k-th generator on a basis vector x_{i,j} splits into seven
cases depending on how k sits relative to i and j:

    k < i-1 or j < k :  x_{i,j}
    k = i-1          :  x_{i-1,j} + (1-q) x_{i,j}
    k = i < j-1      :  t q (q-1) x_{i,i+1} + q x_{i+1,j}
    k = i = j-1      :  t q^2 x_{i,j}
    i < k < j-1      :  x_{i,j} + t q^(k-i) (q-1)^2 x_{k,k+1}
    k = j-1 (k > i)  :  x_{i,j-1} + t q^(j-i) (q-1) x_{j-1,j}
    k = j            :  (1-q) x_{i,j} + q x_{i,j+1}

Because the representation is faithful, the image matrix is a complete
invariant of the braid: triviality, word equality, and the word length with
respect to the simple elements and their inverses are all decided here by
exact matrix computations.
"""

from __future__ import annotations

import dataclasses
import functools
import os
from fractions import Fraction

from .braid import BraidWord, all_permutations, refpairs
from .errors import InternalCheckError, ResourceGuardError
from .laurent import LaurentPoly
from .matrix import RepMatrix, mat_inverse, t_degree_range


def lkb_dim(n: int) -> int:
    return n * (n - 1) // 2


@functools.lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: idx for idx, pair in enumerate(refpairs(n))}


def _generator_column(n: int, k: int, i: int, j: int):
    """Image of x_{i,j} under sigma_k as (coefficient, target pair) terms."""
    one = LaurentPoly.one()
    q = LaurentPoly.var_q()
    t = LaurentPoly.var_t()
    if k < i - 1 or j < k:
        return [(one, (i, j))]
    if k == i - 1:
        return [(one, (i - 1, j)), (one - q, (i, j))]
    if k == i and i == j - 1:
        return [(t * q * q, (i, j))]
    if k == i:
        return [(t * q * (q - one), (i, i + 1)), (q, (i + 1, j))]
    if i < k < j - 1:
        return [(one, (i, j)), (t * q ** (k - i) * (q - one) ** 2, (k, k + 1))]
    if k == j - 1:
        return [(one, (i, j - 1)), (t * q ** (j - i) * (q - one), (j - 1, j))]
    if k == j:
        return [(one - q, (i, j)), (q, (i, j + 1))]
    raise AssertionError(f"unreachable case k={k}, i={i}, j={j}")


@functools.lru_cache(maxsize=None)
def lkb_generator(n: int, k: int, sign: int = 1) -> RepMatrix:
    """Matrix of sigma_k^(+-1) in the x basis, columns indexed lexicographically.

    The inverse is obtained by symbolic inversion of the positive matrix;
    the product check inside ``mat_inverse`` guards the generator table.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for n={n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if sign == -1:
        return mat_inverse(lkb_generator(n, k, 1))
    index = _pair_index(n)
    dim = lkb_dim(n)
    zero = LaurentPoly.zero()
    rows = [[zero] * dim for _ in range(dim)]
    for (i, j), col in index.items():
        for coeff, target in _generator_column(n, k, i, j):
            rows[index[target]][col] = rows[index[target]][col] + coeff
    return RepMatrix.from_rows(rows)


def lkb_of_word(word: BraidWord) -> RepMatrix:
    acc = RepMatrix.identity(lkb_dim(word.n))
    for e in word.letters:
        acc = acc * lkb_generator(word.n, abs(e), 1 if e > 0 else -1)
    return acc


@functools.lru_cache(maxsize=None)
def basis_change_v_of_x(n: int) -> tuple[RepMatrix, RepMatrix]:
    """The change of basis between the x basis and the fork basis v.

    Returns (P, Q) where column s of P expresses v_s in the x basis via
    v_{i,j} = x_{i,j} + (1-q) sum_{i<k<j} x_{k,j}, and Q expresses x in the
    v basis via x_{i,j} = v_{i,j} + (q-1) sum_{i<k<j} q^(k-1-i) v_{k,j}.
    The round trip is asserted to be the identity.
    """
    index = _pair_index(n)
    dim = lkb_dim(n)
    one = LaurentPoly.one()
    q = LaurentPoly.var_q()
    zero = LaurentPoly.zero()
    p_rows = [[zero] * dim for _ in range(dim)]
    q_rows = [[zero] * dim for _ in range(dim)]
    for (i, j), col in index.items():
        p_rows[col][col] = one
        q_rows[col][col] = one
        for k in range(i + 1, j):
            p_rows[index[(k, j)]][col] = one - q
            q_rows[index[(k, j)]][col] = (q - one) * q ** (k - 1 - i)
    p = RepMatrix.from_rows(p_rows)
    qm = RepMatrix.from_rows(q_rows)
    if not (p * qm).is_identity() or not (qm * p).is_identity():
        raise InternalCheckError("basis-change matrices are not mutually inverse")
    return p, qm


def is_trivial(word: BraidWord) -> bool:
    """Whether the word represents the identity braid (faithfulness-based)."""
    return lkb_of_word(word).is_identity()


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    """Whether two words represent the same braid."""
    if a.n != b.n:
        raise ValueError(f"strand count mismatch: {a.n} vs {b.n}")
    return lkb_of_word(a) == lkb_of_word(b)


def length_omega(word: BraidWord) -> int:
    """Word length with respect to the simples and their inverses.

    Read off the t-degree span [k, l] of the image: the length is
    max(l-k, l, -k), which is 0 exactly for the trivial braid.
    """
    lo, hi = t_degree_range(lkb_of_word(word))
    return max(hi - lo, hi, -lo)


def full_twist_scalar(n: int) -> LaurentPoly:
    """The scalar by which the full twist (s_1 ... s_{n-1})^n acts.

    Raises when the image is not a scalar matrix.
    """
    if n < 2:
        raise ValueError("the full twist needs at least 2 strands")
    word = BraidWord(n, tuple(range(1, n)) * n)
    return lkb_of_word(word).scalar_value()


# -- brute-force word-length oracle -------------------------------------------

_MAX_BALL_ENV = "BRAIDREP_MAX_BALL"
_DEFAULT_MAX_BALL = 200_000


def _ball_cap() -> int:
    value = os.environ.get(_MAX_BALL_ENV)
    return int(value) if value else _DEFAULT_MAX_BALL


def omega_ball_oracle(
    n: int, radius: int
) -> dict[RepMatrix, tuple[int, BraidWord]]:
    """BFS over products of simples and inverse simples.

    Maps the LKB image (a complete invariant, hence a canonical element key)
    to the exact word length in the simples and a witness word.  Guarded to
    desk scale; the environment variable BRAIDREP_MAX_BALL caps the number
    of stored elements.
    """
    if n > 4 or radius > 3:
        raise ResourceGuardError(f"omega ball for n={n}, radius={radius} exceeds desk scale")
    cap = _ball_cap()
    generators: list[tuple[RepMatrix, BraidWord]] = []
    for x in all_permutations(n):
        if x.is_identity():
            continue
        word = x.reduced_word()
        generators.append((lkb_of_word(word), word))
        inverse = word.inverse()
        generators.append((lkb_of_word(inverse), inverse))
    identity = RepMatrix.identity(lkb_dim(n))
    found: dict[RepMatrix, tuple[int, BraidWord]] = {
        identity: (0, BraidWord(n))
    }
    frontier = [(identity, BraidWord(n))]
    for depth in range(1, radius + 1):
        new_frontier = []
        for matrix, word in frontier:
            for gen_matrix, gen_word in generators:
                product = matrix * gen_matrix
                if product not in found:
                    if len(found) >= cap:
                        raise ResourceGuardError(
                            f"omega ball exceeds {cap} elements (set {_MAX_BALL_ENV} to raise)"
                        )
                    witness = word * gen_word
                    found[product] = (depth, witness)
                    new_frontier.append((product, witness))
        frontier = new_frontier
    return found


# -- membership classes of the module lattice ---------------------------------


@dataclasses.dataclass(frozen=True)
class WVector:
    """Vector with polynomial-in-t coordinates over exact rationals, q fixed.

    Coordinates follow the lexicographic pair order.  Each coordinate is a
    tuple of (t-exponent, coefficient) pairs with nonnegative exponents.
    """

    n: int
    coords: tuple[tuple[tuple[int, Fraction], ...], ...]

    def __post_init__(self):
        if len(self.coords) != lkb_dim(self.n):
            raise ValueError("coordinate count does not match the pair count")
        for coord in self.coords:
            for exp, _ in coord:
                if exp < 0:
                    raise ValueError("W vectors live in R[t]: exponents must be >= 0")

    @classmethod
    def from_maps(cls, n: int, maps) -> "WVector":
        coords = tuple(
            tuple(sorted((int(e), Fraction(c)) for e, c in m.items() if c))
            for m in maps
        )
        return cls(n, coords)

    def constant_term(self, idx: int) -> Fraction:
        for exp, c in self.coords[idx]:
            if exp == 0:
                return c
        return Fraction(0)


def w_class(vector: WVector) -> frozenset[tuple[int, int]]:
    """The set of pairs whose coordinate has vanishing t-constant term.

    Membership in W requires every constant term to be nonnegative; a
    negative constant term raises ValueError.
    """
    pairs = refpairs(vector.n)
    out = []
    for idx, pair in enumerate(pairs):
        c = vector.constant_term(idx)
        if c < 0:
            raise ValueError(f"coordinate {pair} has negative constant term {c}: not in W")
        if c == 0:
            out.append(pair)
    return frozenset(out)


def apply_positive_word(
    word: BraidWord, vector: WVector, q_value: Fraction = Fraction(1, 2)
) -> WVector:
    """Apply the matrix of a positive word to the vector, q evaluated exactly."""
    if not word.is_positive:
        raise ValueError("W is only preserved by positive words")
    coords = [dict(coord) for coord in vector.coords]
    for e in reversed(word.letters):
        matrix = lkb_generator(word.n, e)
        new_coords: list[dict[int, Fraction]] = [dict() for _ in coords]
        for r, row in enumerate(matrix.entries):
            acc = new_coords[r]
            for c, entry in enumerate(row):
                if not entry or not coords[c]:
                    continue
                for t_exp, q_coeff in entry.evaluate_first(q_value).items():
                    for v_exp, v_coeff in coords[c].items():
                        key = t_exp + v_exp
                        val = acc.get(key, Fraction(0)) + q_coeff * v_coeff
                        if val:
                            acc[key] = val
                        elif key in acc:
                            del acc[key]
        coords = new_coords
    return WVector.from_maps(word.n, coords)
