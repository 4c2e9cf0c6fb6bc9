"""
Dense square matrices over exact Laurent polynomials.

Matrices are small (at most n(n-1)/2 rows for the representations built on
top), so a dense immutable tuple-of-tuples layout wins over anything sparse.
Inversion runs Gauss-Jordan elimination over rational functions; the entries
of the result are required to reduce to genuine Laurent polynomials, and the
product with the input is checked against the identity before returning, so
a wrong generator table cannot silently produce a wrong inverse.
"""

from __future__ import annotations

import dataclasses
from math import gcd

from .errors import InternalCheckError
from .laurent import LaurentPoly, divide_exact


@dataclasses.dataclass(frozen=True)
class RepMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        d = len(self.entries)
        if any(len(row) != d for row in self.entries):
            raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows) -> "RepMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, dim: int) -> "RepMatrix":
        one = LaurentPoly.one()
        zero = LaurentPoly.zero()
        return cls(
            tuple(
                tuple(one if r == c else zero for c in range(dim)) for r in range(dim)
            )
        )

    @classmethod
    def scalar(cls, dim: int, value: LaurentPoly) -> "RepMatrix":
        zero = LaurentPoly.zero()
        return cls(
            tuple(
                tuple(value if r == c else zero for c in range(dim))
                for r in range(dim)
            )
        )

    def __mul__(self, other: "RepMatrix") -> "RepMatrix":
        if not isinstance(other, RepMatrix):
            return NotImplemented
        d = self.dim
        if other.dim != d:
            raise ValueError(f"dimension mismatch: {d} vs {other.dim}")
        zero = LaurentPoly.zero()
        b = other.entries
        rows = []
        for r in range(d):
            arow = self.entries[r]
            acc = [zero] * d
            for s in range(d):
                a = arow[s]
                if not a:
                    continue
                brow = b[s]
                for c in range(d):
                    e = brow[c]
                    if e:
                        acc[c] = acc[c] + a * e
            rows.append(tuple(acc))
        return RepMatrix(tuple(rows))

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return RepMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return RepMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def scale(self, factor: LaurentPoly | int) -> "RepMatrix":
        return RepMatrix(
            tuple(tuple(e * factor for e in row) for row in self.entries)
        )

    def is_identity(self) -> bool:
        return self == RepMatrix.identity(self.dim)

    def scalar_value(self) -> LaurentPoly:
        """The scalar c when this matrix equals c * I; raises otherwise."""
        c = self.entries[0][0]
        for r, row in enumerate(self.entries):
            for s, e in enumerate(row):
                if (e != c) if r == s else bool(e):
                    raise InternalCheckError("matrix is not scalar")
        return c

    def subst_monomial(self, first_to, second_to) -> "RepMatrix":
        return RepMatrix(
            tuple(
                tuple(e.subst_monomial(first_to, second_to) for e in row)
                for row in self.entries
            )
        )

    def to_json_obj(self, order: str) -> dict:
        """Wire form: zero entries omitted, 0-based row/col indices."""
        items = []
        for r, row in enumerate(self.entries):
            for c, e in enumerate(row):
                if e:
                    items.append([r, c, e.to_text()])
        return {"dim": self.dim, "order": order, "entries": items}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RepMatrix":
        dim = int(obj["dim"])
        zero = LaurentPoly.zero()
        rows = [[zero] * dim for _ in range(dim)]
        for r, c, text in obj["entries"]:
            rows[r][c] = LaurentPoly.from_text(text)
        return cls.from_rows(rows)


def t_degree_range(matrix: RepMatrix) -> tuple[int, int]:
    """Smallest and largest exponent of the second variable over all entries."""
    lo: int | None = None
    hi: int | None = None
    for row in matrix.entries:
        for e in row:
            if e:
                a, b = e.degree_range(1)
                lo = a if lo is None else min(lo, a)
                hi = b if hi is None else max(hi, b)
    if lo is None or hi is None:
        raise ValueError("t-degree range of the zero matrix is undefined")
    return lo, hi


class RationalFunction:
    """Quotient of Laurent polynomials, normalized only by integer content and
    monomial shift (no polynomial gcd), canonical up to a unit."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = LaurentPoly.one()
        else:
            g = 0
            for c in num.terms().values():
                g = gcd(g, c)
            for c in den.terms().values():
                g = gcd(g, c)
            dmin_a, _ = den.degree_range(0)
            dmin_b = den.degree_range(1)[0]
            lead = den.terms()[max(den.terms())]
            if lead < 0:
                g = -g
            if g != 1 or dmin_a or dmin_b:
                shift = LaurentPoly.monomial(1, -dmin_a, -dmin_b)
                num = divide_int(num * shift, g)
                den = divide_int(den * shift, g)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p)

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def to_laurent(self) -> LaurentPoly | None:
        return divide_exact(self.num, self.den)

    def __repr__(self) -> str:
        return f"({self.num.pretty()}) / ({self.den.pretty()})"


def divide_int(p: LaurentPoly, k: int) -> LaurentPoly:
    return LaurentPoly({key: c // k for key, c in p.terms().items()})


def _solve(lhs: RepMatrix, rhs: RepMatrix) -> list[list[RationalFunction]]:
    """Solve lhs * X = rhs by Gauss-Jordan over rational functions."""
    d = lhs.dim
    if rhs.dim != d:
        raise ValueError(f"dimension mismatch: {d} vs {rhs.dim}")
    a = [[RationalFunction(e) for e in row] for row in lhs.entries]
    b = [[RationalFunction(e) for e in row] for row in rhs.entries]
    for col in range(d):
        pivot = next((r for r in range(col, d) if not a[r][col].is_zero()), None)
        if pivot is None:
            raise InternalCheckError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        p = a[col][col]
        a[col] = [e / p for e in a[col]]
        b[col] = [e / p for e in b[col]]
        for r in range(d):
            if r == col:
                continue
            f = a[r][col]
            if f.is_zero():
                continue
            a[r] = [e - f * g for e, g in zip(a[r], a[col])]
            b[r] = [e - f * g for e, g in zip(b[r], b[col])]
    return b


def _laurentify(rows: list[list[RationalFunction]]) -> RepMatrix:
    out = []
    for row in rows:
        new_row = []
        for e in row:
            p = e.to_laurent()
            if p is None:
                raise InternalCheckError(
                    f"matrix entry does not reduce to a Laurent polynomial: {e!r}"
                )
            new_row.append(p)
        out.append(tuple(new_row))
    return RepMatrix(tuple(out))


def mat_inverse(matrix: RepMatrix) -> RepMatrix:
    """Exact inverse; entries must reduce to Laurent polynomials.

    The product matrix * inverse is asserted to be the identity before
    returning.
    """
    inv = _laurentify(_solve(matrix, RepMatrix.identity(matrix.dim)))
    if not (matrix * inv).is_identity():
        raise InternalCheckError("inverse verification failed")
    return inv


def mat_det(matrix: RepMatrix) -> LaurentPoly:
    """Exact determinant via elimination over rational functions."""
    d = matrix.dim
    a = [[RationalFunction(e) for e in row] for row in matrix.entries]
    det = RationalFunction(LaurentPoly.one())
    sign = 1
    for col in range(d):
        pivot = next((r for r in range(col, d) if not a[r][col].is_zero()), None)
        if pivot is None:
            return LaurentPoly.zero()
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        det = det * p
        for r in range(col + 1, d):
            f = a[r][col]
            if f.is_zero():
                continue
            a[r] = [e - (f / p) * g for e, g in zip(a[r], a[col])]
    result = det.to_laurent()
    if result is None:
        raise InternalCheckError("determinant did not reduce to a Laurent polynomial")
    return result if sign == 1 else -result
