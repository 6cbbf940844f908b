"""Exact arithmetic in Q(z), z = exp(i*pi/4), and sparse matrices over it.

Numbers live on the power basis {1, z, z^2, z^3} of Q[z]/(z^4 + 1).  The
four coordinates share a single positive denominator and the five integers
are always in lowest terms, so equal values have identical representations
and hash equal.  No floating point anywhere.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

Rational = Union[int, Fraction]


def _as_pair(x: Rational) -> tuple[int, int]:
    if isinstance(x, int):
        return x, 1
    if isinstance(x, Fraction):
        return x.numerator, x.denominator
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class CycloNum:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 with rational coordinates."""

    __slots__ = ("n0", "n1", "n2", "n3", "den")

    def __init__(self, c0: Rational = 0, c1: Rational = 0, c2: Rational = 0, c3: Rational = 0):
        pairs = [_as_pair(c0), _as_pair(c1), _as_pair(c2), _as_pair(c3)]
        den = 1
        for _, d in pairs:
            den = den * d // gcd(den, d)
        nums = [n * (den // d) for n, d in pairs]
        g = gcd(gcd(abs(nums[0]), abs(nums[1])), gcd(abs(nums[2]), abs(nums[3])))
        g = gcd(g, den)
        self.n0 = nums[0] // g
        self.n1 = nums[1] // g
        self.n2 = nums[2] // g
        self.n3 = nums[3] // g
        self.den = den // g

    @classmethod
    def _raw(cls, n0: int, n1: int, n2: int, n3: int, den: int) -> "CycloNum":
        """Build from raw integers, normalizing sign and gcd."""
        if den < 0:
            n0, n1, n2, n3, den = -n0, -n1, -n2, -n3, -den
        g = gcd(gcd(abs(n0), abs(n1)), gcd(abs(n2), abs(n3)))
        g = gcd(g, den)
        if g == 0:
            g = 1
        obj = object.__new__(cls)
        obj.n0 = n0 // g
        obj.n1 = n1 // g
        obj.n2 = n2 // g
        obj.n3 = n3 // g
        obj.den = den // g
        return obj

    # -- constants ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "CycloNum":
        return cls._raw(0, 0, 0, 0, 1)

    @classmethod
    def one(cls) -> "CycloNum":
        return cls._raw(1, 0, 0, 0, 1)

    @classmethod
    def i_unit(cls) -> "CycloNum":
        """The imaginary unit, z^2."""
        return cls._raw(0, 0, 1, 0, 1)

    @classmethod
    def zeta_pow(cls, k: int) -> "CycloNum":
        """z^k, reduced by z^8 = 1 and z^4 = -1."""
        k %= 8
        sign = 1
        if k >= 4:
            k -= 4
            sign = -1
        coords = [0, 0, 0, 0]
        coords[k] = sign
        return cls._raw(*coords, 1)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "CycloNum") -> "CycloNum":
        da, db = self.den, other.den
        return CycloNum._raw(
            self.n0 * db + other.n0 * da,
            self.n1 * db + other.n1 * da,
            self.n2 * db + other.n2 * da,
            self.n3 * db + other.n3 * da,
            da * db,
        )

    def __sub__(self, other: "CycloNum") -> "CycloNum":
        da, db = self.den, other.den
        return CycloNum._raw(
            self.n0 * db - other.n0 * da,
            self.n1 * db - other.n1 * da,
            self.n2 * db - other.n2 * da,
            self.n3 * db - other.n3 * da,
            da * db,
        )

    def __neg__(self) -> "CycloNum":
        return CycloNum._raw(-self.n0, -self.n1, -self.n2, -self.n3, self.den)

    def __mul__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            n, d = _as_pair(other)
            return CycloNum._raw(self.n0 * n, self.n1 * n, self.n2 * n, self.n3 * n, self.den * d)
        a0, a1, a2, a3 = self.n0, self.n1, self.n2, self.n3
        b0, b1, b2, b3 = other.n0, other.n1, other.n2, other.n3
        # z^4 = -1 folds degrees >= 4 back with a sign.
        return CycloNum._raw(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self.den * other.den,
        )

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycloNum":
        """Field automorphism z -> z^k for odd k in {1, 3, 5, 7}."""
        n0, n1, n2, n3, d = self.n0, self.n1, self.n2, self.n3, self.den
        if k % 8 == 1:
            return self
        if k % 8 == 3:
            return CycloNum._raw(n0, n3, -n2, n1, d)
        if k % 8 == 5:
            return CycloNum._raw(n0, -n1, n2, -n3, d)
        if k % 8 == 7:
            return CycloNum._raw(n0, -n3, -n2, -n1, d)
        raise ValueError(f"no automorphism z -> z^{k}")

    def conj(self) -> "CycloNum":
        """Complex conjugation, z -> z^-1 = -z^3."""
        return CycloNum._raw(self.n0, -self.n3, -self.n2, -self.n1, self.den)

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the product of Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        t = self.galois(3) * self.galois(5) * self.galois(7)
        nrm = self * t
        if nrm.n1 or nrm.n2 or nrm.n3:
            raise ArithmeticError("field norm is not rational; arithmetic is broken")
        return t * Fraction(nrm.den, nrm.n0)

    def __truediv__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            n, d = _as_pair(other)
            if n == 0:
                raise ZeroDivisionError("division by zero")
            return CycloNum._raw(self.n0 * d, self.n1 * d, self.n2 * d, self.n3 * d, self.den * n)
        return self * other.inverse()

    # -- predicates and views ------------------------------------------------

    def is_zero(self) -> bool:
        return self.n0 == 0 and self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def is_rational(self) -> bool:
        return self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def is_real(self) -> bool:
        return self == self.conj()

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.n0, self.den)

    def trace(self) -> Fraction:
        """Field trace down to Q; equals 4 times the constant coordinate."""
        return Fraction(4 * self.n0, self.den)

    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        d = self.den
        return (Fraction(self.n0, d), Fraction(self.n1, d), Fraction(self.n2, d), Fraction(self.n3, d))

    def key(self) -> tuple[int, int, int, int, int]:
        return (self.n0, self.n1, self.n2, self.n3, self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.den == 1 and self.n0 == other and not (self.n1 or self.n2 or self.n3)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        parts = []
        for k, n in enumerate((self.n0, self.n1, self.n2, self.n3)):
            if n == 0:
                continue
            coeff = Fraction(n, self.den)
            mag = abs(coeff)
            if k == 0:
                body = str(mag)
            else:
                zk = "z" if k == 1 else f"z^{k}"
                body = zk if mag == 1 else f"{mag}*{zk}"
            parts.append(("- " if coeff < 0 else "+ ") + body)
        if not parts:
            return "0"
        first = parts[0]
        text = ("-" + first[2:]) if first.startswith("- ") else first[2:]
        return " ".join([text] + parts[1:])

    def __repr__(self) -> str:
        return f"CycloNum({self})"


ZERO = CycloNum.zero()
ONE = CycloNum.one()
IUNIT = CycloNum.i_unit()

# Density above which matrix products run on dense row lists.
DENSE_THRESHOLD = Fraction(1, 4)


class ExactMatrix:
    """Sparse matrix over Q(z); absent entries are zero, zeros never stored."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: dict | None = None):
        if nrows <= 0 or ncols <= 0:
            raise ValueError("matrix dimensions must be positive")
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], CycloNum] = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise ValueError(f"entry index {(r, c)} out of range")
                if not v.is_zero():
                    self.entries[(r, c)] = v

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(k, k): ONE for k in range(n)})

    @classmethod
    def diagonal(cls, values: Iterable[CycloNum]) -> "ExactMatrix":
        vals = list(values)
        return cls(len(vals), len(vals), {(k, k): v for k, v in enumerate(vals)})

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        nr = len(rows)
        nc = len(rows[0])
        ent = {}
        for r, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if isinstance(v, (int, Fraction)):
                    v = CycloNum(v)
                if not v.is_zero():
                    ent[(r, c)] = v
        return cls(nr, nc, ent)

    # -- element access -------------------------------------------------------

    def get(self, r: int, c: int) -> CycloNum:
        return self.entries.get((r, c), ZERO)

    def density(self) -> Fraction:
        return Fraction(len(self.entries), self.nrows * self.ncols)

    # -- linear operations ------------------------------------------------------

    def _same_shape(self, other: "ExactMatrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError(f"shape mismatch {self.shape()} vs {other.shape()}")

    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        ent = dict(self.entries)
        for k, v in other.entries.items():
            s = ent.get(k)
            if s is None:
                ent[k] = v
            else:
                t = s + v
                if t.is_zero():
                    del ent[k]
                else:
                    ent[k] = t
        out = ExactMatrix(self.nrows, self.ncols)
        out.entries = ent
        return out

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        out = ExactMatrix(self.nrows, self.ncols)
        out.entries = {k: -v for k, v in self.entries.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self._matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s) -> "ExactMatrix":
        if isinstance(s, (int, Fraction)):
            s = CycloNum(s)
        out = ExactMatrix(self.nrows, self.ncols)
        if s.is_zero():
            return out
        out.entries = {k: v * s for k, v in self.entries.items()}
        return out

    def _matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape()} by {other.shape()}")
        if self.density() > DENSE_THRESHOLD and other.density() > DENSE_THRESHOLD:
            return self._dense_matmul(other)
        rows_b: dict[int, list[tuple[int, CycloNum]]] = {}
        for (r, c), v in other.entries.items():
            rows_b.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], CycloNum] = {}
        for (i, k), va in self.entries.items():
            row = rows_b.get(k)
            if row is None:
                continue
            for j, vb in row:
                key = (i, j)
                prod = va * vb
                s = acc.get(key)
                acc[key] = prod if s is None else s + prod
        out = ExactMatrix(self.nrows, other.ncols)
        out.entries = {k: v for k, v in acc.items() if not v.is_zero()}
        return out

    def _dense_matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        a = self._dense()
        b = other._dense()
        n, m, p = self.nrows, self.ncols, other.ncols
        ent = {}
        for i in range(n):
            ai = a[i]
            for j in range(p):
                s = ZERO
                for k in range(m):
                    v = ai[k]
                    if not v.is_zero():
                        s = s + v * b[k][j]
                if not s.is_zero():
                    ent[(i, j)] = s
        out = ExactMatrix(n, p)
        out.entries = ent
        return out

    def _dense(self) -> list[list[CycloNum]]:
        rows = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def __pow__(self, n: int) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        acc = ExactMatrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base if n > 1 else base
            n >>= 1
        return acc

    def transpose(self) -> "ExactMatrix":
        out = ExactMatrix(self.ncols, self.nrows)
        out.entries = {(c, r): v for (r, c), v in self.entries.items()}
        return out

    def conj(self) -> "ExactMatrix":
        """Entrywise field conjugation."""
        out = ExactMatrix(self.nrows, self.ncols)
        out.entries = {k: v.conj() for k, v in self.entries.items()}
        return out

    def inverse(self) -> "ExactMatrix":
        """Gauss-Jordan inverse; raises on singular or non-square input."""
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = self._dense()
        inv = ExactMatrix.identity(n)._dense()
        for col in range(n):
            pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            pinv = a[col][col].inverse()
            a[col] = [v * pinv for v in a[col]]
            inv[col] = [v * pinv for v in inv[col]]
            for r in range(n):
                if r == col or a[r][col].is_zero():
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        return ExactMatrix.from_rows(inv)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.entries

    def is_identity(self) -> bool:
        if self.nrows != self.ncols or len(self.entries) != self.nrows:
            return False
        return all(r == c and v == ONE for (r, c), v in self.entries.items())

    def is_diagonal(self) -> bool:
        return all(r == c for (r, c) in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape() == other.shape() and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.key())

    # -- canonical forms ---------------------------------------------------------

    def sorted_entries(self) -> list[tuple[int, int, CycloNum]]:
        return [(r, c, self.entries[(r, c)]) for r, c in sorted(self.entries)]

    def key(self) -> tuple:
        return (self.nrows, self.ncols, tuple((r, c, v.key()) for r, c, v in self.sorted_entries()))

    def canonical_hash(self) -> str:
        h = hashlib.sha256(repr(self.key()).encode("ascii"))
        return h.hexdigest()

    def __str__(self) -> str:
        rows = self._dense()
        cells = [[str(v) for v in row] for row in rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, {len(self.entries)} entries)"


def mat_to_json(m: ExactMatrix) -> dict:
    """Serialize in the interchange form: per-entry coordinate (num, den) pairs."""
    out = []
    for r, c, v in m.sorted_entries():
        coords = []
        for f in v.coeffs():
            coords.append(f.numerator)
            coords.append(f.denominator)
        out.append([r, c, coords])
    return {"nrows": m.nrows, "ncols": m.ncols, "entries": out}


def mat_from_json(obj: dict) -> ExactMatrix:
    ent = {}
    for r, c, coords in obj["entries"]:
        if len(coords) != 8:
            raise ValueError("entry must carry 8 integers (4 numerator/denominator pairs)")
        fracs = [Fraction(coords[2 * k], coords[2 * k + 1]) for k in range(4)]
        ent[(r, c)] = CycloNum(*fracs)
    return ExactMatrix(obj["nrows"], obj["ncols"], ent)
