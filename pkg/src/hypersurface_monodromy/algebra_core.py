"""Exact scalars and dense linear algebra over cyclotomic fields.

Rationals are ``gmpy2.mpq`` internally and accept :class:`fractions.Fraction`
or ``int`` at every entry point.  A :class:`Cyclotomic` is an element
of ``Q(zeta_k)`` stored by its coordinates on the power basis
``1, zeta, ..., zeta^(phi(k)-1)``, i.e. reduced modulo the k-th cyclotomic
polynomial, so two elements of the same order are equal iff their coordinate
vectors are equal.  Elements of different orders are compared after embedding
both into the field of the lcm order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

import mpmath
from gmpy2 import mpq

from .errors import DegenerateForm, NotHermitian

Scalar = Union[int, Fraction, "Cyclotomic"]
_MPQ = type(mpq(0))
_RATIONAL = (int, Fraction, _MPQ)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_k, lowest degree first."""
    if k < 1:
        raise ValueError("order must be positive")
    # x^k - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num = _divide_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def _divide_monic(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for j in range(len(num) - 1, dd - 1, -1):
        c = num[j]
        if c:
            quot[j - dd] = c
            for t in range(dd + 1):
                num[j - dd + t] -= c * den[t]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def euler_phi(k: int) -> int:
    return len(cyclotomic_polynomial(k)) - 1


def _reduce(poly: list, k: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(k)
    deg = len(phi) - 1
    poly = list(poly)
    for j in range(len(poly) - 1, deg - 1, -1):
        c = poly[j]
        if c:
            base = j - deg
            for t in range(deg):
                if phi[t]:
                    poly[base + t] -= c * phi[t]
    out = poly[:deg] + [0] * (deg - len(poly))
    return tuple(_q(c) for c in out)


def _q(x) -> mpq:
    if type(x) is _MPQ:
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def _as_cyclotomic(x: Scalar) -> "Cyclotomic":
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction, _MPQ)):
        return Cyclotomic(1, (_q(x),), _reduced=True)
    raise TypeError(f"cannot interpret {type(x).__name__} as a cyclotomic number")


class Cyclotomic:
    """An element of the cyclotomic field Q(zeta_k), zeta_k = exp(2 pi i / k)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable, _reduced: bool = False):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        self.coeffs = tuple(coeffs) if _reduced else _reduce(list(coeffs), order)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeta(cls, k: int, power: int = 1) -> Cyclotomic:
        power %= k
        return cls(k, [0] * power + [1])

    @classmethod
    def rational(cls, x: int | Fraction, order: int = 1) -> Cyclotomic:
        return cls(order, [_q(x)])

    @classmethod
    def coerce(cls, x: Scalar) -> Cyclotomic:
        return _as_cyclotomic(x)

    # -- field structure --------------------------------------------------
    def embed(self, order: int) -> Cyclotomic:
        """The same number viewed in Q(zeta_order); order must be a multiple."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        poly = [_q(0)] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            poly[j * step] = c
        return Cyclotomic(order, poly)

    def _common(self, other: Scalar) -> tuple[Cyclotomic, Cyclotomic]:
        other = _as_cyclotomic(other)
        if other.order == self.order:
            return self, other
        m = lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    def __add__(self, other: Scalar) -> Cyclotomic:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)], _reduced=True)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.order, [-x for x in self.coeffs], _reduced=True)

    def __sub__(self, other: Scalar) -> Cyclotomic:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)], _reduced=True)

    def __rsub__(self, other: Scalar) -> Cyclotomic:
        return _as_cyclotomic(other) - self

    def __mul__(self, other: Scalar) -> Cyclotomic:
        if type(other) is Cyclotomic and other.order == self.order and len(self.coeffs) > 1:
            ac, bc = self.coeffs, other.coeffs
            prod = [0] * (2 * len(ac) - 1)
            for i, x in enumerate(ac):
                if x:
                    for j, y in enumerate(bc):
                        if y:
                            prod[i + j] += x * y
            return Cyclotomic(self.order, prod)
        if isinstance(other, _RATIONAL):
            other = _q(other)
            return Cyclotomic(self.order, [x * other for x in self.coeffs], _reduced=True)
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        ac, bc = a.coeffs, b.coeffs
        if len(ac) == 1:
            return Cyclotomic(a.order, [ac[0] * y for y in bc], _reduced=True)
        if len(bc) == 1:
            return Cyclotomic(a.order, [x * bc[0] for x in ac], _reduced=True)
        prod = [0] * (len(ac) + len(bc) - 1)
        for i, x in enumerate(ac):
            if x:
                for j, y in enumerate(bc):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.order, prod)

    __rmul__ = __mul__

    def galois(self, a: int) -> Cyclotomic:
        """Image under the automorphism zeta -> zeta^a (gcd(a, order) = 1)."""
        k = self.order
        poly = [_q(0)] * k
        for j, c in enumerate(self.coeffs):
            if c:
                poly[(j * a) % k] += c
        return Cyclotomic(k, poly)

    def conj(self) -> Cyclotomic:
        return self.galois(-1)

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if len(self.coeffs) == 1:
            return Cyclotomic(self.order, [1 / self.coeffs[0]], _reduced=True)
        k = self.order
        # product of the nontrivial Galois conjugates; self * cofactor is the norm
        cofactor = Cyclotomic(k, [1])
        for a in range(2, k):
            if gcd(a, k) == 1:
                cofactor = cofactor * self.galois(a)
        norm = (self * cofactor).coeffs
        assert not any(norm[1:]), "norm must be rational"
        return cofactor * (1 / norm[0])

    def __truediv__(self, other: Scalar) -> Cyclotomic:
        if isinstance(other, _RATIONAL):
            other = _q(other)
            return Cyclotomic(self.order, [x / other for x in self.coeffs], _reduced=True)
        return self * _as_cyclotomic(other).inverse()

    def __rtruediv__(self, other: Scalar) -> Cyclotomic:
        return _as_cyclotomic(other) * self.inverse()

    def __pow__(self, e: int) -> Cyclotomic:
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic(self.order, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        c = self.coeffs[0]
        return Fraction(int(c.numerator), int(c.denominator))

    def is_real(self) -> bool:
        return self == self.conj()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Cyclotomic,) + _RATIONAL):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def minimal(self) -> Cyclotomic:
        """The same number written over the smallest cyclotomic field containing it."""
        k = self.order
        for m in range(1, k + 1):
            if k % m:
                continue
            if m == k:
                return self
            coords = _solve_in_subfield(self, m)
            if coords is not None:
                return Cyclotomic(m, coords, _reduced=True)
        return self

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                low = self.minimal()
                self._hash = hash((low.order, low.coeffs))
        return self._hash

    def multiplicative_order(self, limit: int | None = None) -> int | None:
        """Order as a root of unity, or None if it is not one."""
        limit = limit or 2 * self.order
        one = Cyclotomic(1, [1])
        x = self
        for e in range(1, limit + 1):
            if x == one:
                return e
            x = x * self
        return None

    # -- numerics (display and sign determination only) -------------------
    def to_complex(self) -> complex:
        k = self.order
        return complex(sum(complex(mpmath.expjpi(2 * mpmath.mpf(j) / k)) * float(c)
                           for j, c in enumerate(self.coeffs)))

    def real_sign(self) -> int:
        """Sign of a real element, decided by interval evaluation of increasing precision."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coeffs[0] > 0 else -1
        if not self.is_real():
            raise ValueError(f"{self} is not real")
        k = self.order
        prec = 64
        while True:
            mpmath.iv.prec = prec
            total = mpmath.iv.mpf(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    angle = 2 * mpmath.iv.pi * j / k
                    total += mpmath.iv.cos(angle) * mpmath.iv.mpf(int(c.numerator)) / int(c.denominator)
            if total.a > 0:
                return 1
            if total.b < 0:
                return -1
            prec *= 2

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def fractions(self) -> list[Fraction]:
        return [Fraction(int(c.numerator), int(c.denominator)) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                z = f"z{self.order}" + (f"^{j}" if j > 1 else "")
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@lru_cache(maxsize=None)
def _subfield_embedding(m: int, k: int) -> tuple[tuple[Fraction, ...], ...]:
    """Coordinates in Q(zeta_k) of the power basis of Q(zeta_m)."""
    return tuple(Cyclotomic.zeta(m, j).embed(k).coeffs for j in range(euler_phi(m)))


def _solve_in_subfield(x: Cyclotomic, m: int) -> tuple[Fraction, ...] | None:
    basis = _subfield_embedding(m, x.order)
    # columns are basis images; solve basis-combination = x
    rows = [list(col) for col in zip(*basis)]
    aug = [row + [x.coeffs[i]] for i, row in enumerate(rows)]
    sol = _solve_dense(aug, len(basis))
    return None if sol is None else tuple(sol)


def _solve_dense(aug: list[list], nvars: int):
    """Solve an augmented rational system; None if inconsistent."""
    a = [list(r) for r in aug]
    piv_cols = []
    r = 0
    for c in range(nvars):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] for row in a[r:]):
        return None
    sol = [_q(0)] * nvars
    for i, c in enumerate(piv_cols):
        sol[c] = a[i][-1]
    return sol


# ---------------------------------------------------------------------------
# sparse incremental echelon form
# ---------------------------------------------------------------------------

class Echelon:
    """Incremental row echelon form over any exact field.

    Rows are dicts ``column -> value``.  Every stored pivot row has its pivot
    as its smallest column and pivot value one.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        last = -1
        while True:
            cands = [c for c in row if c > last and c in self.pivots]
            if not cands:
                return row
            c = min(cands)
            f = row[c]
            for cc, v in self.pivots[c].items():
                nv = row.get(cc, 0) - f * v
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
            last = c

    def add(self, row: dict) -> bool:
        """Insert a row; True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = 1 / row[c]
        self.pivots[c] = {cc: v * inv for cc, v in row.items()}
        return True


def rank_of_rows(rows: Iterable[dict]) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Dense matrix with entries in a single cyclotomic field Q(zeta_order)."""

    __slots__ = ("rows", "cols", "entries", "order", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        ents = [_as_cyclotomic(e) for e in entries]
        if len(ents) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ents)}")
        order = 1
        for e in ents:
            if e.order != order:
                order = lcm(order, e.order)
        self.rows, self.cols = rows, cols
        self.order = order
        self.entries = tuple(e.embed(order) for e in ents)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int, order: int = 1) -> Matrix:
        one, zero = Cyclotomic(order, [1]), Cyclotomic(order, [0])
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> Matrix:
        return cls(rows, cols, [Cyclotomic(order, [0])] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> Matrix:
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> Matrix:
        return cls(len(values), 1, values)

    def __getitem__(self, ij: tuple[int, int]) -> Cyclotomic:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Cyclotomic]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list[Cyclotomic]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[Cyclotomic]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def embed(self, order: int) -> Matrix:
        return Matrix(self.rows, self.cols, [e.embed(order) for e in self.entries])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self, other
        if a.order != b.order:
            m = lcm(a.order, b.order)
            a, b = a.embed(m), b.embed(m)
        out = []
        bcols = [b.col(j) for j in range(b.cols)]
        for i in range(a.rows):
            ri = a.row(i)
            for cj in bcols:
                acc = None
                for x, y in zip(ri, cj):
                    if x and y:
                        acc = x * y if acc is None else acc + x * y
                out.append(acc if acc is not None else Cyclotomic(a.order, [0]))
        return Matrix(a.rows, b.cols, out)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [x - y for x, y in zip(self.entries, other.entries)])

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [-x for x in self.entries])

    def scale(self, c: Scalar) -> Matrix:
        return Matrix(self.rows, self.cols, [c * x for x in self.entries])

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def conj(self) -> Matrix:
        return Matrix(self.rows, self.cols, [x.conj() for x in self.entries])

    @property
    def H(self) -> Matrix:
        return self.transpose().conj()

    def kron(self, other: Matrix) -> Matrix:
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                for j in range(self.cols):
                    a = self[i, j]
                    for l in range(other.cols):
                        out.append(a * other[k, l])
        return Matrix(self.rows * other.rows, self.cols * other.cols, out)

    def apply(self, vec: Sequence[Scalar]) -> list[Cyclotomic]:
        return (self @ Matrix.column(vec)).col(0)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.rows)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _gauss(self, augment: Matrix | None = None):
        """Row-reduce (optionally augmented); returns (rows, pivot columns, swaps)."""
        a = self.to_rows()
        if augment is not None:
            a = [r + augment.row(i) for i, r in enumerate(a)]
        piv = []
        swaps = 0
        r = 0
        for c in range(self.cols):
            p = next((i for i in range(r, self.rows) if a[i][c]), None)
            if p is None:
                continue
            if p != r:
                a[r], a[p] = a[p], a[r]
                swaps += 1
            inv = a[r][c].inverse()
            a[r] = [v * inv for v in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [v - f * w for v, w in zip(a[i], a[r])]
            piv.append(c)
            r += 1
        return a, piv, swaps

    def det(self) -> Cyclotomic:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        a = self.to_rows()
        n = self.rows
        det = Cyclotomic(self.order, [1])
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return Cyclotomic(self.order, [0])
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det = det * a[c][c]
            inv = a[c][c].inverse()
            for i in range(c + 1, n):
                if a[i][c]:
                    f = a[i][c] * inv
                    a[i] = [v - f * w for v, w in zip(a[i], a[c])]
        return det

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        rows, piv, _ = self._gauss(Matrix.identity(self.rows, self.order))
        if len(piv) < self.rows:
            raise ZeroDivisionError("matrix is singular")
        n = self.rows
        return Matrix(n, n, [e for r in rows for e in r[n:]])

    def kernel(self) -> list[list[Cyclotomic]]:
        """Basis of the right null space, one vector per free column."""
        rows, piv, _ = self._gauss()
        zero, one = Cyclotomic(self.order, [0]), Cyclotomic(self.order, [1])
        basis = []
        for free in range(self.cols):
            if free in piv:
                continue
            v = [zero] * self.cols
            v[free] = one
            for i, c in enumerate(piv):
                v[c] = -rows[i][free]
            basis.append(v)
        return basis

    def __pow__(self, e: int) -> Matrix:
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.rows, self.order)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def multiplicative_order(self, limit: int = 1000) -> int | None:
        ident = Matrix.identity(self.rows, self.order)
        x = self
        for e in range(1, limit + 1):
            if x == ident:
                return e
            x = x @ self
        return None

    def key(self) -> tuple:
        """Canonical hashable form at this matrix's order."""
        return (self.rows, self.cols, self.order, tuple(e.coeffs for e in self.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        if self.order == other.order:
            return self.entries == other.entries
        return all(x == y for x, y in zip(self.entries, other.entries))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({[[str(e) for e in r] for r in self.to_rows()]})"


def cyclotomic_arith(a: Scalar, b: Scalar | None, op: str) -> Cyclotomic:
    """Dispatch for the four scalar operations; ``embed`` takes an integer order as b."""
    a = _as_cyclotomic(a)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "conj":
        return a.conj()
    if op == "embed":
        return a.embed(int(b))
    raise ValueError(f"unknown operation {op!r}")


def exact_rank(m: Matrix) -> int:
    return rank_of_rows({j: e for j, e in enumerate(m.row(i)) if e} for i in range(m.rows))


# ---------------------------------------------------------------------------
# hermitian forms
# ---------------------------------------------------------------------------

class HermitianForm:
    """h(x, y) = y^H G x: linear in x, conjugate-linear in y."""

    def __init__(self, gram: Matrix, nondegenerate: bool = False):
        if not gram.is_square():
            raise NotHermitian("gram matrix must be square")
        if gram != gram.H:
            raise NotHermitian("gram matrix is not equal to its conjugate transpose")
        self.gram = gram
        self.nondegenerate = nondegenerate
        if nondegenerate and gram.det().is_zero():
            raise DegenerateForm(gram.rows - exact_rank(gram))

    @property
    def dim(self) -> int:
        return self.gram.rows

    @property
    def order(self) -> int:
        return self.gram.order

    def __call__(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Cyclotomic:
        gx = self.gram.apply(x)
        acc = Cyclotomic(1, [0])
        for yi, gi in zip(y, gx):
            acc = acc + _as_cyclotomic(yi).conj() * gi
        return acc

    def congruent(self, p: Matrix) -> HermitianForm:
        """The form x -> h(Px, Px)."""
        return HermitianForm(p.H @ self.gram @ p)

    def __repr__(self) -> str:
        return f"HermitianForm({self.gram!r})"


def _signature_and_radical(h: HermitianForm) -> tuple[int, int, int]:
    a = h.gram.to_rows()
    n = len(a)
    active = list(range(n))
    pos = neg = 0

    def eliminate(m: int, pivot_row: int, factor: Cyclotomic):
        # row_m -= factor * row_p ; col_m -= conj(factor) * col_p
        a[m] = [v - factor * w for v, w in zip(a[m], a[pivot_row])]
        fc = factor.conj()
        for r in range(n):
            a[r][m] = a[r][m] - fc * a[r][pivot_row]

    while active:
        i = next((i for i in active if a[i][i]), None)
        if i is not None:
            d = a[i][i]
            for m in active:
                if m != i and a[m][i]:
                    eliminate(m, i, a[m][i] / d)
            if d.real_sign() > 0:
                pos += 1
            else:
                neg += 1
            active.remove(i)
            continue
        pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]  # a[j][i] == conj(b); both diagonals vanish
        for m in active:
            if m in (i, j):
                continue
            beta = a[m][i] / a[j][i]
            alpha = a[m][j] / b
            if beta:
                eliminate(m, j, beta)
            if alpha:
                eliminate(m, i, alpha)
        # the block [[0, b], [conj b, 0]] is a hyperbolic plane
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
    return pos, neg, n - pos - neg


def hermitian_signature(h: HermitianForm) -> tuple[int, int]:
    """(number of positive, number of negative) squares after exact diagonalization."""
    p, q, _ = _signature_and_radical(h)
    return p, q


def radical_dimension(h: HermitianForm) -> int:
    return _signature_and_radical(h)[2]


def hermitian_signature_strict(h: HermitianForm) -> tuple[int, int]:
    p, q, r = _signature_and_radical(h)
    if r:
        raise DegenerateForm(r)
    return p, q


def symmetric_form(rows: Sequence[Sequence[Scalar]]) -> HermitianForm:
    return HermitianForm(Matrix.from_rows(rows))
