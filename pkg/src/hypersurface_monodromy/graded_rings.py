"""Weighted graded polynomial rings and their quotients by homogeneous ideals.

Polynomials are sparse dicts mapping exponent tuples to Fractions.  Graded
pieces of a quotient ``S/I`` are handled one degree at a time with exact
elimination: the monomials of degree ``a`` are listed in lexicographic order
(``x0`` first, larger exponents first), ``I^a`` is row-reduced with the
leftmost nonzero column as pivot, and the non-pivot monomials are the chosen
basis of ``R^a``.  For monomial ideals this is exactly the set of monomials not
divisible by any generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Mapping, Optional, Sequence

from .algebra_core import Echelon, Matrix, exact_rank, rank_of_rows
from .errors import OutOfRange

Monomial = tuple[int, ...]
Polynomial = dict[Monomial, Fraction]


@dataclass(frozen=True)
class WeightedRing:
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights or any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")

    @classmethod
    def standard(cls, nvars: int) -> WeightedRing:
        return cls((1,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def degree(self, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))


def monomial_basis(ring: WeightedRing, degree: int) -> list[Monomial]:
    """All monomials of the given weighted degree, lexicographically (x0 first)."""
    return list(_monomials(ring.weights, degree))


@lru_cache(maxsize=4096)
def _monomials(weights: tuple[int, ...], degree: int) -> tuple[Monomial, ...]:
    if degree < 0:
        return ()
    if len(weights) == 1:
        w = weights[0]
        return ((degree // w,),) if degree % w == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for e in range(degree // w, -1, -1):
        out.extend((e,) + tail for tail in _monomials(rest, degree - e * w))
    return tuple(out)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def format_monomial(m: Monomial) -> str:
    parts = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
    return "*".join(parts) if parts else "1"


def poly_mul(p: Mapping[Monomial, Fraction], q: Mapping[Monomial, Fraction]) -> Polynomial:
    out: Polynomial = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = mono_mul(ma, mb)
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def monomial_poly(m: Monomial, coeff=1) -> Polynomial:
    return {tuple(m): Fraction(coeff)}


def partial_derivative(p: Mapping[Monomial, Fraction], i: int) -> Polynomial:
    out: Polynomial = {}
    for m, c in p.items():
        if m[i]:
            dm = m[:i] + (m[i] - 1,) + m[i + 1:]
            out[dm] = out.get(dm, 0) + c * m[i]
    return {m: c for m, c in out.items() if c}


def poly_degree(ring: WeightedRing, p: Mapping[Monomial, Fraction]) -> int:
    degs = {ring.degree(m) for m, c in p.items() if c}
    if len(degs) != 1:
        raise ValueError("polynomial is zero or not weighted homogeneous")
    return degs.pop()


@dataclass(frozen=True)
class GradedIdeal:
    ring: WeightedRing
    generators: tuple[tuple[tuple[Monomial, Fraction], ...], ...]
    gen_degrees: tuple[int, ...] = field(init=False)

    def __init__(self, ring: WeightedRing, generators: Sequence[Mapping[Monomial, Fraction]]):
        gens = []
        degs = []
        for g in generators:
            g = {tuple(m): Fraction(c) for m, c in g.items() if c}
            if not g:
                continue
            if any(len(m) != ring.nvars for m in g):
                raise ValueError("generator has wrong number of variables")
            degs.append(poly_degree(ring, g))
            gens.append(tuple(sorted(g.items(), reverse=True)))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "gen_degrees", tuple(degs))

    @property
    def monomial_fast_path(self) -> bool:
        return all(len(g) == 1 for g in self.generators)

    @cached_property
    def monomial_generators(self) -> tuple[Monomial, ...]:
        if not self.monomial_fast_path:
            raise ValueError("ideal is not generated by monomials")
        return tuple(g[0][0] for g in self.generators)

    def contains_monomial(self, m: Monomial) -> bool:
        """Membership of a monomial; only decidable by divisibility for monomial ideals."""
        return any(mono_divides(g, m) for g in self.monomial_generators)

    def generator_polys(self) -> list[Polynomial]:
        return [dict(g) for g in self.generators]

    @cached_property
    def _pieces(self) -> dict:
        return {}

    def piece(self, a: int) -> "GradedPiece":
        pieces = self._pieces
        if a not in pieces:
            pieces[a] = GradedPiece(self, a)
        return pieces[a]


def fermat_jacobian(d: int, nvars: int) -> GradedIdeal:
    """Jacobian ideal of x0^d + ... + x_{nvars-1}^d, generated by d*xi^(d-1)."""
    ring = WeightedRing.standard(nvars)
    gens = []
    for i in range(nvars):
        m = tuple(d - 1 if j == i else 0 for j in range(nvars))
        gens.append({m: Fraction(d)})
    return GradedIdeal(ring, gens)


def jacobian_ideal(ring: WeightedRing, p: Mapping[Monomial, Fraction]) -> GradedIdeal:
    return GradedIdeal(ring, [partial_derivative(p, i) for i in range(ring.nvars)])


class GradedPiece:
    """The degree-a piece of S/I with a normal-form map onto its monomial basis."""

    def __init__(self, ideal: GradedIdeal, a: int):
        self.ideal = ideal
        self.degree = a
        self.monomials = monomial_basis(ideal.ring, a) if a >= 0 else []
        self.index = {m: j for j, m in enumerate(self.monomials)}
        if ideal.monomial_fast_path:
            self.basis = [m for m in self.monomials if not ideal.contains_monomial(m)]
            self._echelon = None
        else:
            ech = Echelon()
            for row in _ideal_rows(ideal, a, self.index):
                ech.add(row)
            self._echelon = ech
            self.basis = [m for j, m in enumerate(self.monomials) if j not in ech.pivots]
        self.basis_index = {m: j for j, m in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def normal_form(self, p: Mapping[Monomial, Fraction]) -> list[Fraction]:
        """Coordinates of a degree-a polynomial on the quotient basis."""
        coords = [Fraction(0)] * self.dim
        if self._echelon is None:
            for m, c in p.items():
                j = self.basis_index.get(tuple(m))
                if j is not None:
                    coords[j] += c
            return coords
        row = {self.index[tuple(m)]: Fraction(c) for m, c in p.items() if c}
        for col, c in self._echelon.reduce(row).items():
            coords[self.basis_index[self.monomials[col]]] += c
        return coords


def _ideal_rows(ideal: GradedIdeal, a: int, index: Mapping[Monomial, int]):
    """Spanning rows of I^a: each generator times each monomial of complementary degree."""
    for g, dg in zip(ideal.generators, ideal.gen_degrees):
        for m in monomial_basis(ideal.ring, a - dg) if a >= dg else []:
            row = {}
            for gm, c in g:
                col = index[mono_mul(gm, m)]
                row[col] = row.get(col, 0) + c
            yield row


def jacobian_graded_dim(ideal: GradedIdeal, a: int, method: str = "auto") -> int:
    """dim (S/I)^a.

    ``method`` is ``"monomial"`` (count monomials outside a monomial ideal),
    ``"linear"`` (monomial count minus the exact rank of the multiplication
    maps from each generator), or ``"auto"``.
    """
    if a < 0:
        return 0
    if method == "auto":
        method = "monomial" if ideal.monomial_fast_path else "linear"
    if method == "monomial":
        return sum(1 for m in monomial_basis(ideal.ring, a) if not ideal.contains_monomial(m))
    if method == "linear":
        mons = monomial_basis(ideal.ring, a)
        index = {m: j for j, m in enumerate(mons)}
        return len(mons) - rank_of_rows(_ideal_rows(ideal, a, index))
    raise ValueError(f"unknown method {method!r}")


def socle_degree(d: int, nvars: int) -> int:
    return nvars * (d - 2)


def macaulay_check(d: int, nvars: int, a: int) -> bool:
    """Perfectness of R^a x R^(t-a) -> R^t for the Fermat ring J = (xi^(d-1))."""
    if d < 2 or nvars < 2:
        raise ValueError("need d >= 2 and nvars >= 2")
    t = socle_degree(d, nvars)
    if a < 0 or a > t:
        raise OutOfRange(f"degree {a} outside 0..{t}")
    ideal = fermat_jacobian(d, nvars)
    top = ideal.piece(t)
    if top.dim != 1:
        return False
    left, right = ideal.piece(a), ideal.piece(t - a)
    if left.dim != right.dim:
        return False
    socle = top.basis[0]
    rows = []
    for ma in left.basis:
        row = {}
        for j, mb in enumerate(right.basis):
            if mono_mul(ma, mb) == socle:
                row[j] = Fraction(1)
        rows.append(row)
    return rank_of_rows(rows) == min(left.dim, right.dim)


def multiplication_map(ideal: GradedIdeal, q_poly: Mapping[Monomial, Fraction], a: int) -> Matrix:
    """Matrix of multiplication by q from R^a to R^(a + deg q), columns indexed by R^a."""
    q = {tuple(m): Fraction(c) for m, c in q_poly.items() if c}
    e = poly_degree(ideal.ring, q)
    src, dst = ideal.piece(a), ideal.piece(a + e)
    cols = [dst.normal_form(poly_mul(q, {m: Fraction(1)})) for m in src.basis]
    return Matrix(dst.dim, src.dim, [cols[j][i] for i in range(dst.dim) for j in range(src.dim)])


def torelli_witness(ideal: GradedIdeal, a: int, d: int) -> Optional[tuple[Monomial, Monomial]]:
    """First monomial pair (A, Q), deg A = a, deg Q = d, with A, Q, AQ all outside the ideal."""
    if not ideal.monomial_fast_path:
        raise ValueError("witness search needs a monomial ideal")
    if a < 0:
        return None
    qs = [q for q in monomial_basis(ideal.ring, d) if not ideal.contains_monomial(q)]
    for A in monomial_basis(ideal.ring, a):
        if ideal.contains_monomial(A):
            continue
        for Q in qs:
            if not ideal.contains_monomial(mono_mul(A, Q)):
                return A, Q
    return None


@lru_cache(maxsize=None)
def bounded_compositions(bound: int, parts: int, total: int) -> int:
    """#{x in Z^parts : 0 <= xi <= bound, sum xi = total}, by convolution over the last part."""
    if bound < 0 or parts < 1:
        raise ValueError("need bound >= 0 and parts >= 1")
    if total < 0 or total > bound * parts:
        return 0
    if parts == 1:
        return 1
    return sum(bounded_compositions(bound, parts - 1, j) for j in range(max(total - bound, 0), total + 1))


@lru_cache(maxsize=None)
def fermat_graded_dim(d: int, nvars: int, a: int) -> int:
    """dim R^a for the Fermat Jacobian ring.

    The standard monomials are exactly the exponent vectors with entries at
    most d-2, so the count is a bounded-composition number.
    """
    if a < 0:
        return 0
    return bounded_compositions(d - 2, nvars, a) if d >= 2 else 0


def graded_dims(ideal: GradedIdeal, top: int) -> Iterator[int]:
    for a in range(top + 1):
        yield jacobian_graded_dim(ideal, a)


def multiplication_rank(ideal: GradedIdeal, q_poly: Mapping[Monomial, Fraction], a: int) -> int:
    return exact_rank(multiplication_map(ideal, q_poly, a))
