"""Local monodromy: Picard-Lefschetz maps, complex reflections, A_{k-1} lattices,
suspension of intersection matrices and Sebastiani-Thom joins.

Vectors are plain sequences of scalars.  Bilinear forms are ``(x, y) = x^T B y``;
hermitian forms follow :class:`HermitianForm`, ``h(x, y) = y^H G x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra_core import (
    Cyclotomic,
    HermitianForm,
    Matrix,
    Scalar,
    hermitian_signature,
)
from .errors import BadVanishingCycle, NonUnitConditioning, NotSymmetric, NotUnitary


def _bilinear(form: Matrix, x: Sequence[Scalar], y: Sequence[Scalar]) -> Cyclotomic:
    by = form.apply(y)
    acc = Cyclotomic(1, [0])
    for xi, v in zip(x, by):
        acc = acc + v * xi
    return acc


def pl_transform(x: Sequence[Scalar], delta: Sequence[Scalar], form: Matrix | Sequence[Sequence[Scalar]],
                 parity_sign: int) -> list[Cyclotomic]:
    """Picard-Lefschetz transformation along ``delta``.

    ``parity_sign`` is (-1)^n: +1 for a symmetric form (n even), where
    (delta, delta) = +-2 and T(x) = x -+ (x, delta) delta is a reflection;
    -1 for an alternating form (n odd), where T(x) = x - (x, delta) delta.
    """
    if not isinstance(form, Matrix):
        form = Matrix.from_rows(form)
    dd = _bilinear(form, delta, delta)
    if parity_sign == 1:
        if form != form.transpose():
            raise BadVanishingCycle("even dimension needs a symmetric form")
        if dd not in (2, -2):
            raise BadVanishingCycle(f"(delta, delta) = {dd}, expected +-2")
        sign = -1 if dd == 2 else 1
    elif parity_sign == -1:
        if form != -form.transpose():
            raise BadVanishingCycle("odd dimension needs an alternating form")
        if dd != 0:
            raise BadVanishingCycle(f"(delta, delta) = {dd}, expected 0")
        sign = -1
    else:
        raise ValueError("parity_sign must be +1 or -1")
    c = _bilinear(form, x, delta) * sign
    return [Cyclotomic.coerce(xi) + c * di for xi, di in zip(x, delta)]


@dataclass(frozen=True)
class ComplexReflection:
    """x -> x + epsilon (lambda - 1) h(x, delta) delta, with h(delta, delta) = epsilon."""

    lam: Cyclotomic
    delta: tuple
    epsilon: int
    form: HermitianForm = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", Cyclotomic.coerce(self.lam))
        object.__setattr__(self, "delta", tuple(Cyclotomic.coerce(v) for v in self.delta))
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +-1")
        if len(self.delta) != self.form.dim:
            raise ValueError("delta has the wrong length")
        if self.lam == 1 or self.lam.multiplicative_order() is None:
            raise ValueError(f"lambda = {self.lam} is not a nontrivial root of unity")
        hdd = self.form(self.delta, self.delta)
        if hdd != self.epsilon:
            raise NonUnitConditioning(f"h(delta, delta) = {hdd}, expected {self.epsilon}")


def reflection_matrix(r: ComplexReflection) -> Matrix:
    """I + epsilon (lambda - 1) delta delta^H G."""
    col = Matrix.column(r.delta)
    row = col.H @ r.form.gram
    t = Matrix.identity(len(r.delta)) + (col @ row).scale((r.lam - 1) * r.epsilon)
    if t.H @ r.form.gram @ t != r.form.gram:
        raise NonUnitConditioning("reflection is not unitary")
    return t


def is_unitary(t: Matrix, form: HermitianForm) -> bool:
    return t.H @ form.gram @ t == form.gram


@dataclass(frozen=True)
class VanishingLattice:
    """Intersection matrix of vanishing cycles of a Milnor fibre of complex dimension ``fiber_dim``.

    The form is symmetric when ``fiber_dim`` is even (self-intersection
    (-1)^(m(m-1)/2) * 2 for m = fiber_dim) and alternating when it is odd.
    """

    gram: Matrix
    basis_labels: tuple[str, ...]
    fiber_dim: int = 0

    @property
    def dim(self) -> int:
        return self.gram.rows

    @property
    def symmetric(self) -> bool:
        return self.fiber_dim % 2 == 0

    def self_intersection(self) -> int:
        m = self.fiber_dim
        return 0 if m % 2 else 2 * (-1) ** (m * (m - 1) // 2)


def a_lattice(k: int) -> VanishingLattice:
    """Intersection matrix of xi_1 - xi_2, ..., xi_{k-1} - xi_k with (xi_i, xi_j) = delta_ij."""
    if k < 2:
        raise ValueError("need k >= 2")
    vecs = [[(1 if j == i else -1 if j == i + 1 else 0) for j in range(k)] for i in range(k - 1)]
    gram = Matrix.from_rows([[sum(a * b for a, b in zip(u, v)) for v in vecs] for u in vecs])
    sig = hermitian_signature(HermitianForm(gram))
    assert sig == (k - 1, 0), f"A_{k - 1} lattice not positive definite: {sig}"
    labels = tuple(f"xi{i + 1}-xi{i + 2}" for i in range(k - 1))
    return VanishingLattice(gram, labels, 0)


def monodromy_cycle_shift(k: int) -> Matrix:
    """Matrix of xi_i -> xi_{i+1} (indices mod k) on the difference basis, columns = images."""
    if k < 2:
        raise ValueError("need k >= 2")
    basis = [[(1 if j == i else -1 if j == i + 1 else 0) for j in range(k)] for i in range(k - 1)]
    # coordinates of v = sum c_i (xi_i - xi_{i+1}) are partial sums of v's entries
    cols = []
    for v in basis:
        image = [v[(j - 1) % k] for j in range(k)]
        coords, acc = [], 0
        for j in range(k - 1):
            acc += image[j]
            coords.append(acc)
        assert acc + image[k - 1] == 0
        cols.append(coords)
    return Matrix.from_rows([[cols[j][i] for j in range(k - 1)] for i in range(k - 1)])


def suspend_lattice(v: VanishingLattice) -> VanishingLattice:
    """Intersection matrix after adding one square to the singularity.

    Symmetric to alternating: zero the diagonal, negate the entries above it,
    keep those below.  Alternating to symmetric: keep the entries above the
    diagonal, mirror them below, and put the self-intersection of the new
    even dimension on the diagonal.  Two steps negate the original matrix.
    """
    g = v.gram
    n = g.rows
    if v.symmetric:
        if g != g.transpose():
            raise NotSymmetric("declared symmetric lattice has a non-symmetric matrix")
        rows = [[0 if i == j else (-g[i, j] if i < j else g[i, j]) for j in range(n)] for i in range(n)]
    else:
        if g != -g.transpose():
            raise NotSymmetric("declared alternating lattice has a non-alternating matrix")
        diag = VanishingLattice(g, v.basis_labels, v.fiber_dim + 1).self_intersection()
        rows = [[diag if i == j else (g[i, j] if i < j else g[j, i]) for j in range(n)] for i in range(n)]
    return VanishingLattice(Matrix.from_rows(rows), tuple(f"s({lab})" for lab in v.basis_labels), v.fiber_dim + 1)


def join_monodromy(tf: Matrix, tg: Matrix) -> Matrix:
    """Monodromy of f + g: the Kronecker product of the factors' monodromies."""
    return tf.kron(tg)


@dataclass(frozen=True)
class Eigenpair:
    lam: Cyclotomic
    vector: tuple
    h_value: Cyclotomic
    normalized: bool


@dataclass(frozen=True)
class NodalMonodromy:
    k: int
    n: int
    matrix: Matrix
    form: HermitianForm
    eigenpairs: tuple[Eigenpair, ...]

    @property
    def order(self) -> int:
        return self.matrix.multiplicative_order(4 * self.k)


def vanishing_hermitian_form(k: int, n: int) -> HermitianForm:
    """h(x, y) = i^(n+1) (x, conj y) on the vanishing cycles of y^k + x_1^2 + ... + x_{n+1}^2."""
    lat = a_lattice(k)
    for _ in range(n + 1):
        lat = suspend_lattice(lat)
    scale = Cyclotomic.zeta(4, n + 1)
    return HermitianForm(lat.gram.transpose().scale(scale))


def _rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt
    if x <= 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def nodal_monodromy(k: int, n: int) -> NodalMonodromy:
    """Local monodromy sigma_0 (x) (-1) (x) ... (x) (-1) of y^k + x_1^2 + ... + x_{n+1}^2 = t."""
    if k < 2 or n < 0:
        raise ValueError("need k >= 2 and n >= 0")
    t = monodromy_cycle_shift(k)
    minus = Matrix.from_rows([[-1]])
    for _ in range(n + 1):
        t = join_monodromy(t, minus)
    form = vanishing_hermitian_form(k, n)
    sign = (-1) ** (n + 1)
    pairs = []
    for i in range(1, k):
        lam = Cyclotomic.zeta(k, i) * sign
        kernel = (t - Matrix.identity(k - 1).scale(lam)).kernel()
        if len(kernel) != 1:
            raise ArithmeticError(f"eigenvalue {lam} has geometric multiplicity {len(kernel)}")
        vec = kernel[0]
        hv = form(vec, vec)
        normalized = False
        if hv.is_rational():
            root = _rational_sqrt(abs(hv.to_fraction()))
            if root is not None:
                vec = [x / root for x in vec]
                hv = form(vec, vec)
                normalized = True
        pairs.append(Eigenpair(lam, tuple(vec), hv, normalized))
    return NodalMonodromy(k, n, t, form, tuple(pairs))


def reflection_conjugation_check(kappa: Matrix, r: ComplexReflection) -> bool:
    """kappa^-1 s_delta kappa == s_{kappa^-1 delta}."""
    if not is_unitary(kappa, r.form):
        raise NotUnitary("kappa does not preserve the form")
    kinv = kappa.inverse()
    lhs = kinv @ reflection_matrix(r) @ kappa
    moved = ComplexReflection(r.lam, tuple(kinv.apply(r.delta)), r.epsilon, r.form)
    return lhs == reflection_matrix(moved)
