"""Hodge, Betti and rank invariants of smooth hypersurfaces and their cyclic covers.

Every Hodge number is computed on the Fermat representative, where the
Jacobian ideal is generated by the powers ``xi^(d-1)`` and graded pieces of
the Jacobian ring are counted by :func:`fermat_graded_dim`.

Indexing conventions: a residue with a pole of order ``q+1`` lands in
``H^{p,q}`` with ``p = w - q`` for weight ``w``.  For the ``k``-fold cover
``y^k + P(x) = 0`` of ``P^{n+1}`` the numerator ``y^(i-1) A(x)`` of a form in
the ``zeta^i`` eigenspace has ``deg A = (q+1)d - i(d/k) - (n+2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalInconsistency, OddDimension, RealEigenvalue
from .graded_rings import GradedIdeal, WeightedRing, bounded_compositions, fermat_graded_dim, jacobian_graded_dim


@dataclass(frozen=True)
class HodgeVector:
    """Hodge numbers h^{p,w-p} listed for p = w, w-1, ..., 0."""

    weight: int
    values: tuple[int, ...]
    primitive: bool = True

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.weight + 1:
            raise ValueError("need one value per p = weight..0")
        if any(v < 0 for v in self.values):
            raise ValueError("Hodge numbers are non-negative")

    def h(self, p: int, q: int | None = None) -> int:
        if q is not None and p + q != self.weight:
            raise ValueError(f"p + q must equal {self.weight}")
        if not 0 <= p <= self.weight:
            return 0
        return self.values[self.weight - p]

    def items(self):
        """(p, q, h^{p,q}) triples in storage order."""
        return [(self.weight - j, j, v) for j, v in enumerate(self.values)]

    @property
    def total(self) -> int:
        return sum(self.values)

    def split_by_p_parity(self) -> tuple[int, int]:
        """(sum over even p, sum over odd p)."""
        even = sum(v for p, _, v in self.items() if p % 2 == 0)
        return even, self.total - even

    def split_by_q_parity(self) -> tuple[int, int]:
        even = sum(v for _, q, v in self.items() if q % 2 == 0)
        return even, self.total - even

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __str__(self) -> str:
        return " ".join(f"h^{{{p},{q}}}={v}" for p, q, v in self.items())


@dataclass(frozen=True)
class CoverSpec:
    """The zeta_k^i eigenspace of the k-fold cover of P^{n+1} branched along a degree-d hypersurface."""

    d: int
    n: int
    k: int
    i: int

    def __post_init__(self):
        if self.d < 2 or self.n < 0:
            raise ValueError("need d >= 2 and n >= 0")
        if self.k < 2 or self.d % self.k:
            raise ValueError(f"cover degree k={self.k} must be >= 2 and divide d={self.d}")
        if not 1 <= self.i <= self.k - 1:
            raise ValueError(f"eigenvalue index must lie in 1..{self.k - 1}")

    @property
    def real(self) -> bool:
        return 2 * self.i == self.k

    def numerator_degree(self, q: int) -> int:
        return (q + 1) * self.d - self.i * (self.d // self.k) - (self.n + 2)


# -- Betti numbers and Euler characteristics --------------------------------

@lru_cache(maxsize=None)
def euler_characteristic(d: int, n: int) -> int:
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    if n == 0:
        return d
    return d * (n + 1) + (1 - d) * euler_characteristic(d, n - 1)


@lru_cache(maxsize=None)
def betti_recursive(d: int, n: int) -> int:
    if n == 0:
        return d - 1
    return (d - 1) * (betti_recursive(d, n - 1) + (-1) ** n)


def betti_closed_form(d: int, n: int) -> int:
    sign = (-1) ** n
    num = (d - 1) ** n - sign
    if num % d:
        raise InternalInconsistency(f"closed form not integral for (d,n)=({d},{n})")
    return (d - 1) ** n * (d - 2) + num // d + sign


def betti_from_euler(d: int, n: int) -> int:
    # chi = (n + 1) + (-1)^n B, the remaining even-degree classes being powers of h
    return (-1) ** n * (euler_characteristic(d, n) - (n + 1))


def primitive_betti(d: int, n: int) -> int:
    """Primitive middle Betti number, cross-checked four ways."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    values = {
        "recursion": betti_recursive(d, n),
        "closed form": betti_closed_form(d, n),
        "hodge sum": hodge_hypersurface(d, n).total,
        "euler characteristic": betti_from_euler(d, n),
    }
    if len(set(values.values())) != 1:
        raise InternalInconsistency(f"primitive Betti number disagreement for ({d},{n}): {values}")
    return values["recursion"]


# -- Hodge numbers -----------------------------------------------------------

@lru_cache(maxsize=None)
def hodge_hypersurface(d: int, n: int) -> HodgeVector:
    """Primitive Hodge numbers of a smooth degree-d hypersurface of dimension n."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    if n == 0:
        # reduced cohomology of d points
        return HodgeVector(0, (d - 1,))
    values = [fermat_graded_dim(d, n + 2, (q + 1) * d - (n + 2)) for q in range(n + 1)]
    return HodgeVector(n, tuple(values))


@lru_cache(maxsize=None)
def hodge_cyclic_eigenspace(spec: CoverSpec) -> HodgeVector:
    """Hodge numbers h^{p,q}(i), p + q = n + 1, of the zeta^i eigenspace."""
    w = spec.n + 1
    values = [fermat_graded_dim(spec.d, spec.n + 2, spec.numerator_degree(q)) for q in range(w + 1)]
    return HodgeVector(w, tuple(values))


def substitution_isomorphism_check(d: int, n: int, k: int, i: int) -> bool:
    """Eigenspace (k, i) agrees with eigenspace (d, i d/k) of the d-fold cover."""
    lhs = hodge_cyclic_eigenspace(CoverSpec(d, n, k, i))
    rhs = hodge_cyclic_eigenspace(CoverSpec(d, n, d, i * (d // k)))
    return lhs.values == rhs.values


def eigenspace_dimension(d: int, n: int) -> int:
    """Common dimension of the eigenspaces of the d-fold cover's H^{n+1}."""
    b = primitive_betti(d, n + 1)
    if b % (d - 1):
        raise InternalInconsistency(f"B_{{{d},{n + 1}}}={b} is not divisible by {d - 1}")
    dim = b // (d - 1)
    # Euler characteristic of the complement of the branch locus
    from_complement = (-1) ** (n + 1) * ((n + 2) - euler_characteristic(d, n))
    if from_complement != dim:
        raise InternalInconsistency(f"complement count {from_complement} != {dim}")
    for i in range(1, d):
        total = hodge_cyclic_eigenspace(CoverSpec(d, n, d, i)).total
        if total != dim:
            raise InternalInconsistency(f"eigenspace {i} has dimension {total}, expected {dim}")
    return dim


# -- signatures and ranks ----------------------------------------------------

def signature_primitive(d: int, n: int) -> tuple[int, int]:
    """Signature of the cup product on primitive H^n, n even."""
    if n % 2:
        raise OddDimension(f"n={n} is odd; the form is alternating")
    return hodge_hypersurface(d, n).split_by_p_parity()


def eigenspace_signature(spec: CoverSpec) -> tuple[int, int]:
    """Signature of the hermitian form on a non-real eigenspace; (3,2,3,1) gives (1,4)."""
    if spec.real:
        raise RealEigenvalue(f"zeta_{spec.k}^{spec.i} = -1 is real")
    return hodge_cyclic_eigenspace(spec).split_by_q_parity()


def real_eigenspace_signature(spec: CoverSpec) -> tuple[int, int]:
    """Signature of the cup product on the -1 eigenspace when its weight is even."""
    if not spec.real:
        raise ValueError("eigenvalue is not real")
    if (spec.n + 1) % 2:
        raise OddDimension("the -1 eigenspace carries an alternating form")
    return hodge_cyclic_eigenspace(spec).split_by_p_parity()


def rank_complex(d: int, n: int) -> int:
    return primitive_betti(d, n) // 2


def rank_real(d: int, n: int) -> int:
    if n % 2:
        return primitive_betti(d, n) // 2
    return min(signature_primitive(d, n))


def first_hodge_cubic(n: int) -> tuple[int, int, int]:
    """(p, q, h^{p,q}) for the largest p with h^{p,q} != 0 on a cubic n-fold."""
    if n < 1:
        raise ValueError("need n >= 1")
    k, r = divmod(n, 3)
    if r == 0:
        claimed = (2 * k, k, n + 2)
    elif r == 1:
        claimed = (2 * k + 1, k, 1)
    else:
        claimed = (2 * k + 1, k + 1, (n + 1) * (n + 2) // 2)
    hv = hodge_hypersurface(3, n)
    computed = next((p, q, v) for p, q, v in hv.items() if v)
    if computed != claimed:
        raise InternalInconsistency(f"cubic {n}-fold: formula {claimed} vs computed {computed}")
    return claimed


def hodge_monotonicity_check(d: int, n: int, p: int) -> bool:
    """Both strict inequalities of the Hodge growth lemma at (d, n, p)."""
    q = n - p
    if not 0 <= p <= n:
        raise ValueError("need 0 <= p <= n")
    grows_in_d = hodge_hypersurface(d + 1, n).h(p) > hodge_hypersurface(d, n).h(p)
    if p < q:
        return grows_in_d
    here = hodge_hypersurface(d, n)
    return grows_in_d and here.h(p) > here.h(p + 1)


def lattice_count(dmax: int, nvars: int, k: int) -> int:
    """#{x in Z^nvars : 0 <= xi <= dmax, sum xi = k}, by convolution over the last coordinate."""
    return bounded_compositions(dmax, nvars, k)


def double_suspension_hodge(two_d: int, n: int) -> HodgeVector:
    """Primitive Hodge numbers of P(x) + y1^2 + y2^2 in weighted P^{n+2}.

    P has degree two_d in n+1 variables of weight one; the y's have weight
    two_d/2 and lie in the Jacobian ideal, so numerators are free of them.
    """
    half = two_d // 2
    weights = (1,) * (n + 1) + (half, half)
    ring = WeightedRing(weights)
    nv = len(weights)
    gens = []
    for i in range(n + 1):
        gens.append({tuple(two_d - 1 if j == i else 0 for j in range(nv)): two_d})
    gens.append({tuple(1 if j == n + 1 else 0 for j in range(nv)): 2})
    gens.append({tuple(1 if j == n + 2 else 0 for j in range(nv)): 2})
    ideal = GradedIdeal(ring, gens)
    w = n + 1
    omega = sum(weights)
    values = [jacobian_graded_dim(ideal, (q + 1) * two_d - omega) for q in range(w + 1)]
    return HodgeVector(w, tuple(values))


def suspension_periodicity_check(two_d: int, n: int) -> bool:
    """h^{p,q} of X (degree two_d, dim n-1) equals h^{p+1,q+1} of its double suspension."""
    if two_d < 2 or two_d % 2:
        raise ValueError("degree must be even and >= 2")
    if n < 1:
        raise ValueError("need n >= 1")
    base = hodge_hypersurface(two_d, n - 1)
    susp = double_suspension_hodge(two_d, n)
    if susp.h(n + 1) or susp.h(0):
        return False
    return all(susp.h(p + 1) == base.h(p) for p in range(n))
