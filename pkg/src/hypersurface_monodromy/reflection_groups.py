"""Closure enumeration for groups generated by unitary matrices over a cyclotomic field.

Finiteness is decided exactly when the closure stabilizes below the cap.
Anything larger is reported as growth evidence; density is never claimed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .algebra_core import Cyclotomic, Echelon, HermitianForm, Matrix, hermitian_signature, lcm
from .errors import BadSignature, NotUnitaryGenerator
from .vanishing_cycles import ComplexReflection, is_unitary, reflection_matrix

DEFAULT_CAP = 20000


@dataclass
class GeneratedGroup:
    form: HermitianForm
    generators: list[Matrix]
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        for j, g in enumerate(self.generators):
            if g.shape != (self.form.dim, self.form.dim):
                raise ValueError(f"generator {j} has shape {g.shape}")
            if not is_unitary(g, self.form):
                raise NotUnitaryGenerator(f"generator {j} does not preserve the form")
        order = self.form.order
        for g in self.generators:
            order = lcm(order, g.order)
        self.generators = [g.embed(order) for g in self.generators]
        self.order = order


@dataclass
class ClosureResult:
    finite: bool
    size: int
    elements: list[Matrix] = field(repr=False)

    @property
    def order(self) -> int | None:
        return self.size if self.finite else None

    @property
    def element_hashes(self) -> frozenset:
        return frozenset(e.key() for e in self.elements)


def group_closure(g: GeneratedGroup) -> ClosureResult:
    """Breadth-first closure under left multiplication by generators and their inverses."""
    steps = list(g.generators)
    for s in g.generators:
        inv = s.inverse()
        if inv.key() not in {t.key() for t in steps}:
            steps.append(inv)
    ident = Matrix.identity(g.form.dim, g.order)
    seen = {ident.key(): ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in steps:
            y = s @ x
            key = y.key()
            if key not in seen:
                seen[key] = y
                if len(seen) > g.cap:
                    return ClosureResult(False, len(seen), list(seen.values()))
                queue.append(y)
    return ClosureResult(True, len(seen), list(seen.values()))


def is_closed(result: ClosureResult, generators: Sequence[Matrix]) -> bool:
    keys = result.element_hashes
    return all((s @ x).key() in keys for s in generators for x in result.elements)


@dataclass(frozen=True)
class FiniteWitness:
    order: int


@dataclass(frozen=True)
class GrowthEvidence:
    count: int


def rank_two_reflections(lam: Cyclotomic, h12, signature: tuple[int, int]):
    """Two reflections with eigenvalue lam on the span of delta_1, delta_2.

    The form is written in the basis (delta_1, delta_2) itself:
    h(delta_a, delta_a) = epsilon and h(delta_1, delta_2) = h12.
    """
    h12 = Cyclotomic.coerce(h12)
    p, q = signature
    if p + q != 2:
        raise BadSignature(f"rank-two probe needs p + q = 2, got {signature}")
    eps = -1 if signature == (0, 2) else 1
    # h(x, y) = y^H G x, so G[b][a] = h(e_a, e_b)
    gram = Matrix.from_rows([[eps, h12.conj()], [h12, eps]])
    form = HermitianForm(gram)
    if hermitian_signature(form) != (p, q):
        raise BadSignature(f"h12 = {h12} gives signature {hermitian_signature(form)}, not {signature}")
    refls = [ComplexReflection(lam, (1, 0), eps, form), ComplexReflection(lam, (0, 1), eps, form)]
    return form, refls


def dichotomy_probe(lam, h12, signature: tuple[int, int], cap: int = DEFAULT_CAP):
    """Closure attempt for the group generated by two reflections of a rank-two form."""
    lam = Cyclotomic.coerce(lam)
    if lam == 1 or lam == -1:
        raise ValueError("the dichotomy needs lambda != +-1")
    form, refls = rank_two_reflections(lam, h12, signature)
    group = GeneratedGroup(form, [reflection_matrix(r) for r in refls], cap)
    res = group_closure(group)
    return FiniteWitness(res.size) if res.finite else GrowthEvidence(res.size)


@dataclass(frozen=True)
class Irreducible:
    pass


@dataclass(frozen=True)
class InvariantSubspace:
    basis: tuple


def _span_closure(vectors, generators: Sequence[Matrix], dim: int) -> list[list[Cyclotomic]]:
    ech = Echelon()
    basis = []
    todo = list(vectors)
    while todo:
        v = todo.pop()
        if ech.add({j: x for j, x in enumerate(v) if x}):
            basis.append(v)
            todo.extend(s.apply(v) for s in generators)
        if len(basis) == dim:
            break
    return basis


def invariant_subspace_probe(g: GeneratedGroup):
    """Look for a proper subspace preserved by every generator.

    Candidate subspaces are the orbit spans of the roots (column space of
    s - 1 for each generator s) and the common orthogonal complement of all
    roots.  For reflection generators of a nondegenerate form this search is
    exhaustive: an invariant subspace either contains a root or is orthogonal
    to all of them.
    """
    dim = g.form.dim
    ident = Matrix.identity(dim, g.order)
    roots = []
    for s in g.generators:
        diff = s - ident
        for j in range(dim):
            col = diff.col(j)
            if any(col):
                roots.append(col)
                break
    for r in roots:
        span = _span_closure([r], g.generators, dim)
        if len(span) < dim:
            return InvariantSubspace(tuple(tuple(v) for v in span))
    # vectors x with h(x, r) = 0 for every root r: rows r^H G
    if roots:
        perp_rows = Matrix.from_rows([(Matrix.column(r).H @ g.form.gram).row(0) for r in roots])
        perp = perp_rows.kernel()
        if perp:
            span = _span_closure(perp, g.generators, dim)
            if len(span) < dim:
                return InvariantSubspace(tuple(tuple(v) for v in span))
    return Irreducible()
