"""Decision procedure for largeness of the kernel of the natural monodromy representation.

For each (d, n) the chain is: type and real rank of the natural group G,
choice of a cyclic cover and eigenspace whose period map has nonzero
derivative (a monomial witness in the Jacobian ring), the type of the
second group G', and non-isomorphism of the two complexified Lie algebras.
Zariski density of the second representation is not computable; the record
cites the nonzero derivative plus irreducibility of the discriminant.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Optional

from .errors import ScopeError
from .graded_rings import Monomial, fermat_jacobian, format_monomial, torelli_witness
from .hodge_theory import (
    CoverSpec,
    HodgeVector,
    eigenspace_signature,
    hodge_cyclic_eigenspace,
    hodge_hypersurface,
    primitive_betti,
    real_eigenspace_signature,
    signature_primitive,
)


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int
    real_form: str
    real_rank: int

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def noncompact(self) -> bool:
        return self.real_rank > 0

    def __str__(self) -> str:
        return f"{self.label} {self.real_form}"


def _orthogonal(r: int, s: int) -> LieType:
    dim = r + s
    family = "B" if dim % 2 else "D"
    return LieType(family, dim // 2, f"so({r},{s})", min(r, s))


def _symplectic(dim: int) -> LieType:
    return LieType("C", dim // 2, f"sp({dim},R)", dim // 2)


def group_type_natural(d: int, n: int) -> LieType:
    """Group of the cup product on primitive H^n of a degree-d hypersurface."""
    b = primitive_betti(d, n)
    if n % 2:
        return _symplectic(b)
    return _orthogonal(*signature_primitive(d, n))


def group_type_cover(d: int, n: int, k: int, i: int) -> LieType:
    """Group acting on the zeta_k^i eigenspace of the cover's H^{n+1}."""
    spec = CoverSpec(d, n, k, i)
    if not spec.real:
        p, q = eigenspace_signature(spec)
        return LieType("A", p + q - 1, f"su({p},{q})", min(p, q))
    dim = hodge_cyclic_eigenspace(spec).total
    if (n + 1) % 2:
        return _symplectic(dim)
    return _orthogonal(*real_eigenspace_signature(spec))


def _complex_class(t: LieType) -> tuple[str, int]:
    family, rank = t.family, t.rank
    if rank == 1 and family in ("A", "B", "C"):
        return ("A", 1)
    if (family, rank) == ("C", 2):
        return ("B", 2)
    if (family, rank) == ("D", 3):
        return ("A", 3)
    if (family, rank) == ("D", 2):
        return ("A1xA1", 2)
    return family, rank


def locally_isomorphic(t1: LieType, t2: LieType) -> bool:
    """Same complexified Lie algebra, allowing A1=B1=C1, B2=C2, A3=D3 and D2=A1xA1."""
    return _complex_class(t1) == _complex_class(t2)


def discriminant_degree(d: int, n: int) -> int:
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    return (n + 2) * (d - 1) ** (n + 1)


def product_obstruction(d: int, k: int) -> bool:
    """For surfaces: the largest element order 2k in the product's abelianization is below deg of the discriminant."""
    if k < 2 or d % k:
        raise ValueError(f"k={k} must be >= 2 and divide d={d}")
    if d % 2 == 0:
        raise ScopeError("the abelianization argument is only established for odd d")
    return 2 * k < discriminant_degree(d, 2)


class Verdict(str, Enum):
    KERNEL_LARGE = "KernelLarge"
    KERNEL_FINITE = "KernelFinite"
    PHI_FINITE = "PhiFinite"
    EXCEPTIONAL = "ExceptionalCase"


@dataclass
class EigenspaceChoice:
    k: int
    i: int
    hodge: HodgeVector
    gprime: LieType
    witness: Optional[tuple[Monomial, Monomial]]
    witness_degree: Optional[int]


@dataclass
class ClassificationRecord:
    d: int
    n: int
    betti: int
    hodge: HodgeVector
    g_type: LieType
    chosen_k: Optional[int] = None
    eigen_index: Optional[int] = None
    eigen_hodge: Optional[HodgeVector] = None
    gprime_type: Optional[LieType] = None
    torelli_witness: Optional[tuple[Monomial, Monomial]] = None
    torelli_witness_found: bool = False
    rank_ok: bool = False
    nonisomorphic: bool = False
    verdict: Verdict = Verdict.EXCEPTIONAL
    exceptional_text: Optional[str] = None
    kernel_order: Optional[int] = None
    phi_order: Optional[int] = None
    main_path: bool = False
    reasons: list[str] = field(default_factory=list)
    remarks: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["hodge"] = list(self.hodge.values)
        out["eigen_hodge"] = list(self.eigen_hodge.values) if self.eigen_hodge else None
        out["g_type"] = _lie_dict(self.g_type)
        out["gprime_type"] = _lie_dict(self.gprime_type)
        out["verdict"] = self.verdict.value
        if self.torelli_witness:
            a, q = self.torelli_witness
            out["torelli_witness"] = {"A": format_monomial(a), "Q": format_monomial(q)}
        return out


def _lie_dict(t: Optional[LieType]) -> Optional[dict]:
    if t is None:
        return None
    return {"family": t.family, "rank": t.rank, "real_form": t.real_form, "real_rank": t.real_rank,
            "label": t.label}


def find_derivative_witness(d: int, n: int, k: int, i: int) -> tuple[Optional[tuple], Optional[int]]:
    """A monomial pair showing multiplication R^d x R^a -> R^(a+d) is nonzero on the eigenspace."""
    spec = CoverSpec(d, n, k, i)
    ideal = fermat_jacobian(d, n + 2)
    for q in range(n + 2):
        a = spec.numerator_degree(q)
        if a < 0:
            continue
        w = torelli_witness(ideal, a, d)
        if w is not None:
            return w, a
    return None, None


def choose_cover(d: int, n: int) -> int:
    if n == 0:
        return d
    if d % 2 == 0 and (d, n) != (4, 1):
        return 2
    return d


def _select_eigenspace(d: int, n: int, k: int) -> Optional[EigenspaceChoice]:
    first_i = 2 if n == 0 else 1
    fallback = None
    for i in range(first_i, k):
        hv = hodge_cyclic_eigenspace(CoverSpec(d, n, k, i))
        if hv.total <= 1:
            continue
        witness, a = find_derivative_witness(d, n, k, i)
        if witness is None:
            continue
        gprime = group_type_cover(d, n, k, i)
        choice = EigenspaceChoice(k, i, hv, gprime, witness, a)
        if gprime.noncompact:
            return choice
        fallback = fallback or choice
    return fallback


def classify(d: int, n: int) -> ClassificationRecord:
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    betti = primitive_betti(d, n)
    rec = ClassificationRecord(d, n, betti, hodge_hypersurface(d, n), group_type_natural(d, n))

    if d <= 2:
        rec.verdict = Verdict.PHI_FINITE
        rec.reasons.append("quadrics: Phi is finite cyclic")
        return rec
    if (d, n) == (3, 0):
        rec.verdict = Verdict.EXCEPTIONAL
        rec.phi_order = 12
        rec.exceptional_text = "braid group of three points on the sphere; order 12"
        rec.reasons.append("Phi_{3,0} has order 12 (symmetries of a regular hexagon)")
        return rec
    if (d, n) == (3, 1):
        rec.verdict = Verdict.KERNEL_FINITE
        rec.kernel_order = 27
        rec.reasons.append("1 -> K -> Phi_{3,1} -> SL(2,Z) -> 1 with K the Heisenberg group over Z/3, order 27")
        return rec

    k = choose_cover(d, n)
    rec.chosen_k = k
    rec.reasons.append(f"cyclic cover of degree k={k}")
    choice = _select_eigenspace(d, n, k)
    if choice is not None:
        rec.eigen_index = choice.i
        rec.eigen_hodge = choice.hodge
        rec.gprime_type = choice.gprime
        rec.torelli_witness = choice.witness
        rec.torelli_witness_found = True
        a, q = choice.witness
        rec.reasons.append(
            f"period map derivative nonzero on eigenspace i={choice.i}: "
            f"A={format_monomial(a)}, Q={format_monomial(q)}, AQ not in J")
        rec.reasons.append("Zariski density of rho': nonzero derivative + irreducible discriminant (assumed theorem)")
    rec.rank_ok = rec.g_type.real_rank >= 2
    if rec.gprime_type is not None:
        rec.nonisomorphic = not locally_isomorphic(rec.g_type, rec.gprime_type)
    if k == 2:
        rec.remarks.append("for double covers the image of rho' is also a lattice (not verified here)")

    gprime_ok = rec.gprime_type is not None and rec.gprime_type.noncompact
    if rec.torelli_witness_found and gprime_ok and rec.rank_ok and rec.nonisomorphic:
        rec.verdict = Verdict.KERNEL_LARGE
        rec.main_path = True
        rec.reasons.append(f"G = {rec.g_type} has real rank {rec.g_type.real_rank} >= 2")
        rec.reasons.append(f"G and G' = {rec.gprime_type} are not locally isomorphic")
        return rec

    if rec.g_type.real_rank == 0 and rec.torelli_witness_found and gprime_ok:
        # compact G: the monodromy image is finite, so K has finite index in Phi
        rec.verdict = Verdict.KERNEL_LARGE
        rec.exceptional_text = "finite image but large kernel"
        rec.reasons.append(
            f"G = {rec.g_type} is compact, so rho(Phi) is finite and K has finite index; "
            f"rho' is Zariski-dense in noncompact G' = {rec.gprime_type}, so Phi and K are large")
        if (d, n) == (3, 2):
            rec.reasons.append("Phi_{3,2} is large, hence infinite")
        return rec

    rec.verdict = Verdict.EXCEPTIONAL
    rec.exceptional_text = "witness chain incomplete"
    rec.reasons.append("could not complete the witness chain")
    return rec


TABLE_COLUMNS = ("d", "n", "B", "r", "s", "rank_R", "rank_C", "g_type", "k", "i", "gprime_type", "verdict")


def table_row(rec: ClassificationRecord) -> dict:
    if rec.n % 2 == 0:
        r, s = signature_primitive(rec.d, rec.n)
    else:
        r = s = None
    return {
        "d": rec.d,
        "n": rec.n,
        "B": rec.betti,
        "r": r,
        "s": s,
        "rank_R": rec.g_type.real_rank,
        "rank_C": rec.betti // 2,
        "g_type": str(rec.g_type),
        "k": rec.chosen_k,
        "i": rec.eigen_index,
        "gprime_type": str(rec.gprime_type) if rec.gprime_type else None,
        "verdict": rec.verdict.value,
    }


def sweep(d_max: int, n_max: int) -> list[ClassificationRecord]:
    return [classify(d, n) for d in range(2, d_max + 1) for n in range(0, n_max + 1)]
