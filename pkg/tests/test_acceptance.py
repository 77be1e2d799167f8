"""The thirteen acceptance criteria, one test each, all exact."""

import random
import time

import pytest

from hypersurface_monodromy.algebra_core import Cyclotomic, HermitianForm, Matrix
from hypersurface_monodromy.classifier import Verdict, classify, discriminant_degree, product_obstruction
from hypersurface_monodromy.graded_rings import (
    fermat_graded_dim,
    fermat_jacobian,
    macaulay_check,
    mono_mul,
    socle_degree,
    torelli_witness,
)
from hypersurface_monodromy.hodge_theory import (
    CoverSpec,
    betti_closed_form,
    betti_recursive,
    double_suspension_hodge,
    eigenspace_signature,
    hodge_cyclic_eigenspace,
    hodge_hypersurface,
    lattice_count,
    primitive_betti,
    rank_real,
    signature_primitive,
    suspension_periodicity_check,
)
from hypersurface_monodromy.reflection_groups import (
    FiniteWitness,
    GeneratedGroup,
    GrowthEvidence,
    dichotomy_probe,
    group_closure,
)
from hypersurface_monodromy.vanishing_cycles import (
    ComplexReflection,
    a_lattice,
    is_unitary,
    nodal_monodromy,
    reflection_conjugation_check,
    reflection_matrix,
    suspend_lattice,
)

from _cases import random_reflection, random_setup, random_unitary


@pytest.mark.criterion(1, "golden Betti numbers via recursion, closed form and Hodge sum")
def test_criterion_01_betti():
    for (d, n), b in {(3, 3): 10, (4, 2): 21, (5, 1): 12, (3, 1): 2, (3, 2): 6, (4, 1): 6}.items():
        assert betti_recursive(d, n) == b
        assert betti_closed_form(d, n) == b
        assert hodge_hypersurface(d, n).total == b
        assert primitive_betti(d, n) == b


@pytest.mark.criterion(2, "quartic surface h = (1,19,1), signature (2,19), real rank 2")
def test_criterion_02_quartic_surface():
    assert hodge_hypersurface(4, 2).values == (1, 19, 1)
    assert signature_primitive(4, 2) == (2, 19)
    assert rank_real(4, 2) == 2


@pytest.mark.criterion(3, "cubic threefold h^{3,0} = 0, h^{2,1} = 5")
def test_criterion_03_cubic_threefold():
    h = hodge_hypersurface(3, 3)
    assert h.h(3, 0) == 0
    assert h.h(2, 1) == 5


@pytest.mark.criterion(4, "triple cover of the cubic surface: eigenspace Hodge numbers and U(1,4)")
def test_criterion_04_triple_cover():
    one = hodge_cyclic_eigenspace(CoverSpec(3, 2, 3, 1))
    two = hodge_cyclic_eigenspace(CoverSpec(3, 2, 3, 2))
    assert (one.h(2, 1), one.h(1, 2)) == (4, 1)
    assert (two.h(2, 1), two.h(1, 2)) == (1, 4)
    assert eigenspace_signature(CoverSpec(3, 2, 3, 1)) == (1, 4)
    cubic_threefold = hodge_hypersurface(3, 3)
    for p in range(4):
        assert one.h(p) + two.h(p) == cubic_threefold.h(p)


@pytest.mark.criterion(5, "Torelli witness for (3,2,3,1) multiplies into the socle x0x1x2x3")
def test_criterion_05_torelli_witness():
    spec = CoverSpec(3, 2, 3, 1)
    ideal = fermat_jacobian(3, 4)
    a = spec.numerator_degree(1)
    witness = torelli_witness(ideal, a, 3)
    assert witness is not None
    A, Q = witness
    socle = (1, 1, 1, 1)
    assert mono_mul(A, Q) == socle
    assert ideal.piece(socle_degree(3, 4)).basis == [socle]


@pytest.mark.criterion(6, "Macaulay duality for Fermat rings, d <= 5, nvars <= 5, under a minute")
def test_criterion_06_macaulay():
    start = time.perf_counter()
    for d in range(2, 6):
        for nvars in range(2, 6):
            t = socle_degree(d, nvars)
            for a in range(t + 1):
                assert fermat_graded_dim(d, nvars, a) == fermat_graded_dim(d, nvars, t - a)
                assert macaulay_check(d, nvars, a)
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(7, "lattice-count lemma: symmetry, strict increase below dn/2, L(2,4,4) = 19")
def test_criterion_07_lattice_count():
    for dmax in range(1, 5):
        for n in range(2, 6):
            top = dmax * n
            for k in range(top + 1):
                assert lattice_count(dmax, n, k) == lattice_count(dmax, n, top - k)
                if 2 * (k + 1) <= top:
                    assert lattice_count(dmax, n, k) < lattice_count(dmax, n, k + 1)
    assert lattice_count(2, 4, 4) == 19 == hodge_hypersurface(4, 2).h(1, 1)


@pytest.mark.criterion(8, "suspension negation, determinant parity, nodal eigenvalues")
def test_criterion_08_vanishing_lattices():
    for k in range(2, 9):
        lat = a_lattice(k)
        assert suspend_lattice(suspend_lattice(lat)).gram == -lat.gram
        assert suspend_lattice(lat).gram.det() == (1 if (k - 1) % 2 == 0 else 0)
    for k in range(2, 7):
        for n in range(0, 5):
            nm = nodal_monodromy(k, n)
            for i, pair in enumerate(nm.eigenpairs, start=1):
                lam = Cyclotomic.zeta(k, i) * (-1) ** (n + 1)
                assert pair.lam == lam
                assert nm.matrix.apply(pair.vector) == [lam * v for v in pair.vector]
                assert any(pair.vector)


@pytest.mark.criterion(9, "200 random reflections: unitarity and conjugation covariance")
def test_criterion_09_reflections():
    rng = random.Random(20261019)
    failures = 0
    for _ in range(200):
        r = random_reflection(rng)
        if not is_unitary(reflection_matrix(r), r.form):
            failures += 1
    for _ in range(200):
        setup = random_setup(rng)
        r = random_reflection(rng, setup)
        if not reflection_conjugation_check(random_unitary(rng, setup), r):
            failures += 1
    assert failures == 0


@pytest.mark.criterion(10, "closure: zeta_3 pair -> 9, zeta_6 -> 6, indefinite probe exceeds 20000")
def test_criterion_10_closure():
    start = time.perf_counter()
    assert dichotomy_probe(Cyclotomic.zeta(3), 0, (2, 0)) == FiniteWitness(9)
    form = HermitianForm(Matrix.identity(1))
    single = reflection_matrix(ComplexReflection(Cyclotomic.zeta(6), (1,), 1, form))
    assert group_closure(GeneratedGroup(form, [single])).order == 6
    out = dichotomy_probe(Cyclotomic.zeta(3), 2, (1, 1), cap=20000)
    assert isinstance(out, GrowthEvidence) and out.count > 20000
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(11, "classification reproduces the largeness theorem on 2 <= d <= 6, 0 <= n <= 4")
def test_criterion_11_classification():
    for d in range(2, 7):
        for n in range(0, 5):
            rec = classify(d, n)
            large = d > 2 and (d, n) not in {(3, 0), (3, 1)}
            assert (rec.verdict == Verdict.KERNEL_LARGE) == large
            if d <= 2:
                assert rec.verdict == Verdict.PHI_FINITE
            if rec.main_path:
                assert rec.g_type.real_rank >= 2 and rec.nonisomorphic
    assert classify(3, 1).kernel_order == 27
    assert classify(3, 0).phi_order == 12


@pytest.mark.criterion(12, "product obstruction for (d,k) = (3,3): 6 < 32")
def test_criterion_12_product_obstruction():
    assert discriminant_degree(3, 2) == 32
    assert product_obstruction(3, 3) is True


@pytest.mark.criterion(13, "suspension periodicity for quartic and sextic plane curves")
def test_criterion_13_suspension():
    assert hodge_hypersurface(4, 1).values == (3, 3)
    assert double_suspension_hodge(4, 2).values == (0, 3, 3, 0)
    assert hodge_hypersurface(6, 1).values == (10, 10)
    assert double_suspension_hodge(6, 2).values == (0, 10, 10, 0)
    assert suspension_periodicity_check(4, 2)
    assert suspension_periodicity_check(6, 2)
