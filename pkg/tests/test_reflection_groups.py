import pytest

from hypersurface_monodromy.algebra_core import Cyclotomic, HermitianForm, Matrix
from hypersurface_monodromy.errors import BadSignature, NotUnitaryGenerator
from hypersurface_monodromy.reflection_groups import (
    FiniteWitness,
    GeneratedGroup,
    GrowthEvidence,
    InvariantSubspace,
    Irreducible,
    dichotomy_probe,
    group_closure,
    invariant_subspace_probe,
    is_closed,
    rank_two_reflections,
)
from hypersurface_monodromy.vanishing_cycles import ComplexReflection, reflection_matrix

from _oracles import group_order_by_words, to_numpy


def euclidean(n):
    return HermitianForm(Matrix.identity(n))


def refl(lam, delta, form, eps=1):
    return reflection_matrix(ComplexReflection(lam, delta, eps, form))


class TestClosure:
    def test_orthogonal_zeta3_pair(self):
        form = euclidean(2)
        z = Cyclotomic.zeta(3)
        g = GeneratedGroup(form, [refl(z, (1, 0), form), refl(z, (0, 1), form)])
        res = group_closure(g)
        assert res.finite and res.order == 9
        assert is_closed(res, g.generators)

    def test_single_zeta6(self):
        form = euclidean(1)
        res = group_closure(GeneratedGroup(form, [refl(Cyclotomic.zeta(6), (1,), form)]))
        assert res.order == 6

    def test_symmetric_group_s3(self):
        # reflections in e1 - e2 and e2 - e3 of the standard form on C^3
        form = HermitianForm(Matrix.from_rows([[2, 0, 0], [0, 2, 0], [0, 0, 2]]))
        half = Cyclotomic.rational(1)
        g = GeneratedGroup(form, [
            refl(-1, (half / 2, -half / 2, 0), form),
            refl(-1, (0, half / 2, -half / 2), form),
        ])
        assert group_closure(g).order == 6

    @pytest.mark.parametrize("h12", [0, Cyclotomic.rational(1) / 2, Cyclotomic.zeta(3) / 2, Cyclotomic.zeta(6) / 2])
    def test_against_numeric_closure(self, h12):
        form, refls = rank_two_reflections(Cyclotomic.zeta(3), h12, (2, 0))
        gens = [reflection_matrix(r) for r in refls]
        res = group_closure(GeneratedGroup(form, gens, cap=3000))
        numeric = group_order_by_words([to_numpy(g) for g in gens], cap=3000)
        assert res.finite == (numeric is not None)
        if res.finite:
            assert res.order == numeric

    def test_cap(self):
        form, refls = rank_two_reflections(Cyclotomic.zeta(3), 2, (1, 1))
        res = group_closure(GeneratedGroup(form, [reflection_matrix(r) for r in refls], cap=500))
        assert not res.finite and res.size == 501 and res.order is None

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryGenerator):
            GeneratedGroup(euclidean(1), [Matrix.from_rows([[2]])])
        with pytest.raises(ValueError):
            GeneratedGroup(euclidean(1), [])


class TestDichotomy:
    def test_finite(self):
        assert dichotomy_probe(Cyclotomic.zeta(3), 0, (2, 0)) == FiniteWitness(9)

    def test_growth_on_indefinite_form(self):
        out = dichotomy_probe(Cyclotomic.zeta(3), 2, (1, 1), cap=2000)
        assert isinstance(out, GrowthEvidence) and out.count == 2001

    def test_signature_mismatch(self):
        with pytest.raises(BadSignature):
            rank_two_reflections(Cyclotomic.zeta(3), 0, (1, 1))
        with pytest.raises(BadSignature):
            rank_two_reflections(Cyclotomic.zeta(3), 0, (1, 2))

    def test_negative_definite(self):
        form, _ = rank_two_reflections(Cyclotomic.zeta(4), 0, (0, 2))
        assert form.gram == Matrix.from_rows([[-1, 0], [0, -1]])

    def test_real_lambda_rejected(self):
        with pytest.raises(ValueError):
            dichotomy_probe(Cyclotomic.rational(-1), 0, (2, 0))


class TestInvariantSubspaces:
    def test_orthogonal_roots_split(self):
        form = euclidean(2)
        z = Cyclotomic.zeta(3)
        g = GeneratedGroup(form, [refl(z, (1, 0), form), refl(z, (0, 1), form)])
        assert isinstance(invariant_subspace_probe(g), InvariantSubspace)

    def test_linked_roots_irreducible(self):
        form, refls = rank_two_reflections(Cyclotomic.zeta(3), 2, (1, 1))
        g = GeneratedGroup(form, [reflection_matrix(r) for r in refls])
        assert invariant_subspace_probe(g) == Irreducible()

    def test_single_reflection_in_plane(self):
        form = euclidean(2)
        g = GeneratedGroup(form, [refl(Cyclotomic.zeta(4), (1, 0), form)])
        sub = invariant_subspace_probe(g)
        assert isinstance(sub, InvariantSubspace) and len(sub.basis) == 1
