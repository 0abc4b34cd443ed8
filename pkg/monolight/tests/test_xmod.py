import unittest

import numpy as np

from ..contexts import XModTorsionContext
from ..core import groups, xmod
from ..core.groups import GroupHom
from ..core.xmod import CrossedModule, XModMorphism
from ..exceptions import AxiomViolation, NotASubobjectError, NotNormalError, WellDefinednessError


def sign_morphism():
    S3 = xmod.conjugation_xmod(groups.symmetric_group(3))
    C2 = xmod.central_xmod(groups.trivial_hom(groups.cyclic_group(2), groups.trivial_group()))
    return next(f for f in xmod.enumerate_xmod_morphisms(S3, C2) if f.f1.map.any())


class TestCrossedModuleAxioms(unittest.TestCase):

    def test_conjugation_is_a_crossed_module(self):
        X = xmod.conjugation_xmod(groups.symmetric_group(3))
        CrossedModule(X.A, X.B, X.boundary, X.action)

    def test_normal_subgroup_inclusion(self):
        S4 = groups.symmetric_group(4)
        A4 = groups.commutator_subgroup(S4.whole())
        X = xmod.conjugation_xmod(S4, A4)
        self.assertEqual(X.orders, (12, 24))
        CrossedModule(X.A, X.B, X.boundary, X.action)

    def test_conjugation_needs_a_normal_subgroup(self):
        S3 = groups.symmetric_group(3)
        H = groups.subgroup_generated(S3, [int(np.flatnonzero(S3.element_orders == 2)[0])])
        with self.assertRaises(NotNormalError):
            xmod.conjugation_xmod(S3, H)

    def test_peiffer(self):
        with self.assertRaises(AxiomViolation) as cm:
            xmod.trivial_action_xmod(groups.symmetric_group(3))
        self.assertEqual(cm.exception.axiom, 'peiffer')

    def test_abelian_over_the_trivial_group(self):
        X = xmod.trivial_action_xmod(groups.klein_four())
        self.assertEqual((X.A.order, X.B.order), (4, 1))
        self.assertTrue(XModTorsionContext().is_torsion(X))

    def test_equivariance(self):
        S3, C2 = groups.symmetric_group(3), groups.cyclic_group(2)
        transposition = int(np.flatnonzero(S3.element_orders == 2)[0])
        with self.assertRaises(AxiomViolation) as cm:
            xmod.central_xmod(GroupHom(C2, S3, [0, transposition]))
        self.assertEqual(cm.exception.axiom, 'equivariance')

    def test_not_an_action(self):
        C2 = groups.cyclic_group(2)
        with self.assertRaises(AxiomViolation) as cm:
            CrossedModule(C2, C2, groups.trivial_hom(C2, C2), [[1, 0], [0, 1]])
        self.assertEqual(cm.exception.axiom, 'not-an-action')

    def test_equality_ignores_the_name(self):
        S3 = groups.symmetric_group(3)
        self.assertEqual(xmod.conjugation_xmod(S3, name='a'), xmod.conjugation_xmod(S3, name='b'))

    def test_trivial(self):
        self.assertTrue(xmod.trivial_xmod().is_trivial)


class TestXModMorphisms(unittest.TestCase):

    def test_boundary_square_must_commute(self):
        X = xmod.conjugation_xmod(groups.symmetric_group(3))
        with self.assertRaises(WellDefinednessError):
            XModMorphism(X, X, groups.identity(X.A), groups.trivial_hom(X.B, X.B))

    def test_endomorphisms_of_conjugation(self):
        X = xmod.conjugation_xmod(groups.symmetric_group(3))
        self.assertEqual(len(xmod.enumerate_xmod_morphisms(X, X)), 10)

    def test_morphisms_to_an_abelian_group(self):
        C2 = groups.cyclic_group(2)
        X = xmod.central_xmod(groups.trivial_hom(C2, C2))
        Y = xmod.central_xmod(groups.trivial_hom(C2, groups.trivial_group()))
        self.assertEqual(len(xmod.enumerate_xmod_morphisms(X, Y)), 2)

    def test_compose_with_identity(self):
        f = sign_morphism()
        self.assertEqual(xmod.compose(xmod.identity(f.codomain), f), f)
        self.assertEqual(xmod.compose(f, xmod.identity(f.domain)), f)

    def test_kernel(self):
        K, embedding = xmod.xmod_kernel(sign_morphism())
        self.assertEqual(K.orders, (3, 6))
        self.assertTrue(xmod.is_mono(embedding))

    def test_image(self):
        f = sign_morphism()
        I, e, m = xmod.xmod_image(f)
        self.assertEqual(I.orders, (2, 1))
        self.assertTrue(xmod.is_normal_epi(e))
        self.assertEqual(xmod.compose(m, e), f)


class TestSubAndQuotient(unittest.TestCase):

    def setUp(self):
        self.S3 = groups.symmetric_group(3)
        self.X = xmod.conjugation_xmod(self.S3)
        self.A3 = groups.commutator_subgroup(self.S3.whole())

    def test_quotient_by_a_normal_sub_crossed_module(self):
        self.assertTrue(xmod.is_normal_sub_xmod(self.X, self.A3, self.A3))
        Q, proj = xmod.xmod_quotient(self.X, self.A3, self.A3)
        self.assertEqual(Q.orders, (2, 2))
        self.assertTrue(xmod.is_normal_epi(proj))

    def test_quotient_needs_commutators_inside(self):
        self.assertFalse(xmod.is_normal_sub_xmod(self.X, self.S3.trivial_subgroup(), self.A3))
        with self.assertRaises(NotNormalError):
            xmod.xmod_quotient(self.X, self.S3.trivial_subgroup(), self.A3)

    def test_sub_needs_the_boundary_inside(self):
        with self.assertRaises(NotASubobjectError):
            xmod.sub_xmod(self.X, self.A3, self.S3.trivial_subgroup())

    def test_reflection_is_the_image(self):
        C2 = groups.cyclic_group(2)
        R, unit = xmod.xmod_reflect(xmod.central_xmod(groups.trivial_hom(C2, C2)))
        self.assertEqual(R.orders, (1, 2))
        self.assertTrue(xmod.is_normal_epi(unit))
        R, unit = xmod.xmod_reflect(self.X)
        self.assertTrue(xmod.is_iso(unit))

    def test_torsion_part(self):
        C4 = groups.cyclic_group(4)
        T, embedding = xmod.torsion_part(xmod.central_xmod(GroupHom(C4, C4, [0, 2, 0, 2])))
        self.assertEqual(T.orders, (2, 1))
        self.assertTrue(xmod.is_mono(embedding))
        self.assertTrue(xmod.torsion_part(self.X)[0].is_trivial)


class TestFactorisation(unittest.TestCase):

    def test_zero_morphism_kills_the_boundary_kernel(self):
        C2 = groups.cyclic_group(2)
        X = xmod.central_xmod(groups.trivial_hom(C2, C2))
        Y = xmod.central_xmod(groups.trivial_hom(C2, groups.trivial_group()))
        f = xmod.zero_morphism(X, Y)
        result = xmod.xmod_ml_factorise(f)
        self.assertEqual(result.kernel.order, 2)
        self.assertEqual(result.middle.orders, (1, 2))
        self.assertEqual(xmod.compose(result.m_star, result.e), f)

    def test_identity_factors_trivially(self):
        C2 = groups.cyclic_group(2)
        X = xmod.central_xmod(groups.trivial_hom(C2, C2))
        result = xmod.xmod_ml_factorise(xmod.identity(X))
        self.assertEqual(result.kernel.order, 1)
        self.assertTrue(xmod.is_iso(result.e))

    def test_factors_compose_back(self):
        f = sign_morphism()
        result = xmod.xmod_ml_factorise(f)
        self.assertEqual(xmod.compose(result.m_star, result.e), f)
        self.assertTrue(xmod.is_normal_epi(result.e))
