import unittest

import numpy as np

from ..core import groups, rings
from ..core.rings import FiniteCommRing, Ideal, RingHom, Subring
from ..exceptions import AxiomViolation, NotASubobjectError, NotNormalError, ValidationError, WellDefinednessError
from .utils import NON_ASSOCIATIVE_LOOP, ring_hom_tables


Z2_ADD = [[0, 1], [1, 0]]


class TestRingAxioms(unittest.TestCase):

    def test_named_rings_are_rings(self):
        for R in (rings.zmod(12), rings.f4(), rings.product_ring(rings.zmod(2), rings.zmod(4))[0]):
            with self.subTest(ring=str(R)):
                FiniteCommRing(R.add, R.mul)

    def test_additive_group(self):
        with self.assertRaises(AxiomViolation) as cm:
            FiniteCommRing(NON_ASSOCIATIVE_LOOP, np.zeros((5, 5), dtype=int))
        self.assertEqual(cm.exception.axiom, 'additive-group')

    def test_closure(self):
        with self.assertRaises(AxiomViolation) as cm:
            FiniteCommRing(Z2_ADD, [[0, 0], [0, 2]])
        self.assertEqual(cm.exception.axiom, 'closure')

    def test_commutativity(self):
        with self.assertRaises(AxiomViolation) as cm:
            FiniteCommRing(Z2_ADD, [[0, 0], [1, 0]])
        self.assertEqual(cm.exception.axiom, 'commutativity')

    def test_distributivity(self):
        with self.assertRaises(AxiomViolation) as cm:
            FiniteCommRing(Z2_ADD, [[0, 1], [1, 1]])
        self.assertEqual(cm.exception.axiom, 'distributivity')

    def test_zero_multiplication_needs_an_abelian_group(self):
        with self.assertRaises(AxiomViolation):
            rings.zero_multiplication_ring(groups.symmetric_group(3))

    def test_f4_is_a_field(self):
        F = rings.f4()
        for a in range(1, 4):
            self.assertIn(1, [F.times(a, b) for b in range(1, 4)])


class TestNilradical(unittest.TestCase):

    def test_orders(self):
        self.assertEqual(rings.nilradical(rings.zmod(8)).order, 4)
        self.assertEqual(rings.nilradical(rings.zmod(12)).order, 2)
        self.assertEqual(rings.nilradical(rings.zmod(9)).elements, (0, 3, 6))

    def test_reduced(self):
        self.assertTrue(rings.is_reduced(rings.zmod(6)))
        self.assertTrue(rings.is_reduced(rings.f4()))
        self.assertFalse(rings.is_reduced(rings.zmod(4)))

    def test_nilpotent_rings(self):
        self.assertTrue(rings.is_nilpotent_ring(rings.zero_multiplication_ring(groups.klein_four())))
        self.assertTrue(rings.is_nilpotent_ring(rings.zero_ring()))
        self.assertFalse(rings.is_nilpotent_ring(rings.zmod(4)))

    def test_quotient_by_the_nilradical_is_reduced(self):
        R = rings.zmod(12)
        Q, _ = rings.quotient_ring(R, rings.nilradical(R))
        self.assertEqual(Q.order, 6)
        self.assertTrue(rings.is_reduced(Q))


class TestIdeals(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(len(rings.ideals(rings.zmod(12))), 6)
        self.assertEqual(len(rings.ideals(rings.zmod(8))), 4)
        self.assertEqual(len(rings.ideals(rings.f4())), 2)
        self.assertEqual(len(rings.ideals(rings.zero_multiplication_ring(groups.klein_four()))), 5)

    def test_ideal_generated(self):
        self.assertEqual(rings.ideal_generated(rings.zmod(12), [8]).elements, (0, 4, 8))

    def test_diagonal_is_a_subring_but_not_an_ideal(self):
        P, _, _ = rings.product_ring(rings.zmod(2), rings.zmod(2))
        diagonal = Subring(P, [0, 3])
        self.assertFalse(rings.is_ideal(P, diagonal.elements))
        with self.assertRaises(ValidationError):
            Ideal(P, [0, 3])
        with self.assertRaises(NotNormalError):
            rings.quotient_ring(P, diagonal)


class TestRingHomomorphisms(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(WellDefinednessError):
            RingHom(rings.zmod(4), rings.zmod(2), [1, 0, 1, 0])
        with self.assertRaises(WellDefinednessError):
            RingHom(rings.zmod(3), rings.zmod(6), [0, 2, 4])
        RingHom(rings.zmod(3), rings.zmod(6), [0, 4, 2])

    def test_hom_counts(self):
        self.assertEqual(len(rings.enumerate_ring_homs(rings.zmod(6), rings.zmod(3))), 2)
        self.assertEqual(len(rings.enumerate_ring_homs(rings.zmod(2), rings.zmod(6))), 2)

    def test_hom_counts_against_brute_force(self):
        pairs = [
            (rings.zmod(4), rings.zmod(8)),
            (rings.f4(), rings.f4()),
            (rings.product_ring(rings.zmod(2), rings.zmod(2))[0], rings.zmod(2)),
        ]
        for A, B in pairs:
            with self.subTest(domain=str(A), codomain=str(B)):
                found = rings.enumerate_ring_homs(A, B)
                expected = ring_hom_tables(A.add, A.mul, B.add, B.mul)
                self.assertEqual(sorted(f.map.tolist() for f in found), sorted(expected))

    def test_kernel_and_image(self):
        f = RingHom(rings.zmod(12), rings.zmod(4), np.arange(12) % 4)
        self.assertEqual(rings.kernel(f).elements, (0, 4, 8))
        self.assertTrue(rings.is_epi(f))
        self.assertFalse(rings.is_mono(f))
        g = RingHom(rings.zmod(2), rings.zmod(6), [0, 3])
        self.assertEqual(rings.image(g).elements, (0, 3))

    def test_lift(self):
        Z6 = rings.zmod(6)
        inclusion = RingHom(rings.zmod(2), Z6, [0, 3])
        f = RingHom(Z6, Z6, [0, 3, 0, 3, 0, 3])
        lifted = rings.lift(inclusion, f)
        self.assertEqual(rings.compose(inclusion, lifted), f)
        with self.assertRaises(NotASubobjectError):
            rings.lift(inclusion, rings.identity(Z6))

    def test_induced_from_quotient(self):
        Z12 = rings.zmod(12)
        to_z4 = RingHom(Z12, rings.zmod(4), np.arange(12) % 4)
        to_z2 = RingHom(Z12, rings.zmod(2), np.arange(12) % 2)
        m = rings.induced_from_quotient(to_z4, to_z2)
        self.assertEqual(rings.compose(m, to_z4), to_z2)
        with self.assertRaises(WellDefinednessError):
            rings.induced_from_quotient(to_z2, to_z4)

    def test_pullback(self):
        Z4, Z2 = rings.zmod(4), rings.zmod(2)
        f = RingHom(Z4, Z2, [0, 1, 0, 1])
        square = rings.pullback(f, f)
        self.assertEqual(square.obj.order, 8)
        self.assertEqual(rings.compose(f, square.p1), rings.compose(f, square.p2))
        u = rings.pullback_map(square, rings.identity(Z4), rings.identity(Z4))
        self.assertEqual(rings.compose(square.p2, u), rings.identity(Z4))
