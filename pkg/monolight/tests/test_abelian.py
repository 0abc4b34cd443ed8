import unittest

from ..core import abelian
from ..core.abelian import AbHom, PresentedAbGroup
from ..core.matrices import IntMatrix
from ..exceptions import NotASubobjectError, UnsupportedEnumeration, WellDefinednessError
from .utils import abelian_hom_count, cyclic_table, group_hom_tables


def hom(domain, codomain, rows):
    return AbHom(domain, codomain, IntMatrix.from_rows(rows, cols=domain.generators))


class TestPresentedAbGroup(unittest.TestCase):

    def test_canonical_names(self):
        self.assertEqual(str(abelian.cyclic(12)), 'Z/12')
        self.assertEqual(str(abelian.cyclic(0)), 'Z')
        self.assertEqual(str(abelian.zero_group()), '0')
        self.assertEqual(str(abelian.free_abelian(3)), 'Z^3')
        self.assertEqual(str(abelian.direct_sum(abelian.cyclic(0), abelian.cyclic(4))[0]), 'Z/4 + Z')

    def test_invariant_factors_divide(self):
        A = PresentedAbGroup(2, IntMatrix.diagonal([4, 6]))
        self.assertEqual(A.invariants, (2, 12))
        self.assertEqual(A.order, 24)

    def test_coprime_factors_merge(self):
        A = PresentedAbGroup(2, IntMatrix.diagonal([2, 3]))
        self.assertEqual(A.invariants, (6,))
        self.assertTrue(A.isomorphic(abelian.cyclic(6)))

    def test_unit_relator_kills_a_generator(self):
        A = PresentedAbGroup(2, IntMatrix.from_rows([[1], [0]]))
        self.assertEqual(A.free_rank, 1)
        self.assertEqual(A.invariants, ())

    def test_infinite_group_has_no_order(self):
        A = abelian.direct_sum(abelian.cyclic(0), abelian.cyclic(2))[0]
        self.assertFalse(A.is_finite)
        self.assertIsNone(A.order)

    def test_relations_need_matching_rows(self):
        with self.assertRaises(ValueError):
            PresentedAbGroup(2, IntMatrix.diagonal([3]))

    def test_equality_is_by_presentation(self):
        self.assertEqual(abelian.cyclic(6), abelian.cyclic(6))
        self.assertNotEqual(abelian.cyclic(6), PresentedAbGroup(2, IntMatrix.diagonal([2, 3])))


class TestAbHom(unittest.TestCase):

    def test_relations_must_be_respected(self):
        with self.assertRaises(WellDefinednessError):
            hom(abelian.cyclic(4), abelian.cyclic(6), [[1]])
        hom(abelian.cyclic(4), abelian.cyclic(6), [[3]])

    def test_shape_must_match(self):
        with self.assertRaises(WellDefinednessError):
            AbHom(abelian.cyclic(4), abelian.cyclic(4), IntMatrix.identity(2))

    def test_equality_modulo_relations(self):
        z4, z2 = abelian.cyclic(4), abelian.cyclic(2)
        self.assertEqual(hom(z4, z2, [[1]]), hom(z4, z2, [[3]]))
        self.assertNotEqual(hom(z4, z2, [[1]]), abelian.zero_hom(z4, z2))

    def test_compose(self):
        z, z4 = abelian.cyclic(0), abelian.cyclic(4)
        double = hom(z, z, [[2]])
        onto = hom(z, z4, [[1]])
        self.assertEqual(abelian.compose(onto, double), hom(z, z4, [[2]]))

    def test_compose_checks_endpoints(self):
        z2, z4 = abelian.cyclic(2), abelian.cyclic(4)
        with self.assertRaises(WellDefinednessError):
            abelian.compose(abelian.identity(z2), abelian.identity(z4))


class TestKernelsAndCokernels(unittest.TestCase):

    def test_kernel_of_reduction(self):
        f = hom(abelian.cyclic(12), abelian.cyclic(6), [[1]])
        self.assertEqual(str(abelian.kernel(f).sub), 'Z/2')

    def test_kernel_of_infinite_map(self):
        f = hom(abelian.cyclic(0), abelian.cyclic(4), [[1]])
        K = abelian.kernel(f)
        self.assertEqual(str(K.sub), 'Z')
        self.assertEqual(str(abelian.cokernel(K.inclusion)[0]), 'Z/4')

    def test_cokernel_of_doubling(self):
        f = hom(abelian.cyclic(2), abelian.cyclic(4), [[2]])
        self.assertEqual(str(abelian.cokernel(f)[0]), 'Z/2')

    def test_image(self):
        f = hom(abelian.cyclic(0), abelian.cyclic(4), [[2]])
        self.assertEqual(str(abelian.image(f).sub), 'Z/2')

    def test_mono_and_epi(self):
        z, z2, z4 = abelian.cyclic(0), abelian.cyclic(2), abelian.cyclic(4)
        double = hom(z, z, [[2]])
        self.assertTrue(abelian.is_mono(double))
        self.assertFalse(abelian.is_epi(double))
        inclusion = hom(z2, z4, [[2]])
        self.assertTrue(abelian.is_mono(inclusion))
        self.assertFalse(abelian.is_iso(inclusion))
        self.assertTrue(abelian.is_epi(hom(z4, z2, [[1]])))

    def test_quotient_by_torsion(self):
        A = abelian.direct_sum(abelian.cyclic(0), abelian.cyclic(4))[0]
        Q, _ = abelian.quotient(A, abelian.torsion_subgroup(A))
        self.assertEqual(str(Q), 'Z')


class TestLiftsAndPullbacks(unittest.TestCase):

    def setUp(self):
        self.z = abelian.cyclic(0)
        self.z2 = abelian.cyclic(2)
        self.z4 = abelian.cyclic(4)

    def test_lift_through_a_subgroup(self):
        inclusion = hom(self.z2, self.z4, [[2]])
        doubling = hom(self.z4, self.z4, [[2]])
        lifted = abelian.lift(inclusion, doubling)
        self.assertEqual(lifted, hom(self.z4, self.z2, [[1]]))
        self.assertEqual(abelian.compose(inclusion, lifted), doubling)

    def test_lift_outside_the_subgroup(self):
        inclusion = hom(self.z2, self.z4, [[2]])
        with self.assertRaises(NotASubobjectError):
            abelian.lift(inclusion, abelian.identity(self.z4))

    def test_induced_from_quotient(self):
        z12, z6, z3 = abelian.cyclic(12), abelian.cyclic(6), abelian.cyclic(3)
        proj = hom(z12, z6, [[1]])
        m = abelian.induced_from_quotient(proj, hom(z12, z3, [[1]]))
        self.assertEqual(abelian.compose(m, proj), hom(z12, z3, [[1]]))

    def test_induced_from_quotient_needs_the_kernel_killed(self):
        z12 = abelian.cyclic(12)
        proj = hom(z12, abelian.cyclic(6), [[1]])
        with self.assertRaises(WellDefinednessError):
            abelian.induced_from_quotient(proj, hom(z12, self.z4, [[1]]))

    def test_pullback_square_commutes(self):
        f = hom(self.z, self.z4, [[1]])
        g = hom(self.z2, self.z4, [[2]])
        square = abelian.pullback(f, g)
        self.assertEqual(str(square.obj), 'Z')
        self.assertEqual(abelian.compose(f, square.p1), abelian.compose(g, square.p2))

    def test_pullback_map(self):
        f = hom(self.z, self.z4, [[1]])
        g = hom(self.z2, self.z4, [[2]])
        square = abelian.pullback(f, g)
        a = hom(self.z, self.z, [[2]])
        b = hom(self.z, self.z2, [[1]])
        u = abelian.pullback_map(square, a, b)
        self.assertEqual(abelian.compose(square.p1, u), a)
        self.assertEqual(abelian.compose(square.p2, u), b)


class TestNormalise(unittest.TestCase):

    def test_translation_maps_are_inverse(self):
        A = PresentedAbGroup(2, IntMatrix.diagonal([4, 6]))
        canonical, to_canonical, from_canonical = abelian.normalise(A)
        self.assertEqual(canonical, abelian.from_invariants(0, [2, 12]))
        self.assertEqual(abelian.compose(from_canonical, to_canonical), abelian.identity(A))
        self.assertEqual(abelian.compose(to_canonical, from_canonical), abelian.identity(canonical))

    def test_free_part_goes_last(self):
        A = abelian.direct_sum(abelian.cyclic(0), abelian.cyclic(3))[0]
        canonical = abelian.normalise(A).group
        self.assertEqual(canonical, abelian.from_invariants(1, [3]))


class TestEnumeration(unittest.TestCase):

    def test_hom_counts(self):
        cases = [
            ([4], [6]),
            ([12], [6]),
            ([2, 6], [6]),
            ([2, 2], [4]),
            ([3], [4]),
        ]
        for a, b in cases:
            with self.subTest(domain=a, codomain=b):
                A = abelian.from_invariants(0, a)
                B = abelian.from_invariants(0, b)
                self.assertEqual(len(abelian.enumerate_homs(A, B)), abelian_hom_count(a, b))

    def test_hom_count_against_brute_force(self):
        found = abelian.enumerate_homs(abelian.cyclic(4), abelian.cyclic(6))
        self.assertEqual(len(found), len(group_hom_tables(cyclic_table(4), cyclic_table(6))))

    def test_homs_are_distinct(self):
        A = abelian.from_invariants(0, [2, 6])
        found = abelian.enumerate_homs(A, abelian.cyclic(6))
        for i, f in enumerate(found):
            for g in found[i + 1:]:
                self.assertNotEqual(f, g)

    def test_infinite_groups_do_not_enumerate(self):
        with self.assertRaises(UnsupportedEnumeration):
            abelian.enumerate_homs(abelian.cyclic(0), abelian.cyclic(2))
        with self.assertRaises(UnsupportedEnumeration):
            abelian.elements(abelian.cyclic(0))

    def test_elements(self):
        A = abelian.from_invariants(0, [2, 6])
        points = abelian.elements(A)
        self.assertEqual(len(points), 12)
        self.assertEqual(points[0], (0, 0))
        self.assertEqual(len(set(points)), 12)

    def test_subgroup_counts(self):
        self.assertEqual(len(abelian.subgroups(abelian.cyclic(12))), 6)
        self.assertEqual(len(abelian.subgroups(abelian.cyclic(8))), 4)
        self.assertEqual(len(abelian.subgroups(abelian.from_invariants(0, [2, 2]))), 5)
        self.assertEqual(len(abelian.subgroups(abelian.zero_group())), 1)

    def test_subgroup_generated(self):
        self.assertEqual(abelian.subgroup_generated(abelian.cyclic(12), [(4,)]).sub.order, 3)


class TestTorsion(unittest.TestCase):

    def test_torsion_subgroup(self):
        A = abelian.direct_sum(abelian.cyclic(0), abelian.cyclic(4))[0]
        self.assertEqual(str(abelian.torsion_subgroup(A).sub), 'Z/4')
        self.assertTrue(abelian.torsion_subgroup(abelian.cyclic(0)).sub.is_trivial)

    def test_primary_components(self):
        z12 = abelian.cyclic(12)
        self.assertEqual(abelian.primary_component(z12, 2).sub.order, 4)
        self.assertEqual(abelian.primary_component(z12, 3).sub.order, 3)
        self.assertEqual(abelian.primary_component(z12, 5).sub.order, 1)
