import unittest

from ..catalog import abelian_fixtures, group_fixtures, primary_fixtures, ring_fixtures, xmod_fixtures
from ..contexts import AbelianTorsionContext, GroupTorsionContext, PrimaryTorsionContext, RingTorsionContext, XModTorsionContext
from ..core import abelian, xmod
from ..engine import (
    Flag,
    check_ml_factorisation,
    classify,
    compare_factorisations,
    ml_factorise,
    pullback_reflects_mono,
    reflective_factorise,
    third_iso,
    validate_cover,
)
from ..exceptions import (
    ConditionNViolation,
    ContextMismatch,
    InvalidCover,
    NotASubobjectError,
    NotNormalError,
    UnsupportedOperation,
)


class TestMLFactorise(unittest.TestCase):

    def assertGoodFactorisation(self, ctx, factorisation):
        for name, holds in check_ml_factorisation(ctx, factorisation).items():
            with self.subTest(check=name):
                self.assertTrue(holds)

    def test_primary(self):
        ctx = PrimaryTorsionContext(2)
        result = ml_factorise(ctx, primary_fixtures().morphisms['z12-z2'])
        self.assertEqual(result.middle.order, 6)
        self.assertEqual(ctx.describe_object(ctx.kernel_object(result.m)), 'Z/3')
        self.assertGoodFactorisation(ctx, result)

    def test_every_abelian_fixture(self):
        ctx = AbelianTorsionContext()
        for name, f in abelian_fixtures().morphisms.items():
            with self.subTest(morphism=name):
                self.assertGoodFactorisation(ctx, ml_factorise(ctx, f))

    def test_infinite_kernel_keeps_its_torsion(self):
        ctx = AbelianTorsionContext()
        result = ml_factorise(ctx, abelian_fixtures().morphisms['z+z2-z'])
        self.assertEqual(str(result.middle), 'Z')
        self.assertTrue(ctx.is_iso(result.m))

    def test_groups(self):
        ctx = GroupTorsionContext()
        morphisms = group_fixtures().morphisms
        result = ml_factorise(ctx, morphisms['a5xc2-c2'])
        self.assertEqual(result.middle.order, 2)
        self.assertTrue(ctx.is_iso(result.m))
        result = ml_factorise(ctx, morphisms['s4-s3'])
        self.assertEqual(result.middle.order, 24)
        self.assertTrue(ctx.is_iso(result.q))
        self.assertGoodFactorisation(ctx, result)

    def test_rings(self):
        ctx = RingTorsionContext()
        morphisms = ring_fixtures().morphisms
        self.assertEqual(ml_factorise(ctx, morphisms['z8-z2']).middle.order, 2)
        self.assertEqual(ml_factorise(ctx, morphisms['z6-z3']).middle.order, 6)
        for name, f in morphisms.items():
            with self.subTest(morphism=name):
                self.assertGoodFactorisation(ctx, ml_factorise(ctx, f))

    def test_crossed_modules_native_and_generic_agree(self):
        ctx = XModTorsionContext()
        objects = xmod_fixtures().objects
        f = xmod.zero_morphism(objects['c2>c2(0)'], objects['c2>1'])
        native = ml_factorise(ctx, f)
        generic = ml_factorise(ctx, f, generic=True)
        self.assertTrue(native.native)
        self.assertFalse(generic.native)
        self.assertEqual(native.middle.orders, (1, 2))
        self.assertTrue(compare_factorisations(ctx, native, generic).agrees)
        self.assertGoodFactorisation(ctx, native)

    def test_wrong_context(self):
        with self.assertRaises(ContextMismatch):
            ml_factorise(GroupTorsionContext(), abelian_fixtures().morphisms['z4-z2'])

    def test_condition_n(self):
        class NothingNormal(GroupTorsionContext):

            def is_normal(self, k):
                return False

        with self.assertRaises(ConditionNViolation):
            ml_factorise(NothingNormal(), group_fixtures().morphisms['s4-s3'])


class TestReflectiveFactorise(unittest.TestCase):

    def test_zero_domain(self):
        ctx = AbelianTorsionContext()
        result = reflective_factorise(ctx, abelian_fixtures().morphisms['zero-z4'])
        self.assertTrue(result.e_inverted)
        self.assertTrue(ctx.equal(ctx.compose(result.m, result.e), result.f))

    def test_group_projection(self):
        ctx = GroupTorsionContext()
        f = group_fixtures().morphisms['a5xc2-c2']
        result = reflective_factorise(ctx, f)
        self.assertTrue(result.e_inverted)
        self.assertEqual(result.middle.order, 2)
        self.assertTrue(ctx.equal(ctx.compose(result.m, result.e), f))

    def test_crossed_modules_have_no_pullbacks(self):
        ctx = XModTorsionContext()
        f = next(iter(xmod_fixtures().morphisms.values()))
        with self.assertRaises(UnsupportedOperation):
            reflective_factorise(ctx, f)


class TestThirdIso(unittest.TestCase):

    def setUp(self):
        self.ctx = GroupTorsionContext()
        self.S4 = group_fixtures().objects['s4']
        self.v4 = self.ctx.kernel(group_fixtures().morphisms['s4-s3'])
        self.a4 = self.ctx.kernel(group_fixtures().morphisms['s4-sign'])

    def test_verified(self):
        witness = third_iso(self.ctx, self.S4, self.v4, self.a4)
        self.assertTrue(witness.verified)
        self.assertEqual(witness.left.order, 2)
        self.assertEqual(witness.right.order, 2)

    def test_containment_required(self):
        with self.assertRaises(NotASubobjectError):
            third_iso(self.ctx, self.S4, self.a4, self.v4)

    def test_normality_required(self):
        S3 = group_fixtures().objects['s3']
        transposition = group_fixtures().morphisms['c2-s3']
        with self.assertRaises(NotNormalError):
            third_iso(self.ctx, S3, transposition, self.ctx.identity(S3))

    def test_abelian(self):
        ctx = AbelianTorsionContext()
        z12 = abelian.cyclic(12)
        k = abelian.subgroup_generated(z12, [(6,)]).inclusion
        l = abelian.subgroup_generated(z12, [(2,)]).inclusion
        witness = third_iso(ctx, z12, k, l)
        self.assertTrue(witness.verified)
        self.assertEqual(str(witness.left), 'Z/2')


class TestCovers(unittest.TestCase):

    def setUp(self):
        self.ctx = AbelianTorsionContext()
        self.z, self.z2, self.z4 = abelian.cyclic(0), abelian.cyclic(2), abelian.cyclic(4)
        self.cover = abelian_fixtures().morphisms['z-z4']

    def test_valid_cover(self):
        validate_cover(self.ctx, self.cover)

    def test_torsion_domain(self):
        with self.assertRaises(InvalidCover) as cm:
            validate_cover(self.ctx, abelian_fixtures().morphisms['z4-z2'])
        self.assertEqual(cm.exception.reason, 'not-torsion-free')

    def test_not_onto(self):
        with self.assertRaises(InvalidCover) as cm:
            validate_cover(self.ctx, abelian_fixtures().morphisms['z-z-double'])
        self.assertEqual(cm.exception.reason, 'not-normal-epi')

    def test_pullback_reflects_mono(self):
        f = abelian_fixtures().morphisms['z2-z4']
        self.assertTrue(pullback_reflects_mono(self.ctx, f, self.cover))


class TestClassify(unittest.TestCase):

    def test_primary_quotient(self):
        ctx = PrimaryTorsionContext(2)
        record = classify(ctx, primary_fixtures().morphisms['z12-z6'], objects=primary_fixtures().object_list())
        self.assertTrue(record.in_E.value)
        self.assertTrue(record.in_Ebar.value)
        self.assertFalse(record.in_Mbar.value)
        self.assertFalse(record.in_M.value)
        self.assertEqual(record.in_Eprime_sampled.provenance, 'sampled')
        self.assertTrue(record.in_Eprime_sampled.value)
        self.assertEqual(record.in_Mstar_assumed.provenance, 'theorem-conditional')
        self.assertFalse(record.in_Mstar_assumed.value)

    def test_render(self):
        ctx = PrimaryTorsionContext(2)
        record = classify(ctx, primary_fixtures().morphisms['z12-z6'])
        lines = record.render().splitlines()
        self.assertEqual(lines[0], 'morphism Z/12->Z/6:matrix=[1]')
        self.assertTrue(lines[1].startswith('in_E computed:true'))
        self.assertEqual(len(lines), 7)
        kv = record.as_kv()
        self.assertIn('in_E=true\n', kv)
        self.assertIn('in_E.provenance=computed\n', kv)
        self.assertIn('in_Mbar=false\n', kv)

    def test_untested_without_pullbacks(self):
        ctx = XModTorsionContext()
        objects = xmod_fixtures().objects
        record = classify(ctx, xmod.identity(objects['s3>s3']))
        self.assertIsNone(record.in_M.value)
        self.assertEqual(record.in_M.provenance, 'untested')
        self.assertEqual(record.in_Eprime_sampled.provenance, 'untested')
        self.assertTrue(record.in_E.value)

    def test_certified_cover(self):
        ctx = AbelianTorsionContext()
        f = abelian_fixtures().morphisms['z-z4']
        record = classify(ctx, f, cover=f)
        self.assertEqual(record.in_Mstar_assumed.provenance, 'certified')
        self.assertTrue(record.in_Mstar_assumed.value)

    def test_uncertified_cover(self):
        ctx = AbelianTorsionContext()
        cover = abelian.AbHom(abelian.cyclic(0), abelian.cyclic(2), abelian.identity(abelian.cyclic(0)).matrix)
        record = classify(ctx, abelian_fixtures().morphisms['z4-z2'], cover=cover)
        self.assertEqual(record.in_Mstar_assumed.provenance, 'theorem-conditional')
        self.assertIs(record.in_Mstar_assumed.evidence['cover_certified'], False)

    def test_cover_must_share_the_codomain(self):
        ctx = AbelianTorsionContext()
        with self.assertRaises(InvalidCover):
            classify(ctx, abelian_fixtures().morphisms['z4-z2'], cover=abelian_fixtures().morphisms['z-z4'])


class TestFlag(unittest.TestCase):

    def test_render(self):
        self.assertEqual(Flag(True, 'computed', 'I(f) iso').render('in_E'), 'in_E computed:true (I(f) iso)')
        self.assertEqual(Flag(None, 'untested').render('in_M'), 'in_M untested:-')
        self.assertEqual(Flag(False, 'sampled', pullbacks=3).render('x'), 'x sampled:false pullbacks=3')
