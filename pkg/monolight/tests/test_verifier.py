import unittest

from ..catalog import abelian_fixtures, group_fixtures, primary_fixtures, ring_fixtures, xmod_fixtures
from ..contexts import (
    AbelianTorsionContext,
    GroupTorsionContext,
    PrimaryTorsionContext,
    RingTorsionContext,
    TrivialTorsionContext,
    XModTorsionContext,
)
from ..core import abelian
from ..core.matrices import IntMatrix
from ..exceptions import InvalidCover
from ..reports import Status
from ..verifier import SUITES, Verifier
from .utils import abelian_hom_count, cyclic_square_count


def by_check(report, check):
    return [result for result in report.results if result.check == check]


class TestOrthogonality(unittest.TestCase):

    def setUp(self):
        self.verifier = Verifier(PrimaryTorsionContext(2))

    def test_unique_diagonals(self):
        e = primary_fixtures().morphisms['z12-z6']
        m = abelian.identity(abelian.cyclic(3))
        result = self.verifier.check_orthogonality(e, m)
        self.assertEqual(result.status, Status.PASS)
        self.assertEqual(result.squares, 3)

    def test_missing_diagonal(self):
        f = primary_fixtures().morphisms['z4-z2']
        result = self.verifier.check_orthogonality(f, f)
        self.assertEqual(result.status, Status.FAIL)
        self.assertEqual(result.counterexample['diagonals'], 0)
        self.assertIn('a', result.counterexample)

    def test_budget(self):
        verifier = Verifier(PrimaryTorsionContext(2), budget=2)
        f = primary_fixtures().morphisms['z4-z2']
        result = verifier.check_orthogonality(f, f)
        self.assertEqual(result.status, Status.INCONCLUSIVE)
        self.assertEqual(result.reason, 'budget-exceeded')

    def test_infinite_groups(self):
        verifier = Verifier(AbelianTorsionContext())
        f = abelian_fixtures().morphisms['z-z4']
        result = verifier.check_orthogonality(f, f)
        self.assertEqual(result.status, Status.INCONCLUSIVE)
        self.assertEqual(result.reason, 'enumeration-infeasible')

    def test_square_counts_against_brute_force(self):
        # (domain order, codomain order, image of 1)
        maps = {
            'z4-z2': (4, 2, 1),
            'z6-z3': (6, 3, 1),
            'id-z6': (6, 6, 1),
            'z6-z2': (6, 2, 1),
            'z2-z4': (2, 4, 2),
        }
        morphisms = primary_fixtures().morphisms
        for e_name in ('z4-z2', 'z6-z3', 'id-z6'):
            for m_name in ('z6-z2', 'z2-z4', 'id-z6'):
                with self.subTest(e=e_name, m=m_name):
                    result = self.verifier.check_orthogonality(morphisms[e_name], morphisms[m_name])
                    self.assertEqual(result.status, Status.PASS)
                    self.assertEqual(result.squares, cyclic_square_count(maps[e_name], maps[m_name]))
                    self.assertEqual(result.diagonals, [1] * result.squares)


class TestHomCache(unittest.TestCase):

    def test_hom_sets_are_reused(self):
        fixtures = group_fixtures()
        verifier = Verifier(GroupTorsionContext())
        S3, C2 = fixtures.objects['s3'], fixtures.objects['c2']
        self.assertIs(verifier.homs(S3, C2), verifier.homs(S3, C2))

    def test_least_recently_used_hom_set_is_dropped(self):
        fixtures = group_fixtures()
        verifier = Verifier(GroupTorsionContext(), cache_size=1)
        S3, V4, C2 = fixtures.objects['s3'], fixtures.objects['v4'], fixtures.objects['c2']
        first = verifier.homs(S3, C2)
        verifier.homs(V4, C2)
        again = verifier.homs(S3, C2)
        self.assertIsNot(again, first)
        self.assertEqual(len(again), 2)


class TestSuites(unittest.TestCase):

    def run_fixture_suite(self, ctx, fixtures, suite, objects=None, morphisms=None, **kwargs):
        objects = [fixtures.objects[name] for name in objects] if objects else fixtures.object_list()
        morphisms = [fixtures.morphisms[name] for name in morphisms] if morphisms else fixtures.morphism_list()
        return Verifier(ctx, **kwargs).run_suite(suite, objects, morphisms)

    def test_unknown_suite(self):
        with self.assertRaises(KeyError):
            Verifier(GroupTorsionContext()).run_suite('everything', [])

    def test_empty_fixtures_are_vacuous(self):
        for suite in SUITES:
            if suite == 'theorem':
                continue
            with self.subTest(suite=suite):
                report = Verifier(GroupTorsionContext()).run_suite(suite, [], [])
                self.assertTrue(report.vacuous)
                self.assertTrue(report.passed)
                self.assertTrue(report.render().endswith('summary pass=0 fail=0 inconclusive=0\n'))

    def test_torsion_axioms_for_groups(self):
        report = self.run_fixture_suite(
            GroupTorsionContext(), group_fixtures(), 'torsion-axioms',
            objects=['1', 'c2', 's3', 'a4', 'a5', 'a5xc2'],
        )
        self.assertFalse(report.vacuous)
        self.assertEqual(report.failures(), [])
        self.assertTrue(by_check(report, 'hom-vanishing'))

    def test_torsion_axioms_for_rings(self):
        report = self.run_fixture_suite(RingTorsionContext(), ring_fixtures(), 'torsion-axioms')
        self.assertEqual(report.failures(), [])

    def test_factorisation_system_for_primary_groups(self):
        report = self.run_fixture_suite(PrimaryTorsionContext(2), primary_fixtures(), 'factorisation-system', samples=6)
        self.assertEqual(report.failures(), [])
        self.assertTrue(by_check(report, 'totality'))

    def test_condition_n(self):
        report = self.run_fixture_suite(GroupTorsionContext(), group_fixtures(), 'condition-n', objects=['s4', 'q8', 'a5xc2'])
        self.assertEqual(report.count(Status.PASS), 3)

    def test_condition_n_needs_enumeration(self):
        report = Verifier(AbelianTorsionContext()).check_condition_N(abelian.cyclic(0))
        self.assertEqual(report.results[0].status, Status.INCONCLUSIVE)
        self.assertEqual(report.results[0].details['reason'], 'enumeration-infeasible')

    def test_condition_n_on_supplied_subobjects(self):
        ctx = AbelianTorsionContext()
        z_z4 = abelian_fixtures().objects['z+z4']
        report = Verifier(ctx).check_condition_N(z_z4, subobjects=[ctx.identity(z_z4), ctx.torsion_subobject(z_z4)])
        self.assertEqual(report.results[0].status, Status.PASS)

    def test_third_iso(self):
        report = self.run_fixture_suite(GroupTorsionContext(), group_fixtures(), 'third-iso', objects=['s4', 'd4'])
        self.assertEqual(report.count(Status.PASS), 2)

    def test_functoriality(self):
        report = self.run_fixture_suite(AbelianTorsionContext(), abelian_fixtures(), 'functoriality')
        self.assertEqual(report.failures(), [])
        self.assertEqual(len(report.results), 2 * len(abelian_fixtures().morphisms))

    def test_crossed_modules(self):
        ctx = XModTorsionContext()
        for suite in ('torsion-axioms', 'functoriality'):
            with self.subTest(suite=suite):
                report = self.run_fixture_suite(ctx, xmod_fixtures(), suite)
                self.assertEqual(report.failures(), [])

    def test_kv_rendering(self):
        report = self.run_fixture_suite(GroupTorsionContext(), group_fixtures(), 'condition-n', objects=['s3'])
        lines = report.as_kv().splitlines()
        self.assertEqual(lines[0], 'context=fingrp')
        self.assertIn('suite=condition-n', lines)
        self.assertIn('check.0.status=PASS', lines)
        self.assertEqual(lines[-3:], ['summary.pass=1', 'summary.fail=0', 'summary.inconclusive=0'])

    def test_pullback_stability_over_every_square(self):
        fixtures = primary_fixtures()
        names = ('z2', 'z3', 'z4', 'z6', 'z12')
        objects = [fixtures.objects[name] for name in names]
        morphisms = [fixtures.morphisms[name] for name in ('z12-z6', 'z12-z4', 'z6-z3', 'z4-z2', 'z3-z12', 'z6-z2')]
        report = Verifier(PrimaryTorsionContext(2), samples=10_000).check_factorisation_system(objects, morphisms)
        self.assertEqual(report.failures(), [])
        orders = [int(name[1:]) for name in names]
        for label in ('ebar', 'mbar'):
            results = by_check(report, f'pullback-stability-{label}')
            self.assertTrue(results)
            for result in results:
                with self.subTest(label=label, morphism=result.details['morphism']):
                    self.assertEqual(result.status, Status.PASS)
                    codomain = result.details['morphism'].split('->')[1].split(':')[0]
                    k = 1 if codomain == '0' else int(codomain[2:])
                    # the identity, then every map from each object
                    expected = 1 + sum(abelian_hom_count([n], [k]) for n in orders)
                    self.assertEqual(result.details['squares'], expected)


class TestTorsionAxioms(unittest.TestCase):

    def test_objects_outside_both_classes_are_checked(self):
        # Z/12 is neither a 2-group nor of odd order
        objects = [abelian.cyclic(12), abelian.cyclic(4), abelian.cyclic(3)]
        report = Verifier(PrimaryTorsionContext(2)).run_suite('torsion-axioms', objects)
        self.assertEqual(report.failures(), [])
        self.assertEqual([r.details['object'] for r in by_check(report, 'sequence')], ['Z/12', 'Z/4', 'Z/3'])
        self.assertEqual([r.details['object'] for r in by_check(report, 'extension-closure')], ['Z/12', 'Z/4', 'Z/3'])
        self.assertTrue(by_check(report, 'hom-vanishing'))
        parts = {(r.details['object'], r.details['part']) for r in by_check(report, 'membership')}
        self.assertIn(('Z/4', 'torsion'), parts)
        self.assertIn(('Z/3', 'torsion-free'), parts)

    def test_radical_parts(self):
        verifier = Verifier(PrimaryTorsionContext(2))
        torsion, torsion_free = verifier.radical_parts([abelian.cyclic(12), abelian.cyclic(2), abelian.zero_group()])
        self.assertEqual([str(A) for A in torsion], ['Z/4', 'Z/2'])
        self.assertEqual([str(A) for A in torsion_free], ['Z/3'])

    def test_misdeclared_torsion_object(self):
        fixtures = primary_fixtures()
        report = Verifier(PrimaryTorsionContext(2)).check_torsion_theory([fixtures.objects['z3']], [])
        failures = report.failures()
        self.assertEqual([result.check for result in failures], ['membership'])
        self.assertEqual(failures[0].details['part'], 'torsion')
        self.assertEqual(failures[0].counterexample, {'object': 'Z/3'})

    def test_nonzero_map_from_torsion_to_torsion_free(self):
        fixtures = primary_fixtures()
        z2 = fixtures.objects['z2']
        report = Verifier(PrimaryTorsionContext(2)).check_torsion_theory([z2], [z2])
        vanishing = by_check(report, 'hom-vanishing')[0]
        self.assertEqual(vanishing.status, Status.FAIL)
        self.assertTrue(vanishing.counterexample['morphism'].startswith('Z/2->Z/2'))
        self.assertIn('torsion-free', [result.details['part'] for result in report.failures() if result.check == 'membership'])

    def test_trivial_theory_has_no_nonzero_torsion_free_objects(self):
        ctx = TrivialTorsionContext(PrimaryTorsionContext(2))
        z3 = primary_fixtures().objects['z3']
        report = Verifier(ctx).check_torsion_theory([], [z3])
        self.assertEqual([result.check for result in report.failures()], ['membership'])
        self.assertEqual(report.failures()[0].counterexample['object'], 'Z/3')

    def test_extension_closure(self):
        fixtures = primary_fixtures()
        report = Verifier(PrimaryTorsionContext(2)).run_suite('torsion-axioms', fixtures.object_list())
        closure = by_check(report, 'extension-closure')
        self.assertEqual(len(closure), len(fixtures.objects))
        self.assertTrue(all(result.status is Status.PASS for result in closure))
        self.assertIn('Z/12', [result.details['object'] for result in closure])
        sequences = {result.details['object']: result.details['sequences'] for result in closure}
        # 0 < Z/2 < Z/4 < Z/12 and 0 < Z/3 < Z/6 < Z/12
        self.assertEqual(sequences['Z/12'], 6)

    def test_extension_closure_for_groups(self):
        fixtures = group_fixtures()
        objects = [fixtures.objects[name] for name in ('s4', 'd4', 'a5xc2')]
        report = Verifier(GroupTorsionContext()).run_suite('torsion-axioms', objects)
        self.assertEqual(report.failures(), [])
        self.assertEqual(len(by_check(report, 'extension-closure')), 3)


class TestCovers(unittest.TestCase):

    def setUp(self):
        self.ctx = AbelianTorsionContext()
        self.verifier = Verifier(self.ctx)

    def test_certified(self):
        f = abelian_fixtures().morphisms['z-z4']
        report = self.verifier.check_cover(f, f)
        self.assertEqual(report.count(Status.PASS), 4)

    def test_uncertified_is_inconclusive(self):
        cover = abelian.AbHom(abelian.cyclic(0), abelian.cyclic(2), IntMatrix.from_rows([[1]], cols=1))
        report = self.verifier.check_cover(cover, abelian_fixtures().morphisms['z4-z2'])
        self.assertFalse(report.failed)
        self.assertEqual(by_check(report, 'trivial-covering')[0].status, Status.INCONCLUSIVE)


class TestPrimaryCovers(unittest.TestCase):

    def test_projection_is_certified_by_the_identity(self):
        fixtures = primary_fixtures()
        cover = abelian.identity(fixtures.objects['z3'])
        report = Verifier(PrimaryTorsionContext(2)).check_cover(cover, fixtures.morphisms['z3+z3-z3'])
        self.assertEqual(by_check(report, 'trivial-covering')[0].status, Status.PASS)
        self.assertEqual(report.failures(), [])

    def test_torsion_cover_is_rejected(self):
        fixtures = primary_fixtures()
        with self.assertRaises(InvalidCover) as raised:
            Verifier(PrimaryTorsionContext(2)).check_cover(fixtures.morphisms['z4-z2'], fixtures.morphisms['z4-z2'])
        self.assertEqual(raised.exception.reason, 'not-torsion-free')

    def test_torsion_theory_on_chosen_parts(self):
        fixtures = primary_fixtures()
        torsion = [fixtures.objects[name] for name in ('z2', 'z4')]
        torsion_free = [fixtures.objects[name] for name in ('z3', 'z9')]
        report = Verifier(PrimaryTorsionContext(2)).check_torsion_theory(torsion, torsion_free)
        self.assertEqual(len(by_check(report, 'hom-vanishing')), 4)
        self.assertEqual(report.failures(), [])


class TestTheoremConditions(unittest.TestCase):

    def test_trivial_theory_is_inconclusive_on_condition_3(self):
        ctx = TrivialTorsionContext(PrimaryTorsionContext(2))
        fixtures = primary_fixtures()
        objects = [fixtures.objects[name] for name in ('z2', 'z4', 'z3')]
        morphisms = [fixtures.morphisms[name] for name in ('z2-z4', 'z4-z2')]
        report = Verifier(ctx, samples=4).check_theorem_conditions(objects, morphisms)
        self.assertEqual(by_check(report, 'condition-3')[0].status, Status.INCONCLUSIVE)
        self.assertEqual(by_check(report, 'condition-3')[0].details['reason'], 'sampled-eprime-exceeds-ebar')
        self.assertEqual(by_check(report, 'condition-1')[0].status, Status.INCONCLUSIVE)

    def test_primary_groups_with_a_cover(self):
        ctx = PrimaryTorsionContext(3)
        fixtures = primary_fixtures()
        objects = [fixtures.objects[name] for name in ('z2', 'z3', 'z6', 'z9')]
        morphisms = [fixtures.morphisms[name] for name in ('z6-z2', 'z9-z3', 'id-z6')]
        covers = [fixtures.morphisms['z4-z2']]
        report = Verifier(ctx, samples=4).check_theorem_conditions(objects, morphisms, covers)
        for check in ('condition-1', 'condition-2', 'condition-n', 'ebar-in-e', 'm-criterion'):
            with self.subTest(check=check):
                self.assertEqual(by_check(report, check)[0].status, Status.PASS)

    def test_bad_cover_fails_condition_1(self):
        ctx = PrimaryTorsionContext(2)
        fixtures = primary_fixtures()
        report = Verifier(ctx).check_theorem_conditions([], [], covers=[fixtures.morphisms['z4-z2']])
        result = by_check(report, 'condition-1')[0]
        self.assertEqual(result.status, Status.FAIL)
        self.assertEqual(result.counterexample['reason'], 'not-torsion-free')

    def test_crossed_modules_cannot_sample(self):
        ctx = XModTorsionContext()
        objects = xmod_fixtures().objects
        f = next(iter(xmod_fixtures().morphisms.values()))
        report = Verifier(ctx).check_theorem_conditions([objects['s3>s3']], [f])
        self.assertEqual(by_check(report, 'condition-3')[0].status, Status.INCONCLUSIVE)
        self.assertEqual(by_check(report, 'm-criterion')[0].status, Status.INCONCLUSIVE)
