"""
Brute force verification of the torsion theory and factorisation
properties of one context.

Every check ends up as a :py:class:`~monolight.reports.CheckResult`.  A
check that cannot finish within :py:attr:`Verifier.budget`, or that needs an
enumeration the context cannot do, is ``INCONCLUSIVE``; it never passes.
"""
import time
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from . import engine
from .contexts.base import TorsionContext, check_hom_vanishing
from .exceptions import (
    InvalidCover,
    MonolightError,
    NotASubobjectError,
    UnsupportedEnumeration,
    UnsupportedOperation,
    WellDefinednessError,
)
from .reports import CheckResult, OrthogonalityReport, Status, VerificationReport
from .settings import MONOLIGHT_BUDGET, MONOLIGHT_CACHE_SIZE, MONOLIGHT_MAX_ORDER, MONOLIGHT_SAMPLES, MONOLIGHT_SEED


logger = structlog.get_logger(__name__)


#: Every suite :py:meth:`Verifier.run_suite` knows
SUITES: Tuple[str, ...] = (
    'orthogonality',
    'factorisation-system',
    'torsion-axioms',
    'condition-n',
    'cover',
    'third-iso',
    'functoriality',
    'theorem',
)


class Verifier:
    """
    Run verification suites against one torsion context.

    Hom-sets are enumerated once per pair of objects and the most recently
    used :py:attr:`cache_size` of them are kept.

    Args:
        ctx: the torsion context

    Keyword Args:
        budget: the most candidates one brute force search may visit
        samples: how many morphisms or pairs to sample where a check samples
        seed: the sampling seed
        cache_size: how many hom-sets to keep
    """

    #: The most candidates one brute force search may visit
    budget: int = MONOLIGHT_BUDGET
    #: Sample size for sampled checks
    samples: int = MONOLIGHT_SAMPLES
    #: Seed for every sampled check
    seed: int = MONOLIGHT_SEED
    #: Objects larger than this are left out of enumerations
    max_order: int = MONOLIGHT_MAX_ORDER
    #: Hom-sets kept by :py:meth:`homs`
    cache_size: int = MONOLIGHT_CACHE_SIZE

    def __init__(
        self,
        ctx: TorsionContext,
        budget: Optional[int] = None,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        cache_size: Optional[int] = None
    ):
        self.ctx = ctx
        self.budget = budget if budget is not None else self.budget
        self.samples = samples if samples is not None else self.samples
        self.seed = seed if seed is not None else self.seed
        self.cache_size = cache_size if cache_size is not None else self.cache_size
        self._homs = lru_cache(maxsize=self.cache_size)(ctx.enumerate_homs)

    # --------------------------------------------
    # Plumbing
    # --------------------------------------------

    def report(self, suite: str) -> VerificationReport:
        return VerificationReport(self.ctx.tag, suite, seed=self.seed, budget=self.budget)

    def homs(self, A: Any, B: Any) -> List[Any]:
        """
        ``Hom(A, B)``, cached.

        Raises:
            UnsupportedEnumeration: the hom-set cannot be listed
        """
        return self._homs(A, B)

    def small(self, A: Any) -> bool:
        order = self.ctx.order(A)
        return order is not None and order <= self.max_order

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def sample(self, items: Sequence[Any], count: Optional[int] = None) -> List[Any]:
        """
        At most ``count`` (default :py:attr:`samples`) of ``items``, in their
        original order, chosen with :py:attr:`seed`.
        """
        count = self.samples if count is None else count
        items = list(items)
        if len(items) <= count:
            return items
        chosen = sorted(self.rng().choice(len(items), size=count, replace=False).tolist())
        return [items[i] for i in chosen]

    def sample_morphisms(self, objects: Sequence[Any]) -> List[Any]:
        """
        A seeded sample of morphisms between the small objects of
        ``objects``.
        """
        found = []
        for A, B in product(objects, repeat=2):
            if not (self.small(A) and self.small(B)):
                continue
            try:
                found.extend(self.homs(A, B))
            except UnsupportedEnumeration:
                continue
        return self.sample(found)

    def classifier(self, objects: Sequence[Any]) -> engine.Classifier:
        return engine.Classifier(self.ctx, samples=self.samples, seed=self.seed, objects=objects)

    def describe(self, f: Any) -> str:
        return self.ctx.describe_morphism(f)

    def outcome(self, suite: str, check: str, passed: bool, details: Dict[str, Any], counterexample: Dict[str, Any]) -> CheckResult:
        if passed:
            return CheckResult(suite, check, Status.PASS, details=details)
        return CheckResult(suite, check, Status.FAIL, details=details, counterexample=counterexample)

    def inconclusive(self, suite: str, check: str, reason: str, **details: Any) -> CheckResult:
        details['reason'] = reason
        return CheckResult(suite, check, Status.INCONCLUSIVE, details=details)

    def guarded(self, suite: str, check: str, run: Callable[[], CheckResult], **details: Any) -> CheckResult:
        """
        Run one check, turning enumeration and pullback limits into
        ``INCONCLUSIVE``.
        """
        try:
            return run()
        except UnsupportedEnumeration as e:
            return self.inconclusive(suite, check, 'enumeration-infeasible', message=str(e), **details)
        except UnsupportedOperation as e:
            return self.inconclusive(suite, check, 'unsupported', message=str(e), **details)

    # --------------------------------------------
    # Orthogonality
    # --------------------------------------------

    def check_orthogonality(self, e: Any, m: Any) -> OrthogonalityReport:
        """
        Check ``e`` against ``m`` for the unique lifting property over every
        commutative square ``m . a = b . e``.
        """
        ctx = self.ctx
        try:
            tops = self.homs(e.domain, m.domain)
            bottoms = self.homs(e.codomain, m.codomain)
            diagonals = self.homs(e.codomain, m.domain)
        except UnsupportedEnumeration as exc:
            logger.debug('verifier.orthogonality.skipped', ctx=ctx.tag, reason=str(exc))
            return OrthogonalityReport(Status.INCONCLUSIVE, reason='enumeration-infeasible')
        if len(tops) * len(bottoms) > self.budget:
            return OrthogonalityReport(Status.INCONCLUSIVE, reason='budget-exceeded')
        composites_a = [ctx.compose(m, a) for a in tops]
        composites_b = [ctx.compose(b, e) for b in bottoms]
        via_e = [ctx.compose(d, e) for d in diagonals]
        via_m = [ctx.compose(m, d) for d in diagonals]
        squares = 0
        counts: List[int] = []
        visited = 0
        for (a, ma), (b, be) in product(zip(tops, composites_a), zip(bottoms, composites_b)):
            if not ctx.equal(ma, be):
                continue
            squares += 1
            visited += len(diagonals)
            if visited > self.budget:
                return OrthogonalityReport(Status.INCONCLUSIVE, squares=squares, diagonals=counts, reason='budget-exceeded')
            found = sum(
                1 for de, md in zip(via_e, via_m)
                if ctx.equal(de, a) and ctx.equal(md, b)
            )
            counts.append(found)
            if found != 1:
                return OrthogonalityReport(
                    Status.FAIL,
                    squares=squares,
                    diagonals=counts,
                    counterexample={
                        'e': self.describe(e),
                        'm': self.describe(m),
                        'a': self.describe(a),
                        'b': self.describe(b),
                        'diagonals': found,
                    },
                )
        logger.debug('verifier.orthogonality', ctx=ctx.tag, e=self.describe(e), m=self.describe(m), squares=squares)
        return OrthogonalityReport(Status.PASS, squares=squares, diagonals=counts)

    def orthogonality_suite(self, pairs: Sequence[Tuple[Any, Any]]) -> VerificationReport:
        report = self.report('orthogonality')
        for e, m in pairs:
            result = self.check_orthogonality(e, m)
            report.add(result.as_check(e=self.describe(e), m=self.describe(m)))
        return report

    # --------------------------------------------
    # Factorisation system
    # --------------------------------------------

    def check_factorisation_system(self, objects: Sequence[Any], morphisms: Optional[Sequence[Any]] = None) -> VerificationReport:
        """
        (a) every morphism has an ML factorisation, (b) its factors are in
        ``E-bar`` and ``M-bar``, (c) sampled ``E-bar`` x ``M-bar`` pairs are
        orthogonal, (d) both classes are stable under sampled pullbacks.

        ``morphisms`` defaults to a seeded sample of the morphisms between
        ``objects``.  No objects and no morphisms give a vacuous report.
        """
        suite = 'factorisation-system'
        ctx = self.ctx
        report = self.report(suite)
        if morphisms is None:
            morphisms = self.sample_morphisms(objects)
        classifier = self.classifier(objects)
        ebar: List[Any] = []
        mbar: List[Any] = []
        for f in morphisms:
            name = self.describe(f)
            try:
                factorisation = engine.ml_factorise(ctx, f)
            except MonolightError as e:
                report.add(CheckResult(
                    suite, 'totality', Status.FAIL,
                    details={'morphism': name},
                    counterexample={'morphism': name, 'error': type(e).__name__},
                ))
                continue
            properties = engine.check_ml_factorisation(ctx, factorisation)
            report.add(self.outcome(
                suite, 'totality', properties['composes'],
                {'morphism': name, 'middle': ctx.describe_object(factorisation.middle)},
                {'morphism': name, 'q': self.describe(factorisation.q), 'm': self.describe(factorisation.m)},
            ))
            classes = ('q-normal-epi', 'q-torsion-kernel', 'm-torsion-free-kernel', 'kernel-witness-iso')
            broken = [key for key in classes if not properties[key]]
            report.add(self.outcome(
                suite, 'classes', not broken,
                {'morphism': name},
                {'morphism': name, 'violated': broken},
            ))
            ebar.append(factorisation.q)
            mbar.append(factorisation.m)
            if classifier.in_Ebar(f):
                ebar.append(f)
            if classifier.in_Mbar(f):
                mbar.append(f)
        pairs = [
            (e, m) for e, m in product(ebar, mbar)
            if all(self.small(X) for X in (e.domain, e.codomain, m.domain, m.codomain))
        ]
        for e, m in self.sample(pairs):
            report.add(self.check_orthogonality(e, m).as_check(
                suite=suite, check='orthogonality', e=self.describe(e), m=self.describe(m)
            ))
        for label, members, test in (('ebar', ebar, classifier.in_Ebar), ('mbar', mbar, classifier.in_Mbar)):
            for f in self.sample(members):
                report.add(self.guarded(
                    suite, f'pullback-stability-{label}',
                    lambda f=f, test=test, label=label: self._pullback_stability(suite, label, f, objects, test),
                    morphism=self.describe(f),
                ))
        return report

    def _pullback_stability(self, suite: str, label: str, f: Any, objects: Sequence[Any], test: Callable[[Any], bool]) -> CheckResult:
        ctx = self.ctx
        if not ctx.supports_pullbacks:
            raise UnsupportedOperation(f'the {ctx.tag} context does not compute pullbacks')
        candidates = [ctx.identity(f.codomain)]
        for X in objects:
            if self.small(X):
                try:
                    candidates.extend(self.homs(X, f.codomain))
                except UnsupportedEnumeration:
                    continue
        squares = 0
        for g in self.sample(candidates):
            squares += 1
            pulled = engine.pull_back_along(ctx, f, g)
            if not test(pulled):
                return CheckResult(
                    suite, f'pullback-stability-{label}', Status.FAIL,
                    details={'morphism': self.describe(f), 'squares': squares},
                    counterexample={'morphism': self.describe(f), 'along': self.describe(g), 'pullback': self.describe(pulled)},
                )
        return CheckResult(
            suite, f'pullback-stability-{label}', Status.PASS,
            details={'morphism': self.describe(f), 'squares': squares}
        )

    # --------------------------------------------
    # Condition (N)
    # --------------------------------------------

    def check_condition_N(self, A: Any, subobjects: Optional[Sequence[Any]] = None) -> VerificationReport:
        """
        For every normal ``k: K -> A``, ``T(K) -> K -> A`` must be normal.

        ``subobjects`` replaces the enumeration of normal subobjects, which
        infinite objects need.
        """
        suite = 'condition-n'
        report = self.report(suite)
        report.add(self.guarded(suite, 'normality', lambda: self._condition_N(suite, A, subobjects), object=self.ctx.describe_object(A)))
        return report

    def _condition_N(self, suite: str, A: Any, subobjects: Optional[Sequence[Any]]) -> CheckResult:
        ctx = self.ctx
        if subobjects is None:
            subobjects = ctx.normal_subobjects(A)
        name = ctx.describe_object(A)
        for k in subobjects:
            composite = ctx.compose(k, ctx.radical(k.domain).counit)
            if not ctx.is_normal(composite):
                return CheckResult(
                    suite, 'normality', Status.FAIL,
                    details={'object': name, 'subobjects': len(subobjects)},
                    counterexample={'object': name, 'subobject': ctx.describe_object(k.domain)},
                )
        return CheckResult(suite, 'normality', Status.PASS, details={'object': name, 'subobjects': len(subobjects)})

    # --------------------------------------------
    # Torsion theory axioms
    # --------------------------------------------

    def check_torsion_theory(
        self,
        torsion: Sequence[Any],
        torsion_free: Sequence[Any],
        objects: Optional[Sequence[Any]] = None
    ) -> VerificationReport:
        """
        (a) ``Hom(Y, X) = 0`` for every ``Y`` in ``torsion`` and ``X`` in
        ``torsion_free``, and each of them belongs to the class it was listed
        under, (b) the radical sequence of every object is short exact with
        parts of the right kind, (c) extensions of torsion (torsion-free)
        objects by torsion (torsion-free) objects are torsion (torsion-free).

        Keyword Args:
            objects: the objects for (b) and (c); defaults to ``torsion``
                followed by ``torsion_free``
        """
        suite = 'torsion-axioms'
        ctx = self.ctx
        report = self.report(suite)
        for Y, X in product(torsion, torsion_free):
            report.add(self.guarded(
                suite, 'hom-vanishing', lambda Y=Y, X=X: check_hom_vanishing(ctx, Y, X, suite=suite),
                torsion=ctx.describe_object(Y), torsion_free=ctx.describe_object(X),
            ))
        for A in torsion:
            name = ctx.describe_object(A)
            report.add(self.outcome(suite, 'membership', ctx.is_torsion(A), {'object': name, 'part': 'torsion'}, {'object': name}))
        for A in torsion_free:
            name = ctx.describe_object(A)
            report.add(self.outcome(suite, 'membership', ctx.is_torsion_free(A), {'object': name, 'part': 'torsion-free'}, {'object': name}))
        if objects is None:
            objects = list(torsion) + list(torsion_free)
        for A in objects:
            report.add(self._sequence(suite, A))
            report.add(self.guarded(
                suite, 'extension-closure', lambda A=A: self._extension_closure(suite, A),
                object=ctx.describe_object(A),
            ))
        return report

    def radical_parts(self, objects: Sequence[Any]) -> Tuple[List[Any], List[Any]]:
        """
        The distinct non-zero ``T(A)`` and ``I(A)`` over ``objects``, in
        first-seen order.
        """
        ctx = self.ctx
        torsion: List[Any] = []
        torsion_free: List[Any] = []
        for A in objects:
            result = ctx.radical(A)
            for part, found in ((result.torsion, torsion), (result.reflection, torsion_free)):
                if not ctx.is_zero_object(part) and part not in found:
                    found.append(part)
        return torsion, torsion_free

    def _sequence(self, suite: str, A: Any) -> CheckResult:
        ctx = self.ctx
        result = ctx.radical(A)
        name = ctx.describe_object(A)
        kernel = ctx.kernel(result.unit)
        properties = {
            'counit-normal-mono': ctx.is_normal(result.counit),
            'unit-normal-epi': ctx.is_normal_epi(result.unit),
            'exact': ctx.same_subobject(kernel, result.counit),
            'torsion-part': ctx.is_torsion(result.torsion),
            'torsion-free-part': ctx.is_torsion_free(result.reflection),
            'radical-idempotent': ctx.is_iso(ctx.radical(result.torsion).counit),
            'reflection-idempotent': ctx.is_iso(ctx.radical(result.reflection).unit),
        }
        broken = [key for key, holds in properties.items() if not holds]
        return self.outcome(
            suite, 'sequence', not broken,
            {'object': name, 'torsion': ctx.describe_object(result.torsion), 'reflection': ctx.describe_object(result.reflection)},
            {'object': name, 'violated': broken},
        )

    def _extension_closure(self, suite: str, A: Any) -> CheckResult:
        ctx = self.ctx
        name = ctx.describe_object(A)
        subobjects = ctx.normal_subobjects(A)
        for k in subobjects:
            K, Q = k.domain, ctx.quotient(A, k).codomain
            if ctx.is_torsion(K) and ctx.is_torsion(Q) and not ctx.is_torsion(A):
                violated = 'torsion'
            elif ctx.is_torsion_free(K) and ctx.is_torsion_free(Q) and not ctx.is_torsion_free(A):
                violated = 'torsion-free'
            else:
                continue
            return CheckResult(
                suite, 'extension-closure', Status.FAIL,
                details={'object': name, 'sequences': len(subobjects)},
                counterexample={'object': name, 'subobject': ctx.describe_object(K), 'class': violated},
            )
        return CheckResult(suite, 'extension-closure', Status.PASS, details={'object': name, 'sequences': len(subobjects)})

    # --------------------------------------------
    # Covers
    # --------------------------------------------

    def check_cover(self, cover: Any, f: Any) -> VerificationReport:
        """
        Certify ``f`` in ``M*`` relative to ``cover``: pull ``f`` back along
        the cover and check the result is a trivial covering, then check
        ``Ker(p*(f)) ~ Ker(f)``.  A cover that does not certify ``f`` gives
        ``INCONCLUSIVE``, never ``FAIL``.

        Raises:
            InvalidCover: ``cover`` is not a normal epimorphism onto the
                codomain of ``f`` with a torsion-free domain
            UnsupportedOperation: the context cannot compute pullbacks
        """
        suite = 'cover'
        ctx = self.ctx
        ctx.check_morphism(f)
        engine.validate_cover(ctx, cover)
        if cover.codomain != f.codomain:
            raise InvalidCover('codomain-mismatch')
        if not ctx.supports_pullbacks:
            raise UnsupportedOperation(f'the {ctx.tag} context cannot pull back along a cover')
        report = self.report(suite)
        name, cover_name = self.describe(f), self.describe(cover)
        report.add(CheckResult(suite, 'valid-cover', Status.PASS, details={'cover': cover_name}))

        square = ctx.pullback(f, cover)
        pulled = square.p2
        classifier = self.classifier([])
        if classifier.in_M(pulled):
            report.add(CheckResult(suite, 'trivial-covering', Status.PASS, details={'morphism': name, 'cover': cover_name}))
        else:
            report.add(self.inconclusive(suite, 'trivial-covering', 'cover-does-not-certify', morphism=name, cover=cover_name))

        # p1 restricts to Ker(p*(f)) -> Ker(f)
        kernel_f = ctx.kernel(f)
        restricted = ctx.lift(kernel_f, ctx.compose(square.p1, ctx.kernel(pulled)))
        report.add(self.outcome(
            suite, 'kernel-iso', ctx.is_iso(restricted),
            {'morphism': name, 'kernel': ctx.describe_object(kernel_f.domain)},
            {'morphism': name, 'cover': cover_name, 'comparison': self.describe(restricted)},
        ))
        report.add(self.outcome(
            suite, 'reflects-mono', engine.pullback_reflects_mono(ctx, f, cover),
            {'morphism': name},
            {'morphism': name, 'cover': cover_name},
        ))
        return report

    # --------------------------------------------
    # Third isomorphism
    # --------------------------------------------

    def check_third_iso(self, objects: Sequence[Any]) -> VerificationReport:
        """
        For every nested pair ``K <= L`` of normal subobjects of every object,
        the witness maps ``A/L <-> (A/K)/(L/K)`` compose to identities.
        """
        suite = 'third-iso'
        report = self.report(suite)
        for A in objects:
            report.add(self.guarded(suite, 'witness', lambda A=A: self._third_iso(suite, A), object=self.ctx.describe_object(A)))
        return report

    def _third_iso(self, suite: str, A: Any) -> CheckResult:
        ctx = self.ctx
        name = ctx.describe_object(A)
        subobjects = ctx.normal_subobjects(A)
        pairs = 0
        for k, l in product(subobjects, repeat=2):
            if not ctx.contains(l, k):
                continue
            pairs += 1
            witness = engine.third_iso(ctx, A, k, l)
            if not witness.verified:
                return CheckResult(
                    suite, 'witness', Status.FAIL,
                    details={'object': name, 'pairs': pairs},
                    counterexample={'object': name, 'K': ctx.describe_object(k.domain), 'L': ctx.describe_object(l.domain)},
                )
        return CheckResult(suite, 'witness', Status.PASS, details={'object': name, 'pairs': pairs})

    # --------------------------------------------
    # Functoriality
    # --------------------------------------------

    def check_functoriality(self, morphisms: Sequence[Any]) -> VerificationReport:
        """
        ``f`` restricts to ``T(f): T(A) -> T(B)`` and induces
        ``I(f): I(A) -> I(B)``, with both squares commuting.
        """
        suite = 'functoriality'
        ctx = self.ctx
        report = self.report(suite)
        for f in morphisms:
            name = self.describe(f)
            ra, rb = ctx.radical(f.domain), ctx.radical(f.codomain)
            try:
                Tf = ctx.radical_morphism(f)
                holds = ctx.equal(ctx.compose(rb.counit, Tf), ctx.compose(f, ra.counit))
            except NotASubobjectError:
                holds = False
            report.add(self.outcome(suite, 'radical', holds, {'morphism': name}, {'morphism': name}))
            try:
                If = ctx.reflect_morphism(f)
                holds = ctx.equal(ctx.compose(If, ra.unit), ctx.compose(rb.unit, f))
            except WellDefinednessError:
                holds = False
            report.add(self.outcome(suite, 'reflection', holds, {'morphism': name}, {'morphism': name}))
        return report

    # --------------------------------------------
    # Theorem conditions
    # --------------------------------------------

    def check_theorem_conditions(
        self,
        objects: Sequence[Any],
        morphisms: Sequence[Any],
        covers: Sequence[Any] = ()
    ) -> VerificationReport:
        """
        The theorem's conditions on the tested fragment:

        * ``condition-1``: each supplied cover is a normal epimorphism with a
          torsion-free domain; nothing is claimed without covers.
        * ``condition-2``: no morphism certified in ``M*`` by a cover lies
          outside ``M-bar``.
        * ``condition-3``: every ``E-bar`` morphism passes the sampled ``E'``
          test; a morphism passing it outside ``E-bar`` makes the check
          ``INCONCLUSIVE`` since the sample is not a proof.
        * ``condition-n``, ``ebar-in-e`` and ``m-criterion`` (morphisms
          between torsion-free objects are in ``M``).
        """
        suite = 'theorem'
        ctx = self.ctx
        report = self.report(suite)
        classifier = self.classifier(objects)
        inventory = {'objects': len(objects), 'morphisms': len(morphisms)}

        valid_covers = []
        for p in covers:
            try:
                engine.validate_cover(ctx, p)
            except InvalidCover as e:
                report.add(CheckResult(
                    suite, 'condition-1', Status.FAIL,
                    details={'cover': self.describe(p)},
                    counterexample={'cover': self.describe(p), 'reason': e.reason},
                ))
                continue
            valid_covers.append(p)
            report.add(CheckResult(suite, 'condition-1', Status.PASS, details={'cover': self.describe(p), 'relative': True}))
        if not covers:
            report.add(self.inconclusive(suite, 'condition-1', 'no-cover-supplied'))

        report.add(self.guarded(suite, 'condition-2', lambda: self._condition_2(suite, classifier, morphisms, valid_covers), **inventory))
        report.add(self.guarded(suite, 'condition-3', lambda: self._condition_3(suite, classifier, morphisms), **inventory))

        failures = []
        for A in objects:
            sub_report = self.check_condition_N(A)
            failures.extend(r for r in sub_report.results if r.status is not Status.PASS)
        if failures:
            first = failures[0]
            status = Status.FAIL if any(r.status is Status.FAIL for r in failures) else Status.INCONCLUSIVE
            report.add(CheckResult(
                suite, 'condition-n', status, details=inventory,
                counterexample=first.counterexample if status is Status.FAIL else None,
            ))
        else:
            report.add(CheckResult(suite, 'condition-n', Status.PASS, details=inventory))

        offenders = [f for f in morphisms if classifier.in_Ebar(f) and not classifier.in_E(f)]
        report.add(self.outcome(
            suite, 'ebar-in-e', not offenders, inventory,
            {'morphism': self.describe(offenders[0])} if offenders else {},
        ))
        report.add(self.guarded(suite, 'm-criterion', lambda: self._m_criterion(suite, classifier, morphisms), **inventory))
        return report

    def _condition_2(self, suite: str, classifier: engine.Classifier, morphisms: Sequence[Any], covers: Sequence[Any]) -> CheckResult:
        certified = 0
        for f in morphisms:
            for p in covers:
                if p.codomain != f.codomain or not classifier.certify_Mstar(f, p):
                    continue
                certified += 1
                if not classifier.in_Mbar(f):
                    return CheckResult(
                        suite, 'condition-2', Status.FAIL,
                        details={'morphisms': len(morphisms), 'certified': certified},
                        counterexample={'morphism': self.describe(f), 'cover': self.describe(p)},
                    )
        return CheckResult(suite, 'condition-2', Status.PASS, details={'morphisms': len(morphisms), 'certified': certified})

    def _condition_3(self, suite: str, classifier: engine.Classifier, morphisms: Sequence[Any]) -> CheckResult:
        agree = 0
        exceeding = None
        for f in morphisms:
            in_ebar = classifier.in_Ebar(f)
            sampled = classifier.in_Eprime(f)
            if sampled.value is None:
                raise UnsupportedOperation('E\' cannot be sampled without pullbacks')
            if in_ebar and not sampled.value:
                return CheckResult(
                    suite, 'condition-3', Status.FAIL,
                    details={'morphisms': len(morphisms), 'agree': agree},
                    counterexample={'morphism': self.describe(f), 'along': sampled.evidence.get('along', '-')},
                )
            if sampled.value and not in_ebar:
                exceeding = exceeding or f
                continue
            agree += 1
        details = {'morphisms': len(morphisms), 'agree': agree}
        if exceeding is not None:
            return self.inconclusive(suite, 'condition-3', 'sampled-eprime-exceeds-ebar', morphism=self.describe(exceeding), **details)
        return CheckResult(suite, 'condition-3', Status.PASS, details=details)

    def _m_criterion(self, suite: str, classifier: engine.Classifier, morphisms: Sequence[Any]) -> CheckResult:
        ctx = self.ctx
        if not ctx.supports_pullbacks:
            raise UnsupportedOperation(f'the {ctx.tag} context has no reflective factorisation')
        tested = 0
        for f in morphisms:
            if not (ctx.is_torsion_free(f.domain) and ctx.is_torsion_free(f.codomain)):
                continue
            tested += 1
            if not classifier.in_M(f):
                return CheckResult(
                    suite, 'm-criterion', Status.FAIL,
                    details={'tested': tested},
                    counterexample={'morphism': self.describe(f)},
                )
        return CheckResult(suite, 'm-criterion', Status.PASS, details={'tested': tested})

    # --------------------------------------------
    # Suites by name
    # --------------------------------------------

    def run_suite(
        self,
        suite: str,
        objects: Sequence[Any],
        morphisms: Sequence[Any] = (),
        covers: Sequence[Any] = ()
    ) -> VerificationReport:
        """
        Run the suite called ``suite`` over fixture objects and morphisms, the
        way the ``verify`` command does.

        Raises:
            KeyError: ``suite`` is not one of :py:data:`SUITES`
        """
        if suite not in SUITES:
            raise KeyError(suite)
        ctx = self.ctx
        started = time.monotonic()
        morphisms = list(morphisms)
        if suite == 'orthogonality':
            classifier = self.classifier(objects)
            ebar = [f for f in morphisms if classifier.in_Ebar(f)]
            mbar = [f for f in morphisms if classifier.in_Mbar(f)]
            report = self.orthogonality_suite(self.sample(list(product(ebar, mbar))))
        elif suite == 'factorisation-system':
            report = self.check_factorisation_system(objects, morphisms or None)
        elif suite == 'torsion-axioms':
            torsion, torsion_free = self.radical_parts(objects)
            report = self.check_torsion_theory(torsion, torsion_free, objects=objects)
        elif suite == 'condition-n':
            report = self.report(suite)
            for A in objects:
                report.extend(self.check_condition_N(A))
        elif suite == 'cover':
            report = self.report(suite)
            for p, f in product(covers, morphisms):
                if p.codomain == f.codomain:
                    report.extend(self.check_cover(p, f))
        elif suite == 'third-iso':
            report = self.check_third_iso(objects)
        elif suite == 'functoriality':
            report = self.check_functoriality(morphisms)
        else:
            report = self.check_theorem_conditions(objects, morphisms, covers)
        report.duration = time.monotonic() - started
        logger.info(
            'verifier.suite',
            ctx=ctx.tag,
            suite=suite,
            checks=len(report.results),
            failed=report.count(Status.FAIL),
            duration=round(report.duration, 3),
        )
        return report
