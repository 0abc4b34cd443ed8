"""
The factorisations a torsion theory induces, written once against
:py:class:`~monolight.contexts.base.TorsionContext`.

* :py:func:`ml_factorise` factors ``f: A -> B`` through ``A / T(K)``, ``K``
  the kernel of ``f``: a normal epimorphism with torsion kernel followed by a
  morphism with torsion-free kernel.
* :py:func:`reflective_factorise` pulls ``I(f)`` back along ``eta_B``.
* :py:func:`third_iso` builds ``A/L ~ (A/K)/(L/K)`` with both directions.
* :py:class:`Classifier` decides which morphism classes ``f`` belongs to and
  says how each answer was obtained.
"""
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import structlog

from .contexts.base import TorsionContext
from .exceptions import (
    ConditionNViolation,
    InvalidCover,
    NotASubobjectError,
    NotNormalError,
    UnsupportedEnumeration,
    UnsupportedOperation,
)
from .settings import MONOLIGHT_MAX_ORDER, MONOLIGHT_SAMPLES, MONOLIGHT_SEED


logger = structlog.get_logger(__name__)


# --------------------------------------------
# Monotone-light factorisation
# --------------------------------------------

class MLFactorisation:
    """
    ``f = m . q`` with ``q: A -> A/T(K)`` and ``m: A/T(K) -> B``.

    Args:
        f: the morphism that was factored
        q: the normal epimorphism with torsion kernel
        m: the morphism with torsion-free kernel
        kernel: the kernel ``k: K -> A`` of ``f``
        torsion_kernel: the normal monomorphism ``T(K) -> K -> A``
        kernel_witness: the comparison ``I(K) -> Ker(m)``
        native: ``True`` when the context's own construction produced ``q``
            and ``m``
    """

    def __init__(
        self,
        f: Any,
        q: Any,
        m: Any,
        kernel: Any,
        torsion_kernel: Any,
        kernel_witness: Any,
        native: bool = False
    ):
        self.f = f
        self.q = q
        self.m = m
        self.kernel = kernel
        self.torsion_kernel = torsion_kernel
        self.kernel_witness = kernel_witness
        self.native = native

    @property
    def middle(self) -> Any:
        return self.q.codomain

    def __iter__(self):
        return iter((self.q, self.m))


def ml_factorise(ctx: TorsionContext, f: Any, generic: bool = False) -> MLFactorisation:
    """
    Factor ``f: A -> B`` as ``m . q`` through ``A / T(K)`` where ``K`` is the
    kernel of ``f``.

    The returned factorisation also carries the comparison
    ``I(K) -> Ker(m)``, induced by ``q`` restricted to ``K``; it is an
    isomorphism, and :py:func:`check_ml_factorisation` confirms that.

    Args:
        ctx: the torsion context
        f: a morphism of ``ctx``

    Keyword Args:
        generic: if ``True``, ignore the context's own construction and use
            the quotient by ``T(K)``

    Raises:
        ContextMismatch: ``f`` is not a morphism of ``ctx``
        ConditionNViolation: ``T(K) -> A`` is not a normal monomorphism
    """
    ctx.check_morphism(f)
    A = f.domain
    k = ctx.kernel(f)
    radical = ctx.radical(k.domain)
    torsion_kernel = ctx.compose(k, radical.counit)
    if not ctx.is_normal(torsion_kernel):
        raise ConditionNViolation(
            f'T({ctx.describe_object(k.domain)}) -> {ctx.describe_object(A)}'
        )
    native = None if generic else ctx.native_ml_factorise(f)
    if native is not None:
        q, m = native
    else:
        q = ctx.quotient(A, torsion_kernel)
        m = ctx.induced_from_quotient(q, f)
    j = ctx.kernel(m)
    restricted = ctx.lift(j, ctx.compose(q, k))
    witness = ctx.induced_from_quotient(radical.unit, restricted)
    logger.debug(
        'engine.ml_factorise',
        ctx=ctx.tag,
        morphism=ctx.describe_morphism(f),
        middle=ctx.describe_object(q.codomain),
        native=native is not None,
    )
    return MLFactorisation(f, q, m, k, torsion_kernel, witness, native=native is not None)


def check_ml_factorisation(ctx: TorsionContext, factorisation: MLFactorisation) -> Dict[str, bool]:
    """
    Every property an ML factorisation must have, by name.
    """
    f, q, m = factorisation.f, factorisation.q, factorisation.m
    return {
        'composes': ctx.equal(ctx.compose(m, q), f),
        'q-normal-epi': ctx.is_normal_epi(q),
        'q-torsion-kernel': ctx.is_torsion(ctx.kernel_object(q)),
        'm-torsion-free-kernel': ctx.is_torsion_free(ctx.kernel_object(m)),
        'kernel-witness-iso': ctx.is_iso(factorisation.kernel_witness),
    }


class FactorisationComparison:
    """
    The comparison ``u: middle(a) -> middle(b)`` with ``u . q_a = q_b``,
    and whether it is an isomorphism that also satisfies ``m_b . u = m_a``.
    """

    def __init__(self, comparison: Any, iso: bool, commutes: bool):
        self.comparison = comparison
        self.iso = iso
        self.commutes = commutes

    @property
    def agrees(self) -> bool:
        return self.iso and self.commutes


def compare_factorisations(ctx: TorsionContext, a: MLFactorisation, b: MLFactorisation) -> FactorisationComparison:
    """
    Relate the middles of two factorisations of the same morphism by the
    map induced from ``a.q``.

    Raises:
        WellDefinednessError: ``b.q`` does not kill the kernel of ``a.q``
    """
    u = ctx.induced_from_quotient(a.q, b.q)
    return FactorisationComparison(
        u,
        iso=ctx.is_iso(u),
        commutes=ctx.equal(ctx.compose(b.m, u), a.m),
    )


# --------------------------------------------
# Reflective factorisation
# --------------------------------------------

class ReflectiveFactorisation:
    """
    ``f = m . e`` with ``m: P -> B`` the pullback of ``I(f)`` along
    ``eta_B`` and ``e: A -> P`` the comparison map.

    ``square`` is the pullback square; its ``p1`` maps ``P`` to ``I(A)``.
    """

    def __init__(self, f: Any, e: Any, m: Any, square: Any, e_inverted: bool):
        self.f = f
        self.e = e
        self.m = m
        self.square = square
        #: ``True`` when ``I(e)`` is an isomorphism
        self.e_inverted = e_inverted

    @property
    def middle(self) -> Any:
        return self.square.obj

    def __iter__(self):
        return iter((self.e, self.m))


def reflective_factorise(ctx: TorsionContext, f: Any) -> ReflectiveFactorisation:
    """
    Raises:
        ContextMismatch: ``f`` is not a morphism of ``ctx``
        UnsupportedOperation: ``ctx`` cannot compute pullbacks
    """
    ctx.check_morphism(f)
    if not ctx.supports_pullbacks:
        raise UnsupportedOperation(f'the {ctx.tag} context has no reflective factorisation')
    _, unit_a = ctx.reflect(f.domain)
    _, unit_b = ctx.reflect(f.codomain)
    square = ctx.pullback(ctx.reflect_morphism(f), unit_b)
    e = ctx.pullback_map(square, unit_a, f)
    inverted = ctx.is_iso(ctx.reflect_morphism(e))
    logger.debug(
        'engine.reflective_factorise',
        ctx=ctx.tag,
        morphism=ctx.describe_morphism(f),
        middle=ctx.describe_object(square.obj),
        e_inverted=inverted,
    )
    return ReflectiveFactorisation(f, e, square.p2, square, inverted)


# --------------------------------------------
# Third isomorphism
# --------------------------------------------

class ThirdIsoWitness:
    """
    ``phi: A/L -> (A/K)/(L/K)`` and ``psi`` going back, with the results of
    composing them both ways.
    """

    def __init__(self, left: Any, right: Any, phi: Any, psi: Any, left_identity: bool, right_identity: bool):
        self.left = left
        self.right = right
        self.phi = phi
        self.psi = psi
        self.left_identity = left_identity
        self.right_identity = right_identity

    @property
    def verified(self) -> bool:
        return self.left_identity and self.right_identity


def third_iso(ctx: TorsionContext, A: Any, k: Any, l: Any) -> ThirdIsoWitness:
    """
    Build ``A/L ~ (A/K)/(L/K)`` for normal subobjects ``k: K -> A`` and
    ``l: L -> A`` with ``K`` inside ``L``.

    Raises:
        NotNormalError: ``k`` or ``l`` is not normal
        NotASubobjectError: ``K`` is not contained in ``L``
    """
    ctx.check_object(A)
    for name, sub in (('K', k), ('L', l)):
        if sub.codomain != A or not ctx.is_normal(sub):
            raise NotNormalError(f'{name} is not a normal subobject of {ctx.describe_object(A)}')
    if not ctx.contains(l, k):
        raise NotASubobjectError('K is not contained in L')
    by_k = ctx.quotient(A, k)
    by_l = ctx.quotient(A, l)
    _, l_mod_k = ctx.image(ctx.compose(by_k, l))
    by_l_mod_k = ctx.quotient(by_k.codomain, l_mod_k)
    phi = ctx.induced_from_quotient(by_l, ctx.compose(by_l_mod_k, by_k))
    psi = ctx.induced_from_quotient(by_l_mod_k, ctx.induced_from_quotient(by_k, by_l))
    left, right = by_l.codomain, by_l_mod_k.codomain
    return ThirdIsoWitness(
        left,
        right,
        phi,
        psi,
        left_identity=ctx.equal(ctx.compose(psi, phi), ctx.identity(left)),
        right_identity=ctx.equal(ctx.compose(phi, psi), ctx.identity(right)),
    )


# --------------------------------------------
# Covers
# --------------------------------------------

def validate_cover(ctx: TorsionContext, p: Any) -> None:
    """
    A cover is a normal epimorphism with a torsion-free domain.

    Raises:
        InvalidCover: ``p`` is not a normal epimorphism or its domain has
            torsion
    """
    ctx.check_morphism(p)
    if not ctx.is_normal_epi(p):
        raise InvalidCover('not-normal-epi')
    if not ctx.is_torsion_free(p.domain):
        raise InvalidCover('not-torsion-free')


def pull_back_along(ctx: TorsionContext, f: Any, g: Any) -> Any:
    """
    ``g*(f)``: the projection ``A x_B X -> X`` for ``f: A -> B`` and
    ``g: X -> B``.
    """
    return ctx.pullback(f, g).p2


def pullback_reflects_mono(ctx: TorsionContext, f: Any, p: Any) -> bool:
    """
    ``False`` only when ``p*(f)`` is a monomorphism but ``f`` is not, which
    no effective descent morphism ``p`` allows.
    """
    return ctx.is_mono(f) or not ctx.is_mono(pull_back_along(ctx, f, p))


# --------------------------------------------
# Classification
# --------------------------------------------

class Flag:
    """
    One class membership verdict.

    ``provenance`` says how ``value`` was obtained: ``computed`` (decided
    exactly), ``sampled`` (checked on finitely many pullbacks),
    ``theorem-conditional`` (inferred from another flag through the theorem's
    conditions), ``certified`` (proved relative to a supplied cover) or
    ``untested`` (``value`` is ``None``).
    """

    def __init__(self, value: Optional[bool], provenance: str, note: str = '', **evidence: Any):
        self.value = value
        self.provenance = provenance
        self.note = note
        self.evidence = evidence

    def render(self, name: str) -> str:
        value = '-' if self.value is None else str(self.value).lower()
        line = f'{name} {self.provenance}:{value}'
        if self.note:
            line += f' ({self.note})'
        for key, item in self.evidence.items():
            line += f' {key}={"".join(str(item).split())}'
        return line

    def __bool__(self) -> bool:
        return bool(self.value)

    def __repr__(self) -> str:
        return f'Flag({self.value!r}, {self.provenance!r})'


class ClassificationRecord:
    """
    Which of ``E``, ``E-bar``, ``M-bar``, ``M``, ``E'`` and ``M*`` a morphism
    lies in.
    """

    FLAGS = ('in_E', 'in_Ebar', 'in_Mbar', 'in_M', 'in_Eprime_sampled', 'in_Mstar_assumed')

    def __init__(self, f: Any, description: str, flags: Dict[str, Flag]):
        self.f = f
        self.description = description
        self.flags = flags

    def __getattr__(self, name: str) -> Flag:
        if name in self.FLAGS:
            return self.flags[name]
        raise AttributeError(name)

    def render(self) -> str:
        lines = [f'morphism {self.description}']
        lines.extend(self.flags[name].render(name) for name in self.FLAGS)
        return '\n'.join(lines) + '\n'

    def as_kv(self) -> str:
        pairs = [('morphism', self.description)]
        for name in self.FLAGS:
            flag = self.flags[name]
            pairs.append((name, '-' if flag.value is None else str(flag.value).lower()))
            pairs.append((f'{name}.provenance', flag.provenance))
            pairs.extend((f'{name}.{key}', value) for key, value in flag.evidence.items())
        return ''.join(f'{key}={"".join(str(value).split())}\n' for key, value in pairs)


class Classifier:
    """
    Classify morphisms of one context.

    ``E'`` is checked by pulling ``f`` back along the identity of its
    codomain and along a seeded sample of morphisms into the codomain from
    ``objects``; the verdict is a sample, never a proof.

    Args:
        ctx: the torsion context

    Keyword Args:
        samples: how many pullbacks to try besides the identity
        seed: the sampling seed
        objects: where the sampled morphisms come from
    """

    #: How many pullbacks ``E'`` membership is sampled on
    samples: int = MONOLIGHT_SAMPLES
    #: Seed for the pullback sample
    seed: int = MONOLIGHT_SEED
    #: Skip enumerating morphisms out of objects larger than this
    max_order: int = MONOLIGHT_MAX_ORDER

    def __init__(
        self,
        ctx: TorsionContext,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        objects: Optional[Sequence[Any]] = None
    ):
        self.ctx = ctx
        self.samples = samples if samples is not None else self.samples
        self.seed = seed if seed is not None else self.seed
        self.objects = list(objects or [])

    def in_E(self, f: Any) -> bool:
        return self.ctx.is_iso(self.ctx.reflect_morphism(f))

    def in_Ebar(self, f: Any) -> bool:
        return self.ctx.is_normal_epi(f) and self.ctx.is_torsion(self.ctx.kernel_object(f))

    def in_Mbar(self, f: Any) -> bool:
        return self.ctx.is_torsion_free(self.ctx.kernel_object(f))

    def in_M(self, f: Any) -> Optional[bool]:
        """
        ``None`` when the context cannot build the reflective factorisation.
        """
        if not self.ctx.supports_pullbacks:
            return None
        return self.ctx.is_iso(reflective_factorise(self.ctx, f).e)

    def pullback_sample(self, B: Any) -> List[Any]:
        """
        The identity of ``B`` followed by up to :py:attr:`samples` morphisms
        into ``B``, chosen with :py:attr:`seed`.
        """
        candidates = []
        for X in self.objects:
            order = self.ctx.order(X)
            if order is not None and order > self.max_order:
                continue
            try:
                candidates.extend(self.ctx.enumerate_homs(X, B))
            except UnsupportedEnumeration:
                continue
        rng = np.random.default_rng(self.seed)
        if len(candidates) > self.samples:
            chosen = sorted(rng.choice(len(candidates), size=self.samples, replace=False).tolist())
            candidates = [candidates[i] for i in chosen]
        return [self.ctx.identity(B)] + candidates

    def in_Eprime(self, f: Any) -> Flag:
        if not self.ctx.supports_pullbacks:
            return Flag(None, 'untested', 'no pullbacks in this context')
        sample = self.pullback_sample(f.codomain)
        for g in sample:
            pulled = pull_back_along(self.ctx, f, g)
            if not self.in_E(pulled):
                return Flag(
                    False, 'sampled', 'a pullback leaves E',
                    pullbacks=len(sample), along=self.ctx.describe_morphism(g)
                )
        return Flag(True, 'sampled', 'every sampled pullback is in E', pullbacks=len(sample), seed=self.seed)

    def certify_Mstar(self, f: Any, cover: Any) -> bool:
        """
        ``True`` when ``p*(f)`` is a trivial covering for the cover ``p``.

        Raises:
            InvalidCover: ``cover`` is not a cover of the codomain of ``f``
            UnsupportedOperation: ``ctx`` cannot compute pullbacks
        """
        validate_cover(self.ctx, cover)
        if cover.codomain != f.codomain:
            raise InvalidCover('codomain-mismatch')
        if not self.ctx.supports_pullbacks:
            raise UnsupportedOperation(f'the {self.ctx.tag} context cannot pull back along a cover')
        return bool(self.in_M(pull_back_along(self.ctx, f, cover)))

    def classify(self, f: Any, cover: Any = None) -> ClassificationRecord:
        """
        Raises:
            ContextMismatch: ``f`` is not a morphism of the context
            InvalidCover: ``cover`` is given but is not a cover of the
                codomain of ``f``
        """
        ctx = self.ctx
        ctx.check_morphism(f)
        in_mbar = self.in_Mbar(f)
        in_m = self.in_M(f)
        flags = {
            'in_E': Flag(self.in_E(f), 'computed', 'I(f) iso'),
            'in_Ebar': Flag(
                self.in_Ebar(f), 'computed', 'normal epi with torsion kernel',
                kernel=ctx.describe_object(ctx.kernel_object(f))
            ),
            'in_Mbar': Flag(in_mbar, 'computed', 'kernel torsion-free'),
            'in_M': (
                Flag(in_m, 'computed', 'e-part of the reflective factorisation iso')
                if in_m is not None else Flag(None, 'untested', 'no pullbacks in this context')
            ),
            'in_Eprime_sampled': self.in_Eprime(f),
        }
        mstar = Flag(in_mbar, 'theorem-conditional', 'equals M-bar when M* = M-bar')
        if cover is not None:
            if self.certify_Mstar(f, cover):
                mstar = Flag(
                    True, 'certified', 'trivial covering after pullback along the cover',
                    cover=ctx.describe_morphism(cover)
                )
            else:
                # an uncertified cover says nothing about M*
                mstar.evidence['cover_certified'] = False
        flags['in_Mstar_assumed'] = mstar
        return ClassificationRecord(f, ctx.describe_morphism(f), flags)


def classify(
    ctx: TorsionContext,
    f: Any,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    objects: Optional[Sequence[Any]] = None,
    cover: Any = None
) -> ClassificationRecord:
    """
    Classify ``f`` with a :py:class:`Classifier` built from the keyword
    arguments; ``objects`` defaults to the domain and codomain of ``f``.
    """
    if objects is None:
        objects = [f.domain, f.codomain]
    return Classifier(ctx, samples=samples, seed=seed, objects=objects).classify(f, cover=cover)
