#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
The torsion context base class: category primitives supplied by each
context, and the radical, reflection and hom-vanishing check built on them.
"""
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Any, List, Optional, Tuple

import structlog

from ..exceptions import ContextMismatch, MonolightError, NotASubobjectError, UnsupportedOperation
from ..reports import CheckResult, Status
from ..settings import MONOLIGHT_CACHE_SIZE


logger = structlog.get_logger(__name__)


class RadicalResult:
    """
    The torsion sequence ``0 -> T(A) -> A -> I(A) -> 0`` of one object.

    Args:
        torsion: the torsion part ``T(A)``
        counit: the normal monomorphism ``t_A: T(A) -> A``
        reflection: the torsion-free part ``I(A)``
        unit: the normal epimorphism ``eta_A: A -> I(A)``
    """

    def __init__(self, torsion: Any, counit: Any, reflection: Any, unit: Any):
        self.torsion = torsion
        self.counit = counit
        self.reflection = reflection
        self.unit = unit

    def __iter__(self):
        return iter((self.torsion, self.counit, self.reflection, self.unit))


class TorsionContext(ABC):
    """
    A torsion theory on one instance category.

    Subclasses supply the category primitives and :py:meth:`torsion_subobject`;
    the radical, the reflection and their action on morphisms are built here
    from those.  Subobjects are always handled as monomorphisms into their
    ambient object, and normal subobjects as normal monomorphisms.

    Keyword Args:
        check_radicals: verify the torsion sequence of every radical as it is
            computed
        cache_size: how many radicals to keep; the least recently used is
            dropped first
    """

    class NotConfigured(MonolightError):

        def __init__(self, name: str):
            super().__init__(f'{name} must set "tag" as a class attribute or in __init__')

    class BrokenRadical(MonolightError):
        """
        A torsion sequence failed one of its checks.  This is a bug in the
        context, never a property of the input.
        """

    #: The tag the registry and the command line know this context by
    tag: Optional[str] = None
    #: A human readable description of the torsion theory
    title: str = ''
    #: Whether :py:meth:`pullback` is available
    supports_pullbacks: bool = True
    #: Verify each torsion sequence as it is built
    check_radicals: bool = True
    #: Radicals kept by :py:meth:`radical`
    cache_size: int = MONOLIGHT_CACHE_SIZE

    def __init__(self, check_radicals: Optional[bool] = None, cache_size: Optional[int] = None):
        self.check_radicals = check_radicals if check_radicals is not None else self.check_radicals
        self.cache_size = cache_size if cache_size is not None else self.cache_size
        if not self.tag:
            raise self.NotConfigured(self.__class__.__name__)
        self._radicals = lru_cache(maxsize=self.cache_size)(self._build_radical)

    # --------------------------------------------
    # Membership
    # --------------------------------------------

    @abstractmethod
    def accepts_object(self, A: Any) -> bool:
        ...

    @abstractmethod
    def accepts_morphism(self, f: Any) -> bool:
        ...

    def check_object(self, A: Any) -> None:
        """
        Raises:
            ContextMismatch: ``A`` is not an object of our category
        """
        if not self.accepts_object(A):
            raise ContextMismatch(f'{A!r} is not an object of the {self.tag} context')

    def check_morphism(self, f: Any) -> None:
        """
        Raises:
            ContextMismatch: ``f`` is not a morphism of our category
        """
        if not self.accepts_morphism(f) or not (self.accepts_object(f.domain) and self.accepts_object(f.codomain)):
            raise ContextMismatch(f'{f!r} is not a morphism of the {self.tag} context')

    # --------------------------------------------
    # Category primitives
    # --------------------------------------------

    def domain(self, f: Any) -> Any:
        return f.domain

    def codomain(self, f: Any) -> Any:
        return f.codomain

    @abstractmethod
    def identity(self, A: Any) -> Any:
        ...

    @abstractmethod
    def compose(self, g: Any, f: Any) -> Any:
        """
        ``g . f``: first ``f``, then ``g``.
        """

    @abstractmethod
    def equal(self, f: Any, g: Any) -> bool:
        ...

    @abstractmethod
    def zero_object(self) -> Any:
        ...

    @abstractmethod
    def zero_morphism(self, A: Any, B: Any) -> Any:
        ...

    @abstractmethod
    def kernel(self, f: Any) -> Any:
        """
        The kernel of ``f`` as a normal monomorphism ``K -> A``.
        """

    @abstractmethod
    def quotient(self, A: Any, k: Any) -> Any:
        """
        The cokernel ``A -> A/K`` of a normal monomorphism ``k: K -> A``.

        Raises:
            NotNormalError: ``k`` is not a normal monomorphism
        """

    @abstractmethod
    def image(self, f: Any) -> Tuple[Any, Any]:
        """
        The regular image factorisation ``f = m . e``.

        Returns:
            ``(e, m)`` with ``e`` a normal epimorphism and ``m`` a monomorphism
        """

    @abstractmethod
    def is_normal(self, k: Any) -> bool:
        """
        ``True`` when ``k`` is a normal monomorphism.
        """

    @abstractmethod
    def lift(self, mono: Any, f: Any) -> Any:
        """
        Factor ``f`` through the monomorphism ``mono``.

        Raises:
            NotASubobjectError: ``f`` does not factor
        """

    @abstractmethod
    def induced_from_quotient(self, q: Any, f: Any) -> Any:
        """
        The unique ``m`` with ``m . q = f`` for a normal epimorphism ``q``.

        Raises:
            WellDefinednessError: ``f`` does not kill the kernel of ``q``
        """

    @abstractmethod
    def enumerate_homs(self, A: Any, B: Any) -> List[Any]:
        """
        Raises:
            UnsupportedEnumeration: the hom-set cannot be listed
        """

    @abstractmethod
    def normal_subobjects(self, A: Any) -> List[Any]:
        """
        Every normal subobject of ``A`` as a normal monomorphism.

        Raises:
            UnsupportedEnumeration: ``A`` has too many, or infinitely many
        """

    @abstractmethod
    def is_finite(self, A: Any) -> bool:
        ...

    @abstractmethod
    def order(self, A: Any) -> Optional[int]:
        """
        The number of elements, or ``None`` for an infinite object.
        """

    @abstractmethod
    def is_mono(self, f: Any) -> bool:
        ...

    @abstractmethod
    def is_normal_epi(self, f: Any) -> bool:
        ...

    @abstractmethod
    def torsion_subobject(self, A: Any) -> Any:
        """
        The counit ``t_A: T(A) -> A`` of the torsion radical.
        """

    @abstractmethod
    def describe_object(self, A: Any) -> str:
        ...

    @abstractmethod
    def describe_morphism(self, f: Any) -> str:
        ...

    def pullback(self, f: Any, g: Any) -> Any:
        """
        ``A x_C B`` for ``f: A -> C`` and ``g: B -> C``.  The returned square
        has ``obj``, ``p1`` and ``p2``.

        Raises:
            UnsupportedOperation: this category has no pullback support
        """
        raise UnsupportedOperation(f'the {self.tag} context does not compute pullbacks')

    def pullback_map(self, square: Any, a: Any, b: Any) -> Any:
        raise UnsupportedOperation(f'the {self.tag} context does not compute pullbacks')

    def native_ml_factorise(self, f: Any) -> Optional[Tuple[Any, Any]]:
        """
        A category-specific ``(q, m)`` factorisation, if the category has
        one; ``None`` selects the generic quotient construction.
        """
        return None

    # --------------------------------------------
    # Derived predicates
    # --------------------------------------------

    def is_iso(self, f: Any) -> bool:
        return self.is_mono(f) and self.is_normal_epi(f)

    def is_zero_object(self, A: Any) -> bool:
        return self.order(A) == 1

    def is_zero_morphism(self, f: Any) -> bool:
        return self.equal(f, self.zero_morphism(f.domain, f.codomain))

    def contains(self, outer: Any, inner: Any) -> bool:
        """
        ``True`` when the subobject ``inner`` factors through ``outer``.
        """
        try:
            self.lift(outer, inner)
        except NotASubobjectError:
            return False
        return True

    def same_subobject(self, k: Any, l: Any) -> bool:
        return self.contains(k, l) and self.contains(l, k)

    def kernel_object(self, f: Any) -> Any:
        return self.kernel(f).domain

    # --------------------------------------------
    # The torsion theory
    # --------------------------------------------

    def radical(self, A: Any) -> RadicalResult:
        """
        ``T(A) -> A -> I(A)``, with the unit computed as the cokernel of the
        counit.

        Raises:
            ContextMismatch: ``A`` is not an object of this context
        """
        self.check_object(A)
        return self._radicals(A)

    def _build_radical(self, A: Any) -> RadicalResult:
        counit = self.torsion_subobject(A)
        unit = self.quotient(A, counit)
        result = RadicalResult(counit.domain, counit, unit.codomain, unit)
        if self.check_radicals:
            self._check_sequence(A, result)
        return result

    def clear_cache(self) -> None:
        self._radicals.cache_clear()

    def _check_sequence(self, A: Any, result: RadicalResult) -> None:
        if not self.is_zero_morphism(self.compose(result.unit, result.counit)):
            raise self.BrokenRadical(f'eta . t is not zero for {self.describe_object(A)}')
        if not self.is_zero_object(self.torsion_subobject(result.reflection).domain):
            raise self.BrokenRadical(f'I({self.describe_object(A)}) is not torsion-free')
        if not self.is_iso(self.torsion_subobject(result.torsion)):
            raise self.BrokenRadical(f'T({self.describe_object(A)}) is not torsion')

    def reflect(self, A: Any) -> Tuple[Any, Any]:
        """
        Returns:
            ``(I(A), eta_A)``
        """
        result = self.radical(A)
        return result.reflection, result.unit

    def reflect_morphism(self, f: Any) -> Any:
        """
        ``I(f): I(A) -> I(B)``, the map induced by ``eta_B . f``.
        """
        unit_a = self.radical(f.domain).unit
        unit_b = self.radical(f.codomain).unit
        return self.induced_from_quotient(unit_a, self.compose(unit_b, f))

    def radical_morphism(self, f: Any) -> Any:
        """
        ``T(f): T(A) -> T(B)``, the restriction of ``f`` to torsion parts.

        Raises:
            NotASubobjectError: ``f`` does not carry ``T(A)`` into ``T(B)``
        """
        counit_a = self.radical(f.domain).counit
        counit_b = self.radical(f.codomain).counit
        return self.lift(counit_b, self.compose(f, counit_a))

    def is_torsion(self, A: Any) -> bool:
        """
        ``T(A) = A``.
        """
        return self.is_iso(self.radical(A).counit)

    def is_torsion_free(self, A: Any) -> bool:
        """
        ``T(A) = 0``.
        """
        return self.is_zero_object(self.radical(A).torsion)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self.tag!r})'


def check_hom_vanishing(ctx: TorsionContext, Y: Any, X: Any, suite: str = 'torsion-axioms') -> CheckResult:
    """
    Enumerate ``Hom(Y, X)`` and pass only when the zero morphism is the
    whole of it.

    Raises:
        UnsupportedEnumeration: the hom-set cannot be enumerated; never a
            silent pass
    """
    homs = ctx.enumerate_homs(Y, X)
    details = {'torsion': ctx.describe_object(Y), 'torsion_free': ctx.describe_object(X), 'homs': len(homs)}
    for f in homs:
        if not ctx.is_zero_morphism(f):
            return CheckResult(
                suite, 'hom-vanishing', Status.FAIL,
                details=details,
                counterexample={'morphism': ctx.describe_morphism(f)}
            )
    return CheckResult(suite, 'hom-vanishing', Status.PASS, details=details)
