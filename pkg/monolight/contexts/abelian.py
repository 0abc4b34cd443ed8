#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Abelian groups: all finitely generated ones with (torsion, torsion-free),
and the finite ones with (p-groups, p'-groups) for a prime p.
"""
from typing import Any, List, Optional, Tuple

from sympy.ntheory import isprime

from ..core import abelian
from ..core.abelian import AbHom, PresentedAbGroup
from ..core.matrices import IntMatrix
from ..exceptions import NotASubobjectError, NotNormalError
from .base import TorsionContext


class AbelianTorsionContext(TorsionContext):
    """
    Finitely generated abelian groups with the classical torsion theory:
    ``T(A)`` is the subgroup of elements of finite order.
    """

    tag: str = 'ab'
    title: str = 'finitely generated abelian groups: (torsion, torsion-free)'

    def accepts_object(self, A: Any) -> bool:
        return isinstance(A, PresentedAbGroup)

    def accepts_morphism(self, f: Any) -> bool:
        return isinstance(f, AbHom)

    def identity(self, A: PresentedAbGroup) -> AbHom:
        return abelian.identity(A)

    def compose(self, g: AbHom, f: AbHom) -> AbHom:
        return abelian.compose(g, f)

    def equal(self, f: AbHom, g: AbHom) -> bool:
        return abelian.homs_equal(f, g)

    def zero_object(self) -> PresentedAbGroup:
        return abelian.zero_group()

    def zero_morphism(self, A: PresentedAbGroup, B: PresentedAbGroup) -> AbHom:
        return abelian.zero_hom(A, B)

    def kernel(self, f: AbHom) -> AbHom:
        return abelian.kernel(f).inclusion

    def quotient(self, A: PresentedAbGroup, k: AbHom) -> AbHom:
        if k.codomain != A:
            raise NotASubobjectError('the subobject does not live in this group')
        if not self.is_normal(k):
            raise NotNormalError('only monomorphisms can be quotiented out')
        return abelian.cokernel(k)[1]

    def image(self, f: AbHom) -> Tuple[AbHom, AbHom]:
        embedding = abelian.image(f)
        e = AbHom(f.domain, embedding.sub, IntMatrix.identity(f.domain.generators), validate=False)
        return e, embedding.inclusion

    def is_normal(self, k: AbHom) -> bool:
        return abelian.is_mono(k)

    def lift(self, mono: AbHom, f: AbHom) -> AbHom:
        return abelian.lift(mono, f)

    def induced_from_quotient(self, q: AbHom, f: AbHom) -> AbHom:
        return abelian.induced_from_quotient(q, f)

    def pullback(self, f: AbHom, g: AbHom) -> abelian.AbPullback:
        return abelian.pullback(f, g)

    def pullback_map(self, square: abelian.AbPullback, a: AbHom, b: AbHom) -> AbHom:
        return abelian.pullback_map(square, a, b)

    def enumerate_homs(self, A: PresentedAbGroup, B: PresentedAbGroup) -> List[AbHom]:
        return abelian.enumerate_homs(A, B)

    def normal_subobjects(self, A: PresentedAbGroup) -> List[AbHom]:
        return [sub.inclusion for sub in abelian.subgroups(A)]

    def is_finite(self, A: PresentedAbGroup) -> bool:
        return A.is_finite

    def order(self, A: PresentedAbGroup) -> Optional[int]:
        return A.order

    def is_zero_object(self, A: PresentedAbGroup) -> bool:
        return A.is_trivial

    def is_mono(self, f: AbHom) -> bool:
        return abelian.is_mono(f)

    def is_normal_epi(self, f: AbHom) -> bool:
        return abelian.is_epi(f)

    def torsion_subobject(self, A: PresentedAbGroup) -> AbHom:
        return abelian.torsion_subgroup(A).inclusion

    def describe_object(self, A: PresentedAbGroup) -> str:
        return ''.join(str(A).split())

    def describe_morphism(self, f: AbHom) -> str:
        rows = ';'.join(','.join(str(x) for x in row) for row in f.matrix.tolist())
        return f'{self.describe_object(f.domain)}->{self.describe_object(f.codomain)}:matrix=[{rows}]'


class PrimaryTorsionContext(AbelianTorsionContext):
    """
    Finite abelian groups with the ``p``-primary torsion theory: ``T(A)``
    is the ``p``-primary component and the torsion-free objects are the
    groups of order prime to ``p``.

    Args:
        p: a prime

    Raises:
        ValueError: ``p`` is not prime
    """

    title: str = 'finite abelian groups: (p-groups, p\'-groups)'

    def __init__(self, p: int, check_radicals: Optional[bool] = None, cache_size: Optional[int] = None):
        if not isprime(p):
            raise ValueError(f'{p} is not a prime')
        self.p = p
        self.tag = f'finab:p={p}'
        super().__init__(check_radicals=check_radicals, cache_size=cache_size)

    def accepts_object(self, A: Any) -> bool:
        return isinstance(A, PresentedAbGroup) and A.is_finite

    def torsion_subobject(self, A: PresentedAbGroup) -> AbHom:
        return abelian.primary_component(A, self.p).inclusion
