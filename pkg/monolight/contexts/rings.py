#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Finite commutative rings with (nilpotent, reduced).
"""
from typing import Any, List, Tuple

from ..core import rings
from ..core.rings import FiniteCommRing, RingHom
from ..exceptions import NotASubobjectError
from .base import TorsionContext


class RingTorsionContext(TorsionContext):
    """
    Finite commutative rings, unit not required, with the (nilpotent,
    reduced) torsion theory: ``T(R)`` is the nilradical.
    """

    tag: str = 'finring'
    title: str = 'finite commutative rings: (nilpotent, reduced)'

    def accepts_object(self, A: Any) -> bool:
        return isinstance(A, FiniteCommRing)

    def accepts_morphism(self, f: Any) -> bool:
        return isinstance(f, RingHom)

    def identity(self, A: FiniteCommRing) -> RingHom:
        return rings.identity(A)

    def compose(self, g: RingHom, f: RingHom) -> RingHom:
        return rings.compose(g, f)

    def equal(self, f: RingHom, g: RingHom) -> bool:
        return f == g

    def zero_object(self) -> FiniteCommRing:
        return rings.zero_ring()

    def zero_morphism(self, A: FiniteCommRing, B: FiniteCommRing) -> RingHom:
        return rings.zero_hom(A, B)

    def kernel(self, f: RingHom) -> RingHom:
        return rings.kernel(f).as_ring()[1]

    def quotient(self, A: FiniteCommRing, k: RingHom) -> RingHom:
        if k.codomain != A:
            raise NotASubobjectError('the subobject does not live in this ring')
        return rings.quotient_ring(A, rings.image(k))[1]

    def image(self, f: RingHom) -> Tuple[RingHom, RingHom]:
        _, m = rings.image(f).as_ring()
        return rings.lift(m, f), m

    def is_normal(self, k: RingHom) -> bool:
        return rings.is_mono(k) and rings.is_ideal(k.codomain, rings.image(k).elements)

    def lift(self, mono: RingHom, f: RingHom) -> RingHom:
        return rings.lift(mono, f)

    def induced_from_quotient(self, q: RingHom, f: RingHom) -> RingHom:
        return rings.induced_from_quotient(q, f)

    def pullback(self, f: RingHom, g: RingHom) -> rings.RingPullback:
        return rings.pullback(f, g)

    def pullback_map(self, square: rings.RingPullback, a: RingHom, b: RingHom) -> RingHom:
        return rings.pullback_map(square, a, b)

    def enumerate_homs(self, A: FiniteCommRing, B: FiniteCommRing) -> List[RingHom]:
        return rings.enumerate_ring_homs(A, B)

    def normal_subobjects(self, A: FiniteCommRing) -> List[RingHom]:
        return [I.as_ring()[1] for I in rings.ideals(A)]

    def is_finite(self, A: FiniteCommRing) -> bool:
        return True

    def order(self, A: FiniteCommRing) -> int:
        return A.order

    def is_mono(self, f: RingHom) -> bool:
        return rings.is_mono(f)

    def is_normal_epi(self, f: RingHom) -> bool:
        return rings.is_epi(f)

    def torsion_subobject(self, A: FiniteCommRing) -> RingHom:
        return rings.nilradical(A).as_ring()[1]

    def describe_object(self, A: FiniteCommRing) -> str:
        return ''.join(str(A).split())

    def describe_morphism(self, f: RingHom) -> str:
        images = ','.join(str(x) for x in f.map.tolist())
        return f'{self.describe_object(f.domain)}->{self.describe_object(f.codomain)}:map=[{images}]'
