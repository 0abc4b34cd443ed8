#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Crossed modules of finite groups, whose pullbacks are not supported.
"""
from typing import Any, List, Optional, Tuple

from ..core import groups, xmod
from ..core.xmod import CrossedModule, XModMorphism
from ..exceptions import NotASubobjectError, NotNormalError
from .base import TorsionContext


class XModTorsionContext(TorsionContext):
    """
    Crossed modules of finite groups with the torsion theory whose torsion
    objects are the abelian groups over the trivial group and whose
    torsion-free objects are the normal monomorphisms.

    ``T(X)`` is ``Ker(boundary) -> 1`` and ``I(X)`` is ``boundary(A) -> B``.
    Pullbacks are not computed here, so the reflective factorisation and
    the pullback based checks are unavailable.
    """

    tag: str = 'xmod'
    title: str = 'crossed modules: (abelian objects, normal monomorphisms)'
    supports_pullbacks: bool = False

    def accepts_object(self, A: Any) -> bool:
        return isinstance(A, CrossedModule)

    def accepts_morphism(self, f: Any) -> bool:
        return isinstance(f, XModMorphism)

    def identity(self, A: CrossedModule) -> XModMorphism:
        return xmod.identity(A)

    def compose(self, g: XModMorphism, f: XModMorphism) -> XModMorphism:
        return xmod.compose(g, f)

    def equal(self, f: XModMorphism, g: XModMorphism) -> bool:
        return f == g

    def zero_object(self) -> CrossedModule:
        return xmod.trivial_xmod()

    def zero_morphism(self, A: CrossedModule, B: CrossedModule) -> XModMorphism:
        return xmod.zero_morphism(A, B)

    def kernel(self, f: XModMorphism) -> XModMorphism:
        return xmod.xmod_kernel(f)[1]

    def quotient(self, A: CrossedModule, k: XModMorphism) -> XModMorphism:
        if k.codomain != A:
            raise NotASubobjectError('the subobject does not live in this crossed module')
        if not xmod.is_mono(k):
            raise NotNormalError('only monomorphisms can be quotiented out')
        return xmod.xmod_quotient(A, groups.image(k.f1), groups.image(k.f0))[1]

    def image(self, f: XModMorphism) -> Tuple[XModMorphism, XModMorphism]:
        _, e, m = xmod.xmod_image(f)
        return e, m

    def is_normal(self, k: XModMorphism) -> bool:
        return xmod.is_mono(k) and xmod.is_normal_sub_xmod(k.codomain, groups.image(k.f1), groups.image(k.f0))

    def lift(self, mono: XModMorphism, f: XModMorphism) -> XModMorphism:
        return xmod.lift(mono, f)

    def induced_from_quotient(self, q: XModMorphism, f: XModMorphism) -> XModMorphism:
        return xmod.induced_from_quotient(q, f)

    def enumerate_homs(self, A: CrossedModule, B: CrossedModule) -> List[XModMorphism]:
        return xmod.enumerate_xmod_morphisms(A, B)

    def normal_subobjects(self, A: CrossedModule) -> List[XModMorphism]:
        found = []
        for M in groups.normal_subgroups(A.B):
            for N in groups.normal_subgroups(A.A):
                if xmod.is_normal_sub_xmod(A, N, M):
                    found.append(xmod.sub_xmod(A, N, M)[1])
        return found

    def is_finite(self, A: CrossedModule) -> bool:
        return True

    def order(self, A: CrossedModule) -> int:
        return A.A.order * A.B.order

    def is_mono(self, f: XModMorphism) -> bool:
        return xmod.is_mono(f)

    def is_normal_epi(self, f: XModMorphism) -> bool:
        return xmod.is_normal_epi(f)

    def torsion_subobject(self, A: CrossedModule) -> XModMorphism:
        return xmod.torsion_part(A)[1]

    def native_ml_factorise(self, f: XModMorphism) -> Optional[Tuple[XModMorphism, XModMorphism]]:
        factorisation = xmod.xmod_ml_factorise(f)
        return factorisation.e, factorisation.m_star

    def describe_object(self, A: CrossedModule) -> str:
        return ''.join(str(A).split())

    def describe_morphism(self, f: XModMorphism) -> str:
        top = ','.join(str(x) for x in f.f1.map.tolist())
        bottom = ','.join(str(x) for x in f.f0.map.tolist())
        return f'{self.describe_object(f.domain)}->{self.describe_object(f.codomain)}:f1=[{top}]:f0=[{bottom}]'
