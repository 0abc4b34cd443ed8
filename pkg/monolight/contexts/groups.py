#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Finite groups with (perfect, solvable).
"""
from typing import Any, List, Tuple

from ..core import groups
from ..core.groups import FiniteGroup, GroupHom
from ..exceptions import NotASubobjectError
from .base import TorsionContext


class GroupTorsionContext(TorsionContext):
    """
    Finite groups with the (perfect, solvable) torsion theory.

    ``T(G)`` is the perfect radical, the last term of the derived series; it
    is characteristic, so the composite ``T(K) -> K -> G`` is normal for
    every normal ``K`` and ``G / T(G)`` is solvable.
    """

    tag: str = 'fingrp'
    title: str = 'finite groups: (perfect, solvable)'

    def accepts_object(self, A: Any) -> bool:
        return isinstance(A, FiniteGroup)

    def accepts_morphism(self, f: Any) -> bool:
        return isinstance(f, GroupHom)

    def identity(self, A: FiniteGroup) -> GroupHom:
        return groups.identity(A)

    def compose(self, g: GroupHom, f: GroupHom) -> GroupHom:
        return groups.compose(g, f)

    def equal(self, f: GroupHom, g: GroupHom) -> bool:
        return f == g

    def zero_object(self) -> FiniteGroup:
        return groups.trivial_group()

    def zero_morphism(self, A: FiniteGroup, B: FiniteGroup) -> GroupHom:
        return groups.trivial_hom(A, B)

    def kernel(self, f: GroupHom) -> GroupHom:
        return groups.subgroup_as_group(groups.kernel(f))[1]

    def quotient(self, A: FiniteGroup, k: GroupHom) -> GroupHom:
        if k.codomain != A:
            raise NotASubobjectError('the subobject does not live in this group')
        return groups.quotient(A, groups.image(k))[1]

    def image(self, f: GroupHom) -> Tuple[GroupHom, GroupHom]:
        _, m = groups.subgroup_as_group(groups.image(f))
        return groups.lift(m, f), m

    def is_normal(self, k: GroupHom) -> bool:
        return groups.is_mono(k) and groups.is_normal(groups.image(k))

    def lift(self, mono: GroupHom, f: GroupHom) -> GroupHom:
        return groups.lift(mono, f)

    def induced_from_quotient(self, q: GroupHom, f: GroupHom) -> GroupHom:
        return groups.induced_from_quotient(q, f)

    def pullback(self, f: GroupHom, g: GroupHom) -> groups.GroupPullback:
        return groups.pullback(f, g)

    def pullback_map(self, square: groups.GroupPullback, a: GroupHom, b: GroupHom) -> GroupHom:
        return groups.pullback_map(square, a, b)

    def enumerate_homs(self, A: FiniteGroup, B: FiniteGroup) -> List[GroupHom]:
        return groups.enumerate_homs(A, B)

    def normal_subobjects(self, A: FiniteGroup) -> List[GroupHom]:
        return [groups.subgroup_as_group(N)[1] for N in groups.normal_subgroups(A)]

    def is_finite(self, A: FiniteGroup) -> bool:
        return True

    def order(self, A: FiniteGroup) -> int:
        return A.order

    def is_mono(self, f: GroupHom) -> bool:
        return groups.is_mono(f)

    def is_normal_epi(self, f: GroupHom) -> bool:
        return groups.is_epi(f)

    def torsion_subobject(self, A: FiniteGroup) -> GroupHom:
        return groups.subgroup_as_group(groups.perfect_radical(A))[1]

    def describe_object(self, A: FiniteGroup) -> str:
        return ''.join(str(A).split())

    def describe_morphism(self, f: GroupHom) -> str:
        images = ','.join(str(x) for x in f.map.tolist())
        return f'{self.describe_object(f.domain)}->{self.describe_object(f.codomain)}:map=[{images}]'
