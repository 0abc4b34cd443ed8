"""
Built-in fixture objects and morphisms for every context.

These are the structures the test suite and the ``catalog`` command work
with.  Everything is built from the named constructors in :py:mod:`monolight.core`,
so a fixture is exactly as trustworthy as those.
"""
from functools import lru_cache
from typing import Any, Dict, List, Tuple

import numpy as np

from .contexts import (
    AbelianTorsionContext,
    GroupTorsionContext,
    PrimaryTorsionContext,
    RingTorsionContext,
    TorsionContext,
    TrivialTorsionContext,
    XModTorsionContext,
)
from .core import abelian, groups, rings, xmod
from .core.abelian import AbHom, PresentedAbGroup
from .core.groups import GroupHom
from .core.matrices import IntMatrix
from .core.rings import RingHom
from .exceptions import UsageError


class Fixtures:
    """
    Named objects and named morphisms of one context.

    Args:
        objects: name to object
        morphisms: name to morphism
    """

    def __init__(self, objects: Dict[str, Any], morphisms: Dict[str, Any]):
        self.objects = dict(objects)
        self.morphisms = dict(morphisms)

    def object_list(self) -> List[Any]:
        return list(self.objects.values())

    def morphism_list(self) -> List[Any]:
        return list(self.morphisms.values())

    def __len__(self) -> int:
        return len(self.objects) + len(self.morphisms)


def _hom(domain: PresentedAbGroup, codomain: PresentedAbGroup, rows: List[List[int]]) -> AbHom:
    return AbHom(domain, codomain, IntMatrix.from_rows(rows, cols=domain.generators))


def _element_of_order(G: groups.FiniteGroup, n: int) -> int:
    return int(np.flatnonzero(G.element_orders == n)[0])


# --------------------------------------------
# Finitely generated abelian groups
# --------------------------------------------

@lru_cache(maxsize=None)
def abelian_fixtures() -> Fixtures:
    zero = abelian.zero_group()
    z = abelian.cyclic(0)
    z2, z4, z6, z12 = (abelian.cyclic(n) for n in (2, 4, 6, 12))
    z_z2, _, _, p_z, _ = abelian.direct_sum(z, z2)
    z_z4, _, _, _, p_z4 = abelian.direct_sum(z, z4)
    z2_z6 = PresentedAbGroup(2, IntMatrix.diagonal([2, 6]))
    objects = {
        'zero': zero,
        'z': z,
        'z2': z2,
        'z4': z4,
        'z6': z6,
        'z12': z12,
        'z+z2': z_z2,
        'z+z4': z_z4,
        'z2+z6': z2_z6,
    }
    morphisms = {
        'z+z2-z': p_z,
        'z4-z2': _hom(z4, z2, [[1]]),
        'z-z4': _hom(z, z4, [[1]]),
        'z-z-double': _hom(z, z, [[2]]),
        'z12-z6': _hom(z12, z6, [[1]]),
        'z2-z4': _hom(z2, z4, [[2]]),
        'zero-z4': abelian.zero_hom(zero, z4),
        'id-z+z4': abelian.identity(z_z4),
        'z+z4-z4': p_z4,
        'z2+z6-z6': _hom(z2_z6, z6, [[3, 1]]),
        'z-z+z4': _hom(z, z_z4, [[1], [1]]),
    }
    return Fixtures(objects, morphisms)


@lru_cache(maxsize=None)
def primary_fixtures() -> Fixtures:
    zero = abelian.zero_group()
    z2, z3, z4, z6, z9, z12 = (abelian.cyclic(n) for n in (2, 3, 4, 6, 9, 12))
    z3_z3, _, _, p_first, _ = abelian.direct_sum(z3, z3)
    objects = {
        'zero': zero,
        'z2': z2,
        'z3': z3,
        'z4': z4,
        'z6': z6,
        'z9': z9,
        'z12': z12,
        'z3+z3': z3_z3,
    }
    morphisms = {
        'z12-z6': _hom(z12, z6, [[1]]),
        'z12-z2': _hom(z12, z2, [[1]]),
        'z12-z4': _hom(z12, z4, [[1]]),
        'z4-z2': _hom(z4, z2, [[1]]),
        'z2-z4': _hom(z2, z4, [[2]]),
        'z6-z3': _hom(z6, z3, [[1]]),
        'z6-z2': _hom(z6, z2, [[1]]),
        'z3-z12': _hom(z3, z12, [[4]]),
        'z9-z3': _hom(z9, z3, [[1]]),
        'zero-z4': abelian.zero_hom(zero, z4),
        'id-z6': abelian.identity(z6),
        'z3+z3-z3': p_first,
    }
    return Fixtures(objects, morphisms)


# --------------------------------------------
# Finite groups
# --------------------------------------------

@lru_cache(maxsize=None)
def group_fixtures() -> Fixtures:
    one = groups.trivial_group()
    c2, c3 = groups.cyclic_group(2), groups.cyclic_group(3)
    v4, q8 = groups.klein_four(), groups.quaternion_group()
    s3, s4 = groups.symmetric_group(3), groups.symmetric_group(4)
    a4, a5 = groups.alternating_group(4), groups.alternating_group(5)
    d4 = groups.dihedral_group(4)
    a5_c2, p_a5, p_c2, _, _ = groups.direct_product(a5, c2)

    a3_in_s3 = groups.commutator_subgroup(s3.whole())
    a4_in_s4 = groups.commutator_subgroup(s4.whole())
    v4_in_s4 = groups.commutator_subgroup(a4_in_s4)
    objects = {
        '1': one,
        'c2': c2,
        'c3': c3,
        'v4': v4,
        's3': s3,
        'd4': d4,
        'q8': q8,
        'a4': a4,
        's4': s4,
        'a5': a5,
        'a5xc2': a5_c2,
    }
    morphisms = {
        's3-sign': groups.quotient(s3, a3_in_s3)[1],
        's4-sign': groups.quotient(s4, a4_in_s4)[1],
        's4-s3': groups.quotient(s4, v4_in_s4)[1],
        'a4-c3': groups.quotient(a4, groups.commutator_subgroup(a4.whole()))[1],
        'd4-v4': groups.quotient(d4, groups.commutator_subgroup(d4.whole()))[1],
        'q8-v4': groups.quotient(q8, groups.commutator_subgroup(q8.whole()))[1],
        'a5xc2-c2': p_c2,
        'a5xc2-a5': p_a5,
        'a3-s3': groups.subgroup_as_group(a3_in_s3)[1],
        'v4-s4': groups.subgroup_as_group(v4_in_s4)[1],
        'c2-s3': groups.subgroup_as_group(groups.subgroup_generated(s3, [_element_of_order(s3, 2)]))[1],
        'c3-a4': groups.subgroup_as_group(groups.subgroup_generated(a4, [_element_of_order(a4, 3)]))[1],
        'id-a5': groups.identity(a5),
        'a5-s4-trivial': groups.trivial_hom(a5, s4),
        'c2-1': groups.trivial_hom(c2, one),
    }
    return Fixtures(objects, morphisms)


# --------------------------------------------
# Finite commutative rings
# --------------------------------------------

def _reduction(R: rings.FiniteCommRing, S: rings.FiniteCommRing) -> RingHom:
    return RingHom(R, S, np.arange(R.order) % S.order)


@lru_cache(maxsize=None)
def ring_fixtures() -> Fixtures:
    z2, z3, z4, z6, z8, z9, z12 = (rings.zmod(n) for n in (2, 3, 4, 6, 8, 9, 12))
    field = rings.f4()
    z2_z4, _, p_z4 = rings.product_ring(z2, z4)
    v4_zero = rings.zero_multiplication_ring(groups.klein_four(), name='V4^0')
    zero = rings.zero_ring()
    objects = {
        'zero': zero,
        'z2': z2,
        'z3': z3,
        'z4': z4,
        'z6': z6,
        'z8': z8,
        'z9': z9,
        'z12': z12,
        'f4': field,
        'z2xz4': z2_z4,
        'v4zero': v4_zero,
    }
    morphisms = {
        'z8-z2': _reduction(z8, z2),
        'z8-z4': _reduction(z8, z4),
        'z4-z2': _reduction(z4, z2),
        'z6-z3': _reduction(z6, z3),
        'z6-z2': _reduction(z6, z2),
        'z12-z4': _reduction(z12, z4),
        'z9-z3': _reduction(z9, z3),
        'z2-z6': RingHom(z2, z6, [0, 3]),
        'z3-z6': RingHom(z3, z6, [0, 4, 2]),
        'id-f4': rings.identity(field),
        'z4-z8-zero': rings.zero_hom(z4, z8),
        'z2xz4-z4': p_z4,
        'v4zero-zero': rings.zero_hom(v4_zero, zero),
    }
    return Fixtures(objects, morphisms)


# --------------------------------------------
# Crossed modules
# --------------------------------------------

#: Pairs of crossed module fixtures whose every morphism is a fixture morphism
XMOD_MORPHISM_PAIRS: Tuple[Tuple[str, str], ...] = (
    ('a3>s3', 's3>s3'),
    ('s3>s3', 'c2>1'),
    ('s3>s3', 's3>s3'),
    ('c2>c2(0)', 'c2>1'),
    ('c2>c2(0)', 'c2>c2(0)'),
    ('c4>c4(2)', 'c2>c2(0)'),
    ('c3>c3', 'c3>c3'),
    ('1>c2', 'c2>c2(0)'),
    ('v4>v4(0)', 'c2>1'),
)


@lru_cache(maxsize=None)
def xmod_fixtures() -> Fixtures:
    one = groups.trivial_group()
    c2, c3, c4 = (groups.cyclic_group(n) for n in (2, 3, 4))
    v4, s3 = groups.klein_four(), groups.symmetric_group(3)
    objects = {
        '1': xmod.trivial_xmod(),
        's3>s3': xmod.conjugation_xmod(s3, name='S3>S3'),
        'a3>s3': xmod.conjugation_xmod(s3, groups.commutator_subgroup(s3.whole()), name='A3>S3'),
        'c2>c2(0)': xmod.central_xmod(groups.trivial_hom(c2, c2), name='C2>C2(0)'),
        'c2>1': xmod.trivial_action_xmod(c2, name='C2>1'),
        '1>c2': xmod.central_xmod(groups.trivial_hom(one, c2), name='1>C2'),
        'c3>c3': xmod.central_xmod(groups.identity(c3), name='C3>C3'),
        'c4>c4(2)': xmod.central_xmod(GroupHom(c4, c4, [0, 2, 0, 2]), name='C4>C4(2)'),
        'v4>v4(0)': xmod.central_xmod(groups.trivial_hom(v4, v4), name='V4>V4(0)'),
    }
    morphisms = {}
    for source, target in XMOD_MORPHISM_PAIRS:
        found = xmod.enumerate_xmod_morphisms(objects[source], objects[target])
        for i, f in enumerate(found):
            morphisms[f'{source}-{target}-{i}'] = f
    return Fixtures(objects, morphisms)


def fixtures_for(ctx: TorsionContext) -> Fixtures:
    """
    The fixture library for ``ctx``; the trivial torsion theory shares the
    library of its base category.

    Raises:
        UsageError: there is no library for this context
    """
    if isinstance(ctx, TrivialTorsionContext):
        return fixtures_for(ctx.base)
    if isinstance(ctx, PrimaryTorsionContext):
        return primary_fixtures()
    if isinstance(ctx, AbelianTorsionContext):
        return abelian_fixtures()
    if isinstance(ctx, GroupTorsionContext):
        return group_fixtures()
    if isinstance(ctx, RingTorsionContext):
        return ring_fixtures()
    if isinstance(ctx, XModTorsionContext):
        return xmod_fixtures()
    raise UsageError(f'no fixture library for the {ctx.tag} context')
