#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Crossed modules of finite groups.

A crossed module is a homomorphism ``boundary: A -> B`` together with a left
action of ``B`` on ``A`` stored as a full ``|B| x |A|`` table:
``action[b, a]`` is the index of ``b . a``.  Morphisms are pairs
``(f1: A -> A', f0: B -> B')``.
"""
from itertools import product
from typing import Any, List, Optional, Tuple

import numpy as np
import structlog

from ..exceptions import AxiomViolation, NotASubobjectError, NotNormalError, ValidationError, WellDefinednessError
from . import groups
from .groups import FiniteGroup, GroupHom, Subgroup


logger = structlog.get_logger(__name__)


__all__ = [
    'CrossedModule',
    'XModMorphism',
    'XModFactorisation',
    'validate_xmod',
    'conjugation_xmod',
    'central_xmod',
    'trivial_xmod',
    'identity',
    'zero_morphism',
    'compose',
    'is_mono',
    'is_normal_epi',
    'is_iso',
    'sub_xmod',
    'is_normal_sub_xmod',
    'xmod_kernel',
    'xmod_image',
    'xmod_quotient',
    'xmod_reflect',
    'torsion_part',
    'xmod_ml_factorise',
    'lift',
    'induced_from_quotient',
    'enumerate_xmod_morphisms',
]


def _frozen(array: Any) -> np.ndarray:
    array = np.array(array, dtype=np.int64)
    array.flags.writeable = False
    return array


class CrossedModule:
    """
    A crossed module ``boundary: A -> B`` with ``B`` acting on ``A``.

    Args:
        A: the top group
        B: the bottom group
        boundary: a homomorphism ``A -> B``
        action: ``action[b, a]`` is ``b . a``

    Keyword Args:
        name: a short name used in reports
        validate: if ``True`` (the default) check every axiom over all pairs

    Raises:
        AxiomViolation: ``not-an-action``, ``equivariance`` or ``peiffer``
    """

    def __init__(
        self,
        A: FiniteGroup,
        B: FiniteGroup,
        boundary: GroupHom,
        action: Any,
        name: Optional[str] = None,
        validate: bool = True
    ):
        self.A = A
        self.B = B
        self.boundary = boundary
        self.action = _frozen(action)
        self.name = name
        if validate:
            self._validate()

    def _validate(self) -> None:
        A, B, alpha, act = self.A, self.B, self.boundary.map, self.action
        if self.boundary.domain != A or self.boundary.codomain != B:
            raise ValidationError('the boundary must be a homomorphism from A to B')
        if act.shape != (B.order, A.order):
            raise AxiomViolation('not-an-action', message=f'axiom violated: not-an-action (table must be {B.order}x{A.order})')
        if ((act < 0) | (act >= A.order)).any():
            raise AxiomViolation('not-an-action', message='axiom violated: not-an-action (index out of range)')
        if not np.array_equal(act[0], np.arange(A.order)):
            raise AxiomViolation('not-an-action', message='axiom violated: not-an-action (the identity does not act trivially)')
        # each b acts by a homomorphism: b.(a1 a2) = (b.a1)(b.a2)
        bad = np.argwhere(act[:, A.table] != A.table[act[:, :, None], act[:, None, :]])
        if bad.size:
            b, a1, a2 = bad[0]
            raise AxiomViolation('not-an-action', witness={'b': int(b), 'a1': int(a1), 'a2': int(a2)})
        # (b1 b2).a = b1.(b2.a)
        bad = np.argwhere(act[B.table] != act[:, act])
        if bad.size:
            b1, b2, a = bad[0]
            raise AxiomViolation('not-an-action', witness={'b1': int(b1), 'b2': int(b2), 'a': int(a)})
        # boundary(b.a) = b boundary(a) b^-1
        bad = np.argwhere(alpha[act] != B.table[B.table[:, alpha], B.inverses[:, None]])
        if bad.size:
            b, a = bad[0]
            raise AxiomViolation('equivariance', witness={'b': int(b), 'a': int(a)})
        # boundary(a).a1 = a a1 a^-1
        bad = np.argwhere(act[alpha, :] != A.table[A.table, A.inverses[:, None]])
        if bad.size:
            a, a1 = bad[0]
            raise AxiomViolation('peiffer', witness={'a': int(a), 'a1': int(a1)})

    def act(self, b: int, a: int) -> int:
        return int(self.action[b, a])

    @property
    def orders(self) -> Tuple[int, int]:
        return self.A.order, self.B.order

    @property
    def is_trivial(self) -> bool:
        return self.A.order == 1 and self.B.order == 1

    def boundary_kernel(self) -> Subgroup:
        """
        ``Ker(boundary)``; always central in ``A``.
        """
        return groups.kernel(self.boundary)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (
            self.A == other.A
            and self.B == other.B
            and np.array_equal(self.boundary.map, other.boundary.map)
            and np.array_equal(self.action, other.action)
        )

    def __hash__(self) -> int:
        return hash((hash(self.A), hash(self.B), self.boundary.map.tobytes(), self.action.tobytes()))

    def __str__(self) -> str:
        return self.name or f'X{self.A.order}.{self.B.order}'

    def __repr__(self) -> str:
        return f'CrossedModule(name={self.name!r}, A={self.A!r}, B={self.B!r})'


def validate_xmod(A: FiniteGroup, B: FiniteGroup, boundary: GroupHom, action: Any, name: Optional[str] = None) -> CrossedModule:
    return CrossedModule(A, B, boundary, action, name=name)


class XModMorphism:
    """
    A morphism ``(f1, f0)`` of crossed modules.

    Raises:
        WellDefinednessError: the square with the boundaries does not commute
            or the action is not preserved
    """

    def __init__(self, domain: CrossedModule, codomain: CrossedModule, f1: GroupHom, f0: GroupHom, validate: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.f1 = f1
        self.f0 = f0
        if validate:
            self.validate()

    def validate(self) -> None:
        X, Y = self.domain, self.codomain
        if self.f1.domain != X.A or self.f1.codomain != Y.A or self.f0.domain != X.B or self.f0.codomain != Y.B:
            raise WellDefinednessError('the components do not match the crossed modules')
        if not np.array_equal(Y.boundary.map[self.f1.map], self.f0.map[X.boundary.map]):
            raise WellDefinednessError('the boundary square does not commute')
        # f1(b.a) = f0(b).f1(a)
        left = self.f1.map[X.action]
        right = Y.action[np.ix_(self.f0.map, self.f1.map)]
        if not np.array_equal(left, right):
            raise WellDefinednessError('the morphism does not preserve the action')

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XModMorphism):
            return NotImplemented
        return self.f1 == other.f1 and self.f0 == other.f0

    def __hash__(self) -> int:
        return hash((hash(self.f1), hash(self.f0)))

    def __repr__(self) -> str:
        return f'XModMorphism({self.domain} -> {self.codomain}, f1={self.f1.map.tolist()}, f0={self.f0.map.tolist()})'


class XModFactorisation:
    """
    The explicit factorisation ``f = m_star . e`` with
    ``e = (pi, 1_B)`` the quotient of ``A`` by ``Ker(boundary) & Ker(f1)``.
    """

    def __init__(self, e: XModMorphism, m_star: XModMorphism, kernel: Subgroup):
        self.e = e
        self.m_star = m_star
        self.kernel = kernel

    @property
    def middle(self) -> CrossedModule:
        return self.e.codomain


# --------------------------------------------
# Constructors
# --------------------------------------------

def conjugation_xmod(G: FiniteGroup, N: Optional[Subgroup] = None, name: Optional[str] = None) -> CrossedModule:
    """
    The inclusion of a normal subgroup ``N`` into ``G``, with ``G`` acting by
    conjugation.  ``N`` defaults to ``G``.

    Raises:
        NotNormalError: ``N`` is not normal
    """
    if N is None:
        N = G.whole()
    if not groups.is_normal(N):
        raise NotNormalError('only normal subgroups give conjugation crossed modules')
    K, embedding = groups.subgroup_as_group(N, name=f'{G}' if N.order == G.order else None)
    position = np.full(G.order, -1, dtype=np.int64)
    position[embedding.map] = np.arange(K.order)
    n = embedding.map
    action = position[G.table[G.table[:, n], G.inverses[:, None]]]
    return CrossedModule(K, G, embedding, action, name=name, validate=False)


def central_xmod(boundary: GroupHom, name: Optional[str] = None) -> CrossedModule:
    """
    ``boundary`` with the trivial action; a crossed module exactly when the
    domain is abelian and the image central.
    """
    action = np.tile(np.arange(boundary.domain.order), (boundary.codomain.order, 1))
    return CrossedModule(boundary.domain, boundary.codomain, boundary, action, name=name)


def trivial_action_xmod(A: FiniteGroup, name: Optional[str] = None) -> CrossedModule:
    """
    ``A -> 1`` for an abelian ``A``: the torsion objects of the crossed
    module torsion theory.

    Raises:
        AxiomViolation: ``A`` is not abelian
    """
    return central_xmod(groups.trivial_hom(A, groups.trivial_group()), name=name)


def trivial_xmod() -> CrossedModule:
    one = groups.trivial_group()
    return CrossedModule(one, one, groups.identity(one), [[0]], name='1', validate=False)


# --------------------------------------------
# Morphism algebra
# --------------------------------------------

def identity(X: CrossedModule) -> XModMorphism:
    return XModMorphism(X, X, groups.identity(X.A), groups.identity(X.B), validate=False)


def zero_morphism(X: CrossedModule, Y: CrossedModule) -> XModMorphism:
    return XModMorphism(X, Y, groups.trivial_hom(X.A, Y.A), groups.trivial_hom(X.B, Y.B), validate=False)


def compose(g: XModMorphism, f: XModMorphism) -> XModMorphism:
    if f.codomain != g.domain:
        raise WellDefinednessError('cannot compose: codomain of f is not the domain of g')
    return XModMorphism(f.domain, g.codomain, groups.compose(g.f1, f.f1), groups.compose(g.f0, f.f0), validate=False)


def is_mono(f: XModMorphism) -> bool:
    return groups.is_mono(f.f1) and groups.is_mono(f.f0)


def is_normal_epi(f: XModMorphism) -> bool:
    return groups.is_epi(f.f1) and groups.is_epi(f.f0)


def is_iso(f: XModMorphism) -> bool:
    return groups.is_iso(f.f1) and groups.is_iso(f.f0)


# --------------------------------------------
# Sub-crossed modules, kernels, images, quotients
# --------------------------------------------

def sub_xmod(X: CrossedModule, N: Subgroup, M: Subgroup, name: Optional[str] = None) -> Tuple[CrossedModule, XModMorphism]:
    """
    The sub-crossed module ``N -> M`` of ``X`` with the restricted boundary
    and action.

    Raises:
        NotASubobjectError: ``boundary(N)`` is not inside ``M`` or ``M`` does
            not preserve ``N``
    """
    if N.ambient != X.A or M.ambient != X.B:
        raise NotASubobjectError('the subgroups do not live in this crossed module')
    n, m = N.array, M.array
    if not np.isin(X.boundary.map[n], m).all():
        raise NotASubobjectError('the boundary does not carry N into M')
    if not np.isin(X.action[np.ix_(m, n)], n).all():
        raise NotASubobjectError('M does not preserve N')
    K, i1 = groups.subgroup_as_group(N)
    L, i0 = groups.subgroup_as_group(M)
    position_a = np.full(X.A.order, -1, dtype=np.int64)
    position_a[n] = np.arange(len(n))
    position_b = np.full(X.B.order, -1, dtype=np.int64)
    position_b[m] = np.arange(len(m))
    boundary = GroupHom(K, L, position_b[X.boundary.map[n]], validate=False)
    action = position_a[X.action[np.ix_(m, n)]]
    S = CrossedModule(K, L, boundary, action, name=name, validate=False)
    return S, XModMorphism(S, X, i1, i0, validate=False)


def is_normal_sub_xmod(X: CrossedModule, N: Subgroup, M: Subgroup) -> bool:
    """
    ``N -> M`` is normal in ``X`` when it is a sub-crossed module, ``M`` is
    normal in ``B``, ``B`` preserves ``N`` and ``(m . a) a^-1`` lies in ``N``
    for all ``m`` in ``M`` and ``a`` in ``A``.
    """
    n, m = N.array, M.array
    A = X.A
    if not np.isin(X.boundary.map[n], m).all():
        return False
    if not (groups.is_normal(N) and groups.is_normal(M)):
        return False
    if not np.isin(X.action[:, n], n).all():
        return False
    displaced = A.table[X.action[m, :], A.inverses[None, :]]
    return bool(np.isin(displaced, n).all())


def xmod_kernel(f: XModMorphism) -> Tuple[CrossedModule, XModMorphism]:
    """
    ``Ker(f1) -> Ker(f0)`` with its embedding into the domain.
    """
    N = groups.kernel(f.f1)
    M = groups.kernel(f.f0)
    return sub_xmod(f.domain, N, M)


def xmod_image(f: XModMorphism) -> Tuple[CrossedModule, XModMorphism, XModMorphism]:
    """
    The regular image ``f1(A) -> f0(B)``.

    Returns:
        ``(I, e, m)`` with ``e`` componentwise onto, ``m`` the embedding and
        ``f = m . e``
    """
    I, mono = sub_xmod(f.codomain, groups.image(f.f1), groups.image(f.f0))
    return I, lift(mono, f), mono


def xmod_quotient(X: CrossedModule, N: Subgroup, M: Subgroup) -> Tuple[CrossedModule, XModMorphism]:
    """
    ``A/N -> B/M`` with the induced boundary and action.

    Raises:
        NotNormalError: ``N -> M`` is not a normal sub-crossed module
    """
    if N.ambient != X.A or M.ambient != X.B:
        raise NotASubobjectError('the subgroups do not live in this crossed module')
    if not is_normal_sub_xmod(X, N, M):
        raise NotNormalError(f'({N.order}, {M.order}) is not a normal sub-crossed module of {X}')
    QA, pi_a = groups.quotient(X.A, N)
    QB, pi_b = groups.quotient(X.B, M)
    boundary = groups.induced_from_quotient(pi_a, groups.compose(pi_b, X.boundary))
    rep_a = np.full(QA.order, -1, dtype=np.int64)
    rep_a[pi_a.map[::-1]] = np.arange(X.A.order)[::-1]
    rep_b = np.full(QB.order, -1, dtype=np.int64)
    rep_b[pi_b.map[::-1]] = np.arange(X.B.order)[::-1]
    action = pi_a.map[X.action[np.ix_(rep_b, rep_a)]]
    Q = CrossedModule(QA, QB, boundary, action, name=f'{X}/({N.order},{M.order})' if X.name else None)
    return Q, XModMorphism(X, Q, pi_a, pi_b)


def xmod_reflect(X: CrossedModule) -> Tuple[CrossedModule, XModMorphism]:
    """
    The reflection onto normal monomorphisms: ``boundary(A) -> B`` with the
    conjugation action, and the unit ``(A -> boundary(A), 1_B)``.
    """
    R = conjugation_xmod(X.B, groups.image(X.boundary))
    f1 = groups.lift(R.boundary, X.boundary)
    return R, XModMorphism(X, R, f1, groups.identity(X.B), validate=False)


def torsion_part(X: CrossedModule) -> Tuple[CrossedModule, XModMorphism]:
    """
    ``Ker(boundary) -> 1`` and its embedding: the largest sub-crossed
    module that is an abelian group over the trivial group.
    """
    return sub_xmod(X, X.boundary_kernel(), X.B.trivial_subgroup())


def xmod_ml_factorise(f: XModMorphism) -> XModFactorisation:
    """
    Factor ``f`` through ``A / (Ker(boundary) & Ker(f1))``, keeping ``B``.

    ``e = (pi, 1_B)`` has kernel ``Ker(boundary) & Ker(f1) -> 1`` and the
    second factor ``m_star = (phi1, f0)`` has ``phi1 . pi = f1``.
    """
    X = f.domain
    kills = np.flatnonzero((X.boundary.map == 0) & (f.f1.map == 0))
    K = Subgroup(X.A, kills, validate=False)
    middle, e = xmod_quotient(X, K, X.B.trivial_subgroup())
    # B/1 is B with the same numbering, so e is (pi, 1_B) on the nose
    phi1 = groups.induced_from_quotient(e.f1, f.f1)
    phi0 = groups.GroupHom(middle.B, f.codomain.B, f.f0.map, validate=False)
    m_star = XModMorphism(middle, f.codomain, phi1, phi0)
    logger.debug('xmod.ml_factorise', domain=str(X), codomain=str(f.codomain), kernel_order=K.order)
    return XModFactorisation(e, m_star, K)


def lift(mono: XModMorphism, f: XModMorphism) -> XModMorphism:
    """
    Factor ``f`` through a componentwise injective ``mono``.
    """
    if mono.codomain != f.codomain:
        raise NotASubobjectError('lift needs a common codomain')
    return XModMorphism(f.domain, mono.domain, groups.lift(mono.f1, f.f1), groups.lift(mono.f0, f.f0), validate=False)


def induced_from_quotient(proj: XModMorphism, f: XModMorphism) -> XModMorphism:
    if proj.domain != f.domain:
        raise WellDefinednessError('induced_from_quotient needs a common domain')
    return XModMorphism(
        proj.codomain,
        f.codomain,
        groups.induced_from_quotient(proj.f1, f.f1),
        groups.induced_from_quotient(proj.f0, f.f0),
        validate=False
    )


def enumerate_xmod_morphisms(X: CrossedModule, Y: CrossedModule) -> List[XModMorphism]:
    """
    Every morphism ``X -> Y``: pairs of group homs that commute with the
    boundaries and preserve the action.
    """
    bottoms = groups.enumerate_homs(X.B, Y.B)
    tops = groups.enumerate_homs(X.A, Y.A)
    found = []
    for f1, f0 in product(tops, bottoms):
        candidate = XModMorphism(X, Y, f1, f0, validate=False)
        try:
            candidate.validate()
        except WellDefinednessError:
            continue
        found.append(candidate)
    logger.debug('xmod.enumerate_morphisms', domain=str(X), codomain=str(Y), count=len(found))
    return found
