#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Finite commutative rings, not necessarily unital, as a pair of tables.

Index 0 is the additive zero.  The additive group is a
:py:class:`~monolight.core.groups.FiniteGroup`, so additive questions
(generation, cosets, hom enumeration) go through the group machinery.
"""
from functools import cached_property
from typing import Any, Iterable, List, Optional, Tuple

import numpy as np
import structlog

from ..exceptions import AxiomViolation, NotASubobjectError, NotNormalError, ValidationError, WellDefinednessError
from . import groups
from .groups import FiniteGroup, GroupHom


logger = structlog.get_logger(__name__)


__all__ = [
    'FiniteCommRing',
    'Subring',
    'Ideal',
    'RingHom',
    'RingPullback',
    'zmod',
    'zero_ring',
    'f4',
    'zero_multiplication_ring',
    'product_ring',
    'identity',
    'zero_hom',
    'compose',
    'nilpotent_elements',
    'nilradical',
    'is_reduced',
    'is_nilpotent_ring',
    'is_ideal',
    'ideal_generated',
    'ideals',
    'quotient_ring',
    'kernel',
    'image',
    'lift',
    'induced_from_quotient',
    'pullback',
    'pullback_map',
    'enumerate_ring_homs',
    'is_mono',
    'is_epi',
    'is_iso',
]


def _frozen(array: Any) -> np.ndarray:
    array = np.array(array, dtype=np.int64)
    array.flags.writeable = False
    return array


class FiniteCommRing:
    """
    A finite commutative ring.

    Args:
        add: the addition table; must be an abelian group with zero at index 0
        mul: the multiplication table

    Keyword Args:
        name: a short name used in reports
        validate: if ``True`` (the default) check every ring axiom

    Raises:
        AxiomViolation: one of ``additive-group``, ``closure``,
            ``commutativity``, ``associativity`` or ``distributivity``
    """

    def __init__(self, add: Any, mul: Any, name: Optional[str] = None, validate: bool = True):
        self.add = _frozen(add)
        self.mul = _frozen(mul)
        self.name = name
        if validate:
            self._validate()
        self.negatives = _frozen(np.argmax(self.add == 0, axis=1))

    def _validate(self) -> None:
        A, M = self.add, self.mul
        if A.ndim != 2 or A.shape[0] != A.shape[1] or M.shape != A.shape:
            raise ValidationError('addition and multiplication tables must be square and the same size')
        try:
            groups.validate_group(A)
        except AxiomViolation as exc:
            raise AxiomViolation(
                'additive-group',
                witness=exc.witness,
                message=f'axiom violated: additive-group ({exc.axiom})'
            ) from exc
        if not np.array_equal(A, A.T):
            raise AxiomViolation('additive-group', message='axiom violated: additive-group (addition is not commutative)')
        n = A.shape[0]
        bad = np.argwhere((M < 0) | (M >= n))
        if bad.size:
            i, j = bad[0]
            raise AxiomViolation('closure', witness={'a': int(i), 'b': int(j)})
        bad = np.argwhere(M != M.T)
        if bad.size:
            i, j = bad[0]
            raise AxiomViolation('commutativity', witness={'a': int(i), 'b': int(j)})
        bad = np.argwhere(M[M] != M[:, M])
        if bad.size:
            a, b, c = bad[0]
            raise AxiomViolation('associativity', witness={'a': int(a), 'b': int(b), 'c': int(c)})
        # a(b + c) = ab + ac
        bad = np.argwhere(M[:, A] != A[M[:, :, None], M[:, None, :]])
        if bad.size:
            a, b, c = bad[0]
            raise AxiomViolation('distributivity', witness={'a': int(a), 'b': int(b), 'c': int(c)})

    @property
    def order(self) -> int:
        return self.add.shape[0]

    @cached_property
    def additive_group(self) -> FiniteGroup:
        return FiniteGroup(self.add, name=f'({self})+', validate=False)

    def plus(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def whole(self) -> "Ideal":
        return Ideal(self, range(self.order), validate=False)

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, [0], validate=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteCommRing):
            return NotImplemented
        return np.array_equal(self.add, other.add) and np.array_equal(self.mul, other.mul)

    def __hash__(self) -> int:
        return hash((self.order, self.add.tobytes(), self.mul.tobytes()))

    def __str__(self) -> str:
        return self.name or f'R{self.order}'

    def __repr__(self) -> str:
        return f'FiniteCommRing(name={self.name!r}, order={self.order})'


class Subring:
    """
    A subset of ``ambient`` closed under addition, negation and multiplication.

    Raises:
        ValidationError: the elements are out of range or not closed
    """

    def __init__(self, ambient: FiniteCommRing, elements: Iterable[int], validate: bool = True):
        self.ambient = ambient
        self.elements: Tuple[int, ...] = tuple(sorted({int(x) for x in elements}))
        if validate:
            self._validate()

    def _validate(self) -> None:
        R = self.ambient
        if any(x < 0 or x >= R.order for x in self.elements):
            raise ValidationError('element indices out of range')
        s = self.array
        closed = (
            0 in self.elements
            and np.isin(R.add[np.ix_(s, s)], s).all()
            and np.isin(R.mul[np.ix_(s, s)], s).all()
        )
        if not closed:
            raise ValidationError('the elements do not form a subring')

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def __contains__(self, x: int) -> bool:
        return int(x) in self.elements

    def as_ring(self, name: Optional[str] = None) -> Tuple[FiniteCommRing, "RingHom"]:
        """
        Re-index as a ring in its own right.

        Returns:
            ``(S, embedding)`` with ``embedding: S -> ambient``
        """
        R = self.ambient
        s = self.array
        position = np.full(R.order, -1, dtype=np.int64)
        position[s] = np.arange(len(s))
        S = FiniteCommRing(
            position[R.add[np.ix_(s, s)]],
            position[R.mul[np.ix_(s, s)]],
            name=name,
            validate=False
        )
        return S, RingHom(S, R, s, validate=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subring):
            return NotImplemented
        return self.ambient == other.ambient and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self.ambient}, order={self.order})'


class Ideal(Subring):
    """
    A subring absorbing multiplication by the whole ring.
    """

    def _validate(self) -> None:
        super()._validate()
        if not np.isin(self.ambient.mul[:, self.array], self.array).all():
            raise ValidationError('the subring is not an ideal')


class RingHom:
    """
    A ring homomorphism given by the image of every element.

    Raises:
        WellDefinednessError: the map does not preserve sums or products
    """

    def __init__(self, domain: FiniteCommRing, codomain: FiniteCommRing, mapping: Any, validate: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.map = _frozen(mapping)
        if validate:
            self._validate()

    def _validate(self) -> None:
        m = self.map
        A, B = self.domain, self.codomain
        if m.shape != (A.order,):
            raise WellDefinednessError(f'a hom out of a ring of order {A.order} needs that many images')
        if ((m < 0) | (m >= B.order)).any():
            raise WellDefinednessError('image index out of range')
        if m[0] != 0:
            raise WellDefinednessError('zero must map to zero')
        if not np.array_equal(m[A.add], B.add[np.ix_(m, m)]):
            raise WellDefinednessError('the map does not preserve addition')
        if not np.array_equal(m[A.mul], B.mul[np.ix_(m, m)]):
            raise WellDefinednessError('the map does not preserve multiplication')

    @property
    def additive(self) -> GroupHom:
        return GroupHom(self.domain.additive_group, self.codomain.additive_group, self.map, validate=False)

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingHom):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and np.array_equal(self.map, other.map)

    def __hash__(self) -> int:
        return hash(self.map.tobytes())

    def __repr__(self) -> str:
        return f'RingHom({self.domain} -> {self.codomain}, {self.map.tolist()})'


class RingPullback:
    """
    ``P = {(a, b) : f(a) = g(b)}`` with its projections; ``embedding`` is
    ``P -> A x B``.
    """

    def __init__(self, obj: FiniteCommRing, p1: RingHom, p2: RingHom, f: RingHom, g: RingHom, embedding: RingHom):
        self.obj = obj
        self.p1 = p1
        self.p2 = p2
        self.f = f
        self.g = g
        self.embedding = embedding


# --------------------------------------------
# Named rings
# --------------------------------------------

def zmod(n: int) -> FiniteCommRing:
    """
    ``Z/n`` with residue ``k`` at index ``k``; ``zmod(1)`` is the zero ring.
    """
    if n < 1:
        raise ValueError('the modulus must be positive')
    k = np.arange(n)
    return FiniteCommRing((k[:, None] + k[None, :]) % n, (k[:, None] * k[None, :]) % n, name=f'Z/{n}', validate=False)


def zero_ring() -> FiniteCommRing:
    return FiniteCommRing([[0]], [[0]], name='0', validate=False)


def f4() -> FiniteCommRing:
    """
    The field with four elements: index ``c0 + 2 c1`` stands for
    ``c0 + c1 x`` with ``x^2 = x + 1``.
    """
    k = np.arange(4)

    def times(a: int, b: int) -> int:
        a0, a1, b0, b1 = a & 1, a >> 1, b & 1, b >> 1
        # (a0 + a1 x)(b0 + b1 x) with x^2 = x + 1 over F2
        c0 = (a0 * b0 + a1 * b1) % 2
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        return c0 + 2 * c1

    mul = [[times(a, b) for b in range(4)] for a in range(4)]
    return FiniteCommRing(k[:, None] ^ k[None, :], mul, name='F4', validate=False)


def zero_multiplication_ring(additive: FiniteGroup, name: Optional[str] = None) -> FiniteCommRing:
    """
    An abelian group with every product zero.
    """
    if not additive.is_abelian:
        raise AxiomViolation('additive-group', message='axiom violated: additive-group (not abelian)')
    n = additive.order
    return FiniteCommRing(additive.table, np.zeros((n, n), dtype=np.int64), name=name or f'{additive}^0')


def product_ring(R: FiniteCommRing, S: FiniteCommRing) -> Tuple[FiniteCommRing, RingHom, RingHom]:
    """
    ``R x S`` with ``(r, s)`` at index ``r * |S| + s``.

    Returns:
        ``(R x S, p_R, p_S)``
    """
    n, m = R.order, S.order

    def combine(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a[:, None, :, None] * m + b[None, :, None, :]).reshape(n * m, n * m)

    name = f'{R}x{S}' if R.name and S.name else None
    P = FiniteCommRing(combine(R.add, S.add), combine(R.mul, S.mul), name=name, validate=False)
    indices = np.arange(n * m)
    return P, RingHom(P, R, indices // m, validate=False), RingHom(P, S, indices % m, validate=False)


# --------------------------------------------
# Morphism algebra
# --------------------------------------------

def identity(R: FiniteCommRing) -> RingHom:
    return RingHom(R, R, np.arange(R.order), validate=False)


def zero_hom(R: FiniteCommRing, S: FiniteCommRing) -> RingHom:
    return RingHom(R, S, np.zeros(R.order, dtype=np.int64), validate=False)


def compose(g: RingHom, f: RingHom) -> RingHom:
    if f.codomain != g.domain:
        raise WellDefinednessError('cannot compose: codomain of f is not the domain of g')
    return RingHom(f.domain, g.codomain, g.map[f.map], validate=False)


def is_mono(f: RingHom) -> bool:
    return len(np.unique(f.map)) == f.domain.order


def is_epi(f: RingHom) -> bool:
    return len(np.unique(f.map)) == f.codomain.order


def is_iso(f: RingHom) -> bool:
    return f.domain.order == f.codomain.order and is_mono(f)


# --------------------------------------------
# Nilpotents and ideals
# --------------------------------------------

def nilpotent_elements(R: FiniteCommRing) -> np.ndarray:
    """
    A boolean mask of the elements with ``a^k = 0`` for some ``1 <= k <= |R|``.
    """
    everything = np.arange(R.order)
    power = everything.copy()
    nilpotent = power == 0
    for _ in range(R.order):
        power = R.mul[power, everything]
        nilpotent |= power == 0
    return nilpotent


def nilradical(R: FiniteCommRing) -> Ideal:
    """
    The ideal of nilpotent elements.
    """
    return Ideal(R, np.flatnonzero(nilpotent_elements(R)), validate=False)


def is_reduced(R: FiniteCommRing) -> bool:
    return nilradical(R).order == 1


def is_nilpotent_ring(R: FiniteCommRing) -> bool:
    """
    Every element nilpotent; for a finite commutative ring this is the same
    as some power of the ring vanishing.
    """
    return bool(nilpotent_elements(R).all())


def is_ideal(R: FiniteCommRing, elements: Iterable[int]) -> bool:
    try:
        Ideal(R, elements)
    except ValidationError:
        return False
    return True


def ideal_generated(R: FiniteCommRing, elements: Iterable[int]) -> Ideal:
    """
    The smallest ideal containing ``elements``: the additive subgroup
    generated by the elements and all their multiples.
    """
    current = np.unique(np.array([0] + list(elements), dtype=np.int64))
    while True:
        multiples = np.unique(R.mul[:, current])
        grown = groups.subgroup_generated(R.additive_group, np.union1d(current, multiples).tolist()).array
        if len(grown) == len(current):
            return Ideal(R, grown, validate=False)
        current = grown


def ideals(R: FiniteCommRing) -> List[Ideal]:
    """
    Every ideal, as joins of principal ideals, smallest first.
    """
    principal = {}
    for x in range(R.order):
        I = ideal_generated(R, [x])
        principal[I.elements] = I
    found = dict(principal)
    frontier = list(principal.values())
    while frontier:
        I = frontier.pop()
        for J in list(principal.values()):
            if set(J.elements) <= set(I.elements):
                continue
            joined = ideal_generated(R, I.elements + J.elements)
            if joined.elements not in found:
                found[joined.elements] = joined
                frontier.append(joined)
    return sorted(found.values(), key=lambda I: (I.order, I.elements))


# --------------------------------------------
# Quotients, kernels and images
# --------------------------------------------

def quotient_ring(R: FiniteCommRing, I: Subring) -> Tuple[FiniteCommRing, RingHom]:
    """
    ``R / I`` with cosets numbered by their least element.

    Raises:
        NotNormalError: ``I`` is not an ideal
    """
    if I.ambient != R:
        raise NotASubobjectError('the ideal does not live in this ring')
    if not is_ideal(R, I.elements):
        raise NotNormalError(f'a subring of order {I.order} is not an ideal of {R}')
    labels = np.full(R.order, -1, dtype=np.int64)
    representatives: List[int] = []
    for a in range(R.order):
        if labels[a] < 0:
            labels[R.add[a, I.array]] = len(representatives)
            representatives.append(a)
    reps = np.array(representatives, dtype=np.int64)
    Q = FiniteCommRing(
        labels[R.add[np.ix_(reps, reps)]],
        labels[R.mul[np.ix_(reps, reps)]],
        name=f'{R}/{I.order}' if R.name else None,
        validate=False
    )
    return Q, RingHom(R, Q, labels, validate=False)


def kernel(f: RingHom) -> Ideal:
    return Ideal(f.domain, np.flatnonzero(f.map == 0), validate=False)


def image(f: RingHom) -> Subring:
    return Subring(f.codomain, np.unique(f.map), validate=False)


def lift(mono: RingHom, f: RingHom) -> RingHom:
    """
    Factor ``f`` through the injective ``mono``.

    Raises:
        NotASubobjectError: ``f`` leaves the image of ``mono``
    """
    if mono.codomain != f.codomain:
        raise NotASubobjectError('lift needs a common codomain')
    preimage = np.full(mono.codomain.order, -1, dtype=np.int64)
    preimage[mono.map] = np.arange(mono.domain.order)
    lifted = preimage[f.map]
    if (lifted < 0).any():
        raise NotASubobjectError('the morphism does not factor through the subring')
    return RingHom(f.domain, mono.domain, lifted, validate=False)


def induced_from_quotient(proj: RingHom, f: RingHom) -> RingHom:
    """
    The unique ``m`` with ``m . proj = f`` for a surjection ``proj``.

    Raises:
        WellDefinednessError: ``proj`` is not onto or ``f`` does not kill its kernel
    """
    if proj.domain != f.domain:
        raise WellDefinednessError('induced_from_quotient needs a common domain')
    Q = proj.codomain
    representative = np.full(Q.order, -1, dtype=np.int64)
    representative[proj.map[::-1]] = np.arange(proj.domain.order)[::-1]
    if (representative < 0).any():
        raise WellDefinednessError('the quotient map is not surjective')
    induced = f.map[representative]
    if not np.array_equal(induced[proj.map], f.map):
        raise WellDefinednessError('the morphism does not factor through the quotient')
    return RingHom(Q, f.codomain, induced, validate=False)


def pullback(f: RingHom, g: RingHom) -> RingPullback:
    if f.codomain != g.codomain:
        raise WellDefinednessError('pullback needs a common codomain')
    S, p_a, p_b = product_ring(f.domain, g.domain)
    pairs = np.flatnonzero(f.map[p_a.map] == g.map[p_b.map])
    P, embedding = Subring(S, pairs, validate=False).as_ring()
    return RingPullback(P, compose(p_a, embedding), compose(p_b, embedding), f, g, embedding)


def pullback_map(square: RingPullback, a: RingHom, b: RingHom) -> RingHom:
    m = square.g.domain.order
    pair = RingHom(a.domain, square.embedding.codomain, a.map * m + b.map, validate=False)
    return lift(square.embedding, pair)


# --------------------------------------------
# Enumeration
# --------------------------------------------

def enumerate_ring_homs(A: FiniteCommRing, B: FiniteCommRing) -> List[RingHom]:
    """
    Every ring homomorphism ``A -> B``: the additive homs that also
    preserve products.
    """
    homs = []
    for additive in groups.enumerate_homs(A.additive_group, B.additive_group):
        m = additive.map
        if np.array_equal(m[A.mul], B.mul[np.ix_(m, m)]):
            homs.append(RingHom(A, B, m, validate=False))
    logger.debug('rings.enumerate_ring_homs', domain=str(A), codomain=str(B), count=len(homs))
    return homs
