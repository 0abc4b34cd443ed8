#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Finite groups given by multiplication tables.

Elements are the indices ``0 .. n-1`` and index 0 is always the identity.
Subgroups are sets of indices inside an ambient group; quotients, kernels and
pullbacks produce new tables.
"""
from collections import deque
from functools import cached_property
from itertools import product
from typing import Any, Callable, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import structlog
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, DihedralGroup, SymmetricGroup

from ..exceptions import (
    AxiomViolation,
    NotASubobjectError,
    NotNormalError,
    ValidationError,
    WellDefinednessError,
)


logger = structlog.get_logger(__name__)


__all__ = [
    'FiniteGroup',
    'Subgroup',
    'GroupHom',
    'GroupPullback',
    'validate_group',
    'trivial_group',
    'cyclic_group',
    'klein_four',
    'quaternion_group',
    'symmetric_group',
    'alternating_group',
    'dihedral_group',
    'direct_product',
    'identity',
    'trivial_hom',
    'compose',
    'subgroup_generated',
    'generators',
    'normal_closure',
    'is_normal',
    'normal_subgroups',
    'commutator_subgroup',
    'derived_series',
    'perfect_radical',
    'is_perfect',
    'is_solvable',
    'quotient',
    'subgroup_as_group',
    'kernel',
    'image',
    'cokernel',
    'lift',
    'induced_from_quotient',
    'pullback',
    'pullback_map',
    'enumerate_homs',
    'is_mono',
    'is_epi',
    'is_iso',
]


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.int64)
    array.flags.writeable = False
    return array


class FiniteGroup:
    """
    A finite group as an ``n x n`` table of element indices.

    Args:
        table: ``table[i][j]`` is the index of the product ``i * j``

    Keyword Args:
        name: a short name used in reports
        labels: optional display labels, one per element
        validate: if ``True`` (the default) check every group axiom

    Raises:
        AxiomViolation: one of ``closure``, ``identity``, ``inverse`` or
            ``associativity`` fails; the axiom is named on the exception
    """

    def __init__(
        self,
        table: Any,
        name: Optional[str] = None,
        labels: Optional[Sequence[str]] = None,
        validate: bool = True
    ):
        self.table = _frozen(table)
        self.name = name
        self.labels = list(labels) if labels is not None else None
        if validate:
            self._validate()
        # Right inverses double as left inverses once the axioms hold.
        self.inverses = _frozen(np.argmax(self.table == 0, axis=1)) if self.order else _frozen([])

    # --------------------------------------------
    # Constructors
    # --------------------------------------------

    @classmethod
    def from_operation(
        cls,
        elements: Sequence[Hashable],
        operation: Callable[[Any, Any], Any],
        name: Optional[str] = None
    ) -> "FiniteGroup":
        """
        Tabulate ``operation`` on ``elements``.  The identity element is
        found and moved to index 0; the rest keep their order.

        Raises:
            AxiomViolation: the operation is not a group operation on ``elements``
        """
        elements = list(elements)
        identities = [e for e in elements if all(operation(e, x) == x == operation(x, e) for x in elements)]
        if not identities:
            raise AxiomViolation('identity', message='axiom violated: identity (no two-sided identity element)')
        e = identities[0]
        ordered = [e] + [x for x in elements if x != e]
        index = {x: i for i, x in enumerate(ordered)}
        table = np.zeros((len(ordered), len(ordered)), dtype=np.int64)
        for (i, a), (j, b) in product(enumerate(ordered), repeat=2):
            c = operation(a, b)
            if c not in index:
                raise AxiomViolation('closure', witness={'a': i, 'b': j})
            table[i, j] = index[c]
        return cls(table, name=name, labels=[str(x) for x in ordered])

    @classmethod
    def from_permutations(cls, group: PermutationGroup, name: Optional[str] = None) -> "FiniteGroup":
        """
        Tabulate a :py:class:`sympy.combinatorics.PermutationGroup`.
        """
        elements = list(group.generate())
        return cls.from_operation(elements, lambda a, b: a * b, name=name)

    # --------------------------------------------
    # Validation
    # --------------------------------------------

    def _validate(self) -> None:
        T = self.table
        if T.ndim != 2 or T.shape[0] != T.shape[1]:
            raise ValidationError('a multiplication table must be square')
        n = T.shape[0]
        if n == 0:
            raise AxiomViolation('identity', message='axiom violated: identity (a group cannot be empty)')
        bad = np.argwhere((T < 0) | (T >= n))
        if bad.size:
            i, j = bad[0]
            raise AxiomViolation('closure', witness={'a': int(i), 'b': int(j)})
        everything = np.arange(n)
        if not (np.array_equal(T[0], everything) and np.array_equal(T[:, 0], everything)):
            raise AxiomViolation('identity', message='axiom violated: identity (index 0 is not the identity)')
        for a in range(n):
            right = np.flatnonzero(T[a] == 0)
            if right.size == 0 or T[right[0], a] != 0:
                raise AxiomViolation('inverse', witness={'element': a})
        left_first = T[T]
        right_first = T[:, T]
        bad = np.argwhere(left_first != right_first)
        if bad.size:
            a, b, c = bad[0]
            raise AxiomViolation('associativity', witness={'a': int(a), 'b': int(b), 'c': int(c)})

    # --------------------------------------------
    # Element arithmetic
    # --------------------------------------------

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conjugate(self, g: int, x: int) -> int:
        """
        ``g x g^-1``.
        """
        return int(self.table[self.table[g, x], self.inverses[g]])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(a) for a in range(self.order)], dtype=np.int64)

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def elements(self) -> range:
        return range(self.order)

    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order), validate=False)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [0], validate=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def __str__(self) -> str:
        return self.name or f'G{self.order}'

    def __repr__(self) -> str:
        return f'FiniteGroup(name={self.name!r}, order={self.order})'


def validate_group(table: Any, name: Optional[str] = None) -> FiniteGroup:
    """
    Build a :py:class:`FiniteGroup` from a raw table, checking every axiom.
    """
    return FiniteGroup(table, name=name)


class Subgroup:
    """
    A subset of ``ambient`` closed under products and inverses.

    Args:
        ambient: the group we live in
        elements: the member indices

    Keyword Args:
        validate: check closure and that the identity is a member

    Raises:
        ValidationError: the elements are out of range or not a subgroup
    """

    def __init__(self, ambient: FiniteGroup, elements: Iterable[int], validate: bool = True):
        self.ambient = ambient
        self.elements: Tuple[int, ...] = tuple(sorted({int(x) for x in elements}))
        if validate:
            if any(x < 0 or x >= ambient.order for x in self.elements):
                raise ValidationError('subgroup element indices out of range')
            members = np.array(self.elements, dtype=np.int64)
            if 0 not in self.elements or not np.isin(ambient.table[np.ix_(members, members)], members).all():
                raise ValidationError('the elements do not form a subgroup')

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def __contains__(self, x: int) -> bool:
        return int(x) in self.elements

    def issubset(self, other: "Subgroup") -> bool:
        return set(self.elements) <= set(other.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.ambient == other.ambient and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f'Subgroup({self.ambient}, order={self.order})'


class GroupHom:
    """
    A homomorphism given by the image of every element.

    Args:
        domain: the source group
        codomain: the target group
        mapping: ``mapping[x]`` is the image of element ``x``

    Keyword Args:
        validate: if ``True`` (the default) check ``f(xy) = f(x) f(y)``

    Raises:
        WellDefinednessError: wrong length, an index out of range, or the
            multiplication is not preserved
    """

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, mapping: Any, validate: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.map = _frozen(mapping)
        if validate:
            self._validate()

    def _validate(self) -> None:
        m = self.map
        if m.shape != (self.domain.order,):
            raise WellDefinednessError(f'a hom out of a group of order {self.domain.order} needs that many images')
        if ((m < 0) | (m >= self.codomain.order)).any():
            raise WellDefinednessError('image index out of range')
        bad = np.argwhere(m[self.domain.table] != self.codomain.table[np.ix_(m, m)])
        if bad.size:
            a, b = bad[0]
            raise WellDefinednessError(f'the map does not preserve the product of {a} and {b}')

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and np.array_equal(self.map, other.map)

    def __hash__(self) -> int:
        return hash(self.map.tobytes())

    def __repr__(self) -> str:
        return f'GroupHom({self.domain} -> {self.codomain}, {self.map.tolist()})'


class GroupPullback:
    """
    ``P = {(a, b) : f(a) = g(b)}`` with its projections; ``embedding`` is
    ``P -> A x B``.
    """

    def __init__(self, obj: FiniteGroup, p1: GroupHom, p2: GroupHom, f: GroupHom, g: GroupHom, embedding: GroupHom):
        self.obj = obj
        self.p1 = p1
        self.p2 = p2
        self.f = f
        self.g = g
        self.embedding = embedding


# --------------------------------------------
# Named groups
# --------------------------------------------

def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], name='1')


def cyclic_group(n: int) -> FiniteGroup:
    """
    ``Z/n`` with element ``k`` at index ``k``.
    """
    if n < 1:
        raise ValueError('a cyclic group needs a positive order')
    k = np.arange(n)
    return FiniteGroup((k[:, None] + k[None, :]) % n, name=f'C{n}', validate=False)


def klein_four() -> FiniteGroup:
    k = np.arange(4)
    return FiniteGroup(k[:, None] ^ k[None, :], name='V4', validate=False)


def quaternion_group() -> FiniteGroup:
    """
    ``Q8``, realised inside ``SL(2, 3)``.
    """
    def mul(a, b):
        (a11, a12, a21, a22), (b11, b12, b21, b22) = a, b
        return (
            (a11 * b11 + a12 * b21) % 3,
            (a11 * b12 + a12 * b22) % 3,
            (a21 * b11 + a22 * b21) % 3,
            (a21 * b12 + a22 * b22) % 3,
        )
    i = (0, 1, 2, 0)
    j = (1, 1, 1, 2)
    return FiniteGroup.from_operation(_close([i, j], mul), mul, name='Q8')


def symmetric_group(n: int) -> FiniteGroup:
    return FiniteGroup.from_permutations(SymmetricGroup(n), name=f'S{n}')


def alternating_group(n: int) -> FiniteGroup:
    return FiniteGroup.from_permutations(AlternatingGroup(n), name=f'A{n}')


def dihedral_group(n: int) -> FiniteGroup:
    """
    The symmetries of a regular ``n``-gon, of order ``2n``.
    """
    return FiniteGroup.from_permutations(DihedralGroup(n), name=f'D{n}')


def _close(generators: Sequence[Hashable], operation: Callable[[Any, Any], Any]) -> List[Hashable]:
    found = list(dict.fromkeys(generators))
    seen = set(found)
    queue = deque(found)
    while queue:
        x = queue.popleft()
        for g in generators:
            y = operation(x, g)
            if y not in seen:
                seen.add(y)
                found.append(y)
                queue.append(y)
    return found


def direct_product(G: FiniteGroup, H: FiniteGroup) -> Tuple[FiniteGroup, GroupHom, GroupHom, GroupHom, GroupHom]:
    """
    ``G x H`` with the pair ``(g, h)`` at index ``g * |H| + h``.

    Returns:
        ``(G x H, p_G, p_H, i_G, i_H)``
    """
    n, m = G.order, H.order
    table = (G.table[:, None, :, None] * m + H.table[None, :, None, :]).reshape(n * m, n * m)
    name = f'{G}x{H}' if G.name and H.name else None
    P = FiniteGroup(table, name=name, validate=False)
    indices = np.arange(n * m)
    return (
        P,
        GroupHom(P, G, indices // m, validate=False),
        GroupHom(P, H, indices % m, validate=False),
        GroupHom(G, P, np.arange(n) * m, validate=False),
        GroupHom(H, P, np.arange(m), validate=False),
    )


# --------------------------------------------
# Morphism algebra
# --------------------------------------------

def identity(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, np.arange(G.order), validate=False)


def trivial_hom(A: FiniteGroup, B: FiniteGroup) -> GroupHom:
    return GroupHom(A, B, np.zeros(A.order, dtype=np.int64), validate=False)


def compose(g: GroupHom, f: GroupHom) -> GroupHom:
    """
    ``g . f``: first ``f``, then ``g``.
    """
    if f.codomain != g.domain:
        raise WellDefinednessError('cannot compose: codomain of f is not the domain of g')
    return GroupHom(f.domain, g.codomain, g.map[f.map], validate=False)


def is_mono(f: GroupHom) -> bool:
    return len(np.unique(f.map)) == f.domain.order


def is_epi(f: GroupHom) -> bool:
    return len(np.unique(f.map)) == f.codomain.order


def is_iso(f: GroupHom) -> bool:
    return f.domain.order == f.codomain.order and is_mono(f)


# --------------------------------------------
# Subgroups
# --------------------------------------------

def _closure(G: FiniteGroup, start: Iterable[int]) -> np.ndarray:
    members = np.zeros(G.order, dtype=bool)
    members[0] = True
    members[list(start)] = True
    while True:
        current = np.flatnonzero(members)
        products = np.unique(G.table[np.ix_(current, current)])
        if members[products].all():
            return current
        members[products] = True


def subgroup_generated(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """
    The smallest subgroup containing ``elements``; closure under products
    is enough in a finite group.
    """
    elements = list(elements)
    if any(x < 0 or x >= G.order for x in elements):
        raise ValidationError('element indices out of range')
    return Subgroup(G, _closure(G, elements), validate=False)


def generators(G: FiniteGroup) -> List[int]:
    """
    A small generating set, chosen greedily by element order.
    """
    orders = G.element_orders
    candidates = sorted(range(1, G.order), key=lambda x: (-orders[x], x))
    chosen: List[int] = []
    members = np.zeros(G.order, dtype=bool)
    members[0] = True
    for x in candidates:
        if members.all():
            break
        if not members[x]:
            chosen.append(x)
            members[:] = False
            members[_closure(G, chosen)] = True
    return chosen


def _conjugates(G: FiniteGroup, elements: np.ndarray) -> np.ndarray:
    # every g x g^-1 for g in G and x in elements
    return np.unique(G.table[G.table[:, elements], G.inverses[:, None]])


def normal_closure(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """
    The smallest normal subgroup of ``G`` containing ``elements``.
    """
    current = subgroup_generated(G, elements).array
    while True:
        conjugates = _conjugates(G, current)
        if np.isin(conjugates, current).all():
            return Subgroup(G, current, validate=False)
        current = _closure(G, np.union1d(current, conjugates))


def is_normal(H: Subgroup) -> bool:
    """
    ``True`` when ``g H g^-1 = H`` for every ``g``.
    """
    return bool(np.isin(_conjugates(H.ambient, H.array), H.array).all())


def normal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """
    Every normal subgroup, found as joins of the normal closures of single
    elements, smallest first.
    """
    closures = {}
    for x in range(G.order):
        N = normal_closure(G, [x])
        closures[N.elements] = N
    found = dict(closures)
    frontier = list(closures.values())
    while frontier:
        N = frontier.pop()
        for M in list(closures.values()):
            if set(M.elements) <= set(N.elements):
                continue
            joined = Subgroup(G, _closure(G, N.elements + M.elements), validate=False)
            if joined.elements not in found:
                found[joined.elements] = joined
                frontier.append(joined)
    return sorted(found.values(), key=lambda N: (N.order, N.elements))


def commutator_subgroup(H: Subgroup) -> Subgroup:
    """
    ``[H, H]``, as a subgroup of the same ambient group.
    """
    G = H.ambient
    h = H.array
    T, inv = G.table, G.inverses
    commutators = T[T[np.ix_(h, h)], T[np.ix_(inv[h], inv[h])]]
    return subgroup_generated(G, np.unique(commutators).tolist())


def derived_series(G: FiniteGroup) -> List[Subgroup]:
    """
    ``G, G', G'', ...`` stopping at the first perfect term, which is not
    repeated.
    """
    series = [G.whole()]
    while True:
        nxt = commutator_subgroup(series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def perfect_radical(G: FiniteGroup) -> Subgroup:
    """
    The largest perfect subgroup: the last term of the derived series.
    """
    return derived_series(G)[-1]


def is_perfect(G: FiniteGroup) -> bool:
    return perfect_radical(G).order == G.order


def is_solvable(G: FiniteGroup) -> bool:
    return perfect_radical(G).order == 1


# --------------------------------------------
# Quotients, kernels and images
# --------------------------------------------

def quotient(G: FiniteGroup, N: Subgroup) -> Tuple[FiniteGroup, GroupHom]:
    """
    ``G / N`` with cosets numbered in order of their least element, so the
    coset of the identity is index 0.

    Raises:
        NotNormalError: ``N`` is not normal in ``G``
    """
    if N.ambient != G:
        raise NotASubobjectError('the subgroup does not live in this group')
    if not is_normal(N):
        raise NotNormalError(f'a subgroup of order {N.order} is not normal in {G}')
    labels = np.full(G.order, -1, dtype=np.int64)
    representatives: List[int] = []
    for g in range(G.order):
        if labels[g] < 0:
            labels[G.table[g, N.array]] = len(representatives)
            representatives.append(g)
    reps = np.array(representatives, dtype=np.int64)
    table = labels[G.table[np.ix_(reps, reps)]]
    Q = FiniteGroup(table, name=f'{G}/{N.order}' if G.name else None, validate=False)
    return Q, GroupHom(G, Q, labels, validate=False)


def subgroup_as_group(H: Subgroup, name: Optional[str] = None) -> Tuple[FiniteGroup, GroupHom]:
    """
    Re-index a subgroup as a group in its own right.

    Returns:
        ``(K, embedding)`` with ``embedding: K -> H.ambient``
    """
    G = H.ambient
    h = H.array
    position = np.full(G.order, -1, dtype=np.int64)
    position[h] = np.arange(len(h))
    K = FiniteGroup(position[G.table[np.ix_(h, h)]], name=name, validate=False)
    return K, GroupHom(K, G, h, validate=False)


def kernel(f: GroupHom) -> Subgroup:
    return Subgroup(f.domain, np.flatnonzero(f.map == 0), validate=False)


def image(f: GroupHom) -> Subgroup:
    return Subgroup(f.codomain, np.unique(f.map), validate=False)


def cokernel(f: GroupHom) -> Tuple[FiniteGroup, GroupHom]:
    """
    The quotient of the codomain by the normal closure of the image.
    """
    return quotient(f.codomain, normal_closure(f.codomain, np.unique(f.map).tolist()))


def lift(mono: GroupHom, f: GroupHom) -> GroupHom:
    """
    Factor ``f: X -> G`` through the injective ``mono: K -> G``.

    Raises:
        NotASubobjectError: some ``f(x)`` is outside the image of ``mono``
    """
    if mono.codomain != f.codomain:
        raise NotASubobjectError('lift needs a common codomain')
    preimage = np.full(mono.codomain.order, -1, dtype=np.int64)
    preimage[mono.map] = np.arange(mono.domain.order)
    lifted = preimage[f.map]
    if (lifted < 0).any():
        raise NotASubobjectError('the morphism does not factor through the subgroup')
    return GroupHom(f.domain, mono.domain, lifted, validate=False)


def induced_from_quotient(proj: GroupHom, f: GroupHom) -> GroupHom:
    """
    The unique ``m`` with ``m . proj = f`` for a surjection ``proj``.

    Raises:
        WellDefinednessError: ``proj`` is not onto, or ``f`` does not kill
            the kernel of ``proj``
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
    return GroupHom(Q, f.codomain, induced, validate=False)


def pullback(f: GroupHom, g: GroupHom) -> GroupPullback:
    """
    ``{(a, b) : f(a) = g(b)}`` inside ``A x B``.

    Raises:
        WellDefinednessError: ``f`` and ``g`` have different codomains
    """
    if f.codomain != g.codomain:
        raise WellDefinednessError('pullback needs a common codomain')
    A, B = f.domain, g.domain
    S, p_a, p_b, _, _ = direct_product(A, B)
    pairs = np.flatnonzero(f.map[p_a.map] == g.map[p_b.map])
    P, embedding = subgroup_as_group(Subgroup(S, pairs, validate=False))
    return GroupPullback(P, compose(p_a, embedding), compose(p_b, embedding), f, g, embedding)


def pullback_map(square: GroupPullback, a: GroupHom, b: GroupHom) -> GroupHom:
    """
    The map ``X -> P`` induced by ``a: X -> A`` and ``b: X -> B``.
    """
    m = square.g.domain.order
    pair = GroupHom(a.domain, square.embedding.codomain, a.map * m + b.map, validate=False)
    return lift(square.embedding, pair)


# --------------------------------------------
# Enumeration
# --------------------------------------------

def _extend(A: FiniteGroup, B: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Optional[np.ndarray]:
    # Walk the right Cayley graph, assigning f(x s) = f(x) f(s).
    mapping = np.full(A.order, -1, dtype=np.int64)
    mapping[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        fx = mapping[x]
        for s, t in zip(gens, images):
            y = A.table[x, s]
            fy = B.table[fx, t]
            if mapping[y] < 0:
                mapping[y] = fy
                queue.append(y)
            elif mapping[y] != fy:
                return None
    return mapping


def enumerate_homs(A: FiniteGroup, B: FiniteGroup, gens: Optional[Sequence[int]] = None) -> List[GroupHom]:
    """
    Every homomorphism ``A -> B``, found by trying every assignment of
    generator images that respects element orders and keeping those that
    extend consistently.

    Keyword Args:
        gens: a generating set of ``A``; :py:func:`generators` is used if omitted

    Raises:
        ValidationError: ``gens`` does not generate ``A``
    """
    if gens is None:
        gens = generators(A)
    elif subgroup_generated(A, gens).order != A.order:
        raise ValidationError('the given elements do not generate the domain')
    a_orders = A.element_orders
    b_orders = B.element_orders
    choices = [[t for t in range(B.order) if a_orders[s] % b_orders[t] == 0] for s in gens]
    homs = []
    for images in product(*choices):
        mapping = _extend(A, B, gens, images)
        if mapping is not None:
            homs.append(GroupHom(A, B, mapping, validate=False))
    logger.debug('groups.enumerate_homs', domain=str(A), codomain=str(B), count=len(homs))
    return homs
