#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Finitely generated abelian groups as cokernels of integer matrices.

A :py:class:`PresentedAbGroup` with ``n`` generators and relation matrix
``R`` is ``Z^n / (column space of R)``.  Morphisms are integer matrices
acting on generator coordinates.
"""
from functools import cached_property, reduce
from itertools import product
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import structlog

from ..exceptions import NotASubobjectError, UnsupportedEnumeration, WellDefinednessError
from .matrices import IntMatrix, LatticeSolver, integer_nullspace, solve_left_modulo


logger = structlog.get_logger(__name__)

Vector = Tuple[int, ...]


__all__ = [
    'CanonicalForm',
    'PresentedAbGroup',
    'AbHom',
    'SubgroupEmbedding',
    'AbPullback',
    'Normalisation',
    'zero_group',
    'cyclic',
    'free_abelian',
    'from_invariants',
    'direct_sum',
    'identity',
    'zero_hom',
    'compose',
    'homs_equal',
    'kernel',
    'cokernel',
    'image',
    'quotient',
    'lift',
    'induced_from_quotient',
    'pullback',
    'pullback_map',
    'normalise',
    'enumerate_homs',
    'is_mono',
    'is_epi',
    'is_iso',
    'elements',
    'subgroup_generated',
    'subgroups',
    'torsion_subgroup',
    'primary_component',
]


class CanonicalForm:
    """
    The isomorphism invariant of a finitely generated abelian group:
    ``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_i | d_{i+1}`` and
    ``d_i >= 2``.
    """

    def __init__(self, free_rank: int, invariants: Sequence[int]):
        self.free_rank = free_rank
        self.invariants = tuple(invariants)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return (self.free_rank, self.invariants) == (other.free_rank, other.invariants)

    def __hash__(self) -> int:
        return hash((self.free_rank, self.invariants))

    def __str__(self) -> str:
        parts = [f'Z/{d}' for d in self.invariants]
        if self.free_rank:
            parts.append('Z' if self.free_rank == 1 else f'Z^{self.free_rank}')
        return ' + '.join(parts) if parts else '0'

    def __repr__(self) -> str:
        return f'CanonicalForm({self.free_rank}, {self.invariants})'


class PresentedAbGroup:
    """
    ``Z^generators`` modulo the column lattice of ``relations``.

    Args:
        generators: the number of generators ``n``
        relations: an ``n x k`` integer matrix whose columns are the relators

    Raises:
        ValueError: ``relations`` does not have ``generators`` rows
    """

    def __init__(self, generators: int, relations: Optional[IntMatrix] = None):
        if relations is None:
            relations = IntMatrix.zeros(generators, 0)
        if relations.rows != generators:
            raise ValueError(f'relation matrix must have {generators} rows, not {relations.rows}')
        self.generators = generators
        self.relations = relations

    @cached_property
    def lattice(self) -> LatticeSolver:
        """
        A solver for membership in the relation lattice, built once per group.
        """
        return LatticeSolver(self.relations)

    @cached_property
    def canonical(self) -> CanonicalForm:
        smith = self.lattice.smith
        invariants = [d for d in smith.diagonal if d >= 2]
        return CanonicalForm(self.generators - smith.rank, invariants)

    @property
    def free_rank(self) -> int:
        return self.canonical.free_rank

    @property
    def invariants(self) -> Tuple[int, ...]:
        return self.canonical.invariants

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariants

    @property
    def order(self) -> Optional[int]:
        """
        The number of elements, or ``None`` for an infinite group.
        """
        if not self.is_finite:
            return None
        return reduce(lambda a, b: a * b, self.invariants, 1)

    def is_zero_vector(self, v: Sequence[int]) -> bool:
        return self.lattice.contains(v)

    def isomorphic(self, other: "PresentedAbGroup") -> bool:
        return self.canonical == other.canonical

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PresentedAbGroup):
            return NotImplemented
        return self.generators == other.generators and self.relations == other.relations

    def __hash__(self) -> int:
        return hash((self.generators, self.relations))

    def __str__(self) -> str:
        return str(self.canonical)

    def __repr__(self) -> str:
        return f'PresentedAbGroup({self.generators}, {self.relations!r})'


class AbHom:
    """
    A homomorphism of presented abelian groups.

    Args:
        domain: the source group, with ``n`` generators
        codomain: the target group, with ``m`` generators
        matrix: ``m x n``; column ``j`` is the image of generator ``j``

    Keyword Args:
        validate: if ``True`` (the default) check that the matrix sends the
            relation lattice of ``domain`` into that of ``codomain``

    Raises:
        WellDefinednessError: the matrix has the wrong shape or does not
            respect the relations
    """

    def __init__(
        self,
        domain: PresentedAbGroup,
        codomain: PresentedAbGroup,
        matrix: IntMatrix,
        validate: bool = True
    ):
        if matrix.shape != (codomain.generators, domain.generators):
            raise WellDefinednessError(
                f'a hom from {domain.generators} to {codomain.generators} generators needs a '
                f'{codomain.generators}x{domain.generators} matrix, got {matrix.rows}x{matrix.cols}'
            )
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        if validate:
            images = matrix @ domain.relations
            for j, column in enumerate(images.columns()):
                if not codomain.lattice.contains(column):
                    raise WellDefinednessError(f'relator {j} of the domain does not map to zero')

    def apply(self, v: Sequence[int]) -> Vector:
        return tuple(sum(self.matrix[i, j] * v[j] for j in range(self.domain.generators))
                     for i in range(self.codomain.generators))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbHom):
            return NotImplemented
        return homs_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f'AbHom({self.domain} -> {self.codomain}, {self.matrix.tolist()})'


class SubgroupEmbedding:
    """
    A subgroup ``sub`` of ``ambient`` together with its inclusion.

    Every subgroup of an abelian group is normal, so this doubles as a
    normal subobject.
    """

    def __init__(self, sub: PresentedAbGroup, ambient: PresentedAbGroup, inclusion: AbHom):
        self.sub = sub
        self.ambient = ambient
        self.inclusion = inclusion

    def __repr__(self) -> str:
        return f'SubgroupEmbedding({self.sub} -> {self.ambient})'


class AbPullback:
    """
    ``P = A x_C B`` for ``f: A -> C`` and ``g: B -> C``.

    ``embedding`` is ``P -> A + B``, which :py:func:`pullback_map` lifts
    through.
    """

    def __init__(self, obj: PresentedAbGroup, p1: AbHom, p2: AbHom, f: AbHom, g: AbHom, embedding: AbHom):
        self.obj = obj
        self.p1 = p1
        self.p2 = p2
        self.f = f
        self.g = g
        self.embedding = embedding


class Normalisation:
    """
    The result of :py:func:`normalise`: the canonical presentation of a
    group plus the two translation isomorphisms.
    """

    def __init__(self, group: PresentedAbGroup, to_canonical: AbHom, from_canonical: AbHom):
        self.group = group
        self.to_canonical = to_canonical
        self.from_canonical = from_canonical

    def __iter__(self):
        return iter((self.group, self.to_canonical, self.from_canonical))


# --------------------------------------------
# Constructors
# --------------------------------------------

def zero_group() -> PresentedAbGroup:
    return PresentedAbGroup(0)


def free_abelian(rank: int) -> PresentedAbGroup:
    return PresentedAbGroup(rank)


def cyclic(n: int) -> PresentedAbGroup:
    """
    ``Z/n`` on one generator; ``cyclic(0)`` is ``Z``.
    """
    if n < 0:
        raise ValueError('cyclic order must be non-negative')
    if n == 0:
        return free_abelian(1)
    return PresentedAbGroup(1, IntMatrix(1, 1, [n]))


def from_invariants(free_rank: int, invariants: Sequence[int]) -> PresentedAbGroup:
    """
    ``Z/d_1 + ... + Z/d_k + Z^free_rank`` in the presentation
    :py:func:`normalise` produces: torsion generators first.
    """
    n = len(invariants) + free_rank
    relations = IntMatrix.diagonal(list(invariants), rows=n, cols=len(invariants))
    return PresentedAbGroup(n, relations)


def direct_sum(A: PresentedAbGroup, B: PresentedAbGroup) -> Tuple[PresentedAbGroup, AbHom, AbHom, AbHom, AbHom]:
    """
    ``A + B`` with its injections and projections.

    Returns:
        ``(A + B, i_A, i_B, p_A, p_B)``
    """
    a, b = A.generators, B.generators
    S = PresentedAbGroup(a + b, A.relations.block_diagonal(B.relations))
    i_a = IntMatrix.identity(a).vstack(IntMatrix.zeros(b, a))
    i_b = IntMatrix.zeros(a, b).vstack(IntMatrix.identity(b))
    return (
        S,
        AbHom(A, S, i_a, validate=False),
        AbHom(B, S, i_b, validate=False),
        AbHom(S, A, i_a.T, validate=False),
        AbHom(S, B, i_b.T, validate=False),
    )


# --------------------------------------------
# Morphism algebra
# --------------------------------------------

def identity(A: PresentedAbGroup) -> AbHom:
    return AbHom(A, A, IntMatrix.identity(A.generators), validate=False)


def zero_hom(A: PresentedAbGroup, B: PresentedAbGroup) -> AbHom:
    return AbHom(A, B, IntMatrix.zeros(B.generators, A.generators), validate=False)


def compose(g: AbHom, f: AbHom) -> AbHom:
    """
    ``g . f``: first ``f``, then ``g``.
    """
    if f.codomain != g.domain:
        raise WellDefinednessError('cannot compose: codomain of f is not the domain of g')
    return AbHom(f.domain, g.codomain, g.matrix @ f.matrix, validate=False)


def homs_equal(f: AbHom, g: AbHom) -> bool:
    """
    Two parallel homs are equal when their difference lands in the
    codomain's relation lattice, column by column.
    """
    if f.domain != g.domain or f.codomain != g.codomain:
        return False
    difference = f.matrix - g.matrix
    return all(f.codomain.lattice.contains(column) for column in difference.columns())


def _preimage_lattice(F: IntMatrix, R: IntMatrix) -> IntMatrix:
    # Generators of {x : F x in col(R)}, as columns.
    n = F.cols
    null = integer_nullspace(F.hstack(R))
    return null.top(n)


def kernel(f: AbHom) -> SubgroupEmbedding:
    """
    The kernel of ``f`` as a subgroup of its domain.

    Returns:
        The embedding ``Ker(f) -> A``.
    """
    A = f.domain
    G = _preimage_lattice(f.matrix, f.codomain.relations)
    relations = _preimage_lattice(G, A.relations)
    K = PresentedAbGroup(G.cols, relations)
    return SubgroupEmbedding(K, A, AbHom(K, A, G, validate=False))


def cokernel(f: AbHom) -> Tuple[PresentedAbGroup, AbHom]:
    """
    ``B / Im(f)``: the codomain relations augmented by the columns of ``f``.

    Returns:
        ``(Q, proj)``
    """
    B = f.codomain
    Q = PresentedAbGroup(B.generators, B.relations.hstack(f.matrix))
    return Q, AbHom(B, Q, IntMatrix.identity(B.generators), validate=False)


def image(f: AbHom) -> SubgroupEmbedding:
    """
    The regular image of ``f``, presented as ``A / Ker(f)`` on the
    generators of ``A``.  ``f`` is the inclusion composed with the identity
    matrix ``A -> Im(f)``, which is a normal epimorphism.
    """
    relations = _preimage_lattice(f.matrix, f.codomain.relations)
    I = PresentedAbGroup(f.domain.generators, relations)
    return SubgroupEmbedding(I, f.codomain, AbHom(I, f.codomain, f.matrix, validate=False))


def quotient(A: PresentedAbGroup, sub: SubgroupEmbedding) -> Tuple[PresentedAbGroup, AbHom]:
    if sub.ambient != A:
        raise NotASubobjectError('the subgroup does not live in this group')
    return cokernel(sub.inclusion)


def lift(mono: AbHom, f: AbHom) -> AbHom:
    """
    Factor ``f: X -> A`` through the monomorphism ``mono: S -> A``.

    Raises:
        NotASubobjectError: the image of ``f`` is not inside ``S``
    """
    if mono.codomain != f.codomain:
        raise NotASubobjectError('lift needs a common codomain')
    S, A = mono.domain, mono.codomain
    solver = LatticeSolver(mono.matrix.hstack(A.relations))
    solution = solver.solve_columns(f.matrix)
    if solution is None:
        raise NotASubobjectError('the morphism does not factor through the subgroup')
    return AbHom(f.domain, S, solution.top(S.generators))


def induced_from_quotient(proj: AbHom, f: AbHom) -> AbHom:
    """
    The unique ``m`` with ``m . proj = f``, for a normal epimorphism
    ``proj: A -> Q`` and ``f: A -> B`` killing its kernel.

    Raises:
        WellDefinednessError: ``f`` does not kill the kernel of ``proj``
    """
    if proj.domain != f.domain:
        raise WellDefinednessError('induced_from_quotient needs a common domain')
    Q, B = proj.codomain, f.codomain
    if proj.matrix == IntMatrix.identity(Q.generators) and Q.generators == f.domain.generators:
        return AbHom(Q, B, f.matrix)
    X = solve_left_modulo(proj.matrix, f.matrix, B.relations)
    if X is None:
        raise WellDefinednessError('the morphism does not factor through the quotient')
    return AbHom(Q, B, X)


def pullback(f: AbHom, g: AbHom) -> AbPullback:
    """
    ``A x_C B``, built as the kernel of ``(f, -g): A + B -> C``.

    Raises:
        WellDefinednessError: ``f`` and ``g`` have different codomains
    """
    if f.codomain != g.codomain:
        raise WellDefinednessError('pullback needs a common codomain')
    S, _, _, p_a, p_b = direct_sum(f.domain, g.domain)
    difference = AbHom(S, f.codomain, f.matrix.hstack(-g.matrix), validate=False)
    K = kernel(difference)
    return AbPullback(K.sub, compose(p_a, K.inclusion), compose(p_b, K.inclusion), f, g, K.inclusion)


def pullback_map(square: AbPullback, a: AbHom, b: AbHom) -> AbHom:
    """
    The map ``X -> P`` induced by ``a: X -> A`` and ``b: X -> B`` with
    ``f . a = g . b``.
    """
    S = square.embedding.codomain
    pair = AbHom(a.domain, S, a.matrix.vstack(b.matrix))
    return lift(square.embedding, pair)


# --------------------------------------------
# Predicates
# --------------------------------------------

def is_mono(f: AbHom) -> bool:
    return kernel(f).sub.is_trivial


def is_epi(f: AbHom) -> bool:
    return cokernel(f)[0].is_trivial


def is_iso(f: AbHom) -> bool:
    return is_mono(f) and is_epi(f)


# --------------------------------------------
# Canonical forms and enumeration
# --------------------------------------------

def normalise(A: PresentedAbGroup) -> Normalisation:
    """
    Replace ``A`` by its canonical presentation.

    With ``S = U R V`` the map ``x -> U x`` identifies ``A`` with
    ``Z^n / col(S)``; generators whose diagonal entry is 1 are zero there
    and get dropped.
    """
    smith = A.lattice.smith
    n = A.generators
    diagonal = list(smith.diagonal) + [0] * (n - len(smith.diagonal))
    keep = [i for i in range(n) if diagonal[i] != 1]
    torsion = [i for i in keep if diagonal[i] >= 2]
    free = [i for i in keep if diagonal[i] == 0]
    order = torsion + free
    canonical = from_invariants(len(free), [diagonal[i] for i in torsion])
    U = smith.U
    to_matrix = U.submatrix(order, range(n)) if order else IntMatrix.zeros(0, n)
    U_inverse = U.inverse()
    from_matrix = U_inverse.submatrix(range(n), order) if order else IntMatrix.zeros(n, 0)
    return Normalisation(
        canonical,
        AbHom(A, canonical, to_matrix, validate=False),
        AbHom(canonical, A, from_matrix, validate=False),
    )


def enumerate_homs(A: PresentedAbGroup, B: PresentedAbGroup) -> List[AbHom]:
    """
    Every homomorphism ``A -> B``, once each.

    On canonical forms a hom ``Z/a -> Z/b`` sends the generator to a
    multiple of ``b / gcd(a, b)``, so there are ``prod gcd(a_i, b_j)`` homs.

    Raises:
        UnsupportedEnumeration: ``A`` or ``B`` is infinite
    """
    if not (A.is_finite and B.is_finite):
        raise UnsupportedEnumeration('hom enumeration needs finite groups')
    canon_a, to_a, _ = normalise(A)
    canon_b, _, from_b = normalise(B)
    a_inv, b_inv = canon_a.invariants, canon_b.invariants
    choices: List[List[Tuple[int, int, int]]] = []
    for i, a in enumerate(a_inv):
        for j, b in enumerate(b_inv):
            g = gcd(a, b)
            choices.append([(j, i, t * (b // g)) for t in range(g)])
    homs = []
    for assignment in product(*choices):
        entries = [[0] * len(a_inv) for _ in b_inv]
        for j, i, value in assignment:
            entries[j][i] = value
        canonical_matrix = IntMatrix.from_rows(entries, cols=len(a_inv))
        matrix = from_b.matrix @ canonical_matrix @ to_a.matrix
        homs.append(AbHom(A, B, matrix, validate=False))
    logger.debug('abelian.enumerate_homs', domain=str(A), codomain=str(B), count=len(homs))
    return homs


def _canonical_elements(invariants: Sequence[int]) -> List[Vector]:
    return [tuple(v) for v in product(*[range(d) for d in invariants])]


def elements(A: PresentedAbGroup) -> List[Vector]:
    """
    Every element of a finite group, as a coordinate vector on the
    generators of ``A``; the zero vector comes first.

    Raises:
        UnsupportedEnumeration: ``A`` is infinite
    """
    if not A.is_finite:
        raise UnsupportedEnumeration('cannot list the elements of an infinite group')
    canon, _, from_canon = normalise(A)
    return [from_canon.apply(v) for v in _canonical_elements(canon.invariants)]


def subgroup_generated(A: PresentedAbGroup, vectors: Iterable[Sequence[int]]) -> SubgroupEmbedding:
    """
    The subgroup of ``A`` generated by the given coordinate vectors.
    """
    columns = [tuple(v) for v in vectors]
    F = free_abelian(len(columns))
    matrix = IntMatrix.from_columns(columns, rows=A.generators) if columns else IntMatrix.zeros(A.generators, 0)
    return image(AbHom(F, A, matrix, validate=False))


def _closure(invariants: Sequence[int], start: FrozenSet[Vector], extra: Vector) -> FrozenSet[Vector]:
    found = set(start)
    frontier = list(start) if extra in found else [extra]
    found.add(extra)
    generators = list(start) + [extra]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = tuple((a + b) % d for a, b, d in zip(x, g, invariants))
            if y not in found:
                found.add(y)
                frontier.append(y)
    return frozenset(found)


def subgroups(A: PresentedAbGroup) -> List[SubgroupEmbedding]:
    """
    Every subgroup of a finite abelian group, found as joins of cyclic
    subgroups.  All of them are normal.

    Raises:
        UnsupportedEnumeration: ``A`` is infinite
    """
    if not A.is_finite:
        raise UnsupportedEnumeration('cannot enumerate the subgroups of an infinite group')
    canon, _, from_canon = normalise(A)
    invariants = canon.invariants
    zero = tuple(0 for _ in invariants)
    points = _canonical_elements(invariants)
    found: Dict[FrozenSet[Vector], List[Vector]] = {frozenset([zero]): []}
    frontier = [frozenset([zero])]
    while frontier:
        current = frontier.pop()
        for x in points:
            if x in current:
                continue
            joined = _closure(invariants, current, x)
            if joined not in found:
                found[joined] = found[current] + [x]
                frontier.append(joined)
    result = []
    for gens in sorted(found.values(), key=len):
        result.append(subgroup_generated(A, [from_canon.apply(v) for v in gens]))
    return result


def torsion_subgroup(A: PresentedAbGroup) -> SubgroupEmbedding:
    """
    The subgroup of elements of finite order.
    """
    canon, _, from_canon = normalise(A)
    k = len(canon.invariants)
    basis = [tuple(1 if i == j else 0 for i in range(canon.generators)) for j in range(k)]
    return subgroup_generated(A, [from_canon.apply(v) for v in basis])


def primary_component(A: PresentedAbGroup, p: int) -> SubgroupEmbedding:
    """
    The ``p``-primary part of the torsion of ``A``: on each cyclic factor
    ``Z/d`` with ``d = p^k m``, the subgroup generated by ``m``.
    """
    canon, _, from_canon = normalise(A)
    vectors = []
    for j, d in enumerate(canon.invariants):
        m = d
        while m % p == 0:
            m //= p
        vectors.append(tuple(m if i == j else 0 for i in range(canon.generators)))
    return subgroup_generated(A, [from_canon.apply(v) for v in vectors])
