"""
Brute force oracles for the tests.

Nothing here uses the enumeration code under test: homomorphisms are found
by backtracking over raw function tables.
"""
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence

import numpy as np


def group_hom_tables(A: np.ndarray, B: np.ndarray) -> List[List[int]]:
    """
    Every function table ``f`` with ``f[a * b] = f[a] * f[b]``, for groups
    given by multiplication tables with the identity at index 0.
    """
    n, m = len(A), len(B)
    found: List[List[int]] = []
    images: List[Optional[int]] = [None] * n
    images[0] = 0

    def consistent(x: int) -> bool:
        for y in range(n):
            if images[y] is None:
                continue
            for left, right in ((x, y), (y, x)):
                product = images[int(A[left, right])]
                if product is not None and product != int(B[images[left], images[right]]):
                    return False
        return True

    def assign(x: int) -> None:
        if x == n:
            found.append([int(v) for v in images])
            return
        for t in range(m):
            images[x] = t
            if consistent(x):
                assign(x + 1)
        images[x] = None

    if n == 1:
        return [[0]]
    assign(1)
    return found


def ring_hom_tables(add_a: np.ndarray, mul_a: np.ndarray, add_b: np.ndarray, mul_b: np.ndarray) -> List[List[int]]:
    """
    Every additive hom table that also preserves products.
    """
    found = []
    for f in group_hom_tables(add_a, add_b):
        if all(f[int(mul_a[x, y])] == int(mul_b[f[x], f[y]]) for x in range(len(f)) for y in range(len(f))):
            found.append(f)
    return found


def abelian_hom_count(a: Sequence[int], b: Sequence[int]) -> int:
    """
    ``|Hom(Z/a_1 + ..., Z/b_1 + ...)|``: the product of ``gcd(a_i, b_j)``.
    """
    return reduce(lambda x, y: x * y, (gcd(x, y) for x in a for y in b), 1)


def cyclic_square_count(e: Sequence[int], m: Sequence[int]) -> int:
    """
    The number of commutative squares ``m . a = b . e`` for maps of cyclic
    groups given as ``(n, k, u)``: ``Z/n -> Z/k`` sending 1 to ``u``.
    """
    n1, n2, u = e
    k1, k2, v = m
    tops = [x for x in range(k1) if (n1 * x) % k1 == 0]
    bottoms = [y for y in range(k2) if (n2 * y) % k2 == 0]
    return sum(1 for x in tops for y in bottoms if (v * x - u * y) % k2 == 0)


def cyclic_table(n: int) -> np.ndarray:
    k = np.arange(n)
    return (k[:, None] + k[None, :]) % n


#: A Latin square with identity 0 and every element its own inverse: the
#: smallest loop that is not a group
NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]
