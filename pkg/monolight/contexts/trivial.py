#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
The trivial torsion theory over any other context.
"""
from typing import Any, List, Optional, Tuple

from .base import TorsionContext


class TrivialTorsionContext(TorsionContext):
    """
    The torsion theory ``(C, {0})`` on the category of ``base``: every object
    is torsion and only the zero object is torsion-free.

    Condition (N) holds and the monotone-light classes still form a
    factorisation system, but the stabilised class ``E'`` is strictly larger
    than ``E-bar`` here, which makes this context a useful negative case for
    the theorem report.

    Args:
        base: the context whose category we reuse
    """

    supports_pullbacks: bool = True

    def __init__(self, base: TorsionContext, check_radicals: Optional[bool] = None, cache_size: Optional[int] = None):
        self.base = base
        self.tag = f'trivial:{base.tag}'
        self.title = f'{base.title.split(":")[0]}: (everything, zero)'
        self.supports_pullbacks = base.supports_pullbacks
        super().__init__(check_radicals=check_radicals, cache_size=cache_size)

    def accepts_object(self, A: Any) -> bool:
        return self.base.accepts_object(A)

    def accepts_morphism(self, f: Any) -> bool:
        return self.base.accepts_morphism(f)

    def identity(self, A: Any) -> Any:
        return self.base.identity(A)

    def compose(self, g: Any, f: Any) -> Any:
        return self.base.compose(g, f)

    def equal(self, f: Any, g: Any) -> bool:
        return self.base.equal(f, g)

    def zero_object(self) -> Any:
        return self.base.zero_object()

    def zero_morphism(self, A: Any, B: Any) -> Any:
        return self.base.zero_morphism(A, B)

    def kernel(self, f: Any) -> Any:
        return self.base.kernel(f)

    def quotient(self, A: Any, k: Any) -> Any:
        return self.base.quotient(A, k)

    def image(self, f: Any) -> Tuple[Any, Any]:
        return self.base.image(f)

    def is_normal(self, k: Any) -> bool:
        return self.base.is_normal(k)

    def lift(self, mono: Any, f: Any) -> Any:
        return self.base.lift(mono, f)

    def induced_from_quotient(self, q: Any, f: Any) -> Any:
        return self.base.induced_from_quotient(q, f)

    def pullback(self, f: Any, g: Any) -> Any:
        return self.base.pullback(f, g)

    def pullback_map(self, square: Any, a: Any, b: Any) -> Any:
        return self.base.pullback_map(square, a, b)

    def enumerate_homs(self, A: Any, B: Any) -> List[Any]:
        return self.base.enumerate_homs(A, B)

    def normal_subobjects(self, A: Any) -> List[Any]:
        return self.base.normal_subobjects(A)

    def is_finite(self, A: Any) -> bool:
        return self.base.is_finite(A)

    def order(self, A: Any) -> Optional[int]:
        return self.base.order(A)

    def is_zero_object(self, A: Any) -> bool:
        return self.base.is_zero_object(A)

    def is_mono(self, f: Any) -> bool:
        return self.base.is_mono(f)

    def is_normal_epi(self, f: Any) -> bool:
        return self.base.is_normal_epi(f)

    def torsion_subobject(self, A: Any) -> Any:
        return self.base.identity(A)

    def describe_object(self, A: Any) -> str:
        return self.base.describe_object(A)

    def describe_morphism(self, f: Any) -> str:
        return self.base.describe_morphism(f)
