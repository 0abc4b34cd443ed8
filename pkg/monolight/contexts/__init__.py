#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
The torsion contexts and the registry that builds them from a tag such as
``fingrp`` or ``finab:p=3``.
"""
import re

from ..exceptions import UsageError
from .base import RadicalResult, TorsionContext, check_hom_vanishing  # noqa: F401
from .abelian import AbelianTorsionContext, PrimaryTorsionContext
from .groups import GroupTorsionContext
from .rings import RingTorsionContext
from .xmod import XModTorsionContext
from .trivial import TrivialTorsionContext


#: Contexts that take no parameters, by tag
CONTEXTS = {
    AbelianTorsionContext.tag: AbelianTorsionContext,
    GroupTorsionContext.tag: GroupTorsionContext,
    RingTorsionContext.tag: RingTorsionContext,
    XModTorsionContext.tag: XModTorsionContext,
}

PRIMARY_TAG = re.compile(r'^finab:p=(?P<p>\d+)$')


def get_context(tag: str) -> TorsionContext:
    """
    Build the context a command line tag names: ``ab``, ``finab:p=<prime>``,
    ``fingrp``, ``finring``, ``xmod``, or ``trivial:<tag>`` for the trivial
    torsion theory on any of those.

    Raises:
        UsageError: the tag names no context
    """
    tag = tag.strip()
    if tag.startswith('trivial:'):
        return TrivialTorsionContext(get_context(tag[len('trivial:'):]))
    if tag in CONTEXTS:
        return CONTEXTS[tag]()
    match = PRIMARY_TAG.match(tag)
    if match:
        try:
            return PrimaryTorsionContext(int(match.group('p')))
        except ValueError as e:
            raise UsageError(str(e)) from e
    known = ', '.join(sorted(CONTEXTS) + ['finab:p=<prime>', 'trivial:<tag>'])
    raise UsageError(f'unknown context "{tag}"; known contexts: {known}')
