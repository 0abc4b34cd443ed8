from . import matrices, abelian, groups, rings, xmod  # noqa: F401
