from .formats import dump, dump_morphism, load, parse  # noqa: F401
