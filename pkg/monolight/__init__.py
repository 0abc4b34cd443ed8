__version__ = "0.1.0"

from .exceptions import (  # noqa: F401
    ContextMismatch,
    MonolightError,
    ParseError,
    UnsupportedOperation,
    UsageError,
    ValidationError,
)
from .contexts import TorsionContext, get_context  # noqa: F401
from .engine import classify, ml_factorise, reflective_factorise, third_iso  # noqa: F401
from .verifier import Verifier  # noqa: F401
