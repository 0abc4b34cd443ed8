from typing import Any, Dict, Optional


class MonolightError(Exception):
    """
    The base class for everything this package raises on purpose.

    Every subclass sets :py:attr:`exit_code`, which is what the command line
    front end exits with when the error escapes a command.
    """

    #: The process exit code the command line uses for this kind of error
    exit_code: int = 1


class ParseError(MonolightError):
    """
    A structure file could not be parsed.

    Args:
        message: what went wrong

    Keyword Args:
        line: 1-based line number of the offending token
        column: 1-based column of the offending token
        source: the file name, if known
    """

    exit_code: int = 2

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        source: Optional[str] = None
    ):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        location = ''
        if source:
            location = f'{source}:'
        if line is not None:
            location += f'{line}:'
            if column is not None:
                location += f'{column}:'
        super().__init__(f'{location} {message}'.strip())


class ValidationError(MonolightError):
    """
    A structure or morphism parsed fine but is not what it claims to be.
    """

    exit_code: int = 3


class AxiomViolation(ValidationError):
    """
    A table failed one of the axioms of its kind of structure.

    Args:
        axiom: the name of the violated axiom, e.g. ``associativity``

    Keyword Args:
        witness: the elements exhibiting the violation
    """

    def __init__(self, axiom: str, witness: Optional[Dict[str, Any]] = None, message: str = None):
        self.axiom = axiom
        self.witness = witness or {}
        if message is None:
            message = f'axiom violated: {axiom}'
            if self.witness:
                details = ' '.join(f'{key}={value}' for key, value in self.witness.items())
                message = f'{message} ({details})'
        super().__init__(message)


class WellDefinednessError(ValidationError):
    """
    A morphism does not respect the structure of its domain.
    """


class NotNormalError(ValidationError):
    """
    A subobject was required to be normal and is not.
    """


class NotASubobjectError(ValidationError):
    """
    A morphism does not factor through the given monomorphism, or one
    subobject is not contained in another.
    """


class ConditionNViolation(ValidationError):
    """
    The composite ``T(K) -> K -> A`` was found not to be a normal monomorphism.

    Args:
        subobject: a description of the offending ``T(K)`` inside ``A``
    """

    def __init__(self, subobject: str):
        self.subobject = subobject
        super().__init__(f'condition (N) fails: T(K) is not normal in A for {subobject}')


class InvalidCover(ValidationError):
    """
    A candidate cover is not a normal epimorphism out of a torsion-free object.

    Args:
        reason: ``not-normal-epi``, ``not-torsion-free`` or ``codomain-mismatch``
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f'invalid cover: {reason}')


class UnsupportedOperation(MonolightError):
    """
    The instance category cannot perform this operation.
    """

    exit_code: int = 3


class UnsupportedEnumeration(UnsupportedOperation):
    """
    A hom-set or subobject lattice is infinite or too big to enumerate.
    """


class ContextMismatch(MonolightError):
    """
    An object or morphism does not belong to the selected torsion context.
    """

    exit_code: int = 4


class UsageError(MonolightError):
    """
    The command line was used incorrectly (unknown suite, bad context tag).
    """

    exit_code: int = 5
