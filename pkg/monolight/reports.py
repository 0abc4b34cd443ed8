"""
Check results and the reports that collect them.

A report renders either as text, one check per line::

    <suite>.<check> <PASS|FAIL|INCONCLUSIVE> key=value ...
    summary pass=<a> fail=<b> inconclusive=<c>

or as a flat ``key=value`` document.  Neither rendering includes timings, so
output is a function of the inputs, the seed and the budget.
"""
import enum
from typing import Any, Dict, List, Optional


class Status(enum.Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    INCONCLUSIVE = 'INCONCLUSIVE'

    def __str__(self) -> str:
        return self.value


def format_value(value: Any) -> str:
    """
    Render a detail value as a single whitespace-free token.
    """
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ','.join(format_value(v) for v in value) if value else '-'
    text = str(value)
    return ''.join(text.split()) or '-'


class CheckResult:
    """
    The outcome of one check.

    Args:
        suite: the suite the check belongs to, e.g. ``torsion-axioms``
        check: the check name, e.g. ``hom-vanishing``
        status: the verdict

    Keyword Args:
        details: extra ``key=value`` pairs for the report line
        counterexample: for a ``FAIL``, the data that replays the violation
    """

    def __init__(
        self,
        suite: str,
        check: str,
        status: Status,
        details: Optional[Dict[str, Any]] = None,
        counterexample: Optional[Dict[str, Any]] = None
    ):
        if status is Status.FAIL and not counterexample:
            raise ValueError(f'the failed check {suite}.{check} needs a counterexample')
        self.suite = suite
        self.check = check
        self.status = status
        self.details = dict(details or {})
        self.counterexample = dict(counterexample or {})

    @property
    def name(self) -> str:
        return f'{self.suite}.{self.check}'

    def render(self) -> str:
        parts = [self.name, str(self.status)]
        parts.extend(f'{key}={format_value(value)}' for key, value in self.details.items())
        parts.extend(f'counterexample.{key}={format_value(value)}' for key, value in self.counterexample.items())
        return ' '.join(parts)

    def __repr__(self) -> str:
        return f'CheckResult({self.render()!r})'


class OrthogonalityReport:
    """
    The result of checking ``e`` against ``m`` for the unique lifting
    property.

    ``squares`` is the number of commutative squares found and
    ``diagonals`` the number of diagonals found in each, in enumeration
    order.  ``counterexample`` holds the first square without exactly one
    diagonal.
    """

    def __init__(
        self,
        status: Status,
        squares: int = 0,
        diagonals: Optional[List[int]] = None,
        counterexample: Optional[Dict[str, Any]] = None,
        reason: Optional[str] = None
    ):
        self.status = status
        self.squares = squares
        self.diagonals = list(diagonals or [])
        self.counterexample = counterexample
        self.reason = reason

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def as_check(self, suite: str = 'orthogonality', check: str = 'lifting', **details: Any) -> CheckResult:
        details = dict(details)
        details['squares'] = self.squares
        if self.reason:
            details['reason'] = self.reason
        return CheckResult(suite, check, self.status, details=details, counterexample=self.counterexample)


class VerificationReport:
    """
    Every check result of one suite run.

    Args:
        context: the context tag the suite ran under
        suite: the suite name

    Keyword Args:
        seed: the sampling seed
        budget: the enumeration budget
    """

    def __init__(self, context: str, suite: str, seed: Optional[int] = None, budget: Optional[int] = None):
        self.context = context
        self.suite = suite
        self.seed = seed
        self.budget = budget
        self.results: List[CheckResult] = []
        #: Wall-clock seconds; kept out of both renderings
        self.duration: float = 0.0

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, other: "VerificationReport") -> None:
        self.results.extend(other.results)

    def count(self, status: Status) -> int:
        return sum(1 for result in self.results if result.status is status)

    @property
    def failed(self) -> bool:
        return self.count(Status.FAIL) > 0

    @property
    def passed(self) -> bool:
        return not self.failed

    @property
    def vacuous(self) -> bool:
        return not self.results

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if result.status is Status.FAIL]

    def summary(self) -> str:
        return (
            f'summary pass={self.count(Status.PASS)} fail={self.count(Status.FAIL)} '
            f'inconclusive={self.count(Status.INCONCLUSIVE)}'
        )

    def render(self) -> str:
        """
        The text rendering: one line per check, then the summary line.
        """
        lines = [result.render() for result in self.results]
        lines.append(self.summary())
        return '\n'.join(lines) + '\n'

    def as_kv(self) -> str:
        """
        The flat ``key=value`` rendering, one pair per line.
        """
        pairs: List[Any] = [
            ('context', self.context),
            ('suite', self.suite),
            ('seed', self.seed if self.seed is not None else '-'),
            ('budget', self.budget if self.budget is not None else '-'),
            ('checks', len(self.results)),
            ('vacuous', self.vacuous),
        ]
        for i, result in enumerate(self.results):
            prefix = f'check.{i}'
            pairs.append((f'{prefix}.name', result.name))
            pairs.append((f'{prefix}.status', result.status))
            pairs.extend((f'{prefix}.{key}', value) for key, value in result.details.items())
            pairs.extend((f'{prefix}.counterexample.{key}', value) for key, value in result.counterexample.items())
        pairs.extend([
            ('summary.pass', self.count(Status.PASS)),
            ('summary.fail', self.count(Status.FAIL)),
            ('summary.inconclusive', self.count(Status.INCONCLUSIVE)),
        ])
        return ''.join(f'{key}={format_value(value)}\n' for key, value in pairs)

    def __repr__(self) -> str:
        return f'VerificationReport({self.context!r}, {self.suite!r}, checks={len(self.results)})'
