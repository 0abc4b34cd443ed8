"""
The ``monolight`` command.

::

    monolight factorise --ctx TAG [--mode ml|reflective] MORPHISM_FILE
    monolight verify    --ctx TAG [--budget N] [--seed S] [--samples N] [--cover FILE]... SUITE DIRECTORY
    monolight classify  --ctx TAG [--seed S] [--samples N] [--cover FILE] MORPHISM_FILE
    monolight catalog   --ctx TAG DIRECTORY

Every command takes ``--format text|kv`` and ``-v``.  A command builds its
whole output before printing it, and exits with ``0`` on success, ``1`` when
a check fails, and otherwise with the ``exit_code`` of the error that
stopped it.
"""
import argparse
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import structlog

from .. import __version__, engine
from ..catalog import fixtures_for
from ..contexts import TorsionContext, get_context
from ..core.abelian import AbHom
from ..core.groups import GroupHom
from ..core.rings import RingHom
from ..core.xmod import XModMorphism
from ..exceptions import MonolightError, UsageError
from ..logs import configure_logging
from ..reports import CheckResult, Status, VerificationReport
from ..verifier import SUITES, Verifier
from . import formats


logger = structlog.get_logger(__name__)

MORPHISM_TYPES = (AbHom, GroupHom, RingHom, XModMorphism)

Output = Tuple[str, int]


class ArgumentParser(argparse.ArgumentParser):
    """
    An :py:class:`argparse.ArgumentParser` whose usage errors exit through
    :py:class:`~monolight.exceptions.UsageError` instead of ``sys.exit(2)``,
    which would collide with the parse error exit code.
    """

    def error(self, message: str):
        raise UsageError(f'{self.prog}: {message}')


def load_morphism(ctx: TorsionContext, path: str) -> Any:
    """
    Raises:
        ParseError: the file does not parse
        ValidationError: the morphism is not well defined
        ContextMismatch: the morphism does not belong to ``ctx``
        UsageError: the file holds an object, not a morphism
    """
    f = formats.load(path)
    if not isinstance(f, MORPHISM_TYPES):
        raise UsageError(f'{path} holds an object; expected a morphism file')
    ctx.check_morphism(f)
    return f


def _result(suite: str, check: str, passed: bool, details: Dict[str, Any], **counterexample: Any) -> CheckResult:
    if passed:
        return CheckResult(suite, check, Status.PASS, details=details)
    return CheckResult(suite, check, Status.FAIL, details=details, counterexample=counterexample)


def _render(report: VerificationReport, output_format: str) -> Output:
    text = report.as_kv() if output_format == 'kv' else report.render()
    return text, 1 if report.failed else 0


class Command:
    """
    One subcommand.  Subclasses set :py:attr:`name` and :py:attr:`help`,
    add their own arguments in :py:meth:`add_arguments`, and return the text
    to print together with the exit code from :py:meth:`run`.
    """

    #: The subcommand name
    name: str = ''
    #: One line of help for ``monolight --help``
    help: str = ''

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def register(self, subparsers: Any) -> None:
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        parser.add_argument('--ctx', required=True, help='the torsion context, e.g. ab, finab:p=2, fingrp')
        parser.add_argument('--format', choices=('text', 'kv'), default='text', help='the report rendering')
        parser.add_argument('-v', '--verbose', action='store_true', help='log debug events to stderr')
        self.add_arguments(parser)
        parser.set_defaults(command=self)

    def run(self, ctx: TorsionContext, args: argparse.Namespace) -> Output:
        raise NotImplementedError


class FactoriseCommand(Command):

    name = 'factorise'
    help = 'factor a morphism and print both factors with their classes'

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('--mode', choices=('ml', 'reflective'), default='ml')
        parser.add_argument('morphism', help='a hom, ringhom or xmodhom file')

    def run(self, ctx: TorsionContext, args: argparse.Namespace) -> Output:
        f = load_morphism(ctx, args.morphism)
        if args.mode == 'ml':
            report = self.monotone_light(ctx, f)
        else:
            report = self.reflective(ctx, f)
        return _render(report, args.format)

    def monotone_light(self, ctx: TorsionContext, f: Any) -> VerificationReport:
        suite = 'factorise'
        fact = engine.ml_factorise(ctx, f)
        checks = engine.check_ml_factorisation(ctx, fact)
        classifier = engine.Classifier(ctx)
        describe = ctx.describe_morphism
        report = VerificationReport(ctx.tag, suite)
        report.add(_result(suite, 'ml', checks['composes'], {
            'morphism': describe(f),
            'middle': ctx.describe_object(fact.middle),
            'kernel': ctx.describe_object(fact.kernel.domain),
            'torsion_kernel': ctx.describe_object(fact.torsion_kernel.domain),
            'native': fact.native,
        }, morphism=describe(f), property='composes'))
        report.add(_result(suite, 'q', checks['q-normal-epi'] and checks['q-torsion-kernel'], {
            'morphism': describe(fact.q),
            'in_E': classifier.in_E(fact.q),
            'in_Ebar': classifier.in_Ebar(fact.q),
            'iso': ctx.is_iso(fact.q),
        }, q=describe(fact.q), property='in_Ebar'))
        report.add(_result(suite, 'm', checks['m-torsion-free-kernel'], {
            'morphism': describe(fact.m),
            'in_Mbar': classifier.in_Mbar(fact.m),
            'in_M': '-' if classifier.in_M(fact.m) is None else classifier.in_M(fact.m),
            'kernel': ctx.describe_object(ctx.kernel_object(fact.m)),
            'iso': ctx.is_iso(fact.m),
        }, m=describe(fact.m), property='in_Mbar'))
        report.add(_result(suite, 'kernel-witness', checks['kernel-witness-iso'], {
            'witness': describe(fact.kernel_witness),
            'iso': checks['kernel-witness-iso'],
        }, witness=describe(fact.kernel_witness), property='iso'))
        return report

    def reflective(self, ctx: TorsionContext, f: Any) -> VerificationReport:
        suite = 'factorise'
        fact = engine.reflective_factorise(ctx, f)
        classifier = engine.Classifier(ctx)
        describe = ctx.describe_morphism
        composes = ctx.equal(ctx.compose(fact.m, fact.e), f)
        in_m = classifier.in_M(fact.m)
        report = VerificationReport(ctx.tag, suite)
        report.add(_result(suite, 'reflective', composes, {
            'morphism': describe(f),
            'middle': ctx.describe_object(fact.middle),
        }, morphism=describe(f), property='composes'))
        report.add(_result(suite, 'e', fact.e_inverted, {
            'morphism': describe(fact.e),
            'in_E': fact.e_inverted,
            'in_Ebar': classifier.in_Ebar(fact.e),
            'iso': ctx.is_iso(fact.e),
        }, e=describe(fact.e), property='in_E'))
        report.add(_result(suite, 'm', bool(in_m), {
            'morphism': describe(fact.m),
            'in_M': in_m,
            'in_Mbar': classifier.in_Mbar(fact.m),
            'kernel': ctx.describe_object(ctx.kernel_object(fact.m)),
            'iso': ctx.is_iso(fact.m),
        }, m=describe(fact.m), property='in_M'))
        return report


class VerifyCommand(Command):

    name = 'verify'
    help = 'run a verification suite over a directory of structure files'

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('--budget', type=int, default=None, help='the most candidates one search may visit')
        parser.add_argument('--seed', type=int, default=None, help='the sampling seed')
        parser.add_argument('--samples', type=int, default=None, help='how many morphisms sampled checks use')
        parser.add_argument('--cover', action='append', default=[], help='a cover morphism file; repeatable')
        parser.add_argument('suite', choices=SUITES)
        parser.add_argument('directory', help='a directory of structure files')

    def run(self, ctx: TorsionContext, args: argparse.Namespace) -> Output:
        directory = Path(args.directory)
        if not directory.is_dir():
            raise UsageError(f'{directory} is not a directory')
        fixtures = formats.FixtureDirectory(directory)
        for A in fixtures.objects.values():
            ctx.check_object(A)
        for f in fixtures.morphisms.values():
            ctx.check_morphism(f)
        covers = [load_morphism(ctx, path) for path in args.cover]
        verifier = Verifier(ctx, budget=args.budget, samples=args.samples, seed=args.seed)
        report = verifier.run_suite(
            args.suite,
            list(fixtures.objects.values()),
            list(fixtures.morphisms.values()),
            covers,
        )
        return _render(report, args.format)


class ClassifyCommand(Command):

    name = 'classify'
    help = 'say which morphism classes a morphism belongs to, and how each verdict was reached'

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('--seed', type=int, default=None, help='the pullback sampling seed')
        parser.add_argument('--samples', type=int, default=None, help='how many pullbacks E\' is sampled on')
        parser.add_argument('--cover', default=None, help='a cover of the codomain, to certify M*')
        parser.add_argument('morphism', help='a hom, ringhom or xmodhom file')

    def run(self, ctx: TorsionContext, args: argparse.Namespace) -> Output:
        f = load_morphism(ctx, args.morphism)
        cover = load_morphism(ctx, args.cover) if args.cover else None
        objects = [f.domain, f.codomain] + fixtures_for(ctx).object_list()
        record = engine.classify(ctx, f, samples=args.samples, seed=args.seed, objects=objects, cover=cover)
        return (record.as_kv() if args.format == 'kv' else record.render()), 0


def slug(name: str) -> str:
    """
    A file name stem for a fixture name: runs of anything but letters,
    digits and ``-`` become ``_``.
    """
    return re.sub(r'[^A-Za-z0-9-]+', '_', name).strip('_')


class CatalogCommand(Command):

    name = 'catalog'
    help = 'write the built-in fixtures of a context to a directory as structure files'

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('directory', help='where to write; created if missing')

    def run(self, ctx: TorsionContext, args: argparse.Namespace) -> Output:
        fixtures = fixtures_for(ctx)
        directory = Path(args.directory)
        directory.mkdir(parents=True, exist_ok=True)
        written: List[str] = []
        stems: Dict[str, Any] = {}
        for name, A in fixtures.objects.items():
            stem = slug(name)
            stems[stem] = A
            written.append(self.write(directory / f'{stem}.txt', formats.dump(A)))
        for name, f in fixtures.morphisms.items():
            stem = slug(name)
            ends = []
            for end, X in (('domain', f.domain), ('codomain', f.codomain)):
                match = next((s for s, A in stems.items() if A == X), None)
                if match is None:
                    match = f'{stem}.{end}'
                    written.append(self.write(directory / f'{match}.txt', formats.dump(X)))
                ends.append(f'{match}.txt')
            written.append(self.write(directory / f'{stem}.txt', formats.dump_morphism(f, *ends)))
        logger.info('cli.catalog', ctx=ctx.tag, directory=str(directory), files=len(written))
        report = VerificationReport(ctx.tag, 'catalog')
        report.add(CheckResult('catalog', 'write', Status.PASS, details={
            'directory': str(directory),
            'objects': len(fixtures.objects),
            'morphisms': len(fixtures.morphisms),
            'files': len(written),
        }))
        return _render(report, args.format)

    def write(self, path: Path, text: str) -> str:
        path.write_text(text, encoding='ascii')
        return path.name


#: Every subcommand, in ``--help`` order
COMMANDS: Tuple[Command, ...] = (FactoriseCommand(), VerifyCommand(), ClassifyCommand(), CatalogCommand())


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog='monolight',
        description='Torsion theories and monotone-light factorisation in small algebraic categories.',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='name', metavar='command', parser_class=ArgumentParser)
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one ``monolight`` command and return its exit code.
    """
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        ctx = get_context(args.ctx)
        text, code = args.command.run(ctx, args)
    except MonolightError as e:
        logger.debug('cli.error', error=type(e).__name__, exit_code=e.exit_code)
        sys.stderr.write(f'monolight: {e}\n')
        return e.exit_code
    except OSError as e:
        sys.stderr.write(f'monolight: {e}\n')
        return UsageError.exit_code
    sys.stdout.write(text)
    return code


if __name__ == '__main__':
    sys.exit(main())
