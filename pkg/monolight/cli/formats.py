"""
Reading and writing structure files.

Every file holds one structure and starts with a line naming its kind::

    abgroup <n> <m>          n lines of m integers: the relation matrix
    fingroup <n>             n lines of n indices: the multiplication table
    finring <n>              n lines (addition), a blank line, n lines (multiplication)
    xmod                     a fingroup block for A, one for B, a boundary line
                             of |A| indices, then |B| lines of |A| indices (action)
    hom <dom> <cod>          the matrix (abelian groups) or one line of indices
    ringhom <dom> <cod>      one line of indices
    xmodhom <dom> <cod>      one line of |A| indices (f1), one of |B| indices (f0)

``<dom>`` and ``<cod>`` are paths relative to the file that names them.
Blank lines are ignored except as written by :py:func:`dump`; lines
starting with ``#`` are comments.
"""
from pathlib import Path
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

import structlog

from ..core.abelian import AbHom, PresentedAbGroup
from ..core.groups import FiniteGroup, GroupHom
from ..core.matrices import IntMatrix
from ..core.rings import FiniteCommRing, RingHom
from ..core.xmod import CrossedModule, XModMorphism
from ..exceptions import ParseError


logger = structlog.get_logger(__name__)

#: Kinds that describe objects
OBJECT_KINDS = ('abgroup', 'fingroup', 'finring', 'xmod')
#: Kinds that describe morphisms
MORPHISM_KINDS = ('hom', 'ringhom', 'xmodhom')

PathLike = Union[str, Path]


class Token(NamedTuple):
    text: str
    line: int
    column: int


class Reader:
    """
    Walk the non-blank, non-comment lines of one file as lists of tokens.

    Args:
        text: the file contents

    Keyword Args:
        source: the file name for error messages
    """

    def __init__(self, text: str, source: Optional[str] = None):
        self.source = source
        self.lines: List[Tuple[int, List[Token]]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            if raw.lstrip().startswith('#'):
                continue
            tokens = list(self._split(raw, number))
            if tokens:
                self.lines.append((number, tokens))
        self.position = 0
        self.last_line = len(text.splitlines()) or 1

    @staticmethod
    def _split(raw: str, number: int) -> Iterator[Token]:
        column = 0
        for piece in raw.split():
            column = raw.index(piece, column)
            yield Token(piece, number, column + 1)
            column += len(piece)

    def error(self, message: str, token: Optional[Token] = None, line: Optional[int] = None) -> ParseError:
        if token is not None:
            return ParseError(message, line=token.line, column=token.column, source=self.source)
        return ParseError(message, line=line, source=self.source)

    def next_line(self, what: str) -> List[Token]:
        """
        Raises:
            ParseError: the file ended before ``what``
        """
        if self.position >= len(self.lines):
            raise self.error(f'unexpected end of file, expected {what}', line=self.last_line)
        _, tokens = self.lines[self.position]
        self.position += 1
        return tokens

    def integers(self, what: str, count: int) -> List[int]:
        """
        The next line, which must hold exactly ``count`` integers.

        Raises:
            ParseError: wrong number of tokens, or a token is not an integer
        """
        if count == 0:
            # an empty row is written as a blank line, which we skip
            return []
        tokens = self.next_line(what)
        if len(tokens) != count:
            culprit = tokens[count] if len(tokens) > count else tokens[-1]
            raise self.error(f'expected {count} integers in {what}, found {len(tokens)}', culprit)
        return [self.integer(token) for token in tokens]

    def integer(self, token: Token, minimum: Optional[int] = None) -> int:
        try:
            value = int(token.text)
        except ValueError:
            raise self.error(f'"{token.text}" is not an integer', token) from None
        if minimum is not None and value < minimum:
            raise self.error(f'expected an integer >= {minimum}, found {value}', token)
        return value

    def header(self, kind: str, arguments: int) -> List[Token]:
        """
        The next line, which must be ``kind`` followed by ``arguments``
        tokens.
        """
        tokens = self.next_line(f'a "{kind}" header')
        if tokens[0].text != kind:
            raise self.error(f'expected "{kind}", found "{tokens[0].text}"', tokens[0])
        if len(tokens) != arguments + 1:
            culprit = tokens[arguments + 1] if len(tokens) > arguments + 1 else tokens[-1]
            raise self.error(f'"{kind}" takes {arguments} arguments, found {len(tokens) - 1}', culprit)
        return tokens[1:]

    def finish(self) -> None:
        if self.position < len(self.lines):
            raise self.error('unexpected trailing content', self.lines[self.position][1][0])


# --------------------------------------------
# Parsing
# --------------------------------------------

def _table(reader: Reader, n: int, what: str) -> List[List[int]]:
    return [reader.integers(f'row {i + 1} of the {what}', n) for i in range(n)]


def _fingroup(reader: Reader, name: Optional[str]) -> FiniteGroup:
    (size,) = reader.header('fingroup', 1)
    n = reader.integer(size, minimum=1)
    return FiniteGroup(_table(reader, n, 'multiplication table'), name=name)


def _abgroup(reader: Reader) -> PresentedAbGroup:
    n_token, m_token = reader.header('abgroup', 2)
    n, m = reader.integer(n_token, minimum=0), reader.integer(m_token, minimum=0)
    rows = [reader.integers(f'row {i + 1} of the relation matrix', m) for i in range(n)] if m else []
    relations = IntMatrix.from_rows(rows, cols=m) if m else IntMatrix.zeros(n, 0)
    return PresentedAbGroup(n, relations)


def _finring(reader: Reader, name: Optional[str]) -> FiniteCommRing:
    (size,) = reader.header('finring', 1)
    n = reader.integer(size, minimum=1)
    add = _table(reader, n, 'addition table')
    mul = _table(reader, n, 'multiplication table')
    return FiniteCommRing(add, mul, name=name)


def _xmod(reader: Reader, name: Optional[str]) -> CrossedModule:
    reader.header('xmod', 0)
    A = _fingroup(reader, f'{name}.A' if name else None)
    B = _fingroup(reader, f'{name}.B' if name else None)
    boundary = GroupHom(A, B, reader.integers('the boundary', A.order))
    action = _rows(reader, B.order, A.order, 'action table')
    return CrossedModule(A, B, boundary, action, name=name)


def _rows(reader: Reader, count: int, width: int, what: str) -> List[List[int]]:
    return [reader.integers(f'row {i + 1} of the {what}', width) for i in range(count)]


def _resolve(reader: Reader, token: Token, base: Path, loading: Tuple[Path, ...]) -> Any:
    path = (base / token.text).resolve()
    if path in loading:
        raise reader.error(f'"{token.text}" refers back to a file being loaded', token)
    if not path.is_file():
        raise reader.error(f'no such file "{token.text}"', token)
    obj = load(path, _loading=loading)
    if isinstance(obj, (AbHom, GroupHom, RingHom, XModMorphism)):
        raise reader.error(f'"{token.text}" holds a morphism, not an object', token)
    return obj


def _morphism(reader: Reader, kind: str, base: Path, loading: Tuple[Path, ...]) -> Any:
    dom_token, cod_token = reader.header(kind, 2)
    domain = _resolve(reader, dom_token, base, loading)
    codomain = _resolve(reader, cod_token, base, loading)
    if type(domain) is not type(codomain):
        raise reader.error('domain and codomain are different kinds of structure', cod_token)
    if kind == 'hom':
        if isinstance(domain, PresentedAbGroup):
            rows = _rows(reader, codomain.generators, domain.generators, 'matrix') if domain.generators else []
            matrix = IntMatrix.from_rows(rows, cols=domain.generators) if rows else IntMatrix.zeros(codomain.generators, domain.generators)
            return AbHom(domain, codomain, matrix)
        if isinstance(domain, FiniteGroup):
            return GroupHom(domain, codomain, reader.integers('the images', domain.order))
        raise reader.error('"hom" needs abelian or finite groups', dom_token)
    if kind == 'ringhom':
        if not isinstance(domain, FiniteCommRing):
            raise reader.error('"ringhom" needs finite rings', dom_token)
        return RingHom(domain, codomain, reader.integers('the images', domain.order))
    if not isinstance(domain, CrossedModule):
        raise reader.error('"xmodhom" needs crossed modules', dom_token)
    f1 = GroupHom(domain.A, codomain.A, reader.integers('the images of f1', domain.A.order))
    f0 = GroupHom(domain.B, codomain.B, reader.integers('the images of f0', domain.B.order))
    return XModMorphism(domain, codomain, f1, f0)


def parse(
    text: str,
    source: Optional[str] = None,
    base: Optional[Path] = None,
    name: Optional[str] = None,
    _loading: Tuple[Path, ...] = ()
) -> Any:
    """
    Parse one structure file.

    Args:
        text: the file contents

    Keyword Args:
        source: the file name for error messages
        base: the directory morphism files resolve their paths against
        name: a name for the structure, used in reports

    Raises:
        ParseError: the text does not follow the grammar of its kind
        ValidationError: the structure parsed but fails its axioms
    """
    reader = Reader(text, source=source)
    if not reader.lines:
        raise reader.error('empty structure file', line=1)
    kind_token = reader.lines[0][1][0]
    kind = kind_token.text
    if kind == 'abgroup':
        obj: Any = _abgroup(reader)
    elif kind == 'fingroup':
        obj = _fingroup(reader, name)
    elif kind == 'finring':
        obj = _finring(reader, name)
    elif kind == 'xmod':
        obj = _xmod(reader, name)
    elif kind in MORPHISM_KINDS:
        obj = _morphism(reader, kind, base or Path.cwd(), _loading)
    else:
        known = ', '.join(OBJECT_KINDS + MORPHISM_KINDS)
        raise reader.error(f'unknown structure kind "{kind}"; expected one of {known}', kind_token)
    reader.finish()
    return obj


def load(path: PathLike, _loading: Tuple[Path, ...] = ()) -> Any:
    """
    Read and parse the structure file at ``path``; the file stem names the
    structure.

    Raises:
        ParseError: the file does not parse
        ValidationError: the structure fails its axioms
    """
    path = Path(path).resolve()
    logger.debug('formats.load', path=str(path))
    return parse(
        path.read_text(encoding='ascii', errors='replace'),
        source=str(path),
        base=path.parent,
        name=path.stem,
        _loading=_loading + (path,),
    )


class FixtureDirectory:
    """
    Every structure file in one directory, split into objects and
    morphisms.  Hidden files and subdirectories are skipped; files load in
    name order.
    """

    def __init__(self, path: PathLike):
        self.path = Path(path)
        self.objects: Dict[str, Any] = {}
        self.morphisms: Dict[str, Any] = {}
        for entry in sorted(self.path.iterdir()):
            if entry.name.startswith('.') or not entry.is_file():
                continue
            obj = load(entry)
            if isinstance(obj, (AbHom, GroupHom, RingHom, XModMorphism)):
                self.morphisms[entry.stem] = obj
            else:
                self.objects[entry.stem] = obj

    def __len__(self) -> int:
        return len(self.objects) + len(self.morphisms)


# --------------------------------------------
# Printing
# --------------------------------------------

def _lines(rows: Any) -> List[str]:
    return [' '.join(str(int(x)) for x in row) for row in rows]


def _dump_fingroup(G: FiniteGroup) -> List[str]:
    return [f'fingroup {G.order}'] + _lines(G.table.tolist())


def dump(obj: Any) -> str:
    """
    The canonical text of an object: :py:func:`parse` reads it back to an
    equal object.
    """
    if isinstance(obj, PresentedAbGroup):
        lines = [f'abgroup {obj.generators} {obj.relations.cols}'] + _lines(obj.relations.tolist())
    elif isinstance(obj, FiniteGroup):
        lines = _dump_fingroup(obj)
    elif isinstance(obj, FiniteCommRing):
        lines = [f'finring {obj.order}'] + _lines(obj.add.tolist()) + [''] + _lines(obj.mul.tolist())
    elif isinstance(obj, CrossedModule):
        lines = ['xmod'] + _dump_fingroup(obj.A) + _dump_fingroup(obj.B)
        lines += _lines([obj.boundary.map.tolist()]) + _lines(obj.action.tolist())
    else:
        raise TypeError(f'cannot write {obj!r} as a structure file')
    return '\n'.join(lines) + '\n'


def dump_morphism(f: Any, domain: str, codomain: str) -> str:
    """
    The canonical text of a morphism whose domain and codomain are stored
    at the relative paths ``domain`` and ``codomain``.
    """
    if isinstance(f, AbHom):
        lines = [f'hom {domain} {codomain}'] + _lines(f.matrix.tolist())
    elif isinstance(f, GroupHom):
        lines = [f'hom {domain} {codomain}'] + _lines([f.map.tolist()])
    elif isinstance(f, RingHom):
        lines = [f'ringhom {domain} {codomain}'] + _lines([f.map.tolist()])
    elif isinstance(f, XModMorphism):
        lines = [f'xmodhom {domain} {codomain}'] + _lines([f.f1.map.tolist(), f.f0.map.tolist()])
    else:
        raise TypeError(f'cannot write {f!r} as a structure file')
    return '\n'.join(lines) + '\n'
