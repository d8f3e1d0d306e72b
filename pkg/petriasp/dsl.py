"""
petriasp
Module to parse and write net description files.

The format is line oriented, one statement per line:

    place <name> [tokens=<n>]
    trans <name>
    arc <source> -> <target> [weight=<n>]
    reset <place> -> <transition>
    inhibit <place> -> <transition>
    read <place> -> <transition> weight=<n>

Everything after a # is a comment. Missing token counts are 0 and
missing arc weights are 1.

The direction of an arc statement decides whether it goes from a
place to a transition or the other way around, so declarations
can appear in any order.
"""

# Copyright (C) 2026 petriasp contributors
#
# petriasp is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import logging
import re
from typing import Any, Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from .exceptions import ErrorKind, PetriValueError, Problem, Span
from .net import ArcKind, InputArc, Marking, OutputArc, PetriNet, problems


__all__ = [
    'Declaration',
    'NetDocument',
    'Parser',
    'parse_document',
    'parse_net',
    'serialize_net',
]


logger = logging.getLogger(__name__)


class Declaration(NamedTuple):
    """
    One statement of a net description.

    keyword: place, trans, arc, reset, inhibit or read.
    names: the node name, or the source and target of an arc.
    options: key=value pairs, like tokens or weight.
    span: where the statement starts.
    """
    keyword: str
    names: Tuple[str, ...]
    options: Tuple[Tuple[str, int], ...] = ()
    span: Optional[Span] = None

    def option(self, key: str, default: Optional[int] = None) -> Optional[int]:
        return dict(self.options).get(key, default)


class NetDocument(NamedTuple):
    declarations: Tuple[Declaration, ...] = ()

    @property
    def spans(self) -> Tuple[Optional[Span], ...]:
        return tuple(i.span for i in self.declarations)


_TOKEN = re.compile(r'\S+')
_OPTION = re.compile(r'([a-z]+)=(-?\d+)\Z')


_ALLOWED_OPTIONS = {
    'place': {'tokens'},
    'trans': set(),
    'arc': {'weight'},
    'reset': set(),
    'inhibit': {'weight'},
    'read': {'weight'},
}


def _statement(keyword: str, tokens: List[Tuple[str, int]], lineno: int) -> Tuple[Optional[Declaration], List[Problem]]:
    '''
    Turns the tokens of a line into a declaration.
    '''
    column = tokens[0][1]
    span = Span(lineno, column)
    found = []  # type: List[Problem]
    arrow = keyword not in ('place', 'trans')

    if arrow:
        if len(tokens) < 4 or tokens[2][0] != '->':
            return None, [Problem(ErrorKind.SYNTAX, 'expected: %s <source> -> <target>' % keyword, span)]
        names = (tokens[1][0], tokens[3][0])
        rest = tokens[4:]
    else:
        if len(tokens) < 2:
            return None, [Problem(ErrorKind.SYNTAX, 'expected: %s <name>' % keyword, span)]
        names = (tokens[1][0], )
        rest = tokens[2:]

    options = []
    for text, col in rest:
        m = _OPTION.match(text)
        if m is None:
            found.append(Problem(ErrorKind.SYNTAX, 'unexpected %r, options are written as key=<integer>' % text, Span(lineno, col)))
            continue
        key = m.group(1)
        if key not in _ALLOWED_OPTIONS[keyword]:
            found.append(Problem(ErrorKind.SYNTAX, '%s does not accept %s=' % (keyword, key), Span(lineno, col)))
            continue
        if key in dict(options):
            found.append(Problem(ErrorKind.SYNTAX, '%s= given twice' % key, Span(lineno, col)))
            continue
        options.append((key, int(m.group(2))))

    if keyword == 'read' and 'weight' not in dict(options):
        found.append(Problem(ErrorKind.SYNTAX, 'read arcs need weight=<n>', span))
    if found:
        return None, found
    return Declaration(keyword, names, tuple(options), span), []


def _scan(text: str) -> Tuple[NetDocument, List[Problem]]:
    '''
    The well formed declarations of a text and the syntax
    errors of the others.
    '''
    declarations = []
    found = []  # type: List[Problem]
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0]
        tokens = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        keyword = tokens[0][0]
        if keyword not in _ALLOWED_OPTIONS:
            found.append(Problem(ErrorKind.SYNTAX, 'unknown statement %r' % keyword, Span(lineno, tokens[0][1])))
            continue
        declaration, errors = _statement(keyword, tokens, lineno)
        found.extend(errors)
        if declaration is not None:
            declarations.append(declaration)
    return NetDocument(tuple(declarations)), found


def parse_document(text: str) -> NetDocument:
    """
    Splits a net description into declarations, checking only
    the syntax.

    All syntax errors are reported together.
    """
    document, found = _scan(text)
    if found:
        raise PetriValueError('Syntax errors: %d' % len(found), found)
    return document



class _Builder:
    '''
    Collects what the declarations describe
    '''
    def __init__(self) -> None:
        self.places = {}  # type: Dict[str, int]
        self.transitions = set()  # type: set
        self.input_arcs = []  # type: List[InputArc]
        self.output_arcs = []  # type: List[OutputArc]
        self.spans = {}  # type: Dict[Any, Span]
        self.problems = []  # type: List[Problem]


class Parser:
    """
    Parser for net description files.

    failoninhibitorweight: Disabled by default.
        Inhibitor arcs always have threshold 1. When disabled, a
        weight written on an inhibitor arc is dropped with a
        warning. When enabled, it is a syntax error.

    handlers: This is the list that the parser uses to
        turn declarations into the net.
        The type is:
        List[
            Tuple[
                Callable[[str], bool],
                Callable[['Parser', _Builder, Declaration], None]
            ]
        ]

        The elements are: Tuple[Condition, Handler]
        Condition(keyword) -> Bool
        Handler(parser, builder, declaration) -> None

        Handlers of arcs run after all nodes are known.

    These parameters can be set as named arguments in the constructor
    or they can be set later on.
    """

    def __init__(self, **kwargs) -> None:
        self.failoninhibitorweight = False

        self.handlers = [
            (lambda kw: kw == 'place', _placeload),
            (lambda kw: kw == 'trans', _transload),
            (lambda kw: kw == 'arc', _arcload),
            (lambda kw: kw in ('reset', 'inhibit', 'read'), _specialarcload),
        ]  # type: List[Tuple[Callable[[str], bool], Callable[[Parser, _Builder, Declaration], None]]]

        for k, v in kwargs.items():
            setattr(self, k, v)

    def index(self, keyword: str) -> int:
        """
        Returns the index in the handlers list
        that matches the given keyword.

        If no condition matches, ValueError is raised.
        """
        for i, (cond, _) in enumerate(self.handlers):
            if cond(keyword):
                return i
        raise ValueError('No handler for %r' % keyword)

    def build(self, document: NetDocument, syntax: Iterable[Problem] = ()) -> Tuple[PetriNet, Marking]:
        """
        Builds the net and its initial marking from declarations.

        Raises PetriValueError with all the problems found,
        the syntax ones passed in and the ones found by validation.
        """
        b = _Builder()
        b.problems.extend(syntax)
        nodes = [d for d in document.declarations if d.keyword in ('place', 'trans')]
        arcs = [d for d in document.declarations if d.keyword not in ('place', 'trans')]
        for d in nodes + arcs:
            self.handlers[self.index(d.keyword)][1](self, b, d)

        net = PetriNet(b.places, b.transitions, b.input_arcs, b.output_arcs)
        m0 = net.marking(b.places)
        found = b.problems + problems(net, m0, b.spans)
        if found:
            found.sort(key=lambda p: p.span or Span(0, 0))
            raise PetriValueError('Invalid net: %d problem(s)' % len(found), found)
        return net, m0

    def parse(self, text: str) -> Tuple[PetriNet, Marking]:
        """
        Syntax errors do not stop the parsing, the net is built
        from the other statements and all the problems are
        raised together.
        """
        return self.build(*_scan(text))


def _placeload(p: Parser, b: _Builder, d: Declaration) -> None:
    name = d.names[0]
    if name in b.places:
        b.problems.append(Problem(ErrorKind.NAME_CLASH, 'place %s declared twice' % name, d.span))
        return
    b.places[name] = d.option('tokens', 0)
    b.spans[name] = d.span


def _transload(p: Parser, b: _Builder, d: Declaration) -> None:
    name = d.names[0]
    if name in b.transitions:
        b.problems.append(Problem(ErrorKind.NAME_CLASH, 'transition %s declared twice' % name, d.span))
        return
    b.transitions.add(name)
    b.spans.setdefault(name, d.span)


def _arcload(p: Parser, b: _Builder, d: Declaration) -> None:
    '''
    Normal arcs, the direction comes from the names
    '''
    source, target = d.names
    weight = d.option('weight', 1)
    if source in b.places and target in b.transitions:
        arc = InputArc(source, target, ArcKind.NORMAL, weight)  # type: Any
        b.input_arcs.append(arc)
    elif source in b.transitions and target in b.places:
        arc = OutputArc(source, target, weight)
        b.output_arcs.append(arc)
    else:
        unknown = [i for i in d.names if i not in b.places and i not in b.transitions]
        if unknown:
            message = 'undeclared %s' % ', '.join(unknown)
        else:
            message = 'an arc must connect a place and a transition'
        b.problems.append(Problem(ErrorKind.UNKNOWN_NODE, 'arc %s -> %s: %s' % (source, target, message), d.span))
        return
    b.spans[arc] = d.span


def _specialarcload(p: Parser, b: _Builder, d: Declaration) -> None:
    '''
    Reset, inhibitor and read arcs, always from a place
    '''
    place, transition = d.names
    kind = ArcKind(d.keyword)
    if place not in b.places or transition not in b.transitions:
        b.problems.append(Problem(
            ErrorKind.UNKNOWN_NODE,
            '%s %s -> %s: must go from a declared place to a declared transition' % (d.keyword, place, transition),
            d.span))
        return
    weight = None  # type: Optional[int]
    if kind is ArcKind.READ:
        weight = d.option('weight')
    elif kind is ArcKind.INHIBITOR and d.option('weight') is not None:
        if p.failoninhibitorweight:
            b.problems.append(Problem(ErrorKind.SYNTAX, 'inhibitor arcs have no weight', d.span))
            return
        logger.warning('Line %d: inhibitor weight %d dropped, inhibitors always use threshold 1',
                       d.span.line if d.span else 0, d.option('weight'))
    arc = InputArc(place, transition, kind, weight)
    b.input_arcs.append(arc)
    b.spans[arc] = d.span


def parse_net(text: str, **kwargs) -> Tuple[PetriNet, Marking]:
    """
    Quick function to parse a net description.

    It is useful to avoid creating the Parser object,
    in case only the default parameters are used.
    """
    return Parser(**kwargs).parse(text)


def serialize_net(net: PetriNet, m0: Mapping[str, int]) -> str:
    """
    Canonical text of a net: places, transitions, then arcs,
    each group sorted. Default token counts and weights are
    not written.
    """
    lines = []
    for p in net.places:
        q = m0.get(p, 0)
        lines.append('place %s tokens=%d' % (p, q) if q else 'place %s' % p)
    for t in net.transitions:
        lines.append('trans %s' % t)
    for i in net.input_arcs:
        if i.kind is ArcKind.READ or (i.kind is ArcKind.NORMAL and i.weight != 1):
            lines.append('%s %s -> %s weight=%d' % (i.kind.value, i.place, i.transition, i.weight))
        else:
            lines.append('%s %s -> %s' % (i.kind.value, i.place, i.transition))
    for o in net.output_arcs:
        if o.weight != 1:
            lines.append('arc %s -> %s weight=%d' % (o.transition, o.place, o.weight))
        else:
            lines.append('arc %s -> %s' % (o.transition, o.place))
    return '\n'.join(lines) + '\n' if lines else ''
