"""
petriasp
Answer set programming encodings of nets.

emit() writes a logic program whose answer sets are the
execution sequences of a net, from an initial marking, for the
time steps 0..k.

The program is built from a few blocks, selected by the variant:

    * the net as facts (timeless arcs at base level, arcs with a
      time argument from the reset level up),
    * enabling, firing choice, token aggregation and the
      overconsumption constraint,
    * the rules for reset, inhibitor and read arcs,
    * the rules that restrict the firing semantics.

Every emitted line has exactly one rule label, so a program can
be traced back to the block that produced each line.
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

from enum import Enum
import itertools
import logging
import re
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from .engine import ResetMode, SemanticsMode
from .exceptions import ErrorKind, PetriValueError, Problem, Span
from .net import ArcKind, InputArc, PetriNet


__all__ = [
    'ExtensionLevel',
    'Dialect',
    'Rule',
    'AspVariant',
    'AspProgram',
    'emit',
    'required_level',
    'suggest_ntok',
    'expand_shorthand',
    'fact_set',
]


logger = logging.getLogger(__name__)


class ExtensionLevel(Enum):
    """
    How much of the encoding is used.

    Every level includes the previous ones.
    """
    BASE = 'base'
    RESET = 'reset'
    INHIBIT = 'inhibit'
    READ = 'read'

    @property
    def rank(self) -> int:
        return _LEVELS.index(self)

    def covers(self, other: 'ExtensionLevel') -> bool:
        return self.rank >= other.rank


_LEVELS = [ExtensionLevel.BASE, ExtensionLevel.RESET, ExtensionLevel.INHIBIT, ExtensionLevel.READ]


class Dialect(Enum):
    """
    Syntax of the two aggregate rules.

    LEGACY: #sum[atom=weight : domain] as accepted by the old
        grounders.
    CLINGO: #sum{weight,tuple : body} as accepted by current
        solvers.
    """
    LEGACY = 'legacy'
    CLINGO = 'clingo'


class Rule(Enum):
    """
    Labels of the emitted lines.
    """
    PLACE = 'place'
    TRANS = 'trans'
    PTARC = 'ptarc'
    TPARC = 'tparc'
    TIME = 'time'
    INITIAL = 'initial-marking'
    NUM = 'num'
    NOTENABLED = 'notenabled'
    ENABLED = 'enabled'
    CHOICE = 'fires-choice'
    ADD = 'add'
    DEL = 'del'
    TOT_INCR = 'tot-incr'
    TOT_DECR = 'tot-decr'
    NEXT = 'next-marking'
    CONSUMESMORE_AT = 'consumesmore-at'
    CONSUMESMORE = 'consumesmore'
    NO_OVERCONSUMPTION = 'no-overconsumption'
    COULD_NOT_HAVE = 'could-not-have'
    MAXIMAL = 'maximal'
    MORE_THAN_ONE = 'more-than-one-fires'
    AT_MOST_ONE = 'at-most-one'
    TIMED_PTARC = 'timed-ptarc'
    TIMED_TPARC = 'timed-tparc'
    TIMED_NOTENABLED = 'timed-notenabled'
    TIMED_ADD = 'timed-add'
    TIMED_DEL = 'timed-del'
    RESET_PTARC = 'reset-ptarc'
    RESET_FACT = 'reset-fact'
    RESET_AT = 'reset-at'
    NEXT_KEEP = 'next-marking-kept'
    NEXT_RESET = 'next-marking-reset'
    INHIBITOR_ARC = 'inhibitor-arc'
    INHIBITED = 'inhibited'
    READ_ARC = 'read-arc'
    UNREAD = 'read-threshold'
    RESET_BLOCKED = 'reset-blocked'

    @property
    def label(self) -> str:
        '''
        Name of the rule in the published listings of the encoding.
        '''
        return _LABELS[self]


_LABELS = {
    Rule.PLACE: 'f1',
    Rule.TRANS: 'f2',
    Rule.PTARC: 'f3',
    Rule.TPARC: 'f4',
    Rule.TIME: 'f5',
    Rule.INITIAL: 'i1',
    Rule.NUM: 'x1',
    Rule.NOTENABLED: 'e1',
    Rule.ENABLED: 'e2',
    Rule.CHOICE: 'a1',
    Rule.ADD: 'r1',
    Rule.DEL: 'r2',
    Rule.TOT_INCR: 'r3',
    Rule.TOT_DECR: 'r4',
    Rule.NEXT: 'r5',
    Rule.CONSUMESMORE_AT: 'a2',
    Rule.CONSUMESMORE: 'a3',
    Rule.NO_OVERCONSUMPTION: 'a4',
    Rule.COULD_NOT_HAVE: 'a5',
    Rule.MAXIMAL: 'a6',
    Rule.MORE_THAN_ONE: 'a5′',
    Rule.AT_MOST_ONE: 'a6′',
    Rule.TIMED_PTARC: 'f6',
    Rule.TIMED_TPARC: 'f7',
    Rule.TIMED_NOTENABLED: 'e3',
    Rule.TIMED_ADD: 'r6',
    Rule.TIMED_DEL: 'r7',
    Rule.RESET_PTARC: 'f8',
    Rule.RESET_FACT: 'f8′',
    Rule.RESET_AT: 'a7′',
    Rule.NEXT_KEEP: 'r5a′',
    Rule.NEXT_RESET: 'r5b′',
    Rule.INHIBITOR_ARC: 'f9',
    Rule.INHIBITED: 'e4',
    Rule.READ_ARC: 'f10',
    Rule.UNREAD: 'e5',
    Rule.RESET_BLOCKED: 'f8',
}  # type: Dict[Rule, str]


class AspVariant(NamedTuple):
    level: ExtensionLevel = ExtensionLevel.BASE
    semantics: SemanticsMode = SemanticsMode.SET
    reset_mode: ResetMode = ResetMode.CONTENTION
    ntok: int = 60
    k: int = 5
    dialect: Dialect = Dialect.LEGACY


class AspProgram(NamedTuple):
    """
    text: the program, one fact or rule per line.

    atom_schema: the predicates used, as name/arity.

    provenance: the rule of every line of text, in order.
        Rule.label gives its name in the published listings.
    """
    text: str
    atom_schema: Tuple[str, ...]
    provenance: Tuple[Tuple[Rule, str], ...]

    def lines(self, label: Rule) -> List[str]:
        return [line for l, line in self.provenance if l is label]

    def labelled(self) -> List[Tuple[str, str]]:
        '''
        (listing label, line) for every line of text.
        '''
        return [(rule.label, line) for rule, line in self.provenance]


# Fixed rules of the base encoding
_NOTENABLED = 'notenabled(T,TS) :- ptarc(P,T,N), holds(P,Q,TS), Q < N, place(P), trans(T), time(TS), num(N), num(Q).'
_ENABLED = 'enabled(T,TS) :- trans(T), time(TS), not notenabled(T,TS).'
_CHOICE = '{fires(T,TS)} :- enabled(T,TS), trans(T), time(TS).'
_ADD = 'add(P,Q,T,TS) :- fires(T,TS), tparc(T,P,Q), time(TS).'
_DEL = 'del(P,Q,T,TS) :- fires(T,TS), ptarc(P,T,Q), time(TS).'
_AGGREGATES = {
    Dialect.LEGACY: (
        'tot_incr(P,QQ,TS) :- QQ = #sum[add(P,Q,T,TS) = Q : num(Q) : trans(T)], time(TS), num(QQ), place(P).',
        'tot_decr(P,QQ,TS) :- QQ = #sum[del(P,Q,T,TS) = Q : num(Q) : trans(T)], time(TS), num(QQ), place(P).',
    ),
    Dialect.CLINGO: (
        'tot_incr(P,QQ,TS) :- QQ = #sum{Q,T : add(P,Q,T,TS), num(Q), trans(T)}, time(TS), num(QQ), place(P).',
        'tot_decr(P,QQ,TS) :- QQ = #sum{Q,T : del(P,Q,T,TS), num(Q), trans(T)}, time(TS), num(QQ), place(P).',
    ),
}
_NEXT = 'holds(P,Q,TS+1) :- holds(P,Q1,TS), tot_incr(P,Q2,TS), time(TS+1), tot_decr(P,Q3,TS), Q = Q1+Q2-Q3, place(P), num(Q;Q1;Q2;Q3), time(TS).'
_CONSUMESMORE_AT = 'consumesmore(P,TS) :- holds(P,Q,TS), tot_decr(P,Q1,TS), Q1 > Q.'
_CONSUMESMORE = 'consumesmore :- consumesmore(P,TS).'
_NO_OVERCONSUMPTION = ':- consumesmore.'

# Maximal firing sets
_COULD_NOT_HAVE = 'could_not_have(T,TS) :- enabled(T,TS), not fires(T,TS), ptarc(S,T,Q), holds(S,QQ,TS), tot_decr(S,QQQ,TS), Q > QQ-QQQ.'
_TIMED_COULD_NOT_HAVE = 'could_not_have(T,TS) :- enabled(T,TS), not fires(T,TS), ptarc(S,T,Q,TS), holds(S,QQ,TS), tot_decr(S,QQQ,TS), Q > QQ-QQQ.'
_MAXIMAL = ':- not could_not_have(T,TS), enabled(T,TS), not fires(T,TS), trans(T), time(TS).'

# Interleaved firing
_MORE_THAN_ONE = 'more_than_one_fires :- fires(T1,TS), fires(T2,TS), T1 != T2, time(TS).'
_AT_MOST_ONE = ':- more_than_one_fires.'

# Arcs with a time argument
_TIMED_NOTENABLED = 'notenabled(T,TS) :- ptarc(P,T,N,TS), holds(P,Q,TS), Q < N, place(P), trans(T), time(TS), num(N), num(Q).'
_TIMED_ADD = 'add(P,Q,T,TS) :- fires(T,TS), tparc(T,P,Q,TS), time(TS).'
_TIMED_DEL = 'del(P,Q,T,TS) :- fires(T,TS), ptarc(P,T,Q,TS), time(TS).'

# Reset arcs as a side effect
_RESET_AT = 'reset(P,TS) :- rptarc(P,T), place(P), trans(T), fires(T,TS), time(TS).'
_NEXT_KEEP = 'holds(P,Q,TS+1) :- holds(P,Q1,TS), tot_incr(P,Q2,TS), tot_decr(P,Q3,TS), Q = Q1+Q2-Q3, place(P), num(Q;Q1;Q2;Q3), time(TS), time(TS+1), not reset(P,TS).'
_NEXT_RESET = 'holds(P,Q,TS+1) :- tot_incr(P,Q,TS), place(P), num(Q), time(TS), time(TS+1), reset(P,TS).'

# Inhibitor and read arcs
_INHIBITED = 'notenabled(T,TS) :- iptarc(P,T,N,TS), holds(P,Q,TS), place(P), trans(T), time(TS), num(N), num(Q), Q >= N.'
_UNREAD = 'notenabled(T,TS) :- tptarc(P,T,N,TS), holds(P,Q,TS), place(P), trans(T), time(TS), num(N), num(Q), Q < N.'


def required_level(net: PetriNet) -> ExtensionLevel:
    '''
    The smallest level that can encode all the arcs of the net.
    '''
    kinds = net.arc_kinds()
    if ArcKind.READ in kinds:
        return ExtensionLevel.READ
    if ArcKind.INHIBITOR in kinds:
        return ExtensionLevel.INHIBIT
    if ArcKind.RESET in kinds:
        return ExtensionLevel.RESET
    return ExtensionLevel.BASE


def suggest_ntok(net: PetriNet, m0: Mapping[str, int], k: int) -> int:
    '''
    A bound for the num/1 domain: the initial tokens plus what
    every transition together could produce in each step.

    It is only a suggestion, answer sets silently disappear when
    ntok is too small.
    '''
    initial = sum(m0.values())
    production = sum(o.weight for o in net.output_arcs)
    weights = [i.weight for i in net.input_arcs if i.weight is not None]
    return max([initial + k * production] + weights)


class _Writer:
    def __init__(self) -> None:
        self.lines = []  # type: List[Tuple[Rule, str]]

    def add(self, label: Rule, line: str) -> None:
        self.lines.append((label, line))


def _schema(lines: Iterable[Tuple[Rule, str]]) -> Tuple[str, ...]:
    '''
    The predicates defined in the heads of the lines
    '''
    r = set()
    for _, line in lines:
        head = line.split(':-')[0].strip().rstrip('.').strip('{}')
        m = re.match(r'([a-z_][A-Za-z0-9_]*)(\((.*)\))?', head)
        if m is None:
            continue
        arity = 0 if m.group(3) is None else len(_splitargs(m.group(3)))
        r.add('%s/%d' % (m.group(1), arity))
    return tuple(sorted(r))


def emit(net: PetriNet, m0: Mapping[str, int], variant: AspVariant) -> AspProgram:
    """
    Writes the program for a net, its initial marking and a variant.

    Raises PetriValueError if the level of the variant can not
    represent every arc of the net.

    The ntok of the variant is used as given: if it is smaller than
    the token counts reached in the simulation, answer sets are lost.
    """
    needed = required_level(net)
    if not variant.level.covers(needed):
        raise PetriValueError(
            'The net needs at least level %s, %s was requested' % (needed.value, variant.level.value),
            [Problem(ErrorKind.VARIANT_TOO_LOW, 'arc kinds %s' % sorted(i.value for i in net.arc_kinds()), None)],
        )
    if variant.k < 0 or variant.ntok < 0:
        raise PetriValueError('Horizon and ntok can not be negative', kind=ErrorKind.BAD_PARAMETER)

    timed = variant.level.covers(ExtensionLevel.RESET)
    standard = timed and variant.reset_mode is ResetMode.STANDARD
    w = _Writer()

    for p in net.places:
        w.add(Rule.PLACE, 'place(%s).' % p)
    for t in net.transitions:
        w.add(Rule.TRANS, 'trans(%s).' % t)

    for arc in net.input_arcs:
        if arc.kind is ArcKind.NORMAL:
            if timed:
                w.add(Rule.TIMED_PTARC, 'ptarc(%s,%s,%d,TS) :- time(TS).' % (arc.place, arc.transition, arc.weight))
            else:
                w.add(Rule.PTARC, 'ptarc(%s,%s,%d).' % (arc.place, arc.transition, arc.weight))
    for o in net.output_arcs:
        if timed:
            w.add(Rule.TIMED_TPARC, 'tparc(%s,%s,%d,TS) :- time(TS).' % (o.transition, o.place, o.weight))
        else:
            w.add(Rule.TPARC, 'tparc(%s,%s,%d).' % (o.transition, o.place, o.weight))
    normal = {(i.place, i.transition) for i in _ofkind(net, ArcKind.NORMAL)}
    for arc in _ofkind(net, ArcKind.RESET):
        if standard:
            w.add(Rule.RESET_FACT, 'rptarc(%s,%s).' % (arc.place, arc.transition))
        else:
            w.add(Rule.RESET_PTARC, 'ptarc(%s,%s,X,TS) :- holds(%s,X,TS), num(X), X > 0.' % (arc.place, arc.transition, arc.place))
            if (arc.place, arc.transition) in normal:
                # Whole place plus the normal weight is always more
                # than the place holds, and equal del atoms would merge
                w.add(Rule.RESET_BLOCKED, 'notenabled(%s,TS) :- time(TS).' % arc.transition)
    for arc in _ofkind(net, ArcKind.INHIBITOR):
        # Inhibitors always have weight 1
        w.add(Rule.INHIBITOR_ARC, 'iptarc(%s,%s,1,TS) :- time(TS).' % (arc.place, arc.transition))
    for arc in _ofkind(net, ArcKind.READ):
        w.add(Rule.READ_ARC, 'tptarc(%s,%s,%d,TS) :- time(TS).' % (arc.place, arc.transition, arc.weight))

    w.add(Rule.TIME, 'time(0..%d).' % variant.k)
    w.add(Rule.NUM, 'num(0..%d).' % variant.ntok)
    for p in net.places:
        w.add(Rule.INITIAL, 'holds(%s,%d,0).' % (p, m0[p]))

    if timed:
        w.add(Rule.TIMED_NOTENABLED, _TIMED_NOTENABLED)
    else:
        w.add(Rule.NOTENABLED, _NOTENABLED)
    if variant.level.covers(ExtensionLevel.INHIBIT):
        w.add(Rule.INHIBITED, _INHIBITED)
    if variant.level.covers(ExtensionLevel.READ):
        w.add(Rule.UNREAD, _UNREAD)
    w.add(Rule.ENABLED, _ENABLED)
    w.add(Rule.CHOICE, _CHOICE)
    if timed:
        w.add(Rule.TIMED_ADD, _TIMED_ADD)
        w.add(Rule.TIMED_DEL, _TIMED_DEL)
    else:
        w.add(Rule.ADD, _ADD)
        w.add(Rule.DEL, _DEL)
    incr, decr = _AGGREGATES[variant.dialect]
    w.add(Rule.TOT_INCR, incr)
    w.add(Rule.TOT_DECR, decr)
    if standard:
        w.add(Rule.RESET_AT, _RESET_AT)
        w.add(Rule.NEXT_KEEP, _NEXT_KEEP)
        w.add(Rule.NEXT_RESET, _NEXT_RESET)
    else:
        w.add(Rule.NEXT, _NEXT)
    w.add(Rule.CONSUMESMORE_AT, _CONSUMESMORE_AT)
    w.add(Rule.CONSUMESMORE, _CONSUMESMORE)
    w.add(Rule.NO_OVERCONSUMPTION, _NO_OVERCONSUMPTION)

    # Semantics rules go last, the set semantics program is a prefix
    if variant.semantics is SemanticsMode.MAXIMAL:
        w.add(Rule.COULD_NOT_HAVE, _TIMED_COULD_NOT_HAVE if timed else _COULD_NOT_HAVE)
        w.add(Rule.MAXIMAL, _MAXIMAL)
    elif variant.semantics is SemanticsMode.INTERLEAVED:
        w.add(Rule.MORE_THAN_ONE, _MORE_THAN_ONE)
        w.add(Rule.AT_MOST_ONE, _AT_MOST_ONE)

    text = '\n'.join(line for _, line in w.lines) + '\n'
    logger.info('Emitted %d lines at level %s with %s semantics', len(w.lines), variant.level.value, variant.semantics.value)
    return AspProgram(text, _schema(w.lines), tuple(w.lines))


def _ofkind(net: PetriNet, kind: ArcKind) -> List[InputArc]:
    return [i for i in net.input_arcs if i.kind is kind]


def _splitargs(args: str) -> List[str]:
    '''
    Splits the arguments of an atom on the commas that are not
    nested in parentheses.
    '''
    r = []
    depth = 0
    current = ''
    for c in args:
        if c == '(':
            depth += 1
        elif c == ')':
            depth -= 1
        if c == ',' and depth == 0:
            r.append(current)
            current = ''
        else:
            current += c
    r.append(current)
    return [i.strip() for i in r]


_FACT = re.compile(r'([a-z_][A-Za-z0-9_]*)(?:\(([^()]*)\))?\s*\.(?!\.)')
_RANGE = re.compile(r'(-?\d+)\.\.(-?\d+)\Z')


def _expandterm(term: str) -> List[str]:
    r = []
    for alternative in term.split(';'):
        alternative = alternative.strip()
        if not alternative:
            raise PetriValueError('Empty term in pool %r' % term, kind=ErrorKind.PARSE, value=term)
        m = _RANGE.match(alternative)
        if m:
            r.extend(str(i) for i in range(int(m.group(1)), int(m.group(2)) + 1))
        else:
            if '..' in alternative:
                raise PetriValueError('Malformed interval %r' % alternative, kind=ErrorKind.PARSE, value=term)
            r.append(alternative)
    return r


def _expandfact(name: str, args: Optional[str]) -> List[str]:
    if args is None:
        return ['%s.' % name]
    terms = [_expandterm(i) for i in _splitargs(args)]
    return ['%s(%s).' % (name, ','.join(combination)) for combination in itertools.product(*terms)]


def expand_shorthand(text: str) -> str:
    """
    Expands pooled and interval facts into one fact per
    combination:

    "holds(a;b,0,0)." becomes "holds(a,0,0). holds(b,0,0)."
    "num(0..2)." becomes "num(0). num(1). num(2)."

    Lines containing rules are left alone. Already expanded
    text is returned unchanged.
    """
    out = []
    for lineno, line in enumerate(text.split('\n'), 1):
        if ':-' in line or '{' in line or not line.strip():
            out.append(line)
            continue
        position = 0
        expanded = []
        stripped = line.strip()
        while position < len(stripped):
            m = _FACT.match(stripped, position)
            if m is None:
                raise PetriValueError(
                    'Can not parse facts',
                    [Problem(ErrorKind.PARSE, 'unexpected text %r' % stripped[position:position + 20], Span(lineno, position + 1))],
                    value=line,
                )
            expanded.extend(_expandfact(m.group(1), m.group(2)))
            position = m.end()
            while position < len(stripped) and stripped[position].isspace():
                position += 1
        out.append(' '.join(expanded))
    return '\n'.join(out)


def fact_set(text: str) -> FrozenSet[str]:
    '''
    The set of ground facts of a text, after expanding the
    shorthand. Rules are ignored.
    '''
    r = set()
    for line in expand_shorthand(text).split('\n'):
        if ':-' in line or '{' in line:
            continue
        r.update(m.group(0).replace(' ', '') for m in _FACT.finditer(line))
    return frozenset(r)
