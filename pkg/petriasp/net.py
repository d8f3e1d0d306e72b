"""
petriasp
Petri Nets with reset, inhibitor and read arcs.

A net is a set of places, a set of transitions, arcs from places
to transitions (of four kinds) and arcs from transitions to places.

Nets and markings are immutable, so they can be shared freely.
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

from collections import Counter
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple

from .exceptions import ErrorKind, PetriLookupError, PetriValueError, Problem, Span
from .helpers import MAX_TOKENS, is_identifier


__all__ = [
    'ArcKind',
    'InputArc',
    'OutputArc',
    'PetriNet',
    'Marking',
    'problems',
    'validate',
    'preset',
    'postset',
]


class ArcKind(Enum):
    """
    Kinds of place to transition arcs.

    The values are the keywords used by the net description
    language.

    NORMAL consumes its weight and requires it to be enabled.
    RESET consumes all the tokens of its place, it has no weight.
    INHIBITOR disables the transition while its place has any token.
    READ requires its weight to be enabled but consumes nothing.
    """
    NORMAL = 'arc'
    RESET = 'reset'
    INHIBITOR = 'inhibit'
    READ = 'read'

    @property
    def weighted(self) -> bool:
        return self in (ArcKind.NORMAL, ArcKind.READ)


class InputArc(NamedTuple):
    place: str
    transition: str
    kind: ArcKind = ArcKind.NORMAL
    weight: Optional[int] = 1


class OutputArc(NamedTuple):
    transition: str
    place: str
    weight: int = 1


class Marking(Mapping[str, int]):
    """
    Immutable token assignment for the places of a net.

    It behaves like a read only dictionary and it is hashable,
    so it can be used as a key, for example to cache what was
    already computed for a state.
    """
    __slots__ = ('_tokens', '_hash')

    def __init__(self, tokens: Any = ()) -> None:
        self._tokens = dict(tokens)  # type: Dict[str, int]
        self._hash = None  # type: Optional[int]

    def __getitem__(self, place: str) -> int:
        return self._tokens[place]

    def __iter__(self) -> Iterator[str]:
        return iter(self._tokens)

    def __len__(self) -> int:
        return len(self._tokens)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._tokens.items()))
        return self._hash

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Marking):
            return self._tokens == other._tokens
        if isinstance(other, Mapping):
            return self._tokens == dict(other.items())
        return NotImplemented

    def __repr__(self) -> str:
        return 'Marking({%s})' % ', '.join('%r: %d' % (k, self._tokens[k]) for k in sorted(self._tokens))

    def updated(self, changes: Mapping[str, int]) -> 'Marking':
        '''
        Returns a new marking with some counts replaced.
        '''
        tokens = dict(self._tokens)
        tokens.update(changes)
        return Marking(tokens)

    def matches(self, partial: Mapping[str, int]) -> bool:
        '''
        True if every place of the partial marking has exactly
        that count. Places not mentioned are unconstrained.
        '''
        return all(self._tokens.get(p) == q for p, q in partial.items())


class PetriNet:
    """
    Immutable description of a net.

    places, transitions: the node names, kept sorted.

    input_arcs: place to transition arcs, of any ArcKind.
        Different kinds between the same place and transition are
        allowed (a read arc and a normal arc, for example).

    output_arcs: transition to place arcs, always weighted.

    The constructor does not check anything, use validate() for that.
    """

    def __init__(
            self,
            places: Iterable[str] = (),
            transitions: Iterable[str] = (),
            input_arcs: Iterable[InputArc] = (),
            output_arcs: Iterable[OutputArc] = ()) -> None:
        self.places = tuple(sorted(set(places)))
        self.transitions = tuple(sorted(set(transitions)))
        self.input_arcs = tuple(sorted(input_arcs, key=_inputkey))
        self.output_arcs = tuple(sorted(output_arcs))

        pre = {}  # type: Dict[str, List[InputArc]]
        post = {}  # type: Dict[str, List[OutputArc]]
        for i in self.input_arcs:
            pre.setdefault(i.transition, []).append(i)
        for o in self.output_arcs:
            post.setdefault(o.transition, []).append(o)
        self._pre = {k: tuple(v) for k, v in pre.items()}  # type: Dict[str, Tuple[InputArc, ...]]
        self._post = {k: tuple(v) for k, v in post.items()}  # type: Dict[str, Tuple[OutputArc, ...]]
        self._placeset = frozenset(self.places)
        self._transset = frozenset(self.transitions)

    def __repr__(self) -> str:
        return 'PetriNet(places=%r, transitions=%r, input_arcs=%r, output_arcs=%r)' % (
            self.places, self.transitions, self.input_arcs, self.output_arcs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PetriNet):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> Tuple:
        return (self.places, self.transitions, self.input_arcs, self.output_arcs)

    def is_place(self, name: str) -> bool:
        return name in self._placeset

    def is_transition(self, name: str) -> bool:
        return name in self._transset

    def inputs(self, transition: str) -> Tuple[InputArc, ...]:
        return self._pre.get(transition, ())

    def outputs(self, transition: str) -> Tuple[OutputArc, ...]:
        return self._post.get(transition, ())

    def arc_kinds(self) -> FrozenSet[ArcKind]:
        return frozenset(i.kind for i in self.input_arcs)

    def marking(self, tokens: Optional[Mapping[str, int]] = None) -> Marking:
        '''
        Total marking for this net, places that are not
        mentioned get 0 tokens.
        '''
        r = dict.fromkeys(self.places, 0)
        if tokens:
            r.update(tokens)
        return Marking(r)

    def extend(
            self,
            transitions: Iterable[str] = (),
            input_arcs: Iterable[InputArc] = (),
            output_arcs: Iterable[OutputArc] = ()) -> 'PetriNet':
        '''
        Returns a new net with more transitions and arcs.
        '''
        return PetriNet(
            self.places,
            self.transitions + tuple(transitions),
            self.input_arcs + tuple(input_arcs),
            self.output_arcs + tuple(output_arcs),
        )


def _inputkey(arc: InputArc) -> Tuple[str, str, str]:
    return (arc.place, arc.transition, arc.kind.value)


def _problem(kind: ErrorKind, message: str, spans: Optional[Mapping[Any, Span]], key: Any) -> Problem:
    return Problem(kind, message, spans.get(key) if spans else None)


def _weightproblem(weight: Any) -> Optional[Tuple[ErrorKind, str]]:
    if isinstance(weight, bool) or not isinstance(weight, int):
        return ErrorKind.BAD_WEIGHT, 'weight %r is not an integer' % (weight, )
    if weight == 0:
        return ErrorKind.ZERO_WEIGHT, 'weight must be at least 1'
    if weight < 0:
        return ErrorKind.BAD_WEIGHT, 'weight %d is negative' % weight
    if weight > MAX_TOKENS:
        return ErrorKind.OVERFLOW, 'weight %d does not fit in 64 bits' % weight
    return None


def problems(net: PetriNet, m0: Optional[Mapping[str, int]] = None, spans: Optional[Mapping[Any, Span]] = None) -> List[Problem]:
    """
    Returns the complete list of problems of a net and,
    optionally, its initial marking.

    spans can map node names and arcs to source locations,
    which are then attached to the problems.

    An empty list means the net is valid.
    """
    r = []  # type: List[Problem]

    for name in net.places + net.transitions:
        if not is_identifier(name):
            r.append(_problem(
                ErrorKind.BAD_NAME,
                '%r is not a valid name, names start with a lowercase letter, contain letters, digits or _ and are not keywords' % (name, ),
                spans, name))
    for name in sorted(set(net.places).intersection(net.transitions)):
        r.append(_problem(ErrorKind.NAME_CLASH, '%s is both a place and a transition' % name, spans, name))

    seen_in = Counter(_inputkey(i) for i in net.input_arcs)
    reported = set()  # type: Set[Tuple[str, str, str]]
    for arc in net.input_arcs:
        if not net.is_place(arc.place):
            r.append(_problem(ErrorKind.UNKNOWN_NODE, 'arc %s -> %s: %s is not a place' % (arc.place, arc.transition, arc.place), spans, arc))
        if not net.is_transition(arc.transition):
            r.append(_problem(ErrorKind.UNKNOWN_NODE, 'arc %s -> %s: %s is not a transition' % (arc.place, arc.transition, arc.transition), spans, arc))
        key = _inputkey(arc)
        if seen_in[key] > 1 and key not in reported:
            reported.add(key)
            r.append(_problem(ErrorKind.DUPLICATE_ARC, 'more than one %s arc %s -> %s' % (arc.kind.value, arc.place, arc.transition), spans, arc))
        if arc.kind.weighted:
            wp = _weightproblem(arc.weight)
            if wp:
                r.append(_problem(wp[0], '%s %s -> %s: %s' % (arc.kind.value, arc.place, arc.transition, wp[1]), spans, arc))
        elif arc.weight is not None:
            r.append(_problem(ErrorKind.BAD_WEIGHT, '%s arcs carry no weight' % arc.kind.value, spans, arc))

    seen_out = Counter((o.transition, o.place) for o in net.output_arcs)
    reported_out = set()  # type: Set[Tuple[str, str]]
    for o in net.output_arcs:
        if not net.is_transition(o.transition):
            r.append(_problem(ErrorKind.UNKNOWN_NODE, 'arc %s -> %s: %s is not a transition' % (o.transition, o.place, o.transition), spans, o))
        if not net.is_place(o.place):
            r.append(_problem(ErrorKind.UNKNOWN_NODE, 'arc %s -> %s: %s is not a place' % (o.transition, o.place, o.place), spans, o))
        if seen_out[(o.transition, o.place)] > 1 and (o.transition, o.place) not in reported_out:
            reported_out.add((o.transition, o.place))
            r.append(_problem(ErrorKind.DUPLICATE_ARC, 'more than one arc %s -> %s' % (o.transition, o.place), spans, o))
        wp = _weightproblem(o.weight)
        if wp:
            r.append(_problem(wp[0], 'arc %s -> %s: %s' % (o.transition, o.place, wp[1]), spans, o))

    if m0 is not None:
        for p in net.places:
            if p not in m0:
                r.append(_problem(ErrorKind.MARKING_MISSING_PLACE, 'no token count for place %s' % p, spans, p))
        for p in sorted(m0):
            q = m0[p]
            if not net.is_place(p):
                r.append(_problem(ErrorKind.UNKNOWN_NODE, 'marking mentions %s which is not a place' % p, spans, p))
            elif isinstance(q, bool) or not isinstance(q, int):
                r.append(_problem(ErrorKind.NEGATIVE_TOKENS, 'token count %r of %s is not a natural number' % (q, p), spans, p))
            elif q < 0:
                r.append(_problem(ErrorKind.NEGATIVE_TOKENS, 'token count %d of %s is negative' % (q, p), spans, p))
            elif q > MAX_TOKENS:
                r.append(_problem(ErrorKind.OVERFLOW, 'token count of %s does not fit in 64 bits' % p, spans, p))
    return r


def validate(net: PetriNet, m0: Optional[Mapping[str, int]] = None, spans: Optional[Mapping[Any, Span]] = None) -> PetriNet:
    """
    Returns the net if it is well formed, otherwise raises
    PetriValueError listing every problem found.

    Validating a valid net again finds nothing.
    """
    found = problems(net, m0, spans)
    if found:
        raise PetriValueError('Invalid net: %d problem(s)' % len(found), found)
    return net


def _checktransition(net: PetriNet, t: str) -> None:
    if not net.is_transition(t):
        raise PetriLookupError(
            'Unknown transition %s' % t,
            [Problem(ErrorKind.UNKNOWN_NODE, '%s is not a transition of the net' % t, None)],
            value=t,
        )


def preset(net: PetriNet, t: str) -> Tuple[InputArc, ...]:
    """
    The input places of a transition, with the kind and weight
    of each arc, in place order.
    """
    _checktransition(net, t)
    return net.inputs(t)


def postset(net: PetriNet, t: str) -> Tuple[Tuple[str, int], ...]:
    """
    The output places of a transition as (place, weight) pairs.
    """
    _checktransition(net, t)
    return tuple((o.place, o.weight) for o in net.outputs(t))
