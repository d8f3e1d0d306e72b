"""
petriasp
Questions about the behaviour of a net within a horizon.

Statistics work on already enumerated sequences. The other
queries run the simulation themselves.

Every answer is only valid for the time steps 0..k: "not
reachable" means not reachable within k steps, a bounded net
is k-bounded and so on.
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

from collections import Counter, deque
from enum import Enum
from fractions import Fraction
import itertools
import logging
import math
import re
from typing import Deque, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple, Union

from .engine import ExecutionSequence, FiringSet, Limits, ResetMode, SemanticsMode, Simulator, enabled
from .exceptions import ErrorKind, LimitExceeded, PetriLookupError, PetriValueError, Problem
from .helpers import setkey
from .net import Marking, OutputArc, PetriNet


__all__ = [
    'StepStats',
    'PlaceSeries',
    'RateResult',
    'Comparator',
    'Waypoint',
    'Ordered',
    'Reachability',
    'Violation',
    'Deadlock',
    'TInvariant',
    'PInvariant',
    'PlaceCollector',
    'collect',
    'place_stats',
    'rate',
    'parse_predicate',
    'depletion_recovery',
    'filter_waypoints',
    'reachable',
    'bounded',
    'deadlocks',
    'liveness_basic',
    't_invariants',
    'p_invariants',
    'SOURCE_PREFIX',
]


logger = logging.getLogger(__name__)


class StepStats(NamedTuple):
    step: int
    mean: Fraction
    min: int
    max: int
    distinct: Tuple[int, ...]


class PlaceSeries(NamedTuple):
    """
    Token counts of one place, aggregated over all the sequences,
    for every time step.
    """
    place: str
    sequences: int
    per_step: Tuple[StepStats, ...]


class RateResult(NamedTuple):
    place: str
    horizon: int
    rate_per_sequence: Tuple[Fraction, ...]
    mean_rate: Fraction


class PlaceCollector:
    """
    Aggregates the token counts of one place while the sequences
    go by, so that statistics never need all the sequences in
    memory at once.

    per_step: True by default.
        Keeps a histogram of the counts at every time step, for
        series(). All the sequences must then have the same horizon.

    rate_step: None by default.
        When set, the count at this time step is kept for every
        sequence, in order, for rate(). Every sequence must reach it.
    """

    def __init__(self, place: str, per_step: bool = True, rate_step: Optional[int] = None) -> None:
        self.place = place
        self.per_step = per_step
        self.rate_step = rate_step
        self.count = 0
        self.horizon = None  # type: Optional[int]
        self.histograms = []  # type: List[Counter]
        self.rate_values = []  # type: List[int]

    def add(self, sequence: ExecutionSequence) -> None:
        steps = sequence.steps
        if self.count == 0:
            if steps and self.place not in steps[0].marking_before:
                raise PetriLookupError(
                    'Unknown place %s' % self.place,
                    [Problem(ErrorKind.UNKNOWN_NAME, '%s is not a place of the net' % self.place, None)],
                    value=self.place,
                )
            self.horizon = sequence.horizon
            if self.per_step:
                self.histograms = [Counter() for _ in steps]
        if self.per_step:
            if sequence.horizon != self.horizon:
                raise PetriValueError('Sequences with different horizons', kind=ErrorKind.BAD_PARAMETER)
            place = self.place
            for histogram, step in zip(self.histograms, steps):
                histogram[step.marking_before[place]] += 1
        if self.rate_step is not None:
            if sequence.horizon < self.rate_step:
                raise PetriValueError('Sequences shorter than %d steps' % self.rate_step, kind=ErrorKind.BAD_PARAMETER, value=self.rate_step)
            self.rate_values.append(steps[self.rate_step].marking_before[self.place])
        self.count += 1

    def _checkempty(self) -> None:
        if self.count == 0:
            raise PetriValueError('No sequences to analyze', kind=ErrorKind.EMPTY_INPUT)

    def series(self) -> PlaceSeries:
        self._checkempty()
        per_step = []
        for step, histogram in enumerate(self.histograms):
            per_step.append(StepStats(
                step=step,
                mean=Fraction(sum(v * n for v, n in histogram.items()), self.count),
                min=min(histogram),
                max=max(histogram),
                distinct=tuple(sorted(histogram)),
            ))
        return PlaceSeries(self.place, self.count, tuple(per_step))

    def rate(self) -> RateResult:
        self._checkempty()
        k = self.rate_step
        if k is None:
            raise PetriValueError('No rate step was set', kind=ErrorKind.BAD_PARAMETER)
        # One Fraction per distinct count, shared by the sequences
        fractions = {}  # type: Dict[int, Fraction]
        rates = []
        for v in self.rate_values:
            f = fractions.get(v)
            if f is None:
                f = fractions[v] = Fraction(v, k)
            rates.append(f)
        return RateResult(self.place, k, tuple(rates), Fraction(sum(self.rate_values), k * self.count))


def collect(sequences: Iterable[ExecutionSequence], collectors: Iterable[PlaceCollector]) -> int:
    """
    Feeds every sequence, once, to all the collectors.

    Returns the number of sequences.
    """
    collectors = list(collectors)
    count = 0
    for sequence in sequences:
        for c in collectors:
            c.add(sequence)
        count += 1
    return count


def place_stats(sequences: Iterable[ExecutionSequence], place: str) -> PlaceSeries:
    """
    Mean, minimum, maximum and distinct values of a place at
    every time step 0..k, across all the sequences.

    The mean is exact. The order of the sequences does not
    change the result. The sequences are read once, so a lazy
    iterator works.
    """
    c = PlaceCollector(place)
    collect(sequences, [c])
    return c.series()


def rate(sequences: Iterable[ExecutionSequence], place: str, k: int) -> RateResult:
    """
    Tokens in place at time step k, divided by k, for every
    sequence, and their mean.
    """
    if k < 1:
        raise PetriValueError('The rate needs k >= 1, got %d' % k, kind=ErrorKind.BAD_PARAMETER, value=k)
    c = PlaceCollector(place, per_step=False, rate_step=k)
    collect(sequences, [c])
    return c.rate()


class Comparator(Enum):
    EQ = '='
    LE = '<='
    GE = '>='

    def test(self, count: int, value: int) -> bool:
        if self is Comparator.EQ:
            return count == value
        if self is Comparator.LE:
            return count <= value
        return count >= value


class Waypoint(NamedTuple):
    """
    The marking of place compared to value.

    step: the time step where it must hold, None for any step.
    """
    place: str
    comparator: Comparator
    value: int
    step: Optional[int] = None

    def steps(self, sequence: ExecutionSequence) -> List[int]:
        '''
        The time steps where the waypoint holds.
        '''
        return [
            s.time for s in sequence.steps
            if (self.step is None or s.time == self.step)
            and self.comparator.test(s.marking_before[self.place], self.value)
        ]


class Ordered(NamedTuple):
    """
    first holds at some step, then holds at a later one.
    """
    first: Waypoint
    then: Waypoint


Predicate = Union[Waypoint, Ordered]


_WAYPOINT = re.compile(r'\s*([a-z][A-Za-z0-9_]*)\s*(<=|>=|=)\s*(\d+)\s*(?:@\s*(\d+|any)\s*)?\Z')


def _parsewaypoint(text: str) -> Waypoint:
    m = _WAYPOINT.match(text)
    if m is None:
        raise PetriValueError(
            'Invalid predicate %r' % text,
            [Problem(ErrorKind.INVALID_PREDICATE, 'expected place OP value[@step], OP is one of = <= >=', None)],
            value=text,
        )
    step = m.group(4)
    return Waypoint(
        m.group(1),
        Comparator(m.group(2)),
        int(m.group(3)),
        None if step in (None, 'any') else int(step),
    )


def parse_predicate(text: str) -> Predicate:
    """
    Reads a predicate written as

        place OP value[@step]
        place OP value[@step] then place OP value[@step]

    OP is one of =, <=, >=. The step is a number or "any", which
    is the default.
    """
    parts = re.split(r'\s+then\s+', text.strip())
    if len(parts) == 1:
        return _parsewaypoint(parts[0])
    if len(parts) == 2:
        return Ordered(_parsewaypoint(parts[0]), _parsewaypoint(parts[1]))
    raise PetriValueError(
        'Invalid predicate %r' % text,
        [Problem(ErrorKind.INVALID_PREDICATE, 'at most one "then" is allowed', None)],
        value=text,
    )


def depletion_recovery(place: str) -> Ordered:
    '''
    The place runs out of tokens and later gets some again.
    '''
    return Ordered(Waypoint(place, Comparator.EQ, 0), Waypoint(place, Comparator.GE, 1))


def _waypoints(predicate: Predicate) -> Tuple[Waypoint, ...]:
    if isinstance(predicate, Ordered):
        return (predicate.first, predicate.then)
    if isinstance(predicate, Waypoint):
        return (predicate, )
    raise PetriValueError('Not a predicate: %r' % (predicate, ), kind=ErrorKind.INVALID_PREDICATE, value=predicate)


def _checkpredicate(predicate: Predicate, places: Mapping[str, int]) -> None:
    for w in _waypoints(predicate):
        if not isinstance(w.comparator, Comparator) or w.value < 0 or (w.step is not None and w.step < 0):
            raise PetriValueError('Invalid predicate %r' % (w, ), kind=ErrorKind.INVALID_PREDICATE, value=w)
        if w.place not in places:
            raise PetriLookupError(
                'Unknown place %s' % w.place,
                [Problem(ErrorKind.UNKNOWN_NAME, '%s is not a place of the net' % w.place, None)],
                value=w.place,
            )


def _satisfies(sequence: ExecutionSequence, predicate: Predicate) -> bool:
    if isinstance(predicate, Waypoint):
        return bool(predicate.steps(sequence))
    first = predicate.first.steps(sequence)
    if not first:
        return False
    return any(j > first[0] for j in predicate.then.steps(sequence))


def filter_waypoints(sequences: Iterable[ExecutionSequence], predicates: Iterable[Predicate]) -> List[ExecutionSequence]:
    """
    The sequences that satisfy all the predicates, in the
    original order.
    """
    sequences = list(sequences)
    predicates = list(predicates)
    if sequences and sequences[0].steps:
        for p in predicates:
            _checkpredicate(p, sequences[0].steps[0].marking_before)
    return [s for s in sequences if all(_satisfies(s, p) for p in predicates)]


class Reachability(NamedTuple):
    """
    reachable: whether a marking matching target was found
        within the horizon.

    witness: firing steps leading to it, its final marking is
        the matching one. None when not reachable.

    step: the time step where target is first matched.
    """
    reachable: bool
    target: Dict[str, int]
    horizon: int
    witness: Optional[ExecutionSequence] = None
    step: Optional[int] = None
    states: int = 0


class Violation(NamedTuple):
    sequence: int
    step: int
    place: str
    count: int


class Deadlock(NamedTuple):
    sequence: int
    step: int
    marking: Marking


class TInvariant(NamedTuple):
    """
    transitions: the multiset, as sorted (transition, times) pairs.

    start: the marking that is restored.
    firings: the firing order that restores it.
    """
    transitions: Tuple[Tuple[str, int], ...]
    start: Marking
    firings: Tuple[FiringSet, ...]


class PInvariant(NamedTuple):
    places: Tuple[str, ...]
    total: int


def _simulator(semantics: SemanticsMode, reset_mode: ResetMode, limits: Optional[Limits]) -> Simulator:
    sim = Simulator(semantics=semantics, reset_mode=reset_mode)
    sim.limits = limits
    return sim


def _explore(sim: Simulator, net: PetriNet, m0: Marking, k: int) -> Iterator[Tuple[int, Marking, Dict[Marking, Tuple[Marking, FiringSet]]]]:
    '''
    Breadth first walk of the markings observable at steps 0..k.

    Generates (step, marking, parents) the first time each marking
    is seen. parents leads back to m0.
    '''
    if k < 0:
        raise PetriValueError('The horizon must be at least 0, got %d' % k, kind=ErrorKind.BAD_PARAMETER, value=k)
    parents = {}  # type: Dict[Marking, Tuple[Marking, FiringSet]]
    seen = {m0}
    queue = deque([(0, m0)])  # type: Deque[Tuple[int, Marking]]
    while queue:
        step, marking = queue.popleft()
        if sim.max_states is not None and len(seen) > sim.max_states:
            raise LimitExceeded('More than %d markings explored' % sim.max_states, 0)
        yield step, marking, parents
        if step == k:
            continue
        for firing in sim.firing_sets(net, marking):
            following = sim.fire(net, marking, firing)
            if following not in seen:
                seen.add(following)
                parents[following] = (marking, firing)
                queue.append((step + 1, following))
    logger.debug('%d markings explored within %d steps', len(seen), k)


def _witness(sim: Simulator, net: PetriNet, m0: Marking, marking: Marking, parents: Dict[Marking, Tuple[Marking, FiringSet]]) -> ExecutionSequence:
    firings = []
    while marking != m0:
        marking, firing = parents[marking]
        firings.append(firing)
    return sim.replay(net, m0, reversed(firings))


def reachable(
        net: PetriNet,
        m0: Marking,
        target: Mapping[str, int],
        k: int,
        semantics: SemanticsMode = SemanticsMode.SET,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> Reachability:
    """
    Searches a marking at time steps 0..k where every place of
    target has exactly the given count. Places not in target can
    have any count.

    The witness is a shortest one: replaying its firings from m0
    ends in the matching marking.
    """
    for p in target:
        if not net.is_place(p):
            raise PetriLookupError(
                'Unknown place %s' % p,
                [Problem(ErrorKind.UNKNOWN_NAME, '%s is not a place of the net' % p, None)],
                value=p,
            )
    m0 = net.marking(m0)
    sim = _simulator(semantics, reset_mode, limits)
    states = 0
    for step, marking, parents in _explore(sim, net, m0, k):
        states += 1
        if marking.matches(target):
            return Reachability(True, dict(target), k, _witness(sim, net, m0, marking, parents), step, states)
    return Reachability(False, dict(target), k, None, None, states)


def bounded(
        net: PetriNet,
        m0: Marking,
        bound: int,
        k: int,
        semantics: SemanticsMode = SemanticsMode.SET,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> List[Violation]:
    """
    Every (sequence, step, place) where the count exceeds bound.

    An empty list means the net is bounded by bound within k steps.
    """
    sim = _simulator(semantics, reset_mode, limits)
    r = []
    for n, sequence in enumerate(sim.iter_sequences(net, net.marking(m0), k)):
        for s in sequence.steps:
            for p in net.places:
                if s.marking_before[p] > bound:
                    r.append(Violation(n, s.time, p, s.marking_before[p]))
    return r


def deadlocks(
        net: PetriNet,
        m0: Marking,
        k: int,
        semantics: SemanticsMode = SemanticsMode.SET,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> List[Deadlock]:
    """
    Every (sequence, step) whose marking enables no transition.
    """
    sim = _simulator(semantics, reset_mode, limits)
    dead = {}  # type: Dict[Marking, bool]
    r = []
    for n, sequence in enumerate(sim.iter_sequences(net, net.marking(m0), k)):
        for s in sequence.steps:
            m = s.marking_before
            if m not in dead:
                dead[m] = not any(enabled(net, m, t) for t in net.transitions)
            if dead[m]:
                r.append(Deadlock(n, s.time, m))
    return r


# Names of the source transitions added for liveness
SOURCE_PREFIX = 'src_'


def liveness_basic(
        net: PetriNet,
        m0: Marking,
        t: str,
        k: int,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> bool:
    """
    Adds a source transition for every place, named src_<place>,
    then checks if t can fire at some step 0..k with the
    interleaved semantics.

    Raises PetriValueError if the net already uses one of the
    source names.
    """
    if not net.is_transition(t):
        raise PetriLookupError(
            'Unknown transition %s' % t,
            [Problem(ErrorKind.UNKNOWN_NODE, '%s is not a transition of the net' % t, None)],
            value=t,
        )
    sources = [SOURCE_PREFIX + p for p in net.places]
    taken = [i for i in sources if net.is_place(i) or net.is_transition(i)]
    if taken:
        raise PetriValueError(
            'Names reserved for source transitions are in use',
            [Problem(ErrorKind.RESERVED_NAME, '%s is reserved' % i, None) for i in taken],
        )
    extended = net.extend(sources, (), [OutputArc(SOURCE_PREFIX + p, p, 1) for p in net.places])
    sim = _simulator(SemanticsMode.INTERLEAVED, reset_mode, limits)
    for _, marking, _ in _explore(sim, extended, extended.marking(m0), k):
        if enabled(extended, marking, t) and sim.admissible(extended, marking, (t, )):
            return True
    return False


def t_invariants(
        net: PetriNet,
        m0: Marking,
        k: int,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> List[TInvariant]:
    """
    Multisets of transitions that bring the net back to a marking
    it already had, observed in the interleaved sequences.

    For every pair of steps i < j with the same marking, the
    transitions fired in i..j-1 form a candidate. Empty multisets
    are skipped, duplicates are reported once with the first
    witness found.
    """
    sim = _simulator(SemanticsMode.INTERLEAVED, reset_mode, limits)
    found = {}  # type: Dict[Tuple[Tuple[str, int], ...], TInvariant]
    for sequence in sim.iter_sequences(net, net.marking(m0), k):
        markings = sequence.markings
        for i in range(len(markings)):
            for j in range(i + 1, len(markings)):
                if markings[i] != markings[j]:
                    continue
                fired = Counter()  # type: Counter
                for f in sequence.firings[i:j]:
                    fired.update(f)
                if not fired:
                    continue
                key = tuple(sorted(fired.items()))
                if key not in found:
                    found[key] = TInvariant(key, markings[i], sequence.firings[i:j])
    return sorted(found.values(), key=lambda i: i.transitions)


def p_invariants(
        net: PetriNet,
        m0: Marking,
        k: int,
        max_subset_size: int = 3,
        max_subsets: int = 100000,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> List[PInvariant]:
    """
    Sets of places, up to max_subset_size places, whose total
    number of tokens never changes between consecutive time
    steps 0..k of the interleaved sequences.

    Raises PetriValueError when more than max_subsets sets would
    have to be checked.
    """
    size = min(max_subset_size, len(net.places))
    count = sum(math.comb(len(net.places), i) for i in range(1, size + 1))
    if count > max_subsets:
        raise PetriValueError(
            '%d place sets to check, the limit is %d' % (count, max_subsets),
            kind=ErrorKind.SUBSET_LIMIT,
            value=count,
        )
    m0 = net.marking(m0)
    sim = _simulator(SemanticsMode.INTERLEAVED, reset_mode, limits)

    # Every consecutive pair of markings of a sequence is an edge
    # of the walk below, so the changes it sees are the same
    changes = set()  # type: Set[Tuple[int, ...]]
    walk = _explore(sim, net, m0, k - 1) if k > 0 else iter(())  # type: Iterator
    for _, marking, _ in walk:
        for firing in sim.firing_sets(net, marking):
            following = sim.fire(net, marking, firing)
            changes.add(tuple(following[p] - marking[p] for p in net.places))

    index = {p: i for i, p in enumerate(net.places)}
    r = []
    for n in range(1, size + 1):
        for places in itertools.combinations(net.places, n):
            if all(sum(delta[index[p]] for p in places) == 0 for delta in changes):
                r.append(PInvariant(places, sum(m0[p] for p in places)))
    r.sort(key=lambda i: setkey(i.places))
    return r

