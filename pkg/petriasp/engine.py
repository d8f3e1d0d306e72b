"""
petriasp
Firing semantics and exhaustive simulation.

A step fires a set of enabled transitions together. Which sets are
allowed depends on the firing semantics:

    * set: any admissible subset of the enabled transitions, even
      the empty one.
    * maximal: admissible sets that can not be grown by a single
      enabled transition without overconsumption.
    * interleaved: at most one transition per step.

A set is admissible when it does not consume more tokens than a
place has. Reset arcs either count against the tokens of their
place (contention) or empty the place as a side effect (standard).

Simulation walks every possible choice at every step, up to a
horizon, producing all the execution sequences.
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
import logging
from typing import Any, Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from .exceptions import ErrorKind, LimitExceeded, PetriLookupError, PetriValueError, Problem, TokenOverflowError
from .helpers import MAX_TOKENS, setkey
from .net import ArcKind, Marking, PetriNet


__all__ = [
    'SemanticsMode',
    'ResetMode',
    'FiringSet',
    'Step',
    'ExecutionSequence',
    'Limits',
    'CrossValidation',
    'Simulator',
    'enabled',
    'effective_consumption',
    'admissible',
    'fire',
    'firing_sets',
    'iter_sequences',
    'enumerate_sequences',
    'replay',
    'sequence_atoms',
    'cross_validate',
]


logger = logging.getLogger(__name__)


class SemanticsMode(Enum):
    SET = 'set'
    MAXIMAL = 'max'
    INTERLEAVED = 'interleaved'


class ResetMode(Enum):
    """
    CONTENTION: a reset arc consumes the current marking of its
        place, in competition with the other consuming arcs.
    STANDARD: the place is emptied after the firing, without
        competing with the other arcs.
    """
    CONTENTION = 'contention'
    STANDARD = 'standard'


class FiringSet(frozenset):
    """
    Transitions fired together in one step.

    It is a frozenset, with a canonical order: smaller sets
    first, then by the sorted list of names.
    """

    def key(self) -> Tuple[int, Tuple[str, ...]]:
        return setkey(self)

    def members(self) -> List[str]:
        return sorted(self)

    def __repr__(self) -> str:
        return 'FiringSet(%r)' % self.members()


EMPTY = FiringSet()


class Step(NamedTuple):
    time: int
    firing: FiringSet
    marking_before: Marking


class ExecutionSequence(NamedTuple):
    """
    M0, T0, M1, T1, ... Mk, Tk, Mk+1

    steps holds, for every time step, the firing set and the
    marking it was applied to.

    final_marking is Mk+1, the result of the last firing. It is None
    when the sequence was rebuilt from solver output, which only
    has markings up to the horizon.
    """
    steps: Tuple[Step, ...]
    final_marking: Optional[Marking] = None

    @property
    def horizon(self) -> int:
        return len(self.steps) - 1

    @property
    def firings(self) -> Tuple[FiringSet, ...]:
        return tuple(s.firing for s in self.steps)

    @property
    def markings(self) -> Tuple[Marking, ...]:
        '''
        The markings at the time steps 0..k
        '''
        return tuple(s.marking_before for s in self.steps)

    def all_markings(self) -> Tuple[Marking, ...]:
        '''
        The markings 0..k+1, when the last one is known
        '''
        if self.final_marking is None:
            return self.markings
        return self.markings + (self.final_marking, )


class Limits(NamedTuple):
    max_sequences: Optional[int] = None
    max_states: Optional[int] = None


class CrossValidation(NamedTuple):
    match: bool
    native_count: int
    external_count: int
    unmatched_native: Tuple[ExecutionSequence, ...] = ()
    unmatched_external: Tuple[ExecutionSequence, ...] = ()


def _checktransition(net: PetriNet, t: str) -> None:
    if not net.is_transition(t):
        raise PetriLookupError(
            'Unknown transition %s' % t,
            [Problem(ErrorKind.UNKNOWN_NODE, '%s is not a transition of the net' % t, None)],
            value=t,
        )


def _total(net: PetriNet, marking: Mapping[str, int]) -> Marking:
    '''
    Any mapping as a Marking, once it is known to
    have a count for every place of the net.
    '''
    missing = [p for p in net.places if p not in marking]
    if missing:
        raise PetriValueError(
            'The marking has no token count for %s' % ', '.join(missing),
            [Problem(ErrorKind.MARKING_MISSING_PLACE, 'no token count for place %s' % p, None) for p in missing],
            value=marking,
        )
    return marking if isinstance(marking, Marking) else Marking(marking)


def _enabled(net: PetriNet, marking: Marking, t: str) -> bool:
    for arc in net.inputs(t):
        q = marking[arc.place]
        if arc.kind is ArcKind.NORMAL or arc.kind is ArcKind.READ:
            if q < arc.weight:
                return False
        elif arc.kind is ArcKind.INHIBITOR:
            if q > 0:
                return False
        # Reset arcs never disable
    return True


def _demand(net: PetriNet, marking: Marking, t: str, reset_mode: ResetMode) -> Dict[str, int]:
    '''
    Tokens that firing t would take from each place
    '''
    r = {}  # type: Dict[str, int]
    for arc in net.inputs(t):
        if arc.kind is ArcKind.NORMAL:
            r[arc.place] = r.get(arc.place, 0) + arc.weight
        elif arc.kind is ArcKind.RESET and reset_mode is ResetMode.CONTENTION:
            q = marking[arc.place]
            if q > 0:
                r[arc.place] = r.get(arc.place, 0) + q
    return r


def _apply(net: PetriNet, marking: Marking, firing: Iterable[str]) -> Marking:
    '''
    The marking after firing, no checks on admissibility.

    Places emptied by a reset arc of a fired transition only
    get what is produced in this step.
    '''
    consumed = {}  # type: Dict[str, int]
    produced = {}  # type: Dict[str, int]
    reset = set()
    for t in firing:
        for arc in net.inputs(t):
            if arc.kind is ArcKind.NORMAL:
                consumed[arc.place] = consumed.get(arc.place, 0) + arc.weight
            elif arc.kind is ArcKind.RESET:
                reset.add(arc.place)
        for o in net.outputs(t):
            produced[o.place] = produced.get(o.place, 0) + o.weight
    if not consumed and not produced and not reset:
        return marking
    changes = {}
    for p in reset:
        changes[p] = produced.get(p, 0)
    for p, q in consumed.items():
        if p not in reset:
            changes[p] = marking[p] - q
    for p, q in produced.items():
        if p not in reset:
            changes[p] = changes.get(p, marking[p]) + q
    for p, q in changes.items():
        if q > MAX_TOKENS:
            raise TokenOverflowError(
                'Token count of %s does not fit in 64 bits' % p,
                [Problem(ErrorKind.OVERFLOW, '%s would hold %d tokens' % (p, q), None)],
                value=q,
            )
    return marking.updated(changes)


def _admissible_sets(sim: 'Simulator', net: PetriNet, marking: Marking) -> List[Tuple[FiringSet, Dict[str, int]]]:
    '''
    All the admissible subsets of the enabled transitions, with
    the tokens each consumes.

    Adding transitions only increases consumption, so the walk
    stops growing a set at the first overconsumption.
    '''
    candidates = [t for t in net.transitions if _enabled(net, marking, t)]
    demands = [_demand(net, marking, t, sim.reset_mode) for t in candidates]
    r = []  # type: List[Tuple[FiringSet, Dict[str, int]]]
    chosen = []  # type: List[str]

    def walk(i: int, used: Dict[str, int]) -> None:
        if i == len(candidates):
            r.append((FiringSet(chosen), used))
            return
        walk(i + 1, used)
        demand = demands[i]
        if all(used.get(p, 0) + q <= marking[p] for p, q in demand.items()):
            grown = dict(used)
            for p, q in demand.items():
                grown[p] = grown.get(p, 0) + q
            chosen.append(candidates[i])
            walk(i + 1, grown)
            chosen.pop()

    walk(0, {})
    return r


def _setfirings(sim: 'Simulator', net: PetriNet, marking: Marking) -> List[FiringSet]:
    return [f for f, _ in _admissible_sets(sim, net, marking)]


def _maximalfirings(sim: 'Simulator', net: PetriNet, marking: Marking) -> List[FiringSet]:
    candidates = [t for t in net.transitions if _enabled(net, marking, t)]
    demands = {t: _demand(net, marking, t, sim.reset_mode) for t in candidates}
    r = []
    for f, used in _admissible_sets(sim, net, marking):
        # Maximal if no single enabled transition fits in what is left
        if not any(
                t not in f and all(used.get(p, 0) + q <= marking[p] for p, q in demands[t].items())
                for t in candidates):
            r.append(f)
    return r


def _interleavedfirings(sim: 'Simulator', net: PetriNet, marking: Marking) -> List[FiringSet]:
    r = [EMPTY]
    for t in net.transitions:
        if _enabled(net, marking, t):
            demand = _demand(net, marking, t, sim.reset_mode)
            if all(q <= marking[p] for p, q in demand.items()):
                r.append(FiringSet((t, )))
    return r


class Simulator:
    """
    A simulator object that enumerates execution sequences.

    semantics: SemanticsMode.SET by default.
        Which firing sets are allowed at each step.

    reset_mode: ResetMode.CONTENTION by default.
        How reset arcs take part in conflicts.

    max_sequences: None (unlimited) by default.
        LimitExceeded is raised when more than this number of
        sequences would be produced.

    max_states: None (unlimited) by default.
        LimitExceeded is raised when more than this number of
        markings would be expanded during the walk.

    selectors: This is the list that the simulator uses to
        find the firing sets of a marking.
        The type is:
        List[
            Tuple[
                Callable[[SemanticsMode], bool],
                Callable[['Simulator', PetriNet, Marking], List[FiringSet]]
            ]
        ]

        The elements are: Tuple[Condition, Selector]
        Condition(semantics) -> Bool
        Selector(simulator, net, marking) -> firing sets

        A selector must only return admissible sets. The order
        does not matter, the simulator sorts them.

    These parameters can be set as named arguments in the constructor
    or they can be set later on.
    """

    def __init__(self, **kwargs) -> None:
        self.semantics = SemanticsMode.SET
        self.reset_mode = ResetMode.CONTENTION
        self.max_sequences = None  # type: Optional[int]
        self.max_states = None  # type: Optional[int]

        self.selectors = [
            (lambda s: s is SemanticsMode.SET, _setfirings),
            (lambda s: s is SemanticsMode.MAXIMAL, _maximalfirings),
            (lambda s: s is SemanticsMode.INTERLEAVED, _interleavedfirings),
        ]  # type: List[Tuple[Callable[[Any], bool], Callable[[Simulator, PetriNet, Marking], List[FiringSet]]]]

        for k, v in kwargs.items():
            setattr(self, k, v)

    @property
    def limits(self) -> Limits:
        return Limits(self.max_sequences, self.max_states)

    @limits.setter
    def limits(self, value: Optional[Limits]) -> None:
        value = value or Limits()
        self.max_sequences = value.max_sequences
        self.max_states = value.max_states

    def index(self, semantics: Any) -> int:
        """
        Returns the index in the selectors list
        that matches the given semantics.

        If no condition matches, ValueError is raised.
        """
        for i, (cond, _) in enumerate(self.selectors):
            if cond(semantics):
                return i
        raise ValueError('No selector for semantics %r' % (semantics, ))

    def firing_sets(self, net: PetriNet, marking: Mapping[str, int]) -> List[FiringSet]:
        """
        The firing sets allowed at a marking, in canonical order.
        """
        marking = _total(net, marking)
        selector = self.selectors[self.index(self.semantics)][1]
        return sorted(selector(self, net, marking), key=FiringSet.key)

    def admissible(self, net: PetriNet, marking: Mapping[str, int], firing: Iterable[str]) -> bool:
        firing = FiringSet(firing)
        marking = _total(net, marking)
        if not all(_enabled(net, marking, t) for t in firing):
            return False
        used = _consumption(net, marking, firing, self.reset_mode)
        return all(q <= marking[p] for p, q in used.items())

    def fire(self, net: PetriNet, marking: Mapping[str, int], firing: Iterable[str]) -> Marking:
        """
        The marking after firing a set of transitions.

        Raises PetriValueError if the set is not admissible.
        """
        firing = FiringSet(firing)
        for t in firing.members():
            _checktransition(net, t)
        marking = _total(net, marking)
        if not self.admissible(net, marking, firing):
            raise PetriValueError(
                'Firing set %s is not admissible' % firing.members(),
                [Problem(ErrorKind.NOT_ADMISSIBLE, 'disabled transitions or overconsumption at %r' % marking, None)],
                value=firing,
            )
        return _apply(net, marking, firing)

    def iter_sequences(self, net: PetriNet, m0: Mapping[str, int], k: int) -> Iterator[ExecutionSequence]:
        """
        Lazily generates every execution sequence with firing
        steps 0..k, depth first, in canonical order.

        Two different histories reaching the same marking are
        different sequences.
        """
        if k < 0:
            raise PetriValueError('The horizon must be at least 0, got %d' % k, kind=ErrorKind.BAD_PARAMETER, value=k)
        m0 = _total(net, m0)
        successors = {}  # type: Dict[Marking, List[Tuple[FiringSet, Marking]]]
        sequences = 0
        states = 0

        def expand(marking: Marking) -> Iterator[Tuple[FiringSet, Marking]]:
            nonlocal states
            states += 1
            if self.max_states is not None and states > self.max_states:
                raise LimitExceeded(
                    'More than %d states expanded, stopped after %d sequences' % (self.max_states, sequences),
                    sequences)
            r = successors.get(marking)
            if r is None:
                r = [(f, _apply(net, marking, f)) for f in self.firing_sets(net, marking)]
                successors[marking] = r
            return iter(r)

        # pending has one iterator over the successors of the marking
        # at every depth, path the steps that led to the deepest one
        path = []  # type: List[Step]
        markings = [m0]
        pending = [expand(m0)]
        while pending:
            following_step = next(pending[-1], None)
            if following_step is None:
                pending.pop()
                markings.pop()
                if path:
                    path.pop()
                continue
            firing, following = following_step
            time = len(path)
            step = Step(time, firing, markings[-1])
            if time == k:
                sequences += 1
                if self.max_sequences is not None and sequences > self.max_sequences:
                    raise LimitExceeded('More than %d sequences' % self.max_sequences, self.max_sequences)
                yield ExecutionSequence(tuple(path) + (step, ), following)
            else:
                path.append(step)
                markings.append(following)
                pending.append(expand(following))

        logger.debug('%d sequences, %d states expanded, %d distinct markings',
                     sequences, states, len(successors))

    def enumerate(self, net: PetriNet, m0: Mapping[str, int], k: int) -> List[ExecutionSequence]:
        """
        All the execution sequences, as a list.

        When a limit is hit, the LimitExceeded exception carries the
        sequences produced until then.
        """
        r = []  # type: List[ExecutionSequence]
        try:
            for i in self.iter_sequences(net, m0, k):
                r.append(i)
        except LimitExceeded as e:
            e.sequences = r
            raise
        logger.info('%d execution sequences with %s semantics, horizon %d', len(r), getattr(self.semantics, 'value', self.semantics), k)
        return r

    def replay(self, net: PetriNet, m0: Mapping[str, int], firings: Iterable[Iterable[str]]) -> ExecutionSequence:
        """
        Builds the execution sequence of a list of firing sets,
        checking that each one is admissible.

        The firing sets are not required to be allowed by the
        semantics, only to be admissible.
        """
        marking = _total(net, m0)
        steps = []
        for time, firing in enumerate(firings):
            firing = FiringSet(firing)
            following = self.fire(net, marking, firing)
            steps.append(Step(time, firing, marking))
            marking = following
        return ExecutionSequence(tuple(steps), marking)


def _consumption(net: PetriNet, marking: Marking, firing: Iterable[str], reset_mode: ResetMode) -> Dict[str, int]:
    r = {}  # type: Dict[str, int]
    for t in firing:
        for p, q in _demand(net, marking, t, reset_mode).items():
            r[p] = r.get(p, 0) + q
    return r


def enabled(net: PetriNet, marking: Mapping[str, int], t: str) -> bool:
    """
    A transition is enabled when every normal and read arc finds
    at least its weight in its place and every inhibitor arc finds
    its place empty.
    """
    _checktransition(net, t)
    return _enabled(net, _total(net, marking), t)


def effective_consumption(
        net: PetriNet,
        marking: Mapping[str, int],
        firing: Iterable[str],
        reset_mode: ResetMode = ResetMode.CONTENTION) -> Dict[str, int]:
    """
    Tokens taken from every place by a firing set.

    In contention mode a reset arc takes the whole marking of its
    place. In standard mode it takes nothing here.
    """
    r = dict.fromkeys(net.places, 0)
    r.update(_consumption(net, _total(net, marking), firing, reset_mode))
    return r


def admissible(
        net: PetriNet,
        marking: Mapping[str, int],
        firing: Iterable[str],
        reset_mode: ResetMode = ResetMode.CONTENTION) -> bool:
    return Simulator(reset_mode=reset_mode).admissible(net, marking, firing)


def fire(
        net: PetriNet,
        marking: Mapping[str, int],
        firing: Iterable[str],
        reset_mode: ResetMode = ResetMode.CONTENTION) -> Marking:
    return Simulator(reset_mode=reset_mode).fire(net, marking, firing)


def firing_sets(
        net: PetriNet,
        marking: Mapping[str, int],
        semantics: SemanticsMode = SemanticsMode.SET,
        reset_mode: ResetMode = ResetMode.CONTENTION) -> List[FiringSet]:
    return Simulator(semantics=semantics, reset_mode=reset_mode).firing_sets(net, marking)


def iter_sequences(
        net: PetriNet,
        m0: Mapping[str, int],
        k: int,
        semantics: SemanticsMode = SemanticsMode.SET,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> Iterator[ExecutionSequence]:
    sim = Simulator(semantics=semantics, reset_mode=reset_mode)
    sim.limits = limits
    return sim.iter_sequences(net, m0, k)


def enumerate_sequences(
        net: PetriNet,
        m0: Mapping[str, int],
        k: int,
        semantics: SemanticsMode = SemanticsMode.SET,
        reset_mode: ResetMode = ResetMode.CONTENTION,
        limits: Optional[Limits] = None) -> List[ExecutionSequence]:
    """
    Quick function to enumerate every execution sequence.

    It is useful to avoid creating the Simulator object,
    in case only the default parameters are used.
    """
    sim = Simulator(semantics=semantics, reset_mode=reset_mode)
    sim.limits = limits
    return sim.enumerate(net, m0, k)


def replay(
        net: PetriNet,
        m0: Mapping[str, int],
        firings: Iterable[Iterable[str]],
        reset_mode: ResetMode = ResetMode.CONTENTION) -> ExecutionSequence:
    return Simulator(reset_mode=reset_mode).replay(net, m0, firings)


def sequence_atoms(sequence: ExecutionSequence) -> FrozenSet[Tuple]:
    """
    The fires and holds atoms of a sequence, for time steps
    0..k, as tuples:

    ('fires', transition, time)
    ('holds', place, count, time)
    """
    r = set()
    for s in sequence.steps:
        for t in s.firing:
            r.add(('fires', t, s.time))
        for p, q in s.marking_before.items():
            r.add(('holds', p, q, s.time))
    return frozenset(r)


def cross_validate(native: Iterable[ExecutionSequence], external: Iterable[ExecutionSequence]) -> CrossValidation:
    """
    Compares two collections of sequences as sets of
    fires/holds atoms.

    The unmatched sequences of both sides are reported, in the
    order they were given.
    """
    native = list(native)
    external = list(external)
    native_atoms = [sequence_atoms(i) for i in native]
    external_atoms = [sequence_atoms(i) for i in external]
    native_set = set(native_atoms)
    external_set = set(external_atoms)
    unmatched_native = tuple(s for s, a in zip(native, native_atoms) if a not in external_set)
    unmatched_external = tuple(s for s, a in zip(external, external_atoms) if a not in native_set)
    return CrossValidation(
        match=native_set == external_set,
        native_count=len(native_set),
        external_count=len(external_set),
        unmatched_native=unmatched_native,
        unmatched_external=unmatched_external,
    )
