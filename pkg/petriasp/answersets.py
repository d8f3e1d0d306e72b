"""
petriasp
Reading answer sets printed by an ASP solver.

Only the fires/2 and holds/3 atoms are used, everything else
in the output is ignored.
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
from typing import Dict, Iterator, List, Optional, Set, Tuple

from .engine import ExecutionSequence, FiringSet, Step
from .exceptions import ErrorKind, PetriValueError, Problem, Span
from .net import Marking, PetriNet


__all__ = [
    'answer_blocks',
    'parse_answer_sets',
]


logger = logging.getLogger(__name__)


_ANSWER = re.compile(r'Answer:\s*\d+\s*\Z')
_ATOM = re.compile(r'([a-z_][A-Za-z0-9_]*)(?:\((.*)\))?\Z')
_INT = re.compile(r'-?\d+\Z')


# (line number, text) of the atoms of one answer set
_Block = List[Tuple[int, str]]


def answer_blocks(text: str, plain: bool = False) -> Iterator[_Block]:
    """
    Splits solver output into answer sets.

    By default the solver format is expected: an "Answer: N" line
    followed by the atoms. Anything else (version banner, SATISFIABLE,
    statistics) is skipped.

    With plain=True every non empty line is an answer set, lines
    starting with % are comments.
    """
    if plain:
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.strip() and not line.lstrip().startswith('%'):
                yield [(lineno, line)]
        return

    block = None  # type: Optional[_Block]
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if _ANSWER.match(stripped):
            if block is not None:
                yield block
            block = []
        elif block is not None:
            if stripped and all(_ATOM.match(i) for i in stripped.split()):
                block.append((lineno, line))
            else:
                yield block
                block = None
    if block is not None:
        yield block


def _atoms(block: _Block) -> Iterator[Tuple[str, List[str], Span]]:
    for lineno, line in block:
        for m in re.finditer(r'\S+', line):
            atom = _ATOM.match(m.group(0))
            span = Span(lineno, m.start() + 1)
            if atom is None:
                yield '', [m.group(0)], span
                continue
            args = atom.group(2)
            yield atom.group(1), [i.strip() for i in args.split(',')] if args else [], span


def _sequence(block: _Block, net: PetriNet, k: int, found: List[Problem]) -> ExecutionSequence:
    '''
    Rebuilds one sequence, appending to found what is wrong with it
    '''
    fires = {}  # type: Dict[int, Set[str]]
    holds = {}  # type: Dict[Tuple[str, int], int]
    first = block[0][0] if block else 0

    for name, args, span in _atoms(block):
        if name == '':
            found.append(Problem(ErrorKind.MALFORMED_ATOM, 'cannot read %r' % args[0], span))
        elif name == 'fires':
            if len(args) != 2 or not _INT.match(args[1]):
                found.append(Problem(ErrorKind.MALFORMED_ATOM, 'expected fires(transition,step)', span))
                continue
            t, time = args[0], int(args[1])
            if not net.is_transition(t):
                found.append(Problem(ErrorKind.UNKNOWN_NAME, '%s is not a transition' % t, span))
            elif not 0 <= time <= k:
                found.append(Problem(ErrorKind.MALFORMED_ATOM, 'step %d outside 0..%d' % (time, k), span))
            else:
                fires.setdefault(time, set()).add(t)
        elif name == 'holds':
            if len(args) != 3 or not _INT.match(args[1]) or not _INT.match(args[2]):
                found.append(Problem(ErrorKind.MALFORMED_ATOM, 'expected holds(place,count,step)', span))
                continue
            p, q, time = args[0], int(args[1]), int(args[2])
            if not net.is_place(p):
                found.append(Problem(ErrorKind.UNKNOWN_NAME, '%s is not a place' % p, span))
            elif q < 0 or not 0 <= time <= k:
                found.append(Problem(ErrorKind.MALFORMED_ATOM, 'holds(%s,%d,%d) out of range' % (p, q, time), span))
            elif (p, time) in holds and holds[(p, time)] != q:
                found.append(Problem(
                    ErrorKind.INCOMPLETE_MARKING,
                    '%s has both %d and %d tokens at step %d' % (p, holds[(p, time)], q, time),
                    span))
            else:
                holds[(p, time)] = q

    steps = []
    for time in range(k + 1):
        tokens = {}
        for p in net.places:
            if (p, time) not in holds:
                found.append(Problem(
                    ErrorKind.INCOMPLETE_MARKING,
                    'no holds atom for %s at step %d' % (p, time),
                    Span(first, 1)))
            else:
                tokens[p] = holds[(p, time)]
        steps.append(Step(time, FiringSet(fires.get(time, ())), Marking(tokens)))
    return ExecutionSequence(tuple(steps), None)


def parse_answer_sets(text: str, net: PetriNet, k: int, plain: bool = False) -> List[ExecutionSequence]:
    """
    Rebuilds the execution sequences of solver output, one per
    answer set, in the order they appear.

    Every place must have exactly one holds atom for every step
    0..k. All the problems in the whole output are collected
    and raised together as a PetriValueError.

    The sequences have no final marking, the encoding does not
    derive holds atoms past the horizon.
    """
    if k < 0:
        raise PetriValueError('The horizon must be at least 0, got %d' % k, kind=ErrorKind.BAD_PARAMETER, value=k)
    found = []  # type: List[Problem]
    r = [_sequence(block, net, k, found) for block in answer_blocks(text, plain)]
    if found:
        raise PetriValueError('Invalid solver output: %d problem(s)' % len(found), found)
    logger.info('Read %d answer sets', len(r))
    return r
