"""
petriasp
Exceptions
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
from typing import Any, List, NamedTuple, Optional


__all__ = [
    'ErrorKind',
    'Span',
    'Problem',
    'PetriException',
    'PetriValueError',
    'PetriLookupError',
    'TokenOverflowError',
    'LimitExceeded',
]


class ErrorKind(Enum):
    """
    The kinds of problem that can be reported.

    Validation and parsing collect several problems before
    raising, so every problem carries its own kind.
    """
    UNKNOWN_NODE = 'unknown node'
    DUPLICATE_ARC = 'duplicate arc'
    ZERO_WEIGHT = 'zero weight'
    BAD_WEIGHT = 'bad weight'
    NAME_CLASH = 'name clash'
    BAD_NAME = 'bad name'
    MARKING_MISSING_PLACE = 'marking missing place'
    NEGATIVE_TOKENS = 'negative tokens'
    SYNTAX = 'syntax'
    PARSE = 'parse'
    MALFORMED_ATOM = 'malformed atom'
    INCOMPLETE_MARKING = 'incomplete marking'
    UNKNOWN_NAME = 'unknown name'
    NOT_ADMISSIBLE = 'not admissible'
    VARIANT_TOO_LOW = 'variant too low'
    INVALID_PREDICATE = 'invalid predicate'
    EMPTY_INPUT = 'empty input'
    OVERFLOW = 'overflow'
    LIMIT_EXCEEDED = 'limit exceeded'
    SUBSET_LIMIT = 'subset limit exceeded'
    RESERVED_NAME = 'reserved name'
    BAD_PARAMETER = 'bad parameter'


Span = NamedTuple('Span', [
    ('line', int),
    ('column', int),
])


Problem = NamedTuple('Problem', [
    ('kind', ErrorKind),
    ('message', str),
    ('span', Optional[Span]),
])


class PetriException(Exception):
    """
    Exception which exposes some extra fields.

    problems:
        The list of all the problems found. Validation and parsing
        do not stop at the first error, so a single exception can
        describe a whole file worth of mistakes.
        Each problem has a kind, a message and, when it comes from
        a source file, the line and column where it was found.

    kind:
        The kind of the first problem, or the kind given explicitly.
        Handy to check what went wrong without iterating problems.

    value:
        The offending value, when there is a single one.
    """
    def __init__(
            self,
            description: str,
            problems: Optional[List[Problem]] = None,
            kind: Optional[ErrorKind] = None,
            value: Any = None) -> None:
        super().__init__(description)
        self.problems = problems if problems else []
        if kind is None and self.problems:
            kind = self.problems[0].kind
        self.kind = kind
        self.value = value

    @staticmethod
    def _location(span: Optional[Span]) -> str:
        '''
        Compact representation of where in the source the problem is
        '''
        if span is None:
            return '-'
        return '%d:%d' % (span.line, span.column)

    def kinds(self) -> List[ErrorKind]:
        return [i.kind for i in self.problems]

    def __str__(self) -> str:
        msg = '\n'.join(str(i) for i in self.args)
        if self.problems:
            msg += '\nProblems:'
            for p in self.problems:
                msg += '\n  %s [%s] %s' % (self._location(p.span), p.kind.value, p.message)
        return msg


class PetriValueError(PetriException, ValueError):
    """
    Exception class, subclass of ValueError.

    Raised for ill formed nets, markings, source text and
    solver output.
    """


class PetriLookupError(PetriException, LookupError):
    """
    Exception class, subclass of LookupError.

    Raised when a place or transition name is not part of the net.
    """


class TokenOverflowError(PetriException, OverflowError):
    """
    Exception class, subclass of OverflowError.

    Token counts are 64 bit non negative integers.
    """


class LimitExceeded(PetriException):
    """
    Raised when an enumeration goes over the configured limits.

    partial:
        How many complete execution sequences were produced
        before giving up.

    sequences:
        The sequences produced so far, in canonical order.
    """
    def __init__(self, description: str, partial: int, sequences: Optional[List[Any]] = None) -> None:
        super().__init__(description, kind=ErrorKind.LIMIT_EXCEEDED)
        self.partial = partial
        self.sequences = sequences if sequences else []
