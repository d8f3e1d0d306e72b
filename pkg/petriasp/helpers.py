"""
petriasp

Internal helper functions
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

import re
from typing import Iterable, Tuple


__all__ = [
    'IDENTIFIER',
    'KEYWORDS',
    'MAX_TOKENS',
    'is_identifier',
    'setkey',
]


# Valid ASP constants, so names never need mangling
IDENTIFIER = re.compile(r'[a-z][A-Za-z0-9_]*\Z')

# Reserved by the solvers, they cannot name an atom argument
KEYWORDS = frozenset(('not', ))

# Token counts are 64 bit non negative integers
MAX_TOKENS = 2 ** 63 - 1


def is_identifier(name: str) -> bool:
    return isinstance(name, str) and IDENTIFIER.match(name) is not None and name not in KEYWORDS


def setkey(names: Iterable[str]) -> Tuple[int, Tuple[str, ...]]:
    '''
    Canonical sort key for a set of names: by size, then by
    the sorted list of members.
    '''
    members = tuple(sorted(names))
    return len(members), members
