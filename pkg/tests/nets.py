# petriasp
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

'''
Nets shared by the tests.
'''

import os.path
from typing import Tuple

from petriasp.dsl import parse_net
from petriasp.net import Marking, PetriNet


ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..')
NETS = os.path.join(ROOT, 'nets')
GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')


def netpath(name: str) -> str:
    return os.path.join(NETS, name + '.pnet')


def goldenpath(name: str) -> str:
    return os.path.join(GOLDEN, name)


def read(path: str) -> str:
    with open(path, 'rt', encoding='utf-8') as f:
        return f.read()


def load(name: str) -> Tuple[PetriNet, Marking]:
    return parse_net(read(netpath(name)))


def glycolysis() -> Tuple[PetriNet, Marking]:
    return load('glycolysis')


def dhap_removal() -> Tuple[PetriNet, Marking]:
    return load('glycolysis_dhap_removal')


def feedback() -> Tuple[PetriNet, Marking]:
    return load('feedback_inhibition')


def synthase() -> Tuple[PetriNet, Marking]:
    return load('atp_synthase')


CYCLE = '''
place p1 tokens=1
place p2
trans t1
trans t2
arc p1 -> t1
arc t1 -> p2
arc p2 -> t2
arc t2 -> p1
'''

MOVE = '''
place p1 tokens=1
place p2
trans t1
arc p1 -> t1
arc t1 -> p2
'''

STARVED = '''
place p
trans t
arc p -> t
'''

# t has a normal and a reset arc from p, so it never fires
# when the reset competes for the tokens
RESET_AND_ARC = '''
place p tokens=1
place q
trans t
trans u
arc p -> t
reset p -> t
arc t -> q
arc p -> u
arc u -> q
'''

# Markings of the glycolysis net along the trace in the listing, time 0..5
TRACE_MARKINGS = [
    {'bpg13': 0, 'dhap': 0, 'f16bp': 0, 'g3p': 0},
    {'bpg13': 0, 'dhap': 0, 'f16bp': 1, 'g3p': 0},
    {'bpg13': 0, 'dhap': 1, 'f16bp': 1, 'g3p': 1},
    {'bpg13': 0, 'dhap': 2, 'f16bp': 1, 'g3p': 2},
    {'bpg13': 2, 'dhap': 3, 'f16bp': 1, 'g3p': 2},
    {'bpg13': 4, 'dhap': 4, 'f16bp': 1, 'g3p': 2},
]

TRACE_FIRINGS = [
    {'t3'},
    {'t3', 't4'},
    {'t3', 't4', 't5a', 't5b'},
    {'t3', 't4', 't5a', 't5b', 't6'},
    {'t3', 't4', 't5a', 't5b', 't6'},
    {'t3', 't4', 't5a', 't5b', 't6'},
]
