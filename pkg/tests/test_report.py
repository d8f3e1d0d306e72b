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


from fractions import Fraction
import json
import unittest

from petriasp.analysis import place_stats, rate
from petriasp.dsl import parse_net
from petriasp.engine import FiringSet, Limits, ResetMode, SemanticsMode, enumerate_sequences
from petriasp.net import Marking
from petriasp.report import *

from . import nets


def move():
    net, m0 = parse_net(nets.MOVE)
    return enumerate_sequences(net, m0, 1, SemanticsMode.MAXIMAL)


def glycolysis():
    net, m0 = nets.glycolysis()
    return enumerate_sequences(net, m0, 5, SemanticsMode.MAXIMAL)


class TestDecimal(unittest.TestCase):

    def test_decimal(self):
        assert decimal(Fraction(1, 3)) == '0.333333'
        assert decimal(Fraction(2, 3), 3) == '0.667'
        assert decimal(Fraction(5)) == '5.000000'
        assert decimal(Fraction(5, 2), 0) == '2'


class TestJson(unittest.TestCase):

    def test_types(self):
        assert json.loads(to_json(Fraction(1, 3))) == '1/3'
        assert json.loads(to_json(Marking({'b': 2, 'a': 0}))) == {'a': 0, 'b': 2}
        assert json.loads(to_json(FiringSet({'t4', 't3'}))) == ['t3', 't4']
        assert json.loads(to_json(FiringSet())) == []
        assert json.loads(to_json(Limits(max_sequences=3))) == {'max_sequences': 3, 'max_states': None}

    def test_nested(self):
        value = {'mode': SemanticsMode.MAXIMAL, 'rates': [Fraction(6, 5)]}
        assert json.loads(to_json(value)) == {'mode': 'max', 'rates': ['6/5']}

    def test_stable(self):
        assert to_json({'b': 1, 'a': 2}) == to_json({'a': 2, 'b': 1})
        assert to_json(1).endswith('\n')


class TestTraceReport(unittest.TestCase):

    def test_data(self):
        data = trace_data(move(), SemanticsMode.MAXIMAL, ResetMode.CONTENTION, 1)
        assert data['semantics'] == 'max'
        assert data['reset_mode'] == 'contention'
        assert data['count'] == 1
        s = json.loads(to_json(data))['sequences'][0]
        assert s['firings'] == [['t1'], []]
        assert s['markings'] == [{'p1': 1, 'p2': 0}, {'p1': 0, 'p2': 1}, {'p1': 0, 'p2': 1}]

    def test_csv(self):
        lines = trace_csv(move()).splitlines()
        assert lines[0] == 'sequence,step,place,count'
        assert lines[1:] == [
            '0,0,p1,1',
            '0,0,p2,0',
            '0,1,p1,0',
            '0,1,p2,1',
            '0,2,p1,0',
            '0,2,p2,1',
        ]

    def test_text(self):
        assert trace_text(glycolysis()) == '2 sequences\n'
        assert trace_text(move()) == '1 sequence\n'
        assert trace_text([]) == '0 sequences\n'

    def test_text_dump(self):
        lines = trace_text(move(), dump=True).splitlines()
        assert lines == [
            '1 sequence',
            'Sequence 0',
            '    0  p1=1 p2=0  fires {t1}',
            '    1  p1=0 p2=1  fires {}',
            '    2  p1=0 p2=1',
        ]


class TestStatsReport(unittest.TestCase):

    def test_csv(self):
        series = place_stats(glycolysis(), 'bpg13')
        lines = stats_csv([series]).splitlines()
        assert lines[0] == 'place,step,mean,min,max,distinct_count'
        assert len(lines) == 7
        assert lines[1] == 'bpg13,0,0.000000,0,0,1'
        assert lines[4] == 'bpg13,3,1.000000,0,2,2'
        assert lines[6] == 'bpg13,5,5.000000,4,6,2'

    def test_data(self):
        sequences = glycolysis()
        series = place_stats(sequences, 'bpg13')
        rates = rate(sequences, 'bpg13', 5)
        data = json.loads(to_json(stats_data([series], [rates], k=5, semantics=SemanticsMode.MAXIMAL)))
        assert data['k'] == 5
        assert data['semantics'] == 'max'
        last = data['places'][0]['steps'][-1]
        assert last['mean'] == '5'
        assert last['mean_decimal'] == '5.000000'
        assert last['distinct_values'] == [4, 6]
        assert data['rates'][0]['mean_rate'] == '1'
        assert data['rates'][0]['rate_per_sequence'] == ['4/5', '6/5']

    def test_text(self):
        sequences = glycolysis()
        text = stats_text([place_stats(sequences, 'bpg13')], [rate(sequences, 'bpg13', 5)], title='glycolysis')
        lines = text.splitlines()
        assert lines[0] == 'glycolysis'
        assert lines[1] == 'bpg13 over 2 sequences'
        assert lines[-1] == 'rate of bpg13 at step 5: 1 (1.000000)'
