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


import unittest

from petriasp.exceptions import ErrorKind, PetriLookupError, PetriValueError
from petriasp.helpers import MAX_TOKENS, is_identifier
from petriasp.net import ArcKind, InputArc, Marking, OutputArc, PetriNet, postset, preset, problems, validate

from . import nets


class TestMarking(unittest.TestCase):

    def test_mapping(self):
        m = Marking({'a': 1, 'b': 0})
        assert m['a'] == 1
        assert len(m) == 2
        assert set(m) == {'a', 'b'}
        assert m == {'a': 1, 'b': 0}
        assert m == Marking({'b': 0, 'a': 1})

    def test_hashable(self):
        a = Marking({'a': 1, 'b': 0})
        b = Marking({'b': 0, 'a': 1})
        assert hash(a) == hash(b)
        assert len({a, b}) == 1

    def test_updated(self):
        m = Marking({'a': 1, 'b': 0})
        n = m.updated({'b': 3})
        assert n == {'a': 1, 'b': 3}
        assert m == {'a': 1, 'b': 0}

    def test_matches(self):
        m = Marking({'a': 1, 'b': 0})
        assert m.matches({})
        assert m.matches({'a': 1})
        assert not m.matches({'a': 1, 'b': 1})
        assert not m.matches({'c': 0})


class TestValidate(unittest.TestCase):

    def test_glycolysis_valid(self):
        net, m0 = nets.glycolysis()
        assert validate(net, m0) is net
        assert m0 == dict.fromkeys(['f16bp', 'dhap', 'g3p', 'bpg13'], 0)

    def test_idempotent(self):
        net, m0 = nets.dhap_removal()
        assert problems(validate(net, m0), m0) == []

    def test_zero_weight(self):
        net = PetriNet(['p'], ['t'], [InputArc('p', 't', ArcKind.NORMAL, 0)])
        with self.assertRaises(PetriValueError) as cm:
            validate(net)
        assert cm.exception.kind == ErrorKind.ZERO_WEIGHT

    def test_name_clash(self):
        net = PetriNet(['x'], ['x'])
        with self.assertRaises(PetriValueError) as cm:
            validate(net)
        assert ErrorKind.NAME_CLASH in cm.exception.kinds()

    def test_all_problems(self):
        net = PetriNet(
            ['p', 'Bad'],
            ['t'],
            [InputArc('p', 't', ArcKind.NORMAL, 0), InputArc('q', 't')],
            [OutputArc('t', 'p'), OutputArc('t', 'p')],
        )
        kinds = [i.kind for i in problems(net, {'p': 1})]
        assert ErrorKind.BAD_NAME in kinds
        assert ErrorKind.ZERO_WEIGHT in kinds
        assert ErrorKind.UNKNOWN_NODE in kinds
        assert ErrorKind.DUPLICATE_ARC in kinds
        assert ErrorKind.MARKING_MISSING_PLACE in kinds

    def test_duplicate_same_kind(self):
        net = PetriNet(['p'], ['t'], [InputArc('p', 't'), InputArc('p', 't', ArcKind.NORMAL, 2)])
        assert [i.kind for i in problems(net)] == [ErrorKind.DUPLICATE_ARC]

    def test_different_kinds_allowed(self):
        net, m0 = nets.synthase()
        assert problems(net, m0) == []
        assert len(preset(net, 'syn')) == 2

    def test_unweighted_kinds(self):
        net = PetriNet(['p'], ['t'], [InputArc('p', 't', ArcKind.INHIBITOR, 1)])
        assert [i.kind for i in problems(net)] == [ErrorKind.BAD_WEIGHT]
        net = PetriNet(['p'], ['t'], [InputArc('p', 't', ArcKind.RESET, None)])
        assert problems(net) == []

    def test_marking(self):
        net = PetriNet(['p'], ['t'])
        assert [i.kind for i in problems(net, {'p': -1})] == [ErrorKind.NEGATIVE_TOKENS]
        assert [i.kind for i in problems(net, {'p': MAX_TOKENS + 1})] == [ErrorKind.OVERFLOW]
        assert [i.kind for i in problems(net, {'p': 0, 'q': 0})] == [ErrorKind.UNKNOWN_NODE]

    def test_weight_overflow(self):
        net = PetriNet(['p'], ['t'], [InputArc('p', 't', ArcKind.NORMAL, MAX_TOKENS + 1)])
        assert [i.kind for i in problems(net)] == [ErrorKind.OVERFLOW]
        net = PetriNet(['p'], ['t'], [], [OutputArc('t', 'p', MAX_TOKENS + 1)])
        with self.assertRaises(PetriValueError) as cm:
            validate(net, {'p': 0})
        assert cm.exception.kind == ErrorKind.OVERFLOW
        net = PetriNet(['p'], ['t'], [InputArc('p', 't', ArcKind.READ, MAX_TOKENS)])
        assert problems(net, {'p': MAX_TOKENS}) == []

    def test_keyword_names(self):
        net = PetriNet(['not', 'note'], ['t'])
        found = problems(net)
        assert [i.kind for i in found] == [ErrorKind.BAD_NAME]
        assert "'not'" in found[0].message
        assert not is_identifier('not')
        assert is_identifier('nothing')

    def test_str(self):
        net = PetriNet(['x'], ['x'])
        try:
            validate(net)
            assert False
        except PetriValueError as e:
            assert '[name clash]' in str(e)
            assert isinstance(e, ValueError)


class TestPrePost(unittest.TestCase):

    def test_t4(self):
        net, _ = nets.glycolysis()
        assert preset(net, 't4') == (InputArc('f16bp', 't4', ArcKind.NORMAL, 1), )
        assert set(postset(net, 't4')) == {('dhap', 1), ('g3p', 1)}

    def test_source(self):
        net, _ = nets.glycolysis()
        assert preset(net, 't3') == ()
        assert postset(net, 't3') == (('f16bp', 1), )

    def test_sink(self):
        net, _ = nets.dhap_removal()
        assert postset(net, 'tr') == ()
        assert preset(net, 'tr') == (InputArc('dhap', 'tr', ArcKind.RESET, None), )

    def test_unknown(self):
        net, _ = nets.glycolysis()
        with self.assertRaises(PetriLookupError):
            preset(net, 'nope')
        with self.assertRaises(PetriLookupError):
            postset(net, 'f16bp')

    def test_partition(self):
        net, _ = nets.dhap_removal()
        inputs = [a for t in net.transitions for a in preset(net, t)]
        outputs = [(t, p, w) for t in net.transitions for p, w in postset(net, t)]
        assert len(inputs) == len(net.input_arcs)
        assert set(inputs) == set(net.input_arcs)
        assert len(outputs) == len(net.output_arcs)
        assert set(outputs) == set(net.output_arcs)

    def test_extend(self):
        net, _ = nets.glycolysis()
        bigger = net.extend(['src'], (), [OutputArc('src', 'g3p')])
        assert bigger.is_transition('src')
        assert not net.is_transition('src')
        assert postset(bigger, 'src') == (('g3p', 1), )
