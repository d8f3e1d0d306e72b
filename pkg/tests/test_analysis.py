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
import unittest

from petriasp.analysis import *
from petriasp.dsl import parse_net
from petriasp.engine import FiringSet, Limits, ResetMode, SemanticsMode, enumerate_sequences, iter_sequences, replay
from petriasp.exceptions import ErrorKind, LimitExceeded, PetriLookupError, PetriValueError
from petriasp.report import stats_csv

from . import nets


def maximal(net_m0, k):
    net, m0 = net_m0
    return enumerate_sequences(net, m0, k, SemanticsMode.MAXIMAL)


class TestStats(unittest.TestCase):

    def test_glycolysis(self):
        # The first sequence is the trace, the second fires t6 at step 2
        series = place_stats(maximal(nets.glycolysis(), 5), 'bpg13')
        assert series.sequences == 2
        assert [i.mean for i in series.per_step] == [0, 0, 0, 1, 3, 5]
        assert [i.min for i in series.per_step] == [0, 0, 0, 0, 2, 4]
        assert [i.max for i in series.per_step] == [0, 0, 0, 2, 4, 6]
        assert series.per_step[3].distinct == (0, 2)

    def test_trace_branch(self):
        sequences = maximal(nets.glycolysis(), 5)
        series = place_stats(sequences[:1], 'bpg13')
        assert series.per_step[4].distinct == (2, )

    def test_single(self):
        series = place_stats(maximal(nets.glycolysis(), 5)[:1], 'dhap')
        for i in series.per_step:
            assert i.mean == i.min == i.max
            assert len(i.distinct) == 1

    def test_order(self):
        sequences = maximal(nets.glycolysis(), 5)
        assert place_stats(sequences, 'dhap') == place_stats(reversed(sequences), 'dhap')

    def test_exact_mean(self):
        series = place_stats(maximal(nets.glycolysis(), 5), 'dhap')
        # 4 and 3 at the last step
        assert series.per_step[5].mean == Fraction(7, 2)
        assert isinstance(series.per_step[5].mean, Fraction)

    def test_errors(self):
        with self.assertRaises(PetriValueError) as cm:
            place_stats([], 'dhap')
        assert cm.exception.kind == ErrorKind.EMPTY_INPUT
        with self.assertRaises(PetriLookupError) as cm:
            place_stats(maximal(nets.glycolysis(), 1), 'atp')
        assert cm.exception.kind == ErrorKind.UNKNOWN_NAME

    def test_mixed_horizons(self):
        net, m0 = nets.glycolysis()
        sequences = maximal((net, m0), 2) + maximal((net, m0), 3)
        with self.assertRaises(PetriValueError) as cm:
            place_stats(sequences, 'dhap')
        assert cm.exception.kind == ErrorKind.BAD_PARAMETER


class TestRate(unittest.TestCase):

    def test_trace(self):
        r = rate(maximal(nets.glycolysis(), 5)[:1], 'bpg13', 5)
        assert r.rate_per_sequence == (Fraction(4, 5), )
        assert r.mean_rate == Fraction(4, 5)
        assert r.horizon == 5

    def test_mean(self):
        r = rate(maximal(nets.glycolysis(), 5), 'bpg13', 5)
        assert r.rate_per_sequence == (Fraction(4, 5), Fraction(6, 5))
        assert r.mean_rate == 1

    def test_zero(self):
        net, m0 = parse_net(nets.STARVED)
        assert rate(enumerate_sequences(net, m0, 2), 'p', 2).mean_rate == 0

    def test_errors(self):
        with self.assertRaises(PetriValueError) as cm:
            rate([], 'bpg13', 5)
        assert cm.exception.kind == ErrorKind.EMPTY_INPUT
        with self.assertRaises(PetriValueError) as cm:
            rate(maximal(nets.glycolysis(), 5), 'bpg13', 0)
        assert cm.exception.kind == ErrorKind.BAD_PARAMETER


class TestWaypoints(unittest.TestCase):

    def test_parse(self):
        assert parse_predicate('bpg13 = 4 @ 5') == Waypoint('bpg13', Comparator.EQ, 4, 5)
        assert parse_predicate('dhap<=2@any') == Waypoint('dhap', Comparator.LE, 2, None)
        assert parse_predicate('g3p>=1') == Waypoint('g3p', Comparator.GE, 1, None)
        assert parse_predicate('g3p=0 then g3p>=1') == depletion_recovery('g3p')

    def test_parse_errors(self):
        for i in ('bpg13 == 4', 'bpg13 = -1', '= 4', 'a=1 then b=1 then c=1', 'a=1@x', ''):
            with self.assertRaises(PetriValueError) as cm:
                parse_predicate(i)
            assert cm.exception.kind == ErrorKind.INVALID_PREDICATE

    def test_trace_retained(self):
        net, m0 = nets.glycolysis()
        trace = replay(net, m0, nets.TRACE_FIRINGS)
        kept = filter_waypoints(iter_sequences(net, m0, 5), [parse_predicate('bpg13=4@5')])
        assert any(s.firings == trace.firings for s in kept)
        for s in kept:
            assert s.markings[5]['bpg13'] == 4

    def test_empty_predicates(self):
        sequences = maximal(nets.glycolysis(), 5)
        assert filter_waypoints(sequences, []) == sequences

    def test_depletion_recovery(self):
        sequences = maximal(nets.glycolysis(), 5)
        assert filter_waypoints(sequences, [depletion_recovery('f16bp')]) == sequences
        assert filter_waypoints(maximal(nets.synthase(), 3), [depletion_recovery('h_is')]) == []

    def test_order_matters(self):
        sequences = maximal(nets.glycolysis(), 5)
        # bpg13 grows, it never goes back to 0
        assert filter_waypoints(sequences, [parse_predicate('bpg13>=2 then bpg13=0')]) == []
        assert filter_waypoints(sequences, [parse_predicate('bpg13=0 then bpg13>=2')]) == sequences

    def test_step(self):
        sequences = maximal(nets.glycolysis(), 5)
        assert filter_waypoints(sequences, [parse_predicate('dhap=3@5')]) == sequences[1:]
        assert filter_waypoints(sequences, [parse_predicate('dhap=3')]) == sequences

    def test_unknown_place(self):
        with self.assertRaises(PetriLookupError) as cm:
            filter_waypoints(maximal(nets.glycolysis(), 2), [parse_predicate('atp=1')])
        assert cm.exception.kind == ErrorKind.UNKNOWN_NAME


class TestReachable(unittest.TestCase):

    def test_set(self):
        net, m0 = nets.glycolysis()
        r = reachable(net, m0, {'bpg13': 4}, 5)
        assert r.reachable
        assert r.step == 4
        assert r.witness.final_marking['bpg13'] == 4
        assert replay(net, m0, r.witness.firings).final_marking == r.witness.final_marking

    def test_initial(self):
        net, m0 = nets.glycolysis()
        r = reachable(net, m0, dict(m0), 0)
        assert r.reachable
        assert r.step == 0
        assert r.witness.steps == ()
        assert r.witness.final_marking == m0

    def test_odd(self):
        net, m0 = nets.glycolysis()
        r = reachable(net, m0, {'bpg13': 1}, 5, SemanticsMode.MAXIMAL)
        assert not r.reachable
        assert r.witness is None
        assert r.horizon == 5

    def test_beyond_horizon(self):
        net, m0 = nets.glycolysis()
        assert not reachable(net, m0, {'bpg13': 4}, 3).reachable

    def test_partial_target(self):
        net, m0 = nets.glycolysis()
        r = reachable(net, m0, {'dhap': 2, 'g3p': 2}, 5, SemanticsMode.MAXIMAL)
        assert r.reachable
        assert r.witness.final_marking.matches({'dhap': 2, 'g3p': 2})

    def test_unknown(self):
        net, m0 = nets.glycolysis()
        with self.assertRaises(PetriLookupError) as cm:
            reachable(net, m0, {'atp': 1}, 5)
        assert cm.exception.kind == ErrorKind.UNKNOWN_NAME

    def test_limit(self):
        net, m0 = nets.glycolysis()
        with self.assertRaises(LimitExceeded):
            reachable(net, m0, {'bpg13': 100}, 5, limits=Limits(max_states=3))


class TestBounded(unittest.TestCase):

    def test_bound_four(self):
        net, m0 = nets.glycolysis()
        r = bounded(net, m0, 4, 5, SemanticsMode.MAXIMAL)
        assert r == [Violation(1, 5, 'bpg13', 6)]
        assert not [i for i in r if i.place == 'dhap']

    def test_bound_three(self):
        net, m0 = nets.glycolysis()
        r = bounded(net, m0, 3, 5, SemanticsMode.MAXIMAL)
        assert Violation(0, 5, 'dhap', 4) in r
        assert r == [
            Violation(0, 5, 'bpg13', 4),
            Violation(0, 5, 'dhap', 4),
            Violation(1, 4, 'bpg13', 4),
            Violation(1, 5, 'bpg13', 6),
        ]

    def test_observed_max(self):
        net, m0 = nets.feedback()
        sequences = enumerate_sequences(net, m0, 3)
        top = max(m[p] for s in sequences for m in s.markings for p in net.places)
        assert bounded(net, m0, top, 3) == []
        assert bounded(net, m0, top - 1, 3) != []

    def test_zero(self):
        net, m0 = nets.synthase()
        assert bounded(net, m0, 0, 0)


class TestDeadlocks(unittest.TestCase):

    def test_source(self):
        net, m0 = nets.glycolysis()
        assert deadlocks(net, m0, 5, SemanticsMode.MAXIMAL) == []
        assert deadlocks(net, m0, 2) == []

    def test_starved(self):
        net, m0 = parse_net(nets.STARVED)
        assert deadlocks(net, m0, 0) == [Deadlock(0, 0, m0)]

    def test_no_transitions(self):
        net, m0 = parse_net('place p tokens=2\n')
        r = deadlocks(net, m0, 2)
        assert r[0] == Deadlock(0, 0, m0)
        assert [i.step for i in r] == [0, 1, 2]

    def test_drained(self):
        net, m0 = parse_net(nets.MOVE)
        r = deadlocks(net, m0, 1, SemanticsMode.MAXIMAL)
        assert r == [Deadlock(0, 1, net.marking({'p2': 1}))]


class TestLiveness(unittest.TestCase):

    def test_fed(self):
        net, m0 = nets.glycolysis()
        assert liveness_basic(net, m0, 't6', 1)
        assert not liveness_basic(net, m0, 't6', 0)

    def test_starved(self):
        net, m0 = parse_net(nets.STARVED)
        assert not liveness_basic(net, m0, 't', 0)
        assert liveness_basic(net, m0, 't', 1)

    def test_inhibitor(self):
        net, m0 = nets.feedback()
        assert liveness_basic(net, m0, 'gly1', 3)
        # use drains atp in one step
        assert not liveness_basic(net, m0.updated({'atp': 1}), 'gly1', 0)
        assert liveness_basic(net, m0.updated({'atp': 1}), 'gly1', 1)

    def test_read_threshold(self):
        net, m0 = parse_net('place p\ntrans t\nread p -> t weight=5\n')
        assert not liveness_basic(net, m0, 't', 4)
        assert liveness_basic(net, m0, 't', 5)

    def test_reserved(self):
        net, m0 = parse_net('place p\ntrans src_p\n')
        with self.assertRaises(PetriValueError) as cm:
            liveness_basic(net, m0, 'src_p', 2)
        assert cm.exception.kind == ErrorKind.RESERVED_NAME

    def test_unknown(self):
        net, m0 = nets.glycolysis()
        with self.assertRaises(PetriLookupError) as cm:
            liveness_basic(net, m0, 'tx', 2)
        assert cm.exception.kind == ErrorKind.UNKNOWN_NODE


class TestInvariants(unittest.TestCase):

    def test_cycle(self):
        net, m0 = parse_net(nets.CYCLE)
        r = t_invariants(net, m0, 2)
        assert len(r) == 1
        assert r[0].transitions == (('t1', 1), ('t2', 1))
        assert r[0].start == m0
        assert r[0].firings == (FiringSet({'t1'}), FiringSet({'t2'}))

    def test_cycle_restores(self):
        net, m0 = parse_net(nets.CYCLE)
        for i in t_invariants(net, m0, 4):
            assert replay(net, i.start, i.firings).final_marking == i.start
        assert (('t1', 2), ('t2', 2)) in [i.transitions for i in t_invariants(net, m0, 4)]

    def test_acyclic(self):
        net, m0 = parse_net(nets.MOVE)
        assert t_invariants(net, m0, 3) == []

    def test_horizon_zero(self):
        net, m0 = parse_net(nets.CYCLE)
        assert t_invariants(net, m0, 0) == []

    def test_p_move(self):
        net, m0 = parse_net(nets.MOVE)
        assert p_invariants(net, m0, 2) == [PInvariant(('p1', 'p2'), 1)]

    def test_p_cycle(self):
        net, m0 = parse_net(nets.CYCLE)
        assert p_invariants(net, m0, 3, max_subset_size=1) == []
        assert p_invariants(net, m0, 3) == [PInvariant(('p1', 'p2'), 1)]

    def test_p_glycolysis(self):
        net, m0 = nets.glycolysis()
        r = p_invariants(net, m0, 3)
        assert ('f16bp', ) not in [i.places for i in r]

    def test_p_horizon_zero(self):
        net, m0 = parse_net(nets.MOVE)
        assert [i.places for i in p_invariants(net, m0, 0)] == [('p1', ), ('p2', ), ('p1', 'p2')]

    def test_p_recheck(self):
        net, m0 = nets.feedback()
        r = p_invariants(net, m0, 3)
        sequences = enumerate_sequences(net, m0, 3, SemanticsMode.INTERLEAVED)
        for i in r:
            for s in sequences:
                assert len({sum(m[p] for p in i.places) for m in s.markings}) == 1

    def test_subset_limit(self):
        net, m0 = nets.glycolysis()
        with self.assertRaises(PetriValueError) as cm:
            p_invariants(net, m0, 3, max_subsets=5)
        assert cm.exception.kind == ErrorKind.SUBSET_LIMIT


class TestCaseStudy(unittest.TestCase):
    '''
    The glycolysis section against the same section where
    all of dhap can be removed, over 15 steps.

    The values were fixed by a first complete run. The sequences
    of the removal net are millions, so they are only streamed.
    '''
    K = 15

    @classmethod
    def collected(cls, net_m0):
        net, m0 = net_m0
        c = PlaceCollector('bpg13', rate_step=cls.K)
        count = collect(iter_sequences(net, m0, cls.K, SemanticsMode.MAXIMAL), [c])
        return count, c.series(), c.rate()

    @classmethod
    def setUpClass(cls):
        cls.normal = cls.collected(nets.glycolysis())
        cls.removal = cls.collected(nets.dhap_removal())

    def test_counts(self):
        assert self.normal[0] == 2
        assert self.removal[0] == 6377292

    def test_final_mean(self):
        assert self.normal[1].per_step[-1].mean == 25
        assert self.removal[1].per_step[-1].mean == 17
        assert self.normal[1].sequences == 2

    def test_lower_rate(self):
        assert self.normal[2].mean_rate == Fraction(25, 15)
        assert self.removal[2].mean_rate == Fraction(17, 15)
        assert self.normal[2].mean_rate > self.removal[2].mean_rate
        assert len(self.removal[2].rate_per_sequence) == 6377292

    def test_spread(self):
        normal = self.normal[1].per_step[-1]
        removal = self.removal[1].per_step[-1]
        assert (normal.min, normal.max) == (24, 26)
        assert (removal.min, removal.max) == (0, 26)
        assert removal.max == normal.max
        assert min(i.min for i in self.removal[1].per_step) == 0
        assert len(removal.distinct) == 14
        assert 'bpg13,15,17.000000,0,26,14' in stats_csv([self.removal[1]]).splitlines()

    def test_streamed_equals_listed(self):
        # Same aggregation from a list and from the generator
        net, m0 = nets.dhap_removal()
        listed = maximal((net, m0), 4)
        assert place_stats(listed, 'bpg13') == place_stats(iter_sequences(net, m0, 4, SemanticsMode.MAXIMAL), 'bpg13')
        assert rate(listed, 'bpg13', 4) == rate(iter(listed), 'bpg13', 4)

    def test_standard_mode(self):
        net, m0 = nets.dhap_removal()
        r = enumerate_sequences(net, m0, 4, SemanticsMode.MAXIMAL, ResetMode.STANDARD)
        assert r
        assert all(s.markings[0] == m0 for s in r)
