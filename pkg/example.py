#!/usr/bin/python3

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


# This is a practical example on how to use the petriasp library.

# A section of glycolysis is simulated with maximal firing, once as
# it is and once with a transition that can remove all of dhap at
# any time. The production of bpg13 is then compared.

# The number of sequences of the second net grows quickly with the
# number of steps, so the default horizon is small.

import argparse
import os.path
from typing import *

import typedload

from petriasp import analysis
from petriasp.dsl import parse_net
from petriasp.engine import ResetMode, SemanticsMode, Simulator
from petriasp.report import decimal


NETS = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'nets')


class CommandLine(NamedTuple):
    steps: int
    place: str
    reset_mode: ResetMode
    limit: Optional[int]


def load(name: str):
    with open(os.path.join(NETS, name + '.pnet'), 'rt') as f:
        return parse_net(f.read())


def report(title: str, sequences: List[Any], args: CommandLine) -> None:
    series = analysis.place_stats(sequences, args.place)
    last = series.per_step[-1]
    print(title)
    print('\tsequences:', len(sequences))
    for i in series.per_step:
        print('\tstep %2d\tmean %s\tmin %d\tmax %d' % (i.step, decimal(i.mean, 3), i.min, i.max))
    if args.steps >= 1:
        r = analysis.rate(sequences, args.place, args.steps)
        print('\trate: %s (%s)' % (r.mean_rate, decimal(r.mean_rate, 3)))
    print('\tfinal mean %s, final max %d' % (decimal(last.mean, 3), last.max))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument('-s', '--steps', help='Horizon of the simulation', type=int, default=8)
    parser.add_argument('-p', '--place', help='Place to observe', default='bpg13')
    parser.add_argument('-r', '--reset-mode', help='How resets compete for tokens',
                        choices=[i.value for i in ResetMode], default=ResetMode.CONTENTION.value)
    parser.add_argument('-l', '--limit', help='Most sequences to enumerate', type=int)

    # The namespace is loaded into a NamedTuple, so the reset mode becomes an Enum
    args = typedload.load(parser.parse_args(), CommandLine)

    simulator = Simulator(semantics=SemanticsMode.MAXIMAL, reset_mode=args.reset_mode, max_sequences=args.limit)
    normal = simulator.enumerate(*load('glycolysis'), args.steps)
    removal = simulator.enumerate(*load('glycolysis_dhap_removal'), args.steps)

    report('glycolysis', normal, args)
    report('glycolysis with dhap removal', removal, args)

    if args.steps >= 1:
        a = analysis.rate(normal, args.place, args.steps).mean_rate
        b = analysis.rate(removal, args.place, args.steps).mean_rate
        print('Removing dhap changes the mean rate of %s by %s' % (args.place, decimal(b - a, 3)))


if __name__ == '__main__':
    main()
