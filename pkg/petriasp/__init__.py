"""
petriasp
========

This library simulates Petri nets with reset, inhibitor and read
arcs by enumerating every execution sequence up to a horizon, and
writes answer set programming encodings of the same nets, so that
the simulation can be checked against a solver.

A net is usually written in a small text format:

    place f16bp
    place g3p
    place bpg13
    trans t3
    trans t6
    arc t3 -> f16bp
    arc g3p -> t6
    arc t6 -> bpg13 weight=2

And then

net, m0 = petriasp.dsl.parse_net(text)
sequences = petriasp.simulate(net, m0, 5, semantics=SemanticsMode.MAXIMAL)

Simple API
==========

petriasp.simulate() and petriasp.encode() are functions to quickly
enumerate sequences and emit programs using the default objects.

They create a new simulator or variant with the given parameters,
and discard it after.

Classes
=======

The Simulator class exposes a number of attributes that can be
customised to tweak its behaviour.

Firing semantics
================

    * set: any admissible subset of the enabled transitions fires.
    * maximal: only sets that can not grow with one more transition.
    * interleaved: at most one transition per step.

Selectors
=========

The firing sets of a marking are chosen by the selectors of a
Simulator. The list items are tuples of two functions.

The first function receives the semantics and returns a boolean,
if it is true the second function is called with the simulator,
the net and the marking, and returns the firing sets.

To add a semantics it is sufficient to write the selector and a
condition that recognises it, and insert them in the list.

The index() function returns the position of a selector, so that
it is possible to replace it or add new ones before it.

Selectors must only return admissible firing sets.

Horizon
=======

Everything is bounded by the horizon k: sequences have firing
steps 0..k, and properties like reachability or boundedness only
hold within those steps.
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


from typing import Any, List, Mapping


__all__ = [
    'analysis',
    'answersets',
    'asp',
    'dsl',
    'engine',
    'exceptions',
    'net',
    'encode',
    'simulate',
]


def simulate(net: Any, m0: Mapping[str, int], k: int, **kwargs) -> List[Any]:
    """
    Quick function to enumerate all the execution sequences.

    The named arguments are attributes of the Simulator.
    """
    from . import engine
    simulator = engine.Simulator(**kwargs)
    return simulator.enumerate(net, m0, k)


def encode(net: Any, m0: Mapping[str, int], **kwargs) -> Any:
    """
    Quick function to emit a program.

    The named arguments are fields of AspVariant.
    """
    from . import asp
    return asp.emit(net, m0, asp.AspVariant(**kwargs))
