"""
petriasp
Rendering results as json, csv or text.

Typed results are turned into json compatible data with a
typedload Dumper, extended with handlers for markings, firing
sets and fractions.
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

import csv
from enum import Enum
from fractions import Fraction
import io
import json
from typing import Any, Dict, Iterable, List, Optional, Sequence

from typedload.datadumper import Dumper

from .analysis import PlaceSeries, RateResult
from .engine import ExecutionSequence, FiringSet
from .net import Marking


__all__ = [
    'OutputFormat',
    'dumper',
    'decimal',
    'to_json',
    'trace_data',
    'trace_csv',
    'trace_text',
    'stats_data',
    'stats_csv',
    'stats_text',
]


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'
    TEXT = 'text'


def decimal(value: Fraction, digits: int = 6) -> str:
    '''
    Fixed point rendering of a fraction, rounded half to even.
    '''
    return '%.*f' % (digits, round(value, digits))


def dumper() -> Dumper:
    """
    A Dumper that also knows markings, firing sets and fractions.

    Default values of NamedTuple fields are kept, so every report
    has the same keys.
    """
    d = Dumper(hidedefault=False)
    # Before the generic handler of sets and lists
    position = d.index([])
    d.handlers.insert(position, (lambda v: isinstance(v, FiringSet), lambda l, v: v.members()))
    d.handlers.insert(position, (lambda v: isinstance(v, Marking), lambda l, v: {p: v[p] for p in sorted(v)}))
    d.handlers.insert(0, (lambda v: isinstance(v, Fraction), lambda l, v: str(v)))
    return d


def to_json(value: Any) -> str:
    return json.dumps(dumper().dump(value), indent=2, sort_keys=True) + '\n'


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def trace_data(sequences: Sequence[ExecutionSequence], semantics: Enum, reset_mode: Enum, k: int) -> Dict[str, Any]:
    """
    The trace schema:

    {semantics, reset_mode, k, count, sequences: [{firings, markings}]}

    firings has k+1 lists of transitions, markings has the
    markings of all the known time steps, k+2 for simulated
    sequences.
    """
    return {
        'semantics': semantics.value,
        'reset_mode': reset_mode.value,
        'k': k,
        'count': len(sequences),
        'sequences': [
            {
                'firings': list(s.firings),
                'markings': list(s.all_markings()),
            } for s in sequences
        ],
    }


def trace_csv(sequences: Sequence[ExecutionSequence]) -> str:
    '''
    One row per sequence, step and place: sequence,step,place,count
    '''
    rows = []
    for n, s in enumerate(sequences):
        for step, marking in enumerate(s.all_markings()):
            rows.extend((n, step, p, marking[p]) for p in sorted(marking))
    return _csv(('sequence', 'step', 'place', 'count'), rows)


def _marking(marking: Marking) -> str:
    return ' '.join('%s=%d' % (p, marking[p]) for p in sorted(marking))


def trace_text(sequences: Sequence[ExecutionSequence], dump: bool = False) -> str:
    count = len(sequences)
    r = ['%d sequence%s' % (count, '' if count == 1 else 's')]
    if dump:
        for n, s in enumerate(sequences):
            r.append('Sequence %d' % n)
            for step in s.steps:
                r.append('  %3d  %s  fires {%s}' % (step.time, _marking(step.marking_before), ', '.join(step.firing.members())))
            if s.final_marking is not None:
                r.append('  %3d  %s' % (len(s.steps), _marking(s.final_marking)))
    return '\n'.join(r) + '\n'


def stats_data(series: Iterable[PlaceSeries], rates: Iterable[RateResult], **parameters: Any) -> Dict[str, Any]:
    """
    The stats schema: the parameters, then for every place the
    rows of the csv with the list of distinct values added, then
    the rates.
    """
    r = dict(parameters)  # type: Dict[str, Any]
    r['places'] = [
        {
            'place': s.place,
            'sequences': s.sequences,
            'steps': [
                {
                    'step': i.step,
                    'mean': i.mean,
                    'mean_decimal': decimal(i.mean),
                    'min': i.min,
                    'max': i.max,
                    'distinct_count': len(i.distinct),
                    'distinct_values': list(i.distinct),
                } for i in s.per_step
            ],
        } for s in series
    ]
    r['rates'] = [
        {
            'place': i.place,
            'horizon': i.horizon,
            'mean_rate': i.mean_rate,
            'mean_rate_decimal': decimal(i.mean_rate),
            'rate_per_sequence': list(i.rate_per_sequence),
        } for i in rates
    ]
    return r


def stats_csv(series: Iterable[PlaceSeries]) -> str:
    '''
    place,step,mean,min,max,distinct_count
    '''
    rows = []  # type: List[Sequence[Any]]
    for s in series:
        rows.extend((s.place, i.step, decimal(i.mean), i.min, i.max, len(i.distinct)) for i in s.per_step)
    return _csv(('place', 'step', 'mean', 'min', 'max', 'distinct_count'), rows)


def stats_text(series: Iterable[PlaceSeries], rates: Iterable[RateResult], title: Optional[str] = None) -> str:
    r = [title] if title else []
    for s in series:
        r.append('%s over %d sequences' % (s.place, s.sequences))
        r.append('  step        mean   min   max  distinct')
        for i in s.per_step:
            r.append('  %4d  %10s  %4d  %4d  %s' % (i.step, decimal(i.mean, 3), i.min, i.max, ','.join(str(j) for j in i.distinct)))
    for i in rates:
        r.append('rate of %s at step %d: %s (%s)' % (i.place, i.horizon, i.mean_rate, decimal(i.mean_rate)))
    return '\n'.join(r) + '\n'
