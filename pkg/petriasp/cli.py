"""
petriasp
Command line interface.

    petriasp simulate NET --steps K [--semantics set|max|interleaved]
    petriasp emit-asp NET --steps K --ntok N [--level ...]
    petriasp analyze NET --property ...
    petriasp stats NET --place P [--place P ...]
    petriasp crossval NET --solver-output FILE

Exit codes: 0 success, 1 invalid input, 2 a limit was exceeded.

The default limits can be set with the PNET_LIMITS environment
variable, a json object like {"max_sequences": 1000}.
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

import argparse
from enum import Enum
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Mapping, NamedTuple, Optional, Tuple

import typedload
from typedload.exceptions import TypedloadException

from . import analysis
from .answersets import parse_answer_sets
from .asp import AspVariant, Dialect, ExtensionLevel, emit, expand_shorthand, fact_set, required_level, suggest_ntok
from .dsl import parse_net
from .engine import Limits, ResetMode, SemanticsMode, Simulator, cross_validate
from .exceptions import ErrorKind, LimitExceeded, PetriException, PetriValueError
from .net import Marking, PetriNet
from .report import OutputFormat, stats_csv, stats_data, stats_text, to_json, trace_csv, trace_data, trace_text


__all__ = [
    'Command',
    'Property',
    'RunConfig',
    'main',
]


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2


class Command(Enum):
    SIMULATE = 'simulate'
    EMIT_ASP = 'emit-asp'
    ANALYZE = 'analyze'
    STATS = 'stats'
    CROSSVAL = 'crossval'


class Property(Enum):
    REACHABLE = 'reachable'
    BOUNDED = 'bounded'
    DEADLOCKS = 'deadlocks'
    LIVENESS = 'liveness'
    T_INVARIANTS = 't-invariants'
    P_INVARIANTS = 'p-invariants'
    WAYPOINTS = 'waypoints'


class RunConfig(NamedTuple):
    """
    Everything a run needs, loaded from the parsed command line.

    Options that a subcommand does not have keep their default.
    """
    command: Command
    net: str
    steps: int = 5
    semantics: SemanticsMode = SemanticsMode.SET
    reset_mode: ResetMode = ResetMode.CONTENTION
    limit_sequences: Optional[int] = None
    limit_states: Optional[int] = None
    format: OutputFormat = OutputFormat.TEXT
    out: Optional[str] = None
    dump: bool = False
    verbose: int = 0
    quiet: bool = False

    # emit-asp
    level: str = 'auto'
    ntok: Optional[int] = None
    dialect: Dialect = Dialect.LEGACY
    expand_shorthand: bool = False
    compare: Optional[str] = None

    # analyze
    property: Optional[Property] = None
    target: List[str] = []
    bound: Optional[int] = None
    transition: Optional[str] = None
    max_subset_size: int = 3
    predicate: List[str] = []
    depletion_recovery: List[str] = []

    # stats
    place: List[str] = []

    # crossval
    solver_output: Optional[str] = None
    plain: bool = False


def _common() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('net', help='Net description file (.pnet)')
    parser.add_argument('--steps', type=int, default=5, help='Horizon k, firing steps are 0..k (default 5)')
    parser.add_argument('--semantics', choices=[i.value for i in SemanticsMode], default=SemanticsMode.SET.value)
    parser.add_argument('--reset-mode', choices=[i.value for i in ResetMode], default=ResetMode.CONTENTION.value)
    parser.add_argument('--limit-sequences', type=int, help='Stop after this many sequences')
    parser.add_argument('--limit-states', type=int, help='Stop after expanding this many markings')
    parser.add_argument('--format', choices=[i.value for i in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument('--out', help='Write the output to this file instead of stdout')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More logging, can be repeated')
    parser.add_argument('-q', '--quiet', action='store_true', help='Only log errors')
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog='petriasp',
        description='Exhaustive simulation of Petri nets with reset, inhibitor and read arcs',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser(Command.SIMULATE.value, parents=[common], help='Enumerate all the execution sequences')
    p.add_argument('--dump', action='store_true', help='Write the sequences, not only their number')

    p = sub.add_parser(Command.EMIT_ASP.value, parents=[common], help='Write the ASP encoding of the net')
    p.add_argument('--ntok', type=int, required=True, help='Largest token count in the num/1 domain')
    p.add_argument('--level', choices=[i.value for i in ExtensionLevel] + ['auto'], default='auto')
    p.add_argument('--dialect', choices=[i.value for i in Dialect], default=Dialect.LEGACY.value)
    p.add_argument('--expand-shorthand', action='store_true', help='Write intervals as one fact per value')
    p.add_argument('--compare', help='Compare the facts with this listing, pooled shorthand allowed')

    p = sub.add_parser(Command.ANALYZE.value, parents=[common], help='Check a property within the horizon')
    p.add_argument('--property', choices=[i.value for i in Property], required=True)
    p.add_argument('--target', action='append', default=[], help='place=count, for reachable')
    p.add_argument('--bound', type=int, help='Token bound, for bounded')
    p.add_argument('--transition', help='Transition, for liveness')
    p.add_argument('--max-subset-size', type=int, default=3, help='Largest place set, for p-invariants')
    p.add_argument('--predicate', action='append', default=[], help='Waypoint: place OP value[@step] [then ...]')
    p.add_argument('--depletion-recovery', action='append', default=[], help='Place that empties and then recovers')
    p.add_argument('--dump', action='store_true', help='Write the matching sequences, for waypoints')

    p = sub.add_parser(Command.STATS.value, parents=[common], help='Per step statistics of places')
    p.add_argument('--place', action='append', default=[], required=True, help='Place to aggregate, can be repeated')

    p = sub.add_parser(Command.CROSSVAL.value, parents=[common], help='Compare with answer sets of a solver')
    p.add_argument('--solver-output', required=True, help='Saved output of the solver')
    p.add_argument('--plain', action='store_true', help='One answer set per line, without "Answer:" headers')
    return parser


def _env_limits(environ: Mapping[str, str]) -> Limits:
    '''
    Default limits from PNET_LIMITS
    '''
    raw = environ.get('PNET_LIMITS')
    if not raw:
        return Limits()
    try:
        return typedload.load(json.loads(raw), Limits, failonextra=True)
    except (ValueError, TypedloadException) as e:
        raise PetriValueError('Invalid PNET_LIMITS: %s' % e, kind=ErrorKind.BAD_PARAMETER, value=raw)


def limits(config: RunConfig, environ: Mapping[str, str]) -> Limits:
    """
    The limits from the environment, overridden by the command line.
    """
    default = _env_limits(environ)
    r = Limits(
        config.limit_sequences if config.limit_sequences is not None else default.max_sequences,
        config.limit_states if config.limit_states is not None else default.max_states,
    )
    for name, value in r._asdict().items():
        if value is not None and value < 1:
            raise PetriValueError('%s must be positive, got %d' % (name, value), kind=ErrorKind.BAD_PARAMETER, value=value)
    return r


def _read(path: str) -> str:
    with open(path, 'rt', encoding='utf-8') as f:
        return f.read()


def _write(config: RunConfig, text: str) -> None:
    if config.out:
        with open(config.out, 'wt', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _loadnet(config: RunConfig) -> Tuple[PetriNet, Marking]:
    net, m0 = parse_net(_read(config.net))
    logger.info('%s: %d places, %d transitions', config.net, len(net.places), len(net.transitions))
    return net, m0


def _simulator(config: RunConfig, environ: Mapping[str, str]) -> Simulator:
    sim = Simulator(semantics=config.semantics, reset_mode=config.reset_mode)
    sim.limits = limits(config, environ)
    return sim


def _checksteps(config: RunConfig) -> None:
    if config.steps < 0:
        raise PetriValueError('--steps must be at least 0', kind=ErrorKind.BAD_PARAMETER, value=config.steps)


def cmd_simulate(config: RunConfig, environ: Mapping[str, str]) -> int:
    """
    Enumerates the sequences and writes how many they are, or
    all of them with --dump.

    The csv format always contains the sequences.
    """
    _checksteps(config)
    net, m0 = _loadnet(config)
    sequences = _simulator(config, environ).enumerate(net, m0, config.steps)
    if config.format is OutputFormat.JSON:
        data = trace_data(sequences, config.semantics, config.reset_mode, config.steps)
        if not config.dump:
            del data['sequences']
        _write(config, to_json(data))
    elif config.format is OutputFormat.CSV:
        _write(config, trace_csv(sequences))
    else:
        _write(config, trace_text(sequences, config.dump))
    return EXIT_OK


def cmd_emit_asp(config: RunConfig, environ: Mapping[str, str]) -> int:
    """
    Writes the program. With --compare, the facts of the program
    are compared with a listing and the exit code tells if they
    are the same.
    """
    _checksteps(config)
    net, m0 = _loadnet(config)
    level = required_level(net) if config.level == 'auto' else ExtensionLevel(config.level)
    ntok = config.ntok if config.ntok is not None else 0
    suggested = suggest_ntok(net, m0, config.steps)
    if ntok < suggested:
        logger.warning('ntok %d is below the suggested %d, answer sets may be missing', ntok, suggested)
    program = emit(net, m0, AspVariant(level, config.semantics, config.reset_mode, ntok, config.steps, config.dialect))

    if config.compare:
        emitted = fact_set(program.text)
        listed = fact_set(_read(config.compare))
        missing = sorted(listed - emitted)
        extra = sorted(emitted - listed)
        lines = ['%d facts emitted, %d listed' % (len(emitted), len(listed))]
        lines.extend('missing %s' % i for i in missing)
        lines.extend('extra %s' % i for i in extra)
        _write(config, '\n'.join(lines) + '\n')
        return EXIT_OK if not missing and not extra else EXIT_INPUT

    text = expand_shorthand(program.text) if config.expand_shorthand else program.text
    if config.format is OutputFormat.JSON:
        _write(config, to_json({
            'level': level,
            'text': text,
            'atom_schema': program.atom_schema,
            'provenance': [
                {'rule': rule, 'label': rule.label, 'line': line}
                for rule, line in program.provenance
            ],
        }))
    else:
        _write(config, text)
    return EXIT_OK


def _target(items: List[str]) -> Dict[str, int]:
    r = {}
    for i in items:
        place, sep, count = i.partition('=')
        if not sep or not count.strip().isdigit():
            raise PetriValueError('Invalid target %r, expected place=count' % i, kind=ErrorKind.INVALID_PREDICATE, value=i)
        r[place.strip()] = int(count)
    return r


def _require(value: Any, flag: str, prop: Property) -> Any:
    if value is None or value == {}:
        raise PetriValueError('%s needs %s' % (prop.value, flag), kind=ErrorKind.BAD_PARAMETER)
    return value


def _reachable(config: RunConfig, net: PetriNet, m0: Marking, lim: Limits) -> Tuple[Any, List[Any]]:
    target = _require(_target(config.target), '--target', Property.REACHABLE)
    r = analysis.reachable(net, m0, target, config.steps, config.semantics, config.reset_mode, lim)
    return {'reachable': r.reachable, 'step': r.step, 'states': r.states}, [r.witness] if r.witness else []


def _bounded(config: RunConfig, net: PetriNet, m0: Marking, lim: Limits) -> Tuple[Any, List[Any]]:
    bound = _require(config.bound, '--bound', Property.BOUNDED)
    violations = analysis.bounded(net, m0, bound, config.steps, config.semantics, config.reset_mode, lim)
    return {'bounded': not violations, 'bound': bound, 'violations': len(violations)}, violations


def _deadlocks(config: RunConfig, net: PetriNet, m0: Marking, lim: Limits) -> Tuple[Any, List[Any]]:
    found = analysis.deadlocks(net, m0, config.steps, config.semantics, config.reset_mode, lim)
    return {'deadlocks': len(found)}, found


def _liveness(config: RunConfig, net: PetriNet, m0: Marking, lim: Limits) -> Tuple[Any, List[Any]]:
    t = _require(config.transition, '--transition', Property.LIVENESS)
    return {'transition': t, 'fires': analysis.liveness_basic(net, m0, t, config.steps, config.reset_mode, lim)}, []


def _tinvariants(config: RunConfig, net: PetriNet, m0: Marking, lim: Limits) -> Tuple[Any, List[Any]]:
    found = analysis.t_invariants(net, m0, config.steps, config.reset_mode, lim)
    return {'invariants': [dict(i.transitions) for i in found]}, found


def _pinvariants(config: RunConfig, net: PetriNet, m0: Marking, lim: Limits) -> Tuple[Any, List[Any]]:
    found = analysis.p_invariants(net, m0, config.steps, config.max_subset_size, reset_mode=config.reset_mode, limits=lim)
    return {'invariants': [list(i.places) for i in found]}, found


def _waypoints(config: RunConfig, net: PetriNet, m0: Marking, lim: Limits) -> Tuple[Any, List[Any]]:
    predicates = [analysis.parse_predicate(i) for i in config.predicate]
    predicates.extend(analysis.depletion_recovery(i) for i in config.depletion_recovery)
    sim = Simulator(semantics=config.semantics, reset_mode=config.reset_mode)
    sim.limits = lim
    sequences = sim.enumerate(net, m0, config.steps)
    kept = analysis.filter_waypoints(sequences, predicates)
    return {'sequences': len(sequences), 'matching': len(kept)}, kept if config.dump else []


# Property -> function computing (result, witnesses)
PROPERTIES = {
    Property.REACHABLE: _reachable,
    Property.BOUNDED: _bounded,
    Property.DEADLOCKS: _deadlocks,
    Property.LIVENESS: _liveness,
    Property.T_INVARIANTS: _tinvariants,
    Property.P_INVARIANTS: _pinvariants,
    Property.WAYPOINTS: _waypoints,
}  # type: Dict[Property, Callable[[RunConfig, PetriNet, Marking, Limits], Tuple[Any, List[Any]]]]


def cmd_analyze(config: RunConfig, environ: Mapping[str, str]) -> int:
    """
    Runs one property check. Results only hold within the horizon.
    """
    _checksteps(config)
    if config.property is None:
        raise PetriValueError('No property selected', kind=ErrorKind.BAD_PARAMETER)
    net, m0 = _loadnet(config)
    result, witnesses = PROPERTIES[config.property](config, net, m0, limits(config, environ))
    report = {
        'property': config.property,
        'parameters': {
            'net': config.net,
            'semantics': config.semantics,
            'reset_mode': config.reset_mode,
        },
        'horizon': config.steps,
        'result': result,
        'witnesses': witnesses,
    }
    if config.format is OutputFormat.TEXT:
        lines = ['%s within %d steps' % (config.property.value, config.steps)]
        lines.extend('  %s: %s' % (k, result[k]) for k in sorted(result))
        _write(config, '\n'.join(lines) + '\n')
    else:
        _write(config, to_json(report))
    return EXIT_OK


def cmd_stats(config: RunConfig, environ: Mapping[str, str]) -> int:
    """
    Per step mean, min, max and distinct values of the places, and
    their rate at the last step.

    The sequences are streamed, never kept.
    """
    _checksteps(config)
    net, m0 = _loadnet(config)
    rate_step = config.steps if config.steps >= 1 else None
    collectors = [analysis.PlaceCollector(p, rate_step=rate_step) for p in config.place]
    count = analysis.collect(_simulator(config, environ).iter_sequences(net, m0, config.steps), collectors)
    series = [c.series() for c in collectors]
    rates = [c.rate() for c in collectors] if rate_step is not None else []
    if config.format is OutputFormat.CSV:
        _write(config, stats_csv(series))
    elif config.format is OutputFormat.JSON:
        _write(config, to_json(stats_data(
            series, rates,
            semantics=config.semantics,
            reset_mode=config.reset_mode,
            k=config.steps,
            sequences=count,
        )))
    else:
        _write(config, stats_text(series, rates, '%d sequences, %s semantics, k=%d' % (
            count, config.semantics.value, config.steps)))
    return EXIT_OK


def cmd_crossval(config: RunConfig, environ: Mapping[str, str]) -> int:
    """
    Compares the native enumeration with saved solver output.
    Succeeds only when they are the same sets of sequences.
    """
    _checksteps(config)
    net, m0 = _loadnet(config)
    native = _simulator(config, environ).enumerate(net, m0, config.steps)
    external = parse_answer_sets(_read(config.solver_output or ''), net, config.steps, config.plain)
    r = cross_validate(native, external)
    if config.format is OutputFormat.TEXT:
        lines = [
            'match' if r.match else 'mismatch',
            'native sequences: %d' % r.native_count,
            'solver sequences: %d' % r.external_count,
            'only native: %d' % len(r.unmatched_native),
            'only solver: %d' % len(r.unmatched_external),
        ]
        _write(config, '\n'.join(lines) + '\n')
    else:
        _write(config, to_json(r))
    return EXIT_OK if r.match else EXIT_INPUT


COMMANDS = {
    Command.SIMULATE: cmd_simulate,
    Command.EMIT_ASP: cmd_emit_asp,
    Command.ANALYZE: cmd_analyze,
    Command.STATS: cmd_stats,
    Command.CROSSVAL: cmd_crossval,
}  # type: Dict[Command, Callable[[RunConfig, Mapping[str, str]], int]]


def _loglevel(config: RunConfig) -> int:
    if config.quiet:
        return logging.ERROR
    return {0: logging.WARNING, 1: logging.INFO}.get(config.verbose, logging.DEBUG)


def main(argv: Optional[List[str]] = None, environ: Optional[Mapping[str, str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors, here 2 means a limit was hit
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    # The namespace becomes a typed NamedTuple
    config = typedload.load(args, RunConfig)
    logging.basicConfig(level=_loglevel(config), format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger('petriasp').setLevel(_loglevel(config))
    environ = os.environ if environ is None else environ

    try:
        return COMMANDS[config.command](config, environ)
    except LimitExceeded as e:
        print('Limit exceeded: %s (%d sequences produced)' % (e.args[0], e.partial), file=sys.stderr)
        return EXIT_LIMIT
    except PetriException as e:
        print(str(e), file=sys.stderr)
        return EXIT_LIMIT if e.kind is ErrorKind.SUBSET_LIMIT else EXIT_INPUT
    except OSError as e:
        print(str(e), file=sys.stderr)
        return EXIT_INPUT
