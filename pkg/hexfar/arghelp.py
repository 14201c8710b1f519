# -----------------------------------------------------------------------------
# es7s/hexfar [Microdisk lattice far-field solver]
# (C) 2023 es7s
# -----------------------------------------------------------------------------
from __future__ import annotations

import re
from argparse import Action, ArgumentParser, ArgumentTypeError, HelpFormatter, SUPPRESS
from typing import Iterable, List, NoReturn, Optional, Tuple

from pytermor import Span, Seqs, Spans

from .common import ArgumentError
from .settings import Command

Example = Tuple[str, str]


class SolverHelpFormatter(HelpFormatter):
    """
    Help layout of the solver: bold upper-case section titles without the
    trailing colon, one argument per short option and a closing section of
    captioned command line examples.
    """
    STEP = 2

    def __init__(self, prog: str):
        super().__init__(prog, indent_increment=self.STEP, max_help_position=30)

    @staticmethod
    def title(heading: str) -> str:
        return Spans.BOLD(heading.upper())

    def start_section(self, heading: Optional[str]):
        super().start_section(self.title(heading) if heading else heading)

    def add_usage(self, usage: Optional[str], actions: Iterable[Action], groups: Iterable,
                  prefix: Optional[str] = None):
        pad = ' ' * self.STEP
        self.add_text(self.title('usage'))
        if usage:
            usage = pad.join(usage.splitlines(keepends=True))
        super().add_usage(usage, actions, groups, prefix=pad)

    def add_examples(self, examples: List[Example]):
        lines = []
        for caption, command in examples:
            lines += [caption, ' ' * 2 * self.STEP + command, '']
        self.start_section('examples' if len(examples) > 1 else 'example')
        self.add_text('\n'.join(lines))
        self.end_section()

    def _format_action_invocation(self, action: Action) -> str:
        if not action.option_strings or action.nargs == 0:
            return super()._format_action_invocation(action)

        # the metavar is shown once, after the long option
        args = self._format_args(action, self._get_default_metavar_for_optional(action))
        labels = action.option_strings
        return ', '.join(
            f'{o} {args}' if o.startswith('--') or len(labels) == 1 else o
            for o in labels
        )

    def _format_text(self, text: str) -> str:
        return super()._format_text(text).rstrip('\n') + '\n'

    def _fill_text(self, text: str, width: int, indent: str) -> str:
        return '\n'.join(indent + line for line in text.split('\n'))


class SolverArgumentParser(ArgumentParser):
    HEADER_COLON = re.compile(r'(\033\[[0-9;]*m)?:$', flags=re.MULTILINE)

    def __init__(self, usage: List[str], epilog: List[str], examples: List[Example], **kwargs):
        super().__init__(usage='\n'.join(usage), epilog='\n'.join(epilog), **kwargs)
        self.examples = examples

    def format_help(self) -> str:
        fmt = self._get_formatter()
        fmt.add_usage(self.usage, self._actions, self._mutually_exclusive_groups)
        fmt.add_text(self.description)
        for group in self._action_groups:
            fmt.start_section(group.title)
            fmt.add_text(group.description)
            fmt.add_arguments(group._group_actions)
            fmt.end_section()
        fmt.add_text(self.epilog)
        if self.examples and isinstance(fmt, SolverHelpFormatter):
            fmt.add_examples(self.examples)
        return self.HEADER_COLON.sub(r'\1', fmt.format_help())

    def error(self, message: str) -> NoReturn:
        raise ArgumentError(message)


def float_list(value: str) -> List[float]:
    try:
        result = [float(v) for v in value.split(',') if v.strip()]
    except ValueError:
        raise ArgumentTypeError(f'expected comma-separated numbers, got {value!r}')
    if not result:
        raise ArgumentTypeError('expected at least one number')
    return result


def boolean(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ArgumentTypeError(f'expected true or false, got {value!r}')


class AppArgumentParser(SolverArgumentParser):
    def __init__(self):
        fmt_b = Spans.BOLD
        fmt_u = Spans.UNDERLINED
        fmt_default = Span(Seqs.YELLOW)
        prog = fmt_u('%(prog)s')

        super().__init__(
            description='Microdisk lattice far-field solver',
            usage=[
                '%(prog)s [<options>] {' + ','.join(c.value for c in Command) + '}',
                '%(prog)s --version',
                '%(prog)s --help',
            ],
            epilog=[
                'All lengths in config files are in units of the zero-phonon line wavelength, all angles are '
                'in degrees. Without ' + fmt_b('--config') + ' the bundled optimized device is used.',
                '',
                'Every command writes its data files into the ' + fmt_b('--out') + ' directory: CSV for curves '
                'and grids, JSON for scalar reports. Each JSON file carries the hash of the effective config.',
                '',
                'Exit status is 0 on success, 2 on argument or config errors and 3 on numeric failures.',
                '',
                '(c) 2023 es7s',
            ],
            examples=[
                ('Simulate the bundled device and collect with NA 0.5, 0.7 and 0.9',
                 f"{prog} --na {fmt_u('0.5,0.7,0.9')} simulate"),
                ('Sweep the lattice constant with 4 threads and refine the maximum',
                 f"{prog} --config {fmt_u('sweep_a.json')} --threads 4 --refine sweep"),
                ('Monte Carlo study with a fixed seed',
                 f"{prog} --config {fmt_u('robustness.json')} --seed {fmt_u('7')} robustness"),
                ('List the 3rd hexagonal trace for a lattice constant of 0.52',
                 f"{prog} --trace 3 --lattice-constant {fmt_u('0.52')} trace-info"),
            ],
            add_help=False,
            formatter_class=SolverHelpFormatter,
            prog='hexfar'
        )

        command_group = self.add_argument_group('command')
        command_group.add_argument('command', metavar='<command>', nargs='?', choices=[c.value for c in Command], help='one of: ' + ', '.join(c.value for c in Command))
        command_group.add_argument('-v', '--version', action='store_true', default=False, help='show app version and exit')
        command_group.add_argument('-h', '--help', action='help', default=SUPPRESS, help='show this help message and exit')

        input_group = self.add_argument_group('input options')
        input_group.add_argument('-c', '--config', metavar='<path>', default=None, help='run config (JSON) ' + fmt_default('[default: bundled optimized.json]'))
        input_group.add_argument('-r', '--reference', metavar='<path>', default=None, help='reference far-field file for the scale factor fit')
        input_group.add_argument('-n', '--na', metavar='<list>', type=float_list, default=None, help='comma-separated numerical apertures, override the config')
        input_group.add_argument('-z', '--include-z', metavar='<bool>', type=boolean, default=None, help='keep the out-of-plane current component, overrides the config')
        input_group.add_argument('-s', '--seed', metavar='<num>', type=int, default=None, help='random seed of the robustness study, overrides the config')
        input_group.add_argument('-a', '--lattice-constant', metavar='<a>', type=float, default=None, help='lattice constant, overrides the config')
        input_group.add_argument('-t', '--trace', metavar='<num>', type=int, default=3, help='hexagonal trace index for trace-info ' + fmt_default('[default: %(default)s]'))
        input_group.add_argument('-R', '--refine', action='store_true', default=False, help='refine the sweep maximum by golden-section search')

        generic_group = self.add_argument_group('generic options')
        generic_group.add_argument('-o', '--out', metavar='<dir>', default='out', help='output directory ' + fmt_default('[default: %(default)s]'))
        generic_group.add_argument('-j', '--threads', metavar='<num>', type=int, default=1, help='worker threads; 0 means one per CPU ' + fmt_default('[default: %(default)s]'))
        generic_group.add_argument('-D', '--debug', action='count', default=0, help='enable debug mode; can be used from 1 to 3 times, each level increases verbosity (-D|DD|DDD)')
        generic_group.add_argument('--error-json', action='store_true', default=False, help='on failure also print a JSON error object to stdout')
