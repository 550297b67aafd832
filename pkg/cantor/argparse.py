"""Command line argument parsing for cantor subcommands.

This module provides a layer on top of the standard library's :mod:`optparse` to
facilitate generation of both interactive help and asciidoc documentation (such as man
pages). It also registers the option types shared by the subcommands: degree
vectors, number lists, ranges, grids and image sizes.

"""

import copy
import optparse
import textwrap

from cantor import utils
from cantor.config import config

__copyright__ = """
Copyright (C) 2008, Karl Hasselström <kha@treskal.com>
Copyright (C) 2026, The cantor-circles authors

This program is free software; you can redistribute it and/or modify
it under the terms of the GNU General Public License version 2 as
published by the Free Software Foundation.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program; if not, see http://www.gnu.org/licenses/.
"""


def _splitlist(lst, split_on):
    """Split list using provided predicate."""
    current = []
    for e in lst:
        if split_on(e):
            yield current
            current = []
        else:
            current.append(e)
    yield current


def _paragraphs(s):
    """Split a string s into a list of paragraphs, each of which is a list of lines."""
    lines = [line.rstrip() for line in textwrap.dedent(s).strip().splitlines()]
    return [p for p in _splitlist(lines, lambda line: not line.strip()) if p]


def _checker(parse, what):
    def check(option, opt_str, value):
        try:
            return parse(value)
        except (ValueError, ZeroDivisionError) as e:
            raise optparse.OptionValueError(
                'option %s: invalid %s: %s' % (opt_str, what, e)
            )

    return check


def _parse_size(s):
    """``N`` for a square image or ``WxH``."""
    if 'x' in s.lower():
        return utils.parse_grid(s)
    side = int(s)
    return side, side


def _parse_scales(s):
    if s == 'auto':
        return None
    return utils.parse_int_list(s)


class CantorOption(optparse.Option):
    TYPES = optparse.Option.TYPES + (
        'intlist',
        'numlist',
        'range',
        'grid',
        'size',
        'scales',
    )
    TYPE_CHECKER = copy.copy(optparse.Option.TYPE_CHECKER)
    TYPE_CHECKER['intlist'] = _checker(utils.parse_int_list, 'integer list')
    TYPE_CHECKER['numlist'] = _checker(utils.parse_number_list, 'number list')
    TYPE_CHECKER['range'] = _checker(utils.parse_range, 'range')
    TYPE_CHECKER['grid'] = _checker(utils.parse_grid, 'grid')
    TYPE_CHECKER['size'] = _checker(_parse_size, 'size')
    TYPE_CHECKER['scales'] = _checker(_parse_scales, 'box sizes')


class opt:
    """Represents a command-line flag.

    A ``config`` keyword names the configuration key the default value is read
    from, at the time the option parser is built.

    """

    def __init__(self, *pargs, **kwargs):
        self.pargs = pargs
        self.kwargs = kwargs

    def get_option(self):
        kwargs = dict(self.kwargs)
        kwargs['help'] = kwargs['short']
        key = kwargs.pop('config', None)
        if key:
            getter = {'int': config.getint, 'float': config.getfloat}.get(
                kwargs.get('type'), config.get
            )
            kwargs['default'] = getter(key)
        for k in ['short', 'long']:
            kwargs.pop(k, None)
        return CantorOption(*self.pargs, **kwargs)

    def metavar(self):
        o = self.get_option()
        if not o.takes_value():
            return None
        if o.metavar:
            return o.metavar
        for flag in self.pargs:
            if flag.startswith('--'):
                return utils.strip_prefix('--', flag).upper()
        raise Exception('Cannot determine metavar')

    def write_asciidoc(self, f):
        for flag in self.pargs:
            f.write(flag)
            m = self.metavar()
            if m:
                f.write(' ' + m)
            f.write('::\n')
        paras = _paragraphs(self.kwargs.get('long', self.kwargs['short'] + '.'))
        for line in paras[0]:
            f.write(' ' * 8 + line + '\n')
        for para in paras[1:]:
            f.write('+\n')
            for line in para:
                f.write(line + '\n')

    @property
    def flags(self):
        return self.pargs


def _cmd_name(cmd_mod):
    return getattr(cmd_mod, 'name', cmd_mod.__name__.split('.')[-1])


def make_option_parser(cmd):
    pad = ' ' * len('Usage: ')
    return optparse.OptionParser(
        prog='cantor %s' % _cmd_name(cmd),
        usage=(
            ('\n' + pad).join('%%prog %s' % u for u in cmd.usage) + '\n\n' + cmd.help
        ),
        option_class=CantorOption,
        option_list=[o.get_option() for o in cmd.options],
    )


def _write_underlined(s, u, f):
    f.write(s + '\n')
    f.write(u * len(s) + '\n')


def write_asciidoc(cmd, f):
    _write_underlined('cantor-%s(1)' % _cmd_name(cmd), '=', f)
    f.write('\n')
    _write_underlined('NAME', '-', f)
    f.write('cantor-%s - %s\n\n' % (_cmd_name(cmd), cmd.help))
    _write_underlined('SYNOPSIS', '-', f)
    f.write('[verse]\n')
    for u in cmd.usage:
        f.write("'cantor %s' %s\n" % (_cmd_name(cmd), u))
    f.write('\n')
    _write_underlined('DESCRIPTION', '-', f)
    f.write('\n%s\n\n' % cmd.description.strip('\n'))
    if cmd.options:
        _write_underlined('OPTIONS', '-', f)
        for o in cmd.options:
            o.write_asciidoc(f)
            f.write('\n')
    _write_underlined('CANTOR', '-', f)
    f.write('Part of the cantor suite - see linkman:cantor[1]\n')


def degrees_option():
    return [
        opt(
            '-d',
            '--degrees',
            type='intlist',
            metavar='D1,...,DN',
            short='Use the degree vector D1,...,DN',
            long="""
            The covering degrees of the annuli, innermost first, as a comma
            separated list. The reciprocals must sum to less than 1.""",
        )
    ]


def kind_option():
    return [
        opt(
            '-k',
            '--kind',
            type='choice',
            choices=['I', 'II', 'III'],
            short='Use combination kind I, II or III',
            long="""
            The kind of the combination. Kind I needs an even number of
            degrees, kinds II and III an odd number. When omitted, kind I is
            used for an even number of degrees and kind II otherwise.""",
        )
    ]


def partition_option():
    return [
        opt(
            '-p',
            '--partition',
            type='numlist',
            metavar='B1-,B1+,...,BN+',
            short='Use the given log-radius partition',
            long="""
            The 2n interval endpoints in log-radius, from -1 to 0, as decimals
            or fractions such as -3/4. Interval i must have width 1/di. When
            omitted, all gaps between the intervals are equal.""",
        )
    ]


def family_options():
    """``--rho``, ``--degrees`` and ``--tau`` of a rational family member."""
    return [
        opt(
            '-r',
            '--rho',
            type='choice',
            choices=['0', '1'],
            default='1',
            short='Select the family with rho 0 or 1',
        )
    ] + degrees_option() + [
        opt(
            '-t',
            '--tau',
            type='float',
            config='cantor.tau',
            short='Use the schedule parameter TAU in (0, 1)',
            long="""
            The schedule parameter. Smaller values push the critical circles
            apart and the Julia set closer to its limiting Cantor circle.
            Defaults to cantor.tau.""",
        )
    ]


def alpha_option():
    return [
        opt(
            '-a',
            '--alpha',
            type='float',
            config='cantor.alpha',
            short='Use the annulus margin ALPHA in (0, 1/2)',
            long="""
            Margin exponent of the annuli around the critical circles:
            they span tau^ALPHA*ai to tau^-ALPHA*ai. Defaults to
            cantor.alpha.""",
        )
    ]


def output_option(what='the report'):
    return [
        opt(
            '-o',
            '--output',
            metavar='FILE',
            short='Write %s to FILE' % what,
            long='Write %s to FILE instead of standard output.' % what,
        )
    ]


def size_option():
    return [
        opt(
            '-s',
            '--size',
            type='size',
            config='cantor.size',
            metavar='N|WxH',
            short='Render an image of N by N or W by H pixels',
        )
    ]


def window_option():
    return [
        opt(
            '-w',
            '--window',
            type='numlist',
            metavar='XMIN,XMAX,YMIN,YMAX',
            short='Render the given window of the plane',
        )
    ]


def threads_option():
    return [
        opt(
            '-j',
            '--threads',
            type='int',
            short='Use up to THREADS worker threads',
            long="""
            Number of worker threads, 0 for one per CPU. Defaults to
            cantor.threads, which CANTOR_THREADS overrides. The output does
            not depend on the thread count.""",
        )
    ]


def get_threads(options):
    if getattr(options, 'threads', None) is not None:
        config.set('cantor.threads', str(options.threads))
    return config.getthreads()
