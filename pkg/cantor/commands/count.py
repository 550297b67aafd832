import io

from cantor.argparse import get_threads, opt, output_option, threads_option
from cantor.commands import write_report
from cantor.lib.combinatorics import count_breakdown, count_range
from cantor.out import out

__copyright__ = """
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

help = 'Count the Cantor circle hyperbolic components of a degree'
kind = 'count'
usage = ['[options] <d>', '[options] --range <lo>..<hi>']
description = """
Print N(d), the number of Cantor circle hyperbolic components among
rational maps of degree d, or N(d) for every d in a range.

N(d) counts the degree vectors of total d with reciprocal sum below 1:
every even-length vector once, every odd-length vector once, and every
odd-length palindrome once more. With --breakdown the three terms and
the per-kind class counts are printed as well.

The csv format prints one "d,N" line per degree without a header."""

args = []
options = (
    [
        opt(
            '-r',
            '--range',
            type='range',
            metavar='LO..HI',
            short='Count every degree from LO to HI',
        ),
        opt(
            '-b',
            '--breakdown',
            action='store_true',
            short='Print the terms of the count',
        ),
        opt(
            '-f',
            '--format',
            type='choice',
            choices=['json', 'csv'],
            default='json',
            short='Print json lines or csv',
        ),
    ]
    + output_option()
    + threads_option()
)


def func(parser, options, args):
    if options.range:
        if args:
            parser.error('incorrect number of arguments')
        lo, hi = options.range
    elif len(args) == 1:
        try:
            lo = hi = int(args[0])
        except ValueError:
            parser.error('degree "%s" is not an integer' % args[0])
    else:
        parser.error('incorrect number of arguments')
    if lo < 2:
        parser.error('degree must be at least 2, got %d' % lo)

    if options.breakdown:
        rows = [count_breakdown(d).to_json() for d in range(lo, hi + 1)]
    else:
        counts = count_range(lo, hi, threads=get_threads(options))
        rows = [{'d': d, 'N': n} for d, n in counts]

    if options.format == 'json':
        write_report(options, rows)
        return

    fields = ['d', 'N'] + (['even', 'odd', 'palindromes'] if options.breakdown else [])
    text = ''.join('%s\n' % ','.join(str(row[k]) for k in fields) for row in rows)
    if options.output:
        with io.open(options.output, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        out.stdout_bytes(text.encode('utf-8'))
