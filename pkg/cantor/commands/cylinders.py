import math

from cantor.argparse import (
    degrees_option,
    kind_option,
    opt,
    output_option,
    partition_option,
)
from cantor.commands import ifs_from_options, write_report
from cantor.lib.dimension import alpha_root
from cantor.lib.standard_cantor import OutOfRange, cylinders

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

help = 'Summarize the depth-k cylinders of a standard Cantor circle'
kind = 'standard'
usage = ['[options] --degrees <d1,...,dn> --depth <k>']
description = """
Print the number of depth-k cylinder intervals in log-radius, their
shortest and longest length, and the sum of length^a over all of them,
where a solves the Moran equation of the degrees. That sum equals 1 at
every depth.

The cylinder count grows as n^k, so the depth is capped at 8."""

MAX_DEPTH = 8

args = []
options = (
    kind_option()
    + degrees_option()
    + partition_option()
    + [
        opt(
            '-D',
            '--depth',
            type='int',
            default=3,
            short='Refine the cylinders DEPTH times',
        )
    ]
    + output_option()
)


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    if not 0 <= options.depth <= MAX_DEPTH:
        raise OutOfRange(
            'Depth must lie in [0, %d], got %d' % (MAX_DEPTH, options.depth)
        )
    ifs = ifs_from_options(parser, options)
    alpha = alpha_root(ifs.degrees).exponent
    lengths = [hi - lo for lo, hi in cylinders(ifs, options.depth)]
    write_report(
        options,
        [
            {
                'degrees': list(ifs.degrees),
                'depth': options.depth,
                'count': len(lengths),
                'min_length': float(min(lengths)),
                'max_length': float(max(lengths)),
                'alpha': alpha,
                'moran_sum': math.fsum(float(x) ** alpha for x in lengths),
            }
        ],
    )
