from cantor import utils
from cantor.argparse import output_option
from cantor.commands import write_report
from cantor.lib.combinatorics import check_degrees
from cantor.lib.dimension import alpha_root

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

help = 'Print the conformal dimension of a Cantor circle'
kind = 'dim'
usage = ['[options] <d1,...,dn>']
description = """
Solve the Moran equation d1^-a + ... + dn^-a = 1 for a in (0, 1) and
print a together with the conformal dimension 1 + a of every Cantor
circle Julia set with these degrees. The residual is the value of the
left hand side minus 1 at the reported root."""

args = []
options = output_option()


def func(parser, options, args):
    if len(args) != 1:
        parser.error('incorrect number of arguments')
    try:
        degrees = utils.parse_int_list(args[0])
    except ValueError as e:
        parser.error(str(e))
    degrees = check_degrees(degrees)
    root = alpha_root(degrees)
    write_report(
        options,
        [
            {
                'degrees': list(degrees),
                'alpha': root.exponent,
                'conformal_dim': 1 + root.exponent,
                'residual': root.residual,
                'iterations': root.iterations,
            }
        ],
    )
