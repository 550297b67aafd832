from cantor.argparse import degrees_option, kind_option, output_option, partition_option
from cantor.commands import ifs_from_options, write_report

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

help = 'Print the iterated function system of a standard Cantor circle'
kind = 'standard'
usage = ['[options] --degrees <d1,...,dn>']
description = """
Print the power maps generating the standard Cantor circle of a
combination. Map i sends the annulus with log-radii [bi-, bi+] onto
1/e <= |z| <= 1 as z -> e^c * z^(s*di), where the orientation s is
(-1)^i for kinds I and III and (-1)^(i-1) for kind II. The "map" field
gives the map with the exponent c exact."""

args = []
options = kind_option() + degrees_option() + partition_option() + output_option()


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    write_report(options, [ifs_from_options(parser, options).to_json()])
