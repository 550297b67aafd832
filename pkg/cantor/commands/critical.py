import cmath

from cantor.argparse import family_options, output_option
from cantor.commands import family_from_options, write_report
from cantor.lib.rational_family import critical_groups, critical_points, critical_values

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

help = 'Print the critical points of a rational family member'
kind = 'family'
usage = ['[options] --rho <0|1> --degrees <d1,...,dn> --tau <tau>']
description = """
Locate every finite nonzero critical point of the family member and
print one JSON line per critical circle: the index i of the nearest
modulus ai, and the critical points near |z| = ai with their critical
values, ordered by argument. Complex numbers are printed as [re, im]
pairs. There are d(i) + d(i+1) critical points near ai."""

args = []
options = family_options() + output_option()


def _pair(z):
    if not cmath.isfinite(z):
        return None
    return [z.real, z.imag]


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    params = family_from_options(parser, options)
    points = critical_points(params)
    values = critical_values(params, points)
    groups = critical_groups(params, points)
    rows = []
    for i, a in enumerate(params.a, 1):
        members = [k for k, g in enumerate(groups) if g == i]
        rows.append(
            {
                'group': i,
                'a': a,
                'points': [_pair(points[k]) for k in members],
                'values': [_pair(values[k]) for k in members],
            }
        )
    write_report(options, rows)
