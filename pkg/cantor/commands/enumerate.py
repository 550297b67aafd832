from cantor.argparse import kind_option, opt, output_option
from cantor.commands import write_report
from cantor.lib.combinatorics import canonical_class, enumerate_combinations

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

help = 'List the Cantor circle combinations of a degree'
kind = 'count'
usage = ['[options] <d>']
description = """
Print every combination (kind; d1,...,dn) of total degree d as one JSON
object per line, kind I first, then II, then III, and by increasing n
and degree vector within a kind.

With --classes, combinations of kinds II and III that are reversals of
each other are printed once, as a conjugacy class listing both degree
vectors. The number of lines printed is then N(d)."""

args = []
options = (
    kind_option()
    + [
        opt(
            '-c',
            '--classes',
            action='store_true',
            short='Print conjugacy classes instead of combinations',
        )
    ]
    + output_option()
)


def func(parser, options, args):
    if len(args) != 1:
        parser.error('incorrect number of arguments')
    try:
        d = int(args[0])
    except ValueError:
        parser.error('degree "%s" is not an integer' % args[0])
    if d < 2:
        parser.error('degree must be at least 2, got %d' % d)

    combinations = [
        c
        for c in enumerate_combinations(d)
        if options.kind is None or c.kind == options.kind
    ]
    if options.classes:
        seen = set()
        rows = []
        for c in combinations:
            cls = canonical_class(c)
            if cls not in seen:
                seen.add(cls)
                rows.append(cls.to_json())
    else:
        rows = [c.to_json() for c in combinations]
    write_report(options, rows)
