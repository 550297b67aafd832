from cantor.argparse import alpha_option, family_options, opt, output_option
from cantor.commands import family_from_options, write_report
from cantor.lib.rational_family import annulus_radii, verify_structure

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

help = 'Check that a family member has a Cantor circle Julia set'
kind = 'family'
usage = ['[options] --rho <0|1> --degrees <d1,...,dn> --tau <tau>']
description = """
Run three numerical checks on the family member and print the report as
JSON:

critical_values: the orbit of every critical value enters the trap
|z| < R0 or |z| > Rinf within --trap-steps iterations.

circles: both boundary circles of every annulus group map to the side
their orientation predicts, every sampled orbit enters the trap, and the
map winds +/-di times around 0 along each circle.

chain: the trap and annulus radii increase strictly.

A failed check is reported, not raised: the command exits 0 whatever
the verdict, and "passed" holds the overall result."""

args = []
options = (
    family_options()
    + alpha_option()
    + [
        opt(
            '--samples',
            type='int',
            config='cantor.samples',
            short='Sample each circle at SAMPLES points',
        ),
        opt(
            '--trap-steps',
            type='int',
            config='cantor.trapsteps',
            metavar='STEPS',
            short='Allow orbits STEPS iterations to reach the trap',
        ),
    ]
    + output_option()
)


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    params = family_from_options(parser, options)
    radii = annulus_radii(params, options.alpha, check=False)
    report = verify_structure(
        params, radii, samples=options.samples, trap_steps=options.trap_steps
    )
    write_report(options, [report.to_json()])
