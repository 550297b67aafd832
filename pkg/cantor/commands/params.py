from cantor.argparse import alpha_option, family_options, output_option
from cantor.commands import family_from_options, write_report
from cantor.lib.rational_family import annulus_radii, case_of, degree_audit

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

help = 'Print the parameters of a rational family member'
kind = 'family'
usage = ['[options] --rho <0|1> --degrees <d1,...,dn> --tau <tau>']
description = """
Instantiate the family member for rho, the degrees and tau under the
standard parameter schedule and print the moduli a1 < ... < a(n-1), the
case (a, b, c or d) with the images of the disks around 0 and infinity,
the numerator and denominator degrees, and the trap and annulus radii
for the margin --alpha.

The radii are printed even when they fail to increase; "chain_violation"
then names the first pair out of order."""

args = []
options = family_options() + alpha_option() + output_option()


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    params = family_from_options(parser, options)
    radii = annulus_radii(params, options.alpha, check=False)
    report = params.to_json()
    report.update(case_of(params))
    report.update(
        {
            'degree': degree_audit(params).to_json(),
            'radii': radii.to_json(),
            'chain_violation': radii.first_violation(),
        }
    )
    write_report(options, [report])
