from cantor.argparse import (
    alpha_option,
    family_options,
    get_threads,
    opt,
    output_option,
    threads_option,
)
from cantor.commands import family_from_options, write_report
from cantor.lib.dimension import conformal_dimension
from cantor.lib.hausdorff_bounds import branch_envelopes, hdim_bracket
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

name = 'hdim-bounds'
help = 'Bracket the Hausdorff dimension of a family Julia set'
kind = 'dim'
usage = ['[options] --rho <0|1> --degrees <d1,...,dn> --tau <tau>']
description = """
Verify the structure of the family member, sample |F'| of the map in
logarithmic coordinates over the annulus of every critical-circle group
on a radial by angular grid, and solve the two Moran equations

    sum(di * (1/Mi)^b) = 1    and    sum(di * (1/mi)^b) = 1

where [mi, Mi] is the padded range of |F'| on group i. The roots bracket
the Hausdorff dimension of the Julia set from below and above.

The envelopes come from finitely many samples, widened by the largest
difference between neighbouring samples. The bracket is a numerical
estimate, not a certified bound, and the report says so with
"rigorous": false."""

args = []
options = (
    family_options()
    + alpha_option()
    + [
        opt(
            '-g',
            '--grid',
            type='grid',
            config='cantor.grid',
            metavar='RADIALxANGULAR',
            short='Sample each annulus on a RADIAL by ANGULAR grid',
        ),
        opt(
            '--samples',
            type='int',
            config='cantor.samples',
            short='Sample each circle at SAMPLES points when verifying',
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
    + threads_option()
)


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    params = family_from_options(parser, options)
    radii = annulus_radii(params, options.alpha)
    report = verify_structure(
        params, radii, samples=options.samples, trap_steps=options.trap_steps
    )
    envelopes = branch_envelopes(
        params, radii, options.grid, report=report, threads=get_threads(options)
    )
    bounds = hdim_bracket(envelopes)
    write_report(
        options,
        [
            {
                'params': params.to_json(),
                'beta_lower': bounds.lower,
                'beta_upper': bounds.upper,
                'width': bounds.width,
                'conformal_dim': conformal_dimension(params.degrees),
                'rigorous': False,
                'residual_lower': bounds.details['residual_lower'],
                'residual_upper': bounds.details['residual_upper'],
                'upper_clamped': bounds.details['upper_clamped'],
                'envelopes': bounds.details['envelopes'],
            }
        ],
    )
