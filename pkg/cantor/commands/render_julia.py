import io

from cantor.argparse import (
    alpha_option,
    family_options,
    get_threads,
    opt,
    output_option,
    size_option,
    threads_option,
    window_option,
)
from cantor.commands import family_from_options, write_image
from cantor.lib.rational_family import annulus_radii, render_julia
from cantor.lib.raster import check_window, mask_to_gray, write_escape_field

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

name = 'render-julia'
help = 'Render the Julia set of a rational family member'
kind = 'family'
usage = ['[options] --rho <0|1> --degrees <d1,...,dn> --tau <tau>']
description = """
Iterate the family member from the center of every pixel until the
orbit enters the trap |z| < R0 or |z| > Rinf, for at most --max-iter
steps, and estimate the distance of the pixel to the Julia set from the
trap entry point and the expansion collected along the orbit. Pixels
closer than half a pixel diagonal, and pixels whose orbit never enters
the trap, are Julia set candidates and are drawn black (0) on white
(255) in a binary PGM image. With --no-estimate only the pixels whose
orbit never enters the trap are drawn.

The default window is a square centered at 0 that holds the outermost
critical circle with some margin. With --escape-field, the trap entry
step of every pixel whose orbit enters the trap, candidates of the
distance estimate included, is written as "row,col,steps" CSV lines."""

args = []
options = (
    family_options()
    + alpha_option()
    + size_option()
    + [
        opt(
            '-m',
            '--max-iter',
            type='int',
            config='cantor.maxiter',
            short='Iterate every pixel at most MAX_ITER times',
        ),
        opt(
            '-e',
            '--escape-field',
            metavar='FILE',
            short='Write the escape steps as CSV to FILE',
        ),
        opt(
            '--no-estimate',
            dest='estimate',
            action='store_false',
            default=True,
            short='Mark only orbits that never reach the trap',
        ),
    ]
    + window_option()
    + output_option('the image')
    + threads_option()
)


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    params = family_from_options(parser, options)
    radii = annulus_radii(params, options.alpha, check=False)
    window = None
    if options.window is not None:
        if len(options.window) != 4:
            parser.error('the window needs four numbers')
        window = check_window(options.window)
    width, height = options.size
    mask, steps = render_julia(
        params,
        radii,
        width,
        height,
        options.max_iter,
        window=window,
        estimate=options.estimate,
        threads=get_threads(options),
    )
    if options.escape_field:
        with io.open(options.escape_field, 'w', encoding='utf-8') as f:
            write_escape_field(f, steps)
    write_image(options, mask_to_gray(mask))
