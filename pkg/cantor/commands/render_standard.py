from cantor.argparse import (
    degrees_option,
    get_threads,
    kind_option,
    opt,
    output_option,
    partition_option,
    size_option,
    threads_option,
    window_option,
)
from cantor.commands import ifs_from_options, write_image
from cantor.lib.raster import check_window, mask_to_gray
from cantor.lib.standard_cantor import render_standard

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

name = 'render-standard'
help = 'Render a standard Cantor circle as a PGM image'
kind = 'standard'
usage = ['[options] --degrees <d1,...,dn>']
description = """
Rasterize the standard Cantor circle of a combination over the window
[-1, 1] x [-1, 1] (or the one given with --window) and write it as a
binary PGM image: attractor pixels black (0) on white (255).

A pixel is set when the log-radius interval covered by the pixel meets
the depth-k approximation of the attractor. With --supersample the image
shows the fraction of 2x2 sub-pixels that are set as grey levels; the
set used for box counting is the plain rendering."""

args = []
options = (
    kind_option()
    + degrees_option()
    + partition_option()
    + size_option()
    + [
        opt(
            '-D',
            '--depth',
            type='int',
            config='cantor.depth',
            short='Follow orbits for DEPTH steps',
        ),
        opt(
            '--supersample',
            action='store_true',
            short='Shade pixels by 2x2 sub-pixel coverage',
        ),
    ]
    + window_option()
    + output_option('the image')
    + threads_option()
)


def func(parser, options, args):
    if args:
        parser.error('incorrect number of arguments')
    ifs = ifs_from_options(parser, options)
    window = (-1.0, 1.0, -1.0, 1.0)
    if options.window is not None:
        if len(options.window) != 4:
            parser.error('the window needs four numbers')
        window = check_window(options.window)
    width, height = options.size
    mask, coverage = render_standard(
        ifs,
        width,
        height,
        options.depth,
        window=window,
        supersample=options.supersample,
        threads=get_threads(options),
    )
    write_image(options, mask_to_gray(mask, coverage))
