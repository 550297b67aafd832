from cantor.argparse import get_threads, opt, output_option, threads_option
from cantor.commands import write_report
from cantor.lib.dimension import box_counting_dimension
from cantor.lib.raster import gray_to_mask, read_pgm

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

help = 'Estimate the box-counting dimension of a PGM image'
kind = 'dim'
usage = ['[options] <image.pgm>']
description = """
Read a binary PGM image, take its dark pixels as the set, and fit the
slope of log N(s) against log(1/s), where N(s) is the number of s by s
pixel boxes meeting the set. The report holds the slope, its standard
error, the band slope +/- stderr and the (size, count) pairs of the fit.

With --scales auto, box sizes run over powers of two from 4 pixels up
to 32 pixels or 1/32 of the shorter side, whichever is larger."""

args = []
options = (
    [
        opt(
            '-S',
            '--scales',
            type='scales',
            default='auto',
            metavar='auto|S1,S2,...',
            short='Use the given box sizes in pixels',
        ),
        opt(
            '--pixel-scale',
            type='float',
            default=1.0,
            metavar='LENGTH',
            short='Side length of one pixel',
        ),
    ]
    + output_option()
    + threads_option()
)


def func(parser, options, args):
    if len(args) != 1:
        parser.error('incorrect number of arguments')
    if not options.pixel_scale > 0:
        parser.error('pixel scale must be positive')
    gray, maxval = read_pgm(args[0])
    mask = gray_to_mask(gray, maxval)
    bounds = box_counting_dimension(
        mask,
        pixel_scale=options.pixel_scale,
        scales=options.scales,
        threads=get_threads(options),
    )
    report = {'image': args[0], 'width': mask.shape[1], 'height': mask.shape[0]}
    report.update(bounds.to_json())
    write_report(options, [report])
