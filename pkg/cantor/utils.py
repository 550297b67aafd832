"""Common utility functions"""

import re
from fractions import Fraction

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


def strip_prefix(prefix, string):
    """Return string, without the specified prefix.

    The string must start with the prefix.

    """
    assert string.startswith(prefix)
    return string[len(prefix) :]


def parse_int_list(s):
    """Parse a comma separated list of integers such as ``3,3,4``.

    Raises :class:`ValueError` on empty items or non-integers.

    """
    items = [item.strip() for item in s.split(',')]
    if not items or any(not item for item in items):
        raise ValueError('empty item in list "%s"' % s)
    return tuple(int(item) for item in items)


def parse_number_list(s):
    """Parse a comma separated list of decimals or fractions (``-3/4``)."""
    items = [item.strip() for item in s.split(',')]
    if any(not item for item in items):
        raise ValueError('empty item in list "%s"' % s)
    return tuple(Fraction(item) for item in items)


def parse_range(s):
    """Parse an inclusive integer range ``LO..HI``."""
    m = re.match(r'^\s*(\d+)\s*\.\.\s*(\d+)\s*$', s)
    if not m:
        raise ValueError('bad range "%s", expected LO..HI' % s)
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ValueError('empty range "%s"' % s)
    return lo, hi


def parse_grid(s):
    """Parse a grid size ``RADIALxANGULAR`` such as ``128x512``."""
    m = re.match(r'^\s*(\d+)\s*[xX]\s*(\d+)\s*$', s)
    if not m:
        raise ValueError('bad grid "%s", expected RADIALxANGULAR' % s)
    return int(m.group(1)), int(m.group(2))


CANTOR_SUCCESS = 0
CANTOR_VALIDATION_ERROR = 1  # rejected input, unknown command or bad flags
CANTOR_COMMAND_ERROR = 2  # a well-formed computation failed
CANTOR_BUG_ERROR = 4  # a bug in cantor
