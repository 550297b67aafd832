"""Pixel grids, binary PGM files and escape-time fields."""

import io

import numpy as np

from cantor.exception import ValidationException

MAX_SIDE = 1 << 15


class BadImageDims(ValidationException):
    pass


class BadImage(ValidationException):
    pass


def check_dims(width, height):
    for name, value in [('width', width), ('height', height)]:
        if isinstance(value, bool) or not isinstance(value, int):
            raise BadImageDims('Image %s %r is not an integer' % (name, value))
        if not 1 <= value <= MAX_SIDE:
            raise BadImageDims(
                'Image %s %d is not in [1, %d]' % (name, value, MAX_SIDE)
            )


def check_window(window):
    xmin, xmax, ymin, ymax = window
    if not (xmin < xmax and ymin < ymax):
        raise BadImageDims('Empty window %r' % (tuple(window),))
    return tuple(float(v) for v in window)


def pixel_grid(window, width, height, rows=None):
    """Complex coordinates of pixel centers, row 0 at the top.

    Coordinates are offsets from the window center, so a window symmetric
    about the real axis gives rows that are exact complex conjugates of each
    other.

    """
    xmin, xmax, ymin, ymax = window
    dx = (xmax - xmin) / width
    dy = (ymax - ymin) / height
    cx = 0.5 * (xmin + xmax)
    cy = 0.5 * (ymin + ymax)
    start, stop = rows if rows is not None else (0, height)
    xs = cx + (np.arange(width) - 0.5 * (width - 1)) * dx
    ys = cy + (0.5 * (height - 1) - np.arange(start, stop)) * dy
    return xs[np.newaxis, :] + 1j * ys[:, np.newaxis]


def mask_to_gray(mask, coverage=None):
    """Set pixels are black (0) on white (255)."""
    if coverage is None:
        coverage = np.asarray(mask, dtype=float)
    return np.round(255 * (1 - np.clip(coverage, 0, 1))).astype(np.uint8)


def encode_pgm(gray):
    gray = np.asarray(gray, dtype=np.uint8)
    height, width = gray.shape
    return b'P5\n%d %d\n255\n' % (width, height) + gray.tobytes(order='C')


def write_pgm(path, gray):
    with io.open(path, 'wb') as f:
        f.write(encode_pgm(gray))


def _header_tokens(data):
    """Split the PGM header into its four tokens and return the data offset."""
    tokens = []
    pos = 0
    while len(tokens) < 4:
        if pos >= len(data):
            raise BadImage('Truncated PGM header')
        c = data[pos : pos + 1]
        if c == b'#':
            end = data.find(b'\n', pos)
            pos = len(data) if end < 0 else end + 1
        elif c.isspace():
            pos += 1
        else:
            start = pos
            while pos < len(data) and not data[pos : pos + 1].isspace():
                pos += 1
            tokens.append(data[start:pos])
    # Exactly one whitespace byte separates the header from the raster.
    return tokens, pos + 1


def decode_pgm(data):
    tokens, offset = _header_tokens(data)
    if tokens[0] != b'P5':
        raise BadImage(
            'Not a binary PGM file (magic %r)' % tokens[0].decode('ascii', 'replace')
        )
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise BadImage('Malformed PGM header')
    if not 0 < maxval < 256:
        raise BadImage('Unsupported PGM maxval %d' % maxval)
    check_dims(width, height)
    raster = data[offset : offset + width * height]
    if len(raster) != width * height:
        raise BadImage(
            'PGM raster has %d bytes, expected %d' % (len(raster), width * height)
        )
    gray = np.frombuffer(raster, dtype=np.uint8).reshape(height, width)
    return gray, maxval


def read_pgm(path):
    """Read a binary PGM file and return ``(gray, maxval)``."""
    try:
        with io.open(path, 'rb') as f:
            data = f.read()
    except IOError as e:
        raise BadImage('Cannot read %s: %s' % (path, e.strerror))
    return decode_pgm(data)


def gray_to_mask(gray, maxval=255):
    """Dark pixels (below half of maxval) are set."""
    return np.asarray(gray) < (maxval + 1) / 2


def write_escape_field(f, steps):
    """Write ``row,col,steps`` lines for every pixel that left through a basin.

    ``steps`` holds -1 for orbits that never reached a basin, which are
    skipped. Candidates found by the distance estimate keep their step count.

    """
    rows, cols = np.nonzero(steps >= 0)
    table = np.column_stack([rows, cols, steps[rows, cols]])
    np.savetxt(f, table, fmt='%d', delimiter=',', header='row,col,steps', comments='')
