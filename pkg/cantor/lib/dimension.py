"""Moran equations and the box-counting oracle.

The conformal dimension of a Cantor circle with degrees ``d1..dn`` is ``1 + a``
where ``a`` is the positive root of ``sum(d ** -a) = 1``. The same kind of
equation, ``sum(m * c ** s) = 1``, gives the similarity dimension of a
self-similar system with contraction ratios ``c`` repeated ``m`` times, which
is how the Hausdorff dimension bracket of the rational family is computed.

"""

import math

import numpy as np

from cantor.exception import ValidationException
from cantor.lib.base import Immutable
from cantor.lib.combinatorics import check_degrees
from cantor.lib.parallel import ordered_map
from cantor.trace import Traced

# Tolerance on both the bracket width and the Moran residual.
TOLERANCE = 1e-12

METHODS = ('MoranExact', 'FalconerBracket', 'BoxCount')


class DegenerateSystem(ValidationException):
    pass


class InvalidFactors(ValidationException):
    pass


class EmptyMask(ValidationException):
    pass


class InsufficientScales(ValidationException):
    pass


class MoranSolution(Immutable):
    """The root of a Moran equation.

    :attr:`residual` is the value of the defining sum minus 1 at
    :attr:`exponent`, and :attr:`bracket` the final ``(lo, hi)`` pair with
    ``f(lo) > 0 > f(hi)`` the bisection stopped on.

    """

    def __init__(self, exponent, residual, iterations, bracket):
        self.exponent = exponent
        self.residual = residual
        self.iterations = iterations
        self.bracket = bracket

    def _key(self):
        return (self.exponent, self.residual, self.iterations)

    def to_json(self):
        return {
            'exponent': self.exponent,
            'residual': self.residual,
            'iterations': self.iterations,
        }

    def __repr__(self):
        return 'MoranSolution(%r, residual=%.3g)' % (self.exponent, self.residual)


class DimensionBounds(Immutable):
    """A bracket ``[lower, upper]`` on a dimension and how it was obtained."""

    def __init__(self, lower, upper, method, **details):
        if method not in METHODS:
            raise ValueError('Unknown method %r' % method)
        if not 0 < lower <= upper:
            raise ValueError('Bad bracket [%r, %r]' % (lower, upper))
        self.lower = lower
        self.upper = upper
        self.method = method
        self.details = details

    def _key(self):
        return (self.lower, self.upper, self.method)

    @property
    def width(self):
        return self.upper - self.lower

    def __contains__(self, value):
        return self.lower <= value <= self.upper

    def to_json(self):
        d = {'lower': self.lower, 'upper': self.upper, 'method': self.method}
        d.update(self.details)
        return d

    def __repr__(self):
        return '%s[%r, %r]' % (self.method, self.lower, self.upper)


def bisect(f, lo, hi, max_iter, tolerance=TOLERANCE):
    """Find the root of a decreasing function bracketed by ``f(lo) > 0 > f(hi)``.

    Bisection continues until the bracket is at most ``tolerance`` wide and the
    residual at its midpoint is at most ``tolerance``, or until the bracket
    cannot be split any further in floating point.

    """
    flo, fhi = f(lo), f(hi)
    assert flo > 0 > fhi, 'values do not bracket a root'
    iterations = 0
    while iterations < max_iter:
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if hi - lo <= tolerance and abs(fmid) <= tolerance:
            return MoranSolution(mid, fmid, iterations, (lo, hi))
        if mid <= lo or mid >= hi:
            break
        iterations += 1
        if fmid > 0:
            lo = mid
        elif fmid < 0:
            hi = mid
        else:
            return MoranSolution(mid, 0.0, iterations, (lo, hi))
    mid = 0.5 * (lo + hi)
    return MoranSolution(mid, f(mid), iterations, (lo, hi))


def moran_sum(degrees, exponent):
    """Return ``sum(d ** -exponent)``."""
    return math.fsum(d ** -exponent for d in degrees)


def alpha_root(degrees):
    """Solve ``sum(d ** -a) = 1`` for ``a`` in ``(0, 1)``.

    The sum decreases strictly from ``n`` at 0 to the reciprocal sum at 1, which
    is below 1 for every valid degree vector, so the bracket ``(0, 1)`` always
    holds the unique root.

    """
    degrees = check_degrees(degrees)
    return bisect(lambda a: moran_sum(degrees, a) - 1, 0.0, 1.0, max_iter=64)


def conformal_dimension(degrees):
    return 1 + alpha_root(degrees).exponent


def _check_factors(factors):
    checked = []
    for factor in factors:
        try:
            ratio, multiplicity = factor
        except (TypeError, ValueError):
            raise InvalidFactors('Expected (ratio, multiplicity), got %r' % (factor,))
        ratio = float(ratio)
        if not 0 < ratio < 1:
            raise InvalidFactors('Ratio %r is not in (0, 1)' % ratio)
        if isinstance(multiplicity, bool) or not isinstance(multiplicity, int):
            raise InvalidFactors('Multiplicity %r is not an integer' % (multiplicity,))
        if multiplicity < 1:
            raise InvalidFactors('Multiplicity %d is not positive' % multiplicity)
        checked.append((ratio, multiplicity))
    if not checked:
        raise InvalidFactors('No factors given')
    if sum(m for _, m in checked) < 2:
        raise DegenerateSystem('A single contraction has no positive Moran root')
    return checked


def solve_similarity_dimension(factors):
    """Solve ``sum(m * c ** s) = 1`` for ``s > 0``.

    ``factors`` is a list of ``(c, m)`` pairs. The upper end of the bracket is
    doubled until the sum drops below 1.

    """
    factors = _check_factors(factors)

    def f(s):
        return math.fsum(m * c ** s for c, m in factors) - 1

    hi = 1.0
    while f(hi) >= 0:
        hi *= 2
    return bisect(f, 0.0, hi, max_iter=256)


def _box_count(mask, size):
    rows = np.arange(0, mask.shape[0], size)
    cols = np.arange(0, mask.shape[1], size)
    boxes = np.add.reduceat(np.add.reduceat(mask, rows, axis=0), cols, axis=1)
    return int(np.count_nonzero(boxes))


def default_box_scales(shape):
    """Box sizes ``2 ** k`` pixels, skipping the two finest octaves.

    The largest box is 32 pixels or 1/32 of the smaller image side, whichever
    is larger, and never more than half the side.

    """
    octaves = int(math.floor(math.log2(min(shape))))
    top = min(max(5, octaves - 5), octaves - 1)
    return [2 ** k for k in range(2, top + 1)]


def check_scales(scales, shape):
    scales = sorted(set(int(s) for s in scales))
    if len(scales) < 4:
        raise InsufficientScales(
            'At least 4 box sizes are needed, got %d' % len(scales)
        )
    if scales[0] < 1 or scales[-1] > min(shape):
        raise InsufficientScales(
            'Box sizes must lie in [1, %d], got %d..%d'
            % (min(shape), scales[0], scales[-1])
        )
    if scales[-1] < 4 * scales[0]:
        raise InsufficientScales(
            'Box sizes %d..%d span less than two octaves' % (scales[0], scales[-1])
        )
    return scales


def box_counting_dimension(mask, pixel_scale=1.0, scales=None, threads=1):
    """Estimate the box-counting dimension of a boolean raster.

    The slope of ``log N`` against ``log(1 / size)`` is fitted by ordinary least
    squares, and the bracket is the slope plus or minus its standard error.

    """
    mask = np.asarray(mask, dtype=bool)
    if mask.ndim != 2 or not mask.any():
        raise EmptyMask('The mask has no pixels set')
    if scales is None:
        scales = default_box_scales(mask.shape)
    scales = check_scales(scales, mask.shape)
    data = mask.astype(np.int32)
    with Traced('Box counting', shape=mask.shape, scales=scales):
        counts = ordered_map(lambda s: _box_count(data, s), scales, threads)
    x = np.log(1.0 / (np.array(scales, dtype=float) * pixel_scale))
    y = np.log(np.array(counts, dtype=float))
    coeffs, cov = np.polyfit(x, y, 1, cov=True)
    slope = float(coeffs[0])
    stderr = float(math.sqrt(max(cov[0][0], 0.0)))
    lower = max(slope - stderr, np.finfo(float).tiny)
    return DimensionBounds(
        lower,
        max(slope + stderr, lower),
        'BoxCount',
        slope=slope,
        stderr=stderr,
        scales=scales,
        counts=counts,
    )
