"""Standard Cantor circles and their iterated function systems.

A partition ``-1 = b1- < b1+ < b2- < ... < bn+ = 0`` with widths
``bi+ - bi- = 1/di`` splits the log-radius interval ``[-1, 0]``. The power map
``z -> z**(s*di) / e**(s*anchor*di)`` sends the annulus with log-radii
``[bi-, bi+]`` onto the annulus ``1/e <= |z| <= 1``; in log-radius it is the
expanding affine map ``x -> s*di*(x - anchor)``. The standard Cantor circle is
the set of points whose log-radius never leaves the domains of these maps.

"""

import math
from fractions import Fraction

import numpy as np

from cantor.exception import ValidationException
from cantor.lib.base import Immutable
from cantor.lib.combinatorics import check_degrees, reciprocal_sum
from cantor.lib.parallel import chunks, ordered_map
from cantor.lib.raster import check_dims, pixel_grid
from cantor.trace import Traced

# Slack when locating a point on a domain endpoint.
EPSILON = 1e-12

IN_ATTRACTOR = 'InAttractor'
ESCAPED = 'Escaped'


class PartitionMismatch(ValidationException):
    pass


class OutOfRange(ValidationException):
    pass


class Partition(Immutable):
    """The domain endpoints ``b_minus[i] < b_plus[i]`` in log-radius.

    Endpoints are kept as exact fractions when they were given as such, and
    :attr:`endpoints` holds their floating point values in increasing order.

    """

    def __init__(self, b_minus, b_plus):
        self.b_minus = tuple(b_minus)
        self.b_plus = tuple(b_plus)
        self.endpoints = np.array(
            [float(b) for pair in zip(self.b_minus, self.b_plus) for b in pair]
        )

    def _key(self):
        return (self.b_minus, self.b_plus)

    @property
    def n(self):
        return len(self.b_minus)

    @property
    def widths(self):
        return tuple(p - m for m, p in zip(self.b_minus, self.b_plus))

    @property
    def gaps(self):
        return tuple(m - p for p, m in zip(self.b_plus, self.b_minus[1:]))

    def values(self):
        return [b for pair in zip(self.b_minus, self.b_plus) for b in pair]

    def to_json(self):
        return [float(b) for b in self.values()]

    def __repr__(self):
        return 'Partition(%s)' % ', '.join(str(b) for b in self.values())


def make_partition(values, degrees):
    """Build a :class:`Partition` from ``2n`` endpoints and check it against
    ``degrees``."""
    degrees = check_degrees(degrees)
    values = list(values)
    if len(values) != 2 * len(degrees):
        raise PartitionMismatch(
            'Expected %d endpoints for %d degrees, got %d'
            % (2 * len(degrees), len(degrees), len(values))
        )
    partition = Partition(values[0::2], values[1::2])
    if abs(partition.b_minus[0] + 1) > 1e-15 or abs(partition.b_plus[-1]) > 1e-15:
        raise PartitionMismatch('The partition must start at -1 and end at 0')
    for i, (width, d) in enumerate(zip(partition.widths, degrees)):
        if abs(width - Fraction(1, d)) > 1e-15:
            raise PartitionMismatch(
                'Interval %d has width %s, expected 1/%d' % (i + 1, width, d)
            )
    for i, gap in enumerate(partition.gaps):
        if gap <= 0:
            raise PartitionMismatch(
                'Intervals %d and %d are not separated by a gap' % (i + 1, i + 2)
            )
    return partition


def _partition_from_gaps(degrees, gaps):
    b_minus, b_plus = [], []
    b = Fraction(-1)
    for i, d in enumerate(degrees):
        b_minus.append(b)
        b += Fraction(1, d)
        b_plus.append(b)
        if i < len(gaps):
            b += gaps[i]
    return Partition(b_minus, b_plus)


def default_partition(degrees):
    """Return the partition with all ``n - 1`` gaps equal."""
    degrees = check_degrees(degrees)
    gap = (1 - reciprocal_sum(degrees)) / (len(degrees) - 1)
    return _partition_from_gaps(degrees, [gap] * (len(degrees) - 1))


def random_partition(degrees, rng):
    """Return a partition with random positive gaps.

    ``rng`` is a :class:`numpy.random.Generator`. Gaps are drawn as exact
    fractions with denominator 1000 so the partition stays exact.

    """
    degrees = check_degrees(degrees)
    total = 1 - reciprocal_sum(degrees)
    weights = [Fraction(int(w)) for w in rng.integers(1, 1000, size=len(degrees) - 1)]
    scale = sum(weights)
    return _partition_from_gaps(degrees, [total * w / scale for w in weights])


class AnnulusMap(Immutable):
    """One power map ``z -> z**(sign*degree) / e**(sign*anchor*degree)``.

    The anchor is the domain endpoint sent to log-radius 0: ``b+`` for an
    orientation-preserving map and ``b-`` for an orientation-reversing one.

    """

    def __init__(self, sign, degree, domain):
        self.sign = sign
        self.degree = degree
        self.domain = tuple(domain)
        self.anchor = domain[1] if sign > 0 else domain[0]

    def _key(self):
        return (self.sign, self.degree, self.domain)

    @property
    def exponent(self):
        return self.sign * self.degree

    @property
    def coefficient(self):
        return math.exp(-self.sign * float(self.anchor) * self.degree)

    def log_map(self, x):
        """The affine map induced on log-radius."""
        return self.sign * self.degree * (x - float(self.anchor))

    def __call__(self, z):
        return self.coefficient * np.asarray(z, dtype=complex) ** self.exponent

    def describe(self):
        """Render the map as ``z^e/e^c`` with the exponent of ``e`` exact."""
        power = -self.sign * self.anchor * self.degree
        if power == 0:
            return 'z^%d' % self.exponent
        return 'e^(%s)*z^%d' % (power, self.exponent)

    def to_json(self):
        return {
            'sign': self.sign,
            'degree': self.degree,
            'anchor': float(self.anchor),
            'domain': [float(b) for b in self.domain],
            'exponent': self.exponent,
            'coefficient': self.coefficient,
            'map': self.describe(),
        }

    def __repr__(self):
        return 'AnnulusMap(%s)' % self.describe()


def sign_schedule(kind, n):
    """Orientation signs of the maps: ``(-1)**i`` for kinds I and III and
    ``(-1)**(i-1)`` for kind II, with ``i`` counted from 1."""
    shift = 1 if kind == 'II' else 0
    return tuple((-1) ** (i + shift) for i in range(1, n + 1))


class StandardIFS(Immutable):
    def __init__(self, combination, partition, maps):
        self.combination = combination
        self.partition = partition
        self.maps = tuple(maps)

    def _key(self):
        return (self.combination, self.partition)

    @property
    def degrees(self):
        return self.combination.degrees

    def to_json(self):
        d = self.combination.to_json()
        d['partition'] = self.partition.to_json()
        d['maps'] = [m.to_json() for m in self.maps]
        return d


def build_ifs(combination, partition=None):
    if partition is None:
        partition = default_partition(combination.degrees)
    if partition.n != combination.n:
        raise PartitionMismatch(
            'Partition has %d intervals but the combination has %d degrees'
            % (partition.n, combination.n)
        )
    for i, (width, d) in enumerate(zip(partition.widths, combination.degrees)):
        if abs(width - Fraction(1, d)) > 1e-15:
            raise PartitionMismatch(
                'Interval %d has width %s, expected 1/%d' % (i + 1, width, d)
            )
    signs = sign_schedule(combination.kind, combination.n)
    maps = [
        AnnulusMap(sign, d, (m, p))
        for sign, d, m, p in zip(
            signs, combination.degrees, partition.b_minus, partition.b_plus
        )
    ]
    return StandardIFS(combination, partition, maps)


def membership_steps(x, halfwidth, ifs, depth):
    """Vectorized membership of log-radius intervals ``[x - h, x + h]``.

    Returns an integer array: 0 where the interval meets the depth-``depth``
    approximation of the attractor, else the step (counted from 1) at which it
    fell into a gap or out of ``[-1, 0]``.

    Domain endpoints belong to the attractor since every map sends them to -1
    or 0, so an interval containing an endpoint is accepted at once. An
    interval inside a single domain is pushed forward by that map, which
    multiplies its width by the degree.

    """
    x = np.array(x, dtype=float, copy=True).ravel()
    h = np.broadcast_to(np.asarray(halfwidth, dtype=float), x.shape).copy()
    endpoints = ifs.partition.endpoints
    signs = np.array([m.sign for m in ifs.maps], dtype=float)
    degrees = np.array([m.degree for m in ifs.maps], dtype=float)
    anchors = np.array([float(m.anchor) for m in ifs.maps])
    result = np.zeros(x.shape, dtype=np.int32)
    active = np.arange(x.size)
    for step in range(1, depth + 1):
        if not active.size:
            break
        xa, ha = x[active], h[active]
        lo, hi = xa - ha - EPSILON, xa + ha + EPSILON
        idx = np.searchsorted(endpoints, lo, side='left')
        bounded = np.minimum(idx, endpoints.size - 1)
        hit = (idx < endpoints.size) & (endpoints[bounded] <= hi)
        inside = ~hit & (idx % 2 == 1)
        escaped = ~hit & ~inside
        result[active[escaped]] = step
        i = (idx[inside] - 1) // 2
        x[active[inside]] = signs[i] * degrees[i] * (xa[inside] - anchors[i])
        h[active[inside]] = ha[inside] * degrees[i]
        active = active[inside]
    return result


class Membership(Immutable):
    """Verdict of :func:`cantor_membership`.

    ``InAttractor`` carries the depth reached and is a finite-depth
    certificate; ``Escaped`` carries the step at which the orbit left the
    domains.

    """

    def __init__(self, verdict, step):
        self.verdict = verdict
        self.step = step

    def _key(self):
        return (self.verdict, self.step)

    def to_json(self):
        return {'verdict': self.verdict, 'step': self.step}

    def __repr__(self):
        return '%s(%d)' % (self.verdict, self.step)


def cantor_membership(x, ifs, depth):
    if depth < 1:
        raise OutOfRange('Depth must be at least 1, got %d' % depth)
    x = float(x)
    if not -1 - EPSILON <= x <= EPSILON:
        raise OutOfRange('Log-radius %r is not in [-1, 0]' % x)
    step = int(membership_steps([x], 0.0, ifs, depth)[0])
    if step:
        return Membership(ESCAPED, step)
    return Membership(IN_ATTRACTOR, depth)


def cylinders(ifs, depth):
    """Return the depth-``depth`` cylinder intervals of log-radius.

    A cylinder is the set of points following a given sequence of maps for
    ``depth`` steps. Its length is the product of the reciprocal degrees along
    that sequence. Intervals come back sorted, as exact fractions.

    """
    intervals = [(Fraction(-1), Fraction(0))]
    for _ in range(depth):
        refined = []
        for lo, hi in intervals:
            for m in ifs.maps:
                # Pull [lo, hi] back through x -> s*d*(x - anchor).
                a = Fraction(m.anchor) + lo / (m.sign * m.degree)
                b = Fraction(m.anchor) + hi / (m.sign * m.degree)
                refined.append((min(a, b), max(a, b)))
        intervals = refined
    return sorted(intervals)


def render_standard(
    ifs,
    width,
    height,
    depth,
    window=(-1.0, 1.0, -1.0, 1.0),
    supersample=False,
    threads=1,
):
    """Rasterize the standard Cantor circle of ``ifs``.

    Each pixel is tested through the log-radius footprint of its center: the
    interval of log-radii within half a pixel diagonal of the center. Pixels
    whose center lies outside the closed annulus 1/e <= |z| <= 1 stay off. The mask
    holds the center-sampled verdicts. With ``supersample`` a second array
    holds the fraction of 2x2 sub-pixels that are on; otherwise it is the mask
    as floats.

    """
    check_dims(width, height)
    if depth < 1:
        raise OutOfRange('Depth must be at least 1, got %d' % depth)
    xmin, xmax, ymin, ymax = window
    pixel = max((xmax - xmin) / width, (ymax - ymin) / height)

    def sample(z, size):
        r = np.abs(z)
        with np.errstate(divide='ignore'):
            x = np.log(r)
            h = (0.5 * math.sqrt(2) * size) / r
        on = np.zeros(z.shape, dtype=bool)
        # Only centers inside the closed annulus 1/e <= |z| <= 1 can be on.
        ok = np.isfinite(x) & (x >= -1 - EPSILON) & (x <= EPSILON)
        on[ok] = membership_steps(x[ok], h[ok], ifs, depth) == 0
        return on

    def render_rows(block):
        start, stop = block
        z = pixel_grid(window, width, height, rows=(start, stop))
        mask = sample(z, pixel)
        if not supersample:
            return mask, mask.astype(float)
        coverage = np.zeros(z.shape, dtype=float)
        for dx in (-0.25, 0.25):
            for dy in (-0.25, 0.25):
                coverage += sample(z + complex(dx, dy) * pixel, 0.5 * pixel)
        log_r = np.log(np.maximum(np.abs(z), 1e-300))
        coverage[(log_r < -1 - EPSILON) | (log_r > EPSILON)] = 0
        return mask, coverage / 4

    with Traced('Rendering standard Cantor circle', size='%dx%d' % (width, height)):
        blocks = ordered_map(render_rows, chunks(height, 4 * threads), threads)
    mask = np.concatenate([b[0] for b in blocks], axis=0)
    coverage = np.concatenate([b[1] for b in blocks], axis=0)
    return mask, coverage
