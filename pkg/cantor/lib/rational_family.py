"""The rational maps whose Julia sets are Cantor circles.

For ``rho`` in ``{0, 1}``, degrees ``d1..dn`` and moduli ``0 < a1 < ... < a(n-1)``,
the family member is::

    f(z) = z**(s*d1) * prod((z**ei - ai**ei) ** pi)

with ``s = (-1)**(n - rho)``, ``ei = di + d(i+1)`` and ``pi = (-1)**(n - i - rho)``.
All ``ai`` are positive reals. Near ``|z| = ai`` the map has ``ei`` critical
points; between two consecutive critical circles it behaves like
``z**(sigma_i * di)`` with ``sigma_i = (-1)**(n - rho + i - 1)``.

The disks around 0 and infinity map according to one of four cases:

===  ====  ======  =================  =================
     rho   n       image of D0        image of Dinf
===  ====  ======  =================  =================
a    1     even    Dinf               Dinf
b    1     odd     D0                 Dinf
c    0     odd     Dinf               D0
d    0     even    D0                 D0
===  ====  ======  =================  =================

"""

import cmath
import math

import numpy as np

from cantor.exception import ComputationException, ValidationException
from cantor.lib.base import Immutable
from cantor.lib.combinatorics import check_degrees, format_degrees, reciprocal_sum
from cantor.lib.parallel import chunks, ordered_map
from cantor.lib.raster import check_dims, check_window, pixel_grid
from cantor.lib.standard_cantor import OutOfRange
from cantor.trace import Traced

INFINITY = complex(math.inf, 0.0)

# A factor closer than this to zero counts as a pole.
POLE_EPSILON = 1e-300

# Verdict codes used by the vectorized classifier.
JULIA, INNER, OUTER = 0, 1, 2
VERDICTS = {JULIA: 'JuliaCandidate', INNER: 'InnerBasin', OUTER: 'OuterBasin'}

ROOT_TOLERANCE = 1e-10
ROOT_MAX_SWEEPS = 500

# Log-modulus margin between the Julia hull and the circles that bound it.
HULL_MARGIN = math.log(2)
HULL_TOLERANCE = 1e-12
HULL_MAX_STEPS = 200


class NonPositiveTau(ValidationException):
    pass


class TauOutOfRange(ValidationException):
    pass


class PoleHit(ComputationException):
    pass


class ChainViolation(ComputationException):
    pass


class RootFindingDiverged(ComputationException):
    pass


class FamilyParams(Immutable):
    """A fully instantiated member of the family."""

    def __init__(self, rho, degrees, a, tau):
        if rho not in (0, 1):
            raise OutOfRange('rho must be 0 or 1, got %r' % (rho,))
        degrees = check_degrees(degrees)
        a = tuple(float(x) for x in a)
        if len(a) != len(degrees) - 1:
            raise OutOfRange(
                'Expected %d moduli for %d degrees, got %d'
                % (len(degrees) - 1, len(degrees), len(a))
            )
        if not all(math.isfinite(x) and x > 0 for x in a):
            raise OutOfRange('Moduli must be positive, got %r' % (a,))
        if any(x >= y for x, y in zip(a, a[1:])):
            raise OutOfRange('Moduli must be strictly increasing, got %r' % (a,))
        self.rho = rho
        self.degrees = degrees
        self.a = a
        self.tau = tau

    def _key(self):
        return (self.rho, self.degrees, self.a, self.tau)

    @property
    def n(self):
        return len(self.degrees)

    @property
    def eta(self):
        return reciprocal_sum(self.degrees)

    @property
    def d_max(self):
        return max(self.degrees)

    @property
    def total_degree(self):
        return sum(self.degrees)

    @property
    def sign(self):
        """Exponent sign ``s`` of the leading power of ``z`` near 0."""
        return (-1) ** (self.n - self.rho)

    @property
    def factors(self):
        """``(e, c, p)`` per factor ``(z**e - c) ** p``."""
        d = self.degrees
        return [
            (
                d[i] + d[i + 1],
                self.a[i] ** (d[i] + d[i + 1]),
                (-1) ** (self.n - i - 1 - self.rho),
            )
            for i in range(self.n - 1)
        ]

    def group_sign(self, i):
        """Orientation ``sigma_i`` of ``f`` on the annulus of group ``i`` (from 1)."""
        return (-1) ** (self.n - self.rho + i - 1)

    @property
    def case(self):
        return {(1, 0): 'a', (1, 1): 'b', (0, 1): 'c', (0, 0): 'd'}[
            (self.rho, self.n % 2)
        ]

    @property
    def zero_image(self):
        """Which trap disk D0 maps into: INNER or OUTER."""
        return INNER if self.sign > 0 else OUTER

    @property
    def infinity_image(self):
        return OUTER if self.rho == 1 else INNER

    def to_json(self):
        return {
            'rho': self.rho,
            'degrees': list(self.degrees),
            'tau': self.tau,
            'a': list(self.a),
            'case': self.case,
        }

    def __repr__(self):
        return 'FamilyParams(rho=%d, (%s), tau=%g)' % (
            self.rho,
            format_degrees(self.degrees),
            self.tau,
        )


def case_of(params):
    """Return the case letter with the images of the disks around 0 and infinity."""
    return {
        'case': params.case,
        'zero_image': VERDICTS[params.zero_image],
        'infinity_image': VERDICTS[params.infinity_image],
    }


def check_tau(tau):
    tau = float(tau)
    if not tau > 0 or not math.isfinite(tau):
        raise NonPositiveTau('tau must be a positive number, got %r' % tau)
    if tau >= 1:
        raise TauOutOfRange('tau must be below 1, got %r' % tau)
    return tau


def parameter_schedule(rho, degrees, tau):
    """Return the family member for ``tau`` under the standard schedule.

    With ``rho = 1``: ``u = tau * dmax**-5`` and ``v = tau * dmax**-2``.
    With ``rho = 0``: ``u = tau**(1 + 1/dn + 2(1 - eta)/3)`` and
    ``v = tau**(1/dn + (1 - eta)/3)``. Then ``a(n-1) = v**(1/dn)`` and
    ``ai = u**(1/d(i+1)) * a(i+1)``, computed back to front.

    """
    degrees = check_degrees(degrees)
    tau = check_tau(tau)
    if rho not in (0, 1):
        raise OutOfRange('rho must be 0 or 1, got %r' % (rho,))
    dn = degrees[-1]
    if rho == 1:
        d_max = max(degrees)
        u = tau * d_max ** -5.0
        v = tau * d_max ** -2.0
    else:
        slack = float(1 - reciprocal_sum(degrees))
        u = tau ** (1 + 1 / dn + 2 * slack / 3)
        v = tau ** (1 / dn + slack / 3)
    a = [v ** (1 / dn)]
    for d in reversed(degrees[1:-1]):
        a.insert(0, u ** (1 / d) * a[0])
    return FamilyParams(rho, degrees, a, tau)


def _evaluate_array(params, z):
    """Evaluate ``f`` on an array; returns ``(values, poles)``.

    ``poles`` marks points within :data:`POLE_EPSILON` of the root of a factor
    with a negative exponent; their values are undefined.

    """
    z = np.asarray(z, dtype=complex)
    poles = np.zeros(z.shape, dtype=bool)
    with np.errstate(all='ignore'):
        value = z ** (params.sign * params.degrees[0])
        for e, c, p in params.factors:
            w = z ** e - c
            if p > 0:
                value = value * w
            else:
                poles |= np.abs(w) <= POLE_EPSILON
                value = value / w
    return value, poles


def evaluate(params, z):
    """Evaluate ``f`` at one point, extended to 0 and infinity by the case table."""
    z = complex(z)
    if cmath.isinf(z):
        return INFINITY if params.infinity_image == OUTER else 0j
    if z == 0:
        return INFINITY if params.zero_image == OUTER else 0j
    value, pole = _evaluate_array(params, np.array([z]))
    if pole[0]:
        raise PoleHit('%r is a pole of f' % z)
    value = complex(value[0])
    if cmath.isnan(value):
        return INFINITY
    return value


class AnnulusRadii(Immutable):
    """Radii of the trap disks, the critical annuli and the group annuli.

    ``R0 = tau``, ``Ri- = tau**alpha * ai``, ``Ri+ = tau**-alpha * ai`` and
    ``Rinf = (2 / tau) ** (1 / dn)``. ``hull`` is the log-modulus range
    ``(lo, hi)`` of the Julia set predicted by :func:`julia_hull` and
    ``groups`` holds, per group, the inner and outer radius of the annulus
    that the group maps onto that range widened by :data:`HULL_MARGIN`.

    """

    def __init__(self, R0, R_minus, R_plus, R_inf, alpha_margin, a, hull, groups):
        self.R0 = R0
        self.R_minus = tuple(R_minus)
        self.R_plus = tuple(R_plus)
        self.R_inf = R_inf
        self.alpha_margin = alpha_margin
        self.a = tuple(a)
        self.hull = tuple(hull)
        self.groups = tuple(tuple(g) for g in groups)

    def _key(self):
        return (self.R0, self.R_minus, self.R_plus, self.R_inf, self.alpha_margin)

    def chain(self):
        """``[(name, radius)]`` in the order the radii must increase."""
        chain = [('R0', self.R0)]
        for i, (lo, a, hi) in enumerate(zip(self.R_minus, self.a, self.R_plus), 1):
            chain += [('R%d-' % i, lo), ('a%d' % i, a), ('R%d+' % i, hi)]
        chain.append(('Rinf', self.R_inf))
        return chain

    def first_violation(self):
        chain = self.chain()
        for (n1, r1), (n2, r2) in zip(chain, chain[1:]):
            if not r1 < r2:
                return '%s = %.6g is not below %s = %.6g' % (n1, r1, n2, r2)
        return None

    def circles(self, i):
        """Inner and outer boundary radii of the annulus of group ``i`` (from 1)."""
        return self.groups[i - 1]

    def group_bounds(self, i):
        """The moduli ``a(i-1)`` and ``ai`` around group ``i``, 0 and inf at ends."""
        inner = self.a[i - 2] if i > 1 else 0.0
        outer = self.a[i - 1] if i <= len(self.a) else math.inf
        return inner, outer

    def to_json(self):
        return {
            'R0': self.R0,
            'R_minus': list(self.R_minus),
            'R_plus': list(self.R_plus),
            'R_inf': self.R_inf,
            'hull': [math.exp(x) for x in self.hull],
            'groups': [list(g) for g in self.groups],
            'alpha_margin': self.alpha_margin,
        }


def log_linear_branches(params):
    """``(slope, offset)`` per group with ``log|f| ~ slope * log|z| + offset``.

    On the annulus of group ``k`` every factor with index below ``k`` is
    dominated by its power of ``z`` and every other factor by its constant,
    so far from the critical circles ``f`` behaves like a monomial. The
    slope is ``sigma_k * dk``.

    """
    log_a = [math.log(a) for a in params.a]
    branches = []
    for k in range(1, params.n + 1):
        offset = math.fsum(
            p * e * log_a[i]
            for i, (e, _, p) in enumerate(params.factors)
            if i >= k - 1
        )
        branches.append((params.group_sign(k) * params.degrees[k - 1], offset))
    return branches


def julia_hull(params):
    """Log-modulus range ``(lo, hi)`` of the Julia set of the monomial model.

    The range is the fixed point of the map sending an interval to the hull
    of its preimages under every branch of :func:`log_linear_branches`.
    Every branch expands by at least 2, so the iteration converges
    geometrically from any start.

    """
    branches = log_linear_branches(params)
    lo = hi = 0.0
    for _ in range(HULL_MAX_STEPS):
        ends = [(y - c) / s for s, c in branches for y in (lo, hi)]
        new_lo, new_hi = min(ends), max(ends)
        done = abs(new_lo - lo) + abs(new_hi - hi) <= HULL_TOLERANCE * (
            1 + abs(new_lo) + abs(new_hi)
        )
        lo, hi = new_lo, new_hi
        if done:
            break
    return lo, hi


def group_annuli(params, hull, margin=None):
    """Radii ``(inner, outer)`` per group of the preimage of the widened hull."""
    margin = HULL_MARGIN if margin is None else margin
    lo, hi = hull
    annuli = []
    for s, c in log_linear_branches(params):
        x1, x2 = sorted([(lo - margin - c) / s, (hi + margin - c) / s])
        annuli.append((math.exp(x1), math.exp(x2)))
    return annuli


def annulus_radii(params, alpha_margin, check=True):
    """Return the trap and annulus radii for ``alpha_margin``.

    With ``check`` the chain ``R0 < R1- < a1 < R1+ < ... < Rinf`` must hold,
    otherwise :class:`ChainViolation` is raised: ``tau`` is too large for this
    margin.

    """
    alpha = float(alpha_margin)
    if not 0 < alpha < 0.5:
        raise OutOfRange('alpha margin must lie in (0, 1/2), got %r' % alpha)
    tau = params.tau
    hull = julia_hull(params)
    radii = AnnulusRadii(
        R0=tau,
        R_minus=[tau ** alpha * a for a in params.a],
        R_plus=[tau ** -alpha * a for a in params.a],
        R_inf=(2 / tau) ** (1 / params.degrees[-1]),
        alpha_margin=alpha,
        a=params.a,
        hull=hull,
        groups=group_annuli(params, hull),
    )
    if check:
        violation = radii.first_violation()
        if violation:
            raise ChainViolation(
                'Radii chain broken for %r, alpha %g: %s' % (params, alpha, violation)
            )
    return radii


def _absorbing_basin(params, side, step):
    """The attracting basin a trapped orbit belongs to.

    In case a everything ends near infinity and in case d near 0. In case c
    the two trap disks swap at every step, so the basin is the disk the orbit
    occupies at even times.

    """
    case = params.case
    if case == 'a':
        return np.full(side.shape, OUTER)
    if case == 'd':
        return np.full(side.shape, INNER)
    if case == 'b':
        return side
    swapped = np.where(side == INNER, OUTER, INNER)
    return np.where(step % 2 == 0, side, swapped)


def _iterate(params, radii, z, max_iter, track=False):
    """Follow the orbits of ``z`` until they enter the trap.

    Returns ``(side, steps, moduli, expansion)`` where ``side`` is the trap
    side entered (0 for none), ``moduli`` the modulus on entry (or after
    ``max_iter`` steps) and ``expansion`` the sum of ``log|F'|`` along the
    orbit before entry when ``track`` is set, else None.

    """
    z = np.array(z, dtype=complex, copy=True).ravel()
    steps = np.full(z.shape, max_iter, dtype=np.int32)
    moduli = np.abs(z)
    side = np.zeros(z.shape, dtype=np.int8)
    expansion = np.zeros(z.shape) if track else None
    active = np.arange(z.size)
    current = z
    for step in range(max_iter + 1):
        r = np.abs(current)
        inner = r < radii.R0
        outer = (r > radii.R_inf) | np.isnan(r)
        trapped = inner | outer
        done = active[trapped]
        side[done] = np.where(inner[trapped], INNER, OUTER)
        steps[done] = step
        moduli[done] = np.where(np.isnan(r[trapped]), math.inf, r[trapped])
        active = active[~trapped]
        current = current[~trapped]
        if step == max_iter or not active.size:
            break
        if track:
            with np.errstate(all='ignore'):
                expansion[active] += np.log(
                    np.abs(log_derivative_array(params, current))
                )
        current, poles = _evaluate_array(params, current)
        current[poles] = INFINITY
    moduli[active] = np.abs(current)
    return side, steps, moduli, expansion


def classify_array(params, radii, z, max_iter):
    """Vectorized orbit classification.

    Returns ``(verdicts, steps, exit_moduli)``. ``steps`` is the step at which
    the orbit entered the trap ``|z| < R0`` or ``|z| > Rinf``, and ``max_iter``
    for Julia candidates. A step landing on a pole continues at infinity.

    """
    side, steps, moduli, _ = _iterate(params, radii, z, max_iter)
    verdicts = np.zeros(side.shape, dtype=np.int8)
    entered = side != 0
    verdicts[entered] = _absorbing_basin(params, side[entered], steps[entered])
    return verdicts, steps, moduli


class OrbitClass(Immutable):
    def __init__(self, verdict, steps, exit_modulus):
        self.verdict = verdict
        self.steps = steps
        self.exit_modulus = exit_modulus

    def _key(self):
        return (self.verdict, self.steps, self.exit_modulus)

    def to_json(self):
        return {
            'verdict': self.verdict,
            'steps': self.steps,
            'exit_modulus': (
                self.exit_modulus if math.isfinite(self.exit_modulus) else None
            ),
        }

    def __repr__(self):
        return '%s(%d)' % (self.verdict, self.steps)


def classify_point(params, radii, z, max_iter):
    if max_iter < 0:
        raise OutOfRange('max_iter must not be negative, got %d' % max_iter)
    z = complex(z)
    if cmath.isinf(z):
        z = INFINITY
    verdicts, steps, moduli = classify_array(params, radii, [z], max_iter)
    return OrbitClass(VERDICTS[int(verdicts[0])], int(steps[0]), float(moduli[0]))


def _log_derivative_terms(params, z):
    """``(G, scale)`` with ``F' = s * G`` and ``scale`` the sum of term moduli."""
    d1 = params.degrees[0]
    g = np.full(z.shape, complex(d1))
    scale = np.full(z.shape, float(d1))
    with np.errstate(all='ignore'):
        for i, (e, c, p) in enumerate(params.factors, 1):
            h = 1 / (1 - (params.a[i - 1] / z) ** e)
            g = g + (-1) ** i * e * h
            scale = scale + e * np.abs(h)
    return g, scale


def log_derivative_array(params, z):
    """``F'`` of the map in logarithmic coordinates, at the points ``z = e**Z``.

    ``F'(Z) = z f'(z) / f(z) = s * (d1 + sum((-1)**i ei zi**ei / (z**ei - ai**ei)))``

    """
    z = np.asarray(z, dtype=complex)
    g, _ = _log_derivative_terms(params, z)
    return params.sign * g


def _seeds(params):
    seeds = []
    d = params.degrees
    for i, (a, (e, c, p)) in enumerate(zip(params.a, params.factors)):
        radius = a * (d[i] / d[i + 1]) ** (1 / e)
        angles = (2 * np.arange(e) + 1) * np.pi / e
        seeds.append(radius * np.exp(1j * angles))
    return np.concatenate(seeds)


def critical_points(params):
    """Return all finite nonzero critical points of ``f``.

    They are the zeros of ``G = d1 + sum((-1)**i ei hi)`` where
    ``hi = 1 / (1 - (ai / z)**ei)``, equivalently the roots of the polynomial
    ``G * prod(z**ei - ai**ei)`` of degree ``sum(ei)``. All roots are refined
    at once by the Aberth-Ehrlich iteration, seeded on the circles where the
    two dominant terms of ``G`` cancel. Points come back grouped by the
    nearest ``ai`` and ordered by argument within a group.

    """
    z = _seeds(params)
    m = z.size
    es = np.array([e for e, _, _ in params.factors], dtype=float)[:, np.newaxis]
    signs = np.array([(-1) ** i for i in range(1, params.n)], dtype=float)
    signs = signs[:, np.newaxis]
    a = np.array(params.a)[:, np.newaxis]
    off_diagonal = ~np.eye(m, dtype=bool)
    with Traced('Locating critical points', count=m):
        with np.errstate(all='ignore'):
            for sweep in range(ROOT_MAX_SWEEPS + 1):
                q = (a / z) ** es
                h = 1 / (1 - q)
                g = params.degrees[0] + np.sum(signs * es * h, axis=0)
                scale = params.degrees[0] + np.sum(es * np.abs(h), axis=0)
                residual = np.abs(g) / scale
                if np.all(residual < ROOT_TOLERANCE):
                    break
                if sweep == ROOT_MAX_SWEEPS or not np.all(np.isfinite(z)):
                    raise RootFindingDiverged(
                        'No convergence after %d sweeps for %r (worst residual %.3g)'
                        % (sweep, params, np.nanmax(residual))
                    )
                dg = -np.sum(signs * es ** 2 * q * h ** 2, axis=0) / z
                logderiv = dg / g + np.sum(es * h, axis=0) / z
                newton = 1 / logderiv
                diff = z[:, np.newaxis] - z[np.newaxis, :]
                repulsion = np.sum(np.where(off_diagonal, 1 / diff, 0), axis=1)
                z = z - newton / (1 - newton * repulsion)
    groups = critical_groups(params, z)
    order = np.lexsort((np.mod(np.angle(z), 2 * np.pi), groups))
    return [complex(p) for p in z[order]]


def critical_groups(params, points):
    """Index (from 1) of the ``ai`` nearest to each point in log-modulus."""
    points = np.asarray(points, dtype=complex)
    log_a = np.log(np.array(params.a))
    distance = np.abs(np.log(np.abs(points))[np.newaxis, :] - log_a[:, np.newaxis])
    return np.argmin(distance, axis=0) + 1


def critical_values(params, points):
    return [evaluate(params, p) for p in points]


def winding_number(params, radius, samples):
    """Winding number of ``f`` around 0 along the circle ``|z| = radius``."""
    theta = 2 * np.pi * np.arange(samples) / samples
    w, poles = _evaluate_array(params, radius * np.exp(1j * theta))
    if poles.any() or not np.all(np.isfinite(w)) or np.any(w == 0):
        return None
    turns = np.angle(np.roll(w, -1) / w)
    return int(round(float(np.sum(turns)) / (2 * np.pi)))


class DegreeAudit(Immutable):
    def __init__(self, numerator, denominator, from_polynomials):
        self.numerator = numerator
        self.denominator = denominator
        self.from_polynomials = from_polynomials

    def _key(self):
        return (self.numerator, self.denominator, self.from_polynomials)

    @property
    def degree(self):
        return max(self.numerator, self.denominator)

    def to_json(self):
        return {
            'numerator': self.numerator,
            'denominator': self.denominator,
            'degree': self.degree,
            'from_polynomials': list(self.from_polynomials),
        }


def degree_audit(params):
    """Degrees of the numerator and denominator of ``f``.

    They are read off the exponent table and, independently, from the
    expanded coefficient arrays of both polynomials.

    """
    s_d1 = params.sign * params.degrees[0]
    numerator = max(s_d1, 0) + sum(e for e, _, p in params.factors if p > 0)
    denominator = max(-s_d1, 0) + sum(e for e, _, p in params.factors if p < 0)
    polys = {1: np.zeros(max(s_d1, 0) + 1), -1: np.zeros(max(-s_d1, 0) + 1)}
    polys[1][-1] = 1
    polys[-1][-1] = 1
    for e, c, p in params.factors:
        factor = np.zeros(e + 1)
        factor[0], factor[e] = -c, 1
        polys[p] = np.polynomial.polynomial.polymul(polys[p], factor)
    from_polynomials = (len(polys[1]) - 1, len(polys[-1]) - 1)
    return DegreeAudit(numerator, denominator, from_polynomials)


class Check(Immutable):
    def __init__(self, name, passed, details):
        self.name = name
        self.passed = passed
        self.details = details

    def _key(self):
        return (self.name, self.passed)

    def to_json(self):
        return {'name': self.name, 'passed': self.passed, 'details': self.details}


class StructureReport(Immutable):
    def __init__(self, params, radii, checks):
        self.params = params
        self.radii = radii
        self.checks = tuple(checks)

    def _key(self):
        return (self.params, self.checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c.name for c in self.checks if not c.passed]

    def to_json(self):
        return {
            'params': self.params.to_json(),
            'radii': self.radii.to_json(),
            'checks': [c.to_json() for c in self.checks],
            'passed': self.passed,
        }


def _check_critical_values(params, radii, trap_steps):
    try:
        points = critical_points(params)
    except RootFindingDiverged as e:
        return Check('critical_values', False, {'error': str(e)})
    values, poles = _evaluate_array(params, np.array(points))
    values[poles] = INFINITY
    verdicts, steps, _ = classify_array(params, radii, values, trap_steps)
    moduli = np.abs(np.array(points))
    groups = critical_groups(params, points)
    lo = np.array(radii.R_minus)[groups - 1]
    hi = np.array(radii.R_plus)[groups - 1]
    trapped = verdicts != JULIA
    return Check(
        'critical_values',
        bool(np.all(trapped)),
        {
            'count': len(points),
            'expected_count': (
                2 * params.total_degree - params.degrees[0] - params.degrees[-1]
            ),
            'trapped': int(np.count_nonzero(trapped)),
            'max_steps': int(steps[trapped].max()) if trapped.any() else None,
            'in_critical_annuli': bool(np.all((lo < moduli) & (moduli < hi))),
        },
    )


def _finite(x):
    x = float(x)
    return x if math.isfinite(x) else None


def _check_circle(params, radii, i, which, radius, samples, trap_steps):
    sigma = params.group_sign(i)
    expected_side = INNER if (sigma > 0) == (which == 'inner') else OUTER
    lo, hi = radii.hull
    bound_in, bound_out = radii.group_bounds(i)
    in_group = bool(bound_in < radius < bound_out)
    theta = 2 * np.pi * np.arange(samples) / samples
    images, poles = _evaluate_array(params, radius * np.exp(1j * theta))
    images[poles] = INFINITY
    r = np.abs(images)
    with np.errstate(divide='ignore'):
        log_r = np.log(r)
    # Half the margin is left for the deviation of f from the monomial model.
    if expected_side == INNER:
        on_side = log_r < lo - HULL_MARGIN / 2
    else:
        on_side = log_r > hi + HULL_MARGIN / 2
    verdicts, steps, _ = classify_array(params, radii, images, trap_steps)
    trapped = verdicts != JULIA
    winding = winding_number(params, radius, samples)
    expected_winding = sigma * params.degrees[i - 1]
    passed = bool(
        in_group
        and np.all(on_side)
        and np.all(trapped)
        and winding == expected_winding
    )
    return {
        'group': i,
        'circle': which,
        'radius': radius,
        'in_group': in_group,
        'expected_side': VERDICTS[expected_side],
        'min_image': _finite(np.min(r)),
        'max_image': _finite(np.max(r)),
        'on_side': int(np.count_nonzero(on_side)),
        'trapped': int(np.count_nonzero(trapped)),
        'max_steps': int(steps[trapped].max()) + 1 if trapped.any() else None,
        'winding': winding,
        'expected_winding': expected_winding,
        'passed': passed,
    }


def _check_hull(radii):
    """The trap disks must stay clear of the predicted Julia set."""
    lo, hi = radii.hull
    inside = bool(math.log(radii.R0) < lo and hi < math.log(radii.R_inf))
    return {'inner': math.exp(lo), 'outer': math.exp(hi), 'inside_trap': inside}


def verify_structure(params, radii, samples=1024, trap_steps=32):
    """Check numerically that ``params`` has the Cantor circle structure.

    Three checks are reported:

    ``critical_values``
        every critical value reaches the trap within ``trap_steps`` steps;
    ``circles``
        the trap disks leave the predicted Julia set alone, and for each
        group ``i`` both boundary circles of its annulus lie between
        ``a(i-1)`` and ``ai``, map beyond the Julia set on the side
        predicted by ``sigma_i``, have every sampled orbit reach the trap
        within ``trap_steps`` steps, and make ``f`` wind ``sigma_i * di``
        times around 0;
    ``chain``
        the radii increase strictly.

    The group annuli come from :func:`julia_hull`, so they do not depend on
    the alpha margin. A pass is a numerical certificate only.

    """
    if samples < 256:
        raise OutOfRange('At least 256 samples per circle are needed, got %d' % samples)
    with Traced('Verifying structure', params=params, samples=samples):
        checks = [_check_critical_values(params, radii, trap_steps)]
        hull = _check_hull(radii)
        circles = []
        for i in range(1, params.n + 1):
            inner, outer = radii.circles(i)
            for which, radius in [('inner', inner), ('outer', outer)]:
                circles.append(
                    _check_circle(params, radii, i, which, radius, samples, trap_steps)
                )
        checks.append(
            Check(
                'circles',
                hull['inside_trap'] and all(c['passed'] for c in circles),
                {'hull': hull, 'circles': circles},
            )
        )
        violation = radii.first_violation()
        checks.append(Check('chain', violation is None, {'violation': violation}))
    return StructureReport(params, radii, checks)


def default_window(params, radii):
    """Square window holding the outer critical circle with some margin."""
    half = max(1.25, 1.5 * radii.R_plus[-1])
    half = min(half, radii.R_inf)
    return (-half, half, -half, half)


def _near_julia(z, side, steps, moduli, expansion, radius):
    """Pixels whose distance estimate to the Julia set is below ``radius``.

    The estimate is ``|z| * |log|w|| / prod|F'|`` with ``w`` the trap entry
    point and the product of ``|F'|`` taken along the orbit, the same scaling
    a log-radius footprint undergoes. Points already in the trap are never
    kept, orbits that never enter it always are.

    """
    with np.errstate(all='ignore'):
        log_estimate = (
            np.log(np.abs(z)) + np.log(np.abs(np.log(moduli))) - expansion
        )
        near = np.isfinite(log_estimate) & (log_estimate < math.log(radius))
    return (near & (steps > 0)) | (side == 0)


def render_julia(
    params, radii, width, height, max_iter, window=None, estimate=True, threads=1
):
    """Escape-time rendering.

    Returns ``(mask, steps)``: the mask marks Julia candidates, ``steps`` holds
    the trap entry step of every pixel whose orbit reached a basin and -1 for
    the orbits that never did. With ``estimate`` pixels within half a pixel
    diagonal of the Julia set by the distance estimate are candidates too and
    keep their step count; without it only orbits that stay out of the trap
    for ``max_iter`` steps are, which for a hyperbolic map leaves next to
    nothing at useful iteration counts.

    """
    check_dims(width, height)
    if max_iter < 0:
        raise OutOfRange('max_iter must not be negative, got %d' % max_iter)
    window = check_window(window or default_window(params, radii))
    xmin, xmax, ymin, ymax = window
    radius = 0.5 * math.hypot((xmax - xmin) / width, (ymax - ymin) / height)

    def render_rows(block):
        z = pixel_grid(window, width, height, rows=block)
        side, steps, moduli, expansion = _iterate(
            params, radii, z, max_iter, track=estimate
        )
        if estimate:
            near = _near_julia(z.ravel(), side, steps, moduli, expansion, radius)
        else:
            near = side == 0
        near = near.reshape(z.shape)
        return near, np.where(side == 0, -1, steps).reshape(z.shape)

    with Traced('Rendering Julia set', params=params, size='%dx%d' % (width, height)):
        blocks = ordered_map(render_rows, chunks(height, 4 * threads), threads)
    mask = np.concatenate([b[0] for b in blocks], axis=0)
    steps = np.concatenate([b[1] for b in blocks], axis=0)
    return mask, steps
