#!/usr/bin/env python3
"""Numeric property checks for the cantor test suite.

Each subcommand runs one check against the library and exits non-zero with
a message when it fails. The shell tests in t/ call it as ``test_cantor``.

"""

import itertools
import json
import math
import optparse
import sys
from fractions import Fraction

import numpy as np

from cantor.commands import schema_path
from cantor.config import CantorConfig, ConfigError
from cantor.lib import combinatorics as comb
from cantor.lib import dimension as dim
from cantor.lib import hausdorff_bounds as hb
from cantor.lib import rational_family as rf
from cantor.lib import standard_cantor as sc
from cantor.lib.raster import pixel_grid

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

# The ten degree pairs of the dimension sweeps, each used with both values of rho.
SWEEP_PAIRS = [
    (3, 3),
    (3, 4),
    (4, 3),
    (4, 4),
    (4, 5),
    (5, 4),
    (5, 5),
    (5, 6),
    (6, 5),
    (6, 6),
]


class CheckFailed(Exception):
    pass


def check(condition, msg, *args):
    if not condition:
        raise CheckFailed(msg % args if args else msg)


def check_close(actual, expected, tolerance, what):
    check(
        abs(actual - expected) <= tolerance,
        '%s: got %r, expected %r within %g',
        what,
        actual,
        expected,
        tolerance,
    )


_checks = {}


def property_check(name):
    def register(func):
        _checks[name] = func
        return func

    return register


@property_check('count-crosscheck')
def count_crosscheck(lo, hi):
    """The closed count formula agrees with deduplicated conjugacy classes."""
    for d in range(int(lo), int(hi) + 1):
        breakdown = comb.count_breakdown(d)
        classes = comb.count_classes(d)
        check(
            breakdown.total == classes,
            'N(%d): formula %d, classes %d',
            d,
            breakdown.total,
            classes,
        )
        by_kind = breakdown.by_kind
        check(
            sum(by_kind.values()) == classes,
            'N(%d): kinds %r do not add up to %d',
            d,
            by_kind,
            classes,
        )


@property_check('enumerate-valid')
def enumerate_valid(d):
    d = int(d)
    combinations = comb.enumerate_combinations(d)
    kinds = [c.kind for c in combinations]
    check(
        kinds == sorted(kinds, key=comb.KINDS.index),
        'kinds out of order for d=%d',
        d,
    )
    for c in combinations:
        check(c.total_degree == d, '%r does not have total degree %d', c, d)
        check(c.reciprocal_sum < 1, '%r has reciprocal sum %s', c, c.reciprocal_sum)
        check(min(c.degrees) >= 2, '%r has a degree below 2', c)
        check((c.n % 2 == 0) == (c.kind == 'I'), '%r has the wrong parity', c)
    check(len(set(combinations)) == len(combinations), 'duplicates for d=%d', d)


def _all_compositions(d):
    """Every composition of ``d`` into parts of at least 2, without pruning."""
    if not d:
        yield ()
        return
    for p in range(2, d + 1):
        for rest in _all_compositions(d - p):
            yield (p,) + rest


@property_check('enumerate-bruteforce')
def enumerate_bruteforce(hi):
    for d in range(2, int(hi) + 1):
        expected = sorted(
            (
                v
                for v in _all_compositions(d)
                if len(v) >= 2 and comb.reciprocal_sum(v) < 1
            ),
            key=lambda v: (len(v), v),
        )
        got = comb.enumerate_degree_vectors(d)
        check(
            got == expected,
            'd=%d: %d vectors enumerated, %d by brute force',
            d,
            len(got),
            len(expected),
        )


@property_check('class-reversal')
def class_reversal(hi):
    for d in range(2, int(hi) + 1):
        vectors = set(comb.enumerate_degree_vectors(d))
        for v in vectors:
            check(v[::-1] in vectors, '%r is enumerated but not its reversal', v)
        for c in comb.enumerate_combinations(d):
            cls = comb.canonical_class(c)
            if c.kind == 'I':
                check(cls.members == (c.degrees,), '%r: members %r', c, cls.members)
                continue
            check(
                cls == comb.canonical_class(c.reversed()),
                '%r and its reversal are in different classes',
                c,
            )
            check(
                len(cls.members) == (1 if c.is_palindrome else 2),
                '%r: members %r',
                c,
                cls.members,
            )
            check(
                cls.representative.degrees == min(c.degrees, c.degrees[::-1]),
                '%r: representative %r',
                c,
                cls.representative,
            )


@property_check('family-case')
def family_case(d):
    for c in comb.enumerate_combinations(int(d)):
        rho, case = comb.family_case(c)
        params = rf.parameter_schedule(rho, c.degrees, 1e-4)
        check(params.case == case, '%r: case %s, expected %s', c, params.case, case)


@property_check('degree-audit')
def degree_audit(hi):
    for d in range(2, int(hi) + 1):
        for degrees in comb.enumerate_degree_vectors(d):
            for rho in (0, 1):
                params = rf.parameter_schedule(rho, degrees, 1e-4)
                audit = rf.degree_audit(params)
                check(
                    audit.degree == d,
                    '%r: degree %d, expected %d',
                    params,
                    audit.degree,
                    d,
                )
                check(
                    audit.from_polynomials == (audit.numerator, audit.denominator),
                    '%r: table %r, polynomials %r',
                    params,
                    (audit.numerator, audit.denominator),
                    audit.from_polynomials,
                )


@property_check('moran-closed-forms')
def moran_closed_forms():
    for degrees in [(3, 3), (4, 4, 4), (5, 5, 5, 5), (7, 7)]:
        expected = 1 + math.log(len(degrees)) / math.log(degrees[0])
        check_close(dim.conformal_dimension(degrees), expected, 1e-10, repr(degrees))


@property_check('moran-generic')
def moran_generic(seed, count):
    rng = np.random.default_rng(int(seed))
    done = 0
    while done < int(count):
        n = int(rng.integers(2, 6))
        degrees = tuple(int(d) for d in rng.integers(2, 12, size=n))
        if comb.reciprocal_sum(degrees) >= 1:
            continue
        root = dim.alpha_root(degrees)
        check(0 < root.exponent < 1, 'alpha %r for %r', root.exponent, degrees)
        check(abs(root.residual) <= 1e-12, 'residual %r for %r', root.residual, degrees)
        residual = dim.moran_sum(degrees, root.exponent) - 1
        check(abs(residual) <= 1e-12, 'Moran sum off by %r for %r', residual, degrees)
        # Adding an annulus raises the dimension.
        grown = degrees + (max(degrees) * 4,)
        if comb.reciprocal_sum(grown) < 1:
            check(
                dim.conformal_dimension(grown) > dim.conformal_dimension(degrees),
                'dimension did not grow from %r to %r',
                degrees,
                grown,
            )
        done += 1


@property_check('similarity-dimension')
def similarity_dimension():
    check_close(
        dim.solve_similarity_dimension([(1 / 3, 2)]).exponent,
        math.log(2) / math.log(3),
        1e-12,
        'middle thirds',
    )
    check_close(
        dim.solve_similarity_dimension([(0.5, 4)]).exponent, 2.0, 1e-12, 'square'
    )
    for bad, error in [
        ([(1.5, 2)], dim.InvalidFactors),
        ([(0.5, 0)], dim.InvalidFactors),
        ([], dim.InvalidFactors),
        ([(0.5, 1)], dim.DegenerateSystem),
    ]:
        try:
            dim.solve_similarity_dimension(bad)
        except error:
            continue
        raise CheckFailed('%r was not rejected with %s' % (bad, error.__name__))


# (kind, degrees, partition or None) -> [(exponent, power of e in the coefficient)]
IFS_GOLDENS = [
    ('I', (3, 3), None, [(-3, Fraction(-3)), (3, Fraction(0))]),
    (
        'II',
        (4, 4, 4),
        '-1,-3/4,-5/8,-3/8,-1/4,0',
        [(4, Fraction(3)), (-4, Fraction(-5, 2)), (4, Fraction(0))],
    ),
    ('I', (3, 2), '-1,-2/3,-1/2,0', [(-3, Fraction(-3)), (2, Fraction(0))]),
]


@property_check('ifs-golden')
def ifs_golden():
    for kind, degrees, values, expected in IFS_GOLDENS:
        partition = None
        if values is not None:
            partition = sc.make_partition(
                [Fraction(v) for v in values.split(',')], degrees
            )
        ifs = sc.build_ifs(comb.validate(kind, degrees), partition)
        for m, (exponent, power) in zip(ifs.maps, expected):
            check(
                m.exponent == exponent,
                '%r: exponent %d, expected %d',
                m,
                m.exponent,
                exponent,
            )
            check(
                abs(m.coefficient - math.exp(power)) <= 1e-14 * math.exp(power),
                '%r: coefficient %r, expected e^%s',
                m,
                m.coefficient,
                power,
            )
            # The domain is mapped onto [-1, 0] in log-radius.
            images = sorted(m.log_map(float(b)) for b in m.domain)
            check_close(images[0], -1.0, 1e-14, '%r low end' % m)
            check_close(images[1], 0.0, 1e-14, '%r high end' % m)


@property_check('membership')
def membership():
    ifs = sc.build_ifs(comb.validate('I', (3, 3)))
    cases = [
        (-5 / 6, sc.ESCAPED, 2),
        (-0.5, sc.ESCAPED, 1),
        (-7 / 9, sc.IN_ATTRACTOR, 16),
        (-1.0, sc.IN_ATTRACTOR, 16),
        (0.0, sc.IN_ATTRACTOR, 16),
        (-2 / 3, sc.IN_ATTRACTOR, 16),
    ]
    for x, verdict, step in cases:
        result = sc.cantor_membership(x, ifs, 16)
        check(
            (result.verdict, result.step) == (verdict, step),
            'x=%r: got %r, expected %s(%d)',
            x,
            result,
            verdict,
            step,
        )
    try:
        sc.cantor_membership(0.5, ifs, 16)
    except sc.OutOfRange:
        pass
    else:
        raise CheckFailed('x=0.5 was accepted')


@property_check('cylinders-moran')
def cylinders_moran(seed):
    rng = np.random.default_rng(int(seed))
    for kind, degrees, depth in [
        ('I', (3, 3), 6),
        ('II', (4, 4, 4), 5),
        ('III', (3, 5, 4), 5),
        ('I', (3, 4, 5, 6), 4),
        ('II', (5, 2, 5), 5),
    ]:
        partition = sc.random_partition(degrees, rng)
        ifs = sc.build_ifs(comb.validate(kind, degrees), partition)
        alpha = dim.alpha_root(degrees).exponent
        intervals = sc.cylinders(ifs, depth)
        check(len(intervals) == len(degrees) ** depth, 'cylinder count for %r', degrees)
        total = math.fsum(float(hi - lo) ** alpha for lo, hi in intervals)
        check_close(total, 1.0, 1e-10, 'Moran sum of %r at depth %d' % (degrees, depth))
        for (lo1, hi1), (lo2, hi2) in zip(intervals, intervals[1:]):
            check(hi1 <= lo2, 'cylinders of %r overlap', degrees)


COHERENCE_COMBINATIONS = [
    ('I', (3, 3)),
    ('II', (4, 4, 4)),
    ('III', (3, 5, 4)),
    ('I', (3, 4, 5, 6)),
]


@property_check('partition-independence')
def partition_independence(seed):
    rng = np.random.default_rng(int(seed))
    for kind, degrees in COHERENCE_COMBINATIONS:
        depth = 3
        expected = sorted(
            np.prod([Fraction(1, d) for d in word])
            for word in itertools.product(degrees, repeat=depth)
        )
        combination = comb.validate(kind, degrees)
        for partition in [None] + [sc.random_partition(degrees, rng) for _ in range(3)]:
            ifs = sc.build_ifs(combination, partition)
            lengths = sorted(hi - lo for lo, hi in sc.cylinders(ifs, depth))
            check(
                lengths == expected,
                '%r: cylinder lengths depend on the partition %r',
                combination,
                ifs.partition,
            )


@property_check('annulus-map-coherence')
def annulus_map_coherence(seed):
    rng = np.random.default_rng(int(seed))
    theta = 2 * np.pi * np.arange(64) / 64
    for kind, degrees in COHERENCE_COMBINATIONS:
        combination = comb.validate(kind, degrees)
        for partition in [None, sc.random_partition(degrees, rng)]:
            ifs = sc.build_ifs(combination, partition)
            for m in ifs.maps:
                b_minus, b_plus = (float(b) for b in m.domain)
                # Orientation-preserving maps keep the outer circle outside.
                targets = {b_minus: -1.0, b_plus: 0.0}
                if m.sign < 0:
                    targets = {b_minus: 0.0, b_plus: -1.0}
                for b, target in targets.items():
                    w = m(math.exp(b) * np.exp(1j * theta))
                    worst = float(np.max(np.abs(np.abs(w) - math.exp(target))))
                    check(worst <= 1e-12, '%r: |w| off by %g at %r', m, worst, b)
                    check_close(m.log_map(b), target, 1e-12, '%r at %r' % (m, b))
                    turn = np.exp(1j * m.exponent * theta)
                    worst = float(np.max(np.abs(w / np.abs(w) - turn)))
                    check(worst <= 1e-12, '%r: argument off by %g', m, worst)


@property_check('standard-symmetry')
def standard_symmetry(size):
    size = int(size)
    ifs = sc.build_ifs(comb.validate('I', (3, 3)))
    mask, _ = sc.render_standard(ifs, size, size, 12)
    check(mask.any(), 'empty rendering')
    for name, other in [
        ('vertical flip', mask[::-1, :]),
        ('horizontal flip', mask[:, ::-1]),
        ('transpose', mask.T),
    ]:
        mismatch = np.count_nonzero(mask != other)
        check(
            mismatch <= 1e-3 * np.count_nonzero(mask),
            '%s differs in %d pixels',
            name,
            mismatch,
        )
    # Nothing outside the unit disk or inside 1/e.
    z = pixel_grid((-1.0, 1.0, -1.0, 1.0), size, size)
    r = np.abs(z)
    pixel = 2.0 / size
    outside = (r > 1 + pixel) | (r < math.exp(-1) - pixel)
    check(not np.any(mask & outside), 'pixels set outside the annulus')


@property_check('standard-annulus')
def standard_annulus(size):
    size = int(size)
    ifs = sc.build_ifs(comb.validate('I', (3, 3)))
    log_r = np.log(np.abs(pixel_grid((-1.0, 1.0, -1.0, 1.0), size, size)))
    outside = (log_r < -1 - sc.EPSILON) | (log_r > sc.EPSILON)
    for depth in (1, 8):
        mask, coverage = sc.render_standard(ifs, size, size, depth, supersample=True)
        check(mask.any(), 'empty rendering at depth %d', depth)
        check(
            not np.any(mask & outside),
            'depth %d: %d pixels set with a center outside the annulus',
            depth,
            np.count_nonzero(mask & outside),
        )
        check(
            not np.any((coverage > 0) & outside),
            'depth %d: coverage outside the annulus',
            depth,
        )
        plain, _ = sc.render_standard(ifs, size, size, depth)
        check(np.array_equal(plain, mask), 'depth %d: supersampled mask differs', depth)


@property_check('box-count-shapes')
def box_count_shapes():
    size = 512
    line = np.zeros((size, size), dtype=bool)
    line[size // 2, :] = True
    square = np.ones((size, size), dtype=bool)
    for name, mask, expected in [('line', line, 1.0), ('square', square, 2.0)]:
        bounds = dim.box_counting_dimension(mask)
        check_close(bounds.details['slope'], expected, 0.02, name)


@property_check('standard-boxcount')
def standard_boxcount(size):
    size = int(size)
    ifs = sc.build_ifs(comb.validate('I', (3, 3)))
    mask, _ = sc.render_standard(ifs, size, size, 24)
    bounds = dim.box_counting_dimension(mask)
    expected = 1 + math.log(2) / math.log(3)
    check_close(bounds.details['slope'], expected, 0.1, 'box-count slope')


@property_check('mcmullen')
def mcmullen(seed):
    rng = np.random.default_rng(int(seed))
    for d1, d2 in SWEEP_PAIRS:
        params = rf.parameter_schedule(1, (d1, d2), 1e-4)
        check(params.case == 'a', 'case %s for %r', params.case, params)
        c = params.a[0] ** (d1 + d2)
        log_r = rng.uniform(math.log(params.tau), math.log(2 / params.tau) / d2, 1000)
        z = np.exp(log_r + 1j * rng.uniform(0, 2 * math.pi, 1000))
        values, poles = rf._evaluate_array(params, z)
        check(not poles.any(), 'pole hit for %r', params)
        expected = z ** d2 - c * z ** -d1
        scale = np.abs(z ** d2) + np.abs(c * z ** -d1)
        worst = float(np.max(np.abs(values - expected) / scale))
        check(worst <= 1e-12, '%r: relative deviation %g', params, worst)
        scalar = rf.evaluate(params, z[0])
        check(
            abs(scalar - values[0]) <= 1e-14 * scale[0],
            '%r: scalar evaluation gives %r',
            params,
            scalar,
        )
        # The pole at 0 of z**-d1 is extended to infinity.
        check(np.isinf(rf.evaluate(params, 0)), '%r: f(0) is finite', params)
        audit = rf.degree_audit(params)
        check(audit.degree == d1 + d2, '%r: degree %d', params, audit.degree)
        check(
            audit.from_polynomials == (audit.numerator, audit.denominator),
            '%r: polynomial degrees %r',
            params,
            audit.from_polynomials,
        )


@property_check('critical-count')
def critical_count():
    # (3,3) critical points sit exactly on |z| = a1.
    params = rf.parameter_schedule(1, (3, 3), 1e-5)
    points = rf.critical_points(params)
    check(len(points) == 6, '%d critical points for (3,3)', len(points))
    for p in points:
        check_close(abs(p) / params.a[0], 1.0, 1e-9, 'modulus of %r' % p)
    for rho, degrees in [
        (1, (3, 4, 5)),
        (1, (4, 4, 4)),
        (0, (3, 4, 5)),
        (1, (4, 4, 5, 5)),
    ]:
        params = rf.parameter_schedule(rho, degrees, 1e-4)
        points = rf.critical_points(params)
        expected = 2 * sum(degrees) - degrees[0] - degrees[-1]
        check(len(points) == expected, '%d critical points for %r', len(points), params)
        groups = list(rf.critical_groups(params, points))
        for i in range(1, len(degrees)):
            count = groups.count(i)
            want = degrees[i - 1] + degrees[i]
            check(
                count == want,
                '%r: %d points near a%d, expected %d',
                params,
                count,
                i,
                want,
            )
        g = rf.log_derivative_array(params, np.array(points))
        _, scale = rf._log_derivative_terms(params, np.array(points))
        worst = float(np.max(np.abs(g) / scale))
        check(worst <= 1e-9, '%r: residual %g', params, worst)


@property_check('winding')
def winding():
    params = rf.parameter_schedule(1, (3, 3), 1e-5)
    radii = rf.annulus_radii(params, 0.1)
    for radius, expected in [
        (radii.R_inf, 3),
        (radii.R0, -3),
        (radii.R_minus[0], -3),
        (radii.R_plus[0], 3),
    ]:
        got = rf.winding_number(params, radius, 1024)
        check(
            got == expected,
            'winding %r at radius %g, expected %d',
            got,
            radius,
            expected,
        )


@property_check('classify')
def classify():
    cases = [
        # (rho, degrees, tau, z, max_iter, verdict, steps)
        (1, (3, 3), 1e-4, 0, 10, 'OuterBasin', 0),
        (1, (3, 3), 1e-4, 1e12, 10, 'OuterBasin', 0),
        (1, (3, 3), 1e-4, complex(math.inf, 0), 10, 'OuterBasin', 0),
        (1, (4, 4, 4), 1e-4, 1e-9, 10, 'InnerBasin', 0),
        (1, (4, 4, 4), 1e-4, 1e12, 10, 'OuterBasin', 0),
        (0, (4, 4, 4), 1e-4, 1e-9, 10, 'InnerBasin', 0),
        (0, (4, 4, 4), 1e-4, 2e-4, 10, 'InnerBasin', 1),
        (0, (3, 3), 1e-4, 1e-9, 10, 'InnerBasin', 0),
        (0, (3, 3), 1e-4, 1e12, 10, 'InnerBasin', 0),
        (1, (3, 3), 1e-4, 0.5, 0, 'JuliaCandidate', 0),
    ]
    for rho, degrees, tau, z, max_iter, verdict, steps in cases:
        params = rf.parameter_schedule(rho, degrees, tau)
        radii = rf.annulus_radii(params, 0.1, check=False)
        result = rf.classify_point(params, radii, z, max_iter)
        check(
            (result.verdict, result.steps) == (verdict, steps),
            '%r at %r: got %r, expected %s(%d)',
            params,
            z,
            result,
            verdict,
            steps,
        )


@property_check('log-derivative')
def log_derivative(seed):
    rng = np.random.default_rng(int(seed))
    h = 1e-5
    for rho, degrees in [(1, (3, 3)), (0, (3, 4)), (1, (3, 4, 5)), (0, (4, 4, 4))]:
        params = rf.parameter_schedule(rho, degrees, 1e-3)
        log_a = np.log(np.array(params.a))
        log_r = rng.uniform(
            math.log(params.tau), math.log(2 / params.tau) / degrees[-1], 4000
        )
        keep = np.min(np.abs(log_r[:, np.newaxis] - log_a[np.newaxis, :]), axis=1) > 0.1
        log_r = log_r[keep][:1000]
        z = np.exp(log_r + 1j * rng.uniform(0, 2 * math.pi, log_r.size))
        fd = np.log(
            rf._evaluate_array(params, z * math.exp(h))[0]
            / rf._evaluate_array(params, z * math.exp(-h))[0]
        ) / (2 * h)
        analytic = rf.log_derivative_array(params, z)
        worst = float(np.max(np.abs(fd - analytic) / np.maximum(1, np.abs(analytic))))
        check(worst <= 1e-4, '%r: finite difference deviates by %g', params, worst)
        for k in range(5):
            scalar = hb.log_map_derivative(params, complex(np.log(z[k])))
            check(
                abs(scalar - analytic[k]) <= 1e-9 * max(1, abs(analytic[k])),
                '%r: log_map_derivative disagrees at %r',
                params,
                z[k],
            )
        far = rf.log_derivative_array(params, np.array([1e8, 1e-12]))
        check_close(abs(far[0]), degrees[-1], 1e-6, '%r near infinity' % params)
        check_close(abs(far[1]), degrees[0], 1e-6, '%r near zero' % params)


@property_check('julia-mask')
def julia_mask(size):
    size = int(size)
    params = rf.parameter_schedule(1, (3, 3), 1e-4)
    radii = rf.annulus_radii(params, 0.1)
    window = rf.default_window(params, radii)
    mask, steps = rf.render_julia(params, radii, size, size, 200)
    check(mask.any(), 'no Julia candidates')
    mismatch = np.count_nonzero(mask != mask[::-1, :])
    check(
        mismatch <= 1e-3 * np.count_nonzero(mask),
        'not symmetric under conjugation: %d',
        mismatch,
    )
    r = np.abs(pixel_grid(window, size, size))
    trap = (r < radii.R0) | (r > radii.R_inf)
    check(not np.any(mask & trap), 'candidates in the trap')
    check(np.all(mask[steps == -1]), 'an orbit outside the basins is not a candidate')
    plain, plain_steps = rf.render_julia(params, radii, size, size, 200, estimate=False)
    check(np.all((plain_steps == -1) == plain), 'escape field disagrees with the mask')
    check(np.array_equal(steps, plain_steps), 'escape field depends on the estimate')
    estimated = mask & (steps >= 0)
    check(estimated.any(), 'the distance estimate added no candidates')
    check(np.all(steps[estimated] >= 1), 'candidates that started in the trap')
    # Without iterating, the mask is the closed annulus between the traps.
    mask0, _ = rf.render_julia(params, radii, size, size, 0)
    check(np.all(mask0 == ((r >= radii.R0) & (r <= radii.R_inf))), 'max_iter 0 mask')


@property_check('julia-boxcount')
def julia_boxcount(size):
    size = int(size)
    params = rf.parameter_schedule(1, (3, 3), 1e-2)
    radii = rf.annulus_radii(params, 0.1)
    bounds = hb.hdim_bracket(hb.branch_envelopes(params, radii, (128, 512)))
    mask, _ = rf.render_julia(params, radii, size, size, 200, threads=4)
    slope = dim.box_counting_dimension(mask).details['slope']
    check(
        bounds.lower - 0.1 <= slope <= bounds.upper + 0.1,
        'box-count slope %.4f outside [%.4f, %.4f] +/- 0.1',
        slope,
        bounds.lower,
        bounds.upper,
    )


@property_check('threads')
def threads():
    ifs = sc.build_ifs(comb.validate('II', (4, 4, 4)))
    one, _ = sc.render_standard(ifs, 200, 150, 12, threads=1)
    four, _ = sc.render_standard(ifs, 200, 150, 12, threads=4)
    check(np.array_equal(one, four), 'standard rendering depends on the thread count')
    params = rf.parameter_schedule(1, (3, 3), 1e-4)
    radii = rf.annulus_radii(params, 0.1)
    one = rf.render_julia(params, radii, 150, 200, 100, threads=1)
    four = rf.render_julia(params, radii, 150, 200, 100, threads=4)
    check(np.array_equal(one[1], four[1]), 'Julia rendering depends on threads')
    env1 = hb.branch_envelopes(params, radii, (64, 256), threads=1)
    env4 = hb.branch_envelopes(params, radii, (64, 256), threads=4)
    check(env1 == env4, 'envelopes depend on the thread count')
    counts = comb.count_range(5, 20)
    check(comb.count_range(5, 20, threads=4) == counts, 'counts differ')


@property_check('hdim-pinched')
def hdim_pinched():
    for degrees in [(3, 3), (3, 4, 5), (2, 5, 7, 9)]:
        if comb.reciprocal_sum(degrees) >= 1:
            continue
        envelopes = [
            hb.BranchEnvelope(i, d, d, d, 1.0, 2.0, 0.0)
            for i, d in enumerate(degrees, 1)
        ]
        bounds = hb.hdim_bracket(envelopes)
        expected = dim.conformal_dimension(degrees)
        check_close(bounds.lower, expected, 1e-10, '%r lower' % (degrees,))
        check_close(bounds.upper, expected, 1e-10, '%r upper' % (degrees,))
    try:
        hb.hdim_bracket([hb.BranchEnvelope(1, 0.5, 3, 3, 1.0, 2.0, 0.0)] * 2)
    except hb.NotExpanding:
        pass
    else:
        raise CheckFailed('a contracting branch was accepted')
    # Barely expanding branches put the upper root far above 2.
    bounds = hb.hdim_bracket([hb.BranchEnvelope(1, 1.05, 3, 3, 1.0, 2.0, 0.0)] * 2)
    check_close(bounds.lower, math.log(6) / math.log(3), 1e-10, 'clamped lower')
    check(bounds.upper == 2.0, 'upper %r was not clamped to 2', bounds.upper)
    check(bounds.details['upper_clamped'], 'clamping was not reported')
    check(
        not hb.hdim_bracket(
            [hb.BranchEnvelope(1, 3, 3, 3, 1.0, 2.0, 0.0)] * 2
        ).details['upper_clamped'],
        'an upper root below 2 was reported as clamped',
    )
    try:
        hb.hdim_bracket([hb.BranchEnvelope(1, 10, 10, 2, 1.0, 2.0, 0.0)] * 2)
    except hb.BracketOutOfRange:
        pass
    else:
        raise CheckFailed('a lower bound below 1 was accepted')


def _bracket(rho, degrees, tau, alpha, grid=(128, 512)):
    params = rf.parameter_schedule(rho, degrees, tau)
    radii = rf.annulus_radii(params, alpha)
    return hb.hdim_bracket(hb.branch_envelopes(params, radii, grid))


@property_check('hdim-limit')
def hdim_limit():
    target = 1 + math.log(2) / math.log(3)
    brackets = [_bracket(1, (3, 3), 10.0 ** -k, 0.1) for k in range(2, 7)]
    for b in brackets:
        check(1 < b.lower <= b.upper < 2, 'bracket %r outside (1, 2)', b)
    for b1, b2 in zip(brackets, brackets[1:]):
        check(b2.width < b1.width, 'width did not shrink: %r then %r', b1, b2)
        check(
            abs(b2.lower - target) < abs(b1.lower - target)
            and abs(b2.upper - target) < abs(b1.upper - target),
            'bracket did not approach %.6f: %r then %r',
            target,
            b1,
            b2,
        )
    last = brackets[-1]
    check(last.lower <= target <= last.upper, '%r does not hold %.6f', last, target)
    check(last.width < 0.05, '%r is wider than 0.05', last)
    check(last.lower >= target - 0.02, '%r falls below %.6f - 0.02', last, target)


# Members with three degrees, at a tau their structure verifies for.
SWEEP_LONG = [
    (1, (4, 4, 4), 1e-12),
    (1, (3, 4, 3), 1e-30),
    (0, (3, 3, 4), 1e-20),
]


@property_check('hdim-sweep')
def hdim_sweep():
    for rho in (0, 1):
        for degrees in SWEEP_PAIRS:
            b = _bracket(rho, degrees, 1e-6, 0.05)
            check(1 < b.lower <= b.upper < 2, 'rho %d %r: %r', rho, degrees, b)
            confdim = dim.conformal_dimension(degrees)
            check(1 < confdim < 2, '%r: conformal dimension %r', degrees, confdim)
    for rho, degrees, tau in SWEEP_LONG:
        b = _bracket(rho, degrees, tau, 0.05)
        check(1 < b.lower <= b.upper <= 2, 'rho %d %r: %r', rho, degrees, b)


# Each tau list runs from the largest tau the structure verifies for downwards.
SMALL_TAU_MEMBERS = [
    (1, (3, 3), [1e-2, 1e-4, 1e-6, 1e-8]),
    (1, (4, 4, 4), [1e-9, 1e-12, 1e-15]),
    (0, (3, 3, 4), [1e-20, 1e-25]),
]


@property_check('verify-small-tau')
def verify_small_tau():
    for rho, degrees, taus in SMALL_TAU_MEMBERS:
        for tau in taus:
            params = rf.parameter_schedule(rho, degrees, tau)
            report = rf.verify_structure(
                params, rf.annulus_radii(params, 0.05, check=False)
            )
            check(
                report.passed,
                'rho %d %r at tau %g: failed %s',
                rho,
                degrees,
                tau,
                ', '.join(report.failures()),
            )


@property_check('config-getters')
def config_getters(path):
    cfg = CantorConfig(files=[path], environ={'CANTOR_THREADS': '3'})
    check_close(cfg.getfloat('cantor.tau'), 1e-6, 0, 'cantor.tau')
    check(cfg.getint('cantor.depth') == 24, 'cantor.depth is not the default')
    check(cfg.getbool('cantor.estimate') is False, 'cantor.estimate is not false')
    check(cfg.getbool('cantor.missing') is None, 'cantor.missing is set')
    check(cfg.getthreads() == 3, 'CANTOR_THREADS is ignored')
    for getter in [cfg.getbool, cfg.getfloat, cfg.getint]:
        try:
            getter('cantor.broken')
        except ConfigError:
            pass
        else:
            raise CheckFailed('%s accepted "maybe"' % getter.__name__)


@property_check('schema')
def schema(name, path):
    import jsonschema

    with open(schema_path(name)) as f:
        document = json.load(f)
    with open(path) as f:
        lines = [line for line in f if line.strip()]
    check(lines, '%s holds no reports', path)
    for i, line in enumerate(lines, 1):
        try:
            jsonschema.validate(json.loads(line), document)
        except jsonschema.ValidationError as e:
            raise CheckFailed('%s:%d: %s' % (path, i, e.message))


def main(argv):
    usage = 'usage: %prog <check> [args...]\n\nChecks: ' + ', '.join(sorted(_checks))
    parser = optparse.OptionParser(usage=usage)
    options, args = parser.parse_args(argv[1:])
    if not args:
        parser.error('no check given')
    name, args = args[0], args[1:]
    if name not in _checks:
        parser.error('unknown check "%s"' % name)
    try:
        _checks[name](*args)
    except CheckFailed as e:
        print('%s: %s' % (name, e), file=sys.stderr)
        return 1
    except TypeError as e:
        parser.error('%s: %s' % (name, e))
    return 0


if __name__ == '__main__':
    sys.exit(main(sys.argv))
