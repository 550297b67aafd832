"""Two-sided bounds on the Hausdorff dimension of a family Julia set.

On the annulus of group ``i`` the map is a ``di``-fold covering expanding by
``|F'|`` in logarithmic coordinates. Sampling ``|F'|`` over the annulus gives
envelopes ``[mi, Mi]``, and the similarity dimensions of the systems with
ratios ``1/Mi`` and ``1/mi``, each repeated ``di`` times, bracket the
dimension of the Julia set.

The envelopes are taken on a finite grid and padded by the largest step
between neighbouring grid values. This is a numerical bound, not interval
arithmetic, and every result says so with ``rigorous: false``.

"""

import cmath

import numpy as np

from cantor.exception import ComputationException, ValidationException
from cantor.lib.base import Immutable
from cantor.lib.dimension import DimensionBounds, solve_similarity_dimension
from cantor.lib.parallel import chunks, ordered_map
from cantor.lib.rational_family import (
    POLE_EPSILON,
    PoleHit,
    log_derivative_array,
    verify_structure,
)
from cantor.trace import Traced

MIN_GRID = (64, 256)

# Dimension of the plane.
MAX_DIMENSION = 2.0


class GridTooCoarse(ValidationException):
    pass


class StructureUnverified(ComputationException):
    pass


class NotExpanding(ComputationException):
    pass


class BracketOutOfRange(ComputationException):
    pass


class BranchEnvelope(Immutable):
    """Bounds ``[min, max]`` of ``|F'|`` over the annulus of one group."""

    def __init__(self, group, min, max, multiplicity, inner_radius, outer_radius, pad):
        self.group = group
        self.min = min
        self.max = max
        self.multiplicity = multiplicity
        self.inner_radius = inner_radius
        self.outer_radius = outer_radius
        self.pad = pad

    def _key(self):
        return (self.group, self.min, self.max, self.multiplicity)

    def to_json(self):
        return {
            'group': self.group,
            'min': self.min,
            'max': self.max,
            'multiplicity': self.multiplicity,
            'inner_radius': self.inner_radius,
            'outer_radius': self.outer_radius,
            'pad': self.pad,
        }

    def __repr__(self):
        return 'BranchEnvelope(%d: [%.6g, %.6g] x%d)' % (
            self.group,
            self.min,
            self.max,
            self.multiplicity,
        )


def check_grid(grid):
    radial, angular = grid
    if radial < MIN_GRID[0] or angular < MIN_GRID[1]:
        raise GridTooCoarse(
            'Grid %dx%d is coarser than %dx%d' % ((radial, angular) + MIN_GRID)
        )
    return radial, angular


def log_map_derivative(params, Z):
    """``F'(Z)`` of the map lifted to logarithmic coordinates ``z = e**Z``.

    Raises :class:`~cantor.lib.rational_family.PoleHit` when ``e**Z`` is a
    root of one of the factors.

    """
    Z = complex(Z)
    z = cmath.exp(Z)
    for e, c, _ in params.factors:
        if abs(z ** e - c) <= POLE_EPSILON * max(1.0, c):
            raise PoleHit('e^%r is a root of the factor z^%d - %g' % (Z, e, c))
    value = complex(log_derivative_array(params, np.array([z]))[0])
    if not cmath.isfinite(value):
        raise PoleHit('e^%r is a root of a factor' % Z)
    return value


def _envelope(params, group, inner, outer, grid, threads):
    radial, angular = grid
    log_r = np.linspace(np.log(inner), np.log(outer), radial)
    theta = 2 * np.pi * np.arange(angular) / angular

    def sample(block):
        start, stop = block
        z = np.exp(log_r[start:stop, np.newaxis] + 1j * theta[np.newaxis, :])
        return np.abs(log_derivative_array(params, z))

    values = np.concatenate(ordered_map(sample, chunks(radial, 4 * threads), threads))
    if not np.all(np.isfinite(values)):
        raise NotExpanding('|F\'| is unbounded on the annulus of group %d' % group)
    # The angular axis wraps around.
    pad = max(
        float(np.max(np.abs(np.diff(values, axis=0)))),
        float(np.max(np.abs(values - np.roll(values, 1, axis=1)))),
    )
    return BranchEnvelope(
        group,
        float(values.min()) - pad,
        float(values.max()) + pad,
        params.degrees[group - 1],
        inner,
        outer,
        pad,
    )


def branch_envelopes(params, radii, grid, report=None, threads=1):
    """Sample ``|F'|`` on a log-polar grid over every group annulus.

    The structure of ``params`` must verify first. Pass the
    :class:`~cantor.lib.rational_family.StructureReport` if it is already at
    hand, otherwise it is computed here.

    """
    grid = check_grid(grid)
    if report is None:
        report = verify_structure(params, radii)
    if not report.passed:
        raise StructureUnverified(
            'Structure of %r does not verify (failed: %s)'
            % (params, ', '.join(report.failures()))
        )
    envelopes = []
    with Traced('Sampling branch envelopes', params=params, grid='%dx%d' % grid):
        for i in range(1, params.n + 1):
            inner, outer = radii.circles(i)
            envelopes.append(_envelope(params, i, inner, outer, grid, threads))
    return envelopes


def hdim_bracket(envelopes):
    """Bracket the Hausdorff dimension from the branch envelopes.

    Each branch must expand (``min > 1``), otherwise :class:`NotExpanding` is
    raised. A Julia set in the plane has dimension at most 2, so a larger
    upper root is cut back to 2 and the report says so with ``upper_clamped``.
    A lower root outside ``(1, 2]`` raises :class:`BracketOutOfRange`.

    """
    for e in envelopes:
        if not e.min > 1:
            raise NotExpanding(
                'Group %d is not uniformly expanding (min |F\'| = %.6g)'
                % (e.group, e.min)
            )
    lower = solve_similarity_dimension(
        [(1 / e.max, e.multiplicity) for e in envelopes]
    )
    upper = solve_similarity_dimension(
        [(1 / e.min, e.multiplicity) for e in envelopes]
    )
    if not 1 < lower.exponent <= MAX_DIMENSION:
        raise BracketOutOfRange(
            'Lower bound %.6g is outside (1, %g]' % (lower.exponent, MAX_DIMENSION)
        )
    clamped = upper.exponent > MAX_DIMENSION
    return DimensionBounds(
        lower.exponent,
        max(min(upper.exponent, MAX_DIMENSION), lower.exponent),
        'FalconerBracket',
        rigorous=False,
        residual_lower=lower.residual,
        residual_upper=upper.residual,
        upper_clamped=clamped,
        envelopes=[e.to_json() for e in envelopes],
    )
