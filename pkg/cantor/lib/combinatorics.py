"""Cantor circle combinations and the count of their hyperbolic components.

A combination ``(kind; d1, ..., dn)`` records how a Cantor circle map acts on
its two distinguished disks (the kind) and the covering degrees of the ``n``
annuli in between. Valid degree vectors satisfy the module inequality
``1/d1 + ... + 1/dn < 1``. Kind I needs an even ``n``, kinds II and III an odd
``n >= 3``.

Every test of the module inequality is done in exact integer arithmetic.

"""

from fractions import Fraction

from cantor.exception import ValidationException
from cantor.lib.base import Immutable
from cantor.lib.parallel import ordered_map

KINDS = ('I', 'II', 'III')


class InvalidDegrees(ValidationException):
    pass


class ReciprocalSumTooLarge(ValidationException):
    pass


class ParityMismatch(ValidationException):
    pass


class TooShort(ValidationException):
    pass


def reciprocal_sum(degrees):
    return sum((Fraction(1, d) for d in degrees), Fraction(0))


def _below_one(degrees):
    """Whether ``sum(1/d) < 1``, compared on an unreduced common denominator."""
    num, den = 0, 1
    for d in degrees:
        num, den = num * d + den, den * d
    return num < den


def _check_entries(degrees):
    try:
        degrees = tuple(degrees)
    except TypeError:
        raise InvalidDegrees('Degrees must be a sequence of integers')
    if not degrees:
        raise InvalidDegrees('Empty degree vector')
    for d in degrees:
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise InvalidDegrees('Degree %r is not a positive integer' % (d,))
    return degrees


def check_degrees(degrees):
    """Return ``degrees`` as a tuple, or raise :class:`InvalidDegrees`.

    This is the precondition shared by every numerical consumer of a degree
    vector: ``n >= 2``, every degree at least 2 and a reciprocal sum below 1.

    """
    degrees = _check_entries(degrees)
    if len(degrees) < 2:
        raise InvalidDegrees('At least two degrees are needed, got %d' % len(degrees))
    if min(degrees) < 2:
        raise InvalidDegrees('Every degree must be at least 2')
    if not _below_one(degrees):
        raise InvalidDegrees(
            'Reciprocal sum %s of %s is not below 1'
            % (reciprocal_sum(degrees), format_degrees(degrees))
        )
    return degrees


def format_degrees(degrees):
    return ','.join(str(d) for d in degrees)


class Combination(Immutable):
    """A validated combination: a kind and a degree vector.

    Use :func:`validate` to construct one from untrusted input.

    """

    def __init__(self, kind, degrees):
        self.kind = kind
        self.degrees = tuple(degrees)

    def _key(self):
        return (self.kind, self.degrees)

    @property
    def n(self):
        return len(self.degrees)

    @property
    def total_degree(self):
        return sum(self.degrees)

    @property
    def reciprocal_sum(self):
        return reciprocal_sum(self.degrees)

    @property
    def is_palindrome(self):
        return self.degrees == self.degrees[::-1]

    def reversed(self):
        return type(self)(self.kind, self.degrees[::-1])

    def to_json(self):
        return {'kind': self.kind, 'degrees': list(self.degrees)}

    def __repr__(self):
        return '(%s;%s)' % (self.kind, format_degrees(self.degrees))

    @classmethod
    def parse(cls, s):
        """Parse the ``KIND;d1,...,dn`` notation."""
        kind, sep, degrees = s.partition(';')
        if not sep:
            raise InvalidDegrees('Expected KIND;d1,...,dn, got "%s"' % s)
        try:
            degrees = tuple(int(d) for d in degrees.split(','))
        except ValueError:
            raise InvalidDegrees('Bad degree list in "%s"' % s)
        return validate(kind.strip(), degrees)


def validate(kind, degrees):
    """Validate a kind and a degree vector and return a :class:`Combination`."""
    if kind not in KINDS:
        raise InvalidDegrees('Unknown kind "%s", expected one of I, II, III' % kind)
    degrees = _check_entries(degrees)
    n = len(degrees)
    if n < 2:
        raise TooShort('Kind %s needs at least 2 degrees, got %d' % (kind, n))
    # Odd vectors that get past the parity checks have at least 3 degrees.
    if kind == 'I' and n % 2:
        raise ParityMismatch('Kind I needs an even number of degrees, got %d' % n)
    if kind != 'I' and not n % 2:
        raise ParityMismatch(
            'Kind %s needs an odd number of degrees, got %d' % (kind, n)
        )
    if not _below_one(degrees):
        raise ReciprocalSumTooLarge(
            'Reciprocal sum of %s is %s, which is not below 1'
            % (format_degrees(degrees), reciprocal_sum(degrees))
        )
    return Combination(kind, degrees)


class ConjugacyClass(Immutable):
    """A combination up to the reversal identification.

    Kind I classes always have one member. Kinds II and III identify a degree
    vector with its reversal, so their classes have two members unless the
    vector is a palindrome.

    """

    def __init__(self, representative, members):
        self.representative = representative
        self.members = tuple(members)

    def _key(self):
        return (self.representative.kind, self.members)

    def to_json(self):
        d = self.representative.to_json()
        d['members'] = [list(m) for m in self.members]
        return d

    def __repr__(self):
        return 'ConjugacyClass%r' % (self.representative,)


def canonical_class(c):
    if c.kind == 'I' or c.is_palindrome:
        return ConjugacyClass(c, [c.degrees])
    rep, other = sorted([c.degrees, c.degrees[::-1]])
    return ConjugacyClass(Combination(c.kind, rep), [rep, other])


def _max_length(d):
    # (d1 + ... + dn)(1/d1 + ... + 1/dn) >= n^2, so n^2 < d.
    n = 0
    while (n + 1) ** 2 < d:
        n += 1
    return n


def _compositions(remaining, num, den, prefix, max_len):
    """Yield valid completions of ``prefix``.

    ``num/den`` is the reciprocal sum of ``prefix``, kept unreduced. Every
    yielded vector is a composition of the original total into at least two
    parts whose reciprocal sum stays below 1.

    """
    for p in range(2, remaining + 1):
        # num/den + 1/p
        pnum, pden = num * p + den, den * p
        if pnum >= pden:
            continue
        if p == remaining:
            if len(prefix) >= 1:
                yield prefix + (p,)
            continue
        rest = remaining - p
        if len(prefix) + 2 > max_len or rest < 2:
            continue
        # At least one more part is needed, and the cheapest one takes all of rest.
        if pnum * rest + pden >= pden * rest:
            continue
        yield from _compositions(rest, pnum, pden, prefix + (p,), max_len)


def enumerate_degree_vectors(d):
    """Return all valid degree vectors with total ``d``.

    The order is lexicographic on ``(n, d1, ..., dn)``.

    """
    if d < 2:
        raise InvalidDegrees('Total degree must be at least 2, got %d' % d)
    vectors = _compositions(d, 0, 1, (), _max_length(d))
    return sorted(vectors, key=lambda v: (len(v), v))


def enumerate_combinations(d):
    """Return every valid combination of total degree ``d``, grouped by kind."""
    vectors = enumerate_degree_vectors(d)
    even = [v for v in vectors if not len(v) % 2]
    odd = [v for v in vectors if len(v) % 2]
    return (
        [Combination('I', v) for v in even]
        + [Combination('II', v) for v in odd]
        + [Combination('III', v) for v in odd]
    )


class ComponentCount(Immutable):
    """The terms of the hyperbolic component count for one total degree.

    ``even`` counts even-length vectors (one kind I component each), ``odd``
    counts odd-length vectors and ``palindromes`` the odd-length palindromes.
    Kinds II and III each contribute ``(odd + palindromes) / 2`` classes.

    """

    def __init__(self, d, even, odd, palindromes):
        self.d = d
        self.even = even
        self.odd = odd
        self.palindromes = palindromes

    def _key(self):
        return (self.d, self.even, self.odd, self.palindromes)

    @property
    def total(self):
        return self.even + self.odd + self.palindromes

    @property
    def by_kind(self):
        half = (self.odd + self.palindromes) // 2
        return {'I': self.even, 'II': half, 'III': half}

    def to_json(self):
        return {
            'd': self.d,
            'N': self.total,
            'even': self.even,
            'odd': self.odd,
            'palindromes': self.palindromes,
            'by_kind': self.by_kind,
        }


def count_breakdown(d):
    vectors = enumerate_degree_vectors(d)
    odd = [v for v in vectors if len(v) % 2]
    return ComponentCount(
        d,
        even=len(vectors) - len(odd),
        odd=len(odd),
        palindromes=sum(1 for v in odd if v == v[::-1]),
    )


def count_classes(d):
    """Count components by deduplicating conjugacy classes."""
    return len({canonical_class(c) for c in enumerate_combinations(d)})


def count_components(d):
    count = count_breakdown(d).total
    if __debug__:
        classes = count_classes(d)
        assert count == classes, 'N(%d): formula %d, classes %d' % (d, count, classes)
    return count


def count_range(lo, hi, threads=1):
    """Return ``[(d, N(d))]`` for ``lo <= d <= hi`` in increasing order."""
    ds = list(range(lo, hi + 1))
    return list(zip(ds, ordered_map(count_components, ds, threads)))


# (kind, parity of n) -> (rho, case) of the rational family realizing it.
_FAMILY_CASES = {
    ('I', 0): (1, 'a'),
    ('II', 1): (1, 'b'),
    ('III', 1): (0, 'c'),
}


def family_case(c):
    """Return ``(rho, case)`` of the family member realizing combination ``c``.

    Case d (``rho = 0`` with even ``n``) realizes kind I as well, up to the
    conjugacy ``z -> 1/z``; kind I is reported with its literal case a.

    """
    return _FAMILY_CASES[(c.kind, c.n % 2)]
