"""
Growth tables and the CG class of target functions.

A growth table holds the cumulative counts Gamma(0..N) of a set with a
length function. Asymptotic comparisons are replaced by finite-horizon
witnesses with an explicit constant C: a witness says the inequality holds
up to the horizon, never that it holds asymptotically.

Available methods:

partial_sums(f, n)
preorder_witness(g1, g2, C)
equivalence_witness(g1, g2, C)
strict_witness(g1, g2, C)
family(kind, param)
parse_family(text)
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import csv
import json
import math
from fractions import Fraction

import numpy as np

from cogrowth.utils import CGViolation

__all__ = ['GrowthTable',
           'CGFunction',
           'partial_sums',
           'preorder_witness',
           'equivalence_witness',
           'strict_witness',
           'family',
           'parse_family',
           'write_tables_csv']

# prefix length sampled to bound the increment ratio of the intermediate family
RATIO_SAMPLE = 1024


class GrowthTable(object):
    """ Cumulative counts Gamma(0..N), stored exactly as a numpy object array"""

    def __init__(self, values):
        values = np.array([int(v) for v in values], dtype=object)
        if len(values) == 0:
            raise ValueError('a growth table needs at least Gamma(0)')
        if len(values) > 1 and np.any(np.diff(values) < 0):
            raise ValueError('growth table must be nondecreasing: %r' % list(values))
        self._values = values

    @classmethod
    def from_increments(cls, increments):
        return cls(np.cumsum(np.array([int(f) for f in increments], dtype=object)))

    @property
    def values(self):
        return tuple(int(v) for v in self._values)

    @property
    def horizon(self):
        return len(self._values) - 1

    def array(self):
        return self._values.copy()

    def increments(self):
        """ gamma(i) = Gamma(i) - Gamma(i-1), with gamma(0) = Gamma(0)"""
        if len(self._values) == 1:
            return (int(self._values[0]),)
        return (int(self._values[0]),) + tuple(int(v) for v in np.diff(self._values))

    def truncate(self, n):
        if n > self.horizon:
            raise ValueError('cannot truncate horizon %d table to %d' % (self.horizon, n))
        return GrowthTable(self._values[:n + 1])

    def __getitem__(self, n):
        if isinstance(n, slice):
            return tuple(int(v) for v in self._values[n])
        if n < 0 or n > self.horizon:
            raise IndexError('level %d outside horizon %d' % (n, self.horizon))
        return int(self._values[n])

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, GrowthTable):
            return self.values == other.values
        return self.values == tuple(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return 'GrowthTable(%r)' % (list(self.values),)

    def rows(self):
        """ Rows (n, Gamma(n), gamma(n))"""
        return [(n, v, g) for n, (v, g) in
                enumerate(zip(self.values, self.increments()))]

    def to_json(self):
        return {'horizon': self.horizon, 'values': list(self.values)}

    def write_csv(self, fh):
        writer = csv.writer(fh, lineterminator='\n')
        writer.writerow(['n', 'Gamma', 'gamma'])
        writer.writerows(self.rows())

    def write_json(self, fh):
        json.dump(self.to_json(), fh, sort_keys=True)
        fh.write('\n')


def write_tables_csv(fh, columns):
    """
    Write several tables side by side

    Parameters
    ----------

    fh - writable text file
    columns - list of (name, sequence) pairs; all sequences are cut to the
              shortest one
    """
    names = [name for name, _ in columns]
    seqs = [list(seq) for _, seq in columns]
    n = min(len(s) for s in seqs)
    writer = csv.writer(fh, lineterminator='\n')
    writer.writerow(['n'] + names)
    for i in range(n):
        writer.writerow([i] + [s[i] for s in seqs])


class CGFunction(object):
    """
    A target function alpha in the CG class, given by its increment stream

    Parameters
    ----------

    increments - callable returning a fresh iterator over f_0, f_1, ...
                 each call must restart the stream so that consumers never
                 share a cursor
    ratio - positive rational d with f_{i+1} <= d f_i for every i
    cutoff - index of the last positive increment, None when unbounded
    name - label used in reports
    """

    def __init__(self, increments, ratio, cutoff=None, name='custom'):
        ratio = Fraction(ratio)
        if ratio <= 0:
            raise ValueError('ratio bound must be positive, got %s' % ratio)
        if cutoff is not None and cutoff < 0:
            raise ValueError('cutoff must be nonnegative, got %s' % cutoff)
        self._increments = increments
        self.ratio = ratio
        self.cutoff = cutoff
        self.name = name

    @classmethod
    def from_increments(cls, values, name=None):
        """ Bounded function from an explicit finite increment list"""
        values = [int(f) for f in values]
        if not values:
            raise ValueError('empty increment list')
        cutoff = max(i for i, f in enumerate(values) if f > 0) if any(values) else 0
        ratio = Fraction(1)
        for i in range(len(values) - 1):
            if values[i] > 0:
                ratio = max(ratio, Fraction(values[i + 1], values[i]))

        def stream():
            for f in values:
                yield f
            while True:
                yield 0
        label = name or 'seq:' + ','.join(str(f) for f in values)
        return cls(stream, ratio, cutoff=cutoff, name=label)

    @property
    def bounded(self):
        return self.cutoff is not None

    def stream(self):
        return iter(self._increments())

    def prefix(self, n):
        """ Validated increments f_0..f_n"""
        values = []
        previous = None
        for i, f in enumerate(self.stream()):
            if i > n:
                break
            if not isinstance(f, (int, np.integer)) or f < 0:
                raise CGViolation('increment %r is not a nonnegative integer' % (f,), i)
            f = int(f)
            if i == 0 and f != 1:
                raise CGViolation('f_0 must be 1, got %d' % f, i)
            if self.cutoff is None or i <= self.cutoff:
                if f < 1:
                    raise CGViolation('increment must be positive before the cutoff', i)
            elif f != 0:
                raise CGViolation('increment must vanish after the cutoff', i)
            if previous is not None and f > self.ratio * previous:
                raise CGViolation('ratio bound f_{i+1} <= %s f_i broken' % self.ratio, i)
            values.append(f)
            previous = f
        if len(values) <= n:
            raise CGViolation('increment stream ended early', len(values))
        return values

    def alpha(self, n):
        return sum(self.prefix(n))

    def limit(self):
        """ Eventual value of alpha for a bounded function"""
        if not self.bounded:
            raise ValueError('%s is unbounded' % self.name)
        return self.alpha(self.cutoff)

    def __repr__(self):
        return 'CGFunction(%s, d=%s, cutoff=%s)' % (self.name, self.ratio, self.cutoff)


def partial_sums(f, n):
    """ Growth table alpha(0..n) of a CG function"""
    if n < 0:
        raise ValueError('horizon must be nonnegative, got %d' % n)
    return GrowthTable.from_increments(f.prefix(n))


def _checked_pair(g1, g2, C):
    if C < 1 or int(C) != C:
        raise ValueError('scaling constant must be a positive integer, got %r' % C)
    if len(g1) == 0 or len(g2) == 0:
        raise ValueError('empty checkable range')


def preorder_witness(g1, g2, C):
    """
    Finite-horizon witness for g1 <= g2 up to scaling

    Checks Gamma1(n) <= Gamma2(C n) for every n with n within the horizon of
    g1 and C n within the horizon of g2.
    """
    _checked_pair(g1, g2, C)
    C = int(C)
    last = min(g1.horizon, g2.horizon // C)
    lhs = g1.array()[:last + 1]
    rhs = g2.array()[np.arange(last + 1) * C]
    return bool(np.all(lhs <= rhs))


def equivalence_witness(g1, g2, C):
    return preorder_witness(g1, g2, C) and preorder_witness(g2, g1, C)


def strict_witness(g1, g2, C):
    """ g1 <= g2 witnessed with C while g2 <= g1 fails with the same C"""
    return preorder_witness(g1, g2, C) and not preorder_witness(g2, g1, C)


def _polynomial(k):
    if k < 1 or int(k) != k:
        raise ValueError('polynomial degree must be a positive integer, got %r' % k)
    k = int(k)

    def stream():
        yield 1
        i = 1
        while True:
            yield max(1, i ** k - (i - 1) ** k)
            i += 1
    return CGFunction(stream, max(1, 2 ** k - 1), name='poly:%d' % k)


def _exponential(base):
    base = Fraction(base)
    if base <= 1:
        raise ValueError('exponential base must exceed 1, got %s' % base)

    def stream():
        value = Fraction(1)
        while True:
            yield max(1, math.floor(value))
            value *= base
    # floor(x) >= x/2 for x >= 1 gives the ratio bound 2b for fractional bases
    ratio = base if base.denominator == 1 else 2 * base
    return CGFunction(stream, ratio, name='exp:%s' % base)


def _intermediate(beta):
    beta = float(beta)
    if not 0 < beta < 1:
        raise ValueError('intermediate exponent must lie in (0, 1), got %r' % beta)

    def target(i):
        return int(math.floor(math.exp(i ** beta) + 0.5))

    def stream():
        yield 1
        i = 1
        while True:
            yield max(1, target(i) - target(i - 1))
            i += 1

    sample_size = min(RATIO_SAMPLE, int(700 ** (1.0 / beta)))
    sample = []
    for f in stream():
        sample.append(f)
        if len(sample) > sample_size:
            break
    observed = max(Fraction(b, a) for a, b in zip(sample, sample[1:]))
    ratio = max(Fraction(3), Fraction(math.ceil(observed)))
    return CGFunction(stream, ratio, name='int:%s' % beta)


def _finite(r):
    if r < 1 or int(r) != r:
        raise ValueError('finite family needs a positive integer, got %r' % r)
    r = int(r)

    def stream():
        for _ in range(r):
            yield 1
        while True:
            yield 0
    return CGFunction(stream, 1, cutoff=r - 1, name='fin:%d' % r)


_FAMILIES = {'polynomial': _polynomial,
             'exponential': _exponential,
             'intermediate': _intermediate,
             'finite': _finite}


def family(kind, param):
    """
    Named families of CG functions

    Parameters
    ----------

    kind - 'polynomial' (degree k >= 1), 'exponential' (base > 1),
           'intermediate' (0 < beta < 1) or 'finite' (limit r >= 1)
    param - the family parameter

    Returns
    -------

    CGFunction - polynomial k has alpha(n) = n^k + 1, exponential b has
    f_i = b^i, intermediate beta follows round(exp(n^beta)), finite r has
    r unit increments and then zeros
    """
    try:
        builder = _FAMILIES[kind]
    except KeyError:
        raise ValueError('unknown family %r' % (kind,))
    return builder(param)


_SHORT_NAMES = {'poly': ('polynomial', int),
                'exp': ('exponential', Fraction),
                'int': ('intermediate', float),
                'fin': ('finite', int)}


def parse_family(text):
    """ Parse 'poly:k', 'exp:b', 'int:beta', 'fin:r' or 'seq:f0,f1,...'"""
    kind, _, param = text.partition(':')
    if not param:
        raise ValueError('family string %r needs a parameter' % text)
    if kind == 'seq':
        return CGFunction.from_increments([int(p) for p in param.split(',')])
    if kind not in _SHORT_NAMES:
        raise ValueError('unknown family %r' % kind)
    name, convert = _SHORT_NAMES[kind]
    return family(name, convert(param))
