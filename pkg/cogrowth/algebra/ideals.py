"""
Growth and cogrowth of finitely generated right ideals.

A right ideal I generated by g1, ..., gk is approximated at horizon m by
the span of the products gi * w of length at most m. The number of pivots
of length at most n is a lower bound for dim(I n R^(n)) that increases
with m; the standard monomials (non-pivots) of length at most n give the
matching upper bound for the cogrowth of R/I.

Available methods:

algebra_growth(mode, n)
ideal_basis(mode, generators, m)
ideal_growth(basis, n)
ideal_cogrowth(mode, basis, n)
stabilize(mode, generators, n, m0)
quotient_search(mode, basis, r, n0)
essentiality_report(mode, generators, n, m)
augmentation_ideal(words)
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging
from collections import namedtuple
from fractions import Fraction

from cogrowth.algebra.echelon import DEFAULT_MAX_ROWS, EchelonBasis
from cogrowth.algebra.polynomial import AlgebraMode, GROUP_ALGEBRA, Polynomial, parse_polynomial
from cogrowth.growth import GrowthTable
from cogrowth.utils import HorizonError, WordError, read_lines
from cogrowth.words import IDENTITY, format_word, is_reduced, shortlex_key

__all__ = ['DEFAULT_STABILIZE_BUDGET',
           'SearchResult',
           'EssentialityReport',
           'algebra_growth',
           'admitted_products',
           'ideal_basis',
           'ideal_growth',
           'ideal_table',
           'ideal_cogrowth',
           'cogrowth_table',
           'standard_monomials',
           'is_prefix_closed',
           'stabilize',
           'quotient_search',
           'essentiality_report',
           'augmentation_ideal',
           'read_ideal_file']

logger = logging.getLogger(__name__)

DEFAULT_STABILIZE_BUDGET = 4

SearchResult = namedtuple('SearchResult', ['quotient', 'search_dimension', 'quotient_dimension'])


def algebra_growth(mode, n):
    """ GrowthTable of dim R^(k), k <= n"""
    if n < 0:
        raise ValueError('horizon must be nonnegative, got %d' % n)
    return GrowthTable([mode.growth(k) for k in range(n + 1)])


def _check_generators(mode, generators, m):
    generators = list(generators)
    for g in generators:
        if g.is_zero():
            raise ValueError('zero generator')
        if g.mode != mode:
            raise ValueError('generator %s is not in %r' % (g, mode))
    longest = max([g.length for g in generators] or [0])
    if m < longest:
        raise ValueError('horizon %d shorter than the longest generator (%d)' % (m, longest))
    return generators


def _group_multipliers(mode, g, m):
    """ Reduced words w with l(g w) <= m, by depth-first search

    Once l(w) >= l(g), appending a letter lengthens every monomial of g w
    by one, so such branches are cut as soon as they exceed m."""
    longest = g.length
    found = []
    stack = [IDENTITY]
    while stack:
        w = stack.pop()
        length = g.times_monomial(w).length
        if length <= m:
            found.append(w)
        elif len(w) >= longest:
            continue
        if len(w) >= m + longest:
            continue
        for x in mode.letters:
            if not w or w[-1] != -x:
                stack.append(w + (x,))
    return sorted(found, key=shortlex_key)


def admitted_products(mode, g, m):
    """ The products g * w of length at most m, ordered by w"""
    if mode.is_group:
        multipliers = _group_multipliers(mode, g, m)
    else:
        multipliers = mode.monomials(m - g.length) if g.length <= m else []
    return [g.times_monomial(w) for w in multipliers]


def ideal_basis(mode, generators, m, max_rows=DEFAULT_MAX_ROWS):
    """
    Echelon basis of the right ideal at horizon m

    Parameters
    ----------

    mode - AlgebraMode
    generators - nonzero Polynomials in that algebra
    m - horizon, at least the longest generator
    max_rows - cap on the basis size

    Returns
    -------

    EchelonBasis spanning {g w : l(g w) <= m}
    """
    generators = _check_generators(mode, generators, m)
    basis = EchelonBasis(mode, horizon=m, max_rows=max_rows)
    basis.generators = generators
    for g in generators:
        added = basis.extend(admitted_products(mode, g, m))
        logger.debug('generator %s added %d rows at horizon %d', g, added, m)
    return basis


def _check_horizon(basis, n):
    if n < 0:
        raise ValueError('length must be nonnegative, got %d' % n)
    if n > basis.horizon:
        raise HorizonError('length %d beyond the basis horizon %d' % (n, basis.horizon))


def ideal_growth(basis, n):
    """ Pivots of length at most n: a lower bound for dim(I n R^(n))"""
    _check_horizon(basis, n)
    return int(basis.pivot_counts(n)[n])


def ideal_table(basis, n):
    _check_horizon(basis, n)
    return GrowthTable(basis.pivot_counts(n))


def ideal_cogrowth(mode, basis, n):
    """ dim R^(n) minus the ideal growth: an upper bound for the cogrowth of R/I"""
    _check_horizon(basis, n)
    return mode.growth(n) - ideal_growth(basis, n)


def cogrowth_table(mode, basis, n):
    _check_horizon(basis, n)
    counts = basis.pivot_counts(n)
    return GrowthTable([mode.growth(k) - counts[k] for k in range(n + 1)])


def standard_monomials(basis, n):
    """ Monomials of length at most n that lead no element of the basis span"""
    _check_horizon(basis, n)
    return basis.standard_monomials(n)


def is_prefix_closed(words):
    words = set(words)
    return all(w[:-1] in words for w in words if w)


def stabilize(mode, generators, n, m0, budget=DEFAULT_STABILIZE_BUDGET,
              max_rows=DEFAULT_MAX_ROWS):
    """
    Raise the horizon until the ideal growth at n stops changing

    Parameters
    ----------

    n - length whose ideal growth is probed
    m0 - first horizon tried, at least n
    budget - number of horizon increases allowed

    Returns
    -------

    (m, stable) - stable is True when the ideal growth at n is the same at
    horizons m and m + 1; otherwise m is the last horizon reached
    """
    if m0 < n:
        raise ValueError('starting horizon %d below the probed length %d' % (m0, n))
    generators = list(generators)
    m = m0
    current = ideal_growth(ideal_basis(mode, generators, m, max_rows), n)
    while m < m0 + budget:
        following = ideal_growth(ideal_basis(mode, generators, m + 1, max_rows), n)
        logger.debug('ideal growth at %d: %d at horizon %d, %d at horizon %d',
                     n, current, m, following, m + 1)
        if following == current:
            return m, True
        m, current = m + 1, following
    logger.debug('no stabilisation at length %d within horizon %d', n, m)
    return m, False


def quotient_search(mode, basis, r, n0):
    """
    Look for s != 0 of length at most n0 with r s in the ideal

    Each monomial u of length at most n0 contributes the normal form of
    r u; the first linear dependency among these normal forms gives s.

    Parameters
    ----------

    basis - EchelonBasis of the ideal, horizon at least l(r) + n0
    r - nonzero Polynomial
    n0 - bound on the length of s

    Returns
    -------

    SearchResult(quotient, search_dimension, quotient_dimension); quotient
    is None when no s exists among polynomials of length at most n0, and
    the dimensions are dim R^(n0) and the cogrowth bound at n0 + l(r)
    """
    if r.is_zero():
        raise ValueError('the quotient by zero is the whole algebra')
    if r.length + n0 > basis.horizon:
        raise HorizonError('search needs horizon %d, basis has %d'
                           % (r.length + n0, basis.horizon))
    search_dimension = mode.growth(n0)
    quotient_dimension = ideal_cogrowth(mode, basis, r.length + n0)
    rows = {}
    for u in mode.monomials(n0):
        vector = dict(basis.reduce(r.times_monomial(u))._terms)
        combination = {u: Fraction(1)}
        while True:
            hits = [w for w in vector if w in rows]
            if not hits:
                break
            p = max(hits, key=shortlex_key)
            c = vector[p]
            row, row_combination = rows[p]
            for w, d in row.items():
                value = vector.get(w, 0) - c * d
                if value:
                    vector[w] = value
                else:
                    vector.pop(w, None)
            for w, d in row_combination.items():
                value = combination.get(w, 0) - c * d
                if value:
                    combination[w] = value
                else:
                    combination.pop(w, None)
        if not vector:
            s = Polynomial(combination, mode)
            logger.debug('(I : %s) contains %s', r, s)
            return SearchResult(s, search_dimension, quotient_dimension)
        pivot = max(vector, key=shortlex_key)
        lead = vector[pivot]
        rows[pivot] = ({w: c / lead for w, c in vector.items()},
                       {w: c / lead for w, c in combination.items()})
    logger.debug('(I : %s) has nothing of length <= %d (%d monomials, cogrowth bound %d)',
                 r, n0, search_dimension, quotient_dimension)
    return SearchResult(None, search_dimension, quotient_dimension)


class EssentialityReport(namedtuple('EssentialityReport',
                                    ['n', 'horizon', 'growth', 'ideal', 'cogrowth', 'plausible'])):
    """
    Growth, ideal growth and cogrowth tables with a finite-horizon verdict

    plausible is True when the cogrowth vanishes at n or the ratio of
    cogrowth to growth at n is at most half its value at n // 2. It is
    evidence for the cogrowth being strictly slower than the growth, which
    makes the ideal essential; it is never a proof.
    """
    __slots__ = ()

    @property
    def verdict(self):
        if self.plausible:
            return 'consistent with essential at horizon %d' % self.horizon
        return 'no verdict'

    def ratios(self):
        return [Fraction(c, g) for c, g in zip(self.cogrowth, self.growth)]

    def rows(self):
        return [(k, self.growth[k], self.ideal[k], self.cogrowth[k])
                for k in range(self.n + 1)]

    def to_json(self):
        return {'n': self.n,
                'horizon': self.horizon,
                'growth': list(self.growth),
                'ideal': list(self.ideal),
                'cogrowth': list(self.cogrowth),
                'plausible': self.plausible,
                'verdict': self.verdict}


def essentiality_report(mode, generators, n, m=None, max_rows=DEFAULT_MAX_ROWS):
    """ EssentialityReport of the right ideal up to length n at horizon m (default n)"""
    m = n if m is None else m
    if n > m:
        raise HorizonError('length %d beyond the horizon %d' % (n, m))
    basis = ideal_basis(mode, generators, m, max_rows)
    growth = algebra_growth(mode, n)
    ideal = ideal_table(basis, n)
    cogrowth = cogrowth_table(mode, basis, n)
    if cogrowth[n] == 0:
        plausible = True
    elif n == 0:
        plausible = False
    else:
        ratio = Fraction(cogrowth[n], growth[n])
        half = Fraction(cogrowth[n // 2], growth[n // 2]) / 2
        plausible = ratio <= half
    return EssentialityReport(n, m, growth, ideal, cogrowth, plausible)


def augmentation_ideal(words, rank=2):
    """
    Generators h - 1 of the right ideal spanned by (h - 1) over h in H

    Parameters
    ----------

    words - reduced words generating H; the identity contributes nothing

    Returns
    -------

    list of Polynomials in the group algebra of the given rank
    """
    mode = AlgebraMode(GROUP_ALGEBRA, rank)
    result = []
    for h in words:
        h = tuple(h)
        if not is_reduced(h):
            raise WordError('word %s is not reduced' % format_word(h))
        if not h:
            continue
        result.append(Polynomial.monomial(h, mode) - 1)
    return result


def read_ideal_file(path, mode=None):
    """ Generators listed one polynomial per line, e.g. 'a - 1' or '2*ab + 1'"""
    return [parse_polynomial(line, mode) for line in read_lines(path)]
