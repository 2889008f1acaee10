"""
Fully reduced echelon basis of a space of polynomials, with exact rational
arithmetic.

Every row has leading coefficient 1 at its pivot, the ShortLex-greatest
monomial of the row, and no row contains the pivot of another row. A
column index maps each non-pivot monomial to the rows containing it, so
inserting a row back-substitutes only where the new pivot occurs.
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging

import numpy as np

from cogrowth.algebra.polynomial import Polynomial
from cogrowth.utils import BudgetExceeded, HorizonError
from cogrowth.words import shortlex_key

__all__ = ['DEFAULT_MAX_ROWS',
           'EchelonBasis']

logger = logging.getLogger(__name__)

DEFAULT_MAX_ROWS = 10**5


class EchelonBasis(object):
    """
    Echelon basis of the span of inserted polynomials

    Parameters
    ----------

    mode - AlgebraMode of the polynomials
    horizon - largest product length admitted when the basis was built
    max_rows - BudgetExceeded is raised when a row beyond this would be added
    """

    def __init__(self, mode, horizon=None, max_rows=DEFAULT_MAX_ROWS):
        self.mode = mode
        self.horizon = horizon
        self.max_rows = max_rows
        self.generators = []
        self._rows = {}
        self._columns = {}

    def __len__(self):
        return len(self._rows)

    def __contains__(self, p):
        return self.contains(p)

    def pivots(self):
        """ Pivot monomials, ShortLex-greatest first"""
        return sorted(self._rows, key=shortlex_key, reverse=True)

    def rows(self):
        return [Polynomial._from_clean(dict(self._rows[w]), self.mode) for w in self.pivots()]

    def row(self, pivot):
        return Polynomial._from_clean(dict(self._rows[tuple(pivot)]), self.mode)

    def _reduce_terms(self, terms):
        # rows hold no foreign pivots, so one pass over the pivots present suffices
        result = dict(terms)
        for w in [w for w in terms if w in self._rows]:
            c = result.pop(w, 0)
            if not c:
                continue
            for u, d in self._rows[w].items():
                if u == w:
                    continue
                value = result.get(u, 0) - c * d
                if value:
                    result[u] = value
                else:
                    result.pop(u, None)
        return result

    def reduce(self, p):
        """ Normal form of p: no monomial of the result is a pivot"""
        if p.mode != self.mode:
            raise ValueError('polynomial from %r reduced by a basis of %r' % (p.mode, self.mode))
        return Polynomial._from_clean(self._reduce_terms(p._terms), self.mode)

    def contains(self, p):
        return self.reduce(p).is_zero()

    def _index(self, pivot, terms):
        for u in terms:
            if u != pivot:
                self._columns.setdefault(u, set()).add(pivot)

    def _unindex(self, pivot, terms):
        for u in terms:
            if u != pivot:
                holders = self._columns.get(u)
                if holders is not None:
                    holders.discard(pivot)
                    if not holders:
                        del self._columns[u]

    def insert(self, p):
        """
        Add p to the span

        Returns
        -------

        the new pivot monomial, or None when p already lies in the span
        """
        terms = self._reduce_terms(p._terms)
        if not terms:
            return None
        if len(self._rows) >= self.max_rows:
            raise BudgetExceeded('row cap of %d reached' % self.max_rows,
                                 {'rows': len(self._rows), 'horizon': self.horizon})
        pivot = max(terms, key=shortlex_key)
        lead = terms[pivot]
        if lead != 1:
            terms = {u: c / lead for u, c in terms.items()}
        for q in list(self._columns.get(pivot, ())):
            row = self._rows[q]
            c = row[pivot]
            self._unindex(q, row)
            for u, d in terms.items():
                value = row.get(u, 0) - c * d
                if value:
                    row[u] = value
                else:
                    row.pop(u, None)
            self._index(q, row)
        self._columns.pop(pivot, None)
        self._rows[pivot] = terms
        self._index(pivot, terms)
        return pivot

    def extend(self, polynomials):
        """ Insert each polynomial; returns the number of new rows"""
        added = 0
        for p in polynomials:
            if self.insert(p) is not None:
                added += 1
        return added

    def pivot_counts(self, n):
        """ numpy array whose k-th entry counts pivots of length at most k, k <= n"""
        if self.horizon is not None and n > self.horizon:
            raise HorizonError('length %d beyond the basis horizon %d' % (n, self.horizon))
        lengths = np.array([len(w) for w in self._rows], dtype=int)
        lengths = lengths[lengths <= n]
        return np.cumsum(np.bincount(lengths, minlength=n + 1)).astype(object)

    def standard_monomials(self, n):
        """ Monomials of length at most n that are not pivots, in ShortLex order"""
        if self.horizon is not None and n > self.horizon:
            raise HorizonError('length %d beyond the basis horizon %d' % (n, self.horizon))
        return [w for w in self.mode.monomials(n) if w not in self._rows]

    def check(self):
        """ True when every row is normalised and free of foreign pivots"""
        for pivot, terms in self._rows.items():
            if terms.get(pivot) != 1:
                return False
            if max(terms, key=shortlex_key) != pivot:
                return False
            if any(u in self._rows for u in terms if u != pivot):
                return False
        return True
