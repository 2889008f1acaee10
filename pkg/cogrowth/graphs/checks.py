"""
Inequalities between growth, cogrowth and subgroup growth.

Each check evaluates an inequality that always holds and returns False when
it is violated on the computed tables, which signals a bug.

Available methods:

sandwich_check_eq5(g, n)
normality_check_eq6(g, n1, n2)
conjugate_cogrowth_shift(g, w, n)
nested_transversal_check(g1, g2, n)
suffix_closed_check(g, n)
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging

from cogrowth.graphs.folding import fold
from cogrowth.words import free_group_growth, invert, multiply

__all__ = ['coset_sandwich',
           'sandwich_check_eq5',
           'normality_check_eq6',
           'conjugate_cogrowth_shift',
           'nested_transversal_check',
           'suffix_closed_check']

logger = logging.getLogger(__name__)


def coset_sandwich(g, n):
    """
    Rows (k, lower, Gamma_G(k), upper) of the coset decomposition, k <= n

    Every element of length at most k is t h with t a minimal coset
    representative of length i <= k and l(h) <= k + i; conversely t h has
    length at most k whenever l(h) <= k - i.
    """
    gamma = g.cogrowth(n).increments()
    inside = g.subgroup_growth(2 * n)
    rows = []
    for k in range(n + 1):
        lower = sum(gamma[i] * inside[k - i] for i in range(k + 1))
        upper = sum(gamma[i] * inside[k + i] for i in range(k + 1))
        rows.append((k, lower, free_group_growth(k, g.rank), upper))
    return rows


def sandwich_check_eq5(g, n):
    """ Coset decomposition sandwich at every level up to n"""
    for k, lower, total, upper in coset_sandwich(g, n):
        if not lower <= total <= upper:
            logger.debug('sandwich broken at level %d: %d <= %d <= %d', k, lower, total, upper)
            return False
    return True


def normality_check_eq6(g, n1, n2):
    """
    Gamma(n1 + n2) <= Gamma(n1 - 1) + gamma(n1) Gamma(n2) for a normal subgroup

    The caller asserts normality; quotient backends are normal when the
    oracle acts by a group.
    """
    if n1 < 1 or n2 < 0:
        raise ValueError('need n1 >= 1 and n2 >= 0, got (%d, %d)' % (n1, n2))
    table = g.cogrowth(n1 + n2)
    gamma = table.increments()
    return table[n1 + n2] <= table[n1 - 1] + gamma[n1] * table[n2]


def conjugate_cogrowth_shift(g, w, n):
    """
    Cogrowth of the conjugate w^-1 H w is dominated by the shifted cogrowth of H

    Parameters
    ----------

    g - folded CosetGraph of H
    w - reduced word
    n - last level compared

    Returns
    -------

    True iff Gamma_{G/H^w}(k) <= Gamma_{G/H}(k + 2 l(w)) for every k <= n
    """
    if g.backend != 'folded':
        raise ValueError('conjugation needs a folded graph, got %s' % g.backend)
    conjugate = fold([multiply(invert(w), h, w) for h in g.generators], rank=g.rank)
    shifted = conjugate.cogrowth(n)
    original = g.cogrowth(n + 2 * len(w))
    return all(shifted[k] <= original[k + 2 * len(w)] for k in range(n + 1))


def nested_transversal_check(g1, g2, n):
    """ For H2 <= H1 the minimal transversal of H1 lies inside that of H2"""
    outer, _ = g1.minimal_transversal(n)
    inner, _ = g2.minimal_transversal(n)
    return set(outer.words) <= set(inner.words)


def suffix_closed_check(g, n):
    """ Every suffix of a minimal representative is minimal; holds for normal H"""
    transversal, _ = g.minimal_transversal(n)
    words = set(transversal.words)
    return all(w[i:] in words for w in words for i in range(1, len(w)))
