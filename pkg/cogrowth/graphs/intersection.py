"""
Intersections of subgroups through the product of their coset graphs.

The coset of H1 n H2 containing g is determined by the pair of cosets
(H1 g, H2 g), so the coset graph of the intersection is the component of
(root, root) in the product graph, with componentwise transitions.

Available methods:

intersect(g1, g2, depth)
intersection_table(g1, g2, n)
prop11_check(g1, g2, n)
sufficient_nontrivial(g1, g2, n)
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging
from collections import deque, namedtuple

from cogrowth.graphs.coset_graph import CosetGraph
from cogrowth.utils import HorizonError
from cogrowth.words import format_word, free_group_growth

__all__ = ['IntersectionVerdict',
           'intersect',
           'intersection_table',
           'prop11_check',
           'sufficient_nontrivial']

logger = logging.getLogger(__name__)

IntersectionVerdict = namedtuple('IntersectionVerdict', ['witnessed', 'level', 'witness'])


def _same_rank(g1, g2):
    if g1.rank != g2.rank:
        raise ValueError('graphs over different ranks: %d and %d' % (g1.rank, g2.rank))


def intersect(g1, g2, depth, max_vertices=None):
    """
    Coset graph of the intersection, materialised to a depth

    Parameters
    ----------

    g1, g2 - CosetGraph of H1 and H2
    depth - radius of the ball around (root, root) to discover

    Returns
    -------

    CosetGraph with backend 'product' whose vertex labels are the pairs of
    component vertices; tracing deeper keeps extending it
    """
    _same_rank(g1, g2)

    def pair_step(pair, x):
        u1 = g1.step(pair[0], x)
        u2 = g2.step(pair[1], x)
        if u1 is None or u2 is None:
            raise HorizonError('component transition undefined at %r on letter %s'
                               % (pair, format_word((x,))))
        return (u1, u2)

    kwargs = {} if max_vertices is None else {'max_vertices': max_vertices}
    product = CosetGraph.from_callback(pair_step, (0, 0), rank=g1.rank,
                                       backend='product', **kwargs)
    product.components = (g1, g2)
    product.materialize(depth)
    logger.debug('product graph has %d pairs within distance %d',
                 product.number_of_vertices(), depth)
    return product


def intersection_table(g1, g2, n):
    """ Rows (n, Gamma1, Gamma2, Gamma_cap, Gamma1 * Gamma2, max(Gamma1, Gamma2))"""
    t1 = g1.cogrowth(n)
    t2 = g2.cogrowth(n)
    cap = intersect(g1, g2, n).cogrowth(n)
    return [(k, t1[k], t2[k], cap[k], t1[k] * t2[k], max(t1[k], t2[k]))
            for k in range(n + 1)]


def prop11_check(g1, g2, n):
    """ max(Gamma1, Gamma2) <= Gamma_cap <= Gamma1 Gamma2 at every level up to n"""
    for k, _, _, cap, product, largest in intersection_table(g1, g2, n):
        if not largest <= cap <= product:
            logger.debug('intersection bounds broken at level %d: %d <= %d <= %d',
                         k, largest, cap, product)
            return False
    return True


def _shortest_loop(g1, g2, horizon):
    """ ShortLex-least nontrivial reduced word tracing (root, root) back to itself"""
    grow = tuple(g.backend != 'folded' for g in (g1, g2))
    start = (0, 0)
    seen = {(start, None)}
    queue = deque([(start, None, ())])
    while queue:
        pair, last, word = queue.popleft()
        if len(word) >= horizon:
            continue
        for x in g1.letters:
            if last is not None and x == -last:
                continue
            u1 = g1.step(pair[0], x, grow=grow[0])
            u2 = g2.step(pair[1], x, grow=grow[1])
            if u1 is None or u2 is None:
                continue
            target = (u1, u2)
            if target == start:
                return word + (x,)
            if (target, x) not in seen:
                seen.add((target, x))
                queue.append((target, x, word + (x,)))
    return None


def sufficient_nontrivial(g1, g2, n, witness_length=None):
    """
    Growth-based test for a nontrivial intersection

    If Gamma1(k) Gamma2(k) < Gamma_G(k) at some k <= n, more elements of
    length at most k exist than pairs of cosets, so two of them share both
    cosets and their quotient lies in H1 n H2.

    Parameters
    ----------

    g1, g2 - CosetGraph
    n - last level tested
    witness_length - bound on the length of the explicit witness searched
                     for in the product graph, 2n by default

    Returns
    -------

    IntersectionVerdict(witnessed, level, witness); witness may be None even
    when witnessed, if no loop is found within the length bound
    """
    _same_rank(g1, g2)
    t1 = g1.cogrowth(n)
    t2 = g2.cogrowth(n)
    level = None
    for k in range(n + 1):
        if t1[k] * t2[k] < free_group_growth(k, g1.rank):
            level = k
            break
    if level is None:
        return IntersectionVerdict(False, None, None)
    if witness_length is None:
        witness_length = 2 * n
    witness = _shortest_loop(g1, g2, witness_length)
    logger.debug('intersection witnessed at level %d, element %s', level,
                 format_word(witness) if witness is not None else 'not found')
    return IntersectionVerdict(True, level, witness)
