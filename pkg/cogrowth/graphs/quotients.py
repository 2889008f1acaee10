"""
Coset graphs of subgroups given through a quotient.

A permutation representation of the free group acts on points on the
right; the coset graph of the stabiliser of the basepoint is the orbit of
the basepoint. Quotient group demos give infinite-index normal subgroups
through a transition oracle on group elements.
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging
import re

from sympy.combinatorics import Permutation

from cogrowth.graphs.coset_graph import CosetGraph
from cogrowth.utils import read_lines

__all__ = ['PermutationRep',
           'from_permutations',
           'from_callback',
           'read_permutation_file',
           'both_swap_rep',
           'normal_closure_demo',
           'abelianization_demo',
           'cyclic_quotient_demo',
           'DEMOS']

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r'\(([^()]*)\)')


def _parse_cycles(text):
    """ Cycles of 1-based points from '(1 2 3)(4 5)'; '()' or 'id' is the identity"""
    text = text.strip()
    if text in ('', 'id', '()'):
        return []
    if _CYCLE.sub('', text).strip():
        raise ValueError('invalid cycle notation %r' % text)
    cycles = []
    for body in _CYCLE.findall(text):
        points = [int(p) for p in body.replace(',', ' ').split()]
        if any(p < 1 for p in points):
            raise ValueError('points are numbered from 1: %r' % text)
        if points:
            cycles.append(points)
    return cycles


class PermutationRep(object):
    """
    One permutation of {1..degree} per free generator, with a basepoint

    Parameters
    ----------

    permutations - list of sympy Permutations on 0..degree-1
    basepoint - 1-based point whose stabiliser is the subgroup
    """

    def __init__(self, permutations, basepoint=1):
        if not permutations:
            raise ValueError('a permutation representation needs generators')
        degree = max(p.size for p in permutations)
        self.permutations = [Permutation(p.array_form, size=degree) for p in permutations]
        self.degree = degree
        if not 1 <= basepoint <= degree:
            raise ValueError('basepoint %d outside 1..%d' % (basepoint, degree))
        self.basepoint = basepoint
        self._inverses = [~p for p in self.permutations]

    @classmethod
    def from_cycles(cls, texts, degree=None, basepoint=1):
        """ Representation from one cycle-notation string per generator"""
        parsed = [_parse_cycles(t) for t in texts]
        largest = max([p for cycles in parsed for c in cycles for p in c] or [1])
        if degree is None:
            degree = largest
        elif degree < largest:
            raise ValueError('degree %d smaller than point %d' % (degree, largest))
        permutations = []
        for cycles in parsed:
            if not cycles:
                permutations.append(Permutation(list(range(degree))))
                continue
            try:
                permutations.append(Permutation([[p - 1 for p in c] for c in cycles],
                                                size=degree))
            except ValueError as err:
                raise ValueError('invalid permutation: %s' % err)
        return cls(permutations, basepoint=basepoint)

    @property
    def rank(self):
        return len(self.permutations)

    def act(self, point, x):
        """ Image of a 0-based point under letter x"""
        perms = self.permutations if x > 0 else self._inverses
        return perms[abs(x) - 1].array_form[point]

    def __repr__(self):
        return 'PermutationRep(%s, basepoint=%d)' % (
            ', '.join(str(p.cyclic_form) for p in self.permutations), self.basepoint)


def from_permutations(rep, max_vertices=None):
    """
    Coset graph of the basepoint stabiliser

    The graph is materialised on the whole orbit, so its vertex count is the
    index of the subgroup.
    """
    kwargs = {} if max_vertices is None else {'max_vertices': max_vertices}
    graph = CosetGraph.from_callback(rep.act, rep.basepoint - 1, rank=rep.rank,
                                     backend='quotient', **kwargs)
    graph.materialize(rep.degree)
    graph.core_size = graph.number_of_vertices()
    logger.debug('permutation graph %r has index %d', rep, graph.core_size)
    return graph


def from_callback(oracle, root_label, rank=2, **kwargs):
    """ Quotient-backend graph lazily materialised from a transition oracle"""
    return CosetGraph.from_callback(oracle, root_label, rank=rank, backend='quotient', **kwargs)


def read_permutation_file(path, basepoint=1):
    return PermutationRep.from_cycles(read_lines(path), basepoint=basepoint)


def both_swap_rep():
    """ a and b both act as (1 2); the stabiliser is the even-length kernel"""
    return PermutationRep.from_cycles(['(1 2)', '(1 2)'])


def _sign(x):
    return 1 if x > 0 else -1


def _z_shift(label, x):
    if abs(x) == 1:
        return label
    return label + _sign(x)


def _z_squared(label, x):
    p, q = label
    if abs(x) == 1:
        return (p + _sign(x), q)
    return (p, q + _sign(x))


def normal_closure_demo(**kwargs):
    """ Normal closure of a: cosets are the integers, a fixes them, b shifts them"""
    return from_callback(_z_shift, 0, **kwargs)


def abelianization_demo(**kwargs):
    """ Commutator subgroup: cosets are the points of Z^2"""
    return from_callback(_z_squared, (0, 0), **kwargs)


def cyclic_quotient_demo(k, **kwargs):
    """ Kernel of the map onto Z/k sending both generators to 1"""
    if k < 1:
        raise ValueError('cyclic quotient needs k >= 1, got %r' % k)

    def shift(label, x):
        return (label + _sign(x)) % k
    return from_callback(shift, 0, **kwargs)


DEMOS = {'z-shift': normal_closure_demo,
         'z2': abelianization_demo,
         'both-swap': lambda **kwargs: from_permutations(both_swap_rep(), **kwargs)}
