"""
Stallings folding of a finitely generated subgroup.

One petal (a closed path through the root) is laid down per generator, and
equally labelled edges leaving a vertex are identified until the graph is
deterministic. Identification uses a union-find table with the smaller
label kept as representative; the finished core is renumbered by ShortLex
breadth first search so that vertex ids do not depend on merge order.
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging
from collections import deque

from cogrowth.graphs.coset_graph import CosetGraph, DEFAULT_MAX_VERTICES
from cogrowth.utils import read_lines
from cogrowth.words import alphabet, format_word, parse_word, reduce_word

__all__ = ['fold',
           'read_subgroup_file']

logger = logging.getLogger(__name__)


class _Folder(object):

    def __init__(self):
        self.labels = []
        self.neighbors = []
        self.add_vertex()

    def add_vertex(self):
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append({})
        return c

    def find(self, c):
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def unify(self, c1, c2):
        to_unify = [(c1, c2)]
        while to_unify:
            c1, c2 = to_unify.pop()
            c1, c2 = self.find(c1), self.find(c2)
            if c1 == c2:
                continue
            c1, c2 = min(c1, c2), max(c1, c2)
            self.labels[c2] = c1
            for x, n2 in self.neighbors[c2].items():
                n1 = self.neighbors[c1].get(x)
                if n1 is None:
                    self.neighbors[c1][x] = n2
                else:
                    to_unify.append((n1, n2))
            self.neighbors[c2] = {}

    def connect(self, v, x, u):
        for a, letter, b in ((v, x, u), (u, -x, v)):
            a, b = self.find(a), self.find(b)
            current = self.neighbors[a].get(letter)
            if current is None:
                self.neighbors[a][letter] = b
            else:
                self.unify(current, b)

    def add_petal(self, w):
        v = 0
        for i, x in enumerate(w):
            u = 0 if i == len(w) - 1 else self.add_vertex()
            self.connect(v, x, u)
            v = u

    def transitions(self, rank):
        """ Resolved transitions renumbered by ShortLex BFS from the root"""
        letters = alphabet(rank)
        number = {self.find(0): 0}
        order = [self.find(0)]
        queue = deque(order)
        while queue:
            c = queue.popleft()
            for x in letters:
                n = self.neighbors[c].get(x)
                if n is None:
                    continue
                n = self.find(n)
                if n not in number:
                    number[n] = len(order)
                    order.append(n)
                    queue.append(n)
        result = []
        for c in order:
            result.append(dict((x, number[self.find(n)])
                               for x, n in self.neighbors[c].items()))
        return result


def fold(generators, rank=2, lazy=True, max_vertices=DEFAULT_MAX_VERTICES):
    """
    Folded core graph of the subgroup generated by the given words

    Parameters
    ----------

    generators - list of words (tuples of signed ints); trivial words are
                 ignored
    rank - number of free generators
    lazy - complete the core to the full Schreier graph on demand

    Returns
    -------

    CosetGraph with backend 'folded'; every generator traces root -> root
    """
    folder = _Folder()
    kept = []
    for g in generators:
        g = reduce_word(g, rank)
        if not g:
            continue
        kept.append(g)
        folder.add_petal(g)
    graph = CosetGraph.from_transitions(folder.transitions(rank), rank=rank,
                                        backend='folded', lazy=lazy,
                                        max_vertices=max_vertices)
    graph.generators = tuple(kept)
    logger.debug('folded %s into %d vertices',
                 ', '.join(format_word(g) for g in kept) or '1', graph.core_size)
    return graph


def read_subgroup_file(path, rank=2):
    """ Generators listed one word per line, e.g. 'aa' or 'abAB'"""
    return [parse_word(line, rank, reduce=True) for line in read_lines(path)]
