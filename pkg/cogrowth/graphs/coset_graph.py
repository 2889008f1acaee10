"""
Schreier coset graphs of subgroups of a free group.

A coset graph is a partial deterministic involutive automaton over the
letters +-1..+-rank. The root (vertex 0) is the coset H itself, and a reduced
word lies in H exactly when it labels a path from the root back to the root.

Four backends share the interface:

folded - the Stallings core of a finitely generated subgroup; with lazy
         completion, undefined slots sprout fresh hanging-tree vertices
quotient - transitions supplied by an oracle on labels, materialised on
           demand (permutation representations, quotient group demos)
construction - a frozen graph exported by the essential subgroup builder;
               queries deeper than ``safe_horizon`` are refused
product - pairs of vertices of two graphs, see cogrowth.graphs.intersection
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging
from collections import defaultdict, deque, namedtuple

import networkx as nx

from cogrowth.growth import GrowthTable
from cogrowth.utils import BudgetExceeded, HorizonError, InvolutionError
from cogrowth.words import IDENTITY, alphabet, format_word, invert, multiply, shortlex_key

__all__ = ['CosetGraph',
           'Trace',
           'Transversal',
           'BACKENDS']

logger = logging.getLogger(__name__)

BACKENDS = ('folded', 'quotient', 'construction', 'product')
DEFAULT_MAX_VERTICES = 10 ** 6

class Trace(namedtuple('Trace', ['vertex', 'remaining'])):
    """ End vertex of a trace, or the vertex where it got stuck and the unread suffix"""
    __slots__ = ()

    @property
    def stuck(self):
        return len(self.remaining) > 0


class Transversal(namedtuple('Transversal', ['words', 'level_counts', 'vertex_of'])):
    """ ShortLex-minimal Schreier transversal in BFS order"""
    __slots__ = ()

    def __contains__(self, w):
        return w in self.vertex_of


class CosetGraph(object):
    """
    Partial deterministic involutive automaton with root 0

    Parameters
    ----------

    rank - number of free generators
    backend - one of BACKENDS
    lazy - sprout hanging-tree vertices on undefined slots (folded only)
    safe_horizon - depth beyond which queries raise HorizonError
    oracle - callable (label, letter) -> label for oracle backed graphs
    root_label - label of the root vertex when an oracle is given
    max_vertices - vertex cap; exceeding it raises BudgetExceeded
    """

    def __init__(self, rank=2, backend='folded', lazy=False, safe_horizon=None,
                 oracle=None, root_label=None, max_vertices=DEFAULT_MAX_VERTICES):
        if backend not in BACKENDS:
            raise ValueError('unknown backend %r' % (backend,))
        if max_vertices < 1:
            raise ValueError('vertex cap must be positive, got %r' % max_vertices)
        self.rank = rank
        self.letters = alphabet(rank)
        self.backend = backend
        self.lazy = lazy
        self.safe_horizon = safe_horizon
        self.max_vertices = max_vertices
        self.generators = ()
        self.components = None
        self.core_size = 1
        self._succ = [{}]
        self._oracle = oracle
        if oracle is not None:
            self._labels = [root_label]
            self._vertex_of_label = {root_label: 0}
        else:
            self._labels = None
            self._vertex_of_label = None

    @classmethod
    def from_transitions(cls, transitions, rank=2, backend='folded', **kwargs):
        """ Graph from a list of {letter: target} dicts, vertex 0 being the root"""
        graph = cls(rank=rank, backend=backend, **kwargs)
        graph._succ = [dict(t) for t in transitions] or [{}]
        graph.core_size = len(graph._succ)
        graph.check_involution()
        return graph

    @classmethod
    def from_callback(cls, oracle, root_label, rank=2, backend='quotient', **kwargs):
        """
        Lazily materialised graph of a transition oracle

        Every discovered edge is checked for involution: the oracle must send
        the target back to the source under the inverse letter.
        """
        return cls(rank=rank, backend=backend, oracle=oracle,
                   root_label=root_label, **kwargs)

    def __len__(self):
        return len(self._succ)

    def number_of_vertices(self):
        return len(self._succ)

    def label_of(self, v):
        if self._labels is None:
            return v
        return self._labels[v]

    def vertex_of_label(self, label):
        if self._vertex_of_label is None:
            raise ValueError('graph has no vertex labels')
        return self._vertex_of_label.get(label)

    def transitions(self, v):
        return dict(self._succ[v])

    def _add_vertex(self, label=None):
        if len(self._succ) >= self.max_vertices:
            raise BudgetExceeded('vertex cap %d reached' % self.max_vertices,
                                 {'vertices': len(self._succ)})
        self._succ.append({})
        if self._labels is not None:
            self._labels.append(label)
            self._vertex_of_label[label] = len(self._succ) - 1
        return len(self._succ) - 1

    def _link(self, v, x, u):
        self._succ[v][x] = u
        self._succ[u][-x] = v

    def _call_oracle(self, v, x):
        label = self._labels[v]
        target = self._oracle(label, x)
        back = self._oracle(target, -x)
        if back != label:
            raise InvolutionError('oracle breaks involution on letter %s' % format_word((x,)),
                                  (label, x, target))
        u = self._vertex_of_label.get(target)
        if u is None:
            u = self._add_vertex(label=target)
        elif self._succ[u].get(-x, v) != v:
            raise InvolutionError('oracle breaks determinism on letter %s' % format_word((-x,)),
                                  (target, -x, self._labels[self._succ[u][-x]]))
        self._link(v, x, u)
        return u

    def step(self, v, x, grow=True):
        """ Target of letter x at vertex v, None when undefined"""
        u = self._succ[v].get(x)
        if u is not None or not grow:
            return u
        if self._oracle is not None:
            return self._call_oracle(v, x)
        if self.lazy:
            u = self._add_vertex()
            self._link(v, x, u)
            return u
        return None

    def trace(self, w, start=0, grow=True):
        """
        Follow the letters of w from a vertex

        Returns
        -------

        Trace(vertex, remaining) - remaining is empty when the whole word was
        read; otherwise vertex is where the trace got stuck
        """
        v = start
        for i, x in enumerate(w):
            u = self.step(v, x, grow=grow)
            if u is None:
                return Trace(v, tuple(w[i:]))
            v = u
        return Trace(v, IDENTITY)

    def contains(self, w):
        """ True iff the reduced word w lies in the subgroup"""
        if self.backend == 'folded':
            # a reduced word leaving the core never returns to the root
            end = self.trace(w, grow=False)
            return not end.stuck and end.vertex == 0
        end = self.trace(w)
        if end.stuck:
            raise HorizonError('trace of %s undefined at vertex %d with %s unread'
                               % (format_word(w), end.vertex, format_word(end.remaining)))
        return end.vertex == 0

    def _bfs(self, radius=None, grow=True, strict=True):
        """
        ShortLex breadth first search from the root

        Vertices at distance ``radius`` are discovered but not expanded. With
        ``strict`` an undefined slot inside the ball raises HorizonError.
        """
        reps = {0: IDENTITY}
        dist = {0: 0}
        parent = {}
        order = [0]
        queue = deque([0])
        while queue:
            v = queue.popleft()
            d = dist[v]
            if radius is not None and d >= radius:
                continue
            for x in self.letters:
                u = self.step(v, x, grow=grow)
                if u is None:
                    if strict:
                        raise HorizonError('transition (%d, %s) undefined at distance %d'
                                           % (v, format_word((x,)), d))
                    continue
                if u not in dist:
                    dist[u] = d + 1
                    reps[u] = reps[v] + (x,)
                    parent[u] = (v, x)
                    order.append(u)
                    queue.append(u)
        return order, reps, dist, parent

    def open_radius(self):
        """
        Distance from the root to the nearest vertex with an undefined slot

        Balls of this radius are answered without touching an undefined
        slot. None when every discovered vertex is complete.
        """
        order, _, dist, _ = self._bfs(grow=False, strict=False)
        open_dist = [dist[v] for v in order if len(self._succ[v]) < len(self.letters)]
        return min(open_dist) if open_dist else None

    def _check_depth(self, n):
        if n < 0:
            raise ValueError('depth must be nonnegative, got %d' % n)
        if self.safe_horizon is not None and n > self.safe_horizon:
            raise HorizonError('depth %d exceeds the safe horizon %d' % (n, self.safe_horizon))

    def materialize(self, depth):
        """ Discover every vertex within distance depth of the root"""
        self._check_depth(depth)
        self._bfs(depth)
        return self

    def minimal_transversal(self, n):
        """
        ShortLex-minimal Schreier transversal up to length n

        Returns
        -------

        (Transversal, GrowthTable) - the table is the cogrowth Gamma_{G/H}(0..n)
        """
        self._check_depth(n)
        order, reps, dist, _ = self._bfs(n)
        counts = [0] * (n + 1)
        for v in order:
            counts[dist[v]] += 1
        words = [reps[v] for v in order]
        vertex_of = dict((reps[v], v) for v in order)
        logger.debug('%s graph: %d cosets within distance %d', self.backend, len(order), n)
        return Transversal(words, tuple(counts), vertex_of), GrowthTable.from_increments(counts)

    def cogrowth(self, n):
        return self.minimal_transversal(n)[1]

    def distances(self, radius):
        return self._bfs(radius)[2]

    def subgroup_growth(self, n):
        """
        Number of elements of H of length at most n, Gamma^{(G)}_H(0..n)

        Counts reduced root-to-root paths by dynamic programming over
        (vertex, last letter) states.
        """
        self._check_depth(n)
        folded = self.backend == 'folded'
        dist = None if folded else self.distances(n // 2)
        counts = [1] + [0] * n
        states = {(0, None): 1}
        for i in range(1, n + 1):
            remaining = n - i
            following = defaultdict(int)
            for (v, last), c in states.items():
                for x in self.letters:
                    if last is not None and x == -last:
                        continue
                    u = self.step(v, x, grow=not folded)
                    if u is None:
                        if folded:
                            continue
                        raise HorizonError('transition (%d, %s) undefined while counting loops'
                                           % (v, format_word((x,))))
                    if folded and u >= self.core_size:
                        continue
                    if dist is not None and (u not in dist or dist[u] > remaining):
                        continue
                    following[(u, x)] += c
            counts[i] = sum(c for (u, _), c in following.items() if u == 0)
            states = following
        return GrowthTable.from_increments(counts)

    def nielsen_schreier_basis(self, depth=None):
        """
        Free basis of H read off the ShortLex BFS spanning tree

        Parameters
        ----------

        depth - radius of the ball searched for chords; ignored for folded
                graphs, whose core is finite

        Returns
        -------

        list of reduced words rep(v) x rep(u)^-1, one per positive-letter
        edge (v, x, u) outside the spanning tree, in ShortLex order
        """
        if self.backend == 'folded':
            order, reps, dist, parent = self._bfs(grow=False, strict=False)
            order = [v for v in order if v < self.core_size]
        else:
            if depth is None:
                raise ValueError('a depth is required for %s graphs' % self.backend)
            self._check_depth(depth)
            order, reps, dist, parent = self._bfs(depth)
        inside = set(order)
        basis = []
        for v in order:
            for x in self.letters:
                if x < 0:
                    continue
                u = self._succ[v].get(x)
                if u is None or u not in inside:
                    continue
                if parent.get(u) == (v, x) or parent.get(v) == (u, -x):
                    continue
                basis.append(multiply(reps[v], (x,), invert(reps[u])))
        basis.sort(key=shortlex_key)
        return basis

    def check_involution(self):
        """ Full scan of delta(v, x) = u <=> delta(u, x^-1) = v"""
        for v, succ in enumerate(self._succ):
            for x, u in succ.items():
                if abs(x) > self.rank or x == 0:
                    raise InvolutionError('letter out of range', (v, x, u))
                if self._succ[u].get(-x) != v:
                    raise InvolutionError('transition without inverse', (v, x, u))
        return True

    def edges(self):
        """ Positive-letter transitions (v, x, u); inverses are implied"""
        for v, succ in enumerate(self._succ):
            for x in sorted(succ):
                if x > 0:
                    yield v, x, succ[x]

    def to_networkx(self):
        """ NetworkX MultiDiGraph with one edge per positive-letter transition"""
        G = nx.MultiDiGraph()
        G.add_nodes_from(range(len(self._succ)))
        for v, x, u in self.edges():
            G.add_edge(v, u, key=x, label=format_word((x,)))
        return G

    def write_edges(self, fh):
        """ Edge list dump, one 'v x u' line per positive-letter transition"""
        for v, x, u in self.edges():
            fh.write('%d %s %d\n' % (v, format_word((x,)), u))

    def __repr__(self):
        return 'CosetGraph(backend=%s, rank=%d, vertices=%d)' % (
            self.backend, self.rank, len(self._succ))
