"""
Essential subgroups of F_2 with prescribed cogrowth.

The builder grows a Schreier transversal tree T together with a partial
coset function pi, alternating two kinds of sections:

g-sections add tree levels greedily, as fast as the target function alpha
allows, and close pi on the interior by walking backwards along the letter
(opposite travel);

e-sections take the next element g of the ShortLex enumeration and make
some power of g a member of H, either because travelling with powers of g
already returns to the root, or by growing one path with positive and one
with negative powers of the cyclic core of g and tying them with a chord.

pi is only ever extended, never changed, so everything read from a state
stays valid as the construction continues.

Available methods:

new(alpha)
finite_index_fallback(alpha)
run_g_section(state, target_depth)
opposite_travel(state, g, x)
separate_paths(state, period, positive, negative, tag)
run_e_section(state, element=None)
run_until(state, elements, min_depth)
export(state)
greedy_depth(state)
sandwich_report(state, n, C=None)
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import itertools
import logging
from collections import namedtuple

import networkx as nx

from cogrowth.graphs.coset_graph import CosetGraph
from cogrowth.graphs.quotients import PermutationRep, from_permutations
from cogrowth.growth import GrowthTable, partial_sums
from cogrowth.utils import BudgetExceeded, CheckFailure, HorizonError, InvolutionError
from cogrowth.words import (alphabet, cyclic_reduce, format_word, invert, iter_words,
                            power, shortlex_key)

__all__ = ['ConstructionState',
           'EssentialityCertificate',
           'Section',
           'SandwichReport',
           'new',
           'finite_index_fallback',
           'run_g_section',
           'opposite_travel',
           'separate_paths',
           'run_e_section',
           'certify',
           'run_until',
           'export',
           'replay',
           'schreier_generators',
           'check_invariants',
           'greedy_depth',
           'sandwich_report']

logger = logging.getLogger(__name__)

RANK = 2
LETTERS = alphabet(RANK)
DEFAULT_MAX_VERTICES = 10 ** 6
DEFAULT_ESTIMATE_POWERS = 3

Section = namedtuple('Section', ['kind', 'index', 'start_depth', 'end_depth', 'vertices'])


class EssentialityCertificate(namedtuple('EssentialityCertificate',
                                         ['g', 'k', 'r', 's', 'status'])):
    """
    Witness that g^k lies in H

    status is 'travel' when powers of g already closed up, and 'tie' when
    the two-path gadget was built; then k = r + s + 1.
    """
    __slots__ = ()

    def to_json(self):
        return {'g': format_word(self.g), 'k': self.k, 'r': self.r, 's': self.s,
                'status': self.status}


class ConstructionState(object):
    """
    Tree T, coset function pi and bookkeeping of one construction

    The tree is a NetworkX DiGraph whose nodes carry the attributes
    'word', 'depth', 'letter' (incoming edge label) and 'section'. pi is a
    list of {letter: vertex} dicts containing tree edges in both directions
    and the chords added later. Vertex 0 is the root.
    """

    def __init__(self, alpha, cap_c, max_vertices=DEFAULT_MAX_VERTICES,
                 estimate_powers=DEFAULT_ESTIMATE_POWERS):
        self.alpha = alpha
        self.cap_c = cap_c
        self.max_vertices = max_vertices
        self.estimate_powers = estimate_powers
        self.tree = nx.DiGraph()
        self.tree.add_node(0, word=(), depth=0, letter=None, section='root')
        self.pi = [{}]
        self.levels = [[0]]
        self.interior_depth = 0
        self.frontier_depth = 0
        self.schedule = []
        self.certificates = []
        self.cursor = 0
        self.longest_walk = 0
        self._elements = itertools.islice(iter_words(RANK), 1, None)
        self._pending = None
        self._alpha_values = []

    def number_of_vertices(self):
        return len(self.pi)

    def word(self, v):
        return self.tree.nodes[v]['word']

    def depth(self, v):
        return self.tree.nodes[v]['depth']

    def alpha_value(self, n):
        if n >= len(self._alpha_values):
            self._alpha_values = list(partial_sums(self.alpha, max(n, 2 * len(self._alpha_values))))
        return self._alpha_values[n]

    def tree_count(self, n):
        """ Gamma_T(n), vertices of depth at most n"""
        return sum(len(level) for level in self.levels[:n + 1])

    def tree_table(self, n):
        counts = [len(self.levels[i]) if i < len(self.levels) else 0 for i in range(n + 1)]
        return GrowthTable.from_increments(counts)

    def peek_element(self):
        if self._pending is None:
            self._pending = next(self._elements)
        return self._pending

    def next_element(self):
        g = self.peek_element()
        self._pending = None
        self.cursor += 1
        return g

    def progress(self):
        return {'certificates': len(self.certificates),
                'vertices': len(self.pi),
                'interior_depth': self.interior_depth,
                'frontier_depth': self.frontier_depth,
                'cursor': self.cursor}

    def _section_index(self, kind):
        return sum(1 for s in self.schedule if s.kind == kind) + 1

    def add_child(self, v, x, section):
        """ New tree vertex v x; the slot must be undefined"""
        if x in self.pi[v]:
            raise RuntimeError('slot (%d, %s) already defined' % (v, format_word((x,))))
        if len(self.pi) >= self.max_vertices:
            raise BudgetExceeded('vertex cap %d reached' % self.max_vertices, self.progress())
        u = len(self.pi)
        self.pi.append({})
        self.pi[v][x] = u
        self.pi[u][-x] = v
        depth = self.depth(v) + 1
        self.tree.add_node(u, word=self.word(v) + (x,), depth=depth, letter=x, section=section)
        self.tree.add_edge(v, u, letter=x)
        if depth == len(self.levels):
            self.levels.append([])
        self.levels[depth].append(u)
        self.frontier_depth = max(self.frontier_depth, depth)
        return u

    def __repr__(self):
        return 'ConstructionState(%s, vertices=%d, interior=%d, frontier=%d, certificates=%d)' % (
            self.alpha.name, len(self.pi), self.interior_depth, self.frontier_depth,
            len(self.certificates))


def new(alpha, max_vertices=DEFAULT_MAX_VERTICES, estimate_powers=DEFAULT_ESTIMATE_POWERS):
    """
    Fresh construction for an unbounded CG function

    Parameters
    ----------

    alpha - CGFunction with no cutoff
    max_vertices - cap on the number of tree vertices
    estimate_powers - powers of the cyclic core budgeted per e-section

    Returns
    -------

    ConstructionState with the root only; cap_c is the least positive c
    with 2^c >= d
    """
    if alpha.bounded:
        raise ValueError('%s is bounded; use finite_index_fallback' % alpha.name)
    alpha.prefix(1)
    cap_c = 1
    while 2 ** cap_c < alpha.ratio:
        cap_c += 1
    return ConstructionState(alpha, cap_c, max_vertices=max_vertices,
                             estimate_powers=estimate_powers)


def finite_index_fallback(alpha):
    """
    Finite index subgroup whose cogrowth is eventually the limit k of alpha

    x acts as a k-cycle and y trivially; H is the stabiliser of point 1.
    """
    if not alpha.bounded:
        raise ValueError('%s is unbounded; use new' % alpha.name)
    k = alpha.limit()
    cycle = '(%s)' % ' '.join(str(i) for i in range(1, k + 1)) if k > 1 else '()'
    return from_permutations(PermutationRep.from_cycles([cycle, '()'], degree=k))


def opposite_travel(state, g, x):
    """
    Define pi(g, x) by walking backwards along x from g

    The walk follows h -> pi(h, x^-1) as long as it is defined; its endpoint
    h becomes pi(g, x), which closes the x-path through g into a cycle.
    """
    if x in state.pi[g]:
        raise ValueError('pi(%d, %s) is already defined' % (g, format_word((x,))))
    h = g
    steps = 0
    while -x in state.pi[h]:
        h = state.pi[h][-x]
        steps += 1
        if h == g or steps > len(state.pi):
            raise RuntimeError('opposite travel from %d on %s cycled' % (g, format_word((x,))))
    state.pi[g][x] = h
    state.pi[h][-x] = g
    state.longest_walk = max(state.longest_walk, steps)
    return h


def _candidates(state, depth, strict):
    parents = sorted(state.levels[depth], key=lambda v: shortlex_key(state.word(v)))
    for v in parents:
        incoming = state.tree.nodes[v]['letter']
        for x in LETTERS:
            if x in state.pi[v]:
                continue
            if strict and incoming is not None and x == incoming:
                continue
            yield v, x


def run_g_section(state, target_depth):
    """
    Grow T greedily to target_depth and close pi below target_depth - 1

    Levels above the interior are filled in ShortLex order of the parents
    until Gamma_T(i) reaches alpha(i) or no slot is left. Non-root vertices
    never get a child with their own incoming letter. A target that is not
    deeper than the frontier leaves the state unchanged.
    """
    if target_depth <= state.frontier_depth:
        return state
    index = state._section_index('g')
    tag = 'g%d' % index
    start_depth = state.interior_depth
    before = len(state.pi)
    for i in range(start_depth + 1, target_depth + 1):
        need = state.alpha_value(i) - state.tree_count(i)
        added = 0
        if i - 1 < len(state.levels):
            for v, x in list(_candidates(state, i - 1, strict=True)):
                if added >= need:
                    break
                state.add_child(v, x, tag)
                added += 1
        if i >= len(state.levels) or not state.levels[i]:
            for v, x in _candidates(state, i - 1, strict=False):
                logger.debug('level %d only reachable by repeating a letter', i)
                state.add_child(v, x, tag)
                break
            else:
                raise RuntimeError('tree cannot grow past depth %d' % (i - 1))
    for depth in range(start_depth, target_depth - 1):
        for v in sorted(state.levels[depth], key=lambda u: shortlex_key(state.word(u))):
            for x in LETTERS:
                if x not in state.pi[v]:
                    opposite_travel(state, v, x)
    state.interior_depth = max(state.interior_depth, target_depth - 1)
    state.schedule.append(Section('g', index, start_depth, target_depth, len(state.pi) - before))
    logger.debug('g-section %d: depth %d -> %d, %d vertices', index, start_depth,
                 target_depth, len(state.pi))
    return state


def _travel(state, start, w):
    """ Read-only trace; returns (vertex, letters consumed)"""
    v = start
    for i, x in enumerate(w):
        u = state.pi[v].get(x)
        if u is None:
            return v, i
        v = u
    return v, len(w)


def _travel_powers(state, start, period):
    """
    Travel with powers of period from start

    Returns ('returned', k, None, None) when start is reached again after k
    powers, otherwise ('stuck', completed powers, vertex, letters consumed
    in the current power).
    """
    v = start
    for k in range(1, len(state.pi) + 2):
        end, consumed = _travel(state, v, period)
        if consumed < len(period):
            return 'stuck', k - 1, end, consumed
        v = end
        if v == start:
            return 'returned', k, None, None
    raise RuntimeError('powers of %s never returned nor stuck' % format_word(period))


def _append_path(state, v, letters, tag):
    created = []
    for x in letters:
        v = state.add_child(v, x, tag)
        created.append(v)
    return v, created


def _extend(state, start, period, tag):
    """ Travel with powers of period, then append until a fresh power boundary"""
    outcome, done, v, consumed = _travel_powers(state, start, period)
    if outcome == 'returned':
        return outcome, done, None, []
    letters = list(period[consumed:])
    powers = done + 1
    if len(letters) < len(period):
        letters += list(period)
        powers += 1
    end, created = _append_path(state, v, letters, tag)
    return outcome, powers, end, created


def separate_paths(state, period, positive, negative, tag):
    """
    Extend both appended paths by whole periods until they are apart

    positive and negative are (endpoint, powers, created vertices) of the
    paths grown with powers of period and of its inverse. The paths are
    apart when they share no vertex, their endpoints differ and the tie
    slot period[0] of the positive endpoint is free.

    Returns
    -------

    (u1, r, u2, s) - endpoints and power counts after the extension
    """
    u1, r, created1 = positive
    u2, s, created2 = negative
    created1, created2 = list(created1), list(created2)
    x = period[0]
    while set(created1) & set(created2) or u1 == u2 or x in state.pi[u1]:
        logger.debug('extending the paths of %s until they separate', format_word(period))
        outcome, more, end, created = _extend(state, u1, period, tag)
        if outcome == 'returned':
            raise RuntimeError('powers of %s closed up at a path endpoint' % format_word(period))
        u1, r = end, r + more
        created1 += created
        outcome, more, end, created = _extend(state, u2, invert(period), tag)
        if outcome == 'returned':
            raise RuntimeError('powers of %s closed up at a path endpoint'
                               % format_word(invert(period)))
        u2, s = end, s + more
        created2 += created
    return u1, r, u2, s


def _certify(state, g, k, r, s, status):
    end, consumed = _travel(state, 0, power(g, k))
    if consumed < len(power(g, k)) or end != 0:
        raise RuntimeError('certificate (%s, %d) does not replay' % (format_word(g), k))
    certificate = EssentialityCertificate(g, k, r, s, status)
    state.certificates.append(certificate)
    return certificate


def _travel_certificate(state, g):
    outcome, k, _, _ = _travel_powers(state, 0, g)
    if outcome == 'returned':
        return k
    return None


def _estimate(state, g):
    h1, h2 = cyclic_reduce(g)
    return len(h1) + state.estimate_powers * len(h2) + len(h2)


def run_e_section(state, element=None):
    """
    Make a power of the next enumerated element (or of element) lie in H

    Returns
    -------

    EssentialityCertificate - status 'travel' if powers of g already close
    up at the root (or powers of the cyclic core at pi(h1)), status 'tie'
    after growing the positive and negative paths and adding the chord
    """
    g = state.next_element() if element is None else element
    if not g:
        raise ValueError('the identity needs no certificate')
    index = state._section_index('e')
    tag = 'e%d' % index
    start_depth = state.interior_depth
    before = len(state.pi)

    k = _travel_certificate(state, g)
    if k is not None:
        certificate = _certify(state, g, k, 0, 0, 'travel')
    else:
        h1, h2 = cyclic_reduce(g)
        v, consumed = _travel(state, 0, h1)
        c, _ = _append_path(state, v, h1[consumed:], tag)
        outcome, r, u1, positive = _extend(state, c, h2, tag)
        if outcome == 'returned':
            certificate = _certify(state, g, r, 0, 0, 'travel')
        else:
            outcome, s, u2, negative = _extend(state, c, invert(h2), tag)
            if outcome == 'returned':
                certificate = _certify(state, g, s, 0, 0, 'travel')
            else:
                u1, r, u2, s = separate_paths(state, h2, (u1, r, positive), (u2, s, negative), tag)
                x, w = h2[0], h2[1:]
                z, _ = _append_path(state, u2, invert(w), tag)
                if -x in state.pi[z]:
                    raise RuntimeError('tie endpoint of %s is occupied' % format_word(g))
                state.pi[u1][x] = z
                state.pi[z][-x] = u1
                certificate = _certify(state, g, r + s + 1, r, s, 'tie')
    end_depth = max([start_depth] + [state.depth(v) for v in range(before, len(state.pi))])
    state.schedule.append(Section('e', index, start_depth, end_depth, len(state.pi) - before))
    logger.debug('e-section %d: %s^%d (%s), %d new vertices', index, format_word(g),
                 certificate.k, certificate.status, len(state.pi) - before)
    return certificate


def certify(state, g):
    """ Run the sections needed for one given element, outside the enumeration"""
    if _travel_certificate(state, g) is None:
        run_g_section(state, max(state.frontier_depth + 1,
                                 state.interior_depth + _estimate(state, g)))
    return run_e_section(state, element=g)


def run_until(state, elements, min_depth):
    """
    Alternate sections until enough certificates exist and T is deep enough

    Before an element that powers of itself do not certify, a g-section is
    run at least as deep as the estimated depth of its e-section. Running
    out of vertices raises BudgetExceeded with the progress made; the state
    keeps everything built so far.
    """
    try:
        while len(state.certificates) < elements:
            g = state.peek_element()
            if _travel_certificate(state, g) is None:
                run_g_section(state, max(state.frontier_depth + 1,
                                         state.interior_depth + _estimate(state, g)))
            run_e_section(state)
        if min_depth > state.frontier_depth:
            run_g_section(state, min_depth)
    except BudgetExceeded as err:
        err.progress = state.progress()
        logger.debug('construction stopped by the vertex cap: %r', err.progress)
        raise
    return state


def export(state):
    """
    Frozen construction-backend graph

    The safe horizon is the distance from the root to the nearest vertex
    with an undefined slot: every ball of that radius, and every word of
    that length, is decided by the slots already defined. Since l(pi(g)) <=
    2 l(g), it is at least half the interior depth.
    """
    graph = CosetGraph.from_transitions(state.pi, rank=RANK, backend='construction')
    graph.safe_horizon = graph.open_radius()
    graph.generators = tuple(c.g for c in state.certificates)
    return graph


def replay(graph, certificate):
    return graph.contains(power(certificate.g, certificate.k))


def schreier_generators(state, depth):
    """ Free generators g x pi(g x)^-1 of H seen within the given depth"""
    return export(state).nielsen_schreier_basis(depth)


def check_invariants(state):
    """
    Full scan of the structural invariants

    Raises InvolutionError when pi(pi(g x) x^-1) = g fails and CheckFailure
    for broken tree, interior or frontier conditions.
    """
    for v, succ in enumerate(state.pi):
        for x, u in succ.items():
            if state.pi[u].get(-x) != v:
                raise InvolutionError('Schreier identity broken', (v, x, u))
    for v in state.tree.nodes:
        word = state.word(v)
        if v != 0:
            parent = next(iter(state.tree.predecessors(v)))
            if state.word(parent) + (state.tree.nodes[v]['letter'],) != word:
                raise CheckFailure('tree word of %d is not its parent word extended' % v)
        if any(word[i] == -word[i + 1] for i in range(len(word) - 1)):
            raise CheckFailure('tree word %s is not reduced' % format_word(word))
        if state.depth(v) < state.interior_depth and len(state.pi[v]) != len(LETTERS):
            raise CheckFailure('interior vertex %d has undefined slots' % v)
        if state.depth(v) == state.frontier_depth and len(state.pi[v]) == len(LETTERS):
            raise CheckFailure('frontier vertex %d has no undefined slot' % v)
    return True


class SandwichReport(namedtuple('SandwichReport',
                                ['n', 'C', 'alpha', 'tree', 'cogrowth', 'lower', 'greedy_depth',
                                 'checks'])):
    """ Tables and verdicts of the growth sandwich at horizon n"""
    __slots__ = ()

    @property
    def passed(self):
        return all(self.checks.values())

    def rows(self):
        """ Rows (k, alpha(k), Gamma_T(k), Gamma_{G/H}(k), alpha(k // C), alpha(2k))"""
        return [(k, self.alpha[k], self.tree[k], self.cogrowth[k], self.lower[k],
                 self.alpha[2 * k]) for k in range(self.n + 1)]


def greedy_depth(state):
    """ Deepest level below every vertex appended by an e-section"""
    depths = [data['depth'] for _, data in state.tree.nodes(data=True)
              if data['section'].startswith('e')]
    return min(depths) - 1 if depths else state.frontier_depth


def sandwich_report(state, n, C=None):
    """
    Compare alpha, the tree growth and the cogrowth of the exported graph

    Checks, for every k <= n:

    Gamma_T(k) <= alpha(k), on the levels filled by g-sections alone
    Gamma_T(k) <= alpha(2k)
    alpha(k // C) <= Gamma_T(k), with C = 2 cap_c + 2 by default
    Gamma_T(k) <= Gamma_{G/H}(k) <= Gamma_T(2k)
    depth(v) <= 2 dist(root, v) for every vertex within distance n, the
    vertex form of l(pi(g)) <= 2 l(g)

    Tie paths of e-sections may add vertices on levels that are already
    full, so the first bound stops at greedy_depth.
    """
    if n < 0:
        raise ValueError('horizon must be nonnegative, got %d' % n)
    if 2 * n > state.interior_depth:
        raise HorizonError('sandwich at %d needs interior depth %d, have %d'
                           % (n, 2 * n, state.interior_depth))
    if C is None:
        C = 2 * state.cap_c + 2
    graph = export(state)
    alpha = GrowthTable([state.alpha_value(k) for k in range(2 * n + 1)])
    tree = state.tree_table(2 * n)
    cogrowth = graph.cogrowth(n)
    dist = graph.distances(n)
    lower = [alpha[k // C] for k in range(n + 1)]
    greedy = min(n, greedy_depth(state))
    checks = {
        'greedy_bound': all(tree[k] <= alpha[k] for k in range(greedy + 1)),
        'doubled_bound': all(tree[k] <= alpha[2 * k] for k in range(n + 1)),
        'lower_bound': all(lower[k] <= tree[k] for k in range(n + 1)),
        'tree_below_cogrowth': all(tree[k] <= cogrowth[k] for k in range(n + 1)),
        'cogrowth_below_doubled_tree': all(cogrowth[k] <= tree[2 * k] for k in range(n + 1)),
        'length_bound': all(state.depth(v) <= 2 * d for v, d in dist.items()),
    }
    return SandwichReport(n, C, alpha, tree, cogrowth, lower, greedy, checks)
