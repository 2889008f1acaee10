import io
import os

import pytest
from sympy.combinatorics import Permutation

import cogrowth as cg
from cogrowth.words import IDENTITY, invert, iter_words, multiply, parse_word

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__))))), 'fixtures')
SUBGROUPS = ('a', 'b', 'aa', 'aa_ab', 'commutator')
PERMUTATIONS = ('swap', 'cycle3')
BALL = list(iter_words(2, max_length=6))


def words(*texts):
    return [parse_word(t) for t in texts]


def products(generators, factors=6):
    """ Reduced products of at most factors generators and inverses"""
    letters = list(generators) + [invert(g) for g in generators]
    found = layer = {IDENTITY}
    for _ in range(factors):
        layer = set(multiply(w, g) for w in layer for g in letters)
        found = found | layer
    return found


def stabilised(rep, w):
    """ True iff the permutation of w fixes the basepoint"""
    perm = Permutation(list(range(rep.degree)))
    for x in w:
        p = rep.permutations[abs(x) - 1]
        perm = perm * (p if x > 0 else ~p)
    return perm(rep.basepoint - 1) == rep.basepoint - 1


def counts(members, n=6):
    return [sum(1 for w in members if len(w) <= k) for k in range(n + 1)]


class TestMembership(object):
    """ Tracing words through coset graphs"""
    def test_folded(self):
        g = cg.fold(words('aa', 'ab'))
        assert g.contains(parse_word('abAA'))
        assert g.contains(parse_word('Ba'))
        assert g.contains(())
        assert not g.contains(parse_word('b'))
        assert not g.contains(parse_word('abb'))

    def test_quotient(self):
        g = cg.from_permutations(cg.both_swap_rep())
        assert g.contains(parse_word('aB'))
        assert not g.contains(parse_word('aBa'))

    def test_stuck_trace(self):
        g = cg.fold(words('a'), lazy=False)
        end = g.trace(parse_word('ab'))
        assert end.stuck
        assert end.vertex == 0
        assert end.remaining == (2,)
        assert not g.trace(parse_word('aaa')).stuck


class TestCogrowth(object):
    """ Cogrowth tables from ShortLex BFS"""
    def test_cyclic(self):
        assert cg.fold(words('a')).cogrowth(6) == [3 ** n for n in range(7)]

    def test_two_generators(self):
        assert cg.fold(words('aa', 'ab')).cogrowth(2) == (1, 3, 7)

    def test_whole_group(self):
        assert cg.fold(words('a', 'b')).cogrowth(4) == (1, 1, 1, 1, 1)

    def test_trivial_subgroup(self):
        assert cg.fold([]).cogrowth(3) == (1, 5, 17, 53)

    def test_normal_closure(self):
        assert cg.normal_closure_demo().cogrowth(8) == [2 * n + 1 for n in range(9)]

    def test_commutator_subgroup(self):
        assert cg.abelianization_demo().cogrowth(3) == (1, 5, 13, 25)

    def test_transversal(self):
        transversal, table = cg.fold(words('aa', 'ab')).minimal_transversal(2)
        assert transversal.words == words('1', 'a', 'b', 'aB', 'ba', 'bA', 'bb')
        assert transversal.level_counts == (1, 2, 4)
        assert parse_word('aB') in transversal
        assert parse_word('A') not in transversal
        assert table == (1, 3, 7)

    def test_prefix_closed(self):
        transversal, _ = cg.abelianization_demo().minimal_transversal(4)
        reps = set(transversal.words)
        assert all(w[:-1] in reps for w in reps if w)


class TestSubgroupGrowth(object):
    """ Counting elements of H by reduced root loops"""
    def test_cyclic(self):
        assert cg.fold(words('a')).subgroup_growth(5) == [2 * n + 1 for n in range(6)]

    def test_two_generators(self):
        assert cg.fold(words('aa', 'ab')).subgroup_growth(2) == (1, 1, 7)

    def test_quotient(self):
        # even-length words: 1 + 12 + 12 * 9
        g = cg.from_permutations(cg.both_swap_rep())
        assert g.subgroup_growth(4) == (1, 1, 13, 13, 121)

    def test_normal_closure(self):
        # words with b-exponent sum zero
        assert cg.normal_closure_demo().subgroup_growth(3) == (1, 3, 5, 11)


class TestNielsenSchreier(object):
    """ Free bases read off the spanning tree"""
    def test_folded(self):
        assert cg.fold(words('aa', 'ab')).nielsen_schreier_basis() == words('aa', 'ab')

    def test_commutator(self):
        assert cg.fold(words('abAB')).nielsen_schreier_basis() == words('baBA')

    def test_finite_index(self):
        g = cg.from_permutations(cg.both_swap_rep())
        assert g.nielsen_schreier_basis(2) == words('aa', 'ab', 'bA')

    def test_depth_required(self):
        with pytest.raises(ValueError):
            cg.normal_closure_demo().nielsen_schreier_basis()

    def test_refold(self):
        g = cg.PermutationRep.from_cycles(['(1 2 3)', '(1 3)'])
        graph = cg.from_permutations(g)
        basis = graph.nielsen_schreier_basis(3)
        assert len(basis) == 4
        assert cg.fold(basis).cogrowth(5) == graph.cogrowth(5)


class TestGraphErrors(object):
    """ Involution, horizon and budget errors"""
    def test_missing_inverse(self):
        with pytest.raises(cg.InvolutionError):
            cg.CosetGraph.from_transitions([{1: 0}])

    def test_oracle_involution(self):
        g = cg.from_callback(lambda label, x: label + 1, 0)
        with pytest.raises(cg.InvolutionError):
            g.cogrowth(1)

    def test_safe_horizon(self):
        g = cg.CosetGraph.from_transitions([{1: 0, -1: 0, 2: 0, -2: 0}],
                                           backend='construction', safe_horizon=1)
        assert g.cogrowth(1) == (1, 1)
        with pytest.raises(cg.HorizonError):
            g.cogrowth(2)

    def test_undefined_slot(self):
        g = cg.CosetGraph.from_transitions([{1: 0, -1: 0}], backend='construction')
        with pytest.raises(cg.HorizonError):
            g.cogrowth(1)

    def test_budget(self):
        with pytest.raises(cg.BudgetExceeded):
            cg.fold(words('a'), max_vertices=3).cogrowth(2)

    def test_unknown_backend(self):
        with pytest.raises(ValueError):
            cg.CosetGraph(backend='dense')


class TestExport(object):
    """ Edge lists and NetworkX conversion"""
    def test_edges(self):
        g = cg.fold(words('aa', 'ab'))
        fh = io.StringIO()
        g.write_edges(fh)
        assert fh.getvalue() == '0 a 1\n1 a 0\n1 b 0\n'

    def test_networkx(self):
        G = cg.fold(words('aa', 'ab')).to_networkx()
        assert G.number_of_nodes() == 2
        assert G.number_of_edges() == 3
        assert G.has_edge(1, 0, key=2)

    def test_involution_scan(self):
        g = cg.abelianization_demo()
        g.materialize(3)
        assert g.check_involution()


class TestBruteForce(object):
    """ Graph answers against enumeration of the ball of radius 6"""
    def test_membership(self):
        # the fixture generators are Nielsen reduced: an element of length
        # n is a product of at most n of them
        for name in SUBGROUPS:
            generators = cg.read_subgroup_file(os.path.join(FIXTURES, name + '.sub'))
            members = products(generators)
            graph = cg.fold(generators)
            for w in BALL:
                assert graph.contains(w) == (w in members), (name, w)

    def test_subgroup_growth_folded(self):
        for name in SUBGROUPS:
            generators = cg.read_subgroup_file(os.path.join(FIXTURES, name + '.sub'))
            members = [w for w in products(generators) if len(w) <= 6]
            assert cg.fold(generators).subgroup_growth(6) == counts(members), name

    def test_subgroup_growth_permutations(self):
        for name in PERMUTATIONS:
            rep = cg.read_permutation_file(os.path.join(FIXTURES, name + '.perm'))
            members = [w for w in BALL if stabilised(rep, w)]
            graph = cg.from_permutations(rep)
            assert graph.subgroup_growth(6) == counts(members), name
            assert all(graph.contains(w) == stabilised(rep, w) for w in BALL)
