import pytest

import cogrowth as cg
from cogrowth.words import parse_word


def folded(*texts):
    return cg.fold([parse_word(t) for t in texts])


class TestCosetSandwich(object):
    """ Coset decomposition bounds"""
    def test_rows(self):
        rows = cg.coset_sandwich(folded('a'), 2)
        assert rows[0] == (0, 1, 1, 1)
        assert rows[1] == (1, 5, 5, 13)

    def test_holds(self):
        assert cg.sandwich_check_eq5(folded('a'), 4)
        assert cg.sandwich_check_eq5(folded('aa', 'ab'), 4)
        assert cg.sandwich_check_eq5(folded('abAB'), 3)
        assert cg.sandwich_check_eq5(cg.normal_closure_demo(), 4)
        assert cg.sandwich_check_eq5(cg.from_permutations(cg.both_swap_rep()), 4)


class TestNormality(object):
    """ Submultiplicativity of normal cogrowth"""
    def test_normal_subgroups(self):
        graphs = [cg.normal_closure_demo(), cg.abelianization_demo(),
                  cg.from_permutations(cg.both_swap_rep()), cg.cyclic_quotient_demo(3)]
        for g in graphs:
            for n1 in range(1, 4):
                for n2 in range(4):
                    assert cg.normality_check_eq6(g, n1, n2)

    def test_levels(self):
        with pytest.raises(ValueError):
            cg.normality_check_eq6(cg.normal_closure_demo(), 0, 2)


class TestConjugates(object):
    """ Conjugation shifts cogrowth by twice the conjugator"""
    def test_shift(self):
        assert cg.conjugate_cogrowth_shift(folded('a'), parse_word('b'), 2)
        assert cg.conjugate_cogrowth_shift(folded('aa', 'ab'), parse_word('bA'), 2)

    def test_needs_folded(self):
        with pytest.raises(ValueError):
            cg.conjugate_cogrowth_shift(cg.normal_closure_demo(), parse_word('b'), 2)


class TestTransversals(object):
    """ Nesting and suffix closure of minimal transversals"""
    def test_nested(self):
        assert cg.nested_transversal_check(folded('a'), folded('aa'), 3)
        assert not cg.nested_transversal_check(folded('aa'), folded('a'), 3)

    def test_suffix_closed(self):
        assert not cg.suffix_closed_check(folded('a'), 2)
        assert cg.suffix_closed_check(cg.normal_closure_demo(), 4)
        assert cg.suffix_closed_check(cg.abelianization_demo(), 3)
