from fractions import Fraction

import pytest

import cogrowth as cg
from cogrowth.algebra import (FREE_ASSOCIATIVE, AlgebraMode, Polynomial, format_polynomial,
                              parse_polynomial)
from cogrowth.words import parse_word

FREE = AlgebraMode(FREE_ASSOCIATIVE)


class TestAlgebraMode(object):
    """ Monomials of the two algebras"""
    def test_kinds(self):
        assert AlgebraMode().is_group
        assert not FREE.is_group
        with pytest.raises(ValueError):
            AlgebraMode('lie')

    def test_monomials(self):
        assert len(AlgebraMode().monomials(2)) == AlgebraMode().growth(2) == 17
        assert FREE.monomials(2) == [(), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]
        assert FREE.growth(3) == 15

    def test_check_monomial(self):
        with pytest.raises(cg.WordError):
            AlgebraMode().check_monomial((1, -1))
        with pytest.raises(cg.WordError):
            FREE.check_monomial((-1,))


class TestArithmetic(object):
    """ Exact rational arithmetic"""
    def test_group_product(self):
        p = parse_polynomial('a - 1') * parse_polynomial('A - 1')
        assert p == parse_polynomial('2 - a - A')
        assert format_polynomial(p) == '-A - a + 2'

    def test_free_product(self):
        p = parse_polynomial('a - 1', FREE) * parse_polynomial('b', FREE)
        assert format_polynomial(p) == 'ab - b'

    def test_cancellation(self):
        p = parse_polynomial('ab - 1/2*b')
        assert (p - p) == 0
        assert (p - p).is_zero()
        assert not (p - p)
        assert len(p) == 2

    def test_scalars(self):
        p = parse_polynomial('a + b')
        assert 2 * p == parse_polynomial('2*a + 2*b')
        assert p.scale(0).is_zero()
        assert (1 - p).coefficient(()) == 1
        assert (p + 1).coefficient(parse_word('a')) == Fraction(1)

    def test_times_monomial(self):
        p = parse_polynomial('a - 1').times_monomial(parse_word('A'))
        assert p == parse_polynomial('1 - A')

    def test_leading(self):
        p = parse_polynomial('3*aB - ab + 1')
        assert p.leading_monomial() == parse_word('aB')
        assert p.leading_coefficient() == 3
        assert p.length == 2
        assert p.support() == [parse_word('aB'), parse_word('ab'), ()]
        with pytest.raises(ValueError):
            Polynomial().leading_monomial()

    def test_modes_do_not_mix(self):
        with pytest.raises(ValueError):
            parse_polynomial('a') + parse_polynomial('a', FREE)


class TestText(object):
    """ Parsing and formatting"""
    def test_format(self):
        for text in ('a - 1', '2*ab + 1', '1/2*aB - b', '-a', '0'):
            assert format_polynomial(parse_polynomial(text)) == text

    def test_reduced_while_parsing(self):
        assert parse_polynomial('aA + 1') == Polynomial.constant(2)
        assert parse_polynomial('abBA') == Polynomial.constant(1)

    def test_unicode_minus(self):
        assert parse_polynomial('b − a') == parse_polynomial('b - a')

    def test_free_letters(self):
        with pytest.raises(cg.WordError):
            parse_polynomial('A', FREE)

    def test_errors(self):
        for text in ('', 'a +', '2x', 'a*b'):
            with pytest.raises(ValueError):
                parse_polynomial(text)

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            parse_polynomial('a - 1/0')
