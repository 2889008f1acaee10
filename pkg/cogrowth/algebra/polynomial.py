"""
Polynomials over the rationals in the free associative algebra and in the
group algebra of the free group.

Monomials are words. In the free associative algebra on x, y, ... they are
positive words, written with the letters a, b, ...; in the group algebra
they are reduced words and products are freely reduced.

Available methods:

AlgebraMode(kind, rank)
Polynomial(terms, mode)
parse_polynomial(text, mode)
format_polynomial(p)
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import re
from collections import namedtuple
from fractions import Fraction

from cogrowth.utils import WordError
from cogrowth.words import (IDENTITY, alphabet, check_word, format_word, free_group_growth,
                            is_reduced, iter_words, multiply, parse_word, shortlex_key)

__all__ = ['FREE_ASSOCIATIVE',
           'GROUP_ALGEBRA',
           'AlgebraMode',
           'Polynomial',
           'parse_polynomial',
           'format_polynomial']

FREE_ASSOCIATIVE = 'free-assoc'
GROUP_ALGEBRA = 'group-algebra'

_TERM = re.compile(r'^(\d+(?:/\d+)?)?\*?([A-Za-z]*)$')


class AlgebraMode(namedtuple('AlgebraMode', ['kind', 'rank'])):
    """
    Which algebra polynomials live in

    kind - 'free-assoc' or 'group-algebra'
    rank - number of generators
    """
    __slots__ = ()

    def __new__(cls, kind=GROUP_ALGEBRA, rank=2):
        if kind not in (FREE_ASSOCIATIVE, GROUP_ALGEBRA):
            raise ValueError('unknown algebra %r' % (kind,))
        alphabet(rank)
        return super(AlgebraMode, cls).__new__(cls, kind, rank)

    @property
    def is_group(self):
        return self.kind == GROUP_ALGEBRA

    @property
    def letters(self):
        if self.is_group:
            return alphabet(self.rank)
        return tuple(range(1, self.rank + 1))

    def check_monomial(self, w):
        check_word(w, self.rank)
        if self.is_group:
            if not is_reduced(w):
                raise WordError('monomial %s is not reduced' % format_word(w))
        elif any(x < 0 for x in w):
            raise WordError('monomial %s has inverse letters' % format_word(w))

    def product(self, u, v):
        if self.is_group:
            return multiply(u, v)
        return u + v

    def monomials(self, n):
        """ Monomials of length at most n in ShortLex order"""
        if self.is_group:
            return list(iter_words(self.rank, n))
        level = [IDENTITY]
        result = [IDENTITY]
        for _ in range(n):
            level = [w + (x,) for w in level for x in self.letters]
            result.extend(level)
        return result

    def growth(self, n):
        """ Number of monomials of length at most n"""
        if self.is_group:
            return free_group_growth(n, self.rank)
        return sum(self.rank ** i for i in range(n + 1))


class Polynomial(object):
    """
    Finite rational combination of monomials

    Zero coefficients are never stored. The length is the length of the
    longest monomial and the leading monomial is the ShortLex-greatest one.
    """

    def __init__(self, terms=None, mode=None):
        self.mode = mode if mode is not None else AlgebraMode()
        self._terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            self.mode.check_monomial(w)
            c = Fraction(c)
            if c != 0:
                self._terms[w] = c

    @classmethod
    def monomial(cls, w, mode=None, coefficient=1):
        return cls({tuple(w): coefficient}, mode)

    @classmethod
    def constant(cls, c, mode=None):
        return cls({IDENTITY: c}, mode)

    @classmethod
    def _from_clean(cls, terms, mode):
        p = cls(mode=mode)
        p._terms = terms
        return p

    @property
    def terms(self):
        return dict(self._terms)

    def support(self):
        """ Monomials with nonzero coefficient, ShortLex-greatest first"""
        return sorted(self._terms, key=shortlex_key, reverse=True)

    def coefficient(self, w):
        return self._terms.get(tuple(w), Fraction(0))

    def is_zero(self):
        return not self._terms

    @property
    def length(self):
        if not self._terms:
            return 0
        return max(len(w) for w in self._terms)

    def leading_monomial(self):
        if not self._terms:
            raise ValueError('the zero polynomial has no leading monomial')
        return max(self._terms, key=shortlex_key)

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def _check_mode(self, other):
        if self.mode != other.mode:
            raise ValueError('polynomials from different algebras: %r and %r'
                             % (self.mode, other.mode))

    def _combine(self, other, sign):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.mode)
        self._check_mode(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            value = terms.get(w, 0) + sign * c
            if value:
                terms[w] = value
            else:
                terms.pop(w, None)
        return Polynomial._from_clean(terms, self.mode)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return Polynomial._from_clean({w: -c for w, c in self._terms.items()}, self.mode)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return Polynomial(mode=self.mode)
        return Polynomial._from_clean({w: c * v for w, v in self._terms.items()}, self.mode)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_mode(other)
        terms = {}
        for u, c in self._terms.items():
            for v, d in other._terms.items():
                w = self.mode.product(u, v)
                value = terms.get(w, 0) + c * d
                if value:
                    terms[w] = value
                else:
                    terms.pop(w, None)
        return Polynomial._from_clean(terms, self.mode)

    def __rmul__(self, other):
        return self.scale(other)

    def times_monomial(self, w):
        """ Right product p * w by a single monomial"""
        terms = {}
        for u, c in self._terms.items():
            terms[self.mode.product(u, w)] = c
        return Polynomial._from_clean(terms, self.mode)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return self.mode == other.mode and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return 'Polynomial(%r)' % format_polynomial(self)

    def __str__(self):
        return format_polynomial(self)


def _format_coefficient(c):
    if c.denominator == 1:
        return str(c.numerator)
    return '%d/%d' % (c.numerator, c.denominator)


def format_polynomial(p):
    """ Text form with ShortLex-greatest monomial first, e.g. '2*ab + 1' or 'a - 1'"""
    if p.is_zero():
        return '0'
    pieces = []
    for w in p.support():
        c = p.coefficient(w)
        sign = '-' if c < 0 else '+'
        c = abs(c)
        if not w:
            body = _format_coefficient(c)
        elif c == 1:
            body = format_word(w)
        else:
            body = '%s*%s' % (_format_coefficient(c), format_word(w))
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    text = ('-' if first_sign == '-' else '') + first
    for sign, body in pieces[1:]:
        text += ' %s %s' % (sign, body)
    return text


def parse_polynomial(text, mode=None):
    """
    Parse a polynomial such as 'a - 1', '2*ab + 1' or '1/2*aB - b'

    Parameters
    ----------

    text - str - terms [coefficient*]word separated by + or -; a bare
           number is a multiple of the unit
    mode - AlgebraMode - group algebra of rank 2 by default

    Returns
    -------

    Polynomial; group algebra monomials are freely reduced while parsing
    """
    mode = mode if mode is not None else AlgebraMode()
    compact = text.replace('−', '-').replace(' ', '').replace('\t', '')
    if not compact:
        raise ValueError('empty polynomial')
    if compact[0] not in '+-':
        compact = '+' + compact
    result = Polynomial(mode=mode)
    for sign, body in re.findall(r'([+-])([^+-]*)', compact):
        match = _TERM.match(body)
        if not body or match is None:
            raise ValueError('cannot parse term %r in %r' % (sign + body, text))
        try:
            coefficient = Fraction(match.group(1)) if match.group(1) else Fraction(1)
        except ZeroDivisionError:
            raise ValueError('zero denominator in term %r of %r' % (sign + body, text))
        letters = match.group(2)
        if not letters:
            if not match.group(1):
                raise ValueError('cannot parse term %r in %r' % (sign + body, text))
            w = IDENTITY
        elif not mode.is_group and letters != letters.lower():
            raise WordError('inverse letters are not allowed in %r' % text)
        else:
            w = parse_word(letters, mode.rank, reduce=mode.is_group)
        if sign == '-':
            coefficient = -coefficient
        result = result + Polynomial.monomial(w, mode, coefficient)
    return result
