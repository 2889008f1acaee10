"""
Free group word arithmetic.

Letters are signed integers: generator i is ``i`` and its inverse is ``-i``.
A word is a tuple of letters; reduced words are the elements of the free
group. The text encoding writes generator 1 as ``a`` and its inverse as
``A``, generator 2 as ``b`` / ``B`` and so on; ``1`` or the empty string is
the identity.

The ShortLex order compares by length first and then letter by letter using
a < A < b < B < ...
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import string
from collections import namedtuple

from cogrowth.utils import WordError

__all__ = ['IDENTITY',
           'CyclicDecomposition',
           'alphabet',
           'letter_index',
           'check_word',
           'is_reduced',
           'reduce_word',
           'invert',
           'multiply',
           'power',
           'cyclic_reduce',
           'shortlex_key',
           'shortlex_compare',
           'sphere',
           'iter_words',
           'enumerate_words',
           'free_group_growth',
           'commutator_witness',
           'parse_word',
           'format_word']

IDENTITY = ()
MAX_RANK = 26

CyclicDecomposition = namedtuple('CyclicDecomposition', ['h1', 'h2'])


def alphabet(rank=2):
    """ Letters of the free group of the given rank in ShortLex order"""
    if rank < 1 or rank > MAX_RANK:
        raise WordError('rank must be between 1 and %d, got %s' % (MAX_RANK, rank))
    letters = []
    for i in range(1, rank + 1):
        letters.extend([i, -i])
    return tuple(letters)


def letter_index(x):
    """ Position of letter x in the ShortLex letter order"""
    return 2 * (abs(x) - 1) + (1 if x < 0 else 0)


def check_word(letters, rank=None):
    """ Raise WordError unless every letter is a nonzero integer within rank"""
    for x in letters:
        if not isinstance(x, int) or x == 0:
            raise WordError('invalid letter %r' % (x,))
        if rank is not None and abs(x) > rank:
            raise WordError('letter %r out of range for rank %d' % (x, rank))


def is_reduced(w):
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1))


def reduce_word(letters, rank=None):
    """
    Freely reduce a sequence of letters

    Parameters
    ----------

    letters - iterable of signed integers
    rank - int - if given, letters must lie in +-1..+-rank

    Returns
    -------

    tuple - the unique reduced word equal to the product of the letters
    """
    letters = tuple(letters)
    check_word(letters, rank)
    stack = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert(w):
    return tuple(-x for x in reversed(w))


def multiply(*words):
    """ Reduced product of reduced words"""
    result = []
    for w in words:
        for x in w:
            if result and result[-1] == -x:
                result.pop()
            else:
                result.append(x)
    return tuple(result)


def power(w, k):
    """ Reduced k-th power of w, negative k allowed"""
    if k < 0:
        w, k = invert(w), -k
    return multiply(*([w] * k))


def cyclic_reduce(g):
    """
    Split a reduced word as g = h1 h2 h1^-1 with h2 cyclically reduced

    Parameters
    ----------

    g - reduced nonempty word

    Returns
    -------

    CyclicDecomposition(h1, h2) - h2 is the shortest word conjugate to g
    """
    if not g:
        raise WordError('cannot cyclically reduce the empty word')
    if not is_reduced(g):
        raise WordError('word %s is not reduced' % format_word(g))
    i, j = 0, len(g) - 1
    while j - i >= 1 and g[i] == -g[j]:
        i += 1
        j -= 1
    return CyclicDecomposition(tuple(g[:i]), tuple(g[i:j + 1]))


def shortlex_key(w):
    return (len(w), tuple(letter_index(x) for x in w))


def shortlex_compare(u, v):
    """ -1, 0 or 1 as u is ShortLex-smaller, equal or greater than v"""
    ku, kv = shortlex_key(u), shortlex_key(v)
    return (ku > kv) - (ku < kv)


def sphere(n, rank=2):
    """ All reduced words of length exactly n, in ShortLex order"""
    letters = alphabet(rank)
    level = [IDENTITY]
    for _ in range(n):
        level = [w + (x,) for w in level for x in letters
                 if not w or w[-1] != -x]
    return level


def iter_words(rank=2, max_length=None):
    """ Generate reduced words in ShortLex order, starting with the identity

    Extending the words of each level, themselves in ShortLex order, by the
    letters in letter order keeps the output sorted."""
    letters = alphabet(rank)
    level = [IDENTITY]
    length = 0
    while True:
        for w in level:
            yield w
        if max_length is not None and length >= max_length:
            return
        level = [w + (x,) for w in level for x in letters
                 if not w or w[-1] != -x]
        length += 1


def enumerate_words(n, rank=2):
    """ The first n reduced words in ShortLex order"""
    if n < 0:
        raise ValueError('cannot enumerate %d words' % n)
    words = []
    if n == 0:
        return words
    for w in iter_words(rank):
        words.append(w)
        if len(words) == n:
            break
    return words


def free_group_growth(n, rank=2):
    """ Number of reduced words of length at most n (closed form)"""
    total = 1
    sphere_size = 2 * rank
    for _ in range(n):
        total += sphere_size
        sphere_size *= 2 * rank - 1
    return total


def commutator_witness(x, y):
    """
    Commutator x y x^-1 y^-1 in reduced form

    For nontrivial x in a normal subgroup H1 and y in a normal subgroup H2
    the commutator lies in both. The empty word means x and y commute, which
    in a free group happens exactly when they are powers of a common element.
    """
    if not x or not y:
        raise WordError('commutator witness needs nonempty words')
    return multiply(x, y, invert(x), invert(y))


def parse_word(text, rank=2, reduce=False):
    """
    Parse the text encoding of a word

    Parameters
    ----------

    text - str - letters a..z for generators, A..Z for inverses, '1' or ''
           for the identity
    rank - int - number of generators allowed
    reduce - bool - reduce the word instead of rejecting unreduced input
    """
    text = text.strip()
    if text in ('', '1'):
        return IDENTITY
    letters = []
    for ch in text:
        if ch in string.ascii_lowercase:
            letters.append(ord(ch) - ord('a') + 1)
        elif ch in string.ascii_uppercase:
            letters.append(-(ord(ch) - ord('A') + 1))
        else:
            raise WordError('invalid character %r in word %r' % (ch, text))
    check_word(letters, rank)
    if reduce:
        return reduce_word(letters)
    word = tuple(letters)
    if not is_reduced(word):
        raise WordError('word %r is not reduced' % text)
    return word


def format_word(w):
    """ Text encoding of a word; the identity is written '1'"""
    if not w:
        return '1'
    return ''.join(chr(ord('a') + x - 1) if x > 0 else chr(ord('A') - x - 1)
                   for x in w)
