"""
Random finitely generated subgroups, for regression fixtures.
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import numpy as np

from cogrowth.words import alphabet

__all__ = ['random_word',
           'random_subgroup',
           'random_subgroup_pairs']


def random_word(rng, length, rank=2):
    """ Uniform random reduced word of the given length"""
    letters = alphabet(rank)
    word = []
    while len(word) < length:
        x = letters[rng.integers(len(letters))]
        if word and word[-1] == -x:
            continue
        word.append(int(x))
    return tuple(word)


def random_subgroup(rng, rank=2, min_generators=1, max_generators=3, max_length=4):
    """
    Generators of a random subgroup

    Parameters
    ----------

    rng - numpy Generator, e.g. np.random.default_rng(seed)
    rank - number of free generators
    min_generators, max_generators - bounds on the number of generators
    max_length - generator lengths are drawn from 1..max_length

    Returns
    -------

    list of nonempty reduced words
    """
    count = int(rng.integers(min_generators, max_generators + 1))
    return [random_word(rng, int(rng.integers(1, max_length + 1)), rank)
            for _ in range(count)]


def random_subgroup_pairs(seed, count, **kwargs):
    """ count pairs of random subgroups from one seeded generator"""
    rng = np.random.default_rng(seed)
    return [(random_subgroup(rng, **kwargs), random_subgroup(rng, **kwargs))
            for _ in range(count)]
