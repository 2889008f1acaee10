import pytest

import cogrowth as cg
from cogrowth.words import parse_word


def words(*texts):
    return [parse_word(t) for t in texts]


class TestFold(object):
    """ Stallings folding of generator petals"""
    def test_no_folding(self):
        g = cg.fold(words('aba', 'bab'))
        assert g.core_size == 5
        assert g.contains(parse_word('ababab'))
        assert not g.contains(parse_word('ab'))

    def test_petals_merge(self):
        g = cg.fold(words('ab', 'aB'))
        assert g.core_size == 2
        assert g.contains(parse_word('abbA'))

    def test_redundant_generators(self):
        g = cg.fold(words('a', 'aa', 'AAA'))
        assert g.core_size == 1
        assert g.generators == tuple(words('a', 'aa', 'AAA'))

    def test_order_independent(self):
        g1 = cg.fold(words('aa', 'ab', 'bA'))
        g2 = cg.fold(words('bA', 'ab', 'aa'))
        assert g1.core_size == g2.core_size == 2
        assert ([g1.transitions(v) for v in range(2)] ==
                [g2.transitions(v) for v in range(2)])

    def test_trivial_words_skipped(self):
        g = cg.fold([(1, -1), ()])
        assert g.generators == ()
        assert g.core_size == 1

    def test_unreduced_input(self):
        assert cg.fold([(1, 2, -2)]).generators == (parse_word('a'),)

    def test_higher_rank(self):
        assert cg.fold([(3,)], rank=3).cogrowth(1) == (1, 5)

    def test_letter_out_of_rank(self):
        with pytest.raises(cg.WordError):
            cg.fold(words('a') + [(3,)])

    def test_lazy_completion(self):
        g = cg.fold(words('aa'))
        assert g.core_size == 2
        g.cogrowth(2)
        assert g.number_of_vertices() > 2
        assert g.core_size == 2
        assert g.check_involution()

    def test_finite_index_core(self):
        g = cg.fold(words('aa', 'ab', 'bA'), lazy=False)
        assert g.cogrowth(4) == (1, 2, 2, 2, 2)


class TestSubgroupFiles(object):
    """ Reading generators from text"""
    def test_read(self, tmp_path):
        path = tmp_path / 'h.sub'
        path.write_text('# generators\naa\nabBa\n')
        assert cg.read_subgroup_file(str(path)) == words('aa', 'aa')

    def test_bad_letter(self, tmp_path):
        path = tmp_path / 'h.sub'
        path.write_text('ax\n')
        with pytest.raises(cg.WordError):
            cg.read_subgroup_file(str(path))
