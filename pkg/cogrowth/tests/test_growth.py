import io
import json
from fractions import Fraction

import pytest

import cogrowth as cg
from cogrowth.growth import (CGFunction, GrowthTable, equivalence_witness, family,
                             parse_family, partial_sums, preorder_witness, strict_witness,
                             write_tables_csv)


class TestGrowthTable(object):
    """ Cumulative tables and their increments"""
    def test_increments(self):
        table = GrowthTable([1, 3, 9, 27])
        assert table.increments() == (1, 2, 6, 18)
        assert table.horizon == 3
        assert table[2] == 9
        assert table[1:3] == (3, 9)

    def test_from_increments(self):
        assert GrowthTable.from_increments([1, 4, 12]) == (1, 5, 17)

    def test_decreasing(self):
        with pytest.raises(ValueError):
            GrowthTable([1, 3, 2])
        with pytest.raises(ValueError):
            GrowthTable([])

    def test_index_outside(self):
        with pytest.raises(IndexError):
            GrowthTable([1, 2])[2]

    def test_big_values_stay_exact(self):
        table = GrowthTable([3 ** k for k in range(80)])
        assert table[79] == 3 ** 79
        assert table.increments()[79] == 2 * 3 ** 78

    def test_truncate(self):
        assert GrowthTable([1, 2, 4]).truncate(1) == (1, 2)
        with pytest.raises(ValueError):
            GrowthTable([1, 2]).truncate(3)

    def test_csv(self):
        fh = io.StringIO()
        GrowthTable([1, 3, 9]).write_csv(fh)
        assert fh.getvalue() == 'n,Gamma,gamma\n0,1,1\n1,3,2\n2,9,6\n'

    def test_json(self):
        fh = io.StringIO()
        GrowthTable([1, 5]).write_json(fh)
        assert json.loads(fh.getvalue()) == {'horizon': 1, 'values': [1, 5]}

    def test_side_by_side(self):
        fh = io.StringIO()
        write_tables_csv(fh, [('A', [1, 2, 3]), ('B', [1, 5])])
        assert fh.getvalue() == 'n,A,B\n0,1,1\n1,2,5\n'


class TestWitnesses(object):
    """ Finite-horizon comparisons with an explicit constant"""
    def test_preorder(self):
        linear = GrowthTable([k + 1 for k in range(21)])
        square = GrowthTable([k * k + 1 for k in range(21)])
        assert preorder_witness(linear, square, 1)
        assert not preorder_witness(square, linear, 1)
        assert strict_witness(linear, square, 2)

    def test_scaling(self):
        slow = GrowthTable([2 * k + 1 for k in range(21)])
        fast = GrowthTable([k + 1 for k in range(21)])
        assert not preorder_witness(slow, fast, 1)
        assert preorder_witness(slow, fast, 2)
        assert equivalence_witness(slow, fast, 2)

    def test_bad_constant(self):
        table = GrowthTable([1, 2])
        with pytest.raises(ValueError):
            preorder_witness(table, table, 0)
        with pytest.raises(ValueError):
            preorder_witness(table, table, 1.5)


class TestFamilies(object):
    """ Named CG families"""
    def test_polynomial(self):
        assert partial_sums(family('polynomial', 1), 4) == (1, 2, 3, 4, 5)
        assert partial_sums(family('polynomial', 2), 4) == (1, 2, 5, 10, 17)

    def test_exponential(self):
        f = family('exponential', 2)
        assert partial_sums(f, 4) == (1, 3, 7, 15, 31)
        assert f.ratio == 2

    def test_fractional_base(self):
        f = family('exponential', Fraction(3, 2))
        assert f.prefix(4) == [1, 1, 2, 3, 5]
        assert f.ratio == 3

    def test_intermediate(self):
        f = family('intermediate', 0.5)
        values = f.prefix(30)
        assert values[0] == 1
        assert all(v >= 1 for v in values)
        assert f.ratio >= 3

    def test_finite(self):
        f = family('finite', 3)
        assert f.bounded
        assert f.prefix(5) == [1, 1, 1, 0, 0, 0]
        assert f.limit() == 3

    def test_unbounded_limit(self):
        with pytest.raises(ValueError):
            family('polynomial', 1).limit()

    def test_unknown(self):
        with pytest.raises(ValueError):
            family('factorial', 2)
        with pytest.raises(ValueError):
            family('intermediate', 1.5)


class TestCGConditions(object):
    """ Validation of increment streams"""
    def test_first_increment(self):
        with pytest.raises(cg.CGViolation) as err:
            CGFunction.from_increments([2, 2]).prefix(1)
        assert err.value.index == 0

    def test_ratio(self):
        f = CGFunction(lambda: iter([1, 2, 8, 8]), 2)
        with pytest.raises(cg.CGViolation) as err:
            f.prefix(3)
        assert err.value.index == 2

    def test_zero_before_cutoff(self):
        f = CGFunction(lambda: iter([1, 0, 1]), 1)
        with pytest.raises(cg.CGViolation) as err:
            f.prefix(2)
        assert err.value.index == 1

    def test_short_stream(self):
        with pytest.raises(cg.CGViolation):
            CGFunction(lambda: iter([1, 1]), 1).prefix(4)

    def test_explicit_sequence(self):
        f = parse_family('seq:1,2,3')
        assert f.ratio == 2
        assert f.cutoff == 2
        assert f.limit() == 6
        assert f.prefix(4) == [1, 2, 3, 0, 0]


class TestParseFamily(object):
    """ Family strings such as poly:2"""
    def test_short_names(self):
        assert parse_family('poly:3').name == 'poly:3'
        assert parse_family('exp:2').ratio == 2
        assert parse_family('fin:4').limit() == 4
        assert parse_family('int:0.5').name == 'int:0.5'

    def test_errors(self):
        with pytest.raises(ValueError):
            parse_family('poly')
        with pytest.raises(ValueError):
            parse_family('sq:2')
