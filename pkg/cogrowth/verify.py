"""
Acceptance suite run against a fixtures directory.

Each criterion is evaluated independently; a criterion whose fixture is
unreadable or whose computation raises is reported as failed with the
error as detail, so one corrupted fixture names itself instead of stopping
the run. A missing fixture is an error of the whole run.
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import logging
import os
from collections import namedtuple

from cogrowth.algebra.ideals import (augmentation_ideal, cogrowth_table, ideal_basis,
                                     quotient_search, read_ideal_file, stabilize)
from cogrowth.algebra.polynomial import AlgebraMode, FREE_ASSOCIATIVE, GROUP_ALGEBRA, Polynomial
from cogrowth.construction.essential import (check_invariants, export, new, replay,
                                             run_until, sandwich_report)
from cogrowth.graphs.checks import (nested_transversal_check, normality_check_eq6,
                                    sandwich_check_eq5)
from cogrowth.graphs.folding import fold, read_subgroup_file
from cogrowth.graphs.intersection import prop11_check
from cogrowth.graphs.quotients import (abelianization_demo, from_permutations,
                                       normal_closure_demo, read_permutation_file)
from cogrowth.graphs.random_subgroups import random_subgroup_pairs
from cogrowth.growth import parse_family
from cogrowth.utils import CogrowthError
from cogrowth.words import format_word

__all__ = ['FIXTURES',
           'DETERMINISM_RUNS',
           'CONSTRUCTOR_FAMILIES',
           'CriterionResult',
           'verify_all']

logger = logging.getLogger(__name__)

FIXTURES = ('a.sub', 'b.sub', 'aa.sub', 'aa_ab.sub', 'commutator.sub',
            'swap.perm', 'cycle3.perm', 'x.ideal', 'swap_kernel.ideal')

# family, depth reached after the first five certificates
CONSTRUCTOR_FAMILIES = (('poly:1', 24), ('poly:2', 24), ('exp:2', 14), ('int:0.5', 24))

CriterionResult = namedtuple('CriterionResult', ['name', 'passed', 'detail'])


class _Fixtures(object):
    """ Lazily loaded fixture graphs and ideals"""

    def __init__(self, directory):
        self.directory = directory
        self._cache = {}

    def path(self, name):
        return os.path.join(self.directory, name)

    def subgroup(self, name):
        key = ('sub', name)
        if key not in self._cache:
            self._cache[key] = read_subgroup_file(self.path(name + '.sub'))
        return self._cache[key]

    def folded(self, name):
        return fold(self.subgroup(name))

    def permutation_graph(self, name):
        return from_permutations(read_permutation_file(self.path(name + '.perm')))

    def ideal(self, name, kind):
        return read_ideal_file(self.path(name + '.ideal'), AlgebraMode(kind, 2))


def _closed_form_tables(fx, n):
    expected = {
        '<a>': (fx.folded('a'), [3 ** k for k in range(n + 1)]),
        'both-swap kernel': (fx.permutation_graph('swap'), [1] + [2] * n),
        'normal closure of a': (normal_closure_demo(), [2 * k + 1 for k in range(n + 1)]),
    }
    for name, (graph, values) in expected.items():
        table = graph.cogrowth(n)
        if table != values:
            return False, '%s: %r, expected %r' % (name, list(table), values)
    return True, 'n <= %d' % n


def _schreier_identity(fx):
    graphs = [fx.folded(name) for name in ('a', 'b', 'aa', 'aa_ab', 'commutator')]
    graphs += [fx.permutation_graph(name) for name in ('swap', 'cycle3')]
    state = run_until(new(parse_family('poly:1')), 5, 12)
    graphs.append(export(state))
    for graph in graphs:
        graph.check_involution()
    check_invariants(state)
    return True, '%d graphs scanned' % len(graphs)


def _intersection_bounds(fx, n=5, seed=0, count=20):
    pairs = [(fx.subgroup(a), fx.subgroup(b))
             for a, b in (('a', 'b'), ('aa', 'aa_ab'), ('a', 'commutator'), ('aa_ab', 'b'))]
    pairs += random_subgroup_pairs(seed, count)
    for gens1, gens2 in pairs:
        if not prop11_check(fold(gens1), fold(gens2), n):
            return False, 'broken for <%s> and <%s>' % (
                ', '.join(format_word(w) for w in gens1), ', '.join(format_word(w) for w in gens2))
    return True, '%d pairs, n <= %d' % (len(pairs), n)


def _sandwich_inequalities(fx, n=6):
    graphs = dict((name, fx.folded(name)) for name in ('a', 'b', 'aa', 'aa_ab', 'commutator'))
    graphs['swap'] = fx.permutation_graph('swap')
    graphs['cycle3'] = fx.permutation_graph('cycle3')
    for name, graph in sorted(graphs.items()):
        if not sandwich_check_eq5(graph, n):
            return False, 'coset sandwich broken for %s' % name
    normal = {'swap': graphs['swap'], 'cycle3': graphs['cycle3'],
              'z-shift': normal_closure_demo(), 'z2': abelianization_demo()}
    for name, graph in sorted(normal.items()):
        for n1 in range(1, n + 1):
            for n2 in range(n - n1 + 1):
                if not normality_check_eq6(graph, n1, n2):
                    return False, 'normal restriction broken for %s at (%d, %d)' % (name, n1, n2)
    return True, 'n <= %d' % n


def _constructor(elements=5):
    details = []
    for family_name, depth in CONSTRUCTOR_FAMILIES:
        state = run_until(new(parse_family(family_name)), elements, depth)
        report = sandwich_report(state, state.interior_depth // 2)
        if not report.passed:
            failed = sorted(k for k, ok in report.checks.items() if not ok)
            return False, '%s: %s' % (family_name, ', '.join(failed))
        graph = export(state)
        for cert in state.certificates:
            if not replay(graph, cert):
                return False, '%s: certificate %s^%d does not replay' % (
                    family_name, format_word(cert.g), cert.k)
        details.append('%s C=%d' % (family_name, report.C))
    return True, '; '.join(details)


def _nielsen_schreier(fx, n=6):
    for name in ('swap', 'cycle3'):
        graph = fx.permutation_graph(name)
        index = graph.number_of_vertices()
        basis = graph.nielsen_schreier_basis(index)
        if len(basis) != index * (graph.rank - 1) + 1:
            return False, '%s: basis of size %d for index %d' % (name, len(basis), index)
        if fold(basis).cogrowth(n) != graph.cogrowth(n):
            return False, '%s: folded basis has another cogrowth' % name
    return True, 'finite index fixtures'


def _nested_transversals(fx, n=5):
    swap = fx.permutation_graph('swap')
    pairs = [
        ('<a> > <aa>', fx.folded('a'), fx.folded('aa')),
        ('<aa, ab> > <aa>', fx.folded('aa_ab'), fx.folded('aa')),
        ('kernel > <aa, ab>', swap, fx.folded('aa_ab')),
        ('kernel > <aa>', swap, fx.folded('aa')),
        ('normal closure > <a>', normal_closure_demo(), fx.folded('a')),
        ('normal closure > <aa>', normal_closure_demo(), fx.folded('aa')),
        ('commutators > <abAB>', abelianization_demo(), fx.folded('commutator')),
        ('<a> > <a>', fx.folded('a'), fx.folded('a')),
        ('Z/3 kernel > <abAB>', fx.permutation_graph('cycle3'), fx.folded('commutator')),
        ('kernel > <abAB>', swap, fx.folded('commutator')),
    ]
    for name, outer, inner in pairs:
        if not nested_transversal_check(outer, inner, n):
            return False, name
    return True, '%d pairs, n <= %d' % (len(pairs), n)


def _algebra_correspondence(fx, n=4):
    mode = AlgebraMode(GROUP_ALGEBRA, 2)
    graphs = {'<a>': fx.folded('a'),
              '<aa, ab>': fx.folded('aa_ab'),
              'both-swap kernel': fx.permutation_graph('swap')}
    for name, graph in sorted(graphs.items()):
        if graph.backend == 'folded':
            words = graph.nielsen_schreier_basis()
        else:
            words = graph.nielsen_schreier_basis(graph.number_of_vertices())
        generators = augmentation_ideal(words)
        m, stable = stabilize(mode, generators, n, max(n, max(len(w) for w in words)))
        if not stable:
            return False, '%s: no stabilisation up to horizon %d' % (name, m)
        table = cogrowth_table(mode, ideal_basis(mode, generators, m), n)
        if table != graph.cogrowth(n):
            return False, '%s: ideal %r, subgroup %r' % (name, list(table), list(graph.cogrowth(n)))
    return True, 'n <= %d' % n


def _colon_search(fx, horizons=8):
    mode = AlgebraMode(GROUP_ALGEBRA, 2)
    basis = ideal_basis(mode, fx.ideal('swap_kernel', GROUP_ALGEBRA), 2)
    r = Polynomial.monomial((2,), mode)
    found = quotient_search(mode, basis, r, 1).quotient
    if found is None or not basis.contains(r * found):
        return False, 'no certified s with b s in the kernel ideal'
    free = AlgebraMode(FREE_ASSOCIATIVE, 2)
    generators = fx.ideal('x', FREE_ASSOCIATIVE)
    y = Polynomial.monomial((2,), free)
    for m in range(1, horizons + 1):
        if quotient_search(free, ideal_basis(free, generators, m), y, m - 1).quotient is not None:
            return False, '(xR : y) nonzero at horizon %d' % m
    return True, 's = %s' % found


DETERMINISM_RUNS = (
    ['construct', '--alpha', 'exp:2', '--elements', '6',
     '--certificates', 'certificates.json', '--graph', 'graph.txt'],
    ['--format', 'json', 'certify', '--alpha', 'poly:1', '--elements', '5', '--depth', '12'],
)


def _invoke_twice(args, written=()):
    """ Two command line runs in fresh directories; exit code, output and written files"""
    from click.testing import CliRunner
    from cogrowth.cli import entry_point

    runner = CliRunner()
    runs = []
    for _ in range(2):
        with runner.isolated_filesystem():
            result = runner.invoke(entry_point, list(args))
            files = []
            for name in written:
                if os.path.isfile(name):
                    with open(name, 'rb') as fh:
                        files.append(fh.read())
                else:
                    files.append(None)
            runs.append((result.exit_code, result.output.encode('utf-8'), files))
    return runs


def _determinism():
    construct, certify = DETERMINISM_RUNS
    first, second = _invoke_twice(construct, ('certificates.json', 'graph.txt'))
    if first[0] != 0:
        return False, 'construct exited with %d' % first[0]
    if None in first[2]:
        return False, 'construct wrote no certificates or graph'
    if first != second:
        return False, 'two construct runs differ'
    first, second = _invoke_twice(certify)
    if first != second:
        return False, 'two certify runs differ'
    return True, 'construct and certify run twice, byte-identical'


def verify_all(fixtures_dir):
    """
    Run every acceptance criterion

    Parameters
    ----------

    fixtures_dir - directory holding the files named in FIXTURES

    Returns
    -------

    list of CriterionResult(name, passed, detail), in a fixed order
    """
    if not os.path.isdir(fixtures_dir):
        raise FileNotFoundError('no fixtures directory: %s' % fixtures_dir)
    for name in FIXTURES:
        if not os.path.isfile(os.path.join(fixtures_dir, name)):
            raise FileNotFoundError('missing fixture: %s' % os.path.join(fixtures_dir, name))
    fx = _Fixtures(fixtures_dir)
    criteria = [
        ('schreier_identity', lambda: _schreier_identity(fx)),
        ('cogrowth_oracles', lambda: _closed_form_tables(fx, 8)),
        ('intersection_bounds', lambda: _intersection_bounds(fx)),
        ('sandwich_inequalities', lambda: _sandwich_inequalities(fx)),
        ('constructor_sandwich', _constructor),
        ('nielsen_schreier', lambda: _nielsen_schreier(fx)),
        ('nested_transversals', lambda: _nested_transversals(fx)),
        ('algebra_correspondence', lambda: _algebra_correspondence(fx)),
        ('colon_search', lambda: _colon_search(fx)),
        ('determinism', _determinism),
    ]
    results = []
    for name, run in criteria:
        try:
            passed, detail = run()
        except (CogrowthError, ValueError, RuntimeError) as err:
            passed, detail = False, '%s: %s' % (type(err).__name__, err)
        logger.info('%s: %s (%s)', name, 'pass' if passed else 'FAIL', detail)
        results.append(CriterionResult(name, passed, detail))
    return results
