"""
Command line front-end.

Every subcommand writes a table to --output (stdout by default) as CSV or
JSON. Exit codes: 0 success, 1 an inequality that always holds was found
violated, 2 usage error, 3 horizon or budget exhausted.
"""

#    Copyright (C) 2026 by the cogrowth developers
#    All rights reserved.
#    BSD license.

import csv
import json
import logging
import sys
from dataclasses import dataclass

import click

from cogrowth.algebra.echelon import DEFAULT_MAX_ROWS
from cogrowth.algebra.ideals import (algebra_growth, augmentation_ideal, cogrowth_table,
                                     essentiality_report, ideal_basis, ideal_table,
                                     quotient_search, read_ideal_file, stabilize)
from cogrowth.algebra.polynomial import (AlgebraMode, FREE_ASSOCIATIVE, GROUP_ALGEBRA,
                                         format_polynomial, parse_polynomial)
from cogrowth.construction.essential import (certify, export, new, replay, run_until,
                                             sandwich_report)
from cogrowth.graphs.checks import coset_sandwich, normality_check_eq6, sandwich_check_eq5
from cogrowth.graphs.coset_graph import DEFAULT_MAX_VERTICES
from cogrowth.graphs.folding import fold, read_subgroup_file
from cogrowth.graphs.intersection import intersection_table, prop11_check
from cogrowth.graphs.quotients import DEMOS, from_permutations, read_permutation_file
from cogrowth.growth import parse_family, partial_sums, write_tables_csv
from cogrowth.utils import CheckFailure, HorizonError
from cogrowth.verify import verify_all
from cogrowth.words import format_word, parse_word

__all__ = ['RunConfig',
           'entry_point',
           'main',
           'run']

logger = logging.getLogger(__name__)

EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_HORIZON = 3


@dataclass
class RunConfig:
    """ Options shared by every subcommand"""
    fmt: str = 'csv'
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_rows: int = DEFAULT_MAX_ROWS
    output: object = None


class CogrowthFailure(click.ClickException):
    """ Library error carried out of click with its own exit code"""

    def __init__(self, message, exit_code):
        super().__init__(message)
        self.exit_code = exit_code


class CogrowthGroup(click.Group):
    """ Maps library exceptions to the documented exit codes"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except CheckFailure as err:
            raise CogrowthFailure(str(err), EXIT_CHECK_FAILURE)
        except HorizonError as err:
            raise CogrowthFailure(str(err), EXIT_HORIZON)
        except (ValueError, FileNotFoundError) as err:
            raise CogrowthFailure(str(err), EXIT_USAGE)


def _emit(config, header, rows, extra=None):
    """ Write rows as CSV with a header line, or as a JSON object"""
    fh = config.output
    if config.fmt == 'json':
        document = {'columns': list(header), 'rows': [list(r) for r in rows]}
        document.update(extra or {})
        json.dump(document, fh, sort_keys=True)
        fh.write('\n')
    else:
        writer = csv.writer(fh, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)


def _emit_table(config, table):
    if config.fmt == 'json':
        json.dump(table.to_json(), config.output, sort_keys=True)
        config.output.write('\n')
    else:
        table.write_csv(config.output)


def _load_graph(config, gens, perm, demo, rank):
    sources = [s for s in (gens, perm, demo) if s is not None]
    if len(sources) != 1:
        raise click.UsageError('give exactly one of --gens, --perm, --demo')
    if gens is not None:
        return fold(read_subgroup_file(gens, rank), rank=rank, max_vertices=config.max_vertices)
    if perm is not None:
        return from_permutations(read_permutation_file(perm), max_vertices=config.max_vertices)
    return DEMOS[demo](max_vertices=config.max_vertices)


def _graph_options(func):
    func = click.option('--rank', default=2, type=click.IntRange(1, 26),
                        help='Number of free generators, 2 by default')(func)
    func = click.option('--demo', type=click.Choice(sorted(DEMOS)),
                        help='Built-in quotient subgroup')(func)
    func = click.option('--perm', type=click.Path(),
                        help='Permutation file, one cycle-notation permutation per generator')(func)
    func = click.option('--gens', type=click.Path(),
                        help='Subgroup generators, one word per line')(func)
    return func


def _pair_options(func):
    func = click.option('--rank', default=2, type=click.IntRange(1, 26),
                        help='Number of free generators, 2 by default')(func)
    for i in (2, 1):
        func = click.option('--demo%d' % i, type=click.Choice(sorted(DEMOS)),
                            help='Built-in quotient subgroup H%d' % i)(func)
        func = click.option('--perm%d' % i, type=click.Path(),
                            help='Permutation file of H%d' % i)(func)
        func = click.option('--gens%d' % i, type=click.Path(),
                            help='Generators of H%d, one word per line' % i)(func)
    return func


def _load_pair(config, gens1, perm1, demo1, gens2, perm2, demo2, rank):
    try:
        g1 = _load_graph(config, gens1, perm1, demo1, rank)
    except click.UsageError:
        raise click.UsageError('give exactly one of --gens1, --perm1, --demo1')
    try:
        g2 = _load_graph(config, gens2, perm2, demo2, rank)
    except click.UsageError:
        raise click.UsageError('give exactly one of --gens2, --perm2, --demo2')
    return g1, g2


def _ideal_options(func):
    func = click.option('--mode', 'kind', default=GROUP_ALGEBRA,
                        type=click.Choice([GROUP_ALGEBRA, FREE_ASSOCIATIVE]),
                        help='Ambient algebra, group-algebra by default')(func)
    func = click.option('--ideal', 'ideal_path', required=True, type=click.Path(),
                        help='Ideal generators, one polynomial per line')(func)
    return func


@click.group(cls=CogrowthGroup, help='Growth and cogrowth of subgroups and right ideals')
@click.option('--format', 'fmt', default='csv', type=click.Choice(['csv', 'json']),
              help='Output format, csv by default')
@click.option('--max-vertices', default=DEFAULT_MAX_VERTICES, type=click.IntRange(1),
              help='Vertex cap for coset graphs and constructions')
@click.option('--max-rows', default=DEFAULT_MAX_ROWS, type=click.IntRange(1),
              help='Row cap for ideal bases')
@click.option('--verbose', '-v', default=False, is_flag=True, help='Log progress')
@click.option('--debug', default=False, is_flag=True, help='Log everything')
@click.option('--output', '-o', default='-', type=click.File(mode='w', atomic=True, lazy=True),
              help='Output file, written atomically; stdout by default')
@click.pass_context
def entry_point(ctx, fmt, max_vertices, max_rows, verbose, debug, output):
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    ctx.obj = RunConfig(fmt, max_vertices, max_rows, output)


@click.command('fold', help='Folded core graph of a subgroup as an edge list')
@click.option('--gens', required=True, type=click.Path(), help='Subgroup generators')
@click.option('--rank', default=2, type=click.IntRange(1, 26))
@click.pass_obj
def cogrowth_fold(config, gens, rank):
    graph = fold(read_subgroup_file(gens, rank), rank=rank, max_vertices=config.max_vertices)
    rows = [(v, format_word((x,)), u) for v, x, u in graph.edges()]
    _emit(config, ['source', 'letter', 'target'], rows, {'vertices': graph.core_size})


@click.command('cogrowth', help='Cogrowth table of a subgroup')
@_graph_options
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_cogrowth(config, gens, perm, demo, rank, depth):
    graph = _load_graph(config, gens, perm, demo, rank)
    _emit_table(config, graph.cogrowth(depth))


@click.command('subgroup-growth', help='Growth of the subgroup measured in the ambient generators')
@_graph_options
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_subgroup_growth(config, gens, perm, demo, rank, depth):
    graph = _load_graph(config, gens, perm, demo, rank)
    _emit_table(config, graph.subgroup_growth(depth))


@click.command('basis', help='Nielsen-Schreier free basis of a subgroup')
@_graph_options
@click.option('--depth', type=click.IntRange(0),
              help='Search radius, required for quotient subgroups')
@click.pass_obj
def cogrowth_basis(config, gens, perm, demo, rank, depth):
    graph = _load_graph(config, gens, perm, demo, rank)
    basis = graph.nielsen_schreier_basis(depth)
    _emit(config, ['generator'], [(format_word(w),) for w in basis])


@click.command('intersect', help='Cogrowth of an intersection next to its factors')
@_pair_options
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_intersect(config, gens1, perm1, demo1, gens2, perm2, demo2, rank, depth):
    g1, g2 = _load_pair(config, gens1, perm1, demo1, gens2, perm2, demo2, rank)
    _emit(config, ['n', 'Gamma1', 'Gamma2', 'Gamma_cap', 'product', 'max'],
          intersection_table(g1, g2, depth))


@click.command('prop11', help='Check max(G1, G2) <= G_cap <= G1 G2 up to a depth')
@_pair_options
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_prop11(config, gens1, perm1, demo1, gens2, perm2, demo2, rank, depth):
    g1, g2 = _load_pair(config, gens1, perm1, demo1, gens2, perm2, demo2, rank)
    _emit(config, ['n', 'Gamma1', 'Gamma2', 'Gamma_cap', 'product', 'max'],
          intersection_table(g1, g2, depth))
    if not prop11_check(g1, g2, depth):
        raise CheckFailure('intersection bounds violated')


@click.command('eq5', help='Check the coset decomposition sandwich up to a depth')
@_graph_options
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_eq5(config, gens, perm, demo, rank, depth):
    graph = _load_graph(config, gens, perm, demo, rank)
    _emit(config, ['n', 'lower', 'Gamma_G', 'upper'], coset_sandwich(graph, depth))
    if not sandwich_check_eq5(graph, depth):
        raise CheckFailure('coset sandwich violated')


@click.command('eq6', help='Check the cogrowth inequality of a normal subgroup')
@_graph_options
@click.option('--n1', required=True, type=click.IntRange(1))
@click.option('--n2', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_eq6(config, gens, perm, demo, rank, n1, n2):
    graph = _load_graph(config, gens, perm, demo, rank)
    table = graph.cogrowth(n1 + n2)
    gamma = table.increments()
    rhs = table[n1 - 1] + gamma[n1] * table[n2]
    _emit(config, ['n1', 'n2', 'lhs', 'rhs'], [(n1, n2, table[n1 + n2], rhs)])
    if not normality_check_eq6(graph, n1, n2):
        raise CheckFailure('normal cogrowth inequality violated at (%d, %d)' % (n1, n2))


def _construct(config, alpha, elements, depth):
    state = new(parse_family(alpha), max_vertices=config.max_vertices)
    return run_until(state, elements, depth)


@click.command('construct', help='Build an essential subgroup with prescribed cogrowth')
@click.option('--alpha', required=True, help='Target family: poly:k, exp:b, int:beta, fin:r or seq:...')
@click.option('--elements', default=5, type=click.IntRange(0),
              help='Number of ShortLex elements to certify')
@click.option('--depth', default=0, type=click.IntRange(0), help='Minimal tree depth')
@click.option('--certificates', type=click.File(mode='w', atomic=True, lazy=True),
              help='Write the certificates as JSON to this file')
@click.option('--graph', 'graph_file', type=click.File(mode='w', atomic=True, lazy=True),
              help='Write the exported coset graph as an edge list to this file')
@click.pass_obj
def cogrowth_construct(config, alpha, elements, depth, certificates, graph_file):
    state = _construct(config, alpha, elements, depth)
    graph = export(state)
    horizon = graph.safe_horizon
    columns = [('alpha', partial_sums(state.alpha, horizon)),
               ('Gamma_T', state.tree_table(horizon)),
               ('Gamma_cogrowth', graph.cogrowth(horizon))]
    documents = [c.to_json() for c in state.certificates]
    if certificates is not None:
        json.dump(documents, certificates, sort_keys=True, indent=1)
        certificates.write('\n')
    if graph_file is not None:
        graph.write_edges(graph_file)
    if config.fmt == 'json':
        rows = [[k] + [seq[k] for _, seq in columns] for k in range(horizon + 1)]
        _emit(config, ['n'] + [name for name, _ in columns], rows,
              {'certificates': documents, 'interior_depth': state.interior_depth,
               'safe_horizon': horizon})
    else:
        write_tables_csv(config.output, columns)


@click.command('certify', help='Build, then replay certificates and check the growth sandwich')
@click.option('--alpha', required=True)
@click.option('--elements', default=5, type=click.IntRange(0))
@click.option('--depth', default=0, type=click.IntRange(0))
@click.option('--element', 'extra', multiple=True,
              help='Further element to certify, multiple allowed')
@click.option('--constant', 'C', type=click.IntRange(1), help='Sandwich constant, 2c + 2 by default')
@click.pass_obj
def cogrowth_certify(config, alpha, elements, depth, extra, C):
    state = _construct(config, alpha, elements, depth)
    for text in extra:
        certify(state, parse_word(text))
    graph = export(state)
    failed = [c for c in state.certificates if not replay(graph, c)]
    report = sandwich_report(state, state.interior_depth // 2, C)
    _emit(config, ['n', 'alpha', 'Gamma_T', 'Gamma_cogrowth', 'alpha_lower', 'alpha_doubled'],
          report.rows(), {'checks': report.checks, 'C': report.C,
                          'greedy_depth': report.greedy_depth})
    if failed:
        raise CheckFailure('certificates do not replay: %s'
                           % ', '.join(format_word(c.g) for c in failed))
    if not report.passed:
        raise CheckFailure('growth sandwich violated: %s'
                           % ', '.join(sorted(k for k, ok in report.checks.items() if not ok)))


def _load_ideal(config, ideal_path, kind, horizon):
    mode = AlgebraMode(kind, 2)
    generators = read_ideal_file(ideal_path, mode)
    return mode, generators, ideal_basis(mode, generators, horizon, config.max_rows)


@click.command('ideal-growth', help='Ideal growth table at a horizon (lower bounds)')
@_ideal_options
@click.option('--horizon', required=True, type=click.IntRange(0))
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_ideal_growth(config, ideal_path, kind, horizon, depth):
    mode, _, basis = _load_ideal(config, ideal_path, kind, horizon)
    growth = algebra_growth(mode, depth)
    table = ideal_table(basis, depth)
    _emit(config, ['n', 'Gamma_R', 'Gamma_I'],
          [(k, growth[k], table[k]) for k in range(depth + 1)], {'horizon': horizon})


@click.command('ideal-cogrowth', help='Cogrowth table of a right ideal (upper bounds)')
@_ideal_options
@click.option('--horizon', required=True, type=click.IntRange(0))
@click.option('--depth', required=True, type=click.IntRange(0))
@click.option('--stabilize', 'raise_horizon', default=False, is_flag=True,
              help='Raise the horizon until the value at --depth stops changing')
@click.pass_obj
def cogrowth_ideal_cogrowth(config, ideal_path, kind, horizon, depth, raise_horizon):
    mode = AlgebraMode(kind, 2)
    generators = read_ideal_file(ideal_path, mode)
    stable = None
    if raise_horizon:
        horizon, stable = stabilize(mode, generators, depth, horizon, max_rows=config.max_rows)
    report = essentiality_report(mode, generators, depth, horizon, config.max_rows)
    _emit(config, ['n', 'Gamma_R', 'Gamma_R_over_I'],
          [(k, report.growth[k], report.cogrowth[k]) for k in range(depth + 1)],
          {'horizon': horizon, 'stable': stable, 'verdict': report.verdict})


@click.command('colon-search', help='Search s with r s in the ideal')
@_ideal_options
@click.option('--r', 'r_text', required=True, help='Polynomial r, e.g. b or "a - 1"')
@click.option('--horizon', required=True, type=click.IntRange(0))
@click.option('--length', 'n0', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_colon_search(config, ideal_path, kind, r_text, horizon, n0):
    mode, _, basis = _load_ideal(config, ideal_path, kind, horizon)
    r = parse_polynomial(r_text, mode)
    result = quotient_search(mode, basis, r, n0)
    found = format_polynomial(result.quotient) if result.quotient is not None else 'not found'
    _emit(config, ['r', 's', 'search_dimension', 'quotient_dimension'],
          [(format_polynomial(r), found, result.search_dimension, result.quotient_dimension)])
    if result.quotient is not None and not basis.contains(r * result.quotient):
        raise CheckFailure('quotient certificate does not reduce to zero')


@click.command('correspond', help='Subgroup cogrowth next to the cogrowth of its augmentation ideal')
@_graph_options
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_correspond(config, gens, perm, demo, rank, depth):
    graph = _load_graph(config, gens, perm, demo, rank)
    if graph.backend == 'folded':
        words = graph.nielsen_schreier_basis()
    else:
        words = graph.nielsen_schreier_basis(graph.number_of_vertices())
    mode = AlgebraMode(GROUP_ALGEBRA, rank)
    generators = augmentation_ideal(words, rank)
    if not generators:
        raise click.UsageError('the trivial subgroup has no augmentation ideal generators')
    start = max(depth, max(len(w) for w in words))
    horizon, stable = stabilize(mode, generators, depth, start, max_rows=config.max_rows)
    ideal = cogrowth_table(mode, ideal_basis(mode, generators, horizon, config.max_rows), depth)
    subgroup = graph.cogrowth(depth)
    _emit(config, ['n', 'subgroup', 'ideal'],
          [(k, subgroup[k], ideal[k]) for k in range(depth + 1)],
          {'horizon': horizon, 'stable': stable})
    if stable and ideal != subgroup:
        raise CheckFailure('augmentation ideal cogrowth differs from subgroup cogrowth')


@click.command('essentiality', help='Growth tables and the finite-horizon essentiality verdict')
@_ideal_options
@click.option('--horizon', required=True, type=click.IntRange(0))
@click.option('--depth', required=True, type=click.IntRange(0))
@click.pass_obj
def cogrowth_essentiality(config, ideal_path, kind, horizon, depth):
    mode = AlgebraMode(kind, 2)
    report = essentiality_report(mode, read_ideal_file(ideal_path, mode), depth, horizon,
                                 config.max_rows)
    _emit(config, ['n', 'Gamma_R', 'Gamma_I', 'Gamma_R_over_I'], report.rows(),
          {'verdict': report.verdict, 'plausible': report.plausible})


@click.command('verify', help='Run the acceptance suite on a fixtures directory')
@click.option('--fixtures', default='fixtures', type=click.Path())
@click.pass_obj
def cogrowth_verify(config, fixtures):
    results = verify_all(fixtures)
    _emit(config, ['criterion', 'passed', 'detail'],
          [(r.name, 'pass' if r.passed else 'FAIL', r.detail) for r in results])
    failed = [r.name for r in results if not r.passed]
    if failed:
        raise CheckFailure('failed: %s' % ', '.join(failed))


entry_point.add_command(cogrowth_fold)
entry_point.add_command(cogrowth_cogrowth)
entry_point.add_command(cogrowth_subgroup_growth)
entry_point.add_command(cogrowth_basis)
entry_point.add_command(cogrowth_intersect)
entry_point.add_command(cogrowth_prop11)
entry_point.add_command(cogrowth_eq5)
entry_point.add_command(cogrowth_eq6)
entry_point.add_command(cogrowth_construct)
entry_point.add_command(cogrowth_certify)
entry_point.add_command(cogrowth_ideal_growth)
entry_point.add_command(cogrowth_ideal_cogrowth)
entry_point.add_command(cogrowth_colon_search)
entry_point.add_command(cogrowth_correspond)
entry_point.add_command(cogrowth_essentiality)
entry_point.add_command(cogrowth_verify)


def main(argv=None):
    """ Run the command line and return its exit code instead of exiting"""
    try:
        result = entry_point.main(args=argv, prog_name='cogrowth', standalone_mode=False)
    except click.ClickException as err:
        err.show()
        return err.exit_code
    except click.Abort:
        return EXIT_CHECK_FAILURE
    return result if isinstance(result, int) else 0


def run():
    sys.exit(main())
