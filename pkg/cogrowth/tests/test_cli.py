import json
import os

from click.testing import CliRunner

import cogrowth.cli
from cogrowth.cli import entry_point, main

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__)))), 'fixtures')


def fixture(name):
    return os.path.join(FIXTURES, name)


def invoke(*args):
    return CliRunner().invoke(entry_point, list(args))


class TestTables(object):
    """ Subcommands writing tables"""
    def test_cogrowth_csv(self):
        result = invoke('cogrowth', '--gens', fixture('a.sub'), '--depth', '3')
        assert result.exit_code == 0
        assert result.output == 'n,Gamma,gamma\n0,1,1\n1,3,2\n2,9,6\n3,27,18\n'

    def test_cogrowth_json(self):
        result = invoke('--format', 'json', 'cogrowth', '--demo', 'z-shift', '--depth', '2')
        assert result.exit_code == 0
        assert json.loads(result.output) == {'horizon': 2, 'values': [1, 3, 5]}

    def test_fold(self):
        result = invoke('fold', '--gens', fixture('aa_ab.sub'))
        assert result.exit_code == 0
        assert result.output == 'source,letter,target\n0,a,1\n1,a,0\n1,b,0\n'

    def test_basis(self):
        result = invoke('basis', '--perm', fixture('swap.perm'), '--depth', '2')
        assert result.exit_code == 0
        assert result.output == 'generator\naa\nab\nbA\n'

    def test_eq6(self):
        result = invoke('eq6', '--demo', 'z-shift', '--n1', '1', '--n2', '1')
        assert result.exit_code == 0
        assert result.output == 'n1,n2,lhs,rhs\n1,1,5,7\n'

    def test_colon_search(self):
        result = invoke('colon-search', '--ideal', fixture('swap_kernel.ideal'), '--r', 'b',
                        '--horizon', '2', '--length', '1')
        assert result.exit_code == 0
        assert result.output == 'r,s,search_dimension,quotient_dimension\nb,A - a,5,2\n'

    def test_ideal_cogrowth(self):
        result = invoke('--format', 'json', 'ideal-cogrowth', '--ideal', fixture('x.ideal'),
                        '--mode', 'free-assoc', '--horizon', '3', '--depth', '3')
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document['rows'] == [[0, 1, 1], [1, 3, 2], [2, 7, 4], [3, 15, 8]]
        assert document['verdict'] == 'no verdict'

    def test_correspond(self):
        result = invoke('correspond', '--gens', fixture('aa_ab.sub'), '--depth', '2')
        assert result.exit_code == 0
        assert result.output == 'n,subgroup,ideal\n0,1,1\n1,3,3\n2,7,7\n'

    def test_construct(self, tmp_path):
        certificates = tmp_path / 'certificates.json'
        edges = tmp_path / 'graph.txt'
        result = invoke('construct', '--alpha', 'poly:1', '--elements', '2',
                        '--certificates', str(certificates), '--graph', str(edges))
        assert result.exit_code == 0
        assert result.output.startswith('n,alpha,Gamma_T,Gamma_cogrowth\n0,1,1,1\n')
        documents = json.loads(certificates.read_text())
        assert [d['g'] for d in documents] == ['a', 'A']
        lines = edges.read_text().splitlines()
        assert lines
        assert all(len(line.split()) == 3 and line.split()[1] in ('a', 'b') for line in lines)
        assert lines[0].startswith('0 a ')

    def test_construct_columns(self):
        result = invoke('--format', 'json', 'construct', '--alpha', 'poly:1', '--elements', '2')
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document['columns'] == ['n', 'alpha', 'Gamma_T', 'Gamma_cogrowth']
        assert len(document['rows']) == document['safe_horizon'] + 1
        for n, alpha, tree, cogrowth in document['rows']:
            assert alpha == n + 1
            assert tree <= cogrowth

    def test_intersect_sources(self):
        result = invoke('intersect', '--perm1', fixture('swap.perm'), '--gens2', fixture('a.sub'),
                        '--depth', '1')
        assert result.exit_code == 0
        assert result.output == 'n,Gamma1,Gamma2,Gamma_cap,product,max\n0,1,1,1,1,1\n1,2,3,4,6,3\n'
        result = invoke('prop11', '--demo1', 'z-shift', '--gens2', fixture('b.sub'), '--depth', '3')
        assert result.exit_code == 0
        assert invoke('prop11', '--gens2', fixture('b.sub'), '--depth', '3').exit_code == 2

    def test_output_file(self, tmp_path):
        path = tmp_path / 'table.csv'
        result = invoke('-o', str(path), 'subgroup-growth', '--gens', fixture('a.sub'),
                        '--depth', '2')
        assert result.exit_code == 0
        assert path.read_text() == 'n,Gamma,gamma\n0,1,1\n1,3,2\n2,5,2\n'


class TestExitCodes(object):
    """ Failures map to distinct exit codes"""
    def test_check_failure(self, monkeypatch):
        monkeypatch.setattr(cogrowth.cli, 'sandwich_check_eq5', lambda graph, n: False)
        result = invoke('eq5', '--gens', fixture('a.sub'), '--depth', '2')
        assert result.exit_code == 1

    def test_usage(self):
        assert invoke('cogrowth', '--depth', '2').exit_code == 2
        assert invoke('cogrowth', '--gens', fixture('a.sub'), '--demo', 'z2',
                      '--depth', '2').exit_code == 2
        assert invoke('cogrowth', '--demo', 'z3', '--depth', '2').exit_code == 2

    def test_bad_input(self, tmp_path):
        assert invoke('cogrowth', '--gens', str(tmp_path / 'absent.sub'),
                      '--depth', '2').exit_code == 2
        assert invoke('basis', '--demo', 'z-shift').exit_code == 2
        assert invoke('construct', '--alpha', 'fin:3').exit_code == 2

    def test_budget(self):
        result = invoke('--max-vertices', '3', 'cogrowth', '--gens', fixture('a.sub'),
                        '--depth', '3')
        assert result.exit_code == 3

    def test_horizon(self):
        result = invoke('colon-search', '--ideal', fixture('swap_kernel.ideal'), '--r', 'b',
                        '--horizon', '2', '--length', '2')
        assert result.exit_code == 3

    def test_bad_coefficient(self, tmp_path):
        path = tmp_path / 'bad.ideal'
        path.write_text('a - 1/0\n')
        result = invoke('ideal-growth', '--ideal', str(path), '--horizon', '1', '--depth', '1')
        assert result.exit_code == 2
        assert '1/0' in result.output

    def test_certify_with_ties(self):
        result = invoke('certify', '--alpha', 'poly:1', '--elements', '6', '--depth', '24')
        assert result.exit_code == 0, result.output


class TestMain(object):
    """ Exit codes returned without exiting"""
    def test_success(self, capsys):
        assert main(['cogrowth', '--demo', 'z2', '--depth', '1']) == 0
        assert capsys.readouterr().out == 'n,Gamma,gamma\n0,1,1\n1,5,4\n'

    def test_failures(self):
        assert main(['cogrowth', '--demo', 'z2']) == 2
        assert main(['--max-vertices', '2', 'cogrowth', '--demo', 'z2', '--depth', '2']) == 3


class TestDeterminism(object):
    """ Repeated runs write identical bytes"""
    def run_twice(self, args, names=()):
        runner = CliRunner()
        runs = []
        for _ in range(2):
            with runner.isolated_filesystem():
                result = runner.invoke(entry_point, list(args))
                assert result.exit_code == 0, result.output
                files = []
                for name in names:
                    with open(name, 'rb') as fh:
                        files.append(fh.read())
                runs.append((result.output, files))
        return runs

    def test_construct(self):
        first, second = self.run_twice(
            ['construct', '--alpha', 'exp:2', '--elements', '6',
             '--certificates', 'certificates.json', '--graph', 'graph.txt'],
            ('certificates.json', 'graph.txt'))
        assert first == second
        assert first[1][0] and first[1][1]

    def test_certify(self):
        first, second = self.run_twice(['--format', 'json', 'certify', '--alpha', 'poly:2',
                                        '--elements', '5', '--depth', '24'])
        assert first == second
