import os
import shutil

import pytest

from cogrowth import verify
from cogrowth.verify import FIXTURES, verify_all

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(
    os.path.abspath(__file__)))), 'fixtures')


def copy_fixtures(tmp_path):
    target = tmp_path / 'fixtures'
    shutil.copytree(FIXTURES_DIR, str(target))
    return target


class TestVerify(object):
    """ Acceptance suite over the shipped fixtures"""
    def test_all_pass(self):
        results = verify_all(FIXTURES_DIR)
        assert [r.name for r in results] == [
            'schreier_identity', 'cogrowth_oracles', 'intersection_bounds',
            'sandwich_inequalities', 'constructor_sandwich', 'nielsen_schreier',
            'nested_transversals', 'algebra_correspondence', 'colon_search', 'determinism']
        assert all(r.passed for r in results), [r for r in results if not r.passed]

    def test_fixture_list(self):
        assert sorted(FIXTURES) == sorted(os.listdir(FIXTURES_DIR))

    def test_corrupted_fixture(self, tmp_path):
        target = copy_fixtures(tmp_path)
        (target / 'swap.perm').write_text('(1 2\n(1 2)\n')
        results = dict((r.name, r) for r in verify_all(str(target)))
        assert not results['cogrowth_oracles'].passed
        assert results['cogrowth_oracles'].detail.startswith('ValueError')
        assert not results['nielsen_schreier'].passed
        assert results['intersection_bounds'].passed
        assert results['colon_search'].passed

    def test_missing_fixture(self, tmp_path):
        target = copy_fixtures(tmp_path)
        (target / 'x.ideal').unlink()
        with pytest.raises(FileNotFoundError):
            verify_all(str(target))

    def test_missing_directory(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            verify_all(str(tmp_path / 'absent'))

    def test_raising_criterion(self, monkeypatch):
        def broken():
            raise RuntimeError('paths share vertices')

        monkeypatch.setattr(verify, '_constructor', broken)
        results = dict((r.name, r) for r in verify_all(FIXTURES_DIR))
        assert not results['constructor_sandwich'].passed
        assert results['constructor_sandwich'].detail == 'RuntimeError: paths share vertices'
        assert results['determinism'].passed
