import check
import dump
import prove
from data import load_logic, load_table

from conftest import f, fs


class TestProve:

    def test_restricted_s2_is_proved(self, capsys):
        code = prove.main(['--logic', 's2', '--companion', 're', '--premises', '(p & q)', '--goal', '(p | q)'])
        out = capsys.readouterr().out
        assert code == 0
        assert 'verdict: Proved' in out
        assert '2. (p | q)  [R3 on 1]' in out

    def test_restricted_s1_is_refuted(self, capsys):
        code = prove.main(['--logic', 's1', '--companion', 're', '--premises', '(p & q)', '--goal', '(p | q)'])
        out = capsys.readouterr().out
        assert code == 1
        assert 'scope: within-universe' in out

    def test_left_companion_of_cpc(self, capsys):
        assert prove.main(['--logic', 'cpc', '--companion', 'rho:L', '--premises', 'p,(p > q)', '--goal', 'q']) == 1
        assert prove.main(['--logic', 'cpc', '--companion', 'rho:L', '--premises', 'p,~p', '--goal', 'q']) == 1
        assert prove.main(['--logic', 'cpc', '--companion', 'rho:L', '--premises', 'p,~p', '--goal', '(p | q)']) == 0
        assert 'premise subset used' in capsys.readouterr().out

    def test_matrix_counterexample(self, capsys):
        assert prove.main(['--logic', 'pwk', '--premises', 'p,~p', '--goal', 'q']) == 1
        assert 'counterexample valuation: p=e, q=0' in capsys.readouterr().out

    def test_restricted_modus_ponens_blocks_explosion(self, capsys):
        code = prove.main(['--logic', 'cpc_hilbert', '--companion', 're', '--depth', '1',
                           '--premises', 'p,~p', '--goal', 'q'])
        assert code == 1
        assert 'scope: within-universe' in capsys.readouterr().out

    def test_errors(self, capsys):
        assert prove.main(['--logic', 'cpc', '--premises', 'p', '--goal', '(p $ q)']) == 3
        assert prove.main(['--logic', 'cpc', '--premises', 'p']) == 3
        assert prove.main(['--logic', 'no_such_logic', '--goal', 'p']) == 3
        assert prove.main(['--logic', 'cpc', '--companion', 're', '--goal', 'p']) == 3
        assert 'error:' in capsys.readouterr().err


class TestCheck:

    def test_unknown_property(self, capsys):
        assert check.main(['no_such_law']) == 3
        assert 'no_such_law' in capsys.readouterr().err

    def test_single_property(self, capsys, tmp_path):
        report = tmp_path / 'reports' / 'l.report'
        code = check.main(['l_eq_re_iff', '--seed', '3', '--instances', '20', '--report', str(report)])
        out = capsys.readouterr().out
        assert code == 0
        assert '[PASS] l_eq_re_iff' in out
        assert '1 of 1 properties passed' in out
        assert report.exists()

    def test_suite_exit_code(self):
        class Stub:
            def __init__(self, code):
                self.exit_code = code

        assert check.suite_exit_code([Stub(0), Stub(2), Stub(1)]) == 1
        assert check.suite_exit_code([Stub(0), Stub(2)]) == 2
        assert check.suite_exit_code([Stub(0)]) == 0


class TestDump:

    def test_dump_and_reload(self, capsys, tmp_path):
        out = str(tmp_path / 'tables' / 's1.table')
        assert dump.main(['--logic', 's1', '--depth', '1', '--cap', '1', '--out', out]) == 0
        table = load_table(out)
        assert table.holds(fs('(p & q)'), f('p'))
        assert table.holds(fs('(p & q)'), f('(p | q)'))
        assert load_logic(out).structure().entail(fs('(p & q)'), f('p')).is_proved
        assert prove.main(['--logic', out, '--premises', '(p & q)', '--goal', 'p']) == 0
        assert 'written to' in capsys.readouterr().out

    def test_dump_restricted(self, tmp_path):
        out = str(tmp_path / 's1_re.table')
        assert dump.main(['--logic', 's1', '--companion', 're', '--depth', '1', '--cap', '1', '--out', out]) == 0
        table = load_table(out)
        assert not table.holds(fs('(p & q)'), f('(p | q)'))
        assert table.holds(fs('p'), f('(p | q)'))

    def test_universe_too_large(self, tmp_path):
        out = str(tmp_path / 'big.table')
        assert dump.main(['--logic', 'cpc', '--depth', '2', '--cap', '3', '--max_subsets', '100', '--out', out]) == 3
