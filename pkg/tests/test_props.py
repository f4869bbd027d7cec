import json

import numpy as np
import pytest

import props
from logic.errors import UnknownProperty
from logic.syntax import Var
from logic.oracle import TableDump
from options.base_options import make_budget
from options.check_options import CheckOptions
from props import generators, tables
from props.base_property import (FAIL, INCONCLUSIVE, PASS, REPORT_HEADER, Check, PropertyConfig,
                                 PropertyReport, combine, write_reports)
from props.companion_laws import RhoIdempotentProperty
from props.generators import Instance

P, Q = Var('p'), Var('q')
EMPTY_SET = frozenset()


class TestRegistry:

    def test_every_name_resolves(self):
        laws = props.list_properties()
        assert set(laws) == set(props.REGISTRY)
        assert all(laws.values())

    def test_alias(self):
        assert props.find_property_using_name('companion_idempotent') is RhoIdempotentProperty

    def test_unknown(self):
        with pytest.raises(UnknownProperty):
            props.find_property_using_name('no_such_law')
        with pytest.raises(UnknownProperty):
            props.suite_names('rho_idempotent,no_such_law')

    def test_suite_names(self):
        assert props.suite_names('all') == list(props.REGISTRY)
        assert props.suite_names('rho_idempotent, companion_idempotent') == ['rho_idempotent', 'companion_idempotent']


class TestConfig:

    def test_from_options(self):
        opt = CheckOptions().parse(['rho_idempotent', '--seed', '7', '--universe', '4', '--no_shrink'])
        cfg = PropertyConfig.from_options(opt, 'rho_idempotent')
        assert cfg.seed == 7
        assert cfg.universe_size == 4
        assert not cfg.shrink
        assert cfg.check_hypotheses
        assert cfg.attempts == 20 * cfg.instances

    def test_property_options_reach_the_config(self):
        opt = CheckOptions().parse(['l_eq_re_iff,ecq_failures', '--schema_density', '0.8', '--reach', '2'])
        cfg = PropertyConfig.from_options(opt, 'ecq_failures')
        assert cfg.schema_density == 0.8
        assert cfg.reach == 2

    def test_options_parse_twice(self):
        options = CheckOptions()
        first = options.parse(['rho_idempotent', '--seed', '1'])
        second = options.parse(['l_eq_re_iff', '--seed', '2', '--schema_density', '0.3'])
        assert (first.seed, second.seed) == (1, 2)
        assert second.schema_density == 0.3

    def test_depth_zero_is_kept(self):
        assert make_budget(CheckOptions().parse(['rho_idempotent', '--depth', '0']), depth=2).depth == 0
        assert make_budget(CheckOptions().parse(['rho_idempotent']), depth=2).depth == 2


class TestGenerators:

    def test_same_seed_same_instances(self):
        cfg = PropertyConfig(name='rho_idempotent', seed=11, instances=5)
        first, _ = RhoIdempotentProperty(cfg).collect()
        second, _ = RhoIdempotentProperty(cfg).collect()
        assert first == second
        assert len(first) == 5

    def test_universe_is_drawn_from_the_pool(self):
        universe = generators.random_universe(np.random.default_rng(0), 5)
        assert len(set(universe)) == 5
        assert set(universe) <= set(generators.POOL)

    def test_relation_kinds(self):
        rng = np.random.default_rng(3)
        universe = generators.random_universe(rng, 4)
        assert generators.is_downward(generators.random_relation(rng, universe, 2, 0.5, 'downward'))
        assert generators.contains_empty(generators.random_relation(rng, universe, 2, 0.5, 'contains_empty'),
                                         universe)
        upward = generators.random_relation(rng, universe, 2, 0.5, 'upward')
        assert all(len(delta) >= 2 for delta, _ in upward)

    def test_monotone_table(self):
        rng = np.random.default_rng(5)
        universe = generators.random_universe(rng, 4)
        table = generators.random_table(rng, universe, 2, 0.3, monotone=True)
        assert generators.is_monotone(table, universe, 2)

    def test_label(self):
        base = frozenset({(frozenset({P}), Q), (frozenset({P, Q}), Q)})
        rho = frozenset({(EMPTY_SET, P), (EMPTY_SET, Q), (frozenset({P}), Q)})
        labelled = generators.label(Instance((P, Q), 2, tables=(base,), relations=(rho, rho | {(frozenset({Q}), P)})))
        assert {'base0_monotone', 'rel0_downward', 'rel0_contains_empty', 'rel0_sub_rel1'} <= labelled.labels
        assert 'rel1_sub_rel0' not in labelled.labels

    def test_shrinks_drop_formulas_first(self):
        instance = Instance((P, Q), 1, tables=(frozenset({(frozenset({P}), Q)}),))
        first = next(instance.shrinks())
        assert first.universe == (Q,)
        assert first.tables == (EMPTY_SET,)

    def test_describe(self):
        instance = Instance((P, Q), 1, tables=(frozenset({(frozenset({P}), Q)}),))
        assert instance.describe().splitlines()[1] == 'base 0 (1 pairs): {p} |- q'


class TestReports:

    def test_combine(self):
        assert combine(Check(True), Check(None, 'open'), Check(False, 'broken')).witness == 'broken'
        assert combine(Check(True), Check(None, 'open')).ok is None
        assert combine(Check(True, tags=('a',)), Check(True, tags=('b',))).tags == ('a', 'b')

    def test_record_and_file(self, tmp_path):
        report = PropertyReport('rho_idempotent', 'law', FAIL, 3, 1, 7, {'x': 2}, 'w', 'seed 7 attempt 0')
        assert report.exit_code == 1
        assert json.loads(report.to_record())['counts'] == {'x': 2}
        path = tmp_path / 'out' / 'run.report'
        write_reports([report, PropertyReport('theoremhood', 'law', PASS)], str(path))
        lines = path.read_text(encoding='utf-8').splitlines()
        assert lines[0] == REPORT_HEADER
        assert [json.loads(line)['result'] for line in lines[1:]] == [FAIL, PASS]


class TestRuns:

    def test_companion_idempotent(self):
        report = props.run_property('companion_idempotent', PropertyConfig(seed=7, instances=50))
        assert report.result == PASS, report.to_text()
        assert report.name == 'rho_idempotent'
        assert report.run == 50

    def test_theoremhood(self):
        report = props.run_property('theoremhood', PropertyConfig(seed=2, instances=30))
        assert report.result == PASS, report.to_text()

    def test_shortcut_agrees(self):
        report = props.run_property('shortcut_agrees', PropertyConfig(seed=4, instances=20, universe_size=4))
        assert report.result == PASS, report.to_text()

    def test_fixed_instance_replay(self):
        report = props.run_property('re_not_monotone_in_base')
        assert report.result == PASS, report.to_text()
        assert report.run == 1

    def test_upward_sigma_breaks_dd_commute(self):
        cfg = PropertyConfig(seed=0, instances=50, sigma_generator='upward', check_hypotheses=False, shrink=False)
        report = props.run_property('dd_commute', cfg)
        assert report.result == FAIL
        assert report.exit_code == 1
        assert '(rho)^sigma <= (sigma)^rho' in report.witness

    def test_no_accepted_instance_is_inconclusive(self):
        cfg = PropertyConfig(seed=0, instances=5, max_attempts=0)
        report = props.run_property('rho_idempotent', cfg)
        assert report.result == INCONCLUSIVE
        assert report.exit_code == 2

    def test_engine_disagreement_fails_the_law(self, monkeypatch):
        def empty_engine(table, rho, pure=False, monotonic=False):
            return TableDump(table.universe, table.cap, frozenset(), True, 'empty_engine')

        monkeypatch.setattr(tables, 'engine_companion', empty_engine)
        report = props.run_property('rho_monotone', PropertyConfig(seed=3, instances=20, shrink=False))
        assert report.result == FAIL
        assert 'engine empty_engine' in report.witness
        assert report.counts['engine_disagrees'] >= 1

    def test_engine_agrees_on_companion_laws(self):
        report = props.run_property('comp_i', PropertyConfig(seed=1, instances=20))
        assert report.result == PASS, report.to_text()
        assert 'engine_disagrees' not in report.counts

    def test_deduction_theorem_replays(self):
        report = props.run_property('re_eq_l_under_dt', PropertyConfig(seed=1, instances=2))
        assert report.result == PASS, report.to_text()
        assert report.run == 2
        assert report.counts == {'dt_route': 1, 'explosion_blocked': 1}

    def test_restricted_mp_is_sound_for_pwk(self):
        report = props.run_property('re_eq_l_under_dt', PropertyConfig(seed=2, instances=8, universe_size=4))
        assert report.result == PASS, report.to_text()
        assert report.counts['sound'] == 6
