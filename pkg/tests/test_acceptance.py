"""Desk-scale replays of the acceptance runs. Select them with -m acceptance."""
import numpy as np
import pytest

import check
import props
from logic.companions import L, CompanionStructure
from logic.hilbert import restrict_rules
from logic.oracle import brute_companion, dump, equal_tables, included
from logic.structures import WITHIN_UNIVERSE
from logic.syntax import generate_universe
from props.base_property import PASS, PropertyConfig

from conftest import SIG, f, fs

pytestmark = pytest.mark.acceptance

DEPTH_ONE = generate_universe(SIG, ('p', 'q'), 1)
DEPTH_TWO = tuple(g for g in generate_universe(SIG, ('p', 'q'), 2) if g.depth == 2)
# p, q and ten depth-2 formulas drawn with a fixed seed
MIXED = (f('p'), f('q')) + tuple(DEPTH_TWO[i] for i in
                                 sorted(np.random.default_rng(2022).choice(len(DEPTH_TWO), 10, replace=False)))


def test_remark_replay(s1, s2, remark_universe, remark_budget):
    gamma, alpha = fs('(p & q)'), f('(p | q)')
    s1_re, s2_re = restrict_rules(s1), restrict_rules(s2)
    second = dump(s2_re, remark_universe, 1)
    first = dump(s1_re, remark_universe, 1)
    assert second.holds(gamma, alpha)
    assert first.complete and not first.holds(gamma, alpha)

    proved = s2_re.entail(gamma, alpha, remark_budget)
    assert len(proved.certificate) == 2
    assert proved.certificate.replay(s2_re, gamma, remark_universe, alpha)
    refuted = s1_re.entail(gamma, alpha, remark_budget)
    assert refuted.is_refuted and refuted.scope == WITHIN_UNIVERSE

    assert included(dump(s2, remark_universe, 1), dump(s1, remark_universe, 1)).holds


@pytest.mark.parametrize('universe', [DEPTH_ONE, MIXED], ids=['depth_one', 'mixed_depth_two'])
def test_left_companion_of_cpc_is_pwk(cpc, pwk, universe):
    expected = dump(pwk, universe, 3)
    engine = dump(CompanionStructure(cpc, L), universe, 3)
    comparison = equal_tables(engine, expected)
    assert comparison.holds, comparison.describe()
    # the same table from the literal definition, without the shortcut
    assert equal_tables(brute_companion(dump(cpc, universe, 3), L), engine).holds


COMPANION_SUITE = ('rho_monotone', 'prho_monotone', 'rho_subset_base', 'prho_subset_base', 'rho_idempotent',
                   'prho_idempotent', 'pair_monotone', 'union_intersect', 'comp_i', 'comp_ii', 'comp_iii',
                   'comp_iv', 'comp_v', 'dd_commute', 'theoremhood', 'shortcut_agrees')
VARIABLE_INCLUSION_SUITE = ('l_monotone', 'l_idempotent', 'l_pair_monotone')
HILBERT_SUITE = ('re_subset_base', 're_idempotent', 're_translation', 'l_eq_re_iff', 'pi_eq_rho', 'hilbert_tarski',
                 're_eq_l_under_dt')
REACH_SUITE = ('finite_reach_nontrivial', 'ecq_failures')


@pytest.mark.parametrize('name', COMPANION_SUITE + VARIABLE_INCLUSION_SUITE + REACH_SUITE)
def test_table_laws(name):
    report = props.run_property(name, PropertyConfig(seed=1, universe_size=5, premise_cap=3, instances=100))
    assert report.result == PASS, report.to_text()
    assert report.run >= 100


@pytest.mark.parametrize('name', HILBERT_SUITE)
def test_hilbert_laws(name):
    report = props.run_property(name, PropertyConfig(seed=1, instances=10))
    assert report.result == PASS, report.to_text()
    assert report.run >= 10


def test_pi_ranges_over_every_restriction():
    report = props.run_property('pi_eq_rho', PropertyConfig(seed=1, instances=30))
    assert report.result == PASS, report.to_text()
    assert {'Pi=L', 'Pi=PR', 'Pi=L,PR'} <= set(report.counts)


def test_negation_explosion_fails_in_the_left_companion(cpc):
    assert CompanionStructure(cpc, L).entail(fs('p', '~p'), f('q')).is_refuted


def test_check_all(capsys):
    assert check.main(['all', '--seed', '1', '--universe', '5', '--instances', '20']) == 0
    assert '32 of 32 properties passed' in capsys.readouterr().out
