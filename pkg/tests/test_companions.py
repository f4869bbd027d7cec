import pytest

from logic.companions import (EMPTY, L, NEVER, PR, TOTAL, CompanionCertificate, CompanionStructure,
                              DeclaredAntitheorems, Flag, MatrixAntitheorems, Relation, SampledAntitheorems,
                              check_flags, classify, make_P, make_R, rel_from_structure, rel_L,
                              rel_nontrivial, rel_PR, rel_R)
from logic.errors import IndeterminateNontriviality, PremiseSetTooLarge
from logic.structures import FULL, Budget, ExtensionalStructure
from logic.syntax import App, Var, generate_universe

from conftest import SIG, f, fs

EMPTY_SET = frozenset()


class TestVariableInclusion:

    def test_left(self):
        assert rel_L(fs('(p & q)'), f('(p | q)'))
        assert not rel_L(fs('r'), f('p'))
        assert all(rel_L(EMPTY_SET, a) for a in generate_universe(SIG, ('p', 'q'), 1))

    def test_right(self):
        assert rel_PR(fs('p', 'q'), f('(p & q)'))
        assert not rel_PR(fs('p'), f('(p & q)'))
        assert rel_PR(fs('p'), App('T'))
        assert rel_PR(EMPTY_SET, App('T'))

    def test_combinators(self):
        assert (L | PR)(fs('p'), f('p'))
        assert not (L & PR)(fs('p'), f('(p | q)'))
        assert (L & PR)(fs('(p & q)'), f('(p | q)'))


class TestRightRelation:

    def test_declared_antitheorem_relates_to_everything(self):
        anti = DeclaredAntitheorems([fs('p', '~p')])
        assert anti(fs('p', '~p', 'q')) is Flag.YES
        assert anti(fs('p')) is Flag.UNKNOWN
        assert rel_R(fs('p', '~p'), f('r'), anti)
        assert make_R(anti)(fs('p', '~p', 'q'), f('r'))

    def test_never(self):
        assert rel_R(fs('p', 'q'), f('(p | q)'), NEVER)
        assert not rel_R(fs('p'), f('q'), NEVER)

    def test_matrix_antitheorems(self, cpc, pwk):
        assert MatrixAntitheorems(cpc.matrix)(fs('p', '~p')) is Flag.YES
        assert MatrixAntitheorems(pwk.matrix)(fs('p', '~p')) is Flag.NO
        assert MatrixAntitheorems(cpc.matrix)(fs('p')) is Flag.NO

    def test_sampled_antitheorems_never_answer_yes(self, cpc):
        probes = (f('p'), f('q'))
        sampled = SampledAntitheorems(cpc, probes, ({'q': Var('p')},))
        assert sampled(fs('p', '~p')) is Flag.UNKNOWN
        assert sampled(fs('p')) is Flag.NO


class TestNontriviality:

    def test_explosive_premises(self, cpc):
        assert not rel_nontrivial(cpc, fs('p', '~p'), [f('q')])

    def test_consistent_premises(self, cpc):
        assert rel_nontrivial(cpc, fs('p'), [f('q')])
        assert rel_nontrivial(cpc, EMPTY_SET, [f('q')])

    def test_indeterminate(self, s1):
        with pytest.raises(IndeterminateNontriviality):
            rel_nontrivial(s1, fs('(p & q)'), [f('p')], Budget(step_cap=0))

    def test_paraconsistentization_relation(self, cpc):
        P = make_P(cpc, [f('q')])
        assert P(fs('p'), f('r'))
        assert not P(fs('p', '~p'), f('r'))
        assert P.downward_directed is Flag.YES


class TestClassify:

    def test_left_is_downward_directed(self):
        report = classify(L, generate_universe(SIG, ('p', 'q'), 1)[:6])
        assert report.downward_directed
        assert report.contains_empty
        assert check_flags(L, report) == []

    def test_right_is_not(self):
        report = classify(PR, (f('p'), f('q'), f('(p & q)')))
        assert not report.downward_directed
        assert not report.contains_empty
        assert check_flags(PR, report) == []

    def test_empty_relation(self):
        report = classify(EMPTY, (f('p'), f('q')))
        assert report.downward_directed
        assert report.max_reach == 0

    def test_wrong_declaration(self):
        liar = Relation('liar', rel_PR, downward_directed=Flag.YES)
        assert check_flags(liar, classify(liar, (f('p'), f('q'), f('(p & q)')))) == ['downward_directed']

    def test_from_pairs(self):
        rho = Relation.from_pairs('rho', [(fs('p'), f('q'))])
        assert rho(fs('p'), f('q'))
        assert not rho(fs('q'), f('q'))
        assert rho.finite_reach is Flag.YES

    def test_structure_relation(self, cpc, s1):
        assert rel_from_structure(cpc)(fs('p', '(p > q)'), f('q'))
        assert not rel_from_structure(cpc).conservative
        starved = rel_from_structure(s1, Budget(step_cap=0))
        assert starved.conservative
        assert not starved(fs('(p & q)'), f('p'))


class TestCompanionEntails:

    def test_left_companion_of_cpc_refutes_modus_ponens(self, cpc):
        verdict = CompanionStructure(cpc, L).entail(fs('p', '(p > q)'), f('q'))
        assert verdict.is_refuted
        assert verdict.scope == FULL

    def test_left_companion_of_cpc_keeps_conjunction(self, cpc):
        verdict = CompanionStructure(cpc, L).entail(fs('p', 'q'), f('(p & q)'))
        assert verdict.is_proved
        assert isinstance(verdict.certificate, CompanionCertificate)
        assert verdict.certificate.witness == fs('p', 'q')

    def test_left_companion_of_cpc_is_paraconsistent(self, cpc):
        assert CompanionStructure(cpc, L).entail(fs('p', '~p'), f('q')).is_refuted
        assert CompanionStructure(cpc, L).entail(fs('p', '~p'), f('(p | q)')).is_proved

    def test_pure_companion_forbids_the_empty_subset(self):
        t = Var('t')
        base = ExtensionalStructure((t,), [((), t)])
        assert CompanionStructure(base, TOTAL, pure=True).entail(EMPTY_SET, t).is_refuted
        assert CompanionStructure(base, TOTAL).entail(EMPTY_SET, t).is_proved

    def test_premise_limit(self, cpc):
        with pytest.raises(PremiseSetTooLarge):
            CompanionStructure(cpc, L, premise_limit=2).entail(fs('p', 'q', '~p'), f('q'))

    def test_shortcut_and_sweep_agree(self, cpc):
        universe = generate_universe(SIG, ('p', 'q'), 1)[:9]
        fast, slow = CompanionStructure(cpc, L), CompanionStructure(cpc, L, shortcut=False)
        assert fast.uses_shortcut and not slow.uses_shortcut
        premises = fs('p', '~q', '(p & q)')
        for goal in universe:
            assert fast.entail(premises, goal).status is slow.entail(premises, goal).status

    def test_right_companion_of_cpc(self, cpc):
        C = CompanionStructure(cpc, make_R(MatrixAntitheorems(cpc.matrix)))
        assert C.entail(fs('p', '~p'), f('q')).is_proved
        assert C.entail(fs('p'), f('(p | q)')).is_refuted
        assert C.entail(fs('p', 'q'), f('(p | q)')).is_proved

    def test_exhausted_base(self, s1):
        verdict = CompanionStructure(s1, TOTAL).entail(fs('(p & q)'), f('p'), Budget(step_cap=0))
        assert verdict.is_exhausted

    @pytest.mark.parametrize('cap, premises, goal', [
        (1, ('p', 'q'), '(q | p)'),
        (2, ('p', '(q & p)'), '(p | q)'),
    ])
    def test_shortcut_under_a_step_cap(self, s1, remark_universe, cap, premises, goal):
        budget = Budget(universe=remark_universe, step_cap=cap)
        fast, slow = CompanionStructure(s1, L), CompanionStructure(s1, L, shortcut=False)
        assert fast.uses_shortcut
        assert slow.entail(fs(*premises), f(goal), budget).is_proved
        assert fast.entail(fs(*premises), f(goal), budget).is_proved

    def test_capped_shortcut_never_loses_a_proof(self, s1, remark_universe):
        small = [g for g in remark_universe if g.depth <= 1]
        pairs = [frozenset({a, b}) for i, a in enumerate(small) for b in small[i + 1:]]
        fast, slow = CompanionStructure(s1, L), CompanionStructure(s1, L, shortcut=False)
        for cap in (1, 2, 3):
            budget = Budget(universe=remark_universe, step_cap=cap)
            for premises in pairs:
                for goal in small:
                    expected = slow.entail(premises, goal, budget).is_proved
                    assert fast.entail(premises, goal, budget).is_proved == expected, (cap, premises, goal)
