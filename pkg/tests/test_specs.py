import pytest

from logic.companions import L, CompanionStructure
from logic.errors import RelatioError, UnknownRelation
from logic.hilbert import HilbertStructure
from logic.oracle import TableDump
from logic.specs import SpecContext, build_relation, build_structure, parse_companion, parse_relation

from conftest import SIG, f, fs


@pytest.mark.parametrize('text, expected', [
    ('base', ('base', ())),
    ('re', ('re', ())),
    ('rho:L', ('rho', (('L',),))),
    ('prho:PR', ('prho', (('PR',),))),
    ('pi:L,PR', ('pi', (('L',), ('PR',)))),
])
def test_parse_companion(text, expected):
    assert parse_companion(text) == expected


def test_parse_relations():
    assert parse_relation('R') == ('R', 'never')
    assert parse_relation('R(anti=matrix)') == ('R', 'matrix')
    assert parse_relation('P(probes=[q; ~q])') == ('P', 'q; ~q')
    assert parse_relation('union(L,intersect(PR,total))') == ('union', ('L',), ('intersect', ('PR',), ('total',)))
    assert parse_relation('table(tables/a.table)') == ('table', 'tables/a.table')


@pytest.mark.parametrize('text', ['rho', 'rho:X', 'pi:', 'sigma:L', 'union(L)'])
def test_unreadable_specs(text):
    with pytest.raises(UnknownRelation):
        parse_companion(text)


def test_build_over_a_matrix(cpc):
    ctx = SpecContext(base=cpc, signature=SIG, universe=(f('p'), f('q')))
    assert build_structure('base', ctx) is cpc
    C = build_structure('rho:L', ctx)
    assert isinstance(C, CompanionStructure)
    assert C.rho is L and not C.pure
    assert build_structure('prho:PR', ctx).pure
    right = build_structure('rho:R(anti=matrix)', ctx)
    assert right.entail(fs('p', '~p'), f('q')).is_proved
    with pytest.raises(RelatioError):
        build_structure('re', ctx)


def test_build_probes(cpc):
    ctx = SpecContext(base=cpc, signature=SIG, universe=(f('p'),))
    P = build_relation(parse_relation('P(probes=[q])'), ctx)
    assert P(fs('p'), f('q'))
    assert not P(fs('p', '~p'), f('q'))


def test_build_over_schemata(s1):
    ctx = SpecContext(base=s1, signature=s1.signature)
    assert isinstance(build_structure('pi:L,PR', ctx), HilbertStructure)
    assert build_structure('re', ctx).name == 's1^re'
    with pytest.raises(UnknownRelation):
        build_structure('rho:R(anti=matrix)', ctx)


def test_loaders(cpc):
    table = TableDump((f('p'), f('q')), 1, frozenset({(fs('p'), f('q'))}))
    ctx = SpecContext(base=cpc, signature=SIG, load_table=lambda path: table)
    rho = build_relation(parse_relation('table(any)'), ctx)
    assert rho(fs('p'), f('q'))
    assert not rho(fs('q'), f('q'))
    with pytest.raises(UnknownRelation):
        build_relation(parse_relation('struct(s1)'), ctx)
