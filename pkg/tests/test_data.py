from argparse import Namespace

import pytest

from data import find_logic_using_name, list_logics, load_logic, load_table, session_universe
from data.logic_file import TABLE_HEADER, parse_logic
from data.table_file import parse_dump, read_dump, write_dump
from logic.errors import DefinitionError, ParseError, UnknownLogic
from logic.hilbert import HilbertStructure
from logic.oracle import dump
from logic.structures import ExtensionalStructure, MatrixStructure
from logic.syntax import Var, generate_universe

from conftest import f, fs

HEADER = """logic tiny
signature {
    & 2
}
variables {
    p q
}
"""


def test_bundled_samples():
    assert list_logics() == ['cpc', 'cpc_hilbert', 'pwk', 's1', 's2']
    assert find_logic_using_name('s1.logic') == find_logic_using_name('s1')


def test_unknown_logic():
    with pytest.raises(UnknownLogic):
        load_logic('no_such_logic')


def test_hilbert_sample():
    definition = load_logic('s1')
    assert definition.backend == 'schemata'
    assert definition.depth == 2
    assert [s.name for s in definition.schemata] == ['R1', 'R2']
    assert definition.variables == ('p', 'q')
    assert isinstance(definition.structure(), HilbertStructure)


def test_modus_ponens_sample():
    definition = load_logic('cpc_hilbert')
    assert [s.name for s in definition.schemata] == ['K', 'S', 'C', 'MP']
    assert [len(s.premises) for s in definition.schemata] == [0, 0, 0, 2]
    assert definition.signature.symbols() == ['~', '>']


def test_session_depth_zero():
    definition = load_logic('s1')
    S = definition.structure()
    assert session_universe(Namespace(depth=0, variables=[]), definition, S) == (Var('p'), Var('q'))
    assert len(session_universe(Namespace(depth=None, variables=[]), definition, S)) > 2


def test_matrix_sample():
    definition = load_logic('pwk')
    assert definition.backend == 'matrix'
    assert definition.matrix.values == ('0', 'e', '1')
    assert definition.matrix.designated == {'e', '1'}
    structure = definition.structure()
    assert isinstance(structure, MatrixStructure)
    assert structure.name == 'pwk'


def test_extensional_block():
    definition = parse_logic(HEADER + """extensional {
    cap 1
    formula 0 p
    formula 1 (p & q)
    pair 1 |- 0
    pair |- 1
}
""")
    S = definition.structure()
    assert isinstance(S, ExtensionalStructure)
    assert S.entail(fs('(p & q)'), f('p')).is_proved
    assert S.entail(frozenset(), f('(p & q)')).is_proved
    assert S.entail(fs('p'), f('(p & q)')).is_refuted


def test_axiom_and_multi_premise_schemata():
    definition = parse_logic(HEADER + """schemata {
    AX: / (p & p)
    C: ?A ; ?B / (?A & ?B)
}
""")
    axiom, conjunction = definition.schemata
    assert axiom.premises == ()
    assert len(conjunction.premises) == 2


@pytest.mark.parametrize('body', [
    'schemata {\n    R1: (?A & ?B) / ?A\n}\nmatrix {\n    values 0 1\n    designated 1\n    & 0 0 = 0\n}\n',
    'matrix {\n    values 0 1\n    designated 1\n    & 0 0 = 0\n}\n',
    'schemata {\n    R1: (?A & ?B) / ?A\n',
    'extensional {\n    formula 0 p\n    pair 0 |- 3\n}\n',
    '',
])
def test_definition_errors(body):
    with pytest.raises(DefinitionError):
        parse_logic(HEADER + body)


def test_missing_logic_line():
    with pytest.raises(DefinitionError):
        parse_logic('signature {\n    & 2\n}\nmatrix {\n    values 0 1\n}\n')


def test_bad_formula_reports_its_line():
    with pytest.raises(ParseError) as info:
        parse_logic(HEADER + 'schemata {\n    R1: (?A $ ?B) / ?A\n}\n')
    assert info.value.line == 9


def test_bad_variable():
    with pytest.raises(DefinitionError) as info:
        parse_logic('logic v\nsignature {\n    & 2\n}\nvariables {\n    p Q\n}\nmatrix {\n}\n')
    assert info.value.line == 6


class TestTableFiles:

    def test_round_trip(self, s1, tmp_path):
        definition = load_logic('s1')
        table = dump(s1, generate_universe(definition.signature, definition.variables, 1), 1)
        path = write_dump(table, str(tmp_path / 'tables' / 's1.table'), definition.signature, definition.variables)
        _, loaded = read_dump(path)
        assert loaded.table == table.table
        assert loaded.universe == table.universe
        assert loaded.cap == 1
        assert loaded.complete
        assert load_table(path).table == table.table

    def test_table_file_is_a_logic(self, cpc, tmp_path):
        universe = (f('p'), f('q'), f('~p'), f('(p | q)'))
        table = dump(cpc, universe, 2)
        path = write_dump(table, str(tmp_path / 'cpc.table'), load_logic('cpc').signature)
        S = load_logic(path).structure()
        for delta in table.premise_sets():
            for alpha in universe:
                assert S.entail(delta, alpha).is_proved == cpc.entail(delta, alpha).is_proved

    def test_header_is_required(self, tmp_path):
        definition = load_logic('cpc')
        path = tmp_path / 't.table'
        write_dump(dump(definition.structure(), (f('p'),), 1), str(path), definition.signature)
        text = path.read_text(encoding='utf-8')
        assert text.startswith(TABLE_HEADER)
        assert parse_dump(text)[1].table == {(fs('p'), f('p'))}
        with pytest.raises(DefinitionError):
            parse_dump(text.replace(TABLE_HEADER, '', 1))

    def test_schemata_are_not_a_table(self):
        with pytest.raises(DefinitionError):
            parse_dump(TABLE_HEADER + '\n' + HEADER + 'schemata {\n    R1: (?A & ?B) / ?A\n}\n')
