import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logic.errors import (ArityMismatch, DefinitionError, EmptyInput, MalformedFormula,
                          UnbalancedParenthesis, UnknownSymbol)
from logic.syntax import (App, Meta, Signature, Substitution, Var, generate_universe, parse,
                          parse_formula_list, render, subformulas, substitute, vars_of, vars_set)

from conftest import SIG, f

variables = st.sampled_from(['p', 'q', 'r', 's'])
formulas = st.recursive(
    variables.map(Var),
    lambda children: st.one_of(
        children.map(lambda a: App('~', (a,))),
        st.tuples(st.sampled_from(['&', '|', '>']), children, children).map(lambda t: App(t[0], (t[1], t[2])))),
    max_leaves=8)
substitutions = st.dictionaries(variables, formulas, max_size=3)


def test_parse_binary():
    assert parse('(p & q)', SIG) == App('&', (Var('p'), Var('q')))


def test_parse_atom():
    assert parse('p', SIG) == Var('p')


def test_parse_prefix_and_nesting():
    assert parse('~(p > ~q)', SIG) == App('~', (App('>', (Var('p'), App('~', (Var('q'),)))),))


def test_parse_functional_and_constant():
    sig = Signature((('T', 0), ('Maj', 3)))
    formula = parse('Maj(p, T, q)', sig)
    assert formula == App('Maj', (Var('p'), App('T'), Var('q')))
    assert render(formula) == 'Maj(p, T, q)'


def test_meta_only_when_allowed():
    assert parse('(?A & ?B)', SIG, allow_meta=True) == App('&', (Meta('?A'), Meta('?B')))
    with pytest.raises(UnknownSymbol):
        parse('(?A & ?B)', SIG)


@pytest.mark.parametrize('text, error', [
    ('(p |', UnbalancedParenthesis),
    ('p)', UnbalancedParenthesis),
    ('', EmptyInput),
    ('   ', EmptyInput),
    ('(p $ q)', UnknownSymbol),
    ('(p)', MalformedFormula),
    ('(p & q & r)', ArityMismatch),
    ('(p & q | r)', MalformedFormula),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse(text, SIG)


def test_parse_error_carries_position():
    with pytest.raises(UnknownSymbol) as info:
        parse('(p & $)', SIG)
    assert info.value.line == 1
    assert info.value.col == 6


def test_signature_rejects_bad_symbols():
    with pytest.raises(DefinitionError):
        Signature((('and', 2),))
    with pytest.raises(DefinitionError):
        Signature((('&', 2), ('&', 1)))
    with pytest.raises(DefinitionError):
        Signature((('(', 2),))


def test_vars():
    assert vars_of(f('(p & q)')) == {'p', 'q'}
    assert vars_of(f('p')) == {'p'}
    assert vars_of(App('T')) == frozenset()


def test_vars_set():
    assert vars_set([f('(p & q)'), f('r')]) == {'p', 'q', 'r'}
    assert vars_set([]) == frozenset()
    assert vars_set([f('p'), f('(p | p)')]) == {'p'}


def test_substitute_examples():
    s = Substitution({'p': f('(q & r)')})
    assert s(f('(p | p)')) == f('((q & r) | (q & r))')
    assert substitute({}, f('(p > q)')) == f('(p > q)')
    assert substitute({'p': Var('q')}, Var('r')) == Var('r')


def test_parse_formula_list_splits_at_top_level():
    assert parse_formula_list('p, (p > q), ~(p & q)', SIG) == [f('p'), f('(p > q)'), f('~(p & q)')]
    assert parse_formula_list('', SIG) == []


def test_subformulas_and_depth():
    formula = f('~(p & q)')
    assert subformulas(formula) == {formula, f('(p & q)'), f('p'), f('q')}
    assert formula.depth == 2


def test_universe_sizes():
    sig = Signature((('&', 2), ('|', 2)))
    assert len(generate_universe(sig, ('p', 'q'), 1)) == 10
    assert len(generate_universe(sig, ('p', 'q'), 2)) == 202
    assert generate_universe(sig, ('q', 'p'), 0) == (Var('p'), Var('q'))


def test_universe_is_ordered_by_depth():
    universe = generate_universe(SIG, ('p', 'q'), 2)
    depths = [g.depth for g in universe]
    assert depths == sorted(depths)
    assert len(set(universe)) == len(universe)


@settings(deadline=None)
@given(formulas)
def test_render_parse_round_trip(formula):
    assert parse(render(formula), SIG) == formula


@settings(deadline=None)
@given(formulas)
def test_identity_substitution(formula):
    assert substitute({v: Var(v) for v in formula.variables}, formula) == formula


@settings(deadline=None)
@given(formulas, substitutions)
def test_substitution_variables(formula, mapping):
    expected = set()
    for v in formula.variables:
        expected |= mapping[v].variables if v in mapping else {v}
    assert substitute(mapping, formula).variables == expected


@settings(deadline=None)
@given(formulas, substitutions, substitutions)
def test_substitution_composes(formula, first, second):
    composed = {v: substitute(second, first.get(v, Var(v))) for v in set(first) | set(second)}
    assert substitute(second, substitute(first, formula)) == substitute(composed, formula)
