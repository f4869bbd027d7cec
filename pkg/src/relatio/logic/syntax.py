"""Formula algebra over a finite signature.

Formulas are immutable values built from variables, metavariables (the
schematic letters of rule schemata, written ?A, ?B, ...) and applications of
declared connectives. Equality is structural and nothing is ever normalised.

Concrete syntax (one string per formula):
    atoms        p, q1, foo_bar         [a-z][a-zA-Z0-9_]*
    metavariable ?A, ?Left              only where a schema is being read
    constants    T                      arity 0, written bare
    prefix       ~p, ~(p & q)           arity 1
    infix        (p & q)                arity 2, parentheses mandatory
    functional   Maj(p, q, r)           arity >= 3
"""
import itertools
import logging
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

import pyparsing as pp

from .errors import (ArityMismatch, DefinitionError, EmptyInput, MalformedFormula,
                     UnbalancedParenthesis, UnknownSymbol)

LOGGER = logging.getLogger(__name__)

VARIABLE_PATTERN = r'[a-z][a-zA-Z0-9_]*'
META_PATTERN = r'\?[A-Z][a-zA-Z0-9_]*'
RESERVED_CHARACTERS = frozenset('(),;/{}#?')


@dataclass(frozen=True)
class Signature:
    """A finite list of connectives, each a (symbol, arity) pair."""
    connectives: tuple

    def __post_init__(self):
        connectives = tuple((str(symbol), int(arity)) for symbol, arity in self.connectives)
        object.__setattr__(self, 'connectives', connectives)
        seen = set()
        for symbol, arity in connectives:
            if not symbol or any(ch.isspace() for ch in symbol):
                raise DefinitionError('connective symbol %r is empty or contains whitespace' % symbol)
            if RESERVED_CHARACTERS.intersection(symbol):
                raise DefinitionError('connective symbol %r uses a reserved character' % symbol)
            if re.fullmatch(VARIABLE_PATTERN, symbol):
                raise DefinitionError('connective symbol %r would read as a variable' % symbol)
            if symbol in seen:
                raise DefinitionError('connective symbol %r declared twice' % symbol)
            if arity < 0:
                raise DefinitionError('connective %r has negative arity %d' % (symbol, arity))
            seen.add(symbol)

    @classmethod
    def from_mapping(cls, mapping):
        """Build a signature from a {symbol: arity} mapping (insertion order kept)."""
        return cls(tuple(mapping.items()))

    @cached_property
    def arities(self):
        return dict(self.connectives)

    def arity(self, symbol):
        return self.arities[symbol]

    def symbols(self, arity=None):
        return [s for s, a in self.connectives if arity is None or a == arity]

    def __contains__(self, symbol):
        return symbol in self.arities


class Formula:
    """Common base of Var, Meta and App."""

    def __str__(self):
        return render(self)

    def __repr__(self):
        return '%s(%r)' % (type(self).__name__, render(self))


@dataclass(frozen=True, repr=False)
class Var(Formula):
    name: str

    def __hash__(self):
        return hash(('var', self.name))

    @cached_property
    def variables(self):
        return frozenset((self.name,))

    @property
    def metavariables(self):
        return frozenset()

    @property
    def depth(self):
        return 0


@dataclass(frozen=True, repr=False)
class Meta(Formula):
    """A schematic letter; only appears inside rule schemata."""
    name: str

    def __hash__(self):
        return hash(('meta', self.name))

    @property
    def variables(self):
        return frozenset()

    @property
    def metavariables(self):
        return frozenset((self.name,))

    @property
    def depth(self):
        return 0


@dataclass(frozen=True, repr=False)
class App(Formula):
    connective: str
    args: tuple = ()

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, 'args', tuple(self.args))

    @cached_property
    def _hash(self):
        return hash((self.connective, self.args))

    def __hash__(self):
        return self._hash

    @cached_property
    def variables(self):
        return frozenset().union(*(a.variables for a in self.args))

    @cached_property
    def metavariables(self):
        return frozenset().union(*(a.metavariables for a in self.args))

    @cached_property
    def depth(self):
        return 1 + max((a.depth for a in self.args), default=-1) if self.args else 0


@dataclass(frozen=True)
class Substitution:
    """A finite map from variable (or metavariable) tokens to formulas.

    Tokens outside the map are left where they are.
    """
    mapping: dict

    def __call__(self, formula):
        return substitute(self, formula)


# ----------------------------------------------------------------------------
# variables, substitution, printing


def vars_of(formula):
    """Return the set of variables occurring in <formula>."""
    return formula.variables


def vars_set(formulas):
    """Return the union of vars_of over a finite collection of formulas."""
    return frozenset().union(*(f.variables for f in formulas))


def depth(formula):
    return formula.depth


def subformulas(formula):
    found = {formula}
    if isinstance(formula, App):
        for arg in formula.args:
            found |= subformulas(arg)
    return frozenset(found)


def substitute(s, formula):
    """Apply a Substitution (or a plain dict) homomorphically to <formula>."""
    mapping = s.mapping if isinstance(s, Substitution) else s
    if not mapping:
        return formula
    return _substitute(mapping, formula)


def _substitute(mapping, formula):
    if isinstance(formula, (Var, Meta)):
        return mapping.get(formula.name, formula)
    if not formula.args:
        return formula
    return App(formula.connective, tuple(_substitute(mapping, a) for a in formula.args))


def render(formula):
    if isinstance(formula, (Var, Meta)):
        return formula.name
    args = formula.args
    if not args:
        return formula.connective
    if len(args) == 1:
        return formula.connective + render(args[0])
    if len(args) == 2:
        return '(%s %s %s)' % (render(args[0]), formula.connective, render(args[1]))
    return '%s(%s)' % (formula.connective, ', '.join(render(a) for a in args))


def sort_key(formula):
    return (formula.depth, render(formula))


# ----------------------------------------------------------------------------
# parsing


def _fail(cls, message, text, loc):
    return cls(message, pp.lineno(loc, text), pp.col(loc, text))


@lru_cache(maxsize=None)
def _tokenizer(sig, allow_meta):
    symbols = sig.symbols()
    parts = []
    if symbols:
        parts.append(pp.one_of(symbols))
    if allow_meta:
        parts.append(pp.Regex(META_PATTERN))
    parts.append(pp.Regex(VARIABLE_PATTERN))
    parts.append(pp.one_of('( ) ,'))
    return pp.MatchFirst(parts)


@lru_cache(maxsize=None)
def _grammar(sig, allow_meta):
    LPAR, RPAR = pp.Suppress('('), pp.Suppress(')')
    formula = pp.Forward()
    alternatives = []

    # longest symbols first so that no symbol shadows a longer one
    for symbol, arity in sorted(sig.connectives, key=lambda c: -len(c[0])):
        if arity == 2:
            continue
        head = pp.Literal(symbol)
        if arity == 0:
            expr = head.copy().set_parse_action(lambda t: App(t[0], ()))
        elif arity == 1:
            expr = (head + formula).set_parse_action(lambda t: App(t[0], (t[1],)))
        else:
            expr = head + LPAR + pp.Group(pp.DelimitedList(formula)) + RPAR
            expr.set_parse_action(_functional_action(symbol, arity))
        alternatives.append(expr)

    binaries = sig.symbols(2)
    if binaries:
        group = LPAR + formula + pp.ZeroOrMore(pp.one_of(binaries) + formula) + RPAR
    else:
        group = LPAR + formula + RPAR
    alternatives.append(group.set_parse_action(_group_action))
    if allow_meta:
        alternatives.append(pp.Regex(META_PATTERN).set_parse_action(lambda t: Meta(t[0])))
    alternatives.append(pp.Regex(VARIABLE_PATTERN).set_parse_action(lambda t: Var(t[0])))
    formula <<= pp.MatchFirst(alternatives)
    return formula


def _functional_action(symbol, arity):
    def action(s, loc, toks):
        args = tuple(toks[1])
        if len(args) != arity:
            raise _fail(ArityMismatch, '%s takes %d arguments, got %d' % (symbol, arity, len(args)), s, loc)
        return App(symbol, args)
    return action


def _group_action(s, loc, toks):
    items = list(toks)
    if len(items) == 1:
        raise _fail(MalformedFormula, 'parentheses around a single formula', s, loc)
    if len(items) == 3:
        return App(items[1], (items[0], items[2]))
    operators = set(items[1::2])
    if len(operators) == 1:
        raise _fail(ArityMismatch, 'binary connective %s applied to %d arguments'
                    % (items[1], len(items[0::2])), s, loc)
    raise _fail(MalformedFormula, 'operators %s mixed without parentheses'
                % ', '.join(sorted(operators)), s, loc)


def _check_tokens(text, sig, allow_meta):
    """Reject unknown symbols and unbalanced parentheses before the real parse."""
    position = 0
    opened = []
    for toks, start, end in _tokenizer(sig, allow_meta).scan_string(text):
        gap = text[position:start]
        if gap.strip():
            offset = position + len(gap) - len(gap.lstrip())
            raise _fail(UnknownSymbol, 'unknown symbol %r' % gap.split()[0], text, offset)
        token = toks[0]
        if token == '(':
            opened.append(start)
        elif token == ')':
            if not opened:
                raise _fail(UnbalancedParenthesis, 'unexpected )', text, start)
            opened.pop()
        position = end
    rest = text[position:]
    if rest.strip():
        offset = position + len(rest) - len(rest.lstrip())
        raise _fail(UnknownSymbol, 'unknown symbol %r' % rest.split()[0], text, offset)
    if opened:
        raise _fail(UnbalancedParenthesis, 'unclosed (', text, opened[-1])


def parse(text, sig, allow_meta=False):
    """Read one formula.

    Parameters:
        text (str)        -- the formula in the concrete syntax of this module
        sig (Signature)   -- connectives that may occur
        allow_meta (bool) -- accept ?A-style metavariables (rule schemata only)

    Raises EmptyInput, UnknownSymbol, UnbalancedParenthesis, ArityMismatch or
    MalformedFormula, each carrying line and column.
    """
    if not text or not text.strip():
        raise EmptyInput('empty formula')
    _check_tokens(text, sig, allow_meta)
    try:
        return _grammar(sig, allow_meta).parse_string(text, parse_all=True)[0]
    except pp.ParseException as err:
        raise MalformedFormula('cannot read formula: %s' % err.msg, err.lineno, err.col) from None


def split_top_level(text, separator=','):
    """Split <text> at <separator> characters that are not inside parentheses."""
    pieces, level, current = [], 0, []
    for ch in text:
        if ch == '(':
            level += 1
        elif ch == ')':
            level -= 1
        if ch == separator and level == 0:
            pieces.append(''.join(current))
            current = []
        else:
            current.append(ch)
    pieces.append(''.join(current))
    return [p.strip() for p in pieces]


def parse_formula_list(text, sig, allow_meta=False):
    """Read a comma-separated list of formulas; an empty string is the empty list."""
    if not text or not text.strip():
        return []
    return [parse(piece, sig, allow_meta) for piece in split_top_level(text)]


# ----------------------------------------------------------------------------
# universes


def generate_universe(sig, variables, depth):
    """Every formula over <variables> whose connective depth is at most <depth>.

    The order is deterministic: by depth, then by signature order, then by the
    order of the argument tuples.
    """
    level = [Var(v) for v in sorted(variables)] + [App(c, ()) for c in sig.symbols(0)]
    universe = list(level)
    frontier = set(level)
    for _ in range(depth):
        fresh = []
        for symbol, arity in sig.connectives:
            if arity == 0:
                continue
            for args in itertools.product(universe, repeat=arity):
                if any(a in frontier for a in args):
                    fresh.append(App(symbol, args))
        universe.extend(fresh)
        frontier = set(fresh)
        if not fresh:
            break
    LOGGER.debug('universe over %s at depth %d has %d formulas', sorted(variables), depth, len(universe))
    return tuple(universe)
