"""Companion specifiers.

    companion := base | re | pi:<rel>(,<rel>)* | rho:<rel> | prho:<rel>
    rel       := L | PR | total | empty
               | R | R(anti=never|matrix|sample)
               | P | P(probes=[f; g; ...])
               | union(<rel>,<rel>) | intersect(<rel>,<rel>)
               | struct(<logic>) | table(<file>)

Parsing yields plain tuples; build_structure() turns them into structures
against a SpecContext that supplies the base structure, the session universe
and loaders for struct() and table().
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import pyparsing as pp

from .companions import (EMPTY, L, NEVER, PR, TOTAL, CompanionStructure, MatrixAntitheorems,
                         Relation, SampledAntitheorems, intersect, make_P, make_R,
                         rel_from_structure, union)
from .errors import RelatioError, UnknownRelation
from .hilbert import HilbertStructure, restrict_by, restrict_rules
from .structures import DEFAULT_PREMISE_LIMIT, MatrixStructure
from .syntax import Var, parse

LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _grammar():
    LPAR, RPAR, COMMA = map(pp.Suppress, '(),')
    rel = pp.Forward()
    simple = (pp.Keyword('PR') | pp.Keyword('L') | pp.Keyword('total') | pp.Keyword('empty'))
    simple.set_parse_action(lambda t: (t[0],))
    anti = pp.one_of('never matrix sample')
    r_rel = pp.Keyword('R') + pp.Optional(LPAR + pp.Suppress('anti') + pp.Suppress('=') + anti + RPAR)
    r_rel.set_parse_action(lambda t: ('R', t[1] if len(t) > 1 else 'never'))
    probes = pp.Suppress('[') + pp.Regex(r'[^\]]+') + pp.Suppress(']')
    p_rel = pp.Keyword('P') + pp.Optional(LPAR + pp.Suppress('probes') + pp.Suppress('=') + probes + RPAR)
    p_rel.set_parse_action(lambda t: ('P', t[1] if len(t) > 1 else None))
    binary = pp.one_of('union intersect', as_keyword=True) + LPAR + rel + COMMA + rel + RPAR
    binary.set_parse_action(lambda t: (t[0], t[1], t[2]))
    loader = pp.one_of('struct table', as_keyword=True) + LPAR + pp.Regex(r'[^()]+') + RPAR
    loader.set_parse_action(lambda t: (t[0], t[1].strip()))
    rel <<= binary | loader | r_rel | p_rel | simple

    base = pp.Keyword('base').set_parse_action(lambda t: ('base', ()))
    re_ = pp.Keyword('re').set_parse_action(lambda t: ('re', ()))
    pi = pp.Keyword('pi') + pp.Suppress(':') + pp.Group(pp.DelimitedList(rel))
    pi.set_parse_action(lambda t: ('pi', tuple(t[1])))
    rho = pp.one_of('rho prho', as_keyword=True) + pp.Suppress(':') + rel
    rho.set_parse_action(lambda t: (t[0], (t[1],)))
    return base | re_ | pi | rho, rel


def _parse(expr, text, what):
    try:
        return expr.parse_string(text, parse_all=True)[0]
    except pp.ParseException as err:
        raise UnknownRelation('cannot read %s %r at column %d' % (what, text, err.col)) from None


def parse_companion(text):
    """Return (kind, relation nodes) for a companion specifier."""
    return _parse(_grammar()[0], text.strip(), 'companion spec')


def parse_relation(text):
    return _parse(_grammar()[1], text.strip(), 'relation')


@dataclass
class SpecContext:
    """What a specifier needs to become a structure.

    Parameters:
        base (LogicalStructure)   -- the structure of the loaded logic
        signature (Signature)     -- for probe formulas
        universe (tuple)          -- session universe; default probes for P
        budget (Budget)           -- passed to every base query made by a relation
        premise_limit (int)       -- companion premise limit
        load_logic (callable)     -- name -> LogicalStructure, for struct()
        load_table (callable)     -- path -> TableDump, for table()
    """
    base: object
    signature: object = None
    universe: tuple = None
    budget: object = None
    premise_limit: int = DEFAULT_PREMISE_LIMIT
    load_logic: object = None
    load_table: object = None

    def probes(self):
        if not self.universe:
            raise UnknownRelation('P needs probe formulas or a session universe')
        return tuple(self.universe)


def _sample_substitutions(universe):
    variables = sorted({v for f in universe for v in f.variables})
    # collapse all variables onto one, the cheapest non-identity renamings
    return tuple({v: Var(target) for v in variables} for target in variables)


def build_relation(node, ctx):
    kind = node[0]
    if kind == 'L':
        return L
    if kind == 'PR':
        return PR
    if kind == 'total':
        return TOTAL
    if kind == 'empty':
        return EMPTY
    if kind == 'R':
        if node[1] == 'never':
            return make_R(NEVER)
        if node[1] == 'matrix':
            if not isinstance(ctx.base, MatrixStructure):
                raise UnknownRelation('R(anti=matrix) needs a matrix logic, not %s' % ctx.base.name)
            return make_R(MatrixAntitheorems(ctx.base.matrix))
        return make_R(SampledAntitheorems(ctx.base, ctx.probes(), _sample_substitutions(ctx.probes()), ctx.budget))
    if kind == 'P':
        if node[1] is None:
            probes = ctx.probes()
        else:
            probes = tuple(parse(text, ctx.signature) for text in node[1].split(';') if text.strip())
        return make_P(ctx.base, probes, ctx.budget)
    if kind == 'union':
        return union(build_relation(node[1], ctx), build_relation(node[2], ctx))
    if kind == 'intersect':
        return intersect(build_relation(node[1], ctx), build_relation(node[2], ctx))
    if kind == 'struct':
        if ctx.load_logic is None:
            raise UnknownRelation('struct(%s) cannot be resolved here' % node[1])
        return rel_from_structure(ctx.load_logic(node[1]), ctx.budget)
    if kind == 'table':
        if ctx.load_table is None:
            raise UnknownRelation('table(%s) cannot be resolved here' % node[1])
        table = ctx.load_table(node[1])
        return Relation.from_pairs('table(%s)' % node[1], table.table)
    raise UnknownRelation('unknown relation %r' % kind)


def build_structure(text, ctx):
    """Build the structure a companion specifier names over ctx.base."""
    kind, nodes = parse_companion(text)
    base = ctx.base
    if kind == 'base':
        return base
    if kind in ('re', 'pi') and not isinstance(base, HilbertStructure):
        raise RelatioError('companion %r needs a logic given by schemata, %s is not' % (kind, base.name))
    if kind == 're':
        return restrict_rules(base)
    relations = tuple(build_relation(node, ctx) for node in nodes)
    if kind == 'pi':
        return restrict_by(base, relations)
    structure = CompanionStructure(base, relations[0], pure=(kind == 'prho'), premise_limit=ctx.premise_limit)
    LOGGER.debug('companion %s built from %r', structure.name, text)
    return structure
