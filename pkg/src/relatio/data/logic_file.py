"""Reader and writer for logic-definition files.

A logic file is UTF-8 text, one statement per line, '#' starts a comment:

    logic s1
    depth 2                       optional default universe depth
    signature {
        & 2
        ~ 1
    }
    variables {
        p q
    }
    schemata {                    exactly one of schemata, matrix, extensional
        R1: (?A & ?B) / ?A
        AX: / (p | ~p)            an axiom has no premises
        R3: ?A ; ?B / (?A & ?B)   premises are separated by ';'
    }
    matrix {
        values 0 e 1
        designated e 1
        ~ 0 = 1                   one row per argument tuple
    }
    extensional {
        cap 1
        complete yes
        formula 0 p
        formula 1 (p & q)
        pair 1 |- 0               premise indices, then the conclusion index
    }

Dumps are written in the extensional form behind the header line
"relatio-table v1".
"""
import logging
import re
from dataclasses import dataclass, field

import pyparsing as pp

from logic.errors import DefinitionError, ParseError
from logic.hilbert import HilbertStructure, RuleSchema
from logic.structures import ExtensionalStructure, Matrix, MatrixStructure
from logic.syntax import VARIABLE_PATTERN, Signature, parse, render

LOGGER = logging.getLogger(__name__)

TABLE_HEADER = 'relatio-table v1'
BACKENDS = ('schemata', 'matrix', 'extensional')
BLOCKS = ('signature', 'variables') + BACKENDS

INTEGER = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
TOKEN = pp.Word(pp.printables, exclude_chars='{}#')
HEADER_LINE = pp.Keyword('logic') + TOKEN
DEPTH_LINE = pp.Keyword('depth') + INTEGER
OPEN_LINE = pp.one_of(BLOCKS, as_keyword=True) + pp.Suppress('{')
CONNECTIVE_LINE = TOKEN + INTEGER
SCHEMA_LINE = pp.Regex(r'[A-Za-z0-9_\'.-]+') + pp.Suppress(':') + pp.Regex(r'.*')
ROW_LINE = pp.Group(pp.OneOrMore(pp.Word(pp.printables, exclude_chars='=#'))) + pp.Suppress('=') + TOKEN
PAIR_LINE = pp.Keyword('pair') + pp.Group(pp.ZeroOrMore(INTEGER)) + pp.Suppress('|-') + INTEGER
FORMULA_LINE = pp.Keyword('formula') + INTEGER + pp.Regex(r'.+')


@dataclass
class LogicDefinition:
    """Everything a logic file declares. Exactly one backend is filled in."""
    name: str
    signature: Signature
    variables: tuple = ()
    depth: int = None
    backend: str = None
    schemata: list = field(default_factory=list)
    matrix: Matrix = None
    universe: tuple = ()
    pairs: list = field(default_factory=list)
    cap: int = None
    complete: bool = True

    def structure(self):
        if self.backend == 'schemata':
            return HilbertStructure(self.signature, self.schemata, variables=self.variables,
                                    name=self.name, depth=self.depth)
        if self.backend == 'matrix':
            return MatrixStructure(self.matrix)
        return ExtensionalStructure(self.universe, self.pairs, premise_cap=self.cap, name=self.name)


def _line(expr, text, lineno, what):
    try:
        return expr.parse_string(text, parse_all=True)
    except pp.ParseException as err:
        raise DefinitionError('cannot read %s line: %s' % (what, err.msg), lineno, err.col) from None


def _formula(text, sig, lineno, offset, allow_meta=False):
    try:
        return parse(text, sig, allow_meta=allow_meta)
    except ParseError as err:
        raise err.at_line(lineno, offset) from None


def _strip(raw):
    return raw.split('#', 1)[0].rstrip()


class _Reader:
    """Line-by-line state machine over one logic file."""

    def __init__(self, text):
        self.lines = text.splitlines()
        self.name = None
        self.depth = None
        self.connectives = []
        self.variables = []
        self.backend = None
        self.block = None
        self.body = []
        self.bodies = {}

    def run(self):
        for lineno, raw in enumerate(self.lines, 1):
            line = _strip(raw)
            if not line.strip() or line.strip() == TABLE_HEADER:
                continue
            if self.block is None:
                self.outside(line, lineno)
            elif line.strip() == '}':
                self.bodies[self.block] = self.body
                self.block = None
            else:
                self.body.append((lineno, line))
        if self.block is not None:
            raise DefinitionError('block %s is never closed' % self.block, len(self.lines), 1)
        if self.name is None:
            raise DefinitionError('missing "logic <name>" line', 1, 1)
        backends = [b for b in BACKENDS if b in self.bodies]
        if len(backends) != 1:
            raise DefinitionError('exactly one of schemata, matrix or extensional is required, found %d'
                                  % len(backends), len(self.lines), 1)
        return self.build(backends[0])

    def outside(self, line, lineno):
        word = line.split()[0]
        if word == 'logic':
            self.name = _line(HEADER_LINE, line, lineno, 'logic')[1]
        elif word == 'depth':
            self.depth = _line(DEPTH_LINE, line, lineno, 'depth')[1]
        else:
            block = _line(OPEN_LINE, line, lineno, 'block')[0]
            if block in self.bodies:
                raise DefinitionError('block %s declared twice' % block, lineno, 1)
            self.block, self.body = block, []

    def build(self, backend):
        for lineno, line in self.bodies.get('signature', ()):
            symbol, arity = _line(CONNECTIVE_LINE, line.strip(), lineno, 'signature')
            self.connectives.append((symbol, arity))
        try:
            sig = Signature(tuple(self.connectives))
        except DefinitionError as err:
            first = self.bodies['signature'][0][0] if self.bodies.get('signature') else 1
            raise err.at_line(first) from None
        for lineno, line in self.bodies.get('variables', ()):
            for token in line.split():
                if not re.fullmatch(VARIABLE_PATTERN, token):
                    raise DefinitionError('%r is not a variable' % token, lineno, line.index(token) + 1)
                self.variables.append(token)
        definition = LogicDefinition(self.name, sig, tuple(self.variables), self.depth, backend)
        getattr(self, 'read_' + backend)(definition, self.bodies[backend])
        LOGGER.debug('read logic %s (%s backend)', self.name, backend)
        return definition

    def read_schemata(self, definition, body):
        sig = definition.signature
        seen = set()
        for lineno, line in body:
            name, rest = _line(SCHEMA_LINE, line.strip(), lineno, 'schema')
            if name in seen:
                raise DefinitionError('schema %s declared twice' % name, lineno, 1)
            seen.add(name)
            if '/' not in rest:
                raise DefinitionError('schema %s has no "/" before its conclusion' % name, lineno, 1)
            premises_text, conclusion_text = rest.rsplit('/', 1)
            offset = line.index(rest)
            premises = []
            for piece in premises_text.split(';'):
                if piece.strip():
                    premises.append(_formula(piece, sig, lineno, offset + line[offset:].index(piece), True))
            conclusion = _formula(conclusion_text, sig, lineno, offset + len(premises_text) + 1, True)
            definition.schemata.append(RuleSchema(name, tuple(premises), conclusion))

    def read_matrix(self, definition, body):
        values, designated, tables = None, None, {}
        sig = definition.signature
        for lineno, line in body:
            words = line.split()
            if words[0] == 'values':
                values = words[1:]
            elif words[0] == 'designated':
                designated = words[1:]
            else:
                head, value = _line(ROW_LINE, line.strip(), lineno, 'table')
                symbol, args = head[0], tuple(head[1:])
                if symbol not in sig:
                    raise DefinitionError('table row for undeclared connective %s' % symbol, lineno, 1)
                if len(args) != sig.arity(symbol):
                    raise DefinitionError('%s takes %d arguments, row has %d'
                                          % (symbol, sig.arity(symbol), len(args)), lineno, 1)
                tables.setdefault(symbol, {})[args] = value
        if values is None or designated is None:
            raise DefinitionError('matrix block needs "values" and "designated" lines', body[0][0] if body else 1, 1)
        definition.matrix = Matrix(definition.name, values, designated, tables)

    def read_extensional(self, definition, body):
        sig = definition.signature
        formulas, pairs = {}, []
        for lineno, line in body:
            words = line.split()
            if words[0] == 'cap':
                definition.cap = int(words[1]) if words[1] != 'none' else None
            elif words[0] == 'complete':
                definition.complete = words[1] == 'yes'
            elif words[0] == 'formula':
                _, index, text = _line(FORMULA_LINE, line.strip(), lineno, 'formula')
                formulas[index] = _formula(text.strip(), sig, lineno, line.index(text.strip()))
            else:
                _, premises, conclusion = _line(PAIR_LINE, line.strip(), lineno, 'pair')
                pairs.append((lineno, tuple(premises), conclusion))
        universe = [formulas[i] for i in sorted(formulas)]
        for lineno, premises, conclusion in pairs:
            unknown = [i for i in premises + (conclusion,) if i not in formulas]
            if unknown:
                raise DefinitionError('pair refers to undeclared formula %d' % unknown[0], lineno, 1)
            definition.pairs.append((frozenset(formulas[i] for i in premises), formulas[conclusion]))
        definition.universe = tuple(universe)


def parse_logic(text):
    """Read a logic definition from a string."""
    return _Reader(text).run()


def read_logic(path):
    with open(path, encoding='utf-8') as handle:
        return parse_logic(handle.read())


def format_extensional(name, signature, universe, pairs, cap=None, complete=True, variables=()):
    """Render an extensional logic file, headed by the table header line."""
    index = {f: i for i, f in enumerate(universe)}
    lines = [TABLE_HEADER, 'logic %s' % name, 'signature {']
    lines += ['    %s %d' % (symbol, arity) for symbol, arity in signature.connectives]
    lines += ['}', 'variables {', '    %s' % ' '.join(sorted(variables)), '}', 'extensional {']
    lines.append('    cap %s' % ('none' if cap is None else cap))
    lines.append('    complete %s' % ('yes' if complete else 'no'))
    lines += ['    formula %d %s' % (i, render(f)) for i, f in enumerate(universe)]
    ordered = sorted(pairs, key=lambda p: (len(p[0]), sorted(index[f] for f in p[0]), index[p[1]]))
    for delta, alpha in ordered:
        premises = ' '.join(str(i) for i in sorted(index[f] for f in delta))
        lines.append('    pair %s|- %d' % (premises + ' ' if premises else '', index[alpha]))
    lines.append('}')
    return '\n'.join(lines) + '\n'

