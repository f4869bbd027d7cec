"""Logical structures <L, |-> answering finite queries.

A structure is anything that can be asked whether a finite premise set
entails a formula. Three backends live here: explicit finite tables
(ExtensionalStructure), finite logical matrices (MatrixStructure) and the
abstract interface that hilbert.HilbertStructure and
companions.CompanionStructure implement. Every answer is a Verdict.
"""
import enum
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace

import numpy as np

from util.util import count_subsets, format_set, subsets

from .errors import DefinitionError, MissingTable, OutOfUniverse, UniverseTooLarge
from .syntax import App, Var, render, vars_set

LOGGER = logging.getLogger(__name__)

DEFAULT_DEPTH = 3
DEFAULT_PREMISE_LIMIT = 12
DEFAULT_MAX_SUBSETS = 4096
EVALUATION_CACHE_SIZE = 65536

FULL = 'full'
WITHIN_UNIVERSE = 'within-universe'


class Status(enum.Enum):
    PROVED = 'Proved'
    REFUTED = 'Refuted'
    EXHAUSTED = 'Exhausted'


@dataclass(frozen=True)
class Verdict:
    """The three-valued answer to one entailment query.

    Proved carries a certificate (a Derivation, a truth-table certificate, a
    table entry or a companion witness). Refuted carries the scope in which
    the refutation is definitive and, for matrices, a witness valuation.
    Exhausted carries a short report of the budget that ran out.
    """
    status: Status
    certificate: object = None
    scope: str = None
    witness: dict = None
    report: str = ''

    @classmethod
    def proved(cls, certificate):
        return cls(Status.PROVED, certificate=certificate)

    @classmethod
    def refuted(cls, scope=FULL, witness=None):
        return cls(Status.REFUTED, scope=scope, witness=witness)

    @classmethod
    def exhausted(cls, report):
        return cls(Status.EXHAUSTED, report=report)

    @property
    def is_proved(self):
        return self.status is Status.PROVED

    @property
    def is_refuted(self):
        return self.status is Status.REFUTED

    @property
    def is_exhausted(self):
        return self.status is Status.EXHAUSTED

    @property
    def exit_code(self):
        return {Status.PROVED: 0, Status.REFUTED: 1, Status.EXHAUSTED: 2}[self.status]


@dataclass(frozen=True)
class Budget:
    """Search limits for one query.

    Parameters:
        universe (tuple)     -- formulas a Hilbert search may use (None: generated from depth)
        depth (int)          -- connective depth of a generated universe
        step_cap (int)       -- maximum rule applications in one closure (None: unbounded)
        premise_limit (int)  -- largest premise set a companion sweep accepts
        max_subsets (int)    -- largest subset lattice an exhaustive check accepts
    """
    universe: tuple = None
    depth: int = DEFAULT_DEPTH
    step_cap: int = None
    premise_limit: int = DEFAULT_PREMISE_LIMIT
    max_subsets: int = DEFAULT_MAX_SUBSETS

    def with_universe(self, universe):
        return replace(self, universe=None if universe is None else tuple(universe))


DEFAULT_BUDGET = Budget()


class LogicalStructure(ABC):
    """This class is an abstract base class (ABC) for logical structures.

    To create a subclass, you need to implement the following function:
        -- <entail>:        answer Gamma |- alpha with a Verdict.
    and you may override:
        -- <consequences>:  answer a batch of goals sharing one premise set; dumps use it.

    The attribute <monotonic> declares that Gamma |- alpha implies Sigma |- alpha
    for every Sigma containing Gamma. Companion sweeps use it to skip subsets, so
    only set it where it holds.
    """
    name = 'structure'
    monotonic = False

    @abstractmethod
    def entail(self, premises, goal, budget=None):
        """Return the Verdict for premises |- goal."""

    def consequences(self, premises, candidates, budget=None):
        """Return (proved, exhausted) over the <candidates> goals.

        proved is the frozenset of candidates entailed; exhausted is True when
        at least one query ran out of budget.
        """
        premises = frozenset(premises)
        proved, exhausted = set(), False
        for goal in candidates:
            verdict = self.entail(premises, goal, budget)
            if verdict.is_proved:
                proved.add(goal)
            elif verdict.is_exhausted:
                exhausted = True
        return frozenset(proved), exhausted

    def __repr__(self):
        return '<%s %s>' % (type(self).__name__, self.name)


# ----------------------------------------------------------------------------
# extensional tables


@dataclass(frozen=True)
class TableEntry:
    """Certificate of an extensional verdict: the listed pair itself."""
    premises: frozenset
    goal: object


class ExtensionalStructure(LogicalStructure):
    """A consequence relation given by an explicit finite list of pairs.

    No closure property is assumed. <premise_cap> records the largest premise
    set the table speaks about (dumps only list |Delta| <= cap); None means all.
    """

    def __init__(self, universe, pairs=(), premise_cap=None, monotonic=False, name='extensional'):
        self.name = name
        self.universe = tuple(dict.fromkeys(universe))
        self.members = frozenset(self.universe)
        self.premise_cap = premise_cap
        self.monotonic = monotonic
        table = {}
        for delta, alpha in pairs:
            delta = frozenset(delta)
            self._check(delta, alpha)
            table.setdefault(delta, set()).add(alpha)
        self.table = {delta: frozenset(goals) for delta, goals in table.items()}

    def _check(self, premises, goal=None):
        formulas = list(premises) + ([] if goal is None else [goal])
        outside = [f for f in formulas if f not in self.members]
        if outside:
            raise OutOfUniverse('%s is not in the universe of %s' % (outside[0], self.name))

    @property
    def pairs(self):
        return frozenset((delta, alpha) for delta, goals in self.table.items() for alpha in goals)

    def consequences_of(self, premises):
        return self.table.get(frozenset(premises), frozenset())

    def entail(self, premises, goal, budget=None):
        premises = frozenset(premises)
        self._check(premises, goal)
        if goal in self.table.get(premises, ()):
            return Verdict.proved(TableEntry(premises, goal))
        return Verdict.refuted(FULL)

    def consequences(self, premises, candidates=None, budget=None):
        premises = frozenset(premises)
        self._check(premises)
        found = self.table.get(premises, frozenset())
        if candidates is not None:
            found = found.intersection(candidates)
        return frozenset(found), False

    def size(self):
        return sum(len(goals) for goals in self.table.values())


def ext_entails(S, premises, goal):
    return S.entail(premises, goal)


# ----------------------------------------------------------------------------
# logical matrices


@dataclass(frozen=True)
class TruthTableCertificate:
    """All valuations of <variables> designating the premises also designate the goal."""
    variables: tuple
    valuations: int
    designating: int


class Matrix:
    """A finite logical matrix: truth values, designated values and one table per connective.

    Parameters:
        name (str)          -- tag printed in reports
        values (sequence)   -- truth value names; their order fixes the valuation order
        designated (set)    -- nonempty proper subset of <values>
        tables (dict)       -- symbol -> {argument value tuple: value}, total over <values>
    """

    def __init__(self, name, values, designated, tables):
        self.name = name
        self.values = tuple(values)
        index = {v: i for i, v in enumerate(self.values)}
        if len(index) != len(self.values) or not self.values:
            raise DefinitionError('matrix %s: truth values must be nonempty and distinct' % name)
        designated = frozenset(designated)
        if not designated or designated == frozenset(self.values) or not designated <= set(index):
            raise DefinitionError('matrix %s: designated values must be a nonempty proper subset' % name)
        self.designated = designated
        self.designated_mask = np.array([v in designated for v in self.values])
        self.tables = {}
        for symbol, rows in tables.items():
            self.tables[symbol] = self._array(symbol, rows, index)
        self._cache = {}

    def _array(self, symbol, rows, index):
        n = len(self.values)
        arities = {len(args) for args in rows}
        if not arities:
            raise DefinitionError('matrix %s: table for %s is empty' % (self.name, symbol))
        if len(arities) != 1:
            raise DefinitionError('matrix %s: table for %s mixes arities' % (self.name, symbol))
        arity = arities.pop()
        array = np.full((n,) * arity, -1, dtype=np.int64)
        for args, value in rows.items():
            try:
                array[tuple(index[a] for a in args)] = index[value]
            except KeyError as err:
                raise DefinitionError('matrix %s: unknown truth value %s in table for %s'
                                      % (self.name, err.args[0], symbol)) from None
        if (array < 0).any():
            missing = tuple(self.values[i] for i in np.argwhere(array < 0)[0])
            raise DefinitionError('matrix %s: table for %s has no row for %s'
                                  % (self.name, symbol, ' '.join(missing)))
        return array

    @classmethod
    def from_functions(cls, name, values, designated, functions):
        """Build the tables from {symbol: (arity, function on value names)}."""
        tables = {}
        for symbol, (arity, fn) in functions.items():
            tables[symbol] = {tuple(values[i] for i in args): fn(*(values[i] for i in args))
                              for args in np.ndindex(*((len(values),) * arity))}
        return cls(name, values, designated, tables)

    def arity(self, symbol):
        return self.tables[symbol].ndim

    def evaluate(self, formula, variables):
        """Value indices of <formula> under every valuation of <variables>.

        Valuations are numbered in mixed radix, the first variable most
        significant, so row r assigns variables[i] the digit
        r // n**(k-1-i) % n.
        """
        key = (formula, variables)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        n, k = len(self.values), len(variables)
        if isinstance(formula, Var):
            i = variables.index(formula.name)
            result = np.arange(n ** k) // n ** (k - 1 - i) % n
        elif isinstance(formula, App):
            table = self.tables.get(formula.connective)
            if table is None:
                raise MissingTable('matrix %s has no table for %s' % (self.name, formula.connective))
            if not formula.args:
                result = np.full(n ** k, table[()])
            else:
                result = table[tuple(self.evaluate(a, variables) for a in formula.args)]
        else:
            raise TypeError('cannot evaluate the schematic formula %s' % render(formula))
        if len(self._cache) >= EVALUATION_CACHE_SIZE:
            self._cache.clear()
        self._cache[key] = result
        return result

    def designated_rows(self, premises, variables):
        holds = np.ones(len(self.values) ** len(variables), dtype=bool)
        for gamma in premises:
            holds &= self.designated_mask[self.evaluate(gamma, variables)]
        return holds

    def satisfiable(self, premises):
        """True when some valuation designates every premise."""
        premises = frozenset(premises)
        return bool(self.designated_rows(premises, tuple(sorted(vars_set(premises)))).any())

    def valuation(self, row, variables):
        if not variables:
            return {}
        digits = np.unravel_index(row, (len(self.values),) * len(variables))
        return {v: self.values[int(d)] for v, d in zip(variables, digits)}

    def __repr__(self):
        return '<Matrix %s values=%s designated=%s>' % (self.name, self.values, sorted(self.designated))


def matrix_entails(M, premises, goal):
    """Exhaustive valuation sweep over vars_set(premises + goal).

    Proved when every valuation designating all premises designates <goal>;
    otherwise Refuted(full) with the first counterexample valuation.
    """
    premises = frozenset(premises)
    variables = tuple(sorted(vars_set(premises | {goal})))
    holds = M.designated_rows(premises, variables)
    counter = holds & ~M.designated_mask[M.evaluate(goal, variables)]
    if counter.any():
        row = int(np.flatnonzero(counter)[0])
        return Verdict.refuted(FULL, witness=M.valuation(row, variables))
    return Verdict.proved(TruthTableCertificate(variables, len(holds), int(holds.sum())))


class MatrixStructure(LogicalStructure):
    """Local matrix consequence: Gamma |= alpha checked on the given formulas only."""
    monotonic = True

    def __init__(self, matrix):
        self.matrix = matrix
        self.name = matrix.name

    def entail(self, premises, goal, budget=None):
        return matrix_entails(self.matrix, premises, goal)

    def consequences(self, premises, candidates, budget=None):
        premises = frozenset(premises)
        candidates = list(candidates)
        # one valuation space for all goals; extra variables do not change the verdicts
        variables = tuple(sorted(vars_set(premises) | vars_set(candidates)))
        holds = self.matrix.designated_rows(premises, variables)
        mask = self.matrix.designated_mask
        proved = frozenset(alpha for alpha in candidates
                           if not (holds & ~mask[self.matrix.evaluate(alpha, variables)]).any())
        return proved, False


# ----------------------------------------------------------------------------
# Tarski properties


@dataclass
class TarskiReport:
    reflexive: bool
    monotonic: bool
    transitive: bool
    finitary: bool = True
    failures: dict = field(default_factory=dict)

    @property
    def tarski(self):
        return self.reflexive and self.monotonic and self.transitive

    def __str__(self):
        flags = ', '.join('%s=%s' % (k, getattr(self, k)) for k in ('reflexive', 'monotonic', 'transitive', 'finitary'))
        lines = [flags] + ['  %s fails at %s' % (k, v) for k, v in sorted(self.failures.items())]
        return '\n'.join(lines)


def _lattice(S, max_subsets):
    n = len(S.universe)
    cap = n if S.premise_cap is None else min(S.premise_cap, n)
    size = count_subsets(n, cap)
    if size > max_subsets:
        raise UniverseTooLarge('%d premise sets over %d formulas exceed the cap of %d'
                               % (size, n, max_subsets))
    return cap, list(subsets(S.universe, cap))


def check_tarski(S, max_subsets=DEFAULT_MAX_SUBSETS):
    """Decide reflexivity, monotonicity and transitivity of an extensional structure.

    Only premise sets within the structure's premise cap are quantified over.
    Monotonicity is checked on one-formula extensions, which chain to every
    superset inside the cap. Transitivity reads: whenever Gamma <= Sigma <=
    Gamma + C(Gamma) then C(Sigma) <= C(Gamma).
    """
    cap, lattice = _lattice(S, max_subsets)
    C = {gamma: S.consequences_of(gamma) for gamma in lattice}
    failures = {}

    reflexive = True
    for gamma in lattice:
        missing = gamma - C[gamma]
        if missing:
            reflexive = False
            failures['reflexive'] = (format_set(gamma), str(next(iter(missing))))
            break

    monotonic = True
    for gamma in lattice:
        if len(gamma) >= cap:
            continue
        for extra in S.universe:
            if extra in gamma:
                continue
            lost = C[gamma] - C[gamma | {extra}]
            if lost:
                monotonic = False
                failures['monotonic'] = (format_set(gamma), str(extra), str(next(iter(lost))))
                break
        if not monotonic:
            break

    transitive = True
    for gamma in lattice:
        derived = sorted(C[gamma] - gamma, key=str)
        for delta in subsets(derived, cap - len(gamma)):
            if not delta:
                continue
            gained = C[gamma | delta] - C[gamma]
            if gained:
                transitive = False
                failures['transitive'] = (format_set(gamma), format_set(delta), str(next(iter(gained))))
                break
        if not transitive:
            break

    LOGGER.debug('tarski check of %s over %d premise sets', S.name, len(lattice))
    return TarskiReport(reflexive, monotonic, transitive, True, failures)


def is_finitely_trivializable(S, max_subsets=DEFAULT_MAX_SUBSETS):
    """Return a premise set entailing every formula of the universe, or None."""
    _, lattice = _lattice(S, max_subsets)
    everything = S.members
    for gamma in lattice:
        if S.consequences_of(gamma) >= everything:
            return gamma
    return None

