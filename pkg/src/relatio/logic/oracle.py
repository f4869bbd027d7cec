"""Brute-force ground truth over finite universes.

dump() tabulates a structure over every premise set of at most k formulas of
a universe; brute_companion() evaluates the companion definition literally
against such a table. Nothing here shares code with the subset sweep of
companions.companion_entails, so the two can referee each other.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property

from util.util import count_subsets, format_set, subsets

from .companions import Flag, rel_PR
from .errors import CapMismatch, UniverseTooLarge
from .structures import DEFAULT_BUDGET, DEFAULT_MAX_SUBSETS, ExtensionalStructure

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class TableDump:
    """Every (Delta, alpha) with |Delta| <= cap over <universe> that the structure proved.

    <complete> is False when at least one query ran out of budget; such a
    table may miss pairs.
    """
    universe: tuple
    cap: int
    table: frozenset
    complete: bool = True
    name: str = 'dump'

    @cached_property
    def rows(self):
        rows = {}
        for delta, alpha in self.table:
            rows.setdefault(delta, set()).add(alpha)
        return {delta: frozenset(goals) for delta, goals in rows.items()}

    def holds(self, delta, alpha):
        return alpha in self.rows.get(frozenset(delta), ())

    def consequences_of(self, delta):
        return self.rows.get(frozenset(delta), frozenset())

    def premise_sets(self):
        return subsets(self.universe, self.cap)

    @property
    def size(self):
        return len(self.table)

    def as_structure(self, monotonic=False):
        return ExtensionalStructure(self.universe, self.table, premise_cap=self.cap,
                                    monotonic=monotonic, name=self.name)

    def ordered_pairs(self):
        """Pairs in a deterministic order: premise sets smallest first, then universe order."""
        position = {f: i for i, f in enumerate(self.universe)}
        return sorted(self.table, key=lambda pair: (len(pair[0]), sorted(position[f] for f in pair[0]),
                                                     position[pair[1]]))


def _checked_universe(universe, cap, max_subsets):
    universe = tuple(dict.fromkeys(universe))
    cap = len(universe) if cap is None else cap
    if count_subsets(len(universe), cap) > max_subsets:
        raise UniverseTooLarge('%d formulas with premise cap %d exceed the subset cap of %d'
                               % (len(universe), cap, max_subsets))
    return universe, cap


def dump(S, universe, cap, budget=None, max_subsets=DEFAULT_MAX_SUBSETS):
    """Ask <S> every query over <universe> with at most <cap> premises."""
    universe, cap = _checked_universe(universe, cap, max_subsets)
    budget = (budget or DEFAULT_BUDGET).with_universe(universe)
    pairs, complete, sets = set(), True, 0
    for delta in subsets(universe, cap):
        proved, exhausted = S.consequences(delta, universe, budget)
        pairs.update((delta, alpha) for alpha in proved)
        complete = complete and not exhausted
        sets += 1
    LOGGER.info('dumped %s: %d premise sets, %d pairs%s', S.name, sets, len(pairs),
                '' if complete else ' (incomplete)')
    return TableDump(universe, cap, frozenset(pairs), complete, S.name)


def brute_companion(base, rho, pure=False, name=None):
    """Literal evaluation of the companion definition against a dumped base.

    Gamma |- alpha is listed iff some Delta inside Gamma (nonempty when pure)
    has (Delta, alpha) in rho and (Delta, alpha) in the base table.
    """
    universe, table = base.universe, base.table
    least = 1 if pure else 0
    pairs = set()
    for size in range(base.cap + 1):
        for gamma in itertools.combinations(universe, size):
            for alpha in universe:
                for r in range(least, size + 1):
                    if any((frozenset(d), alpha) in table and rho(frozenset(d), alpha)
                           for d in itertools.combinations(gamma, r)):
                        pairs.add((frozenset(gamma), alpha))
                        break
    label = name or '%s^%s%s' % (base.name, 'p' if pure else '', rho.name)
    return TableDump(universe, base.cap, frozenset(pairs), base.complete, label)


def table_from_predicate(universe, cap, predicate, name='predicate', complete=True,
                         max_subsets=DEFAULT_MAX_SUBSETS):
    """Tabulate predicate(Delta, alpha) directly."""
    universe, cap = _checked_universe(universe, cap, max_subsets)
    pairs = frozenset((delta, alpha) for delta in subsets(universe, cap)
                      for alpha in universe if predicate(delta, alpha))
    return TableDump(universe, cap, pairs, complete, name)


def right_companion_table(base, anti):
    """Gamma |-r alpha iff Gamma contains an antitheorem, or Gamma |- alpha and vars(alpha) <= vars(Gamma)."""
    return table_from_predicate(
        base.universe, base.cap,
        lambda gamma, alpha: anti(gamma) is Flag.YES or (base.holds(gamma, alpha) and rel_PR(gamma, alpha)),
        name='%s^r' % base.name, complete=base.complete)


def pure_right_companion_table(base):
    """Gamma |-pr alpha iff Gamma |- alpha and vars(alpha) <= vars(Gamma)."""
    return table_from_predicate(
        base.universe, base.cap,
        lambda gamma, alpha: base.holds(gamma, alpha) and rel_PR(gamma, alpha),
        name='%s^pr' % base.name, complete=base.complete)


# ----------------------------------------------------------------------------
# comparisons


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing two dumps.

    <result> is True or False, or None when an incomplete dump makes the
    comparison inconclusive. <witness> is (Delta, alpha, side) for the first
    pair found on one side only; side is 'left' or 'right'.
    """
    result: object
    witness: tuple = None
    relation: str = '='

    @property
    def holds(self):
        return self.result is True

    @property
    def inconclusive(self):
        return self.result is None

    def describe(self):
        if self.witness is None:
            return 'no differing pair'
        delta, alpha, side = self.witness
        return '%s |- %s listed on the %s only' % (format_set(delta), alpha, side)


def _compatible(A, B):
    if A.cap != B.cap or frozenset(A.universe) != frozenset(B.universe):
        raise CapMismatch('cannot compare %s (cap %d, %d formulas) with %s (cap %d, %d formulas)'
                          % (A.name, A.cap, len(A.universe), B.name, B.cap, len(B.universe)))


def _first_difference(A, B, both_sides=True):
    only_left = A.table - B.table
    only_right = B.table - A.table if both_sides else frozenset()
    if not only_left and not only_right:
        return None
    position = {f: i for i, f in enumerate(A.universe)}

    def order(pair):
        delta, alpha = pair
        return len(delta), sorted(position[f] for f in delta), position[alpha]

    candidates = [(order(p), p, 'left') for p in only_left] + [(order(p), p, 'right') for p in only_right]
    _, (delta, alpha), side = min(candidates, key=lambda c: c[0])
    return delta, alpha, side


def equal_tables(A, B):
    _compatible(A, B)
    witness = _first_difference(A, B)
    if not (A.complete and B.complete):
        return Comparison(None, witness, '=')
    return Comparison(witness is None, witness, '=')


def included(A, B):
    """Is every pair of A listed in B?"""
    _compatible(A, B)
    witness = _first_difference(A, B, both_sides=False)
    if not (A.complete and B.complete):
        return Comparison(None, witness, '<=')
    return Comparison(witness is None, witness, '<=')
