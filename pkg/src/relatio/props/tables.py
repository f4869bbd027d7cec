"""Turning Instance data into structures, relations and companion tables."""
from logic.companions import CompanionStructure, Flag, Relation
from logic.hilbert import HilbertStructure
from logic.oracle import brute_companion, dump, equal_tables
from logic.structures import check_tarski

from .generators import HILBERT_SIGNATURE


class EngineDisagreement(Exception):
    """The subset sweep of CompanionStructure and the literal definition built different tables."""


def relation(instance, i, name=None):
    """Relation i of <instance>; downward direction is declared only when it holds."""
    directed = Flag.YES if 'rel%d_downward' % i in instance.labels else Flag.UNKNOWN
    return Relation.from_pairs(name or 'rho%d' % i, instance.relations[i], downward_directed=directed)


def companion(table, rho, pure=False):
    """The companion table from the literal definition, refereed against the engine.

    The engine is told the base is monotonic whenever the table is, so its
    maximal-member shortcut is exercised wherever prove.py would take it.
    Raises EngineDisagreement on the first pair the two tables differ on.
    """
    expected = brute_companion(table, rho, pure)
    monotonic = check_tarski(table.as_structure()).monotonic
    found = engine_companion(table, rho, pure, monotonic)
    comparison = equal_tables(found, expected)
    if comparison.result is False:
        raise EngineDisagreement('engine %s (monotonic base: %s) against the definition: %s'
                                 % (found.name, monotonic, comparison.describe()))
    return expected


def engine_companion(table, rho, pure=False, monotonic=False):
    """The same companion computed by the subset sweep of CompanionStructure."""
    base = table.as_structure(monotonic=monotonic)
    return dump(CompanionStructure(base, rho, pure=pure), table.universe, table.cap)


def hilbert(instance, i=0, name=None):
    return HilbertStructure(HILBERT_SIGNATURE, instance.schemata[i], variables=('p', 'q'),
                            name=name or 'H%d' % i)


def hilbert_dump(H, instance):
    return dump(H, instance.universe, instance.cap)
