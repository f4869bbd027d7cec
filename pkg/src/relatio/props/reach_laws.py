"""Nontriviality of companions built on relations of finite reach.

Over an infinite language a finite premise set reaches finitely many
formulas, so some formula is left over. On a finite universe the leftover
has to be asked for: a premise set Gamma has a surplus when the formulas
reached from the subsets of Gamma do not cover the universe.
"""
from logic.oracle import equal_tables
from logic.structures import is_finitely_trivializable
from logic.syntax import App
from util.util import subsets

from . import generators
from .base_property import BaseProperty, Check, combine, expect, expect_true
from .generators import Instance
from .tables import companion, engine_companion, relation

PURITIES = (False, True)


def reached(pairs, gamma):
    return frozenset(alpha for delta, alpha in pairs if delta <= gamma)


def surplus_sets(instance):
    pairs, everything = instance.relations[0], frozenset(instance.universe)
    return [gamma for gamma in subsets(instance.universe, instance.cap) if reached(pairs, gamma) < everything]


class ReachProperty(BaseProperty):
    """A random base and a sparse relation: each premise set reaches at most --reach formulas."""

    @staticmethod
    def modify_commandline_options(parser):
        return BaseProperty.add_shared_option(parser, '--reach', type=int, default=1,
                                              help='# of formulas a premise set of a sparse relation reaches')

    def generate(self, rng):
        u = self.universe(rng)
        pairs = generators.sparse_pairs(rng, u, self.cfg.premise_cap, self.cfg.density / 2, self.cfg.reach)
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),), relations=(pairs,))

    def companions(self, instance):
        """Engine companions, each checked against the oracle first."""
        base, rho = instance.dump(), relation(instance, 0)
        monotonic = 'base0_monotone' in instance.labels
        found, checks = {}, []
        for pure in PURITIES:
            found[pure] = engine_companion(base, rho, pure, monotonic)
            checks.append(expect(equal_tables(found[pure], companion(base, rho, pure)),
                                 'engine = oracle (pure=%s)' % pure))
        return found, checks


class FiniteReachNontrivialProperty(ReachProperty):
    law = 'a premise set whose subsets do not reach the whole universe is nontrivial in S^rho and S^prho'

    def hypotheses(self, instance):
        return bool(surplus_sets(instance))

    def evaluate(self, instance):
        found, checks = self.companions(instance)
        everything = frozenset(instance.universe)
        sets = surplus_sets(instance)
        for pure in PURITIES:
            trivial = next((g for g in sets if found[pure].consequences_of(g) >= everything), None)
            checks.append(expect_true(trivial is None, 'premise set %s is trivial (pure=%s)'
                                      % (sorted(str(f) for f in trivial or ()), pure)))
        return combine(*checks, Check(True, tags=('surplus_sets',) * len(sets)))


class EcqFailuresProperty(ReachProperty):
    law = 'when every premise set has a surplus, S^rho and S^prho are not finitely trivializable and gECQ, spECQ and ~-ECQ fail'

    def hypotheses(self, instance):
        return len(surplus_sets(instance)) == len(list(subsets(instance.universe, instance.cap)))

    def evaluate(self, instance):
        found, checks = self.companions(instance)
        universe = instance.universe
        everything = frozenset(universe)
        tags = []
        for pure in PURITIES:
            table = found[pure]

            def trivial(gamma):
                return table.consequences_of(gamma) >= everything

            checks.append(expect_true(is_finitely_trivializable(table.as_structure()) is None,
                                      'a premise set is trivial (pure=%s)' % pure))
            # spECQ: some proper extension of the empty set by one formula would have to explode
            exploding = [a for a in universe if trivial(frozenset([a]))]
            checks.append(expect_true(not exploding, 'spECQ holds through %s (pure=%s)' % (exploding[:1], pure)))
            if instance.cap >= 2:
                # gECQ: every alpha would need a partner beta with {alpha, beta} trivial
                partnered = all(any(trivial(frozenset([a, b])) for b in universe) for a in universe)
                checks.append(expect_true(not partnered, 'gECQ holds (pure=%s)' % pure, tags=('gecq',)))
            for a in universe:
                negated = App('~', (a,))
                if negated in everything:
                    tags.append('negation_pairs')
                    checks.append(expect_true(not trivial(frozenset([a, negated])),
                                              '{%s, %s} is trivial (pure=%s)' % (a, negated, pure)))
        return combine(*checks, Check(True, tags=tuple(tags)))
