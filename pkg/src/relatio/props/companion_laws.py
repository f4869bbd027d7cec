"""Laws of a single relational companion, and of pairs of bases and relations.

Each law with a pure twin is written once; the twin only flips <pure>.
"""
from logic.companions import L, PR, DeclaredAntitheorems, make_R
from logic.oracle import equal_tables, included, pure_right_companion_table, right_companion_table
from logic.structures import check_tarski

from . import generators
from .base_property import BaseProperty, Check, combine, expect, expect_true
from .generators import Instance
from .tables import companion, engine_companion, relation


class SingleRelationProperty(BaseProperty):
    """One base table and one relation."""
    pure = False
    monotone_base = None
    kind = 'arbitrary'

    def generate(self, rng):
        u = self.universe(rng)
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u, self.monotone_base),),
                        relations=(self.relation(rng, u, self.kind),))

    def companion(self, instance):
        return companion(instance.dump(), relation(instance, 0), self.pure)


class RhoMonotoneProperty(SingleRelationProperty):
    law = 'S^rho is monotonic'

    def evaluate(self, instance):
        report = check_tarski(self.companion(instance).as_structure())
        return expect_true(report.monotonic, 'monotonicity fails at %s' % (report.failures.get('monotonic'),))


class PrhoMonotoneProperty(RhoMonotoneProperty):
    law = 'S^prho is monotonic'
    pure = True


class RhoSubsetBaseProperty(SingleRelationProperty):
    law = 'if S is monotonic then |-^rho is included in |-'
    requires = ('base0_monotone',)
    monotone_base = True

    def evaluate(self, instance):
        return expect(included(self.companion(instance), instance.dump()), 'companion <= base')


class PrhoSubsetBaseProperty(RhoSubsetBaseProperty):
    law = 'if S is monotonic then |-^prho is included in |-'
    pure = True


class RhoIdempotentProperty(SingleRelationProperty):
    law = '(|-^rho)^rho = |-^rho'

    def evaluate(self, instance):
        once = self.companion(instance)
        twice = companion(once, relation(instance, 0), self.pure)
        return expect(equal_tables(twice, once), 'companion of the companion = companion')


class PrhoIdempotentProperty(RhoIdempotentProperty):
    law = '(|-^prho)^prho = |-^prho'
    pure = True


class PairMonotoneProperty(BaseProperty):
    law = 'if |-1 is included in |-2 and rho in sigma then |-1^rho is included in |-2^sigma (pure too)'
    requires = ('base0_sub_base1', 'rel0_sub_rel1')

    def generate(self, rng):
        u = self.universe(rng)
        larger, sigma = self.table(rng, u), self.relation(rng, u)
        return Instance(u, self.cfg.premise_cap,
                        tables=(generators.sub_sample(rng, larger), larger),
                        relations=(generators.sub_sample(rng, sigma), sigma))

    def evaluate(self, instance):
        rho, sigma = relation(instance, 0), relation(instance, 1)
        checks = []
        for pure in (False, True):
            checks.append(expect(included(companion(instance.dump(0), rho, pure),
                                          companion(instance.dump(1), sigma, pure)),
                                 '|-1^rho <= |-2^sigma (pure=%s)' % pure))
        return combine(*checks)


class UnionIntersectProperty(BaseProperty):
    law = '|-^rho and |-^sigma are included in |-^(rho union sigma) and include |-^(rho intersect sigma)'

    def generate(self, rng):
        u = self.universe(rng)
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),),
                        relations=(self.relation(rng, u), self.relation(rng, u)))

    def evaluate(self, instance):
        base = instance.dump()
        rho, sigma = relation(instance, 0), relation(instance, 1)
        joined, met = companion(base, rho | sigma), companion(base, rho & sigma)
        checks = []
        for one in (rho, sigma):
            single = companion(base, one)
            checks.append(expect(included(single, joined), '|-^%s <= |-^union' % one.name))
            checks.append(expect(included(met, single), '|-^intersect <= |-^%s' % one.name))
        return combine(*checks)


class TheoremhoodProperty(SingleRelationProperty):
    law = 'if (empty set, a) is in rho for every a then |- a iff |-^rho a'
    requires = ('rel0_contains_empty',)
    kind = 'contains_empty'

    def evaluate(self, instance):
        base, comp = instance.dump(), self.companion(instance)
        empty = frozenset()
        differing = base.consequences_of(empty) ^ comp.consequences_of(empty)
        return expect_true(not differing, 'theorems differ at %s' % ', '.join(sorted(str(f) for f in differing)),
                           tags=('theorems' if base.consequences_of(empty) else 'no_theorems',))


class TheoremhoodLProperty(BaseProperty):
    law = '|- a iff |-^l a'

    def generate(self, rng):
        u = self.universe(rng)
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),))

    def evaluate(self, instance):
        base = instance.dump()
        left = companion(base, L)
        empty = frozenset()
        return expect_true(base.consequences_of(empty) == left.consequences_of(empty),
                           'theorems of S and S^l differ')


class PrIsPureRightProperty(SingleRelationProperty):
    law = 'for monotonic S, S^PR is the pure right variable inclusion companion'
    requires = ('base0_monotone',)
    monotone_base = True

    def evaluate(self, instance):
        base = instance.dump()
        return expect(equal_tables(companion(base, PR), pure_right_companion_table(base)), '|-^PR = |-^pr')


class RIsRightProperty(SingleRelationProperty):
    law = 'for monotonic S with its exploding sets declared, S^R is the right variable inclusion companion'
    requires = ('base0_monotone',)
    monotone_base = True

    def generate(self, rng):
        # denser tables explode more often
        u = self.universe(rng)
        pairs = generators.random_table(rng, u, self.cfg.premise_cap, min(0.9, 2 * self.cfg.density), True)
        return Instance(u, self.cfg.premise_cap, tables=(pairs,))

    def evaluate(self, instance):
        base = instance.dump()
        everything = frozenset(base.universe)
        exploding = [d for d in base.premise_sets() if base.consequences_of(d) >= everything]
        anti = DeclaredAntitheorems(exploding)
        tags = ('antitheorems',) if exploding else ()
        return expect(equal_tables(companion(base, make_R(anti)), right_companion_table(base, anti)),
                      '|-^R = |-^r', tags)


class ShortcutAgreesProperty(SingleRelationProperty):
    law = 'the companion engine agrees with the brute-force oracle on every query'

    def generate(self, rng):
        u = self.universe(rng)
        kind = ('arbitrary', 'downward', 'contains_empty')[int(rng.integers(3))]
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),),
                        relations=(self.relation(rng, u, kind),))

    def evaluate(self, instance):
        base = instance.dump()
        monotonic = 'base0_monotone' in instance.labels
        shortcut = monotonic and 'rel0_downward' in instance.labels
        tags = ('shortcut',) if shortcut else ('sweep',)
        checks = []
        for rho in (relation(instance, 0), L):
            for pure in (False, True):
                checks.append(expect(equal_tables(engine_companion(base, rho, pure, monotonic),
                                                  companion(base, rho, pure)),
                                     'engine = oracle for %s (pure=%s)' % (rho.name, pure)))
        return combine(*checks, Check(True, tags=tags))

