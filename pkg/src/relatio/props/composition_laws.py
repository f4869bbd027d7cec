"""Laws of companions of companions: (|-^rho)^sigma against |-^rho, |-^sigma and (|-^sigma)^rho.

Relation 0 is rho and relation 1 is sigma. Every law is checked for the
plain and the pure companions on the same instance.
"""
from logic.oracle import equal_tables, included

from . import generators
from .base_property import BaseProperty, Check, combine, expect, expect_true
from .generators import SIGMA_GENERATORS, Instance
from .tables import companion, relation

PURITIES = (False, True)


class CompositionProperty(BaseProperty):
    """One base table and two relations; half the draws make rho a subset of sigma."""
    monotone_base = None

    def generate(self, rng):
        u = self.universe(rng)
        base = self.table(rng, u, self.monotone_base)
        sigma = self.relation(rng, u)
        rho = generators.sub_sample(rng, sigma) if rng.random() < 0.5 else self.relation(rng, u)
        return Instance(u, self.cfg.premise_cap, tables=(base,), relations=(rho, sigma))

    def tables(self, instance, pure):
        """(|-^rho, |-^sigma, (|-^rho)^sigma) for one purity."""
        base = instance.dump()
        rho, sigma = relation(instance, 0, 'rho'), relation(instance, 1, 'sigma')
        first = companion(base, rho, pure)
        return first, companion(base, sigma, pure), companion(first, sigma, pure)


class CompIProperty(CompositionProperty):
    law = '(|-^rho)^sigma is included in |-^rho, with equality when rho is in sigma'

    def evaluate(self, instance):
        nested = 'rel0_sub_rel1' in instance.labels
        checks = []
        for pure in PURITIES:
            first, _, composed = self.tables(instance, pure)
            checks.append(expect(included(composed, first), '(rho)^sigma <= rho (pure=%s)' % pure))
            if nested:
                checks.append(expect(equal_tables(composed, first), '(rho)^sigma = rho (pure=%s)' % pure))
        return combine(*checks, Check(True, tags=('equality',) if nested else ()))


class CompIiProperty(CompositionProperty):
    law = 'if S is monotonic then (|-^rho)^sigma is included in |-^sigma'
    requires = ('base0_monotone',)
    monotone_base = True

    def evaluate(self, instance):
        checks = []
        for pure in PURITIES:
            _, second, composed = self.tables(instance, pure)
            checks.append(expect(included(composed, second), '(rho)^sigma <= sigma (pure=%s)' % pure))
        return combine(*checks)


class CompIiiProperty(CompositionProperty):
    law = 'if rho is in sigma then (|-^rho)^sigma is included in |-^sigma'
    requires = ('rel0_sub_rel1',)

    def evaluate(self, instance):
        checks = []
        for pure in PURITIES:
            _, second, composed = self.tables(instance, pure)
            checks.append(expect(included(composed, second), '(rho)^sigma <= sigma (pure=%s)' % pure))
        return combine(*checks)


class CompIvProperty(CompositionProperty):
    law = 'if |-^sigma is included in |-^rho then |-^sigma is included in (|-^rho)^sigma'

    def generate(self, rng):
        # a sigma inside rho makes the hypothesis hold
        u = self.universe(rng)
        rho = self.relation(rng, u)
        sigma = generators.sub_sample(rng, rho) if rng.random() < 0.5 else self.relation(rng, u)
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),), relations=(rho, sigma))

    def hypotheses(self, instance):
        for pure in PURITIES:
            first, second, _ = self.tables(instance, pure)
            if not included(second, first).holds:
                return False
        return True

    def evaluate(self, instance):
        checks = []
        for pure in PURITIES:
            _, second, composed = self.tables(instance, pure)
            checks.append(expect(included(second, composed), 'sigma <= (rho)^sigma (pure=%s)' % pure))
        return combine(*checks)


class CompVProperty(CompositionProperty):
    law = 'if rho is in sigma then |-^rho = |-^sigma iff (|-^rho)^sigma = |-^sigma'
    requires = ('rel0_sub_rel1',)

    def evaluate(self, instance):
        checks = []
        for pure in PURITIES:
            first, second, composed = self.tables(instance, pure)
            left, right = equal_tables(first, second), equal_tables(composed, second)
            if left.inconclusive or right.inconclusive:
                return Check(None, 'a table is incomplete')
            checks.append(expect_true(left.holds == right.holds,
                                      'the two sides disagree (pure=%s): %s'
                                      % (pure, (left if not left.holds else right).describe()),
                                      tags=('equal' if left.holds else 'different',)))
        return combine(*checks)


class DdCommuteProperty(BaseProperty):
    law = 'if sigma is downward directed then (|-^rho)^sigma is included in (|-^sigma)^rho; both directed gives equality'
    requires = ('rel1_downward',)

    def generate(self, rng):
        u = self.universe(rng)
        kind = self.cfg.sigma_generator
        if kind not in SIGMA_GENERATORS:
            raise ValueError('sigma generator [%s] is not one of [%s]' % (kind, ' | '.join(SIGMA_GENERATORS)))
        rho_kind = 'downward' if rng.random() < 0.5 else 'arbitrary'
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),),
                        relations=(self.relation(rng, u, rho_kind), self.relation(rng, u, kind)))

    def evaluate(self, instance):
        base = instance.dump()
        rho, sigma = relation(instance, 0, 'rho'), relation(instance, 1, 'sigma')
        both = 'rel0_downward' in instance.labels and 'rel1_downward' in instance.labels
        checks = []
        for pure in PURITIES:
            rho_sigma = companion(companion(base, rho, pure), sigma, pure)
            sigma_rho = companion(companion(base, sigma, pure), rho, pure)
            checks.append(expect(included(rho_sigma, sigma_rho), '(rho)^sigma <= (sigma)^rho (pure=%s)' % pure))
            if both:
                checks.append(expect(equal_tables(rho_sigma, sigma_rho), '(rho)^sigma = (sigma)^rho (pure=%s)' % pure))
        return combine(*checks, Check(True, tags=('both_directed',) if both else ('sigma_directed',)))
