"""Laws of the left variable inclusion and restricted rules companions.

The left companion is computed on random base tables; the restricted rules
companion needs schemata, so those laws draw Hilbert samples from the
schema pool and dump them over a fixed ten-formula universe.
"""
from data import load_logic
from logic.companions import L
from logic.hilbert import restrict_rules
from logic.oracle import equal_tables, included
from logic.structures import Budget, check_tarski
from logic.syntax import generate_universe, parse

from . import generators
from .base_property import BaseProperty, Check, combine, expect, expect_true
from .generators import HILBERT_CAP, HILBERT_UNIVERSE, Instance
from .tables import companion, hilbert, hilbert_dump


class HilbertSampleProperty(BaseProperty):
    """Shared generator: one or two random schema selections over the fixed universe."""
    systems = 1

    @staticmethod
    def modify_commandline_options(parser):
        return BaseProperty.add_shared_option(parser, '--schema_density', type=float, default=0.5,
                                              help='probability that a pool schema enters a Hilbert sample')

    def generate(self, rng):
        schemata = tuple(generators.random_schemata(rng, self.cfg.schema_density) for _ in range(self.systems))
        return Instance(HILBERT_UNIVERSE, HILBERT_CAP, schemata=schemata)


def remark_instance(first, second):
    """The depth-2 universe of the bundled s1/s2 samples at premise cap 1."""
    a, b = load_logic(first), load_logic(second)
    universe = generate_universe(a.signature, a.variables, a.depth)
    return Instance(universe, 1, schemata=(tuple(a.schemata), tuple(b.schemata)))


class LMonotoneProperty(BaseProperty):
    law = 'S^l is monotonic; if S is monotonic then |-^l is included in |-'

    def generate(self, rng):
        u = self.universe(rng)
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),))

    def evaluate(self, instance):
        base = instance.dump()
        left = companion(base, L)
        checks = [expect_true(check_tarski(left.as_structure()).monotonic, 'S^l is not monotonic')]
        if 'base0_monotone' in instance.labels:
            checks.append(expect(included(left, base), '|-^l <= |-', tags=('monotone_base',)))
        return combine(*checks)


class LIdempotentProperty(BaseProperty):
    law = '(|-^l)^l = |-^l'

    def generate(self, rng):
        u = self.universe(rng)
        return Instance(u, self.cfg.premise_cap, tables=(self.table(rng, u),))

    def evaluate(self, instance):
        left = companion(instance.dump(), L)
        return expect(equal_tables(companion(left, L), left), '(|-^l)^l = |-^l')


class LPairMonotoneProperty(BaseProperty):
    law = 'if |-1 is included in |-2 then |-1^l is included in |-2^l'
    requires = ('base0_sub_base1',)

    def generate(self, rng):
        u = self.universe(rng)
        larger = self.table(rng, u)
        return Instance(u, self.cfg.premise_cap, tables=(generators.sub_sample(rng, larger), larger))

    def evaluate(self, instance):
        return expect(included(companion(instance.dump(0), L), companion(instance.dump(1), L)),
                      '|-1^l <= |-2^l')


class ReSubsetBaseProperty(HilbertSampleProperty):
    law = 'S^re is monotonic and |-^re is included in |-'

    def evaluate(self, instance):
        H = hilbert(instance)
        restricted = hilbert_dump(restrict_rules(H), instance)
        return combine(expect_true(check_tarski(restricted.as_structure()).monotonic, 'S^re is not monotonic'),
                       expect(included(restricted, hilbert_dump(H, instance)), '|-^re <= |-'))


class ReIdempotentProperty(HilbertSampleProperty):
    law = '(|-^re)^re = |-^re'

    def evaluate(self, instance):
        once = restrict_rules(hilbert(instance))
        return expect(equal_tables(hilbert_dump(restrict_rules(once), instance), hilbert_dump(once, instance)),
                      '(|-^re)^re = |-^re')


class ReTranslationProperty(HilbertSampleProperty):
    law = 'if every rule of S1^re is derivable in S2^re then |-1^re is included in |-2^re'
    systems = 2

    def fixed_instances(self):
        return (remark_instance('s1', 's2'),)

    def generate(self, rng):
        instance = HilbertSampleProperty.generate(self, rng)
        if rng.random() < 0.5:
            # a superset of schemata satisfies the hypothesis outright
            first, second = instance.schemata
            instance = Instance(instance.universe, instance.cap,
                                schemata=(first, tuple(dict.fromkeys(first + second))))
        return instance

    def hypotheses(self, instance):
        first, second = restrict_rules(hilbert(instance, 0)), restrict_rules(hilbert(instance, 1))
        budget = Budget(universe=instance.universe)
        return all(second.entail(rule.premises, rule.conclusion, budget).is_proved
                   for rule in first.rules(instance.universe))

    def evaluate(self, instance):
        first = hilbert_dump(restrict_rules(hilbert(instance, 0)), instance)
        second = hilbert_dump(restrict_rules(hilbert(instance, 1)), instance)
        return expect(included(first, second), '|-1^re <= |-2^re')


class ReNotMonotoneInBaseProperty(BaseProperty):
    law = '|-2 included in |-1 does not give |-2^re included in |-1^re (s2 against s1)'
    generated = False

    def fixed_instances(self):
        return (remark_instance('s2', 's1'),)

    def generate(self, rng):
        raise NotImplementedError('%s only replays its fixed instance' % self.name)

    def evaluate(self, instance):
        smaller, larger = hilbert(instance, 0, 's2'), hilbert(instance, 1, 's1')
        sig = generators.HILBERT_SIGNATURE
        gamma, alpha = frozenset([parse('(p & q)', sig)]), parse('(p | q)', sig)
        base = expect(included(hilbert_dump(smaller, instance), hilbert_dump(larger, instance)), '|-2 <= |-1')
        smaller_re = hilbert_dump(restrict_rules(smaller), instance)
        larger_re = hilbert_dump(restrict_rules(larger), instance)
        if not (smaller_re.complete and larger_re.complete):
            return Check(None, 'restricted dumps are incomplete')
        separated = expect_true(smaller_re.holds(gamma, alpha) and not larger_re.holds(gamma, alpha),
                                '(p & q) |- (p | q) should hold in s2^re and fail in s1^re')
        return combine(base, separated)


class LEqReIffProperty(HilbertSampleProperty):
    law = '|-^l = |-^re iff (|-^re)^l = |-^l'

    def evaluate(self, instance):
        H = hilbert(instance)
        left = companion(hilbert_dump(H, instance), L)
        restricted = hilbert_dump(restrict_rules(H), instance)
        forward = equal_tables(left, restricted)
        backward = equal_tables(companion(restricted, L), left)
        if forward.inconclusive or backward.inconclusive:
            return Check(None, 'a dump is incomplete')
        tags = ('l=re',) if forward.holds else ('l!=re',)
        if forward.holds != backward.holds:
            failing = forward if not forward.holds else backward
            return Check(False, 'the two sides disagree: %s' % failing.describe(), tags)
        return Check(True, tags=tags)
