"""Laws of Hilbert-type structures and their restricted companions."""
from functools import lru_cache

from data import load_logic
from logic.companions import L, PR, CompanionStructure, rel_from_structure
from logic.hilbert import HilbertStructure, restrict_by, restrict_rules
from logic.oracle import dump, equal_tables, included
from logic.structures import Budget, check_tarski
from logic.syntax import generate_universe, parse

from . import generators
from .base_property import BaseProperty, Check, combine, expect, expect_true
from .generators import HILBERT_CAP, HILBERT_UNIVERSE, Instance
from .tables import companion, hilbert, hilbert_dump
from .variable_inclusion_laws import HilbertSampleProperty

RESTRICTIONS = {'L': (L,), 'PR': (PR,), 'L,PR': (L, PR)}


class PiEqRhoProperty(HilbertSampleProperty):
    law = '|-^Pi equals the companion of |- by the relation {(Delta, a) | Delta |-^Pi a}'

    def generate(self, rng):
        names = sorted(RESTRICTIONS)
        schemata = generators.random_schemata(rng, self.cfg.schema_density)
        return Instance(HILBERT_UNIVERSE, HILBERT_CAP, schemata=(schemata,),
                        extra=(names[int(rng.integers(len(names)))],))

    def evaluate(self, instance):
        H = hilbert(instance)
        restricted = restrict_by(H, RESTRICTIONS[instance.extra[0]])
        expected = hilbert_dump(restricted, instance)
        rho = rel_from_structure(expected.as_structure(monotonic=True))
        engine = dump(CompanionStructure(H, rho), instance.universe, instance.cap)
        return combine(expect(equal_tables(engine, expected), '|-^Pi = |-^rho'),
                       Check(True, tags=('Pi=%s' % instance.extra[0],)))


class HilbertTarskiProperty(HilbertSampleProperty):
    law = 'dumped Hilbert structures and their restricted companions are finitary and Tarski-type'

    def evaluate(self, instance):
        H = hilbert(instance)
        checks = []
        for S in (H, restrict_rules(H), restrict_by(H, (L, PR))):
            report = check_tarski(hilbert_dump(S, instance).as_structure())
            checks.append(expect_true(report.tarski and report.finitary, '%s: %s' % (S.name, report)))
        return combine(*checks)


DT_LOGIC = 'cpc_hilbert'

# (q>q)>p |- q>p: through p the last step is illegal once MP is restricted;
# with K and S the premise is moved under q and p never stands alone.
LIFTED_PREMISE = (('((q > q) > p)', '(q > q)'), '(q > p)',
                  ('(q > q)', '((q > q) > p)', 'p', '(p > (q > p))', '(q > p)'),
                  ('(((q > q) > p) > (q > ((q > q) > p)))', '(q > ((q > q) > p))',
                   '((q > ((q > q) > p)) > ((q > (q > q)) > (q > p)))', '((q > (q > q)) > (q > p))',
                   '(q > (q > q))'))
# p, ~p |- q has only the illegal route, so the restricted system keeps explosion out.
EXPLOSION = (('p', '~p'), 'q',
             ('p', '~p', 'q', '~q', '(~p > (~q > ~p))', '(~q > ~p)', '((~q > ~p) > (p > q))', '(p > q)'),
             ())


@lru_cache(maxsize=None)
def _logic(name):
    return load_logic(name)


def _route_instance(premises, goal, small, route):
    """A replay: <small> forces an unrestricted MP step, <route> adds a deduction-theorem detour."""
    sig = _logic(DT_LOGIC).signature
    small = tuple(parse(t, sig) for t in small)
    extra = (frozenset(parse(t, sig) for t in premises), parse(goal, sig), small)
    return Instance(small + tuple(parse(t, sig) for t in route), len(premises),
                    schemata=(tuple(_logic(DT_LOGIC).schemata),), extra=extra)


class ReEqLUnderDtProperty(BaseProperty):
    law = 'with modus ponens and the deduction theorem, |-^re = |-^l (CPC by K, S, contraposition and MP)'

    def fixed_instances(self):
        return (_route_instance(*LIFTED_PREMISE), _route_instance(*EXPLOSION))

    def generate(self, rng):
        definition = _logic(DT_LOGIC)
        pool = generate_universe(definition.signature, definition.variables, definition.depth)
        return Instance(generators.random_universe(rng, self.cfg.universe_size, pool), self.cfg.premise_cap,
                        schemata=(tuple(definition.schemata),))

    @staticmethod
    def hilbert(instance):
        definition = _logic(DT_LOGIC)
        return HilbertStructure(definition.signature, instance.schemata[0], variables=definition.variables,
                                name=definition.name)

    def evaluate(self, instance):
        """Random universes check the inclusions that hold on any finite universe; replays check the detour."""
        if instance.extra:
            return self.replay(instance)
        H = self.hilbert(instance)
        universe, cap = instance.universe, instance.cap
        restricted = dump(restrict_rules(H), universe, cap)
        unrestricted = dump(H, universe, cap)
        pwk = dump(_logic('pwk').structure(), universe, cap)
        cpc = dump(_logic('cpc').structure(), universe, cap)
        return combine(expect(included(restricted, companion(unrestricted, L)), '|-^re <= |-^l'),
                       expect(included(restricted, pwk), '|-^re <= PWK'),
                       expect(included(unrestricted, cpc), '|- <= CPC', tags=('sound',)))

    def replay(self, instance):
        premises, goal, small = instance.extra
        universe = instance.universe
        small = tuple(f for f in small if f in universe)
        if not premises | {goal} <= set(small):
            return Check(None, 'the query left the universe')
        H = self.hilbert(instance)
        restricted = restrict_rules(H)
        narrow = Budget(universe=small)
        checks = [expect_true(H.entail(premises, goal, narrow).is_proved, 'the unrestricted system misses the goal'),
                  expect_true(restricted.entail(premises, goal, narrow).is_refuted,
                              'the restricted system proves the goal without the detour')]
        if len(small) < len(universe):
            detour = restricted.entail(premises, goal, Budget(universe=universe))
            checks.append(expect_true(detour.is_proved, 'the deduction-theorem detour does not reach the goal',
                                      tags=('dt_route',)))
        else:
            checks.append(expect_true(_logic('pwk').structure().entail(premises, goal).is_refuted,
                                      'PWK should refute the goal too', tags=('explosion_blocked',)))
        return combine(*checks)
