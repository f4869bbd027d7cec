"""Random finite instances for the property runs.

An Instance is plain data: a universe, a premise cap, some base tables and
some relations, each a frozenset of (Delta, alpha) pairs, plus optional
Hilbert schemata. Generators draw from a numpy Generator so that one seed
gives one instance. label() records which hypotheses an instance satisfies.
"""
from dataclasses import dataclass, field, replace
from functools import lru_cache

from logic.hilbert import RuleSchema
from logic.oracle import TableDump
from logic.structures import check_tarski
from logic.syntax import Signature, generate_universe, parse, render, sort_key
from util.util import format_set, subsets

POOL_SIGNATURE = Signature((('&', 2), ('|', 2), ('~', 1)))
POOL = generate_universe(POOL_SIGNATURE, ('p', 'q', 'r'), 1)

HILBERT_SIGNATURE = Signature((('&', 2), ('|', 2)))
HILBERT_UNIVERSE = generate_universe(HILBERT_SIGNATURE, ('p', 'q'), 1)
HILBERT_CAP = 2

SCHEMA_POOL_TEXT = (
    ('R1', '(?A & ?B)', '?A'),
    ('R1b', '(?A & ?B)', '?B'),
    ('R2', '?A', '(?A | ?B)'),
    ('R2b', '?B', '(?A | ?B)'),
    ('R3', '(?A & ?B)', '(?A | ?B)'),
    ('AI', '?A ; ?B', '(?A & ?B)'),
    ('AC', '(?A & ?B)', '(?B & ?A)'),
    ('OC', '(?A | ?B)', '(?B | ?A)'),
    ('OI', '(?A | ?A)', '?A'),
    ('DS', '(?A | ?B) ; ?A', '?B'),
    ('AX', '', '(p | q)'),
)

SIGMA_GENERATORS = ('downward', 'arbitrary', 'upward')


@lru_cache(maxsize=None)
def schema_pool():
    pool = []
    for name, premises, conclusion in SCHEMA_POOL_TEXT:
        parsed = tuple(parse(p, HILBERT_SIGNATURE, allow_meta=True) for p in premises.split(';') if p.strip())
        pool.append(RuleSchema(name, parsed, parse(conclusion, HILBERT_SIGNATURE, allow_meta=True)))
    return tuple(pool)


@dataclass(frozen=True)
class Instance:
    """One generated case of a law.

    Parameters:
        universe (tuple)     -- the finite universe every table and relation lives in
        cap (int)            -- largest premise set
        tables (tuple)       -- base consequence tables, frozensets of (Delta, alpha)
        relations (tuple)    -- relations, frozensets of (Delta, alpha)
        schemata (tuple)     -- tuples of RuleSchema, one per Hilbert structure
        extra (tuple)        -- law-specific settings, e.g. the relation names of a restriction
        labels (frozenset)   -- hypotheses the instance satisfies, see label()
    """
    universe: tuple
    cap: int
    tables: tuple = ()
    relations: tuple = ()
    schemata: tuple = ()
    extra: tuple = ()
    labels: frozenset = field(default=frozenset(), compare=False)

    def dump(self, i=0, name=None):
        return TableDump(self.universe, self.cap, self.tables[i], True, name or 'base%d' % i)

    def without_formula(self, formula):
        universe = tuple(f for f in self.universe if f != formula)

        def keep(pairs):
            return frozenset((d, a) for d, a in pairs if a != formula and formula not in d)

        return replace(self, universe=universe, tables=tuple(keep(t) for t in self.tables),
                       relations=tuple(keep(r) for r in self.relations))

    def shrinks(self):
        """Smaller instances: one formula fewer, one schema fewer, then one pair fewer."""
        if len(self.universe) > 1:
            for formula in self.universe:
                yield self.without_formula(formula)
        for i, schemata in enumerate(self.schemata):
            for schema in schemata:
                smaller = tuple(s for s in schemata if s != schema)
                yield replace(self, schemata=self.schemata[:i] + (smaller,) + self.schemata[i + 1:])
        for kind in ('tables', 'relations'):
            groups = getattr(self, kind)
            for i, pairs in enumerate(groups):
                for pair in sorted(pairs, key=_pair_key):
                    updated = groups[:i] + (pairs - {pair},) + groups[i + 1:]
                    yield replace(self, **{kind: updated})

    def describe(self):
        lines = ['universe %s, premise cap %d' % (format_set(self.universe), self.cap)]
        for kind, groups in (('base', self.tables), ('relation', self.relations)):
            for i, pairs in enumerate(groups):
                shown = '; '.join('%s |- %s' % (format_set(d), render(a)) for d, a in sorted(pairs, key=_pair_key))
                lines.append('%s %d (%d pairs): %s' % (kind, i, len(pairs), shown or 'none'))
        for i, schemata in enumerate(self.schemata):
            lines.append('schemata %d: %s' % (i, ', '.join(str(s) for s in schemata) or 'none'))
        return '\n'.join(lines)


def _pair_key(pair):
    delta, alpha = pair
    return len(delta), sorted(sort_key(f) for f in delta), sort_key(alpha)


# ----------------------------------------------------------------------------
# drawing


def random_universe(rng, size, pool=POOL):
    chosen = sorted(rng.choice(len(pool), size=min(size, len(pool)), replace=False))
    return tuple(pool[i] for i in chosen)


def random_pairs(rng, universe, cap, density, min_size=0):
    pairs = set()
    for delta in subsets(universe, cap):
        for alpha in universe:
            if rng.random() < density and len(delta) >= min_size:
                pairs.add((delta, alpha))
    return frozenset(pairs)


def sparse_pairs(rng, universe, cap, density, reach=1):
    """Each premise set relates to at most <reach> formulas."""
    pairs = set()
    for delta in subsets(universe, cap):
        if rng.random() < density:
            for i in rng.choice(len(universe), size=min(reach, len(universe)), replace=False):
                pairs.add((delta, universe[i]))
    return frozenset(pairs)


def sub_sample(rng, pairs, keep=0.5):
    """A random subset of <pairs>."""
    return frozenset(p for p in sorted(pairs, key=_pair_key) if rng.random() < keep)


def monotone_closure(pairs, universe, cap):
    closed = set(pairs)
    for delta, alpha in pairs:
        for gamma in subsets(universe, cap):
            if delta <= gamma:
                closed.add((gamma, alpha))
    return frozenset(closed)


def downward_closure(pairs):
    return frozenset((d, a) for delta, a in pairs for d in subsets(delta))


def with_empty(pairs, universe):
    return frozenset(pairs) | frozenset((frozenset(), a) for a in universe)


def random_table(rng, universe, cap, density, monotone=None):
    """A random base table; <monotone> None flips a coin."""
    pairs = random_pairs(rng, universe, cap, density)
    if monotone is None:
        monotone = rng.random() < 0.5
    if monotone:
        pairs = monotone_closure(pairs, universe, cap)
    return pairs


def random_relation(rng, universe, cap, density, kind='arbitrary'):
    """kind: arbitrary | downward | upward | contains_empty."""
    if kind == 'upward':
        return random_pairs(rng, universe, cap, density, min_size=2)
    pairs = random_pairs(rng, universe, cap, density)
    if kind == 'downward':
        return downward_closure(sub_sample(rng, pairs, 0.3))
    if kind == 'contains_empty':
        return with_empty(pairs, universe)
    return pairs


def random_schemata(rng, density=0.5):
    """A nonempty random selection from the schema pool."""
    pool = schema_pool()
    chosen = tuple(s for s in pool if rng.random() < density)
    return chosen or (pool[int(rng.integers(len(pool)))],)


# ----------------------------------------------------------------------------
# labels


def is_monotone(pairs, universe, cap):
    dumped = TableDump(universe, cap, frozenset(pairs))
    return check_tarski(dumped.as_structure()).monotonic


def is_downward(pairs):
    return all((d, a) in pairs for delta, a in pairs for d in subsets(delta))


def contains_empty(pairs, universe):
    return all((frozenset(), a) in pairs for a in universe)


def label(instance):
    """Recompute the hypotheses <instance> satisfies and attach them."""
    found = set()
    u, cap = instance.universe, instance.cap
    for i, pairs in enumerate(instance.tables):
        if is_monotone(pairs, u, cap):
            found.add('base%d_monotone' % i)
    for i, pairs in enumerate(instance.relations):
        if is_downward(pairs):
            found.add('rel%d_downward' % i)
        if contains_empty(pairs, u):
            found.add('rel%d_contains_empty' % i)
    for kind, groups in (('base', instance.tables), ('rel', instance.relations)):
        for i, a in enumerate(groups):
            for j, b in enumerate(groups):
                if i != j and a <= b:
                    found.add('%s%d_sub_%s%d' % (kind, i, kind, j))
    return replace(instance, labels=frozenset(found))
