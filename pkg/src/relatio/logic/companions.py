"""Relational companions of logical structures.

Given a structure S and a relation rho between finite premise sets and
formulas, the rho-companion entails alpha from Gamma when some Delta inside
Gamma has (Delta, alpha) in rho and Delta |- alpha in S. The pure
rho-companion additionally requires Delta to be nonempty.

The module also holds the concrete relations (left and right variable
inclusion, the right-companion relation R built on an antitheorem oracle,
nontriviality) and a classifier that checks declared relation flags on a
finite universe.
"""
import enum
import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from util.util import count_subsets, subsets

from .errors import IndeterminateNontriviality, PremiseSetTooLarge, UniverseTooLarge
from .structures import (DEFAULT_MAX_SUBSETS, DEFAULT_PREMISE_LIMIT, FULL, WITHIN_UNIVERSE,
                         ExtensionalStructure, LogicalStructure, MatrixStructure, Verdict)
from .syntax import render, sort_key, substitute, vars_set

LOGGER = logging.getLogger(__name__)


class Flag(enum.Enum):
    YES = 'yes'
    NO = 'no'
    UNKNOWN = 'unknown'

    @classmethod
    def of(cls, value):
        return cls.YES if value else cls.NO


def _both(a, b):
    if a is Flag.YES and b is Flag.YES:
        return Flag.YES
    return Flag.UNKNOWN


def _either(a, b):
    if Flag.YES in (a, b):
        return Flag.YES
    return Flag.UNKNOWN


class Relation:
    """A membership test over (finite premise set, formula) with declared flags.

    Parameters:
        name (str)                 -- printed in reports and companion names
        test (callable)            -- test(delta: frozenset, alpha) -> bool; must be pure
        downward_directed (Flag)   -- (Delta, a) in rho implies (Delta', a) in rho for Delta' inside Delta
        contains_empty (Flag)      -- (empty set, a) in rho for every a
        finite_reach (Flag)        -- every Delta relates to finitely many formulas of the full language
        pointwise (bool)           -- (Delta, a) in rho iff ({g}, a) in rho for every g in Delta
        conservative (bool)        -- membership may be False only because a budget ran out
    """

    def __init__(self, name, test, downward_directed=Flag.UNKNOWN, contains_empty=Flag.UNKNOWN,
                 finite_reach=Flag.UNKNOWN, pointwise=False, conservative=False):
        self.name = name
        self.test = test
        self.pointwise = pointwise
        if pointwise:
            downward_directed = contains_empty = Flag.YES
        self.downward_directed = downward_directed
        self.contains_empty = contains_empty
        self.finite_reach = finite_reach
        self.conservative = conservative

    def __call__(self, delta, alpha):
        return bool(self.test(frozenset(delta), alpha))

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __repr__(self):
        return '<Relation %s>' % self.name

    @classmethod
    def from_pairs(cls, name, pairs, **flags):
        """An explicit finite relation; finite relations always have finite reach."""
        table = {}
        for delta, alpha in pairs:
            table.setdefault(frozenset(delta), set()).add(alpha)
        table = {delta: frozenset(goals) for delta, goals in table.items()}
        flags.setdefault('finite_reach', Flag.YES)
        relation = cls(name, lambda delta, alpha: alpha in table.get(delta, ()), **flags)
        relation.pairs = frozenset((d, a) for d, goals in table.items() for a in goals)
        return relation


def union(rho, sigma):
    return Relation('union(%s,%s)' % (rho.name, sigma.name),
                    lambda delta, alpha: rho(delta, alpha) or sigma(delta, alpha),
                    downward_directed=_both(rho.downward_directed, sigma.downward_directed),
                    contains_empty=_either(rho.contains_empty, sigma.contains_empty),
                    finite_reach=_both(rho.finite_reach, sigma.finite_reach),
                    conservative=rho.conservative or sigma.conservative)


def intersect(rho, sigma):
    return Relation('intersect(%s,%s)' % (rho.name, sigma.name),
                    lambda delta, alpha: rho(delta, alpha) and sigma(delta, alpha),
                    downward_directed=_both(rho.downward_directed, sigma.downward_directed),
                    contains_empty=_both(rho.contains_empty, sigma.contains_empty),
                    finite_reach=_either(rho.finite_reach, sigma.finite_reach),
                    pointwise=rho.pointwise and sigma.pointwise,
                    conservative=rho.conservative or sigma.conservative)


# ----------------------------------------------------------------------------
# variable inclusion


def rel_L(delta, alpha):
    """Left variable inclusion: vars(Delta) <= vars(alpha)."""
    return vars_set(delta) <= alpha.variables


def rel_PR(delta, alpha):
    """Right variable inclusion: vars(alpha) <= vars(Delta)."""
    return alpha.variables <= vars_set(delta)


L = Relation('L', rel_L, finite_reach=Flag.NO, pointwise=True)
PR = Relation('PR', rel_PR, downward_directed=Flag.NO, contains_empty=Flag.NO, finite_reach=Flag.NO)
TOTAL = Relation('total', lambda delta, alpha: True, finite_reach=Flag.NO, pointwise=True)
EMPTY = Relation('empty', lambda delta, alpha: False, downward_directed=Flag.YES,
                 contains_empty=Flag.NO, finite_reach=Flag.YES)


# ----------------------------------------------------------------------------
# antitheorems


class AntitheoremOracle(ABC):
    """Answers whether a finite premise set is an antitheorem of some structure.

    An antitheorem is a set every substitution instance of which entails every
    formula. Oracles answer Flag.YES only when that is certain.
    """
    name = 'oracle'

    @abstractmethod
    def __call__(self, delta):
        """Return a Flag for the premise set <delta>."""


class NoAntitheorems(AntitheoremOracle):
    name = 'never'

    def __call__(self, delta):
        return Flag.NO


NEVER = NoAntitheorems()


class DeclaredAntitheorems(AntitheoremOracle):
    """Antitheorems given by a list of certificates.

    A premise set counts as an antitheorem when it contains a declared one,
    which is sound for monotonic structures. Anything else is UNKNOWN.
    """
    name = 'declared'

    def __init__(self, certificates):
        self.certificates = tuple(frozenset(c) for c in certificates)

    def __call__(self, delta):
        delta = frozenset(delta)
        if any(c <= delta for c in self.certificates):
            return Flag.YES
        return Flag.UNKNOWN


class MatrixAntitheorems(AntitheoremOracle):
    """Antitheorems of local matrix consequence: exactly the unsatisfiable sets.

    An unsatisfiable set stays unsatisfiable under every substitution. A
    satisfiable set does not entail a variable it does not mention, because
    the designated set is proper.
    """
    name = 'matrix'

    def __init__(self, matrix):
        self.matrix = matrix

    def __call__(self, delta):
        return Flag.NO if self.matrix.satisfiable(delta) else Flag.YES


class SampledAntitheorems(AntitheoremOracle):
    """Bounded check over a finite sample of substitutions (identity always included).

    Any sampled instance that fails to explode refutes antitheoremhood; if
    every sampled instance explodes the answer stays UNKNOWN.
    """
    name = 'sample'

    def __init__(self, base, probes, substitutions=(), budget=None):
        self.base = base
        self.probes = tuple(probes)
        self.substitutions = ({},) + tuple(substitutions)
        self.budget = budget

    def __call__(self, delta):
        for s in self.substitutions:
            image = frozenset(substitute(s, f) for f in delta)
            for phi in self.probes:
                verdict = self.base.entail(image, phi, self.budget)
                if verdict.is_refuted:
                    return Flag.NO
        return Flag.UNKNOWN


def rel_R(delta, alpha, anti):
    """Delta is a confirmed antitheorem, or vars(alpha) <= vars(Delta)."""
    return anti(delta) is Flag.YES or rel_PR(delta, alpha)


def make_R(anti=NEVER):
    if anti is NEVER:
        flags = dict(downward_directed=Flag.NO, contains_empty=Flag.NO)
    else:
        flags = {}
    return Relation('R(anti=%s)' % anti.name, lambda delta, alpha: rel_R(delta, alpha, anti),
                    finite_reach=Flag.NO, **flags)


# ----------------------------------------------------------------------------
# nontriviality


def rel_nontrivial(base, delta, probes, budget=None):
    """True iff some probe phi has base |- Delta => phi Refuted.

    Raises IndeterminateNontriviality when no probe is refuted but at least
    one query ran out of budget.
    """
    probes = tuple(probes)
    if not probes:
        raise ValueError('nontriviality needs at least one probe formula')
    exhausted = False
    for phi in probes:
        verdict = base.entail(delta, phi, budget)
        if verdict.is_refuted:
            return True
        if verdict.is_exhausted:
            exhausted = True
    if exhausted:
        raise IndeterminateNontriviality('every probe for %s was proved or ran out of budget'
                                         % ', '.join(sorted(render(f) for f in delta)))
    return False


def make_P(base, probes, budget=None):
    """The paraconsistentization relation: (Delta, alpha) in P iff Delta is nontrivial in <base>."""
    probes = tuple(probes)
    memo = {}

    def test(delta, alpha):
        if delta not in memo:
            memo[delta] = rel_nontrivial(base, delta, probes, budget)
        return memo[delta]

    # subsets of a nontrivial set stay nontrivial when the base is monotonic
    directed = Flag.YES if base.monotonic else Flag.UNKNOWN
    return Relation('P(%s)' % base.name, test, downward_directed=directed)


def rel_from_structure(T, budget=None):
    """(Delta, alpha) is a member iff T proves Delta |- alpha under <budget>.

    Only table and matrix backends answer every query; any other backend may
    run out of budget, so the relation is flagged conservative.
    """
    exact = isinstance(T, (ExtensionalStructure, MatrixStructure))
    return Relation('struct(%s)' % T.name, lambda delta, alpha: T.entail(delta, alpha, budget).is_proved,
                    conservative=not exact)


# ----------------------------------------------------------------------------
# classification


@dataclass
class ClassifyReport:
    downward_directed: bool
    contains_empty: bool
    reach: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def max_reach(self):
        return max(self.reach.values(), default=0)


def classify(rho, universe, max_size=None, max_subsets=DEFAULT_MAX_SUBSETS):
    """Exhaustively check <rho> over P(universe) x universe.

    Only premise sets of at most <max_size> formulas are visited. Downward
    direction is checked on one-formula removals, which chain to every subset.
    """
    universe = tuple(universe)
    if count_subsets(len(universe), max_size) > max_subsets:
        raise UniverseTooLarge('%d formulas exceed the subset cap of %d' % (len(universe), max_subsets))
    reach, witnesses = {}, {}
    directed = True
    for delta in subsets(universe, max_size):
        related = [alpha for alpha in universe if rho(delta, alpha)]
        reach[delta] = len(related)
        if not directed:
            continue
        for alpha in related:
            smaller = next((delta - {g} for g in delta if not rho(delta - {g}, alpha)), None)
            if smaller is not None:
                directed = False
                witnesses['downward_directed'] = (delta, smaller, alpha)
                break
    missing = next((alpha for alpha in universe if not rho(frozenset(), alpha)), None)
    if missing is not None:
        witnesses['contains_empty'] = (frozenset(), missing)
    return ClassifyReport(directed, missing is None, reach, witnesses)


def check_flags(rho, report):
    """Compare declared flags with a classification; returns the disagreeing flag names.

    YES must hold on every universe; NO is a claim about some universe and
    is not contradicted by a finite sample where the property happens to hold.
    """
    wrong = []
    if rho.downward_directed is Flag.YES and not report.downward_directed:
        wrong.append('downward_directed')
    if rho.contains_empty is Flag.YES and not report.contains_empty:
        wrong.append('contains_empty')
    return wrong


# ----------------------------------------------------------------------------
# companion structures


@dataclass(frozen=True)
class CompanionCertificate:
    """The premise subset used and the base verdict that proved it."""
    witness: frozenset
    base_verdict: Verdict


class CompanionStructure(LogicalStructure):
    """The rho-companion (or pure rho-companion) of a base structure.

    Parameters:
        base (LogicalStructure)  -- the structure whose entailment is borrowed
        rho (Relation)           -- which premise subsets may be used for which goals
        pure (bool)              -- forbid the empty premise subset
        premise_limit (int)      -- refuse premise sets larger than this
        shortcut (bool)          -- allow the maximal-member shortcut when it is sound
    """
    monotonic = True

    def __init__(self, base, rho, pure=False, premise_limit=DEFAULT_PREMISE_LIMIT, shortcut=True, name=None):
        self.base = base
        self.rho = rho
        self.pure = pure
        self.premise_limit = premise_limit
        self.shortcut = shortcut
        self.name = name or '%s^%s%s' % (base.name, 'p' if pure else '', rho.name)

    @property
    def uses_shortcut(self):
        return self.shortcut and self.base.monotonic and self.rho.downward_directed is Flag.YES

    def entail(self, premises, goal, budget=None):
        return companion_entails(self, premises, goal, budget)


def _all_members(rho, premises, goal, pure):
    for delta in subsets(sorted(premises, key=sort_key)):
        if pure and not delta:
            continue
        if rho(delta, goal):
            yield delta


def _maximal_members(rho, premises, goal, pure):
    """Maximal rho-members among subsets of <premises>, largest first."""
    ordered = sorted(premises, key=sort_key)
    if rho.pointwise:
        star = frozenset(g for g in ordered if rho({g}, goal))
        return [] if pure and not star else [star]
    maximal = []
    for size in range(len(ordered), 0 if pure else -1, -1):
        for combo in itertools.combinations(ordered, size):
            delta = frozenset(combo)
            if any(delta <= m for m in maximal):
                continue
            if rho(delta, goal):
                maximal.append(delta)
    return maximal


def _sweep(C, candidates, goal, budget):
    exhausted, scope, queried = None, FULL, 0
    for delta in candidates:
        queried += 1
        verdict = C.base.entail(delta, goal, budget)
        if verdict.is_proved:
            return Verdict.proved(CompanionCertificate(delta, verdict))
        if verdict.is_exhausted:
            exhausted = exhausted or verdict
        elif verdict.scope == WITHIN_UNIVERSE:
            scope = WITHIN_UNIVERSE
    LOGGER.debug('%s: %d candidate subsets for %s, none proved', C.name, queried, render(goal))
    if exhausted is not None:
        return Verdict.exhausted('base ran out of budget on a candidate subset: %s' % exhausted.report)
    return Verdict.refuted(scope)


def companion_entails(C, premises, goal, budget=None):
    """Sweep the candidate premise subsets of <premises> against the base.

    With a monotonic base and a downward-directed relation only the maximal
    members are queried first. A step cap breaks monotonicity (a larger set
    can run out of steps where a smaller one proves the goal), so an
    exhausted shortcut falls back to every member. Proved beats Exhausted
    beats Refuted; a refutation is scoped within-universe as soon as one base
    refutation was.
    """
    premises = frozenset(premises)
    if len(premises) > C.premise_limit:
        raise PremiseSetTooLarge('%d premises exceed the companion limit of %d'
                                 % (len(premises), C.premise_limit))
    if C.uses_shortcut:
        verdict = _sweep(C, _maximal_members(C.rho, premises, goal, C.pure), goal, budget)
        if not verdict.is_exhausted:
            return verdict
        LOGGER.debug('%s: shortcut exhausted for %s, sweeping every member', C.name, render(goal))
    return _sweep(C, _all_members(C.rho, premises, goal, C.pure), goal, budget)
