"""Hilbert-type structures induced by finitary rule schemata.

A schema is a finite list of premise patterns and a conclusion pattern over
metavariables (?A, ?B, ...). Axioms are schemata without premises. Over a
finite universe U a schema grounds to the instances whose every formula lies
in U; a HilbertStructure closes a premise set under the instances that
survive its filters.

Filters implement the restricted companions: a filter is a tuple of
relations and an instance (Gamma, alpha) passes it when some relation in the
tuple contains (Gamma, alpha). All filters of a structure must pass.
"""
import logging
from collections import deque
from dataclasses import dataclass

import networkx as nx

from .companions import L
from .errors import OutOfUniverse
from .structures import DEFAULT_BUDGET, WITHIN_UNIVERSE, LogicalStructure, Verdict
from .syntax import App, Meta, Var, generate_universe, render, sort_key, substitute, vars_set

LOGGER = logging.getLogger(__name__)

CLOSURE_CACHE_SIZE = 4096
RULES_CACHE_SIZE = 64


@dataclass(frozen=True)
class RuleSchema:
    name: str
    premises: tuple
    conclusion: object

    def __post_init__(self):
        object.__setattr__(self, 'premises', tuple(self.premises))

    @property
    def metavariables(self):
        found = set(self.conclusion.metavariables)
        for p in self.premises:
            found |= p.metavariables
        return frozenset(found)

    @property
    def is_axiom(self):
        return not self.premises

    def __str__(self):
        return '%s: %s / %s' % (self.name, ' ; '.join(render(p) for p in self.premises), render(self.conclusion))


@dataclass(frozen=True)
class RuleInstance:
    schema: str
    premises: frozenset
    conclusion: object

    def __str__(self):
        premises = ', '.join(sorted(render(p) for p in self.premises))
        return '%s: %s / %s' % (self.schema, premises, render(self.conclusion))


def match(pattern, formula, binding=None):
    """Extend <binding> so that the pattern instantiates to <formula>; None if impossible."""
    result = dict(binding or {})
    stack = [(pattern, formula)]
    while stack:
        p, f = stack.pop()
        if isinstance(p, Meta):
            bound = result.get(p.name)
            if bound is None:
                result[p.name] = f
            elif bound != f:
                return None
        elif isinstance(p, Var):
            if p != f:
                return None
        else:
            if not isinstance(f, App) or f.connective != p.connective or len(f.args) != len(p.args):
                return None
            stack.extend(zip(p.args, f.args))
    return result


def _head_index(universe):
    index = {}
    for f in universe:
        key = (f.connective, len(f.args)) if isinstance(f, App) else None
        index.setdefault(key, []).append(f)
    return index


def _candidates(pattern, universe, index, members):
    if isinstance(pattern, Meta):
        return universe
    if isinstance(pattern, Var):
        return (pattern,) if pattern in members else ()
    return index.get((pattern.connective, len(pattern.args)), ())


def _bindings(patterns, universe, index, members, binding):
    if not patterns:
        yield binding
        return
    pattern, rest = patterns[0], patterns[1:]
    if all(m in binding for m in pattern.metavariables):
        if substitute(binding, pattern) in members:
            yield from _bindings(rest, universe, index, members, binding)
        return
    for candidate in _candidates(pattern, universe, index, members):
        extended = match(pattern, candidate, binding)
        if extended is not None:
            yield from _bindings(rest, universe, index, members, extended)


def _ground(schema, binding):
    return RuleInstance(schema.name,
                        frozenset(substitute(binding, p) for p in schema.premises),
                        substitute(binding, schema.conclusion))


def instances(schema, universe):
    """All instances of <schema> whose premises and conclusion lie in <universe>.

    Metavariable assignments come from matching the patterns against the
    universe, never from blind products. Compound patterns are matched before
    bare metavariables, the conclusion first among equals.
    """
    universe = tuple(universe)
    members = frozenset(universe)
    index = _head_index(universe)
    patterns = tuple(sorted((schema.conclusion,) + schema.premises, key=lambda p: isinstance(p, Meta)))
    found = {}
    for binding in _bindings(patterns, universe, index, members, {}):
        found.setdefault(_ground(schema, binding), None)
    return tuple(found)


@dataclass(frozen=True)
class ClosureResult:
    """Least fixpoint (or partial fixpoint) of a premise set within a universe.

    <order> lists the formulas in the order they became known; <provenance>
    maps each to the instance that produced it, or None for a hypothesis.
    """
    formulas: frozenset
    complete: bool
    steps: int
    order: tuple
    provenance: dict


@dataclass(frozen=True)
class Step:
    formula: object
    rule: RuleInstance = None
    premises: tuple = ()

    @property
    def is_hypothesis(self):
        return self.rule is None


@dataclass(frozen=True)
class Derivation:
    """A finite sequence of steps, each a hypothesis or a rule instance on earlier steps."""
    steps: tuple

    @property
    def goal(self):
        return self.steps[-1].formula

    def __len__(self):
        return len(self.steps)

    def replay(self, H, premises, universe=None, goal=None):
        """Re-check every step independently of the search that produced it."""
        premises = frozenset(premises)
        members = None if universe is None else frozenset(universe)
        if not self.steps or (goal is not None and self.goal != goal):
            return False
        for i, step in enumerate(self.steps):
            if members is not None and step.formula not in members:
                return False
            if step.is_hypothesis:
                if step.formula not in premises:
                    return False
                continue
            if step.rule.conclusion != step.formula or not H.admits(step.rule):
                return False
            if any(j >= i for j in step.premises):
                return False
            if {self.steps[j].formula for j in step.premises} != step.rule.premises:
                return False
        return True

    def __str__(self):
        lines = []
        for i, step in enumerate(self.steps, 1):
            if step.is_hypothesis:
                why = 'hypothesis'
            elif step.premises:
                why = '%s on %s' % (step.rule.schema, ', '.join(str(j + 1) for j in step.premises))
            else:
                why = step.rule.schema
            lines.append('%d. %s  [%s]' % (i, render(step.formula), why))
        return '\n'.join(lines)


class HilbertStructure(LogicalStructure):
    """The logical structure induced by a set of rule schemata.

    Parameters:
        signature (Signature)  -- connectives of the language
        schemata (list)        -- RuleSchema objects; axioms have no premises
        filters (list)         -- tuples of relations, see the module docstring
        variables (iterable)   -- variables every generated universe includes
        name (str)             -- tag printed in reports
        depth (int)            -- default depth of generated universes (None: take it from the budget)
    """
    monotonic = True

    def __init__(self, signature, schemata, filters=(), variables=(), name='hilbert', depth=None):
        self.signature = signature
        self.schemata = tuple(schemata)
        self.filters = tuple(tuple(f) for f in filters)
        self.variables = frozenset(variables)
        self.name = name
        self.depth = depth
        self._grounded = {}
        self._closures = {}

    def with_filter(self, relations, name=None):
        relations = tuple(relations)
        filters = self.filters if relations in self.filters else self.filters + (relations,)
        return HilbertStructure(self.signature, self.schemata, filters, self.variables,
                                name or self.name, self.depth)

    def admits(self, instance):
        """True when <instance> instantiates one of the schemata and passes every filter."""
        if not self._instantiates(instance):
            return False
        return self._passes(instance)

    def _passes(self, instance):
        return all(any(rho(instance.premises, instance.conclusion) for rho in f) for f in self.filters)

    def _instantiates(self, instance):
        local = tuple(instance.premises) + (instance.conclusion,)
        members = frozenset(local)
        index = _head_index(local)
        for schema in self.schemata:
            if schema.name != instance.schema:
                continue
            binding = match(schema.conclusion, instance.conclusion)
            if binding is None:
                continue
            for extended in _bindings(schema.premises, local, index, members, binding):
                if _ground(schema, extended) == instance:
                    return True
        return False

    def rules(self, universe):
        """Surviving instances of all schemata over <universe>, cached per universe."""
        universe = tuple(universe)
        cached = self._grounded.get(universe)
        if cached is None:
            grounded = [i for schema in self.schemata for i in instances(schema, universe)]
            cached = tuple(i for i in grounded if self._passes(i))
            LOGGER.debug('%s: %d of %d instances survive over %d formulas',
                         self.name, len(cached), len(grounded), len(universe))
            if len(self._grounded) >= RULES_CACHE_SIZE:
                self._grounded.clear()
            self._grounded[universe] = cached
        return cached

    def universe_for(self, premises, goals, budget=None):
        budget = budget or DEFAULT_BUDGET
        query = list(premises) + list(goals)
        if budget.universe is not None:
            universe = tuple(budget.universe)
            members = frozenset(universe)
            outside = [f for f in query if f not in members]
            if outside:
                raise OutOfUniverse('%s is not in the search universe' % render(outside[0]))
            return universe
        depth = budget.depth if self.depth is None else self.depth
        generated = generate_universe(self.signature, self.variables | vars_set(query), depth)
        return tuple(dict.fromkeys(generated + tuple(sorted(query, key=sort_key))))

    def closure(self, premises, universe, step_cap=None):
        premises = frozenset(premises)
        universe = tuple(universe)
        key = (premises, universe, step_cap)
        cached = self._closures.get(key)
        if cached is None:
            if len(self._closures) >= CLOSURE_CACHE_SIZE:
                self._closures.clear()
            cached = closure(self, premises, universe, step_cap)
            self._closures[key] = cached
        return cached

    def entail(self, premises, goal, budget=None):
        return derive(self, premises, goal, budget)

    def consequences(self, premises, candidates, budget=None):
        budget = budget or DEFAULT_BUDGET
        candidates = tuple(candidates)
        universe = self.universe_for(premises, candidates, budget)
        result = self.closure(premises, universe, budget.step_cap)
        proved = result.formulas.intersection(candidates)
        return frozenset(proved), not result.complete and len(proved) < len(candidates)


def closure(H, premises, universe, step_cap=None):
    """Forward chaining from <premises> under the surviving instances over <universe>.

    Every instance keeps a count of premises not yet known; an instance fires
    once its count reaches zero. When <step_cap> rule applications have been
    made and productive instances are still waiting the result is flagged
    incomplete. A fixpoint reached exactly at the cap is complete.
    """
    premises = frozenset(premises)
    rules = H.rules(universe)
    waiting, missing, agenda = {}, [], deque()
    for i, rule in enumerate(rules):
        need = rule.premises - premises
        missing.append(len(need))
        for f in need:
            waiting.setdefault(f, []).append(i)
        if not need:
            agenda.append(i)

    order = sorted(premises, key=sort_key)
    provenance = dict.fromkeys(order)
    steps, complete = 0, True
    while agenda:
        rule = rules[agenda.popleft()]
        if rule.conclusion in provenance:
            continue
        if step_cap is not None and steps >= step_cap:
            complete = False
            break
        steps += 1
        provenance[rule.conclusion] = rule
        order.append(rule.conclusion)
        for j in waiting.get(rule.conclusion, ()):
            missing[j] -= 1
            if missing[j] == 0:
                agenda.append(j)
    return ClosureResult(frozenset(provenance), complete, steps, tuple(order), provenance)


def extract_derivation(result, goal):
    """Cut the closure trace down to the ancestors of <goal> and number the steps."""
    graph = nx.DiGraph()
    for formula, rule in result.provenance.items():
        graph.add_node(formula)
        if rule is not None:
            graph.add_edges_from((p, formula) for p in rule.premises)
    needed = nx.ancestors(graph, goal) | {goal}
    rank = {f: i for i, f in enumerate(result.order)}
    ordered = list(nx.lexicographical_topological_sort(graph.subgraph(needed), key=rank.__getitem__))
    position = {f: i for i, f in enumerate(ordered)}
    steps = []
    for formula in ordered:
        rule = result.provenance[formula]
        if rule is None:
            steps.append(Step(formula))
        else:
            steps.append(Step(formula, rule, tuple(sorted(position[p] for p in rule.premises))))
    return Derivation(tuple(steps))


def derive(H, premises, goal, budget=None):
    """Bounded derivability of <goal> from <premises> in <H>.

    Proved with a replayed Derivation; Refuted(within-universe) when the
    closure reached its fixpoint without the goal; Exhausted when the step
    cap was hit first.
    """
    budget = budget or DEFAULT_BUDGET
    premises = frozenset(premises)
    universe = H.universe_for(premises, [goal], budget)
    if goal in premises:
        return Verdict.proved(Derivation((Step(goal),)))
    result = H.closure(premises, universe, budget.step_cap)
    if goal in result.formulas:
        derivation = extract_derivation(result, goal)
        if not derivation.replay(H, premises, universe, goal):
            raise AssertionError('derivation of %s does not replay' % render(goal))
        return Verdict.proved(derivation)
    if not result.complete:
        return Verdict.exhausted('step cap %d reached with rule applications pending' % budget.step_cap)
    return Verdict.refuted(WITHIN_UNIVERSE)


def restrict_by(H, relations, name=None):
    """Keep only the instances contained in some relation of <relations>.

    An empty <relations> removes every instance, axioms included.
    """
    relations = tuple(relations)
    label = name or '%s^pi(%s)' % (H.name, ','.join(getattr(r, 'name', '?') for r in relations))
    return H.with_filter(relations, label)


def restrict_rules(H):
    """The restricted rules companion: instance (Gamma, alpha) survives iff vars(Gamma) <= vars(alpha)."""
    name = H.name if H.name.endswith('^re') else H.name + '^re'
    return restrict_by(H, (L,), name)
