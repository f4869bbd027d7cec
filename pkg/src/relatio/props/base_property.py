import argparse
import json
import logging
import os
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, fields

import numpy as np
from joblib import Parallel, delayed

from util import util

from . import generators
from .tables import EngineDisagreement

LOGGER = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
REPORT_HEADER = 'relatio-report v1'
SHRINK_LIMIT = 2000


@dataclass(frozen=True)
class PropertyConfig:
    """Everything a property run depends on; equal configs replay equal runs."""
    name: str = ''
    seed: int = 0
    universe_size: int = 5
    premise_cap: int = 3
    instances: int = 100
    density: float = 0.3
    n_jobs: int = 1
    check_hypotheses: bool = True
    sigma_generator: str = 'downward'
    max_attempts: int = None
    shrink: bool = True
    schema_density: float = 0.5
    reach: int = 1

    @property
    def attempts(self):
        return self.max_attempts if self.max_attempts is not None else self.instances * 20

    @classmethod
    def from_options(cls, opt, name):
        """Read a config out of the check.py option namespace."""
        values = dict(name=name, seed=opt.seed, universe_size=opt.universe, premise_cap=opt.premise_cap,
                      instances=opt.instances, density=opt.density, n_jobs=opt.n_jobs,
                      check_hypotheses=not opt.no_hypothesis_check, sigma_generator=opt.sigma_generator,
                      max_attempts=opt.max_attempts, shrink=not opt.no_shrink)
        # options that only some properties add
        known = {f.name for f in fields(cls)}
        values.update({k: v for k, v in vars(opt).items() if k in known and k not in values})
        return cls(**values)


@dataclass(frozen=True)
class Check:
    """Outcome of a law on one instance: ok is True, False, or None when a table was incomplete."""
    ok: object
    witness: str = ''
    tags: tuple = ()


def expect(comparison, what, tags=()):
    """Turn an oracle Comparison into a Check."""
    if comparison.holds:
        return Check(True, tags=tuple(tags))
    return Check(comparison.result, '%s: %s' % (what, comparison.describe()), tuple(tags))


def expect_true(value, witness, tags=()):
    return Check(True, tags=tuple(tags)) if value else Check(False, witness, tuple(tags))


def combine(*checks):
    """The first failing check, else an inconclusive one, else a pass carrying every tag."""
    tags = tuple(t for c in checks for t in c.tags)
    for c in checks:
        if c.ok is False:
            return Check(False, c.witness, tags)
    for c in checks:
        if c.ok is None:
            return Check(None, c.witness, tags)
    return Check(True, tags=tags)


@dataclass
class PropertyReport:
    name: str
    law: str
    result: str
    run: int = 0
    skipped: int = 0
    seed: int = 0
    counts: dict = field(default_factory=dict)
    witness: str = ''
    origin: str = ''

    @property
    def exit_code(self):
        return {PASS: 0, FAIL: 1, INCONCLUSIVE: 2}[self.result]

    def to_text(self):
        lines = ['[%s] %s' % (self.result.upper(), self.name),
                 '    law: %s' % self.law,
                 '    instances run: %d, skipped by hypotheses: %d, seed: %d' % (self.run, self.skipped, self.seed)]
        if self.counts:
            lines.append('    counts: %s' % ', '.join('%s=%d' % kv for kv in sorted(self.counts.items())))
        if self.witness:
            lines.append('    witness (%s):' % self.origin)
            lines += ['        ' + line for line in self.witness.splitlines()]
        return '\n'.join(lines)

    def to_record(self):
        return json.dumps({'name': self.name, 'law': self.law, 'result': self.result, 'run': self.run,
                           'skipped': self.skipped, 'seed': self.seed, 'counts': self.counts,
                           'witness': self.witness, 'origin': self.origin}, sort_keys=True)


def write_reports(reports, path):
    util.mkdirs(os.path.dirname(path))
    with open(path, 'wt', encoding='utf-8') as handle:
        handle.write(REPORT_HEADER + '\n')
        for report in reports:
            handle.write(report.to_record() + '\n')


def _evaluate(prop, instance):
    try:
        return prop.evaluate(instance)
    except EngineDisagreement as err:
        return Check(False, str(err), ('engine_disagrees',))


class BaseProperty(ABC):
    """This class is an abstract base class (ABC) for properties.

    To create a subclass, you need to implement the following functions:
        -- <generate>:                      draw one Instance from a numpy Generator.
        -- <evaluate>:                      check the law on one instance; return a Check.
    and you may override:
        -- <hypotheses>:                    whether the law applies to an instance (default: <requires> labels).
        -- <fixed_instances>:               instances run before any generated one.
        -- <modify_commandline_options>:    add property-specific options.

    Set <generated> to False for properties that only replay their fixed instances.
    """
    law = ''
    requires = ()
    generated = True

    def __init__(self, cfg):
        """Initialize the property.

        Parameters:
            cfg (PropertyConfig) -- seeds, sizes and switches of the run
        """
        self.cfg = cfg
        self.name = cfg.name

    @staticmethod
    def modify_commandline_options(parser):
        """Add property-specific options. Several properties may add the same option."""
        return parser

    @staticmethod
    def add_shared_option(parser, *args, **kwargs):
        try:
            parser.add_argument(*args, **kwargs)
        except argparse.ArgumentError:
            pass
        return parser

    @abstractmethod
    def generate(self, rng):
        """Return one Instance drawn from <rng>."""

    @abstractmethod
    def evaluate(self, instance):
        """Return the Check of the law on <instance>."""

    def hypotheses(self, instance):
        return set(self.requires) <= instance.labels

    def fixed_instances(self):
        return ()

    # helpers shared by the generators of several laws
    def universe(self, rng):
        return generators.random_universe(rng, self.cfg.universe_size)

    def table(self, rng, universe, monotone=None):
        return generators.random_table(rng, universe, self.cfg.premise_cap, self.cfg.density, monotone)

    def relation(self, rng, universe, kind='arbitrary'):
        return generators.random_relation(rng, universe, self.cfg.premise_cap, self.cfg.density, kind)

    def collect(self):
        """Draw candidates until <instances> of them satisfy the hypotheses."""
        cfg = self.cfg
        accepted, skipped = [], 0
        for i, instance in enumerate(self.fixed_instances()):
            instance = generators.label(instance)
            if cfg.check_hypotheses and not self.hypotheses(instance):
                skipped += 1
                continue
            accepted.append(('fixed instance %d' % i, instance))
        if not self.generated:
            return accepted, skipped
        root = np.random.SeedSequence(cfg.seed)
        for attempt in range(cfg.attempts):
            if len(accepted) >= cfg.instances:
                break
            child = root.spawn(1)[0]
            instance = generators.label(self.generate(np.random.default_rng(child)))
            if cfg.check_hypotheses and not self.hypotheses(instance):
                skipped += 1
                continue
            accepted.append(('seed %d attempt %d' % (cfg.seed, attempt), instance))
        return accepted, skipped

    def shrink(self, instance, check):
        """Greedy minimization: adopt any smaller instance on which the law still fails."""
        budget = SHRINK_LIMIT
        progress = True
        while progress and budget > 0:
            progress = False
            for candidate in instance.shrinks():
                budget -= 1
                if budget <= 0:
                    break
                candidate = generators.label(candidate)
                if self.cfg.check_hypotheses and not self.hypotheses(candidate):
                    continue
                outcome = _evaluate(self, candidate)
                if outcome.ok is False:
                    instance, check, progress = candidate, outcome, True
                    break
        return instance, check

    def run(self):
        accepted, skipped = self.collect()
        LOGGER.info('%s: %d instances accepted, %d skipped', self.name, len(accepted), skipped)
        checks = Parallel(n_jobs=self.cfg.n_jobs)(delayed(_evaluate)(self, inst) for _, inst in accepted)
        report = PropertyReport(self.name, self.law, PASS, len(accepted), skipped, self.cfg.seed)
        for check in checks:
            for tag in check.tags:
                report.counts[tag] = report.counts.get(tag, 0) + 1
        failed = next((i for i, c in enumerate(checks) if c.ok is False), None)
        if failed is not None:
            origin, instance = accepted[failed]
            check = checks[failed]
            if self.cfg.shrink:
                instance, check = self.shrink(instance, check)
                origin += ', shrunk'
            report.result = FAIL
            report.origin = origin
            report.witness = '%s\n%s' % (check.witness, instance.describe())
        elif any(c.ok is None for c in checks):
            report.result = INCONCLUSIVE
            report.witness = next(c.witness for c in checks if c.ok is None)
        elif not accepted:
            report.result = INCONCLUSIVE
            report.witness = 'no generated instance satisfied the hypotheses'
        return report
