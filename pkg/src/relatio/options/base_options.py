import argparse
import logging
import os

from logic.structures import DEFAULT_DEPTH, DEFAULT_MAX_SUBSETS, DEFAULT_PREMISE_LIMIT, Budget
from util import util


class BaseOptions():
    """This class defines options used by every command script.

    It also implements several helper functions such as parsing, printing, and saving the options.
    Subclasses may gather additional options through the <modify_commandline_options> hook of
    the classes they select (see CheckOptions and the props package).
    """
    description = 'consequence-relation workbench'

    def initialize(self, parser):
        """Define the common options that are used by every script."""
        # universe parameters
        parser.add_argument('--depth', type=int, default=None, help='connective depth of generated universes; defaults to the depth line of the logic file, then %d' % DEFAULT_DEPTH)
        parser.add_argument('--variables', type=str, default='', help='extra universe variables, comma separated: e.g. p,q,r')
        # budget parameters
        parser.add_argument('--step_cap', type=int, default=None, help='maximum rule applications per closure; unbounded if omitted')
        parser.add_argument('--premise_limit', type=int, default=DEFAULT_PREMISE_LIMIT, help='largest premise set a companion sweep accepts')
        parser.add_argument('--max_subsets', type=int, default=DEFAULT_MAX_SUBSETS, help='largest subset lattice an exhaustive sweep accepts')
        # additional parameters
        parser.add_argument('--seed', type=int, default=0, help='seed for every generator')
        parser.add_argument('--options_dir', type=str, default='', help='if given, the option table is also saved to [options_dir]/[script]_opt.txt')
        parser.add_argument('--verbose', action='store_true', help='if specified, print more debugging information')
        return parser

    def gather_options(self, args=None):
        """Build our parser with basic options, afresh on every call.
        Add additional options through <modify_options>, which subclasses override.
        """
        parser = argparse.ArgumentParser(description=self.description, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        parser = self.initialize(parser)

        # get the basic options, then let the selected classes add theirs
        opt, _ = parser.parse_known_args(args)
        parser = self.modify_options(parser, opt)

        # save and return the parser
        self.parser = parser
        return parser.parse_args(args)

    def modify_options(self, parser, opt):
        return parser

    def print_options(self, opt):
        """Print and save options

        It will print both current options and default values(if different).
        It will save options into a text file / [options_dir] / [script]_opt.txt
        """
        message = ''
        message += '----------------- Options ---------------\n'
        for k, v in sorted(vars(opt).items()):
            comment = ''
            default = self.parser.get_default(k)
            if v != default:
                comment = '\t[default: %s]' % str(default)
            message += '{:>25}: {:<30}{}\n'.format(str(k), str(v), comment)
        message += '----------------- End -------------------'
        print(message)

        # save to the disk
        if opt.options_dir:
            util.mkdirs(opt.options_dir)
            file_name = os.path.join(opt.options_dir, '{}_opt.txt'.format(opt.script))
            with open(file_name, 'wt') as opt_file:
                opt_file.write(message)
                opt_file.write('\n')

    def parse(self, args=None):
        """Parse our options, split list-valued options and set up logging."""
        opt = self.gather_options(args)
        opt.script = self.script

        self.print_options(opt)

        opt.variables = [v.strip() for v in opt.variables.split(',') if v.strip()]
        logging.basicConfig(level=logging.DEBUG if opt.verbose else logging.WARNING,
                            format='%(levelname)s %(name)s: %(message)s')

        self.opt = opt
        return self.opt


def first_given(*values):
    """The first of <values> that is not None; 0 counts as given."""
    return next(v for v in values if v is not None)


def make_budget(opt, universe=None, depth=None):
    """The Budget an option namespace describes."""
    return Budget(universe=None if universe is None else tuple(universe),
                  depth=first_given(opt.depth, depth, DEFAULT_DEPTH),
                  step_cap=opt.step_cap,
                  premise_limit=opt.premise_limit,
                  max_subsets=opt.max_subsets)
