import props
from .base_options import BaseOptions


class CheckOptions(BaseOptions):
    """This class includes the options of check.py.

    It also includes shared options defined in BaseOptions, and the options
    the selected properties add through their <modify_commandline_options>.
    """
    script = 'check'
    description = 'run registered properties over generated finite instances'

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)
        parser.add_argument('suite', nargs='?', default='all', help='property name, comma separated names, or all')
        parser.add_argument('--universe', type=int, default=5, help='# of formulas in generated universes')
        parser.add_argument('--premise_cap', type=int, default=3, help='largest premise set in generated tables')
        parser.add_argument('--instances', type=int, default=100, help='# of in-hypothesis instances per property')
        parser.add_argument('--density', type=float, default=0.3, help='probability that a sampled pair is kept')
        parser.add_argument('--n_jobs', type=int, default=1, help='# of parallel workers for instances; -1 uses every core')
        parser.add_argument('--sigma_generator', type=str, default='downward', help='second-relation generator of dd_commute [downward | arbitrary | upward]')
        parser.add_argument('--max_attempts', type=int, default=None, help='# of candidate draws per property; defaults to 20 x instances')
        parser.add_argument('--no_hypothesis_check', action='store_true', help='assert laws on every instance, even when their hypotheses fail')
        parser.add_argument('--no_shrink', action='store_true', help='report failing instances as found, without shrinking')
        parser.add_argument('--report', type=str, default='', help='if given, write a relatio-report v1 file here')
        return parser

    def modify_options(self, parser, opt):
        for name in props.suite_names(opt.suite):
            parser = props.get_option_setter(name)(parser)
        return parser
