from .base_options import BaseOptions


class ProveOptions(BaseOptions):
    """This class includes the options of prove.py.

    It also includes shared options defined in BaseOptions.
    """
    script = 'prove'
    description = 'answer one entailment query in a logic or one of its companions'

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)
        parser.add_argument('--logic', required=True, help='logic file, or the name of a bundled sample [s1 | s2 | cpc | pwk]')
        parser.add_argument('--companion', type=str, default='base', help='companion spec [base | re | pi:<rel>,... | rho:<rel> | prho:<rel>]')
        parser.add_argument('--premises', type=str, default='', help='comma separated premises: e.g. "p,(p > q)"')
        parser.add_argument('--goal', type=str, required=True, help='the formula to derive')
        return parser
