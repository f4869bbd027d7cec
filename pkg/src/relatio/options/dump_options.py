from .base_options import BaseOptions


class DumpOptions(BaseOptions):
    """This class includes the options of dump.py.

    It also includes shared options defined in BaseOptions.
    """
    script = 'dump'
    description = 'tabulate a logic or companion over a finite universe'

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)
        parser.add_argument('--logic', required=True, help='logic file, or the name of a bundled sample [s1 | s2 | cpc | pwk]')
        parser.add_argument('--companion', type=str, default='base', help='companion spec [base | re | pi:<rel>,... | rho:<rel> | prho:<rel>]')
        parser.add_argument('--cap', type=int, default=1, help='largest premise set tabulated')
        parser.add_argument('--out', type=str, required=True, help='path of the table file to write')
        return parser
