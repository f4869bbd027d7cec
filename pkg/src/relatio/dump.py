"""Tabulate a logic or one of its companions over a finite universe.

Every premise set of at most --cap formulas of the session universe is asked
for its consequences in the universe, and the table is written to --out as a
relatio-table v1 file, which loads back as an extensional logic.

Exit status: 0 the table is complete, 2 some query ran out of budget (the
table is still written), 3 any error, e.g. a universe over --max_subsets.

Example:
    python dump.py --logic s1 --companion re --cap 1 --out tables/s1_re.table
    python dump.py --logic cpc --companion rho:L --depth 1 --cap 2 --out tables/cpc_l.table
"""
import re
import sys
from dataclasses import replace

from data import create_context, create_structure, session_universe
from data.table_file import write_dump
from logic.errors import RelatioError
from logic.oracle import dump
from logic.specs import build_structure
from options.dump_options import DumpOptions
from util.util import count_subsets


def main(args=None):
    try:
        opt = DumpOptions().parse(args)   # get dump options
        definition, base = create_structure(opt)
        universe = session_universe(opt, definition, base)
        ctx = create_context(opt, definition, base, universe)
        structure = build_structure(opt.companion, ctx)
        print('tabulating %s over %d formulas, premise cap %d' % (structure.name, len(universe), opt.cap))
        table = dump(structure, universe, opt.cap, ctx.budget, max_subsets=opt.max_subsets)
        # the logic line of a table file takes one token
        table = replace(table, name=re.sub(r'[\s{}#]', '', table.name))
        variables = set(definition.variables) | set(opt.variables)
        write_dump(table, opt.out, definition.signature, variables)
    except RelatioError as err:
        print('error: %s' % err, file=sys.stderr)
        return 3
    except SystemExit as err:
        # argparse exits with 2 on usage errors; 2 means an incomplete table here
        return 3 if err.code == 2 else err.code
    print('%d pairs over %d premise sets written to %s%s'
          % (table.size, count_subsets(len(table.universe), table.cap), opt.out, '' if table.complete else ' (incomplete)'))
    return 0 if table.complete else 2


if __name__ == '__main__':
    sys.exit(main())
