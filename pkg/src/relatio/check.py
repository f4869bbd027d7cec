"""Run registered properties over generated finite instances.

It expands the suite argument (one property, a comma separated list, or all),
creates each property from the shared options and runs it. Every report is
printed; --report also writes them to a relatio-report v1 file.

Exit status: 0 every property Passed, 1 some property Failed, 2 some property
was Inconclusive and none Failed, 3 any error.

Example:
    python check.py all --seed 1 --universe 5
    python check.py l_eq_re_iff --seed 3
    python check.py dd_commute --sigma_generator upward --no_hypothesis_check
"""
import sys
import time

import props
from logic.errors import RelatioError
from options.check_options import CheckOptions
from props.base_property import PropertyConfig, write_reports


def suite_exit_code(reports):
    codes = [r.exit_code for r in reports]
    if 1 in codes:
        return 1
    return 2 if 2 in codes else 0


def main(args=None):
    try:
        opt = CheckOptions().parse(args)   # get check options
        reports = []
        for name in props.suite_names(opt.suite):
            prop = props.create_property(PropertyConfig.from_options(opt, name))
            start = time.time()
            report = prop.run()
            print(report.to_text())
            print('    time: %.2f sec' % (time.time() - start))
            reports.append(report)
        if opt.report:
            write_reports(reports, opt.report)
            print('reports written to %s' % opt.report)
    except RelatioError as err:
        print('error: %s' % err, file=sys.stderr)
        return 3
    except SystemExit as err:
        # argparse exits with 2 on usage errors; 2 means Inconclusive here
        return 3 if err.code == 2 else err.code
    passed = sum(r.exit_code == 0 for r in reports)
    print('%d of %d properties passed' % (passed, len(reports)))
    return suite_exit_code(reports)


if __name__ == '__main__':
    sys.exit(main())
