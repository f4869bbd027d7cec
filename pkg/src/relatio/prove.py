"""Answer one entailment query in a logic or in one of its companions.

It loads the logic named by --logic, builds the structure the --companion spec
names over it and asks whether --premises entail --goal. The verdict, its
certificate (a derivation, a truth-table summary, a table entry or the premise
subset a companion used) and the scope of a refutation are printed.

Exit status: 0 Proved, 1 Refuted, 2 Exhausted, 3 any error.

Example:
    python prove.py --logic s2 --companion re --premises "(p & q)" --goal "(p | q)"
    python prove.py --logic cpc --companion rho:L --premises "p,~p" --goal q
"""
import sys

from data import create_context, create_structure, session_universe
from logic.companions import CompanionCertificate
from logic.errors import RelatioError
from logic.hilbert import Derivation
from logic.specs import build_structure
from logic.structures import TableEntry, TruthTableCertificate
from logic.syntax import parse, parse_formula_list, render
from options.prove_options import ProveOptions
from util.util import format_set


def describe_certificate(certificate, indent=''):
    """Lines describing a Proved certificate."""
    if isinstance(certificate, Derivation):
        return [indent + line for line in str(certificate).splitlines()]
    if isinstance(certificate, TruthTableCertificate):
        return [indent + 'truth table over %s: %d valuations, %d designate every premise, all designate the goal'
                % (', '.join(certificate.variables) or 'no variables', certificate.valuations, certificate.designating)]
    if isinstance(certificate, TableEntry):
        return [indent + 'listed pair %s |- %s' % (format_set(certificate.premises), render(certificate.goal))]
    if isinstance(certificate, CompanionCertificate):
        lines = [indent + 'premise subset used: %s' % format_set(certificate.witness)]
        return lines + describe_certificate(certificate.base_verdict.certificate, indent + '    ')
    return [indent + str(certificate)]


def report(verdict):
    lines = ['verdict: %s' % verdict.status.value]
    if verdict.is_proved:
        lines += describe_certificate(verdict.certificate, '    ')
    elif verdict.is_refuted:
        lines.append('scope: %s' % verdict.scope)
        if verdict.witness:
            lines.append('counterexample valuation: %s' % ', '.join('%s=%s' % kv for kv in sorted(verdict.witness.items())))
    else:
        lines.append('budget: %s' % verdict.report)
    return '\n'.join(lines)


def main(args=None):
    try:
        opt = ProveOptions().parse(args)   # get prove options
        definition, base = create_structure(opt)
        premises = parse_formula_list(opt.premises, definition.signature)
        goal = parse(opt.goal, definition.signature)
        universe = session_universe(opt, definition, base, premises + [goal])
        ctx = create_context(opt, definition, base, universe)
        structure = build_structure(opt.companion, ctx)
        print('query: %s |- %s in %s' % (format_set(premises), render(goal), structure.name))
        verdict = structure.entail(frozenset(premises), goal, ctx.budget)
    except RelatioError as err:
        print('error: %s' % err, file=sys.stderr)
        return 3
    except SystemExit as err:
        # argparse exits with 2 on usage errors; 2 means Exhausted here
        return 3 if err.code == 2 else err.code
    print(report(verdict))
    return verdict.exit_code


if __name__ == '__main__':
    sys.exit(main())
