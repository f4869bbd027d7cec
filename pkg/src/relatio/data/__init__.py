"""This package includes the modules that read and write workbench files.

A logic is found by name the way the other registries of the project find
their classes: a name is first tried as a path, then as a bundled sample under
data/samples/[name].logic.

    -- <logic_file>:   logic-definition files (signature, variables, one backend block)
    -- <table_file>:   dumps, stored as extensional logic files behind a versioned header
"""
import os

from logic.errors import UnknownLogic
from logic.hilbert import HilbertStructure
from logic.specs import SpecContext
from logic.structures import DEFAULT_DEPTH, ExtensionalStructure, MatrixStructure
from logic.syntax import generate_universe, vars_set
from options.base_options import first_given, make_budget

from .logic_file import read_logic
from .table_file import read_dump

SAMPLES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'samples')


def list_logics():
    """Names of the bundled sample logics."""
    return sorted(f[:-len('.logic')] for f in os.listdir(SAMPLES_DIR) if f.endswith('.logic'))


def find_logic_using_name(name):
    """Return the path of the logic called <name>.

    <name> may be a path to a file, a bundled sample name (s1) or a bundled
    file name (s1.logic).
    """
    if os.path.isfile(name):
        return name
    base = name[:-len('.logic')] if name.endswith('.logic') else name
    path = os.path.join(SAMPLES_DIR, base + '.logic')
    if not os.path.isfile(path):
        raise UnknownLogic('no logic file %s and no bundled sample named %s; bundled samples are [%s]'
                           % (name, base, ' | '.join(list_logics())))
    return path


def load_logic(name):
    """Read the logic called <name> and return its LogicDefinition."""
    return read_logic(find_logic_using_name(name))


def create_structure(opt):
    """Create the structure named by opt.logic.

    This is the main interface between this package and the command scripts.

    Example:
        >>> from data import create_structure
        >>> definition, structure = create_structure(opt)
    """
    definition = load_logic(opt.logic)
    structure = definition.structure()
    print("logic [%s] was created (%s backend)" % (definition.name, definition.backend))
    return definition, structure


def load_table(path):
    """Return the TableDump stored at <path>."""
    return read_dump(path)[1]


def session_universe(opt, definition, structure, formulas=()):
    """The finite universe a command works in.

    Extensional logics bring their own. Otherwise it is every formula over the
    declared, extra and query variables up to the session depth, plus the
    query formulas. Matrices decide every query without a universe, so their
    session depth defaults to 1.
    """
    formulas = tuple(formulas)
    if isinstance(structure, ExtensionalStructure):
        return structure.universe
    variables = set(definition.variables) | set(opt.variables) | set(vars_set(formulas))
    fallback = 1 if isinstance(structure, MatrixStructure) else DEFAULT_DEPTH
    depth = first_given(opt.depth, definition.depth, fallback)
    generated = generate_universe(definition.signature, variables, depth)
    return tuple(dict.fromkeys(generated + formulas))


def create_context(opt, definition, structure, universe):
    """The SpecContext that resolves companion specs for a command script."""
    return SpecContext(base=structure, signature=definition.signature, universe=tuple(universe),
                       budget=make_budget(opt, universe if isinstance(structure, HilbertStructure) else None,
                                          definition.depth),
                       premise_limit=opt.premise_limit,
                       load_logic=lambda name: load_logic(name).structure(),
                       load_table=load_table)
