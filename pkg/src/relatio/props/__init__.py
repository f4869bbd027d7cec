"""This package contains the laws of relational companions as runnable properties.

To add a property called 'dummy', define a subclass DummyProperty of BaseProperty in one of the
law modules and list 'dummy' in REGISTRY under that module.
You need to implement the following functions:
    -- <generate>:                      draw one Instance from a numpy Generator.
    -- <evaluate>:                      check the law on one instance and return a Check.
    -- <hypotheses>:                    (optionally) decide whether the law applies to an instance.
    -- <modify_commandline_options>:    (optionally) add property-specific options.

Now you can run the property by naming it to check.py: 'python check.py dummy'.
"""
import importlib
from dataclasses import replace

from logic.errors import UnknownProperty
from props.base_property import BaseProperty, PropertyConfig, PropertyReport

LAW_MODULES = {
    'variable_inclusion': ('l_monotone', 'l_idempotent', 're_subset_base', 're_idempotent', 'l_pair_monotone',
                           're_translation', 're_not_monotone_in_base', 'l_eq_re_iff'),
    'companion': ('rho_monotone', 'rho_subset_base', 'rho_idempotent', 'prho_monotone', 'prho_subset_base',
                  'prho_idempotent', 'pair_monotone', 'union_intersect', 'theoremhood', 'theoremhood_l',
                  'pr_is_pure_right', 'r_is_right', 'shortcut_agrees'),
    'composition': ('comp_i', 'comp_ii', 'comp_iii', 'comp_iv', 'comp_v', 'dd_commute'),
    'reach': ('finite_reach_nontrivial', 'ecq_failures'),
    'hilbert': ('pi_eq_rho', 'hilbert_tarski', 're_eq_l_under_dt'),
}
REGISTRY = {name: 'props.%s_laws' % module for module, names in LAW_MODULES.items() for name in names}
ALIASES = {'companion_idempotent': 'rho_idempotent'}


def find_property_using_name(property_name):
    """Import the law module of "property_name".

    In the file, the class called PropertyNameProperty() will
    be instantiated. It has to be a subclass of BaseProperty,
    and it is case-insensitive.
    """
    property_name = ALIASES.get(property_name, property_name)
    if property_name not in REGISTRY:
        raise UnknownProperty('no property named %s; see list_properties()' % property_name)
    lawlib = importlib.import_module(REGISTRY[property_name])
    prop = None
    target_property_name = property_name.replace('_', '') + 'property'
    for name, cls in lawlib.__dict__.items():
        if name.lower() == target_property_name.lower() \
           and isinstance(cls, type) and issubclass(cls, BaseProperty):
            prop = cls

    if prop is None:
        raise UnknownProperty('In %s.py, there should be a subclass of BaseProperty with class name that matches %s in lowercase.'
                              % (REGISTRY[property_name], target_property_name))
    return prop


def get_option_setter(property_name):
    """Return the static method <modify_commandline_options> of the property class."""
    return find_property_using_name(property_name).modify_commandline_options


def list_properties():
    """Map every registered property name to the law it checks."""
    return {name: find_property_using_name(name).law for name in REGISTRY}


def suite_names(suite):
    """Expand 'all' or a comma separated list into property names, in registry order for 'all'."""
    if suite == 'all':
        return list(REGISTRY)
    names = [n.strip() for n in suite.split(',') if n.strip()]
    for name in names:
        if name not in REGISTRY and name not in ALIASES:
            raise UnknownProperty('no property named %s; registered properties are [%s]'
                                  % (name, ' | '.join(REGISTRY)))
    return names


def create_property(cfg):
    """Create a property given its config.

    This is the main interface between this package and 'check.py'.

    Example:
        >>> from props import create_property
        >>> prop = create_property(cfg)
    """
    prop = find_property_using_name(cfg.name)
    instance = prop(cfg)
    print("property [%s] was created" % type(instance).__name__)
    return instance


def run_property(name, cfg=None):
    """Run the property <name> and return its PropertyReport."""
    name = ALIASES.get(name, name)
    cfg = PropertyConfig(name=name) if cfg is None else cfg
    if cfg.name != name:
        cfg = replace(cfg, name=name)
    return find_property_using_name(name)(cfg).run()

