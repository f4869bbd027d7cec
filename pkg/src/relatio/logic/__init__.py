"""Formulas, logical structures and their companions.

syntax       formula algebra, parsing, universes
structures   the structure interface, tables, matrices, Tarski checks
hilbert      rule schemata and bounded derivations
companions   relations and relational companions
oracle       brute-force tables and comparisons
specs        the companion-spec mini-language
"""
