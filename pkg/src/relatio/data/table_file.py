"""Dumps on disk.

A dump is stored as an extensional logic file behind the "relatio-table v1"
header, so it can be loaded back either as a TableDump or as a logic.
"""
import logging
import os

from logic.errors import DefinitionError
from logic.oracle import TableDump
from util import util

from .logic_file import TABLE_HEADER, format_extensional, parse_logic

LOGGER = logging.getLogger(__name__)


def write_dump(dump, path, signature, variables=()):
    """Write <dump> to <path>, creating the directory if needed."""
    util.mkdirs(os.path.dirname(path))
    text = format_extensional(dump.name, signature, dump.universe, dump.table, dump.cap, dump.complete, variables)
    with open(path, 'wt', encoding='utf-8') as handle:
        handle.write(text)
    LOGGER.info('wrote %d pairs to %s', dump.size, path)
    return path


def parse_dump(text):
    first = next((line.strip() for line in text.splitlines() if line.strip()), '')
    if first != TABLE_HEADER:
        raise DefinitionError('expected the header line %r' % TABLE_HEADER, 1, 1)
    definition = parse_logic(text)
    if definition.backend != 'extensional':
        raise DefinitionError('a table file must hold an extensional block', 1, 1)
    cap = definition.cap if definition.cap is not None else len(definition.universe)
    return definition, TableDump(definition.universe, cap, frozenset(definition.pairs),
                                 definition.complete, definition.name)


def read_dump(path):
    """Return (LogicDefinition, TableDump) read from <path>."""
    with open(path, encoding='utf-8') as handle:
        return parse_dump(handle.read())
