"""This module contains simple helper functions """
import itertools
import math
import os


def subsets(items, max_size=None):
    """Yield every subset of <items> as a frozenset, smallest first.

    Parameters:
        items (iterable)  -- the ground set; its iteration order fixes the output order
        max_size (int)    -- skip subsets larger than this (None for no limit)
    """
    items = list(items)
    top = len(items) if max_size is None else min(max_size, len(items))
    for size in range(top + 1):
        for combo in itertools.combinations(items, size):
            yield frozenset(combo)


def count_subsets(n, max_size=None):
    """Number of subsets of an n-element set with at most <max_size> elements."""
    top = n if max_size is None else min(max_size, n)
    return sum(math.comb(n, i) for i in range(top + 1))


def format_set(formulas):
    """Print a finite set of formulas as {f, g, ...} in a stable order."""
    return '{%s}' % ', '.join(sorted(str(f) for f in formulas))


def mkdirs(paths):
    """create empty directories if they don't exist

    Parameters:
        paths (str list) -- a list of directory paths
    """
    if isinstance(paths, list) and not isinstance(paths, str):
        for path in paths:
            mkdir(path)
    else:
        mkdir(paths)


def mkdir(path):
    """create a single empty directory if it didn't exist

    Parameters:
        path (str) -- a single directory path
    """
    if path and not os.path.exists(path):
        os.makedirs(path)
