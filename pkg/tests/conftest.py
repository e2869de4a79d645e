"""Shared oracles built from first principles (permutation composition,
naive enumeration) so library results can be checked against an
independent route."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from pqtower import groups


def permutation_table(perms: list[tuple[int, ...]]) -> np.ndarray:
    """Multiplication table of the closure of ``perms`` under composition.

    Composition oracle: (a*b)(k) = a[b[k]].  Element order is sorted tuples,
    so tables are reproducible.
    """
    n = len(perms[0])
    elems = {tuple(range(n))}
    frontier = list(elems) + [tuple(p) for p in perms]
    for p in perms:
        elems.add(tuple(p))
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(elems):
                for c in (tuple(a[k] for k in b), tuple(b[k] for k in a)):
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
        frontier = nxt
    ordered = sorted(elems)
    pos = {p: i for i, p in enumerate(ordered)}
    table = [[pos[tuple(a[k] for k in b)] for b in ordered] for a in ordered]
    return np.array(table)


@pytest.fixture(scope="session")
def s3():
    return groups.validate_table(permutation_table([(1, 0, 2), (0, 2, 1)]))


@pytest.fixture(scope="session")
def a4():
    return groups.validate_table(permutation_table([(1, 2, 0, 3), (1, 0, 3, 2)]))


def brute_force_subgroups(g: groups.TableGroup) -> set[frozenset[int]]:
    """All subgroups by testing every subset of divisor size (tiny groups)."""
    n = g.order
    out = set()
    for size in range(1, n + 1):
        if n % size:
            continue
        for combo in itertools.combinations(range(n), size):
            s = set(combo)
            if g.identity not in s:
                continue
            if all(g.product(a, b) in s for a in s for b in s):
                out.add(frozenset(s))
    return out
