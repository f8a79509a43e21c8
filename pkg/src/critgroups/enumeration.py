"""Exhaustive search for arithmetical structures with bounded r entries.

The search space for a graph on n vertices is the box [1, r_max]^n of
candidate r-vectors; every structure whose r entries all stay within the
bound is found, and nothing outside the box is explored.  Beyond the
bound a graph generally carries further structures, so callers must treat
the result as "complete up to r_max", never as the full (finite) set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .graphs import ArithmeticalStructure, Multigraph


@dataclass(frozen=True)
class EnumerationQuery:
    graph: Multigraph
    r_max: int

    def __post_init__(self) -> None:
        if self.r_max < 1:
            raise ValueError(f"r_max must be at least 1, got {self.r_max}")


def enumerate_structures(query: EnumerationQuery) -> list[ArithmeticalStructure]:
    """All structures with max(r) <= r_max, sorted lexicographically by r.

    Depth-first search assigns r vertex by vertex; the divisibility
    condition at vertex i (r[i] must divide the weighted neighbor sum) is
    applied as soon as the last neighbor of i has a value, which prunes
    most of the box before it is ever walked.  The gcd(r) = 1 condition
    can only be tested on full assignments.
    """
    g = query.graph
    n = g.n
    mult = g.mult
    r_max = query.r_max

    # ready_at[k] lists the vertices whose neighborhood (and self) is fully
    # assigned once r[0..k-1] are chosen.
    ready_at: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(n):
        last = i
        for j in range(n):
            if mult[i][j] > 0 and j > last:
                last = j
        ready_at[last + 1].append(i)

    results: list[ArithmeticalStructure] = []
    r = [0] * n

    def extend(k: int) -> None:
        if k == n:
            if gcd(*r) == 1:
                d = tuple(sum(m * r[j] for j, m in enumerate(mult[i])) // r[i] for i in range(n))
                results.append(ArithmeticalStructure(d, tuple(r)))
            return
        for value in range(1, r_max + 1):
            r[k] = value
            ok = True
            for i in ready_at[k + 1]:
                if sum(m * r[j] for j, m in enumerate(mult[i])) % r[i] != 0:
                    ok = False
                    break
            if ok:
                extend(k + 1)

    extend(0)
    results.sort(key=lambda s: s.r)
    return results


def sample_structure(query: EnumerationQuery, seed: int) -> ArithmeticalStructure:
    """Uniform draw from `enumerate_structures(query)`, reproducible by seed."""
    found = enumerate_structures(query)
    if not found:
        raise ValueError("no structures within the bound")
    rng = random.Random(seed)
    return found[rng.randrange(len(found))]
