"""Ordinary matroids on ``{0, ..., n-1}`` with subsets encoded as bitmasks.

These helpers are deliberately plain and exhaustive: they serve both as the
support layer for hyperfield matroids and as the independent oracle for the
Krasner case.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> tuple:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@lru_cache(maxsize=None)
def k_subsets(n: int, k: int) -> tuple:
    """All ``k``-subsets of ``range(n)`` as masks, in lexicographic order of
    their sorted index tuples."""
    if k < 0 or k > n:
        return ()
    return tuple(mask_of(c) for c in itertools.combinations(range(n), k))


def colex_key(mask: int) -> tuple:
    return tuple(reversed(bits(mask)))


def is_basis_family(bases: Iterable[int]) -> bool:
    """Exhaustive basis-exchange test; the empty family is rejected."""
    bases = set(bases)
    if not bases:
        return False
    if len({popcount(b) for b in bases}) != 1:
        return False
    for b1 in bases:
        for b2 in bases:
            diff2 = b2 & ~b1
            for x in bits(b1 & ~b2):
                if not any((b1 & ~(1 << x)) | (1 << y) in bases for y in bits(diff2)):
                    return False
    return True


def independent_sets(n: int, bases: Iterable[int]) -> set:
    indep = set()
    for b in bases:
        sub = b
        while True:
            indep.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & b
    return indep


def circuits_from_bases(n: int, bases: Iterable[int]) -> frozenset:
    """Minimal subsets that lie in no basis."""
    indep = independent_sets(n, bases)
    out = set()
    for m in range(1, 1 << n):
        if m in indep:
            continue
        if all((m & ~(1 << i)) in indep for i in bits(m)):
            out.add(m)
    return frozenset(out)


def bases_from_circuits(n: int, circuits: Iterable[int]) -> frozenset:
    """Maximal subsets containing no circuit."""
    circuits = list(circuits)

    def independent(m):
        return not any(c & m == c for c in circuits)

    for k in range(n, -1, -1):
        found = [m for m in k_subsets(n, k) if independent(m)]
        if found:
            return frozenset(found)
    return frozenset([0])


def is_circuit_family(circuits: Iterable[int]) -> bool:
    """Ordinary circuit axioms: nonempty, incomparable, elimination."""
    cs = set(circuits)
    if 0 in cs:
        return False
    for c1 in cs:
        for c2 in cs:
            if c1 != c2 and c1 & c2 == c1:
                return False
    for c1, c2 in itertools.combinations(cs, 2):
        union = c1 | c2
        for e in bits(c1 & c2):
            rest = union & ~(1 << e)
            if not any(c & rest == c for c in cs):
                return False
    return True


def rank_of(mask: int, bases: Iterable[int]) -> int:
    return max(popcount(mask & b) for b in bases)


def restrict_bases(bases: Iterable[int], s: int) -> frozenset:
    bases = list(bases)
    k = rank_of(s, bases)
    return frozenset(b & s for b in bases if popcount(b & s) == k)


def contract_bases(bases: Iterable[int], s: int) -> frozenset:
    bases = list(bases)
    k = rank_of(s, bases)
    return frozenset(b & ~s for b in bases if popcount(b & s) == k)


def dual_bases(n: int, bases: Iterable[int]) -> frozenset:
    full = (1 << n) - 1
    return frozenset(full & ~b for b in bases)


def fundamental_circuit(basis: int, e: int, circuits: Iterable[int]) -> int:
    target = basis | (1 << e)
    for c in circuits:
        if c & target == c and c >> e & 1:
            return c
    raise ValueError("no fundamental circuit: the set is not a basis")


def modular_pairs(supports: Iterable[int]) -> list:
    """Pairs of distinct supports whose union is inclusion-minimal among the
    unions of two distinct supports."""
    sups = sorted(set(supports))
    unions = {a | b for a, b in itertools.combinations(sups, 2)}
    out = []
    for a, b in itertools.combinations(sups, 2):
        u = a | b
        if not any(v != u and v & u == v for v in unions):
            out.append((a, b))
    return out


def relabel_mask(mask: int, perm) -> int:
    """Image of ``mask`` under the index map ``i -> perm[i]``."""
    out = 0
    for i in bits(mask):
        out |= 1 << perm[i]
    return out
