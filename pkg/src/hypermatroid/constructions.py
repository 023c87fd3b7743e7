"""Minors, direct sums and pushforwards, by the GPF route and the circuit route."""
from __future__ import annotations

import itertools
from typing import Iterable

from hypermatroid import ordinary as om
from hypermatroid.hyperfield import Homomorphism, HyperfieldError
from hypermatroid.matroid import (
    DEFAULT_PERP_CAP,
    STRONG,
    CircuitSet,
    GPFunction,
    HVector,
    MatroidError,
    orthogonal,
)


def _subset_mask(ground: tuple, s: Iterable[str]) -> int:
    index = {x: i for i, x in enumerate(ground)}
    s = list(s)
    missing = [x for x in s if x not in index]
    if missing:
        raise MatroidError(f"labels {missing} are not in the ground set")
    return om.mask_of(index[x] for x in s)


def _sub_ground(ground: tuple, keep: int) -> tuple:
    return tuple(ground[i] for i in om.bits(keep))


def _project(vec: HVector, keep: int) -> HVector:
    idx = om.bits(keep)
    return HVector(vec.hyperfield, _sub_ground(vec.ground, keep), tuple(vec.coords[i] for i in idx))


def _reindex(mask: int, keep_idx: tuple) -> int:
    pos = {old: new for new, old in enumerate(keep_idx)}
    return om.mask_of(pos[i] for i in om.bits(mask))


def _lex_least(bases: Iterable[int]) -> int:
    return min(bases, key=om.bits)


# ---------------------------------------------------------------------------
# restriction, deletion, contraction
# ---------------------------------------------------------------------------

def _fixed_minor(phi: GPFunction, keep: int, fixed: tuple, fixed_first: bool) -> GPFunction:
    """``x -> phi(fixed, x)`` or ``x -> phi(x, fixed)`` on sorted subsets of ``keep``."""
    h = phi.hyperfield
    keep_idx = om.bits(keep)
    k = phi.rank - len(fixed)
    values = {}
    for x in itertools.combinations(keep_idx, k):
        v = phi.value_idx(fixed + x if fixed_first else x + fixed)
        if v != h.zero:
            values[_reindex(om.mask_of(x), keep_idx)] = v
    return GPFunction(h, _sub_ground(phi.ground, keep), k, values)


def _restrict_gpf(phi: GPFunction, keep: int) -> GPFunction:
    # the appended tuple is a basis of the contraction by the kept set
    tail = om.bits(_lex_least(om.contract_bases(phi.bases(), keep)))
    return _fixed_minor(phi, keep, tail, fixed_first=False)


def _contract_gpf(phi: GPFunction, s: int) -> GPFunction:
    head = om.bits(_lex_least(om.restrict_bases(phi.bases(), s)))
    return _fixed_minor(phi, ((1 << phi.n) - 1) & ~s, head, fixed_first=True)


def _restrict_circuits(c: CircuitSet, keep: int) -> CircuitSet:
    vecs = [_project(x, keep) for x in c.circuits if x.support & keep == x.support]
    return CircuitSet.build(c.hyperfield, _sub_ground(c.ground, keep), vecs)


def _contract_circuits(c: CircuitSet, s: int) -> CircuitSet:
    keep = ((1 << len(c.ground)) - 1) & ~s
    projected = [_project(x, keep) for x in c.circuits if x.support & keep]
    sups = {v.support for v in projected}
    minimal = {m for m in sups if not any(t != m and t & m == t for t in sups)}
    return CircuitSet.build(c.hyperfield, _sub_ground(c.ground, keep),
                            [v for v in projected if v.support in minimal])


def restrict(m, s: Iterable[str]):
    """``M|S`` for a :class:`GPFunction` or a :class:`CircuitSet`."""
    if isinstance(m, GPFunction):
        return _restrict_gpf(m, _subset_mask(m.ground, s))
    if isinstance(m, CircuitSet):
        return _restrict_circuits(m, _subset_mask(m.ground, s))
    raise TypeError(f"cannot restrict {type(m).__name__}")


def delete(m, s: Iterable[str]):
    if not isinstance(m, (GPFunction, CircuitSet)):
        raise TypeError(f"cannot delete from {type(m).__name__}")
    drop = _subset_mask(m.ground, s)
    keep = ((1 << len(m.ground)) - 1) & ~drop
    return restrict(m, _sub_ground(m.ground, keep))


def contract(m, s: Iterable[str]):
    if isinstance(m, GPFunction):
        return _contract_gpf(m, _subset_mask(m.ground, s))
    if isinstance(m, CircuitSet):
        return _contract_circuits(m, _subset_mask(m.ground, s))
    raise TypeError(f"cannot contract {type(m).__name__}")


def restrict_with_basis(phi: GPFunction, s: Iterable[str], tail: Iterable[str]) -> GPFunction:
    """``x -> phi(x, B)`` on ``S`` for a caller-chosen ordered basis ``B`` of ``M/S``."""
    keep = _subset_mask(phi.ground, s)
    tail_idx = tuple(phi.index(x) for x in tail)
    if om.mask_of(tail_idx) not in om.contract_bases(phi.bases(), keep):
        raise MatroidError(f"{list(tail)} is not a basis of the contraction by {list(s)}")
    return _fixed_minor(phi, keep, tail_idx, fixed_first=False)


def contract_with_basis(phi: GPFunction, s: Iterable[str], head: Iterable[str]) -> GPFunction:
    """``x -> phi(B, x)`` on ``E \\ S`` for a caller-chosen ordered basis ``B`` of ``M|S``."""
    mask = _subset_mask(phi.ground, s)
    head_idx = tuple(phi.index(x) for x in head)
    if om.mask_of(head_idx) not in om.restrict_bases(phi.bases(), mask):
        raise MatroidError(f"{list(head)} is not a basis of the restriction to {list(s)}")
    return _fixed_minor(phi, ((1 << phi.n) - 1) & ~mask, head_idx, fixed_first=True)


def contract_circuits_by_perp(c: CircuitSet, s: Iterable[str], kind: str = STRONG,
                              cap: int = DEFAULT_PERP_CAP) -> CircuitSet:
    """Brute-force contraction: minimal vectors on ``E \\ S`` orthogonal to the
    restriction of every vector that avoids ``S`` and is orthogonal to ``c``."""
    h = c.hyperfield
    if not h.finite:
        raise HyperfieldError(f"brute-force contraction needs a finite hyperfield, not {h.name}")
    mask = _subset_mask(c.ground, s)
    keep = ((1 << len(c.ground)) - 1) & ~mask
    keep_idx = om.bits(keep)
    els = h.elements()
    if len(els) ** len(keep_idx) > cap:
        raise MatroidError("brute-force contraction exceeds the cap")
    members = list(c.circuits)
    n = len(c.ground)
    perp = []
    for vals in itertools.product(els, repeat=len(keep_idx)):
        if all(v == h.zero for v in vals):
            continue
        coords = [h.zero] * n
        for i, v in zip(keep_idx, vals):
            coords[i] = v
        x = HVector(h, c.ground, tuple(coords))
        if all(orthogonal(x, y, kind) for y in members):
            perp.append(_project(x, keep))
    sub = _sub_ground(c.ground, keep)
    found = {}
    for vals in itertools.product(els, repeat=len(keep_idx)):
        z = HVector(h, sub, tuple(vals))
        sup = z.support
        if not sup or z.coords[om.lowest(sup)] != h.one:
            continue
        if all(orthogonal(z, x, kind) for x in perp):
            found.setdefault(sup, []).append(z)
    minimal = [m for m in found if not any(t != m and t & m == t for t in found)]
    return CircuitSet(h, sub, frozenset(z for m in minimal for z in found[m]))


# ---------------------------------------------------------------------------
# direct sums
# ---------------------------------------------------------------------------

def _check_disjoint(g1: tuple, g2: tuple):
    common = sorted(set(g1) & set(g2))
    if common:
        raise MatroidError(f"ground sets overlap in {common}; relabel one side first")


def direct_sum(m: GPFunction, n: GPFunction) -> GPFunction:
    """Sum on the concatenated ground set; block order makes every
    interleaving sign trivial on sorted subsets."""
    if m.hyperfield != n.hyperfield:
        raise MatroidError("direct sum of matroids over different hyperfields")
    _check_disjoint(m.ground, n.ground)
    h = m.hyperfield
    shift = m.n
    values = {a | (b << shift): h.mul(u, v) for a, u in m.values.items() for b, v in n.values.items()}
    return GPFunction(h, m.ground + n.ground, m.rank + n.rank, values)


def direct_sum_circuits(c: CircuitSet, d: CircuitSet) -> CircuitSet:
    if c.hyperfield != d.hyperfield:
        raise MatroidError("direct sum of matroids over different hyperfields")
    _check_disjoint(c.ground, d.ground)
    h = c.hyperfield
    zl = (h.zero,) * len(c.ground)
    zr = (h.zero,) * len(d.ground)
    ground = c.ground + d.ground
    vecs = [HVector(h, ground, x.coords + zr) for x in c.circuits]
    vecs += [HVector(h, ground, zl + y.coords) for y in d.circuits]
    return CircuitSet.build(h, ground, vecs)


def relabel(m, mapping):
    """Rename labels through ``mapping`` (a dict or a callable); ground order
    is kept position by position."""
    f = mapping.get if isinstance(mapping, dict) else mapping
    ground = tuple(f(x) for x in m.ground)
    if isinstance(m, GPFunction):
        return GPFunction(m.hyperfield, ground, m.rank, m.values)
    if isinstance(m, CircuitSet):
        return CircuitSet.build(m.hyperfield, ground,
                                [HVector(m.hyperfield, ground, x.coords) for x in m.circuits])
    raise TypeError(f"cannot relabel {type(m).__name__}")


def prefixed(m, prefix: str):
    return relabel(m, lambda x: prefix + x)


def direct_sum_prefixed(m: GPFunction, n: GPFunction, prefixes=("L.", "R.")) -> GPFunction:
    return direct_sum(prefixed(m, prefixes[0]), prefixed(n, prefixes[1]))


# ---------------------------------------------------------------------------
# pushforward
# ---------------------------------------------------------------------------

def pushforward(f: Homomorphism, phi: GPFunction) -> GPFunction:
    if phi.hyperfield != f.source:
        raise MatroidError(f"matroid is over {phi.hyperfield.name}, map starts at {f.source.name}")
    return GPFunction(f.target, phi.ground, phi.rank, {m: f(v) for m, v in phi.values.items()})
