"""Isomorphism search and canonical keys by brute force over relabelings."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from hypermatroid import ordinary as om
from hypermatroid.hyperfield import Hyperfield
from hypermatroid.matroid import GPFunction, MatroidError, perm_parity

MAX_ISO_SIZE = 8


@dataclass(frozen=True)
class IsoWitness:
    """``phi2(f(x)) = alpha * phi1(x)`` for every tuple ``x``."""

    bijection: dict
    alpha: object

    def to_dict(self, h: Hyperfield) -> dict:
        return {"bijection": dict(sorted(self.bijection.items())), "alpha": h.format(self.alpha)}


def _check_size(n: int):
    if n > MAX_ISO_SIZE:
        raise MatroidError(f"isomorphism search is capped at {MAX_ISO_SIZE} elements, got {n}")


def _image_value(phi: GPFunction, perm, mask: int):
    """``phi`` evaluated on the image tuple of the sorted subset ``mask``."""
    return phi.value_idx(tuple(perm[i] for i in om.bits(mask)))


def find_isomorphism(m1: GPFunction, m2: GPFunction):
    """First witness in lexicographic order of bijections, or ``None``."""
    if m1.hyperfield != m2.hyperfield:
        raise MatroidError("isomorphism between matroids over different hyperfields")
    n = m1.n
    _check_size(max(n, m2.n))
    if n != m2.n or m1.rank != m2.rank or len(m1.values) != len(m2.values):
        return None
    h = m1.hyperfield
    bases2 = m2.bases()
    first, first_val = next(iter(m1.values.items()))
    for perm in itertools.permutations(range(n)):
        if any(om.relabel_mask(b, perm) not in bases2 for b in m1.values):
            continue
        alpha = h.div(_image_value(m2, perm, first), first_val)
        if all(_image_value(m2, perm, b) == h.mul(alpha, v) for b, v in m1.values.items()):
            return IsoWitness({m1.ground[i]: m2.ground[perm[i]] for i in range(n)}, alpha)
    return None


def verify_witness(m1: GPFunction, m2: GPFunction, w: IsoWitness) -> bool:
    h = m1.hyperfield
    perm = [m2.index(w.bijection[x]) for x in m1.ground]
    if sorted(perm) != list(range(m2.n)):
        return False
    for x in itertools.combinations(range(m1.n), m1.rank):
        lhs = m2.value_idx(tuple(perm[i] for i in x))
        if lhs != h.mul(w.alpha, m1.value_idx(x)):
            return False
    return True


def permuted(phi: GPFunction, perm) -> GPFunction:
    """The same matroid with element ``i`` moved to position ``perm[i]``;
    labels travel with their elements."""
    h = phi.hyperfield
    inv = [0] * phi.n
    for i, p in enumerate(perm):
        inv[p] = i
    ground = tuple(phi.ground[inv[j]] for j in range(phi.n))
    values = {}
    for m, v in phi.values.items():
        image = om.relabel_mask(m, perm)
        # phi(x) is stored on sorted x; the image tuple has to be re-sorted
        word = [perm[i] for i in om.bits(m)]
        values[image] = h.neg(v) if perm_parity(word) else v
    return GPFunction(h, ground, phi.rank, values)


def _key_string(h: Hyperfield, n: int, r: int, values: dict) -> str:
    order = sorted(om.k_subsets(n, r), key=om.colex_key)
    f = h.format
    return f"{h.name}|{n}|{r}|" + ",".join(f(values.get(m, h.zero)) for m in order)


def canonical_form(phi: GPFunction) -> str:
    """Key ``"H|n|r|v1,...,vk"``: the least serialization, over all
    relabelings, of the GPF scaled to 1 on its lexicographically least basis;
    values run over the ``r``-subsets in colex order."""
    _check_size(phi.n)
    return _canonical(phi.hyperfield, phi.n, phi.rank, tuple(phi.values.items()))


@lru_cache(maxsize=4096)
def _canonical(h: Hyperfield, n: int, r: int, items: tuple) -> str:
    best = None
    base = dict(items)
    for perm in itertools.permutations(range(n)):
        values = {}
        for m, v in base.items():
            word = [perm[i] for i in om.bits(m)]
            values[om.relabel_mask(m, perm)] = h.neg(v) if perm_parity(word) else v
        lead = min(values, key=om.bits)
        scale = h.inv(values[lead])
        values = {m: h.mul(scale, v) for m, v in values.items()}
        key = _key_string(h, n, r, values)
        if best is None or key < best:
            best = key
    return best


def parse_key(key: str) -> tuple:
    """Split a key into ``(hyperfield name, n, r, value strings)``."""
    try:
        name, n, r, body = key.split("|")
        n, r = int(n), int(r)
    except ValueError:
        raise MatroidError(f"malformed class key {key!r}") from None
    vals = body.split(",") if body else []
    if len(vals) != len(om.k_subsets(n, r)):
        raise MatroidError(f"class key {key!r} has the wrong number of values")
    return name, n, r, vals


def from_key(key: str, h: Hyperfield) -> GPFunction:
    """The canonical representative on labels ``"1".."n"``."""
    name, n, r, vals = parse_key(key)
    if name != h.name:
        raise MatroidError(f"key is over {name}, not {h.name}")
    order = sorted(om.k_subsets(n, r), key=om.colex_key)
    values = {m: h.parse(v) for m, v in zip(order, vals)}
    return GPFunction(h, tuple(str(i) for i in range(1, n + 1)), r, values)


def key_size(key: str) -> int:
    return int(key.split("|")[1])
