"""Grassmann-Plücker functions and circuit sets over a hyperfield.

Ground sets are tuples of string labels; their order is the fixed total order
used for permutation signs, duality and normalization.  Internally subsets are
bitmasks over label positions (see :mod:`hypermatroid.ordinary`).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from hypermatroid import ordinary as om
from hypermatroid.hyperfield import Hyperfield, HyperfieldError
from hypermatroid.report import Report

WEAK = "weak"
STRONG = "strong"
DEFAULT_PERP_CAP = 10**7


class MatroidError(ValueError):
    """Malformed matroid data or an operation outside its preconditions."""


def perm_parity(seq: Sequence) -> int:
    """Parity (0 or 1) of the permutation sorting ``seq`` (distinct entries)."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return inv & 1


def _check_ground(ground) -> tuple:
    ground = tuple(ground)
    if not all(isinstance(x, str) for x in ground):
        raise MatroidError("ground set labels must be strings")
    if len(set(ground)) != len(ground):
        raise MatroidError("ground set labels must be distinct")
    return ground


# ---------------------------------------------------------------------------
# Grassmann-Plücker functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GPFunction:
    """An alternating function ``E^r -> H`` stored on sorted ``r``-subsets.

    ``values`` maps subset bitmasks (over positions in ``ground``) to nonzero
    elements.  Use :meth:`from_subsets` to build one from label subsets.
    """

    hyperfield: Hyperfield
    ground: tuple
    rank: int
    values: Mapping[int, object]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        h = self.hyperfield
        ground = _check_ground(self.ground)
        object.__setattr__(self, "ground", ground)
        if not 0 <= self.rank <= len(ground):
            raise MatroidError(f"rank {self.rank} outside 0..{len(ground)}")
        clean = {}
        full = (1 << len(ground)) - 1
        for m, v in self.values.items():
            if m & ~full or om.popcount(m) != self.rank:
                raise MatroidError(f"subset {om.bits(m)} is not an {self.rank}-subset of the ground set")
            v = h.check(v)
            if v != h.zero:
                clean[m] = v
        if not clean:
            raise MatroidError("Grassmann-Plücker function is identically zero")
        object.__setattr__(self, "values", dict(sorted(clean.items())))
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(ground)})

    @classmethod
    def from_subsets(cls, h: Hyperfield, ground, rank: int, entries) -> "GPFunction":
        """``entries`` is a mapping or pair list ``subset-of-labels -> value``;
        subsets are read as sets (their order is ignored)."""
        ground = _check_ground(ground)
        index = {x: i for i, x in enumerate(ground)}
        items = entries.items() if isinstance(entries, Mapping) else entries
        values = {}
        for subset, v in items:
            subset = list(subset)
            if len(set(subset)) != len(subset):
                raise MatroidError(f"subset {subset} has repeated labels")
            try:
                m = om.mask_of(index[x] for x in subset)
            except KeyError as exc:
                raise MatroidError(f"unknown label {exc.args[0]!r}") from None
            if m in values:
                raise MatroidError(f"subset {sorted(subset)} given twice")
            values[m] = v
        return cls(h, ground, rank, values)

    @property
    def n(self) -> int:
        return len(self.ground)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise MatroidError(f"unknown label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        return om.mask_of(self.index(x) for x in labels)

    def labels(self, mask: int) -> tuple:
        return tuple(self.ground[i] for i in om.bits(mask))

    def labels_of(self, idx: Sequence[int]) -> tuple:
        return tuple(self.ground[i] for i in idx)

    def at(self, mask: int):
        return self.values.get(mask, self.hyperfield.zero)

    def value_idx(self, idx: Sequence[int]):
        """Value on a tuple of positions, with alternation applied."""
        m = om.mask_of(idx)
        if om.popcount(m) != len(idx):
            return self.hyperfield.zero
        v = self.values.get(m)
        if v is None:
            return self.hyperfield.zero
        return self.hyperfield.neg(v) if perm_parity(idx) else v

    def bases(self) -> frozenset:
        return frozenset(self.values)

    def scaled(self, a) -> "GPFunction":
        h = self.hyperfield
        a = h.check(a)
        if a == h.zero:
            raise MatroidError("scaling by zero")
        return GPFunction(h, self.ground, self.rank, {m: h.mul(a, v) for m, v in self.values.items()})

    def normalized(self) -> "GPFunction":
        """Representative of the class with value 1 on its least basis."""
        first = next(iter(self.values))
        return self.scaled(self.hyperfield.inv(self.values[first]))

    def __eq__(self, other) -> bool:
        return (isinstance(other, GPFunction) and self.hyperfield == other.hyperfield
                and self.ground == other.ground and self.rank == other.rank
                and self.values == other.values)

    def __hash__(self) -> int:
        return hash((self.hyperfield.name, self.ground, self.rank, tuple(self.values.items())))

    def __repr__(self) -> str:
        f = self.hyperfield.format
        body = ", ".join(f"{''.join(self.labels(m)) or '()'}:{f(v)}" for m, v in self.values.items())
        return f"GPFunction({self.hyperfield.name}, r={self.rank}, E={list(self.ground)}, {{{body}}})"


def gpf_value(phi: GPFunction, t: Sequence[str]):
    if len(t) != phi.rank:
        raise MatroidError(f"expected a tuple of length {phi.rank}, got {len(t)}")
    return phi.value_idx([phi.index(x) for x in t])


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

def _terms_desc(h, terms) -> str:
    return "[" + ", ".join(h.format(t) for t in terms) + "] sum=" + h.describe(h.hypersum(terms))


def check_weak_gpf(phi: GPFunction, exhaustive: bool = False, limit: int = 100) -> Report:
    """Three-term relation on 4-subsets with disjoint ``(r-2)``-subsets, or on
    every tuple when ``exhaustive``."""
    h = phi.hyperfield
    rep = Report("weak-gpf", limit=limit)
    r, n = phi.rank, phi.n
    if r < 2:
        return rep.finish()
    val = phi.value_idx
    if exhaustive:
        quads = itertools.product(range(n), repeat=4)
        rests = lambda q: itertools.product(range(n), repeat=r - 2)  # noqa: E731
    else:
        quads = itertools.combinations(range(n), 4)
        rests = lambda q: itertools.combinations([i for i in range(n) if i not in q], r - 2)  # noqa: E731
    for q in quads:
        a, b, c, d = q
        for x in rests(q):
            rep.tick()
            terms = [
                h.mul(val((a, b) + x), val((c, d) + x)),
                h.neg(h.mul(val((a, c) + x), val((b, d) + x))),
                h.mul(val((b, c) + x), val((a, d) + x)),
            ]
            if not h.contains_zero(terms):
                rep.fail("WG", (phi.labels_of(q), phi.labels_of(x)), _terms_desc(h, terms))
    return rep.finish()


def check_strong_gpf(phi: GPFunction, exhaustive: bool = False, limit: int = 100) -> Report:
    """Multi-term relation over increasing ``(r+1)``- and ``(r-1)``-tuples, or
    over every pair of tuples when ``exhaustive``."""
    h = phi.hyperfield
    rep = Report("strong-gpf", limit=limit)
    r, n = phi.rank, phi.n
    if r < 1:
        return rep.finish()
    val = phi.value_idx
    if exhaustive:
        xs = list(itertools.product(range(n), repeat=r + 1))
        ys = list(itertools.product(range(n), repeat=r - 1))
    else:
        xs = list(itertools.combinations(range(n), r + 1))
        ys = list(itertools.combinations(range(n), r - 1))
    for x in xs:
        for y in ys:
            rep.tick()
            terms = []
            for k in range(r + 1):
                t = h.mul(val(x[:k] + x[k + 1:]), val((x[k],) + y))
                # (-1)^k with k counted from 1
                terms.append(t if k % 2 else h.neg(t))
            if not h.contains_zero(terms):
                rep.fail("SG", (phi.labels_of(x), phi.labels_of(y)), _terms_desc(h, terms))
    return rep.finish()


def check_gpf(phi: GPFunction, kind: str = STRONG, **kw) -> Report:
    if kind == WEAK:
        return check_weak_gpf(phi, **kw)
    if kind == STRONG:
        return check_strong_gpf(phi, **kw)
    raise MatroidError(f"unknown type {kind!r}")


# ---------------------------------------------------------------------------
# underlying matroid
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnderlyingMatroid:
    ground: tuple
    rank: int
    bases: frozenset

    @property
    def circuits(self) -> frozenset:
        return om.circuits_from_bases(len(self.ground), self.bases)

    def labelled_bases(self) -> list:
        return sorted(tuple(self.ground[i] for i in om.bits(b)) for b in self.bases)

    def labelled_circuits(self) -> list:
        return sorted(tuple(self.ground[i] for i in om.bits(c)) for c in self.circuits)


def underlying_bases(phi: GPFunction) -> UnderlyingMatroid:
    return UnderlyingMatroid(phi.ground, phi.rank, phi.bases())


def verify_basis_exchange(bases: Iterable) -> bool:
    """Exchange axiom for a family of bases given as masks or label sets."""
    bases = list(bases)
    if not bases:
        raise MatroidError("empty basis family")
    if all(isinstance(b, int) for b in bases):
        return om.is_basis_family(bases)
    labels = sorted({x for b in bases for x in b})
    index = {x: i for i, x in enumerate(labels)}
    return om.is_basis_family(om.mask_of(index[x] for x in b) for b in bases)


# ---------------------------------------------------------------------------
# vectors and circuit sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HVector:
    """A function ``E -> H`` stored densely in ground-set order."""

    hyperfield: Hyperfield = field(compare=False, hash=False)
    ground: tuple
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != len(self.ground):
            raise MatroidError("vector length does not match the ground set")

    @classmethod
    def from_map(cls, h: Hyperfield, ground, coords: Mapping[str, object]) -> "HVector":
        ground = tuple(ground)
        unknown = set(coords) - set(ground)
        if unknown:
            raise MatroidError(f"unknown labels {sorted(unknown)}")
        return cls(h, ground, tuple(h.check(coords.get(x, h.zero)) for x in ground))

    @property
    def support(self) -> int:
        z = self.hyperfield.zero
        return om.mask_of(i for i, v in enumerate(self.coords) if v != z)

    def __getitem__(self, i: int):
        return self.coords[i]

    def scaled(self, a) -> "HVector":
        h = self.hyperfield
        return HVector(h, self.ground, tuple(h.mul(a, v) for v in self.coords))

    def normalized(self) -> "HVector":
        s = self.support
        if not s:
            raise MatroidError("the zero vector has no normalization")
        return self.scaled(self.hyperfield.inv(self.coords[om.lowest(s)]))

    def as_map(self) -> dict:
        z = self.hyperfield.zero
        return {x: v for x, v in zip(self.ground, self.coords) if v != z}

    def sort_key(self):
        return (om.bits(self.support), tuple(self.hyperfield.sort_key(v) for v in self.coords))

    def __repr__(self) -> str:
        f = self.hyperfield.format
        return "(" + ", ".join(f(v) for v in self.coords) + ")"


@dataclass(frozen=True)
class CircuitSet:
    """Normalized representatives, one per ``H^×``-orbit."""

    hyperfield: Hyperfield = field(compare=False, hash=False)
    ground: tuple
    circuits: frozenset

    @classmethod
    def build(cls, h: Hyperfield, ground, vectors: Iterable[HVector]) -> "CircuitSet":
        ground = _check_ground(ground)
        reps = set()
        for v in vectors:
            if v.ground != ground:
                raise MatroidError("circuit over a different ground set")
            reps.add(v.normalized())
        return cls(h, ground, frozenset(reps))

    def sorted(self) -> list:
        return sorted(self.circuits, key=HVector.sort_key)

    def supports(self) -> frozenset:
        return frozenset(x.support for x in self.circuits)

    def labelled_supports(self) -> list:
        return sorted(tuple(self.ground[i] for i in om.bits(s)) for s in self.supports())

    def __len__(self) -> int:
        return len(self.circuits)

    def __iter__(self):
        return iter(self.sorted())

    def __repr__(self) -> str:
        return f"CircuitSet({self.hyperfield.name}, E={list(self.ground)}, {self.sorted()})"


def circuits_from_gpf(phi: GPFunction) -> CircuitSet:
    h = phi.hyperfield
    n, r = phi.n, phi.rank
    vecs = []
    for bmask, bval in phi.values.items():
        basis = om.bits(bmask)
        inv_b = h.inv(bval)
        for e in range(n):
            if bmask >> e & 1:
                continue
            coords = [h.zero] * n
            coords[e] = h.one
            for i in range(r):
                rest = basis[:i] + basis[i + 1:]
                v = h.mul(phi.value_idx((e,) + rest), inv_b)
                # (-1)^i with i counted from 1
                coords[basis[i]] = h.neg(v) if i % 2 == 0 else v
            vecs.append(HVector(h, phi.ground, tuple(coords)))
    return CircuitSet.build(h, phi.ground, vecs)


def circuit_bases(c: CircuitSet) -> frozenset:
    return om.bases_from_circuits(len(c.ground), c.supports())


def check_circuit_axioms(c: CircuitSet, kind: str = STRONG, limit: int = 100) -> Report:
    h = c.hyperfield
    rep = Report(f"{kind}-circuits", limit=limit)
    # carrier check first: sorting needs valid elements
    for x in sorted(c.circuits, key=lambda v: tuple(map(str, v.coords))):
        rep.tick()
        if len(x.coords) != len(c.ground) or any(not h.is_element(v) for v in x.coords):
            rep.fail("malformed", tuple(map(str, x.coords)), "coordinate outside the carrier")
    if not rep.passed:
        return rep.finish()
    reps = c.sorted()
    labels = lambda m: tuple(c.ground[i] for i in om.bits(m))  # noqa: E731
    for x in reps:
        if not x.support:
            rep.fail("C1", (repr(x),), "zero vector")
    for x, y in itertools.permutations(reps, 2):
        rep.tick()
        sx, sy = x.support, y.support
        if sx & sy == sx:
            rep.fail("C3", (repr(x), repr(y)), "support contained in another circuit with a different orbit")
    if not rep.passed:
        return rep.finish()
    if kind == WEAK:
        _check_wc(c, reps, rep)
    elif kind == STRONG:
        _check_sc(c, reps, rep, labels)
    else:
        raise MatroidError(f"unknown type {kind!r}")
    return rep.finish()


def _check_wc(c, reps, rep):
    h = c.hyperfield
    by_support = {}
    for x in reps:
        by_support.setdefault(x.support, []).append(x)
    for sa, sb in om.modular_pairs(by_support):
        for x in by_support[sa]:
            for y in by_support[sb]:
                for e in om.bits(sa & sb):
                    rep.tick()
                    targets = [
                        h.hypersum([h.mul(x[e], y[f]), h.neg(h.mul(y[e], x[f]))])
                        for f in range(len(c.ground))
                    ]
                    found = False
                    for z in reps:
                        if z[e] != h.zero:
                            continue
                        if h.find_scalar(list(zip(z.coords, targets))) is not None:
                            found = True
                            break
                    if not found:
                        rep.fail("WC", (repr(x), repr(y), c.ground[e]),
                                 "no circuit eliminates the common element")


def _check_sc(c, reps, rep, labels):
    h = c.hyperfield
    n = len(c.ground)
    sups = c.supports()
    rep.tick()
    if not om.is_circuit_family(sups):
        rep.fail("SC1", (), "supports are not the circuits of a matroid")
        return
    by_support = {x.support: x for x in reps}
    if len(by_support) != len(reps):
        rep.fail("C3", (), "two orbits share a support")
        return
    for b in sorted(om.bases_from_circuits(n, sups)):
        fund = {}
        for e in range(n):
            if b >> e & 1:
                continue
            y = by_support[om.fundamental_circuit(b, e, sups)]
            fund[e] = y.scaled(h.inv(y[e]))
        for x in reps:
            rep.tick()
            for f in range(n):
                terms = [h.mul(x[e], fund[e][f]) for e in fund]
                if not h.member(h.hypersum(terms), x[f]):
                    rep.fail("SC2", (labels(b), repr(x), c.ground[f]),
                             f"{h.format(x[f])} not in {h.describe(h.hypersum(terms))}")
                    break


# ---------------------------------------------------------------------------
# duality and orthogonality
# ---------------------------------------------------------------------------

def dual_gpf(phi: GPFunction) -> GPFunction:
    h = phi.hyperfield
    n = phi.n
    full = (1 << n) - 1
    out = {}
    for m, v in phi.values.items():
        comp = full & ~m
        word = om.bits(comp) + om.bits(m)
        out[comp] = h.neg(v) if perm_parity(word) else v
    return GPFunction(h, phi.ground, n - phi.rank, out)


def _same_shape(x: HVector, y: HVector):
    if x.ground != y.ground:
        raise MatroidError("vectors live on different ground sets")


def dot(x: HVector, y: HVector):
    _same_shape(x, y)
    h = x.hyperfield
    return h.hypersum([h.mul(a, b) for a, b in zip(x.coords, y.coords)])


def strong_orthogonal(x: HVector, y: HVector) -> bool:
    _same_shape(x, y)
    h = x.hyperfield
    return h.contains_zero([h.mul(a, b) for a, b in zip(x.coords, y.coords)])


def weak_orthogonal(x: HVector, y: HVector) -> bool:
    return om.popcount(x.support & y.support) > 3 or strong_orthogonal(x, y)


def orthogonal(x: HVector, y: HVector, kind: str = STRONG) -> bool:
    return strong_orthogonal(x, y) if kind == STRONG else weak_orthogonal(x, y)


def perp_minimal(c: CircuitSet, kind: str = STRONG, cap: int = DEFAULT_PERP_CAP) -> CircuitSet:
    """Minimal-support nonzero vectors orthogonal to every member of ``c``,
    found by enumerating normalized vectors of ``H^E``."""
    h = c.hyperfield
    if not h.finite:
        raise HyperfieldError(f"perp_minimal needs a finite hyperfield, not {h.name}")
    n = len(c.ground)
    units = h.units()
    size = len(h.elements()) ** n
    if size > cap:
        raise MatroidError(f"{size} candidate vectors exceed the cap {cap}")
    members = c.sorted()
    found = {}
    for support in range(1, 1 << n):
        if any(s & support == s for s in found):
            continue
        pos = om.bits(support)
        hits = []
        for rest in itertools.product(units, repeat=len(pos) - 1):
            coords = [h.zero] * n
            coords[pos[0]] = h.one
            for i, v in zip(pos[1:], rest):
                coords[i] = v
            v = HVector(h, c.ground, tuple(coords))
            if all(orthogonal(v, x, kind) for x in members):
                hits.append(v)
        if hits:
            found[support] = hits
    # a proper subset has a smaller mask, so every kept support is minimal
    return CircuitSet(h, c.ground, frozenset(v for hits in found.values() for v in hits))


def cocircuits(phi: GPFunction) -> CircuitSet:
    return circuits_from_gpf(dual_gpf(phi))


# ---------------------------------------------------------------------------
# equality
# ---------------------------------------------------------------------------

def proportionality(phi1: GPFunction, phi2: GPFunction):
    """The scalar ``a`` with ``phi2 = a * phi1``, or ``None``."""
    h = phi1.hyperfield
    if phi1.values.keys() != phi2.values.keys():
        return None
    first = next(iter(phi1.values))
    a = h.div(phi2.values[first], phi1.values[first])
    if all(h.mul(a, v) == phi2.values[m] for m, v in phi1.values.items()):
        return a
    return None


def matroid_equal(phi1: GPFunction, phi2: GPFunction) -> bool:
    if phi1.hyperfield != phi2.hyperfield:
        raise MatroidError("matroids over different hyperfields")
    if phi1.ground != phi2.ground:
        raise MatroidError("matroids on different ground sets")
    if phi1.rank != phi2.rank:
        raise MatroidError("matroids of different rank")
    return proportionality(phi1, phi2) is not None
