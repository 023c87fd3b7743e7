"""Hyperfields with exact multi-valued addition.

Four built-in hyperfields are provided (Krasner, signs, tropical, phase) plus
finite hyperfields given by explicit tables.  Elements are plain hashable
Python values:

* Krasner: ``0``/``1``; signs: ``-1``/``0``/``1``
* tropical: :class:`fractions.Fraction` or :data:`NEG_INF` (the additive zero)
* phase: :data:`PHASE_ZERO` or a ``Fraction`` angle in turns, in ``[0, 1)``
* table: the symbols of the table

Hypersums are returned as :class:`HyperSubset` values with exact membership.
"""
from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Sequence

from hypermatroid.report import Report

Element = Hashable

NEG_INF = float("-inf")
"""Additive zero of the tropical hyperfield (compares below every rational)."""

HALF = Fraction(1, 2)


class HyperfieldError(ValueError):
    """Raised for carrier violations and malformed hyperfields."""


class _PhaseZero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "PHASE_ZERO"

    def __reduce__(self):
        return (_PhaseZero, ())


PHASE_ZERO = _PhaseZero()


# ---------------------------------------------------------------------------
# subsets
# ---------------------------------------------------------------------------

class HyperSubset:
    """Base class of the decidable subsets produced by hyperaddition."""


@dataclass(frozen=True)
class FiniteSet(HyperSubset):
    items: frozenset


@dataclass(frozen=True)
class TropicalDownSet(HyperSubset):
    """The down-set ``[-inf, bound]`` of the tropical hyperfield."""

    bound: Fraction


@dataclass(frozen=True)
class PhaseRegion(HyperSubset):
    """Finite union of zero, points and open arcs of the phase hyperfield.

    Arcs are ``(start, length)`` pairs in turns, read counterclockwise, with
    ``0 < length < 1``.  Instances built by :func:`phase_region` are canonical,
    so equality of regions is equality of sets.
    """

    zero: bool = False
    points: tuple = ()
    arcs: tuple = ()


def _turn(x) -> Fraction:
    return Fraction(x) % 1


def _in_arc(x: Fraction, start: Fraction, length: Fraction) -> bool:
    d = (x - start) % 1
    return 0 < d < length


def _raw_member(x: Fraction, points, arcs) -> bool:
    if x in points:
        return True
    return any(_in_arc(x, s, length) for s, length in arcs)


def phase_region(zero: bool, points: Iterable = (), arcs: Iterable = ()) -> PhaseRegion:
    """Canonical :class:`PhaseRegion` for an arbitrary union of components.

    Breakpoints whose status matches both neighbouring gaps are dropped, the
    remaining ones cut the circle into maximal arcs.
    """
    points = frozenset(_turn(p) for p in points)
    arcs = [(_turn(s), Fraction(length)) for s, length in arcs if length > 0]
    for s, length in arcs:
        if length > 1:
            raise HyperfieldError(f"arc length {length} exceeds a full turn")
    breaks = set(points)
    for s, length in arcs:
        breaks.add(s)
        breaks.add((s + length) % 1)
    if not breaks:
        return PhaseRegion(bool(zero))
    bps = sorted(breaks)
    k = len(bps)

    def gap_mid(i):
        lo = bps[i]
        hi = bps[i + 1] if i + 1 < k else bps[0] + 1
        return ((lo + hi) / 2) % 1

    bp_in = [_raw_member(b, points, arcs) for b in bps]
    gap_in = [_raw_member(gap_mid(i), points, arcs) for i in range(k)]

    # drop breakpoints that do not change membership
    keep = [i for i in range(k) if not (bp_in[i] == gap_in[i - 1] == gap_in[i])]
    if not keep:
        if gap_in[0]:
            return PhaseRegion(bool(zero), (Fraction(0), HALF), ((Fraction(0), HALF), (HALF, HALF)))
        return PhaseRegion(bool(zero))
    kept = [bps[i] for i in keep]
    kept_in = [bp_in[i] for i in keep]
    # a gap after kept breakpoint j carries the status of the original gap after it
    kept_gap = [gap_in[i] for i in keep]
    out_points = []
    out_arcs = []
    m = len(kept)
    for j in range(m):
        if kept_in[j]:
            out_points.append(kept[j])
        if kept_gap[j]:
            nxt = kept[j + 1] if j + 1 < m else kept[0] + 1
            out_arcs.append((kept[j], nxt - kept[j]))
    # open arcs that meet at an included point are kept separate; a single
    # arc of full length is split so every stored arc is shorter than a turn
    if len(out_arcs) == 1 and out_arcs[0][1] == 1:
        s = out_arcs[0][0]
        out_arcs = [(s, HALF), ((s + HALF) % 1, HALF)]
        out_points.append((s + HALF) % 1)
    return PhaseRegion(bool(zero), tuple(sorted(set(out_points))), tuple(sorted(out_arcs)))


# ---------------------------------------------------------------------------
# hyperfields
# ---------------------------------------------------------------------------

class Hyperfield:
    """Common interface; subclasses fix the carrier and the hyperaddition."""

    name: str = ""
    zero: Element
    one: Element
    finite: bool = False

    # carrier ------------------------------------------------------------
    def elements(self) -> tuple:
        raise HyperfieldError(f"{self.name} is not finite")

    def units(self) -> tuple:
        return tuple(a for a in self.elements() if a != self.zero)

    def is_element(self, a) -> bool:
        raise NotImplementedError

    def check(self, a) -> Element:
        if not self.is_element(a):
            raise HyperfieldError(f"{a!r} is not an element of {self.name}")
        return a

    # multiplicative structure -------------------------------------------
    def mul(self, a, b) -> Element:
        raise NotImplementedError

    def inv(self, a) -> Element:
        raise NotImplementedError

    def div(self, a, b) -> Element:
        return self.mul(a, self.inv(b))

    def neg(self, a) -> Element:
        raise NotImplementedError

    def sign(self, odd: bool) -> Element:
        """``1`` or ``-1`` of the hyperfield, for permutation signs."""
        return self.neg(self.one) if odd else self.one

    def prod(self, items: Iterable) -> Element:
        out = self.one
        for a in items:
            out = self.mul(out, a)
        return out

    # additive structure -------------------------------------------------
    def hyperadd(self, a, b) -> HyperSubset:
        return self.add_point(self.singleton(self.check(a)), self.check(b))

    def singleton(self, a) -> HyperSubset:
        return FiniteSet(frozenset([a]))

    def add_point(self, s: HyperSubset, b) -> HyperSubset:
        """``s ⊞ b`` for a subset ``s`` and an element ``b``."""
        raise NotImplementedError

    def add_sets(self, s: HyperSubset, t: HyperSubset) -> HyperSubset:
        raise NotImplementedError

    def hypersum(self, terms: Sequence) -> HyperSubset:
        acc = self.singleton(self.zero)
        for t in terms:
            acc = self.add_point(acc, self.check(t))
        return acc

    def contains_zero(self, terms: Sequence) -> bool:
        return self.member(self.hypersum(terms), self.zero)

    def member(self, s: HyperSubset, x) -> bool:
        raise NotImplementedError

    # scalars --------------------------------------------------------------
    def scalar_candidates(self, constraints: Sequence[tuple]) -> Iterable:
        """Finite set of units that contains a solution of the constraints
        ``a ⊙ z ∈ S`` whenever one exists."""
        return self.units()

    def find_scalar(self, constraints: Sequence[tuple]):
        """Some unit ``a`` with ``a ⊙ z ∈ S`` for every ``(z, S)``, or ``None``."""
        live = []
        for z, s in constraints:
            if z == self.zero:
                if not self.member(s, self.zero):
                    return None
            else:
                live.append((z, s))
        for a in self.scalar_candidates(live):
            if all(self.member(s, self.mul(a, z)) for z, s in live):
                return a
        return None

    # text ---------------------------------------------------------------
    def format(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Element:
        raise NotImplementedError

    def sort_key(self, a):
        raise NotImplementedError

    def describe(self, s: HyperSubset) -> str:
        if isinstance(s, FiniteSet):
            return "{" + ",".join(self.format(a) for a in sorted(s.items, key=self.sort_key)) + "}"
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<Hyperfield {self.name}>"


class TableHyperfield(Hyperfield):
    """A finite hyperfield given by tables.

    ``add`` maps unordered pairs (``frozenset`` of one or two symbols) to
    nonempty sets of symbols; ``mul`` maps ordered pairs to symbols.  The
    constructor checks only that the tables are total; run
    :func:`verify_hyperfield_axioms` before trusting the result.
    """

    finite = True

    def __init__(self, elements, zero, one, neg, mul, add, name=None):
        self._elements = tuple(elements)
        if len(set(self._elements)) != len(self._elements):
            raise HyperfieldError("duplicate element symbols")
        self._index = {a: i for i, a in enumerate(self._elements)}
        if zero not in self._index or one not in self._index:
            raise HyperfieldError("zero and one must be carrier members")
        if zero == one:
            raise HyperfieldError("zero and one must differ")
        self.zero = zero
        self.one = one
        self._neg = dict(neg)
        self._mul = {}
        self._add = {}
        for a in self._elements:
            if self._neg.get(a) not in self._index:
                raise HyperfieldError(f"negation undefined or outside carrier at {a!r}")
        for a, b in itertools.product(self._elements, repeat=2):
            c = mul.get((a, b), mul.get((b, a)))
            if c not in self._index:
                raise HyperfieldError(f"multiplication undefined at ({a!r}, {b!r})")
            self._mul[(a, b)] = c
            s = add.get(frozenset((a, b)))
            if not s:
                raise HyperfieldError(f"addition undefined or empty at ({a!r}, {b!r})")
            s = frozenset(s)
            if not s <= self._index.keys():
                raise HyperfieldError(f"addition at ({a!r}, {b!r}) leaves the carrier")
            self._add[frozenset((a, b))] = s
        self._inv = {}
        for a in self._elements:
            for b in self._elements:
                if self._mul[(a, b)] == one:
                    self._inv[a] = b
                    break
        self.given_name = name
        self._name = name
        self._digest = None

    @property
    def digest(self) -> str:
        if self._digest is None:
            self._digest = hashlib.sha1(json.dumps(self.table_dict(), sort_keys=True).encode()).hexdigest()
        return self._digest

    @property
    def name(self) -> str:
        if self._name is None:
            self._name = "table-" + self.digest[:12]
        return self._name

    def table_dict(self) -> dict:
        """JSON-ready description (symbols rendered with :meth:`format`)."""
        f = self.format
        elems = [f(a) for a in self._elements]
        pairs = [(a, b) for a, b in itertools.combinations_with_replacement(self._elements, 2)]

        def pair_key(a, b):
            return ",".join(sorted((f(a), f(b))))

        return {
            "kind": "table",
            "elements": elems,
            "zero": f(self.zero),
            "one": f(self.one),
            "neg": {f(a): f(self._neg[a]) for a in self._elements},
            "mul": {pair_key(a, b): f(self._mul[(a, b)]) for a, b in pairs},
            "add": {pair_key(a, b): sorted(f(c) for c in self._add[frozenset((a, b))])
                    for a, b in pairs},
        }

    def __eq__(self, other) -> bool:
        # built-ins use int symbols, so a look-alike table is not the same field
        return type(self) is type(other) and self.digest == other.digest

    def __hash__(self) -> int:
        return hash(self.digest)

    def elements(self) -> tuple:
        return self._elements

    def is_element(self, a) -> bool:
        try:
            return a in self._index
        except TypeError:
            return False

    def mul(self, a, b):
        return self._mul[(a, b)]

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError(f"{self.name}: inverse of zero")
        try:
            return self._inv[a]
        except KeyError:
            raise HyperfieldError(f"{a!r} has no multiplicative inverse") from None

    def neg(self, a):
        return self._neg[a]

    def add_table(self, a, b) -> frozenset:
        return self._add[frozenset((a, b))]

    def add_point(self, s, b):
        out = set()
        for a in s.items:
            out |= self._add[frozenset((a, b))]
        return FiniteSet(frozenset(out))

    def add_sets(self, s, t):
        out = set()
        for a in s.items:
            for b in t.items:
                out |= self._add[frozenset((a, b))]
        return FiniteSet(frozenset(out))

    def member(self, s, x) -> bool:
        return x in s.items

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        for a in self._elements:
            if self.format(a) == text:
                return a
        raise HyperfieldError(f"{text!r} is not an element of {self.name}")

    def sort_key(self, a):
        return self._index[a]


def _pair_table(elements, rule: Callable) -> dict:
    return {frozenset((a, b)): frozenset(rule(a, b))
            for a, b in itertools.combinations_with_replacement(elements, 2)}


class Krasner(TableHyperfield):
    def __init__(self):
        els = (0, 1)
        super().__init__(
            els, 0, 1,
            neg={0: 0, 1: 1},
            mul={(a, b): a * b for a in els for b in els},
            add=_pair_table(els, lambda a, b: {0, 1} if a == b == 1 else {a | b}),
            name="krasner",
        )

    def contains_zero(self, terms) -> bool:
        return sum(1 for t in terms if self.check(t) == 1) != 1



class Signs(TableHyperfield):
    def __init__(self):
        els = (-1, 0, 1)

        def add(a, b):
            if a == -b and a != 0:
                return {-1, 0, 1}
            return {a if a != 0 else b}

        super().__init__(
            els, 0, 1,
            neg={a: -a for a in els},
            mul={(a, b): a * b for a in els for b in els},
            add=_pair_table(els, add),
            name="signs",
        )

    def contains_zero(self, terms) -> bool:
        seen = {self.check(t) for t in terms}
        return (1 in seen and -1 in seen) or not (seen - {0})



class Tropical(Hyperfield):
    """``ℚ ∪ {-inf}`` with ``⊙ = +`` and max-based hyperaddition."""

    name = "tropical"
    zero = NEG_INF
    one = Fraction(0)

    def is_element(self, a) -> bool:
        return a == NEG_INF or isinstance(a, (Fraction, int)) and not isinstance(a, bool)

    def check(self, a):
        if not self.is_element(a):
            raise HyperfieldError(f"{a!r} is not an element of tropical")
        return a if a == NEG_INF else Fraction(a)

    def mul(self, a, b):
        if a == NEG_INF or b == NEG_INF:
            return NEG_INF
        return a + b

    def inv(self, a):
        if a == NEG_INF:
            raise ZeroDivisionError("tropical: inverse of zero")
        return -a

    def neg(self, a):
        return a

    def singleton(self, a):
        return FiniteSet(frozenset([a]))

    def _down(self, bound) -> HyperSubset:
        if bound == NEG_INF:
            return FiniteSet(frozenset([NEG_INF]))
        return TropicalDownSet(bound)

    def add_point(self, s, b):
        if isinstance(s, TropicalDownSet):
            return FiniteSet(frozenset([b])) if b > s.bound else s
        if len(s.items) != 1:
            return self.add_sets(s, self.singleton(b))
        (a,) = s.items
        if a == b:
            return self._down(a)
        return FiniteSet(frozenset([max(a, b)]))

    def add_sets(self, s, t):
        # a union of points and one down-set, folded into the closed forms
        def parts(x):
            if isinstance(x, TropicalDownSet):
                return [x]
            return [self.singleton(a) for a in x.items]

        pieces = []
        for p in parts(s):
            for q in parts(t):
                if isinstance(q, TropicalDownSet):
                    p, q = q, p
                if isinstance(q, TropicalDownSet):
                    pieces.append(TropicalDownSet(max(p.bound, q.bound)))
                else:
                    (b,) = q.items
                    pieces.append(self.add_point(p, b))
        bound = max((p.bound for p in pieces if isinstance(p, TropicalDownSet)), default=None)
        pts = set()
        for p in pieces:
            if isinstance(p, FiniteSet):
                pts |= p.items
        if bound is None:
            return FiniteSet(frozenset(pts))
        extra = {a for a in pts if a > bound}
        if extra:
            raise HyperfieldError("tropical subset is not a point or a down-set")
        return TropicalDownSet(bound)

    def contains_zero(self, terms) -> bool:
        vals = [self.check(t) for t in terms]
        finite = [v for v in vals if v != NEG_INF]
        if not finite:
            return True
        top = max(finite)
        return finite.count(top) >= 2

    def member(self, s, x) -> bool:
        if isinstance(s, TropicalDownSet):
            return x <= s.bound
        return x in s.items

    def scalar_candidates(self, constraints):
        cands = set()
        for z, s in constraints:
            if isinstance(s, TropicalDownSet):
                cands.add(s.bound - z)
            else:
                cands.update(v - z for v in s.items if v != NEG_INF)
        if not constraints:
            cands.add(self.one)
        return sorted(cands)

    def format(self, a) -> str:
        return "-inf" if a == NEG_INF else str(Fraction(a))

    def parse(self, text: str):
        if text == "-inf":
            return NEG_INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise HyperfieldError(f"{text!r} is not an element of tropical") from None

    def sort_key(self, a):
        return (0, 0) if a == NEG_INF else (1, a)

    def describe(self, s):
        if isinstance(s, TropicalDownSet):
            return f"[-inf,{self.format(s.bound)}]"
        return super().describe(s)


class Phase(Hyperfield):
    """Unit circle plus zero; angles are exact rationals measured in turns."""

    name = "phase"
    zero = PHASE_ZERO
    one = Fraction(0)

    def is_element(self, a) -> bool:
        if a is PHASE_ZERO:
            return True
        return isinstance(a, (Fraction, int)) and not isinstance(a, bool) and 0 <= a < 1

    def check(self, a):
        if not self.is_element(a):
            raise HyperfieldError(f"{a!r} is not an element of phase")
        return a if a is PHASE_ZERO else Fraction(a)

    def mul(self, a, b):
        if a is PHASE_ZERO or b is PHASE_ZERO:
            return PHASE_ZERO
        return (a + b) % 1

    def inv(self, a):
        if a is PHASE_ZERO:
            raise ZeroDivisionError("phase: inverse of zero")
        return (-a) % 1

    def neg(self, a):
        if a is PHASE_ZERO:
            return a
        return (a + HALF) % 1

    def singleton(self, a):
        if a is PHASE_ZERO:
            return PhaseRegion(True)
        return PhaseRegion(False, (a,))

    @staticmethod
    def _pair(q, p, points, arcs, zero_flag):
        """Raw components of ``q ⊞ p`` for nonzero angles."""
        if q == p:
            points.append(p)
        elif (q - p) % 1 == HALF:
            points.extend((p, q))
            zero_flag[0] = True
        else:
            d = (q - p) % 1
            if d < HALF:
                arcs.append((p, d))
            else:
                arcs.append((q, 1 - d))

    def add_point(self, s, p):
        if p is PHASE_ZERO:
            return s
        points: list = []
        arcs: list = []
        zero_flag = [False]
        if s.zero:
            points.append(p)
        for q in s.points:
            self._pair(q, p, points, arcs, zero_flag)
        for start, length in s.arcs:
            # the arc relative to p, split into pieces inside [0, 1]
            u = (start - p) % 1
            pieces = [(u, min(u + length, Fraction(1)))]
            wraps = u + length > 1
            if wraps:
                pieces.append((Fraction(0), u + length - 1))
            sup_lo = [min(hi, HALF) for lo, hi in pieces if max(lo, 0) < min(hi, HALF)]
            if sup_lo:
                arcs.append((p, max(sup_lo)))
            inf_hi = [max(lo, HALF) for lo, hi in pieces if max(lo, HALF) < min(hi, 1)]
            if inf_hi:
                lo = min(inf_hi)
                arcs.append(((p + lo) % 1, 1 - lo))
            if any(lo < HALF < hi for lo, hi in pieces):
                points.extend((p, (p + HALF) % 1))
                zero_flag[0] = True
            if wraps:
                points.append(p)
        return phase_region(zero_flag[0], points, arcs)

    def add_sets(self, s, t):
        """Union over the components of ``t``; an open arc shorter than half a
        turn is the sum of its endpoints, so arcs are folded in point by point."""
        results = []
        if t.zero:
            results.append(s)
        for q in t.points:
            results.append(self.add_point(s, q))
        for start, length in t.arcs:
            pieces = []
            cut = start
            remaining = length
            while remaining > 0:
                step = min(remaining, Fraction(1, 4))
                pieces.append((cut, step))
                cut = (cut + step) % 1
                remaining -= step
                if remaining > 0:
                    results.append(self.add_point(s, cut))
            for a, step in pieces:
                results.append(self.add_point(self.add_point(s, a), (a + step) % 1))
        zero = any(r.zero for r in results)
        points = [p for r in results for p in r.points]
        arcs = [a for r in results for a in r.arcs]
        return phase_region(zero, points, arcs)

    def member(self, s, x) -> bool:
        if x is PHASE_ZERO:
            return s.zero
        return _raw_member(x, s.points, s.arcs)

    def scalar_candidates(self, constraints):
        cands = set()
        for z, s in constraints:
            for b in s.points:
                cands.add((b - z) % 1)
            for start, length in s.arcs:
                cands.add((start - z) % 1)
                cands.add((start + length - z) % 1)
        if not cands:
            return [self.one]
        ordered = sorted(cands)
        mids = []
        for i, c in enumerate(ordered):
            nxt = ordered[i + 1] if i + 1 < len(ordered) else ordered[0] + 1
            mids.append(((c + nxt) / 2) % 1)
        return ordered + mids

    def format(self, a) -> str:
        return "0" if a is PHASE_ZERO else f"turn:{Fraction(a)}"

    def parse(self, text: str):
        if text == "0":
            return PHASE_ZERO
        if text.startswith("turn:"):
            try:
                a = Fraction(text[5:])
            except (ValueError, ZeroDivisionError):
                pass
            else:
                if 0 <= a < 1:
                    return a
        raise HyperfieldError(f"{text!r} is not an element of phase")

    def sort_key(self, a):
        return (0, 0) if a is PHASE_ZERO else (1, a)

    def describe(self, s):
        parts = []
        if s.zero:
            parts.append("0")
        parts += [self.format(p) for p in s.points]
        parts += [f"arc({s0},{length})" for s0, length in s.arcs]
        return "{" + ",".join(parts) + "}"


KRASNER = Krasner()
SIGNS = Signs()
TROPICAL = Tropical()
PHASE = Phase()

BUILTINS = {h.name: h for h in (KRASNER, SIGNS, TROPICAL, PHASE)}


def get_hyperfield(name: str) -> Hyperfield:
    try:
        return BUILTINS[name]
    except KeyError:
        raise HyperfieldError(f"unknown hyperfield {name!r}") from None


def table_of(h: TableHyperfield) -> TableHyperfield:
    """A plain :class:`TableHyperfield` copy of a finite hyperfield, with
    string symbols, and no fast paths."""
    f = h.format
    els = [f(a) for a in h.elements()]
    return TableHyperfield(
        els, f(h.zero), f(h.one),
        neg={f(a): f(h.neg(a)) for a in h.elements()},
        mul={(f(a), f(b)): f(h.mul(a, b)) for a in h.elements() for b in h.elements()},
        add={frozenset((f(a), f(b))): frozenset(f(c) for c in h.add_table(a, b))
             for a in h.elements() for b in h.elements()},
    )


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------

def verify_hyperfield_axioms(h: Hyperfield, limit: int = 100) -> Report:
    """Exhaustively check the hyperfield axioms of a finite table."""
    if not h.finite:
        raise HyperfieldError(f"{h.name} is not finite")
    rep = Report("hyperfield-axioms", limit=limit)
    els = h.elements()
    f = h.format
    zero, one = h.zero, h.one

    def plus(s, b):
        return h.add_point(s, b).items

    def padd(a, b):
        return h.add_table(a, b)

    def show(s):
        return "{" + ",".join(sorted(f(x) for x in s)) + "}"

    for a, b in itertools.product(els, repeat=2):
        rep.tick()
        if padd(a, b) != padd(b, a):
            rep.fail("add-commutativity", (f(a), f(b)), f"{show(padd(a, b))} != {show(padd(b, a))}")
        if h.mul(a, b) != h.mul(b, a):
            rep.fail("mul-commutativity", (f(a), f(b)), "")
    for a, b, c in itertools.product(els, repeat=3):
        rep.tick()
        left = plus(FiniteSet(padd(a, b)), c)
        right = h.add_point(FiniteSet(padd(b, c)), a).items
        if left != right:
            rep.fail("add-associativity", (f(a), f(b), f(c)), f"(a+b)+c={show(left)} a+(b+c)={show(right)}")
        if h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c)):
            rep.fail("mul-associativity", (f(a), f(b), f(c)), "")
        dist_left = {h.mul(a, x) for x in padd(b, c)}
        dist_right = set(padd(h.mul(a, b), h.mul(a, c)))
        if dist_left != dist_right:
            rep.fail("distributivity", (f(a), f(b), f(c)),
                     f"a(b+c)={show(dist_left)} ab+ac={show(dist_right)}")
        if a in padd(b, c) and c not in padd(a, h.neg(b)):
            rep.fail("reversibility", (f(a), f(b), f(c)),
                     f"{f(a)} in {f(b)}+{f(c)} but {f(c)} not in {f(a)}+({f(h.neg(b))})")
    for a in els:
        rep.tick()
        if padd(a, zero) != frozenset([a]):
            rep.fail("additive-identity", (f(a),), f"{f(a)}+0={show(padd(a, zero))}")
        opp = [b for b in els if zero in padd(a, b)]
        if opp != [h.neg(a)]:
            rep.fail("additive-inverse", (f(a),),
                     f"elements b with 0 in a+b: {show(opp)}; neg={f(h.neg(a))}")
        if h.mul(zero, a) != zero:
            rep.fail("absorbing-zero", (f(a),), f"0*{f(a)}={f(h.mul(zero, a))}")
        if h.mul(one, a) != a:
            rep.fail("multiplicative-identity", (f(a),), f"1*{f(a)}={f(h.mul(one, a))}")
        if a != zero:
            invs = [b for b in els if h.mul(a, b) == one]
            if len(invs) != 1:
                rep.fail("multiplicative-inverse", (f(a),), f"inverses: {show(invs)}")
            for b in els:
                if b != zero and h.mul(a, b) == zero:
                    rep.fail("zero-divisor", (f(a), f(b)), "product of units is zero")
    others = [e for e in els if e != zero and all(padd(a, e) == frozenset([a]) for a in els)]
    if others:
        rep.fail("additive-identity", tuple(f(e) for e in others), "additive identity is not unique")
    if zero == one:
        rep.fail("nontrivial", (), "1 = 0")
    return rep.finish()


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    """A map of hyperfields, given by an explicit table or a rule."""

    source: Hyperfield
    target: Hyperfield
    rule: Any = field(compare=False)
    name: str = ""

    def __call__(self, a):
        if isinstance(self.rule, dict):
            return self.rule[a]
        return self.rule(a)


def apply_hom(f: Homomorphism, a) -> Element:
    return f(f.source.check(a))


def canonical_to_krasner(h: Hyperfield) -> Homomorphism:
    """The unique map to the final object: 0 to 0 and every unit to 1."""
    zero = h.zero
    return Homomorphism(h, KRASNER, lambda a: 0 if a == zero else 1, f"{h.name}->krasner")


def identity_hom(h: Hyperfield) -> Homomorphism:
    return Homomorphism(h, h, lambda a: a, f"id-{h.name}")


def verify_homomorphism(f: Homomorphism, limit: int = 100) -> Report:
    src, dst = f.source, f.target
    if not src.finite:
        raise HyperfieldError("homomorphism check needs a finite source")
    rep = Report("homomorphism", limit=limit)
    fmt = src.format
    els = src.elements()
    if f(src.zero) != dst.zero:
        rep.fail("zero", (fmt(src.zero),), f"f(0)={dst.format(f(src.zero))}")
    if f(src.one) != dst.one:
        rep.fail("one", (fmt(src.one),), f"f(1)={dst.format(f(src.one))}")
    for a, b in itertools.product(els, repeat=2):
        rep.tick()
        fa, fb = f(a), f(b)
        if f(src.mul(a, b)) != dst.mul(fa, fb):
            rep.fail("multiplicative", (fmt(a), fmt(b)),
                     f"f(ab)={dst.format(f(src.mul(a, b)))} f(a)f(b)={dst.format(dst.mul(fa, fb))}")
        image = dst.hyperadd(fa, fb)
        for c in src.add_point(src.singleton(a), b).items:
            if not dst.member(image, f(c)):
                rep.fail("additive", (fmt(a), fmt(b)),
                         f"f({fmt(c)}) not in f(a)+f(b)={dst.describe(image)}")
    return rep.finish()
