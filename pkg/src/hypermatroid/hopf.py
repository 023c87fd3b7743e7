"""The matroid-minor Hopf algebra of H-matroids over the rationals.

Basis elements are monomials: sorted tuples of class keys (see
:mod:`hypermatroid.iso`) of *connected* matroids.  A matroid maps to the
monomial of its connected components, so the product of two classes is the
class of their direct sum and the empty matroid is the empty monomial.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from hypermatroid import ordinary as om
from hypermatroid.constructions import contract, direct_sum, prefixed, pushforward, restrict
from hypermatroid.hyperfield import Homomorphism, Hyperfield
from hypermatroid.iso import canonical_form, from_key, key_size
from hypermatroid.matroid import GPFunction, MatroidError
from hypermatroid.report import Report

EMPTY = ()


def degree(monomial: tuple) -> int:
    return sum(key_size(k) for k in monomial)


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(a + b))


def _clean(terms: dict) -> dict:
    return {k: v for k, v in sorted(terms.items()) if v}


@dataclass(frozen=True)
class AlgebraElement:
    """Sparse rational combination of monomials."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean({k: Fraction(v) for k, v in self.terms.items()}))

    @classmethod
    def monomial(cls, m: tuple, coeff=1) -> "AlgebraElement":
        return cls({tuple(sorted(m)): Fraction(coeff)})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = defaultdict(Fraction)
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[mono_mul(a, b)] += x * y
        return AlgebraElement(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def graded_piece(self, n: int) -> "AlgebraElement":
        return AlgebraElement({k: v for k, v in self.terms.items() if degree(k) == n})

    def degrees(self) -> list:
        return sorted({degree(k) for k in self.terms})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{_show(k)}" for k, v in self.terms.items())


def _show(m: tuple) -> str:
    return "[]" if not m else "".join(f"[{k}]" for k in m)


def unit() -> AlgebraElement:
    return AlgebraElement.monomial(EMPTY)


@dataclass(frozen=True)
class Tensor:
    """Sparse rational combination of tuples of monomials (``k``-fold tensors)."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean({k: Fraction(v) for k, v in self.terms.items()}))

    def __add__(self, other: "Tensor") -> "Tensor":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Tensor(out)

    def __mul__(self, other: "Tensor") -> "Tensor":
        out = defaultdict(Fraction)
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[tuple(mono_mul(p, q) for p, q in zip(a, b))] += x * y
        return Tensor(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*" + "⊗".join(_show(m) for m in k) for k, v in self.terms.items())


def connected_components(phi: GPFunction) -> list:
    """Element positions grouped into components of the underlying matroid
    (elements are joined when they share a circuit)."""
    n = phi.n
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for c in om.circuits_from_bases(n, phi.bases()):
        idx = om.bits(c)
        for j in idx[1:]:
            parent[find(j)] = find(idx[0])
    groups = defaultdict(list)
    for i in range(n):
        groups[find(i)].append(i)
    return sorted(groups.values())


class ClassRegistry:
    """Iso classes of connected H-matroids with a representative each.

    Reads may happen from several threads; registration of new classes is
    serialized by a re-entrant lock.
    """

    def __init__(self, h: Hyperfield):
        self.hyperfield = h
        self._reps: dict = {}
        self._lock = threading.RLock()

    def __contains__(self, key: str) -> bool:
        return key in self._reps

    def __len__(self) -> int:
        return len(self._reps)

    def keys(self) -> list:
        with self._lock:
            return sorted(self._reps)

    def representative(self, key: str) -> GPFunction:
        rep = self._reps.get(key)
        if rep is None:
            with self._lock:
                rep = self._reps.get(key)
                if rep is None:
                    rep = from_key(key, self.hyperfield)
                    self._reps[key] = rep
        return rep

    def register_connected(self, phi: GPFunction) -> str:
        key = canonical_form(phi)
        if key not in self._reps:
            with self._lock:
                self._reps.setdefault(key, from_key(key, self.hyperfield))
        return key

    def monomial(self, phi: GPFunction) -> tuple:
        """Monomial of the classes of the connected components of ``phi``."""
        if phi.hyperfield != self.hyperfield:
            raise MatroidError(f"matroid over {phi.hyperfield.name}, registry over {self.hyperfield.name}")
        keys = []
        for comp in connected_components(phi):
            part = phi if len(comp) == phi.n else restrict(phi, [phi.ground[i] for i in comp])
            keys.append(self.register_connected(part))
        return tuple(sorted(keys))

    def element(self, phi: GPFunction, coeff=1) -> AlgebraElement:
        return AlgebraElement.monomial(self.monomial(phi), coeff)

    def monomial_representative(self, m: tuple) -> GPFunction:
        """A matroid in the class of the monomial: the direct sum of the
        factors' representatives, labels prefixed by factor position."""
        phi = None
        for i, key in enumerate(m):
            part = prefixed(self.representative(key), f"{i}.")
            phi = part if phi is None else direct_sum(phi, part)
        if phi is None:
            return GPFunction(self.hyperfield, (), 0, {0: self.hyperfield.one})
        return phi


class MinorHopfAlgebra:
    """Coproduct, counit and antipodes on a :class:`ClassRegistry`."""

    def __init__(self, registry: ClassRegistry):
        self.registry = registry
        self._gen_cop: dict = {}
        self._antipode_memo: dict = {EMPTY: AlgebraElement.monomial(EMPTY)}
        self._lock = threading.RLock()

    @property
    def hyperfield(self) -> Hyperfield:
        return self.registry.hyperfield

    # coproduct -----------------------------------------------------------
    def raw_coproduct(self, phi: GPFunction) -> Tensor:
        """``sum over A of [M|A] ⊗ [M/A]`` computed directly on ``phi``."""
        reg = self.registry
        out = defaultdict(Fraction)
        for bits_ in range(1 << phi.n):
            a = [phi.ground[i] for i in om.bits(bits_)]
            left = reg.monomial(restrict(phi, a))
            right = reg.monomial(contract(phi, a))
            out[(left, right)] += 1
        return Tensor(out)

    def generator_coproduct(self, key: str) -> Tensor:
        cop = self._gen_cop.get(key)
        if cop is None:
            cop = self.raw_coproduct(self.registry.representative(key))
            with self._lock:
                self._gen_cop.setdefault(key, cop)
        return cop

    def monomial_coproduct(self, m: tuple) -> Tensor:
        out = Tensor({(EMPTY, EMPTY): 1})
        for key in m:
            out = out * self.generator_coproduct(key)
        return out

    def coproduct(self, x: AlgebraElement) -> Tensor:
        out = Tensor()
        for m, c in x.terms.items():
            cop = self.monomial_coproduct(m)
            out = out + Tensor({k: v * c for k, v in cop.terms.items()})
        return out

    def counit(self, x: AlgebraElement) -> Fraction:
        return x.terms.get(EMPTY, Fraction(0))

    # antipodes -----------------------------------------------------------
    def antipode_takeuchi(self, x: AlgebraElement) -> AlgebraElement:
        """Alternating sum over iterated coproducts with every tensor factor of
        positive degree, multiplied out; the ``i = 0`` term is ``ηε``."""
        out = AlgebraElement.monomial(EMPTY, self.counit(x))
        for m, c in x.terms.items():
            if m == EMPTY:
                continue
            layer = {(m,): Fraction(c)}
            sign = -1
            while layer:
                for factors, coeff in layer.items():
                    prod = tuple(sorted(k for f in factors for k in f))
                    out = out + AlgebraElement.monomial(prod, sign * coeff)
                nxt = defaultdict(Fraction)
                for factors, coeff in layer.items():
                    for (left, right), d in self.monomial_coproduct(factors[-1]).terms.items():
                        if left and right:
                            nxt[factors[:-1] + (left, right)] += coeff * d
                layer = {k: v for k, v in nxt.items() if v}
                sign = -sign
        return out

    def antipode_recursive(self, x: AlgebraElement) -> AlgebraElement:
        """``S(m) = -sum S(l)·r`` over coproduct terms with ``r`` nonempty."""
        out = AlgebraElement()
        for m, c in x.terms.items():
            out = out + self._antipode_mono(m).scale(c)
        return out

    def _antipode_mono(self, m: tuple) -> AlgebraElement:
        hit = self._antipode_memo.get(m)
        if hit is not None:
            return hit
        acc = AlgebraElement()
        for (left, right), d in self.monomial_coproduct(m).terms.items():
            if right:
                acc = acc + (self._antipode_mono(left) * AlgebraElement.monomial(right)).scale(d)
        res = -acc
        with self._lock:
            self._antipode_memo.setdefault(m, res)
        return res

    # helpers for the axioms ------------------------------------------------
    def mu_s_id(self, t: Tensor, antipode=None, side: str = "left") -> AlgebraElement:
        s = antipode or self.antipode_takeuchi
        out = AlgebraElement()
        for (left, right), c in t.terms.items():
            if side == "left":
                term = s(AlgebraElement.monomial(left)) * AlgebraElement.monomial(right)
            else:
                term = AlgebraElement.monomial(left) * s(AlgebraElement.monomial(right))
            out = out + term.scale(c)
        return out

    def close_registry(self, max_degree=None) -> None:
        """Compute the coproduct of every registered class (up to the degree
        bound) until no new classes appear."""
        done = set()
        while True:
            todo = [k for k in self.registry.keys()
                    if k not in done and (max_degree is None or key_size(k) <= max_degree)]
            if not todo:
                return
            for k in todo:
                self.generator_coproduct(k)
                done.add(k)

    def monomials_up_to(self, max_degree: int) -> list:
        gens = [k for k in self.registry.keys() if key_size(k) <= max_degree]
        out = [EMPTY]
        frontier = [EMPTY]
        while frontier:
            nxt = []
            for m in frontier:
                start = gens.index(m[-1]) if m else 0
                for k in gens[start:]:
                    cand = m + (k,)
                    if degree(cand) <= max_degree:
                        nxt.append(cand)
            out.extend(nxt)
            frontier = nxt
        return sorted(out, key=lambda m: (degree(m), m))

    def pushforward(self, f: Homomorphism, target: "MinorHopfAlgebra", x: AlgebraElement) -> AlgebraElement:
        """Image under the map induced on classes by ``f``."""
        out = AlgebraElement()
        for m, c in x.terms.items():
            img = AlgebraElement.monomial(EMPTY)
            for key in m:
                rep = pushforward(f, self.registry.representative(key))
                img = img * target.registry.element(rep)
            out = out + img.scale(c)
        return out


def tensor_map(t: Tensor, fn) -> Tensor:
    """Apply ``fn`` (monomial -> AlgebraElement) to every factor of ``t``."""
    out = Tensor()
    for factors, c in t.terms.items():
        acc = {(): c}
        for f in factors:
            img = fn(f)
            nxt = defaultdict(Fraction)
            for k, v in acc.items():
                for m, w in img.terms.items():
                    nxt[k + (m,)] += v * w
            acc = nxt
        out = out + Tensor(acc)
    return out


def verify_bialgebra(alg: MinorHopfAlgebra, max_degree: int, limit: int = 100) -> Report:
    """Bialgebra and antipode axioms on every monomial of degree at most
    ``max_degree`` built from the registry (closed under minors first)."""
    rep = Report("hopf-axioms", limit=limit)
    alg.close_registry(max_degree)
    mons = alg.monomials_up_to(max_degree)
    one = AlgebraElement.monomial(EMPTY)
    for key in alg.registry.keys():
        rep.tick()
        if key_size(key) == 0:
            rep.fail("connected", (key,), "a nonempty class sits in degree 0")
    for m in mons:
        name = (_show(m),)
        x = AlgebraElement.monomial(m)
        cop = alg.monomial_coproduct(m)
        d = degree(m)
        rep.tick()
        # grading
        for left, right in cop.terms:
            if degree(left) + degree(right) != d:
                rep.fail("grading", name, f"term {_show(left)}⊗{_show(right)}")
                break
        # counit laws
        left_counit = AlgebraElement()
        right_counit = AlgebraElement()
        for (left, right), c in cop.terms.items():
            if left == EMPTY:
                left_counit = left_counit + AlgebraElement.monomial(right, c)
            if right == EMPTY:
                right_counit = right_counit + AlgebraElement.monomial(left, c)
        if left_counit != x:
            rep.fail("counit-left", name, repr(left_counit))
        if right_counit != x:
            rep.fail("counit-right", name, repr(right_counit))
        # coassociativity
        lhs = defaultdict(Fraction)
        rhs = defaultdict(Fraction)
        for (left, right), c in cop.terms.items():
            for (a, b), e in alg.monomial_coproduct(left).terms.items():
                lhs[(a, b, right)] += c * e
            for (a, b), e in alg.monomial_coproduct(right).terms.items():
                rhs[(left, a, b)] += c * e
        if Tensor(lhs) != Tensor(rhs):
            rep.fail("coassociativity", name, "")
        # multiplicativity against the coproduct of an actual direct sum
        if len(m) > 1:
            rep.tick()
            phi = alg.registry.monomial_representative(m)
            if alg.registry.monomial(phi) != m:
                rep.fail("product-class", name, "direct sum of the factors has another class")
            elif alg.raw_coproduct(phi) != cop:
                rep.fail("multiplicativity", name, "Δ of the direct sum differs from the product of Δs")
        # antipode
        s_t = alg.antipode_takeuchi(x)
        s_r = alg.antipode_recursive(x)
        if s_t != s_r:
            rep.fail("antipode-agreement", name, f"takeuchi={s_t!r} recursive={s_r!r}")
        expected = one.scale(alg.counit(x))
        for side in ("left", "right"):
            got = alg.mu_s_id(cop, alg.antipode_takeuchi, side)
            if got != expected:
                rep.fail(f"antipode-{side}", name, repr(got))
    return rep.finish()


def registry_from(h: Hyperfield, matroids: Iterable[GPFunction]) -> MinorHopfAlgebra:
    reg = ClassRegistry(h)
    for phi in matroids:
        reg.monomial(phi)
    return MinorHopfAlgebra(reg)
