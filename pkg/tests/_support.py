"""Shared oracles and fixtures for the test suite."""
from __future__ import annotations

import itertools
import pathlib
from fractions import Fraction

from hypermatroid.corpus import Entry, enumerate_gpfs, phase_u24, standard_corpus
from hypermatroid.hyperfield import PHASE_ZERO, SIGNS, TableHyperfield, table_of

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def semicircle_zero(angles) -> bool:
    """Independent test for 0 in a phase hypersum: the nonzero phases are
    all absent, or exactly one antipodal pair, or they lie in no closed
    half-circle (largest cyclic gap below half a turn)."""
    pts = sorted({a for a in angles if a is not PHASE_ZERO})
    if not pts:
        return True
    if len(pts) == 1:
        return False
    if len(pts) == 2 and pts[1] - pts[0] == Fraction(1, 2):
        return True
    gaps = [(pts[(i + 1) % len(pts)] - pts[i]) % 1 for i in range(len(pts))]
    return max(gaps) < Fraction(1, 2)


def open_half_plane_zero(angles) -> bool:
    """The half-plane wording: phases lie in no *open* half-plane, or an
    antipodal pair occurs."""
    pts = sorted({a for a in angles if a is not PHASE_ZERO})
    if not pts:
        return True
    if any((b - a) % 1 == Fraction(1, 2) for a in pts for b in pts):
        return True
    if len(pts) == 1:
        return False
    gaps = [(pts[(i + 1) % len(pts)] - pts[i]) % 1 for i in range(len(pts))]
    return max(gaps) <= Fraction(1, 2)


def tropical_zero(values) -> bool:
    finite = [v for v in values if v != float("-inf")]
    return not finite or finite.count(max(finite)) >= 2


def signs_mutations() -> list:
    """Every table obtained from the signs table by changing one entry."""
    base = table_of(SIGNS).table_dict()
    els = base["elements"]
    subsets = [sorted(s) for k in (1, 2, 3) for s in itertools.combinations(els, k)]
    out = []
    for key, val in sorted(base["add"].items()):
        for s in subsets:
            if s != sorted(val):
                out.append(("add", key, s))
    for key, val in sorted(base["mul"].items()):
        for e in els:
            if e != val:
                out.append(("mul", key, e))
    for key, val in sorted(base["neg"].items()):
        for e in els:
            if e != val:
                out.append(("neg", key, e))
    tables = []
    for part, key, new in out:
        d = {k: (dict(v) if isinstance(v, dict) else v) for k, v in base.items()}
        d[part][key] = new
        tables.append(((part, key, new), table_from_dict(d)))
    return tables


def table_from_dict(d) -> TableHyperfield:
    def pair(k):
        a, b = k.split(",")
        return a, b

    return TableHyperfield(
        d["elements"], d["zero"], d["one"], d["neg"],
        {pair(k): v for k, v in d["mul"].items()},
        {frozenset(pair(k)): frozenset(v) for k, v in d["add"].items()},
    )


_CORPUS = None


def corpus() -> list:
    """Standard corpus plus the phase example."""
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = standard_corpus() + [Entry("U24-phase", phase_u24())]
    return _CORPUS


def small_signs() -> list:
    return [p for n in range(4) for p in enumerate_gpfs(SIGNS, n)]


# --- ordinary matroid oracles on label sets, independent of hypermatroid.ordinary

def exchange_ok(bases) -> bool:
    bases = [frozenset(b) for b in bases]
    if not bases:
        return False
    for a in bases:
        for b in bases:
            for x in a - b:
                if not any((a - {x}) | {y} in bases for y in b - a):
                    return False
    return True


def oracle_circuits(ground, bases) -> set:
    bases = [frozenset(b) for b in bases]
    indep = lambda s: any(s <= b for b in bases)  # noqa: E731
    out = set()
    for k in range(1, len(ground) + 1):
        for s in itertools.combinations(ground, k):
            s = frozenset(s)
            if not indep(s) and all(indep(s - {x}) for x in s):
                out.add(s)
    return out


def labelled_bases(phi) -> set:
    return {frozenset(phi.labels(m)) for m in phi.values}


def supports_of(c) -> set:
    return {frozenset(s) for s in c.labelled_supports()}


def oracle_restrict_bases(bases, s) -> set:
    s = frozenset(s)
    cut = {frozenset(b) & s for b in bases}
    top = max(len(b) for b in cut)
    return {b for b in cut if len(b) == top}


def oracle_contract_bases(bases, s) -> set:
    s = frozenset(s)
    top = max(len(frozenset(b) & s) for b in bases)
    return {frozenset(b) - s for b in bases if len(frozenset(b) & s) == top}


def subsets_upto(ground, k):
    return [frozenset(c) for j in range(k + 1) for c in itertools.combinations(ground, j)]
