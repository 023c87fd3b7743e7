"""Small named matroids and exhaustive enumerations used by tests and the CLI."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from hypermatroid import ordinary as om
from hypermatroid.hyperfield import KRASNER, NEG_INF, PHASE, SIGNS, TROPICAL, Hyperfield
from hypermatroid.matroid import STRONG, GPFunction, MatroidError, check_gpf, perm_parity


def labels(n: int) -> tuple:
    return tuple(str(i) for i in range(1, n + 1))


def uniform(h: Hyperfield, r: int, n: int) -> GPFunction:
    """``U_{r,n}`` with every sorted basis sent to 1 (over the signs this is
    the alternating orientation)."""
    return GPFunction(h, labels(n), r, {m: h.one for m in om.k_subsets(n, r)})


def det(rows) -> Fraction:
    rows = [[Fraction(x) for x in row] for row in rows]
    k = len(rows)
    total = Fraction(0)
    for p in itertools.permutations(range(k)):
        term = Fraction(-1 if perm_parity(p) else 1)
        for i, j in enumerate(p):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


def _p_valuation(x: Fraction, p: int) -> int:
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def from_matrix(h: Hyperfield, matrix, ground=None, p: int = 2) -> GPFunction:
    """Chirotope-style GPF of the column matroid of a rational matrix.

    Over the signs the value is the sign of the maximal minor, over Krasner
    its support, over the tropical hyperfield ``-v_p`` of the minor.
    """
    r = len(matrix)
    n = len(matrix[0])
    ground = tuple(ground) if ground else labels(n)
    values = {}
    for cols in itertools.combinations(range(n), r):
        d = det([[row[c] for c in cols] for row in matrix])
        if not d:
            continue
        if h is SIGNS:
            v = 1 if d > 0 else -1
        elif h is KRASNER:
            v = 1
        elif h is TROPICAL:
            v = Fraction(-_p_valuation(d, p))
        else:
            raise MatroidError(f"no matrix rule for {h.name}")
        values[om.mask_of(cols)] = v
    return GPFunction(h, ground, r, values)


K4_EDGES = (("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4"))


def graphic_k4(h: Hyperfield = KRASNER) -> GPFunction:
    """Graphic matroid of ``K_4`` from the reduced oriented incidence matrix;
    edges are labelled ``"12"``, ``"13"``, ..."""
    matrix = []
    for v in ("1", "2", "3"):
        matrix.append([(1 if a == v else -1 if b == v else 0) for a, b in K4_EDGES])
    return from_matrix(h, matrix, ["".join(e) for e in K4_EDGES])


def valuated_u23() -> GPFunction:
    return GPFunction.from_subsets(TROPICAL, labels(3), 2,
                                   {("1", "2"): 0, ("1", "3"): 1, ("2", "3"): 2})


def phase_u24() -> GPFunction:
    """Rank-2 phase matroid on four points with exact rational phases."""
    t = Fraction
    return GPFunction.from_subsets(PHASE, labels(4), 2, {
        ("1", "2"): t(0), ("1", "3"): t(0), ("1", "4"): t(1, 4),
        ("2", "3"): t(1, 2), ("2", "4"): t(1, 2), ("3", "4"): t(3, 8),
    })


@dataclass(frozen=True)
class Entry:
    name: str
    phi: GPFunction
    kind: str = STRONG


def standard_corpus() -> list:
    """Named matroids over the Krasner, signs and tropical hyperfields."""
    out = []
    for r, n in [(0, 1), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5)]:
        out.append(Entry(f"U{r}{n}-krasner", uniform(KRASNER, r, n)))
    out.append(Entry("K4-krasner", graphic_k4(KRASNER)))
    for r, n in [(1, 2), (2, 3), (2, 4), (3, 5)]:
        out.append(Entry(f"U{r}{n}-signs", uniform(SIGNS, r, n)))
    out.append(Entry("K4-signs", graphic_k4(SIGNS)))
    # a loop ("3") and a coloop ("1")
    out.append(Entry("loop-coloop-signs", GPFunction.from_subsets(
        SIGNS, labels(4), 2, {("1", "2"): 1, ("1", "4"): -1})))
    out.append(Entry("planar-signs", from_matrix(SIGNS, [[1, 0, 1, 1, 2], [0, 1, 1, -1, 1]])))
    out.append(Entry("U23-tropical", valuated_u23()))
    out.append(Entry("U24-tropical", from_matrix(TROPICAL, [[1, 0, 1, 1], [0, 1, 2, 6]])))
    out.append(Entry("rank2-tropical", GPFunction.from_subsets(
        TROPICAL, labels(4), 2, {("1", "2"): 0, ("1", "3"): 0, ("2", "3"): NEG_INF,
                                 ("1", "4"): 1, ("2", "4"): 1, ("3", "4"): 1})))
    return out


def enumerate_gpfs(h: Hyperfield, n: int, kind: str = STRONG, ranks=None) -> list:
    """Every GPF over a finite hyperfield on ``n`` labelled elements that
    passes the check of ``kind``, one normalized representative per class."""
    out = []
    units = h.units()
    for r in (range(n + 1) if ranks is None else ranks):
        subsets = om.k_subsets(n, r)
        for support_bits in range(1, 1 << len(subsets)):
            support = [subsets[i] for i in range(len(subsets)) if support_bits >> i & 1]
            if not om.is_basis_family(support):
                continue
            for rest in itertools.product(units, repeat=len(support) - 1):
                phi = GPFunction(h, labels(n), r, dict(zip(support, (h.one,) + rest)))
                if check_gpf(phi, kind).passed:
                    out.append(phi)
    return out
