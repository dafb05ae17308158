"""Exact rational matrix model of the irreducible symmetric-group module for a
shape, in the basis indexed by standard tableaux.

Adjacent transpositions act by the seminormal rules (axial distance d =
u_{s+1} - u_s): same row gives +1, same column gives -1, otherwise the swap
tableau enters with coefficients 1/d and (d^2-1)/d^2 resp. 1.  Everything is
Fraction arithmetic, so the Coxeter relations, the diagonality of the
reconstructed elements Z_s, and the trace identity are checked with equality,
no tolerances.

Matrices are lists of sparse rows ({col: Fraction}); dimensions stay small
(size guard) but products of transpositions densify, so row sparsity matters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .tableaux import StandardTableau, YoungDiagram, enumerate_syt

MAX_MODULE_SIZE = 10
MAX_LEMMA_SIZE = 9

Matrix = list  # list[dict[int, Fraction]]


def _zero(dim: int) -> Matrix:
    return [dict() for _ in range(dim)]


def _identity(dim: int) -> Matrix:
    return [{i: Fraction(1)} for i in range(dim)]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for row in a:
        acc: dict[int, Fraction] = {}
        for k, av in row.items():
            for j, bv in b[k].items():
                cur = acc.get(j)
                acc[j] = av * bv if cur is None else cur + av * bv
        out.append({j: v for j, v in acc.items() if v})
    return out


def _madd(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for ra, rb in zip(a, b):
        acc = dict(ra)
        for j, v in rb.items():
            cur = acc.get(j)
            s = v if cur is None else cur + v
            if s:
                acc[j] = s
            elif cur is not None:
                del acc[j]
        out.append(acc)
    return out


def _mscale(a: Matrix, c: Fraction) -> Matrix:
    if c == 0:
        return _zero(len(a))
    return [{j: v * c for j, v in row.items()} for row in a]


def _meq(a: Matrix, b: Matrix) -> bool:
    return a == b


@dataclass(frozen=True, eq=False)
class SeminormalModule:
    shape: YoungDiagram
    basis: tuple[StandardTableau, ...]
    generators: tuple  # generators[i-1] represents the transposition (i, i+1)
    _transposition_cache: dict = field(default_factory=dict, repr=False)
    _jm_cache: dict = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _swap_entries(t: StandardTableau, s: int) -> StandardTableau:
    rows = [list(r) for r in t.rows]
    pa = t.position_of(s)
    pb = t.position_of(s + 1)
    rows[pa.y - 1][pa.x - 1] = s + 1
    rows[pb.y - 1][pb.x - 1] = s
    return StandardTableau(tuple(tuple(r) for r in rows))


def build_module(shape: YoungDiagram) -> SeminormalModule:
    n = shape.size
    if n > MAX_MODULE_SIZE:
        raise ValueError(f"build_module limited to |shape| <= {MAX_MODULE_SIZE}")
    if n == 0:
        raise ValueError("empty shape has no module")
    basis = tuple(sorted(enumerate_syt(shape), key=lambda t: t.rows))
    index = {t.rows: i for i, t in enumerate(basis)}
    gens = []
    for s in range(1, n):
        mat: Matrix = _zero(len(basis))
        for col, t in enumerate(basis):
            pa = t.position_of(s)
            pb = t.position_of(s + 1)
            if pa.y == pb.y:
                mat[col][col] = Fraction(1)
                continue
            if pa.x == pb.x:
                mat[col][col] = Fraction(-1)
                continue
            d = pb.u - pa.u
            other = index[_swap_entries(t, s).rows]
            mat[col][col] = Fraction(1, d)
            if d > 0:
                mat[other][col] = Fraction(d * d - 1, d * d)
            else:
                mat[other][col] = Fraction(1)
        gens.append(mat)
    return SeminormalModule(shape=shape, basis=basis, generators=tuple(gens))


@lru_cache(maxsize=128)
def _cached_module(rows: tuple[int, ...]) -> SeminormalModule:
    return build_module(YoungDiagram(rows))


def verify_coxeter_relations(mod: SeminormalModule) -> bool:
    """Squares are the identity, distant generators commute, braid relation
    holds; all by exact matrix equality."""
    gens = mod.generators
    dim = mod.dimension
    ident = _identity(dim)
    for g in gens:
        if not _meq(_matmul(g, g), ident):
            return False
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if not _meq(_matmul(gens[i], gens[j]), _matmul(gens[j], gens[i])):
                return False
    for i in range(len(gens) - 1):
        a, b = gens[i], gens[i + 1]
        if not _meq(_matmul(a, _matmul(b, a)), _matmul(b, _matmul(a, b))):
            return False
    return True


def transposition_matrix(mod: SeminormalModule, i: int, s: int) -> Matrix:
    """Matrix of the transposition (i, s), i < s, as a product of adjacent
    generators: (i,s) = g_i (i+1,s) g_i."""
    n = mod.shape.size
    if not 1 <= i < s <= n:
        raise ValueError(f"need 1 <= i < s <= {n}")
    key = (i, s)
    cached = mod._transposition_cache.get(key)
    if cached is not None:
        return cached
    if s - i == 1:
        out = mod.generators[i - 1]
    else:
        g = mod.generators[i - 1]
        out = _matmul(g, _matmul(transposition_matrix(mod, i + 1, s), g))
    mod._transposition_cache[key] = out
    return out


def jm_matrix(mod: SeminormalModule, s: int) -> Matrix:
    """Sum of the transpositions (i, s) over i < s.  The result is required
    (and checked here with exact equality) to be diagonal with the
    u-coordinate of entry s in each basis tableau on the diagonal."""
    n = mod.shape.size
    if not 2 <= s <= n:
        raise ValueError(f"s must be in 2..{n} (the s=1 element is zero)")
    cached = mod._jm_cache.get(s)
    if cached is not None:
        return cached
    total = _zero(mod.dimension)
    for i in range(1, s):
        total = _madd(total, transposition_matrix(mod, i, s))
    for r, row in enumerate(total):
        for col, v in row.items():
            if col != r and v:
                raise ArithmeticError(
                    f"reconstructed element for s={s} has off-diagonal entry at ({r},{col})"
                )
        expect = Fraction(mod.basis[r].u_of(s))
        if row.get(r, Fraction(0)) != expect:
            raise ArithmeticError(
                f"diagonal mismatch for s={s} at basis index {r}: "
                f"{row.get(r, 0)} != {expect}"
            )
    mod._jm_cache[s] = total
    return total


@dataclass(frozen=True)
class MomentPolynomial:
    """Product of power-sum (p_r) and elementary (e_r) factors with integer
    exponents, e.g. "p1^2" or "p2*e2"."""

    factors: tuple[tuple[str, int, int], ...]

    @staticmethod
    def parse(spec: str) -> "MomentPolynomial":
        factors = []
        for token in spec.replace(" ", "").split("*"):
            if not token:
                raise ValueError("empty factor in polynomial spec")
            base, _, exp = token.partition("^")
            kind = base[:1]
            if kind not in ("p", "e") or not base[1:].isdigit():
                raise ValueError(f"bad factor {token!r} (want e.g. p1, p2, e2, p1^2)")
            r = int(base[1:])
            m = int(exp) if exp else 1
            if r < 1 or m < 1:
                raise ValueError(f"bad factor {token!r}")
            factors.append((kind, r, m))
        if not factors:
            raise ValueError("empty polynomial spec")
        return MomentPolynomial(tuple(factors))

    def evaluate(self, values) -> Fraction:
        out = Fraction(1)
        vals = [Fraction(v) for v in values]
        for kind, r, m in self.factors:
            if kind == "p":
                base = sum((v ** r for v in vals), Fraction(0))
            else:
                base = sum((_prod(sub) for sub in combinations(vals, r)), Fraction(0))
            out *= base ** m
        return out

    def __str__(self) -> str:
        return "*".join(
            f"{kind}{r}" + (f"^{m}" if m > 1 else "") for kind, r, m in self.factors
        )


def _prod(vals) -> Fraction:
    out = Fraction(1)
    for v in vals:
        out *= v
    return out


def _window_permutation_matrix(mod: SeminormalModule, a: int, perm0: tuple[int, ...]) -> Matrix:
    """Product of window generators along a bubble-sort word of perm0 (a
    0-based image tuple on the labels a..a+k-1).  perm0 -> group element is a
    bijection of the window symmetric group, which is all the symmetrizer
    needs."""
    arr = list(perm0)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(arr) - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                word.append(j)
                changed = True
    out = _identity(mod.dimension)
    for j in word:
        out = _matmul(out, mod.generators[a - 1 + j])
    return out


def symmetrizer(mod: SeminormalModule, a: int, b: int) -> Matrix:
    """(1/k!) sum over all permutations of the labels a..b."""
    k = b - a + 1
    total = _zero(mod.dimension)
    count = 0
    for perm0 in permutations(range(k)):
        total = _madd(total, _window_permutation_matrix(mod, a, perm0))
        count += 1
    return _mscale(total, Fraction(1, count))


def lemma_expvalue_check(
    shape: YoungDiagram, a: int, b: int, poly: MomentPolynomial | str
) -> tuple[Fraction, Fraction, bool]:
    """Two routes to the same expectation.

    lhs: average of poly at the u-coordinates of entries a..b over the basis
    tableaux whose window u's strictly increase (combinatorial route).
    rhs: trace(P * poly(Z_a..Z_b)) / trace(P) with P the window symmetrizer
    and Z_s the reconstructed diagonal elements (algebraic route).  Both are
    exact rationals; `equal` reports lhs == rhs.
    """
    if isinstance(poly, str):
        poly = MomentPolynomial.parse(poly)
    n = shape.size
    if n > MAX_LEMMA_SIZE:
        raise ValueError(f"lemma check limited to |shape| <= {MAX_LEMMA_SIZE}")
    if not 1 <= a <= b <= n:
        raise ValueError(f"window {a}..{b} outside 1..{n}")
    mod = _cached_module(shape.rows)
    basis = mod.basis
    ordered = [
        t
        for t in basis
        if all(t.u_of(s) < t.u_of(s + 1) for s in range(a, b))
    ]
    if not ordered:
        raise ValueError("no tableau has strictly increasing u on the window")
    lhs = sum(
        (poly.evaluate([t.u_of(s) for s in range(a, b + 1)]) for t in ordered),
        Fraction(0),
    ) / len(ordered)

    diags = []
    for s in range(a, b + 1):
        if s == 1:
            diags.append([Fraction(0)] * mod.dimension)
        else:
            z = jm_matrix(mod, s)
            diags.append([z[r].get(r, Fraction(0)) for r in range(mod.dimension)])
    proj = symmetrizer(mod, a, b)
    trace_p = sum((proj[r].get(r, Fraction(0)) for r in range(mod.dimension)), Fraction(0))
    if trace_p == 0:
        raise ArithmeticError("symmetrizer has zero trace despite nonempty window set")
    trace_pw = sum(
        (
            proj[r].get(r, Fraction(0))
            * poly.evaluate([diags[j][r] for j in range(b - a + 1)])
            for r in range(mod.dimension)
        ),
        Fraction(0),
    )
    rhs = trace_pw / trace_p
    return lhs, rhs, lhs == rhs
