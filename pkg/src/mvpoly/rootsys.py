"""Exact root-system arithmetic for the groups A1, A2, C2, A3.

Weights are integer tuples in the fundamental-weight basis.  Root vectors are
tuples of exact rationals in the simple-root basis; integral entries are kept
as plain ``int`` so lattice arithmetic stays fast.

The Cartan matrix follows the Kac convention ``A[i][j] = <alpha_i^vee, alpha_j>``.
For C2 the first simple root is long and the second is short, so the positive
roots are alpha1, alpha2, alpha1+alpha2 and alpha1+2*alpha2.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

Weight = Tuple[int, ...]
RootVector = Tuple  # entries are int or Fraction

SUPPORTED_GROUPS = ("A1", "A2", "C2", "A3")

_PRESETS = {
    # id: (cartan matrix, squared lengths of the simple roots, convention note)
    "A1": (((2,),), (2,), "type A1 (Sl2)"),
    "A2": (((2, -1), (-1, 2)), (2, 2), "type A2 (Sl3)"),
    "C2": (
        ((2, -1), (-2, 2)),
        (4, 2),
        "type C2 (Sp4): alpha1 long, alpha2 short; positive roots "
        "alpha1, alpha2, alpha1+alpha2, alpha1+2alpha2",
    ),
    "A3": (
        ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
        (2, 2, 2),
        "type A3 (Sl4)",
    ),
}


def _q(x):
    """Collapse integral rationals to ``int``."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _solve(matrix: Sequence[Sequence], rhs: Sequence) -> Tuple:
    """Solve a small nonsingular linear system exactly (Gauss-Jordan)."""
    n = len(matrix)
    rows = [[Fraction(v) for v in matrix[i]] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(_q(rows[i][n]) for i in range(n))


@dataclass(frozen=True)
class RootSystem:
    id: str
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    root_lengths: Tuple[int, ...]
    convention_note: str = ""
    positive_roots: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @cached_property
    def symmetrized_form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Gram matrix ``(alpha_i, alpha_j)`` of an invariant inner product."""
        n = self.rank
        return tuple(
            tuple(Fraction(self.cartan_matrix[i][j] * self.root_lengths[i], 2) for j in range(n))
            for i in range(n)
        )

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def simple_roots_fund(self) -> Tuple[Weight, ...]:
        """Simple roots written in the fundamental-weight basis (columns of A)."""
        n = self.rank
        return tuple(tuple(self.cartan_matrix[i][j] for i in range(n)) for j in range(n))

    @cached_property
    def weyl_group(self) -> Tuple[Tuple[Tuple[Tuple[int, ...], ...], int], ...]:
        """All Weyl group elements as (integer matrix on fundamental coords, sign)."""
        n = self.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        seen = {self.rho: (ident, 1)}
        queue = deque([(ident, 1)])
        while queue:
            mat, sign = queue.popleft()
            for i in range(n):
                refl = _reflection_matrix(self, i)
                prod = _matmul(refl, mat)
                key = _matvec(prod, self.rho)
                if key not in seen:
                    seen[key] = (prod, -sign)
                    queue.append((prod, -sign))
        return tuple(seen[k] for k in sorted(seen))

    def inner(self, x: Sequence, y: Sequence):
        """Invariant form on two root-basis vectors."""
        b = self.symmetrized_form
        n = self.rank
        return _q(sum(b[i][j] * x[i] * y[j] for i in range(n) for j in range(n) if x[i] and y[j]))

    def pair_fund_root(self, w: Sequence[int], v: Sequence):
        """``(w, v)`` for a fundamental-basis weight and a root-basis vector."""
        return _q(sum(Fraction(w[j] * self.root_lengths[j], 2) * v[j] for j in range(self.rank)))

    def reflect(self, i: int, w: Sequence[int]) -> Weight:
        c = w[i]
        if c == 0:
            return tuple(w)
        col = self.simple_roots_fund[i]
        return tuple(a - c * b for a, b in zip(w, col))


def _reflection_matrix(rs: RootSystem, i: int):
    n = rs.rank
    rows = []
    for r in range(n):
        rows.append(tuple(
            (1 if r == c else 0) - (rs.cartan_matrix[r][i] if c == i else 0) for c in range(n)
        ))
    return tuple(rows)


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(m, v):
    return tuple(sum(m[i][k] * v[k] for k in range(len(v))) for i in range(len(m)))


def _close_roots(cartan) -> Tuple[Tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    queue = deque(simple)
    while queue:
        x = queue.popleft()
        for i in range(n):
            c = sum(cartan[i][j] * x[j] for j in range(n))
            y = tuple(x[j] - (c if j == i else 0) for j in range(n))
            if y not in roots:
                roots.add(y)
                queue.append(y)
    pos = [r for r in roots if all(c >= 0 for c in r)]
    return tuple(sorted(pos, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def load_root_system(group: str) -> RootSystem:
    """Return the preset root system for ``group`` (one of A1, A2, C2, A3)."""
    try:
        cartan, lengths, note = _PRESETS[group]
    except KeyError:
        raise ValueError(
            f"unknown group {group!r}; supported groups: {', '.join(SUPPORTED_GROUPS)}"
        ) from None
    return RootSystem(group, cartan, lengths, note, _close_roots(cartan))


def fund_to_root(rs: RootSystem, w: Sequence[int]) -> RootVector:
    """Fundamental-basis weight to simple-root coordinates (solves ``A x = w``)."""
    if not any(w):
        return (0,) * rs.rank
    return _solve(rs.cartan_matrix, w)


def root_to_fund(rs: RootSystem, v: Sequence) -> Weight:
    """Simple-root coordinates to fundamental coordinates; rejects non-weights."""
    a = rs.cartan_matrix
    out = []
    for i in range(rs.rank):
        c = sum(a[i][j] * Fraction(v[j]) for j in range(rs.rank))
        if c.denominator != 1:
            raise ValueError(f"{tuple(v)} is not in the weight lattice of {rs.id}")
        out.append(c.numerator)
    return tuple(out)


def is_integral(v: Iterable) -> bool:
    return all(Fraction(c).denominator == 1 for c in v)


def height(v: Sequence) -> int:
    return _q(sum(Fraction(c) for c in v))


def weyl_orbit(rs: RootSystem, lam: Sequence[int]) -> frozenset:
    start = tuple(lam)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in range(rs.rank):
            y = rs.reflect(i, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def dominant_representative(rs: RootSystem, w: Sequence[int]) -> Weight:
    x = tuple(w)
    while True:
        for i, c in enumerate(x):
            if c < 0:
                x = rs.reflect(i, x)
                break
        else:
            return x


def is_dominant(w: Sequence[int]) -> bool:
    return all(c >= 0 for c in w)


def dominance_leq(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """``mu <= lam``: lam - mu is a nonnegative integral sum of simple roots."""
    diff = fund_to_root(rs, tuple(a - b for a, b in zip(lam, mu)))
    return all(isinstance(c, int) and c >= 0 for c in diff)


def kostant_partition_count(rs: RootSystem, v: Sequence) -> int:
    """Number of multisets of positive roots summing to the root-basis vector ``v``."""
    if not is_integral(v):
        raise ValueError(f"{tuple(v)} is not integral in the root basis")
    v = tuple(int(c) for c in v)
    if any(c < 0 for c in v):
        return 0
    return _kostant(rs.positive_roots, v)


@lru_cache(maxsize=None)
def _kostant(roots: Tuple[Tuple[int, ...], ...], v: Tuple[int, ...]) -> int:
    if not roots:
        return int(not any(v))
    head, rest = roots[0], roots[1:]
    total = 0
    x = v
    while all(c >= 0 for c in x):
        total += _kostant(rest, x)
        x = tuple(a - b for a, b in zip(x, head))
    return total


# ---------------------------------------------------------------- oracles

class _Freudenthal:
    """Memoized Freudenthal recursion for one highest weight."""

    def __init__(self, rs: RootSystem, lam: Weight):
        self.rs = rs
        self.lam = lam
        self.memo: Dict[Weight, int] = {lam: 1}
        lr = tuple(a + 1 for a in lam)
        self.norm_top = rs.inner(fund_to_root(rs, lr), fund_to_root(rs, lr))
        self.pos_fund = [root_to_fund(rs, r) for r in rs.positive_roots]

    def contains(self, mu: Weight) -> bool:
        dom = dominant_representative(self.rs, mu)
        return dominance_leq(self.rs, dom, self.lam)

    def mult(self, mu: Weight) -> int:
        if mu in self.memo:
            return self.memo[mu]
        if not self.contains(mu):
            return 0
        dom = dominant_representative(self.rs, mu)
        if dom != mu:
            m = self.mult(dom)
            self.memo[mu] = m
            return m
        rs = self.rs
        total = 0
        for root, root_f in zip(rs.positive_roots, self.pos_fund):
            k = 1
            while True:
                x = tuple(a + k * b for a, b in zip(mu, root_f))
                if not self.contains(x):
                    break
                m = self.mult(x)
                total += m * rs.pair_fund_root(x, root)
                k += 1
        mr = fund_to_root(rs, tuple(a + 1 for a in mu))
        denom = self.norm_top - rs.inner(mr, mr)
        value = Fraction(2 * total) / denom
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral Freudenthal value at {mu}")
        self.memo[mu] = int(value)
        return int(value)


@lru_cache(maxsize=None)
def _freudenthal(rs: RootSystem, lam: Weight) -> _Freudenthal:
    return _Freudenthal(rs, lam)


def _require_dominant(*weights):
    for w in weights:
        if not is_dominant(w):
            raise ValueError(f"weight {tuple(w)} is not dominant")


def freudenthal_multiplicity(rs: RootSystem, lam: Sequence[int], nu: Sequence[int]) -> int:
    lam, nu = tuple(lam), tuple(nu)
    _require_dominant(lam)
    return _freudenthal(rs, lam).mult(nu)


def weight_set(rs: RootSystem, lam: Sequence[int]) -> List[Weight]:
    """All weights of V_lam, reached from lam by lowering with simple roots."""
    lam = tuple(lam)
    _require_dominant(lam)
    seen = {lam}
    queue = deque([lam])
    while queue:
        x = queue.popleft()
        for col in rs.simple_roots_fund:
            y = tuple(a - b for a, b in zip(x, col))
            if y not in seen and dominance_leq(rs, dominant_representative(rs, y), lam):
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def freudenthal_character(rs: RootSystem, lam: Sequence[int]) -> Dict[Weight, int]:
    f = _freudenthal(rs, tuple(lam))
    return {w: f.mult(w) for w in weight_set(rs, lam)}


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = tuple(lam)
    _require_dominant(lam)
    lr = tuple(a + 1 for a in lam)
    value = Fraction(1)
    for root in rs.positive_roots:
        value *= Fraction(rs.pair_fund_root(lr, root)) / rs.pair_fund_root(rs.rho, root)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral Weyl dimension {value} for {lam}")
    return int(value)


def klimyk_tensor_multiplicity(rs: RootSystem, lam, mu, nu) -> int:
    """Brauer-Klimyk alternating sum for the multiplicity of V_nu in V_lam x V_mu."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    _require_dominant(lam, mu, nu)
    f = _freudenthal(rs, mu)
    nr = tuple(a + 1 for a in nu)
    total = 0
    for mat, sign in rs.weyl_group:
        img = _matvec(mat, nr)
        total += sign * f.mult(tuple(a - b - 1 for a, b in zip(img, lam)))
    if total < 0:
        raise ArithmeticError("negative Klimyk multiplicity")
    return total


def klimyk_decompose(rs: RootSystem, lam, mu) -> Dict[Weight, int]:
    """Full decomposition of V_lam x V_mu via the Brauer-Klimyk rule."""
    lam, mu = tuple(lam), tuple(mu)
    _require_dominant(lam, mu)
    out: Dict[Weight, int] = {}
    lr = tuple(a + 1 for a in lam)
    for eta, m in freudenthal_character(rs, mu).items():
        x = tuple(a + b for a, b in zip(lr, eta))
        sign = 1
        # walk x into the dominant chamber, tracking the sign
        while True:
            if any(c == 0 for c in x):
                sign = 0
                break
            neg = next((i for i, c in enumerate(x) if c < 0), None)
            if neg is None:
                break
            x = rs.reflect(neg, x)
            sign = -sign
        if sign:
            nu = tuple(c - 1 for c in x)
            out[nu] = out.get(nu, 0) + sign * m
    return {k: v for k, v in sorted(out.items()) if v}


def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> List[Weight]:
    return [w for w in weight_set(rs, lam) if is_dominant(w)]


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g
