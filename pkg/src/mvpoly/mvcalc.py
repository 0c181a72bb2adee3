"""Counting multiplicities with MV polytopes.

Every MV polytope of a table is the Minkowski sum of the generator polytopes
named by an admissible monomial.  Weight multiplicities count the polytopes of
one degree that fit inside the shifted Weyl-orbit hull of the highest weight;
tensor multiplicities additionally require containment in a translated hull of
``-mu``.  All geometry is done in simple-root coordinates, where the relevant
polytopes are lattice polytopes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from . import geometry as geo
from .geometry import Polytope
from .rootsys import (
    RootSystem,
    Weight,
    fund_to_root,
    is_dominant,
    kostant_partition_count,
    load_root_system,
    root_to_fund,
    weyl_dimension,
    weyl_orbit,
)
from .tables import GeneratorTable, Monomial


class InvariantViolation(RuntimeError):
    """A generated polytope breaks an MV-polytope invariant (table bug)."""


def _neg(v):
    return tuple(-c for c in v)


def _check_lattice_degree(nu: Sequence) -> Tuple[int, ...]:
    nu = geo.as_point(nu)
    if not all(isinstance(c, int) and c <= 0 for c in nu):
        raise ValueError(f"degree {nu} is not in the negative root semigroup")
    return nu


def admissible_monomials(t: GeneratorTable, nu: Sequence) -> List[Monomial]:
    """Admissible monomials of degree ``nu`` (root coordinates, all <= 0).

    Sorted by exponent vector, largest first, so earlier generators lead.
    """
    nu = _check_lattice_degree(nu)
    if len(nu) != t.rank:
        raise ValueError("degree has wrong length for this table")
    return sorted(_monomials_of_degree(t, _neg(nu)), key=lambda m: m.exponents, reverse=True)


def _monomials_of_degree(t: GeneratorTable, target: Tuple[int, ...]) -> Iterator[Monomial]:
    gens = t.generators
    degs = [_neg(g.degree) for g in gens]
    n = len(gens)
    exps = [0] * n

    def rec(i, rest, support):
        if not any(rest):
            yield Monomial.from_exponents(t, exps)
            return
        if i == n:
            return
        yield from rec(i + 1, rest, support)
        d = degs[i]
        if not t.compatible_with_all(i, support):
            return
        k = 0
        r = rest
        while True:
            r = tuple(a - b for a, b in zip(r, d))
            if any(c < 0 for c in r):
                break
            k += 1
            exps[i] = k
            yield from rec(i + 1, r, support + (i,))
        exps[i] = 0

    yield from rec(0, target, ())


def monomial_polytope(t: GeneratorTable, m: Monomial) -> Polytope:
    """Minkowski sum of the generator polytopes, one summand per factor."""
    if not t.is_admissible(m):
        raise ValueError(f"monomial {m} is not admissible for {t.group}")
    return t.polytope_of(m.exponents)


@dataclass(frozen=True)
class MVPolytopeSet:
    degree: Tuple[int, ...]
    entries: Tuple[Tuple[Monomial, Polytope], ...]

    def __len__(self):
        return len(self.entries)

    def polytopes(self) -> List[Polytope]:
        return [p for _, p in self.entries]


def lowest_vertex(P: Polytope):
    """Minimum under height, ties broken lexicographically (generic functional)."""
    return min(P.vertices, key=lambda v: (sum(v), v))


def highest_vertex(P: Polytope):
    return max(P.vertices, key=lambda v: (sum(v), v))


def mv_polytopes(t: GeneratorTable, nu: Sequence) -> MVPolytopeSet:
    nu = _check_lattice_degree(nu)
    entries = []
    seen = {}
    for m in admissible_monomials(t, nu):
        P = t.polytope_of(m.exponents)
        if highest_vertex(P) != (0,) * t.rank or lowest_vertex(P) != nu:
            raise InvariantViolation(f"{m}: extreme vertices of {P} do not match degree {nu}")
        if P in seen:
            raise InvariantViolation(f"{m} and {seen[P]} give the same polytope {P}")
        seen[P] = m
        entries.append((m, P))
    return MVPolytopeSet(nu, tuple(entries))


# ----------------------------------------------------------------- orbit hulls

@lru_cache(maxsize=None)
def weylgon(rs: RootSystem, lam: Tuple[int, ...]) -> Polytope:
    """Convex hull of the Weyl orbit of ``lam`` in root coordinates."""
    return geo.convex_hull(fund_to_root(rs, w) for w in weyl_orbit(rs, tuple(lam)))


@lru_cache(maxsize=None)
def shifted_weylgon(rs: RootSystem, lam: Tuple[int, ...], shift: Tuple[int, ...]) -> Polytope:
    """``weylgon(lam) + shift`` with ``shift`` a fundamental-basis weight."""
    return geo.translate(weylgon(rs, lam), fund_to_root(rs, shift))


def _lower_hull(rs, lam):
    # weylgon(lam) - lam: integral, highest vertex at the origin
    return shifted_weylgon(rs, lam, _neg(lam))


def _tensor_hull(rs, lam, mu, nu):
    # weylgon(-mu) + nu - lam
    return shifted_weylgon(rs, _neg(mu), tuple(a - b for a, b in zip(nu, lam)))


def _root_system(t: GeneratorTable, rs):
    return rs if rs is not None else load_root_system(t.group)


def _require_dominant(*ws):
    for w in ws:
        if not is_dominant(w):
            raise ValueError(f"weight {tuple(w)} is not dominant")


def _degree_between(rs, upper, lower):
    """Root coordinates of ``lower - upper`` if it lies in the negative semigroup."""
    d = fund_to_root(rs, tuple(a - b for a, b in zip(lower, upper)))
    if all(isinstance(c, int) and c <= 0 for c in d):
        return d
    return None


def weight_multiplicity(t: GeneratorTable, rs, lam, nu) -> int:
    """Number of polytopes of degree ``nu - lam`` that, shifted by ``lam``, lie in weylgon(lam)."""
    return weight_count(t, rs, lam, nu)[0]


def weight_count(t: GeneratorTable, rs, lam, nu):
    """``(contained, total, excluded monomials)`` at the degree ``nu - lam``."""
    rs = _root_system(t, rs)
    lam, nu = tuple(lam), tuple(nu)
    _require_dominant(lam)
    d = _degree_between(rs, lam, nu)
    if d is None:
        return 0, 0, []
    hull = _lower_hull(rs, lam)
    inside, excluded = 0, []
    monos = admissible_monomials(t, d)
    for m in monos:
        if geo.contains(hull, t.polytope_of(m.exponents)):
            inside += 1
        else:
            excluded.append(m)
    return inside, len(monos), excluded


def contained_monomials(t: GeneratorTable, hull: Polytope) -> Iterator[Tuple[Monomial, Polytope]]:
    """All admissible monomials whose polytope lies in ``hull``.

    Depth-first over exponent vectors; a branch is cut as soon as its polytope
    leaves the hull, which is sound because adding a factor only enlarges the
    Minkowski sum (every generator polytope contains the origin).
    """
    gens = t.generators
    n = len(gens)
    exps = [0] * n

    def rec(start, support):
        for j in range(start, n):
            if not t.compatible_with_all(j, support):
                continue
            exps[j] += 1
            P = t.polytope_of(tuple(exps))
            if geo.contains(hull, P):
                yield Monomial.from_exponents(t, exps), P
                yield from rec(j, support if j in support else support + (j,))
            exps[j] -= 1

    origin = geo.point_polytope((0,) * t.rank)
    if geo.contains(hull, origin):
        yield Monomial.from_exponents(t, exps), origin
        yield from rec(0, ())


def character(t: GeneratorTable, rs, lam) -> Dict[Weight, int]:
    """Weight multiplicities of V_lam, aggregated over every contained polytope."""
    rs = _root_system(t, rs)
    lam = tuple(lam)
    _require_dominant(lam)
    out: Counter = Counter()
    for m, _ in contained_monomials(t, _lower_hull(rs, lam)):
        out[tuple(a + b for a, b in zip(lam, root_to_fund(rs, t.degree_of(m.exponents))))] += 1
    return dict(sorted(out.items()))


def tensor_multiplicity(t: GeneratorTable, rs, lam, mu, nu) -> int:
    rs = _root_system(t, rs)
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    _require_dominant(lam, mu, nu)
    d = _degree_between(rs, tuple(a + b for a, b in zip(lam, mu)), nu)
    if d is None:
        return 0
    h1 = _lower_hull(rs, lam)
    h2 = _tensor_hull(rs, lam, mu, nu)
    count = 0
    for m in admissible_monomials(t, d):
        P = t.polytope_of(m.exponents)
        if geo.contains(h1, P) and geo.contains(h2, P):
            count += 1
    return count


def tensor_witnesses(t: GeneratorTable, rs, lam, mu, nu) -> List[Monomial]:
    """The monomials counted by :func:`tensor_multiplicity`."""
    rs = _root_system(t, rs)
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    d = _degree_between(rs, tuple(a + b for a, b in zip(lam, mu)), nu)
    if d is None:
        return []
    h1 = _lower_hull(rs, lam)
    h2 = _tensor_hull(rs, lam, mu, nu)
    return [
        m for m in admissible_monomials(t, d)
        if geo.contains(h1, t.polytope_of(m.exponents)) and geo.contains(h2, t.polytope_of(m.exponents))
    ]


def tensor_decompose(t: GeneratorTable, rs, lam, mu) -> Dict[Weight, int]:
    """Multiplicities of every V_nu in V_lam x V_mu, keyed by dominant nu."""
    rs = _root_system(t, rs)
    lam, mu = tuple(lam), tuple(mu)
    _require_dominant(lam, mu)
    top = tuple(a + b for a, b in zip(lam, mu))
    out: Counter = Counter()
    for m, P in contained_monomials(t, _lower_hull(rs, lam)):
        nu = tuple(a + b for a, b in zip(top, root_to_fund(rs, t.degree_of(m.exponents))))
        if is_dominant(nu) and geo.contains(_tensor_hull(rs, lam, mu, nu), P):
            out[nu] += 1
    return dict(sorted(out.items()))


def bound_chain(t: GeneratorTable, rs, lam, mu, delta):
    """``(tensor mult of lam+mu-delta, weight mult of lam-delta, Kostant(delta))``.

    ``delta`` is a root-basis vector with nonnegative integer entries.  Raises
    ``AssertionError`` if the chain of inequalities fails.
    """
    rs = _root_system(t, rs)
    lam, mu = tuple(lam), tuple(mu)
    _require_dominant(lam, mu)
    delta = geo.as_point(delta)
    if not all(isinstance(c, int) and c >= 0 for c in delta):
        raise ValueError(f"delta {delta} must be a nonnegative integral root combination")
    dfund = root_to_fund(rs, delta)
    nu = tuple(a + b - c for a, b, c in zip(lam, mu, dfund))
    if not is_dominant(nu):
        raise ValueError(f"lam + mu - delta = {nu} is not dominant")
    tm = tensor_multiplicity(t, rs, lam, mu, nu)
    wm = weight_multiplicity(t, rs, lam, tuple(a - c for a, c in zip(lam, dfund)))
    k = kostant_partition_count(rs, delta)
    assert tm <= wm <= k, (tm, wm, k)
    return tm, wm, k


def dimension_identity(rs: RootSystem, lam, mu, decomposition: Dict[Weight, int]) -> bool:
    lhs = sum(n * weyl_dimension(rs, nu) for nu, n in decomposition.items())
    return lhs == weyl_dimension(rs, lam) * weyl_dimension(rs, mu)
