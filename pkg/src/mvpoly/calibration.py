"""Table validation and the calibration search that produces shipped tables.

Calibration walks degrees in order of height.  At each degree it assigns the
generators living there and decides the relation edges between pairs whose
degrees add up to it, keeping every partial assignment for which

* the number of admissible monomials equals the Kostant partition number, and
* for every highest weight in the battery, the number of contained polytopes
  equals the Freudenthal multiplicity of the corresponding weight.

Both conditions at a degree only involve generators and edges of lower or
equal degree, so the search prunes level by level.  Survivors are finally
required to leave the Weyl-orbit-hull generators free of relations, checked
on full characters of the battery and on tensor product decompositions
(characters alone do not separate every C2 candidate), and finally reduced
modulo renamings of interchangeable generators.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import geometry as geo
from .geometry import Polytope
from .mvcalc import character, highest_vertex, lowest_vertex, shifted_weylgon, tensor_decompose
from .rootsys import (
    RootSystem,
    fund_to_root,
    freudenthal_character,
    freudenthal_multiplicity,
    klimyk_decompose,
    kostant_partition_count,
    load_root_system,
    root_to_fund,
)
from .tables import Generator, GeneratorTable, Monomial, generator_problems

log = logging.getLogger(__name__)

SHAPE_CLASSES = {
    # name: (affine dimension, vertex count, facet count or None)
    "segment": (1, 2, None),
    "triangle": (2, 3, None),
    "parallelogram": (2, 4, None),
    "tetrahedron": (3, 4, 4),
    "square_pyramid": (3, 5, 5),
    "octahedron": (3, 6, 8),
}


class CalibrationError(RuntimeError):
    """The search found no table, or more than one up to renaming."""

    def __init__(self, message, solutions=()):
        super().__init__(message)
        self.solutions = list(solutions)


# ------------------------------------------------------------------ helpers

def _neg(v):
    return tuple(-c for c in v)


def _height(v):
    return sum(v)


def degrees_up_to(rank: int, bound: int) -> List[Tuple[int, ...]]:
    """Nonnegative integer vectors of height 1..bound, ordered by (height, lex)."""
    out = [v for v in itertools.product(range(bound + 1), repeat=rank) if 0 < sum(v) <= bound]
    return sorted(out, key=lambda v: (sum(v), v))


def default_battery(rs: RootSystem, bound: int = 2) -> List[Tuple[int, ...]]:
    return sorted(itertools.product(range(bound + 1), repeat=rs.rank))


def default_tensor_battery(rs: RootSystem, bound: int = 2):
    ws = default_battery(rs, bound)
    return tuple((a, b) for a in ws for b in ws if a <= b)


def segment(rs: RootSystem, i: int) -> Polytope:
    end = tuple(-1 if j == i else 0 for j in range(rs.rank))
    return geo.convex_hull([(0,) * rs.rank, end])


def orbit_hull_generator(rs: RootSystem, weight: Tuple[int, ...]) -> Polytope:
    """``weylgon(weight) - weight``; its lowest vertex is ``w0(weight) - weight``."""
    return shifted_weylgon(rs, tuple(weight), _neg(weight))


def _root_parallel(rs: RootSystem, P: Polytope) -> bool:
    for a, b in geo.edges(P):
        d = tuple(x - y for x, y in zip(a, b))
        if not any(geo.is_parallel(d, r) for r in rs.positive_roots):
            return False
    return True


def _matches_class(P: Polytope, shape_class: Optional[str]) -> bool:
    if shape_class is None:
        return True
    dim, nverts, nfacets = SHAPE_CLASSES[shape_class]
    if P.dim_affine != dim or len(P.vertices) != nverts:
        return False
    return nfacets is None or len(P.facets) == nfacets


@lru_cache(maxsize=None)
def candidate_shapes(group: str, degree: Tuple[int, ...], shape_class: Optional[str] = None,
                     widen: int = 0) -> Tuple[Polytope, ...]:
    """Lattice polytopes in the box between ``degree`` and 0 (widened by ``widen``).

    A candidate has 0 and ``degree`` as its highest and lowest vertices under
    the generic functional, and every edge parallel to a root.
    """
    rs = load_root_system(group)
    origin = (0,) * rs.rank
    lo = [c - widen for c in degree]
    hi = [widen] * rs.rank
    box = [p for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi)))
           if p not in (origin, tuple(degree))]
    seen = set()
    for r in range(len(box) + 1):
        for subset in itertools.combinations(box, r):
            P = geo.convex_hull((origin, tuple(degree)) + subset)
            if P in seen:
                continue
            if origin not in P.vertices or tuple(degree) not in P.vertices:
                continue
            if highest_vertex(P) != origin or lowest_vertex(P) != tuple(degree):
                continue
            if not _matches_class(P, shape_class) or not _root_parallel(rs, P):
                continue
            seen.add(P)
    return tuple(sorted(seen, key=lambda P: P.vertices))


@lru_cache(maxsize=None)
def _msum(parts: Tuple[Polytope, ...]) -> Polytope:
    if len(parts) == 1:
        return parts[0]
    return geo.minkowski_sum(_msum(parts[:-1]), parts[-1])


def _mono_poly(shapes: Dict[str, Polytope], names, exps) -> Polytope:
    parts = []
    for n, e in zip(names, exps):
        parts.extend([shapes[n]] * e)
    parts.sort(key=lambda P: P.vertices)
    return _msum(tuple(parts))


def _exponent_vectors(degs: Sequence[Tuple[int, ...]], target: Tuple[int, ...]):
    """All exponent vectors with sum e_i * degs[i] == target (degrees positive)."""
    n = len(degs)
    out = []
    exps = [0] * n

    def rec(i, rest):
        if not any(rest):
            out.append(tuple(exps))
            return
        if i == n:
            return
        rec(i + 1, rest)
        r = rest
        k = 0
        while True:
            r = tuple(a - b for a, b in zip(r, degs[i]))
            if any(c < 0 for c in r):
                break
            k += 1
            exps[i] = k
            rec(i + 1, r)
        exps[i] = 0

    rec(0, target)
    return out


# ------------------------------------------------------------------ problem

@dataclass
class Unknown:
    name: str
    degree: Tuple[int, ...]
    shape_class: Optional[str] = None


@dataclass
class CalibrationProblem:
    group: str
    order: Tuple[str, ...]
    fixed: Dict[str, Generator]
    unknowns: List[Unknown]
    edges: Optional[FrozenSet[Tuple[str, str]]] = None
    edge_count: Optional[int] = None
    battery: Tuple[Tuple[int, ...], ...] = ()
    tensor_battery: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = ()
    central_orbit_hulls: bool = True
    height_bound: int = 8
    widen: int = 0
    provenance: Dict[str, str] = field(default_factory=dict)
    convention_note: str = ""

    def degree(self, name):
        if name in self.fixed:
            return self.fixed[name].degree
        return next(u.degree for u in self.unknowns if u.name == name)


@dataclass
class CalibrationResult:
    table: GeneratorTable
    solutions: List[GeneratorTable]
    stats: Dict[str, object]

    def certificate(self) -> str:
        s = self.stats
        lines = [
            f"group {self.table.group}: {len(self.solutions)} solution(s) up to renaming",
            f"  candidate shapes per unknown: {s['candidates']}",
            f"  partial assignments kept per level (nonzero only): {s['survivors']}",
            f"  survivors after level search: {s['level_survivors']}",
            f"  survivors with orbit-hull generators edge-free: {s['central_survivors']}",
            f"  survivors after full battery check: {s['battery_survivors']}",
            f"  survivors after tensor check ({s['tensor_battery']} pairs): {s['tensor_survivors']}",
            f"  renaming group order: {s['renamings']}",
            f"  battery: {len(s['battery'])} highest weights, degrees of height <= {s['height_bound']}",
        ]
        return "\n".join(lines)


def _pair(a, b, order):
    return (a, b) if order.index(a) < order.index(b) else (b, a)


def _renamings(problem: CalibrationProblem) -> List[Dict[str, str]]:
    """Permutations of interchangeable unknowns that preserve the fixed data."""
    groups: Dict[Tuple, List[str]] = {}
    for u in problem.unknowns:
        groups.setdefault((u.degree, u.shape_class), []).append(u.name)
    perms_per_group = [
        [dict(zip(names, p)) for p in itertools.permutations(names)] for names in groups.values()
    ]
    out = []
    for combo in itertools.product(*perms_per_group):
        mapping = {}
        for m in combo:
            mapping.update(m)
        if problem.edges is not None:
            img = {_pair(mapping.get(a, a), mapping.get(b, b), problem.order) for a, b in problem.edges}
            if img != set(problem.edges):
                continue
        out.append(mapping)
    return out


def calibrate(problem: CalibrationProblem) -> CalibrationResult:
    """Run the level-by-level search and return the unique table (up to renaming)."""
    rs = load_root_system(problem.group)
    order = problem.order
    degs = {n: _neg(problem.degree(n)) for n in order}
    unknown_by_deg: Dict[Tuple[int, ...], List[Unknown]] = {}
    for u in problem.unknowns:
        unknown_by_deg.setdefault(_neg(u.degree), []).append(u)
    cands = {
        u.name: candidate_shapes(problem.group, u.degree, u.shape_class, problem.widen)
        for u in problem.unknowns
    }
    search_edges = problem.edges is None
    levels = degrees_up_to(rs.rank, problem.height_bound)
    # every pair of distinct generators is decided at the level of its degree sum
    pairs_by_deg: Dict[Tuple[int, ...], List[Tuple[str, str]]] = {}
    for a, b in itertools.combinations(order, 2):
        s = tuple(x + y for x, y in zip(degs[a], degs[b]))
        pairs_by_deg.setdefault(s, []).append((a, b))
    if search_edges and any(sum(d) > problem.height_bound for d in pairs_by_deg):
        raise CalibrationError("height bound too small to decide every relation edge")
    hulls = {lam: shifted_weylgon(rs, lam, _neg(lam)) for lam in problem.battery}

    fixed_shapes = {n: g.polytope for n, g in problem.fixed.items()}
    # a state: (shapes, compatibility decisions)
    states: List[Tuple[Dict[str, Polytope], Dict[Tuple[str, str], bool]]] = []
    base_compat = {}
    if not search_edges:
        for a, b in itertools.combinations(order, 2):
            base_compat[(a, b)] = (a, b) not in problem.edges and (b, a) not in problem.edges
    states.append((dict(fixed_shapes), base_compat))

    interchangeable = {}
    if search_edges:
        for u in problem.unknowns:
            interchangeable.setdefault((u.degree, u.shape_class), []).append(u.name)

    survivors_log = []
    for d in levels:
        new_units = unknown_by_deg.get(d, [])
        new_pairs = pairs_by_deg.get(d, []) if search_edges else []
        involved = [n for n in order if all(x <= y for x, y in zip(degs[n], d))]
        vecs = _exponent_vectors([degs[n] for n in involved], d)
        k = kostant_partition_count(rs, d)
        targets = {}
        for lam in problem.battery:
            nu = tuple(a - b for a, b in zip(lam, root_to_fund(rs, d)))
            targets[lam] = freudenthal_multiplicity(rs, lam, nu)
        shape_options = _shape_options(new_units, cands, search_edges)
        next_states = []
        for shapes, compat in states:
            for shape_choice in shape_options:
                sh = dict(shapes)
                sh.update(shape_choice)
                for edge_choice in _edge_options(new_pairs, involved, vecs, compat, k):
                    cp = dict(compat)
                    cp.update(edge_choice)
                    if _level_ok(sh, cp, involved, vecs, k, hulls, targets):
                        next_states.append((sh, cp))
        states = next_states
        if new_units or new_pairs:
            survivors_log.append((d, len(states)))
        if not states:
            break

    level_survivors = len(states)
    tables = []
    for shapes, compat in states:
        edges = [p for p, ok in compat.items() if not ok]
        if problem.edge_count is not None and len(edges) != problem.edge_count:
            continue
        tables.append(_build_table(problem, shapes, edges))
    if problem.central_orbit_hulls:
        tables = [t for t in tables if not _orbit_hulls_on_edges(t, rs)]
    central_survivors = len(tables)
    tables = [t for t in tables if _battery_ok(t, rs, problem.battery)]
    battery_survivors = len(tables)
    tables = [t for t in tables if _tensor_ok(t, rs, problem.tensor_battery)]
    tensor_survivors = len(tables)
    renamings = _renamings(problem)
    canon = {}
    for t in tables:
        c = _canonical(t, problem, renamings)
        canon[_table_key(c)] = c
    solutions = [canon[k] for k in sorted(canon)]
    stats = {
        "candidates": {n: len(c) for n, c in cands.items()},
        "survivors": [(d, n) for d, n in survivors_log],
        "level_survivors": level_survivors,
        "central_survivors": central_survivors,
        "battery_survivors": battery_survivors,
        "tensor_survivors": tensor_survivors,
        "tensor_battery": len(problem.tensor_battery),
        "renamings": len(renamings),
        "battery": list(problem.battery),
        "height_bound": problem.height_bound,
    }
    if not solutions:
        raise CalibrationError(
            f"{problem.group}: no table passes (interval heuristic too tight at widen={problem.widen})"
        )
    if len(solutions) > 1:
        raise CalibrationError(
            f"{problem.group}: {len(solutions)} tables pass; ambiguity not resolved", solutions
        )
    return CalibrationResult(solutions[0], solutions, stats)


def _shape_options(new_units, cands, search_edges):
    if not new_units:
        return [{}]
    groups: Dict[Tuple, List[Unknown]] = {}
    for u in new_units:
        groups.setdefault(u.shape_class, []).append(u)
    per_group = []
    for units in groups.values():
        pool = cands[units[0].name]
        if search_edges:
            # names in a class are interchangeable: assign in increasing order
            combos = itertools.combinations(pool, len(units))
        else:
            combos = itertools.permutations(pool, len(units))
        per_group.append([dict(zip((u.name for u in units), c)) for c in combos])
    out = []
    for combo in itertools.product(*per_group):
        merged = {}
        for m in combo:
            merged.update(m)
        out.append(merged)
    return out


def _admissible(vec, involved, compat):
    support = [n for n, e in zip(involved, vec) if e]
    for i, a in enumerate(support):
        for b in support[i + 1:]:
            if not compat.get((a, b), compat.get((b, a), True)):
                return False
    return True


def _edge_options(new_pairs, involved, vecs, compat, kostant):
    if not new_pairs:
        yield {}
        return
    newset = set(new_pairs)
    base = 0
    for vec in vecs:
        support = [n for n, e in zip(involved, vec) if e]
        if len(support) == 2 and tuple(support) in newset and max(vec) == 1:
            continue
        if _admissible(vec, involved, compat):
            base += 1
    need = kostant - base
    if need < 0 or need > len(new_pairs):
        return
    for chosen in itertools.combinations(new_pairs, need):
        chosen = set(chosen)
        yield {p: p in chosen for p in new_pairs}


def _level_ok(shapes, compat, involved, vecs, kostant, hulls, targets) -> bool:
    polys = []
    for vec in vecs:
        if _admissible(vec, involved, compat):
            polys.append(_mono_poly(shapes, involved, vec))
    if len(polys) != kostant:
        return False
    if len(set(polys)) != len(polys):
        return False
    for lam, hull in hulls.items():
        count = sum(1 for P in polys if geo.contains(hull, P))
        if count != targets[lam]:
            return False
    return True


def _build_table(problem, shapes, edges, check=False) -> GeneratorTable:
    gens = []
    for n in problem.order:
        prov = problem.provenance.get(n) or (problem.fixed[n].provenance if n in problem.fixed else "")
        gens.append(Generator(n, problem.degree(n), shapes[n], prov))
    return GeneratorTable(problem.group, gens, edges, problem.convention_note, check=check)


def _battery_ok(t: GeneratorTable, rs, battery) -> bool:
    for lam in battery:
        if character(t, rs, lam) != freudenthal_character(rs, lam):
            return False
    return True


def fundamental_orbit_hulls(rs: RootSystem) -> List[Polytope]:
    out = []
    for i in range(rs.rank):
        w = tuple(1 if j == i else 0 for j in range(rs.rank))
        out.append(orbit_hull_generator(rs, w))
    return out


def _orbit_hulls_on_edges(t: GeneratorTable, rs) -> List[str]:
    # a shifted Weyl polytope added to an MV polytope is again one, so these
    # generators multiply freely with everything
    hulls = set(fundamental_orbit_hulls(rs))
    central = {g.name for g in t.generators if g.polytope in hulls}
    return sorted({n for e in t.incompat_edges for n in e if n in central})


def _tensor_ok(t: GeneratorTable, rs, pairs) -> bool:
    for lam, mu in pairs:
        if tensor_decompose(t, rs, lam, mu) != klimyk_decompose(rs, lam, mu):
            return False
    return True


def _table_key(t: GeneratorTable):
    return tuple(g.polytope.vertices for g in t.generators), t.incompat_edges


def _canonical(t: GeneratorTable, problem, renamings) -> GeneratorTable:
    best = None
    for mapping in renamings:
        inv = {v: k for k, v in mapping.items()}
        shapes = {n: t.generator(inv.get(n, n)).polytope for n in problem.order}
        edges = [_pair(mapping.get(a, a), mapping.get(b, b), problem.order) for a, b in t.incompat_edges]
        cand = _build_table(problem, shapes, edges)
        if best is None or _table_key(cand) < _table_key(best):
            best = cand
    return best


# ------------------------------------------------------------- validation

@dataclass
class ValidationReport:
    group: str
    height_bound: int
    coords_bound: int
    checks: Dict[str, List[str]] = field(default_factory=dict)
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    def failures(self) -> List[str]:
        return [f"{name}: {msg}" for name, msgs in self.checks.items() for msg in msgs]

    def summary(self) -> str:
        lines = [f"table {self.group}: heights <= {self.height_bound}, highest weights with coords <= {self.coords_bound}"]
        for name, msgs in self.checks.items():
            status = "ok" if not msgs else f"FAIL ({len(msgs)})"
            extra = f" [{self.counts[name]} checked]" if name in self.counts else ""
            lines.append(f"  {name:<22} {status}{extra}")
            for m in msgs[:10]:
                lines.append(f"    - {m}")
        return "\n".join(lines)


def validate_table(t: GeneratorTable, height_bound: int = 8, coords_bound: int = 2) -> ValidationReport:
    """Kostant counts, polytope invariants and Freudenthal agreement for a table."""
    rs = load_root_system(t.group)
    rep = ValidationReport(t.group, height_bound, coords_bound)
    for name in ("generators", "kostant_count", "extreme_vertices", "root_edges",
                 "lattice_vertices", "injectivity", "freudenthal"):
        rep.checks[name] = []
    for g in t.generators:
        rep.checks["generators"].extend(generator_problems(t.group, g))
    n_polys = 0
    roots = rs.positive_roots
    edge_ok: Dict[Tuple, bool] = {}
    for d in degrees_up_to(rs.rank, height_bound):
        nu = _neg(d)
        monos = _monomials(t, d)
        k = kostant_partition_count(rs, d)
        if len(monos) != k:
            rep.checks["kostant_count"].append(f"degree {nu}: {len(monos)} monomials, Kostant {k}")
        seen = {}
        for m in monos:
            P = t.polytope_of(m.exponents)
            n_polys += 1
            if highest_vertex(P) != (0,) * rs.rank or lowest_vertex(P) != nu:
                rep.checks["extreme_vertices"].append(f"{m}: {P}")
            if not all(isinstance(c, int) for v in P.vertices for c in v):
                rep.checks["lattice_vertices"].append(f"{m}: {P}")
            for a, b in geo.edges(P):
                dv = tuple(x - y for x, y in zip(a, b))
                if dv not in edge_ok:
                    edge_ok[dv] = any(geo.is_parallel(dv, r) for r in roots)
                if not edge_ok[dv]:
                    rep.checks["root_edges"].append(f"{m}: edge {a}-{b}")
                    break
            if P in seen:
                rep.checks["injectivity"].append(f"degree {nu}: {seen[P]} and {m} coincide")
            seen[P] = m
    rep.counts["kostant_count"] = len(degrees_up_to(rs.rank, height_bound))
    rep.counts["extreme_vertices"] = n_polys
    battery = default_battery(rs, coords_bound)
    for lam in battery:
        mine = character(t, rs, lam)
        ref = freudenthal_character(rs, lam)
        if mine != ref:
            diff = sorted(w for w in set(mine) | set(ref) if mine.get(w, 0) != ref.get(w, 0))
            rep.checks["freudenthal"].append(
                f"lambda={lam}: differs at {len(diff)} weights, e.g. {diff[0]}: "
                f"{mine.get(diff[0], 0)} vs {ref.get(diff[0], 0)}"
            )
    rep.counts["freudenthal"] = len(battery)
    return rep


def _monomials(t: GeneratorTable, d) -> List[Monomial]:
    from .mvcalc import admissible_monomials

    return admissible_monomials(t, _neg(d))


# --------------------------------------------------------- seed problems

CONVENTION_NOTES = {
    "A1": "Simple-root coordinates; a spans [-alpha, 0].",
    "A2": "Simple-root coordinates; Kac Cartan matrix A[i][j] = <alpha_i^vee, alpha_j>.",
    "C2": (
        "Simple-root coordinates with alpha1 long and alpha2 short, Cartan matrix "
        "[[2, -1], [-2, 2]]; omega1 = alpha1 + alpha2, omega2 = alpha1/2 + alpha2."
    ),
    "A3": "Simple-root coordinates; Kac Cartan matrix A[i][j] = <alpha_i^vee, alpha_j>.",
}

_SEGMENT_NOTE = "fixed: segment from 0 to minus a simple root"
_SEARCH_NOTE = (
    "derived by calibration search; monomial counts match Kostant partition numbers, "
    "characters match Freudenthal and tensor products match Klimyk on the battery"
)


def _fixed(name, degree, polytope, note):
    return Generator(name, tuple(degree), polytope, note)


def problem_for(group: str) -> CalibrationProblem:
    """The calibration problem whose unique solution is the shipped table."""
    rs = load_root_system(group)
    seg = {f"a{i + 1}": segment(rs, i) for i in range(rs.rank)}
    if group == "A1":
        fixed = {"a": _fixed("a", (-1,), segment(rs, 0), _SEGMENT_NOTE)}
        return CalibrationProblem(
            group, ("a",), fixed, [], edges=frozenset(), battery=tuple((k,) for k in range(4)),
            convention_note=CONVENTION_NOTES[group],
        )
    if group == "A2":
        fixed = {n: _fixed(n, P.vertices[0], P, _SEGMENT_NOTE) for n, P in seg.items()}
        unknowns = [Unknown("b1", (-1, -1)), Unknown("b2", (-1, -1))]
        return CalibrationProblem(
            group, ("a1", "a2", "b1", "b2"), fixed, unknowns,
            edges=frozenset({("a1", "a2")}), battery=tuple(default_battery(rs, 2)),
            tensor_battery=default_tensor_battery(rs, 2),
            provenance={"b1": _SEARCH_NOTE, "b2": _SEARCH_NOTE},
            convention_note=CONVENTION_NOTES[group],
        )
    if group == "C2":
        fixed = {n: _fixed(n, P.vertices[0], P, _SEGMENT_NOTE) for n, P in seg.items()}
        c3 = orbit_hull_generator(rs, (0, 1))
        d1 = orbit_hull_generator(rs, (1, 0))
        fixed["c3"] = _fixed("c3", lowest_vertex(c3), c3, "fixed: Weyl-orbit hull of omega2 shifted by -omega2")
        fixed["d1"] = _fixed("d1", lowest_vertex(d1), d1, "fixed: Weyl-orbit hull of omega1 shifted by -omega1")
        unknowns = [
            Unknown("b1", (-1, -1)), Unknown("b2", (-1, -1)),
            Unknown("c1", (-1, -2)), Unknown("c2", (-1, -2)),
        ]
        edges = frozenset({
            ("a1", "a2"), ("a1", "c1"), ("a1", "c2"), ("a2", "b1"), ("a2", "b2"),
            ("b1", "b2"), ("b1", "c2"), ("b2", "c1"), ("c1", "c2"),
        })
        return CalibrationProblem(
            group, ("a1", "a2", "b1", "b2", "c1", "c2", "c3", "d1"), fixed, unknowns,
            edges=edges, battery=tuple(default_battery(rs, 2)),
            tensor_battery=default_tensor_battery(rs, 2),
            provenance={n: _SEARCH_NOTE for n in ("b1", "b2", "c1", "c2")},
            convention_note=CONVENTION_NOTES[group],
        )
    if group == "A3":
        fixed = {n: _fixed(n, P.vertices[0], P, _SEGMENT_NOTE) for n, P in seg.items()}
        d1 = orbit_hull_generator(rs, (0, 1, 0))
        fixed["d1"] = _fixed("d1", lowest_vertex(d1), d1, "fixed: Weyl-orbit hull of omega2 shifted by -omega2")
        unknowns = [
            Unknown("b1", (-1, -1, 0), "triangle"), Unknown("b2", (-1, -1, 0), "triangle"),
            Unknown("b3", (0, -1, -1), "triangle"), Unknown("b4", (0, -1, -1), "triangle"),
            Unknown("c1", (-1, -1, -1), "square_pyramid"), Unknown("c2", (-1, -1, -1), "square_pyramid"),
            Unknown("c3", (-1, -1, -1), "tetrahedron"), Unknown("c4", (-1, -1, -1), "tetrahedron"),
        ]
        order = ("a1", "a2", "a3", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4", "d1")
        return CalibrationProblem(
            group, order, fixed, unknowns, edges=None, edge_count=15,
            battery=tuple(default_battery(rs, 2)),
            tensor_battery=default_tensor_battery(rs, 2),
            provenance={u.name: _SEARCH_NOTE for u in unknowns},
            convention_note=CONVENTION_NOTES[group],
        )
    raise ValueError(f"unknown group {group!r}")


def calibrate_group(group: str, widen_limit: int = 1) -> CalibrationResult:
    """Calibrate ``group``, widening the candidate region once if it is empty."""
    problem = problem_for(group)
    while True:
        try:
            return calibrate(problem)
        except CalibrationError as exc:
            if exc.solutions or problem.widen >= widen_limit:
                raise
            problem.widen += 1
            log.info("widening candidate region to %d", problem.widen)


def calibrate_shapes(group: str, unknowns: Iterable[str], battery=None) -> GeneratorTable:
    """Recover the named unknown generator polytopes with degrees and edges fixed."""
    problem = problem_for(group)
    keep = set(unknowns)
    if problem.edges is None:
        raise ValueError(f"{group}: relation graph is not fixed; use calibrate_structure")
    if not keep <= {u.name for u in problem.unknowns} | set(problem.fixed):
        raise ValueError(f"unknown generator names {sorted(keep - set(problem.order))}")
    if not keep and not problem.unknowns:
        return _build_table(problem, {n: g.polytope for n, g in problem.fixed.items()}, problem.edges)
    shipped = None
    dropped = [u for u in problem.unknowns if u.name not in keep]
    if dropped:
        shipped = calibrate(problem_for(group)).table
        for u in dropped:
            g = shipped.generator(u.name)
            problem.fixed[u.name] = g
        problem.unknowns = [u for u in problem.unknowns if u.name in keep]
    if battery is not None:
        problem.battery = tuple(tuple(b) for b in battery)
        if not problem.battery:
            raise ValueError("battery must be nonempty")
    return calibrate(problem).table


def calibrate_structure(group: str = "A3", shape_classes=None, battery=None) -> GeneratorTable:
    """Joint search over shapes and the relation graph (A3)."""
    problem = problem_for(group)
    if shape_classes:
        for u in problem.unknowns:
            if u.name in shape_classes:
                u.shape_class = shape_classes[u.name]
    if battery is not None:
        problem.battery = tuple(tuple(b) for b in battery)
    return calibrate(problem).table
