"""Batteries comparing polytope counts with the classical oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from . import figures
from . import geometry as geo
from .calibration import validate_table
from .hopf import DEFAULT_CONVENTION, verify_hopf
from .mvcalc import (
    admissible_monomials,
    character,
    dimension_identity,
    tensor_decompose,
    tensor_multiplicity,
    tensor_witnesses,
    weight_count,
    weight_multiplicity,
    weylgon,
)
from .rootsys import (
    freudenthal_character,
    fund_to_root,
    klimyk_decompose,
    kostant_partition_count,
    load_root_system,
)
from .tables import GeneratorTable


def dominant_box(rank: int, bound: int):
    return sorted(itertools.product(range(bound + 1), repeat=rank))


def weight_oracle_failures(t: GeneratorTable, bound: int) -> List[str]:
    rs = load_root_system(t.group)
    out = []
    for lam in dominant_box(rs.rank, bound):
        mine, ref = character(t, rs, lam), freudenthal_character(rs, lam)
        for w in sorted(set(mine) | set(ref)):
            if mine.get(w, 0) != ref.get(w, 0):
                out.append(f"lambda={lam} nu={w}: polytopes {mine.get(w, 0)}, Freudenthal {ref.get(w, 0)}")
    return out


def tensor_oracle_failures(t: GeneratorTable, bound: int) -> List[str]:
    rs = load_root_system(t.group)
    out = []
    box = dominant_box(rs.rank, bound)
    for lam in box:
        for mu in box:
            mine, ref = tensor_decompose(t, rs, lam, mu), klimyk_decompose(rs, lam, mu)
            for nu in sorted(set(mine) | set(ref)):
                if mine.get(nu, 0) != ref.get(nu, 0):
                    out.append(f"{lam} x {mu} -> {nu}: polytopes {mine.get(nu, 0)}, Klimyk {ref.get(nu, 0)}")
            if not dimension_identity(rs, lam, mu, mine):
                out.append(f"{lam} x {mu}: dimension identity fails")
    return out


def bound_chain_failures(t: GeneratorTable, bound: int):
    """Check tensor <= weight <= Kostant over triples with coordinates <= bound.

    Returns (failures, number of triples checked).
    """
    rs = load_root_system(t.group)
    out = []
    n = 0
    box = dominant_box(rs.rank, bound)
    for lam in box:
        for mu in box:
            for nu in box:
                delta = fund_to_root(rs, tuple(a + b - c for a, b, c in zip(lam, mu, nu)))
                if not all(isinstance(c, int) and c >= 0 for c in delta):
                    continue
                n += 1
                tm = tensor_multiplicity(t, rs, lam, mu, nu)
                # lam - delta, written in fundamental coordinates, is nu - mu
                wm = weight_multiplicity(t, rs, lam, tuple(c - b for b, c in zip(mu, nu)))
                k = kostant_partition_count(rs, delta)
                if not tm <= wm <= k:
                    out.append(f"lambda={lam} mu={mu} nu={nu}: {tm} <= {wm} <= {k} fails")
    return out, n


@dataclass
class SuiteReport:
    group: str
    sections: Dict[str, List[str]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(self.sections.values())

    def summary(self) -> str:
        lines = []
        lines.extend(self.notes)
        for name, msgs in self.sections.items():
            lines.append(f"{name:<24} {'ok' if not msgs else f'FAIL ({len(msgs)})'}")
            lines.extend(f"    - {m}" for m in msgs[:10])
        lines.append(f"verify {self.group}: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def run_suite(t: GeneratorTable, height: int = 8, coords: int = 2, hopf: bool = False,
              convention: str = DEFAULT_CONVENTION, tensor_coords: Optional[int] = None) -> SuiteReport:
    rep = SuiteReport(t.group)
    v = validate_table(t, height, coords)
    rep.notes.append(v.summary())
    rep.sections["table invariants"] = v.failures()
    tc = coords if tensor_coords is None else tensor_coords
    rep.sections["tensor vs Klimyk"] = tensor_oracle_failures(t, tc)
    fails, n = bound_chain_failures(t, tc)
    rep.sections["tensor<=weight<=Kostant"] = fails
    rep.notes.append(f"tensor battery: dominant weights with coords <= {tc}; {n} triples in the chain check")
    if hopf:
        h = verify_hopf(t, convention=convention)
        rep.notes.append(h.summary())
        rep.sections["hopf"] = h.failures()
    return rep


# ------------------------------------------------------- example searches

def find_weight_examples(t: GeneratorTable, bound: int, total: int, contained: int):
    """All (lambda, nu) with ``total`` polytopes at the degree and ``contained`` inside."""
    rs = load_root_system(t.group)
    out = []
    for lam in dominant_box(rs.rank, bound):
        for nu in sorted(freudenthal_character(rs, lam)):
            inside, n, excluded = weight_count(t, rs, lam, nu)
            if n == total and inside == contained:
                out.append((lam, nu, excluded))
    return out


def find_tensor_examples(t: GeneratorTable, bound: int, witnesses: List[str]):
    """Pairs whose decomposition is multiplicity free except for one summand of
    multiplicity 2 counted by exactly the monomials ``witnesses``."""
    rs = load_root_system(t.group)
    want = sorted(witnesses)
    out = []
    box = dominant_box(rs.rank, bound)
    for lam in box:
        for mu in box:
            dec = tensor_decompose(t, rs, lam, mu)
            doubles = [nu for nu, n in dec.items() if n == 2]
            if len(doubles) != 1 or any(n > 2 for n in dec.values()):
                continue
            nu = doubles[0]
            wit = sorted(str(m) for m in tensor_witnesses(t, rs, lam, mu, nu))
            if wit == want:
                out.append((lam, mu, nu, dec))
    return out


def weight_example_figure(t: GeneratorTable, lam, nu, projection: str = "euclid") -> str:
    """SVG of every polytope at degree ``nu - lam`` placed in the orbit hull of ``lam``."""
    rs = load_root_system(t.group)
    shift = fund_to_root(rs, lam)
    degree = fund_to_root(rs, tuple(b - a for a, b in zip(lam, nu)))
    hull = weylgon(rs, tuple(lam))
    placed = []
    for m in admissible_monomials(t, degree):
        P = geo.translate(t.polytope_of(m.exponents), shift)
        placed.append((str(m), P, geo.contains(hull, P), fund_to_root(rs, nu)))
    title = f"{t.group}: lambda={lam}, nu={nu}, multiplicity {sum(1 for p in placed if p[2])} of {len(placed)}"
    return figures.multiplicity_svg(rs, hull, placed, projection, title)
