"""The Sp4 antipode and coproduct on generators, and checks against the C2 table.

A coproduct term ``k x_i (x) x_j'`` is checked geometrically by placing the
polytope of ``x_i`` at the origin and hanging the polytope of ``x_j'`` from
the weight ``degree(x_i)``.  Two placements are offered for the second
factor: ``"translate"`` shifts the ordinary polytope of ``x_j'`` by
``degree(x_i)``; ``"reflect"`` point-reflects it and shifts it so that its
lowest vertex lands on ``degree(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import geometry as geo
from .geometry import Polytope
from .tables import GeneratorTable, Monomial

CONVENTIONS = ("translate", "reflect")
DEFAULT_CONVENTION = "translate"

Word = Tuple[Tuple[str, int], ...]  # sorted (generator name, exponent) pairs; () is 1


def parse_word(text: str) -> Word:
    """``"a2^2"`` -> ``(("a2", 2),)``; ``"1"`` -> ``()``."""
    exps: Dict[str, int] = {}
    for tok in text.split():
        if tok == "1":
            continue
        name, _, power = tok.partition("^")
        exps[name] = exps.get(name, 0) + (int(power) if power else 1)
    return tuple(sorted(exps.items()))


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(n if e == 1 else f"{n}^{e}" for n, e in w)


def _mul(u: Word, v: Word) -> Word:
    exps = dict(u)
    for n, e in v:
        exps[n] = exps.get(n, 0) + e
    return tuple(sorted(exps.items()))


@dataclass(frozen=True)
class TensorTerm:
    coefficient: int
    left: Word
    right: Word

    def __str__(self):
        k = "" if self.coefficient == 1 else f"{self.coefficient} "
        return f"{k}{format_word(self.left)} (x) {format_word(self.right)}"


@dataclass(frozen=True)
class HopfRow:
    antipode_sign: int
    antipode: Word
    coproduct: Tuple[TensorTerm, ...]


@dataclass(frozen=True)
class HopfTable:
    group: str
    rows: Dict[str, HopfRow]

    def names(self) -> List[str]:
        return list(self.rows)

    def with_row(self, name: str, row: HopfRow) -> "HopfTable":
        rows = dict(self.rows)
        rows[name] = row
        return HopfTable(self.group, rows)


def _row(sign: int, antipode: str, terms: Sequence[Tuple[int, str, str]]) -> HopfRow:
    return HopfRow(sign, parse_word(antipode), tuple(TensorTerm(k, parse_word(a), parse_word(b)) for k, a, b in terms))


def sp4_hopf_table() -> HopfTable:
    """Antipode and coproduct of the Sp4 generators, row by row."""
    rows = {
        "1": _row(1, "1", [(1, "1", "1")]),
        "a1": _row(-1, "a1", [(1, "a1", "1"), (1, "1", "a1")]),
        "a2": _row(-1, "a2", [(1, "a2", "1"), (1, "1", "a2")]),
        "b1": _row(1, "b2", [(1, "b1", "1"), (1, "a1", "a2"), (1, "1", "b1")]),
        "b2": _row(1, "b1", [(1, "b2", "1"), (1, "a2", "a1"), (1, "1", "b2")]),
        "c1": _row(-1, "c2", [(1, "c1", "1"), (2, "b1", "a2"), (1, "a1", "a2^2"), (1, "1", "c1")]),
        "c2": _row(-1, "c1", [(1, "c2", "1"), (1, "a2^2", "a1"), (2, "a2", "b2"), (1, "1", "c2")]),
        "c3": _row(-1, "c3", [(1, "c3", "1"), (1, "b2", "a2"), (1, "a2", "b1"), (1, "1", "c3")]),
        "d1": _row(1, "d1", [
            (1, "d1", "1"), (1, "c1", "a1"), (2, "b1", "b2"), (1, "a1", "c2"), (1, "1", "d1"),
        ]),
    }
    return HopfTable("C2", rows)


# ------------------------------------------------------------------- checks

@dataclass
class HopfReport:
    convention: str
    checks: Dict[str, List[str]] = field(default_factory=dict)
    terms: int = 0

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    def failures(self) -> List[str]:
        return [f"{k}: {m}" for k, msgs in self.checks.items() for m in msgs]

    def summary(self) -> str:
        lines = [f"hopf table ({self.terms} coproduct terms, convention {self.convention})"]
        for name, msgs in self.checks.items():
            lines.append(f"  {name:<22} {'ok' if not msgs else f'FAIL ({len(msgs)})'}")
            lines.extend(f"    - {m}" for m in msgs[:10])
        return "\n".join(lines)


def _check_names(t: GeneratorTable, h: HopfTable) -> None:
    mentioned = set()
    for name, row in h.rows.items():
        if name != "1":
            mentioned.add(name)
        for w in (row.antipode, *(x for term in row.coproduct for x in (term.left, term.right))):
            mentioned.update(n for n, _ in w)
    missing = sorted(mentioned - set(t.index))
    if missing:
        raise KeyError(f"hopf table names generators missing from the {t.group} table: {missing}")


def _exps(t: GeneratorTable, w: Word) -> Tuple[int, ...]:
    return Monomial.from_dict(t, dict(w)).exponents


def _degree(t: GeneratorTable, w: Word) -> Tuple[int, ...]:
    return t.degree_of(_exps(t, w))


def _poly(t: GeneratorTable, w: Word) -> Polytope:
    return t.polytope_of(_exps(t, w))


def _row_word(name: str) -> Word:
    return () if name == "1" else ((name, 1),)


def check_coproduct_grading(t: GeneratorTable, h: HopfTable) -> List[str]:
    """Each term ``x_i (x) x_j'`` of Delta(x) has degree(x_i) + degree(x_j') = degree(x)."""
    _check_names(t, h)
    out = []
    for name, row in h.rows.items():
        target = _degree(t, _row_word(name))
        for term in row.coproduct:
            d = tuple(a + b for a, b in zip(_degree(t, term.left), _degree(t, term.right)))
            if d != target:
                out.append(f"Delta({name}) term {term}: degree {d} != {target}")
    return out


def check_counit_terms(h: HopfTable) -> List[str]:
    out = []
    for name, row in h.rows.items():
        w = _row_word(name)
        for left, right in ((w, ()), ((), w)):
            hits = [term for term in row.coproduct if term.left == left and term.right == right]
            if len(hits) != 1 or hits[0].coefficient != 1:
                out.append(f"Delta({name}) lacks {format_word(left)} (x) {format_word(right)} with coefficient 1")
    return out


def check_positivity(h: HopfTable) -> List[str]:
    return [
        f"Delta({name}) term {term}: coefficient is not a positive integer"
        for name, row in h.rows.items()
        for term in row.coproduct
        if not (isinstance(term.coefficient, int) and term.coefficient >= 1)
    ]


def _power(sign: int, w: Word, e: int) -> Tuple[int, Word]:
    return sign ** e, tuple((n, k * e) for n, k in w)


def apply_antipode(h: HopfTable, sign: int, w: Word) -> Tuple[int, Word]:
    """S on a signed monomial; S is multiplicative on this commutative algebra."""
    out_sign, out = sign, ()
    for name, e in w:
        row = h.rows[name]
        s, m = _power(row.antipode_sign, row.antipode, e)
        out_sign *= s
        out = _mul(out, m)
    return out_sign, out


def check_antipode_involution(h: HopfTable) -> List[str]:
    out = []
    for name, row in h.rows.items():
        sign, w = apply_antipode(h, row.antipode_sign, row.antipode)
        if (sign, w) != (1, _row_word(name)):
            out.append(f"S(S({name})) = {'-' if sign < 0 else ''}{format_word(w)}")
    return out


def placed_factors(t: GeneratorTable, name: str, term: TensorTerm, convention: str) -> Tuple[Polytope, Polytope]:
    """The polytopes of ``x_i`` and of ``x_j'`` placed inside the picture of ``x``."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")
    left = _poly(t, term.left)
    right = _poly(t, term.right)
    if convention == "translate":
        return left, geo.translate(right, _degree(t, term.left))
    return left, geo.translate(geo.negate(right), _degree(t, _row_word(name)))


def check_geometric_conditions(
    t: GeneratorTable, h: HopfTable, convention: str = DEFAULT_CONVENTION
) -> List[str]:
    """Containment, single-point meeting at degree(x_i), and k >= 1 for every term."""
    _check_names(t, h)
    out = []
    for name, row in h.rows.items():
        if name == "1":
            continue
        whole = _poly(t, _row_word(name))
        for term in row.coproduct:
            pi, pj = placed_factors(t, name, term, convention)
            where = f"Delta({name}) term {term}"
            if not geo.contains(whole, pi):
                out.append(f"{where}: {format_word(term.left)} is not contained in {name}")
            if not geo.contains(whole, pj):
                out.append(f"{where}: placed {format_word(term.right)} is not contained in {name}")
            meet = geo.intersection(pi, pj)
            expected = geo.point_polytope(_degree(t, term.left))
            if meet != expected:
                out.append(f"{where}: factors meet in {meet}, expected the single point {expected.vertices[0]}")
            if not (isinstance(term.coefficient, int) and term.coefficient >= 1):
                out.append(f"{where}: coefficient {term.coefficient} is not a positive integer")
    return out


def verify_hopf(t: GeneratorTable, h: Optional[HopfTable] = None, convention: str = DEFAULT_CONVENTION) -> HopfReport:
    h = h or sp4_hopf_table()
    rep = HopfReport(convention)
    rep.terms = sum(len(r.coproduct) for r in h.rows.values())
    rep.checks["grading"] = check_coproduct_grading(t, h)
    rep.checks["counit_terms"] = check_counit_terms(h)
    rep.checks["positivity"] = check_positivity(h)
    rep.checks["geometric"] = check_geometric_conditions(t, h, convention)
    rep.checks["antipode_involution"] = check_antipode_involution(h)
    return rep
