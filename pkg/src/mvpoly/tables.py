"""Generator tables: generator polytopes, their degrees and the relation graph.

A table file is UTF-8 JSON::

    {
      "group": "C2",
      "convention_note": "...",
      "generators": [
        {"name": "a1", "degree": [-1, 0], "vertices": [["-1", "0"], ["0", "0"]],
         "provenance": "..."},
        ...
      ],
      "incompat_edges": [["a1", "a2"], ...]
    }

Coordinates are simple-root coordinates written as exact rationals ``"p/q"``
(integers as ``"p"``).  Shipped tables live in ``mvpoly/data``; the
``MVPOLY_DATA_DIR`` environment variable points at an alternative directory.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import geometry as geo
from .geometry import Polytope
from .rootsys import SUPPORTED_GROUPS, load_root_system


class TableError(ValueError):
    """A table file does not parse or breaks a table invariant."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: Tuple[int, ...]
    polytope: Polytope
    provenance: str = ""


@dataclass(frozen=True)
class Monomial:
    """A product of generators; ``factors`` lists (name, exponent) in table order."""

    factors: Tuple[Tuple[str, int], ...]
    exponents: Tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def from_exponents(cls, t: "GeneratorTable", exps: Sequence[int]) -> "Monomial":
        exps = tuple(exps)
        return cls(tuple((g.name, e) for g, e in zip(t.generators, exps) if e), exps)

    @classmethod
    def from_dict(cls, t: "GeneratorTable", exps: Dict[str, int]) -> "Monomial":
        unknown = set(exps) - set(t.index)
        if unknown:
            raise KeyError(f"unknown generators {sorted(unknown)}")
        if any(e < 0 for e in exps.values()):
            raise ValueError("exponents must be nonnegative")
        return cls.from_exponents(t, [exps.get(g.name, 0) for g in t.generators])

    @classmethod
    def parse(cls, t: "GeneratorTable", text: str) -> "Monomial":
        """Read ``"a1 b2^2"`` style text (``"1"`` is the empty monomial)."""
        exps: Dict[str, int] = {}
        for tok in text.replace("*", " ").split():
            if tok == "1":
                continue
            name, _, power = tok.partition("^")
            exps[name] = exps.get(name, 0) + (int(power) if power else 1)
        return cls.from_dict(t, exps)

    def as_dict(self) -> Dict[str, int]:
        return dict(self.factors)

    @property
    def support(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.factors)


class GeneratorTable:
    """Immutable generator data for one group plus a Minkowski-sum cache."""

    def __init__(
        self,
        group: str,
        generators: Iterable[Generator],
        incompat_edges: Iterable[Sequence[str]],
        convention_note: str = "",
        check: bool = True,
    ):
        self.group = group
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise TableError("generator names are not unique")
        edges = set()
        for e in incompat_edges:
            a, b = e
            for n in (a, b):
                if n not in self.index:
                    raise TableError(f"relation edge ({a}, {b}) names unknown generator {n!r}")
            if a == b:
                raise TableError(f"relation edge ({a}, {b}) is a loop")
            edges.add(tuple(sorted((a, b), key=self.index.__getitem__)))
        self.incompat_edges: Tuple[Tuple[str, str], ...] = tuple(
            sorted(edges, key=lambda e: (self.index[e[0]], self.index[e[1]]))
        )
        self.convention_note = convention_note
        self._bad = [0] * len(self.generators)
        for a, b in self.incompat_edges:
            ia, ib = self.index[a], self.index[b]
            self._bad[ia] |= 1 << ib
            self._bad[ib] |= 1 << ia
        self._polys: Dict[Tuple[int, ...], Polytope] = {}
        self._zero = geo.point_polytope((0,) * self.rank)
        if check:
            check_table(self)

    @property
    def rank(self) -> int:
        return load_root_system(self.group).rank

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def generator(self, name: str) -> Generator:
        return self.generators[self.index[name]]

    def __eq__(self, other):
        if not isinstance(other, GeneratorTable):
            return NotImplemented
        return (
            self.group == other.group
            and [(g.name, g.degree, g.polytope) for g in self.generators]
            == [(g.name, g.degree, g.polytope) for g in other.generators]
            and self.incompat_edges == other.incompat_edges
        )

    def __repr__(self):
        return f"GeneratorTable({self.group}, {len(self.generators)} generators, {len(self.incompat_edges)} relations)"

    def compatible_with_all(self, i: int, support: Iterable[int]) -> bool:
        bad = self._bad[i]
        return not any(bad >> j & 1 for j in support)

    def is_admissible(self, m: Monomial) -> bool:
        sup = [self.index[n] for n in m.support]
        return all(not (self._bad[i] >> j & 1) for i in sup for j in sup)

    def degree_of(self, exps: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * self.rank
        for g, e in zip(self.generators, exps):
            if e:
                for k, c in enumerate(g.degree):
                    out[k] += e * c
        return tuple(out)

    def polytope_of(self, exps: Sequence[int]) -> Polytope:
        """Minkowski sum of the factors (memoized per exponent vector)."""
        key = tuple(exps)
        P = self._polys.get(key)
        if P is not None:
            return P
        j = max((i for i, e in enumerate(key) if e), default=None)
        if j is None:
            return self._zero
        prev = key[:j] + (key[j] - 1,) + key[j + 1:]
        P = geo.minkowski_sum(self.polytope_of(prev), self.generators[j].polytope)
        self._polys[key] = P
        return P

    def with_changes(self, generators=None, incompat_edges=None, check=False) -> "GeneratorTable":
        """A copy with some generators or the relation graph replaced."""
        gens = list(self.generators)
        if generators:
            for g in generators:
                gens[self.index[g.name]] = g
        edges = self.incompat_edges if incompat_edges is None else incompat_edges
        return GeneratorTable(self.group, gens, edges, self.convention_note, check=check)


def generator_problems(group: str, g: Generator) -> List[str]:
    """Invariant violations of a single generator (empty when fine)."""
    rs = load_root_system(group)
    roots = rs.positive_roots
    P = g.polytope
    problems = []
    origin = (0,) * rs.rank
    if P.dim_ambient != rs.rank:
        return [f"{g.name}: polytope has ambient dimension {P.dim_ambient}, expected {rs.rank}"]
    if not all(isinstance(c, int) and c <= 0 for c in g.degree):
        problems.append(f"{g.name}: degree {g.degree} is not in the negative root semigroup")
    for v in P.vertices:
        if not all(isinstance(c, int) for c in v):
            problems.append(f"{g.name}: vertex {v} is not a root-lattice point")
    if origin not in P.vertices:
        problems.append(f"{g.name}: origin is not a vertex")
    if tuple(g.degree) not in P.vertices:
        problems.append(f"{g.name}: degree {g.degree} is not a vertex")
    for a, b in geo.edges(P):
        d = tuple(x - y for x, y in zip(a, b))
        if not any(geo.is_parallel(d, r) for r in roots):
            problems.append(f"{g.name}: edge {a}-{b} is not parallel to a root")
    return problems


def check_table(t: GeneratorTable) -> None:
    problems = []
    for g in t.generators:
        problems.extend(generator_problems(t.group, g))
    if problems:
        raise TableError("; ".join(problems))


# -------------------------------------------------------------------- files

def table_to_dict(t: GeneratorTable) -> dict:
    return {
        "group": t.group,
        "convention_note": t.convention_note,
        "generators": [
            {
                "name": g.name,
                "degree": list(g.degree),
                "vertices": geo.polytope_to_json(g.polytope),
                "provenance": g.provenance,
            }
            for g in t.generators
        ],
        "incompat_edges": [list(e) for e in t.incompat_edges],
    }


def _dump(obj, indent=0) -> str:
    # JSON with flat lists (points, degrees, edges) kept on one line
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, list) and obj and not all(isinstance(x, (str, int)) for x in obj):
        if all(isinstance(x, list) for x in obj) and sum(len(x) for x in obj) <= 12:
            return "[" + ", ".join(_dump(x) for x in obj) + "]"
        return "[\n" + ",\n".join(pad + _dump(x, indent + 1) for x in obj) + "\n" + "  " * indent + "]"
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def dumps_table(t: GeneratorTable) -> str:
    """Canonical file text; ``calibrate`` reproduces shipped files byte for byte."""
    return _dump(table_to_dict(t)) + "\n"


def save_table(t: GeneratorTable, destination) -> None:
    Path(destination).write_text(dumps_table(t), encoding="utf-8")


def table_from_dict(doc: dict, source: str = "<table>") -> GeneratorTable:
    def fail(msg):
        raise TableError(f"{source}: {msg}")

    if not isinstance(doc, dict):
        fail("top level must be an object")
    for key in ("group", "generators", "incompat_edges"):
        if key not in doc:
            fail(f"missing field {key!r}")
    group = doc["group"]
    if group not in SUPPORTED_GROUPS:
        fail(f"field 'group': unsupported group {group!r}")
    gens = []
    for i, gd in enumerate(doc["generators"]):
        where = f"generators[{i}]"
        for key in ("name", "degree", "vertices"):
            if key not in gd:
                fail(f"{where}: missing field {key!r}")
        degree = gd["degree"]
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in degree):
            fail(f"{where}.degree: entries must be integers")
        try:
            poly = geo.polytope_from_json(gd["vertices"])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            fail(f"{where}.vertices: {exc}")
        gens.append(Generator(gd["name"], tuple(degree), poly, gd.get("provenance", "")))
    edges = doc["incompat_edges"]
    for j, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2):
            fail(f"incompat_edges[{j}]: expected a pair of names")
    try:
        return GeneratorTable(group, gens, [tuple(e) for e in edges], doc.get("convention_note", ""))
    except TableError as exc:
        fail(str(exc))


def load_table(source) -> GeneratorTable:
    path = Path(source)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise TableError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return table_from_dict(doc, str(path))


def data_dir() -> Path:
    override = os.environ.get("MVPOLY_DATA_DIR")
    if override:
        return Path(override)
    return Path(__file__).with_name("data")


_BUILTIN: Dict[Tuple[str, str], GeneratorTable] = {}


def builtin_table(group: str, directory: Optional[os.PathLike] = None) -> GeneratorTable:
    """The shipped table for ``group`` (A1, A2, C2 or A3)."""
    if group not in SUPPORTED_GROUPS:
        raise ValueError(f"unknown group {group!r}; supported groups: {', '.join(SUPPORTED_GROUPS)}")
    path = Path(directory) if directory is not None else data_dir()
    key = (group, str(path))
    if key not in _BUILTIN:
        _BUILTIN[key] = load_table(path / f"{group}.json")
    return _BUILTIN[key]
