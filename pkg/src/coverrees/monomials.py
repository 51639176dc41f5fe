"""Exact monomial arithmetic over a blocked variable universe.

A universe declares up to three disjoint, internally ordered variable
blocks: the polynomial-ring block (graph vertices; sequence order is the
lex priority, highest first), an adjoined block ``y1 > y2 > ...`` used to
present Rees algebras, and an optional elimination variable.  Monomials
are immutable sparse exponent maps over one universe.

All orders are pure lexicographic within a block.  The composite orders
compare blockwise: ``sharp`` compares the y-block first and breaks ties
on the base block; ``elim_sharp`` compares the elimination variable
before everything else, so that restricted to elimination-free monomials
it coincides with ``sharp``.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "VariableUniverse",
    "Monomial",
    "MonomialOrder",
    "MonomialIdeal",
    "LEX_ON_S",
    "LEX_ON_Y",
    "SHARP",
    "ELIM_SHARP",
    "compare",
    "colon",
    "minimalize",
    "cover_ideal",
    "power",
    "component",
    "variable",
    "product",
    "parse_monomial",
    "monomials_of_degree",
    "canonical_key",
]

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class VariableUniverse:
    """Declared variable blocks; the sequence order is the priority."""

    __slots__ = ("s_vars", "y_vars", "elim_var", "_blocks")

    def __init__(
        self,
        s_vars: Sequence[str] = (),
        y_vars: Sequence[str] = (),
        elim_var: str | None = None,
    ):
        self.s_vars = tuple(s_vars)
        self.y_vars = tuple(y_vars)
        self.elim_var = elim_var
        blocks: dict[str, str] = {}
        for block, names in (("s", self.s_vars), ("y", self.y_vars)):
            for name in names:
                if not _NAME_RE.match(name):
                    raise ValueError(f"bad variable name {name!r}")
                if name in blocks:
                    raise ValueError(f"duplicate variable {name!r}")
                blocks[name] = block
        if elim_var is not None:
            if not _NAME_RE.match(elim_var):
                raise ValueError(f"bad variable name {elim_var!r}")
            if elim_var in blocks:
                raise ValueError(f"duplicate variable {elim_var!r}")
            blocks[elim_var] = "t"
        self._blocks = blocks

    @property
    def all_vars(self) -> tuple[str, ...]:
        extra = (self.elim_var,) if self.elim_var is not None else ()
        return self.s_vars + self.y_vars + extra

    def block_of(self, name: str) -> str:
        try:
            return self._blocks[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def rees_extension(self, count: int, elim_var: str = "t") -> "VariableUniverse":
        """Adjoin y1..y<count> and an elimination variable to the base block."""
        if self.y_vars or self.elim_var is not None:
            raise ValueError("universe already extended")
        y_names = tuple(f"y{j}" for j in range(1, count + 1))
        return VariableUniverse(self.s_vars, y_names, elim_var)

    def drop_elim(self) -> "VariableUniverse":
        return VariableUniverse(self.s_vars, self.y_vars, None)

    def one(self) -> "Monomial":
        return Monomial(self, {})

    def monomial(self, exps: Mapping[str, int]) -> "Monomial":
        return Monomial(self, exps)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VariableUniverse)
            and self.s_vars == other.s_vars
            and self.y_vars == other.y_vars
            and self.elim_var == other.elim_var
        )

    def __hash__(self) -> int:
        return hash((self.s_vars, self.y_vars, self.elim_var))

    def __repr__(self) -> str:
        return (
            f"VariableUniverse(s={list(self.s_vars)}, y={list(self.y_vars)}, "
            f"elim={self.elim_var!r})"
        )


class Monomial:
    """Immutable sparse exponent vector over one universe.

    Zero exponents are never stored; blockwise degrees are computed once
    at construction so invariant checks can compare them to fresh sums.
    """

    __slots__ = ("universe", "exps", "total_degree", "s_degree", "y_degree", "t_degree")

    def __init__(self, universe: VariableUniverse, exps: Mapping[str, int]):
        clean: dict[str, int] = {}
        s_deg = y_deg = t_deg = 0
        for name, e in exps.items():
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"exponent of {name!r} must be an int, got {e!r}")
            if e < 0:
                raise ValueError(f"negative exponent for {name!r}")
            if e == 0:
                continue
            block = universe.block_of(name)
            clean[name] = e
            if block == "s":
                s_deg += e
            elif block == "y":
                y_deg += e
            else:
                t_deg += e
        self.universe = universe
        self.exps = clean
        self.s_degree = s_deg
        self.y_degree = y_deg
        self.t_degree = t_deg
        self.total_degree = s_deg + y_deg + t_deg

    # -- queries -------------------------------------------------------

    @property
    def is_one(self) -> bool:
        return not self.exps

    def exponent(self, name: str) -> int:
        self.universe.block_of(name)
        return self.exps.get(name, 0)

    def divides(self, other: "Monomial") -> bool:
        _same_universe(self, other)
        if self.total_degree > other.total_degree:
            return False
        oexps = other.exps
        return all(e <= oexps.get(v, 0) for v, e in self.exps.items())

    # -- arithmetic ----------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_universe(self, other)
        exps = dict(self.exps)
        for v, e in other.exps.items():
            exps[v] = exps.get(v, 0) + e
        return Monomial(self.universe, exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises ValueError when not divisible."""
        _same_universe(self, other)
        exps = dict(self.exps)
        for v, e in other.exps.items():
            r = exps.get(v, 0) - e
            if r < 0:
                raise ValueError(f"{other} does not divide {self}")
            if r == 0:
                exps.pop(v, None)
            else:
                exps[v] = r
        return Monomial(self.universe, exps)

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_universe(self, other)
        exps = {v: min(e, other.exps.get(v, 0)) for v, e in self.exps.items()}
        return Monomial(self.universe, exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_universe(self, other)
        exps = dict(self.exps)
        for v, e in other.exps.items():
            if e > exps.get(v, 0):
                exps[v] = e
        return Monomial(self.universe, exps)

    def restricted(self, universe: VariableUniverse) -> "Monomial":
        """The same exponents read in another universe (support must fit)."""
        return Monomial(universe, self.exps)

    # -- identity ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Monomial)
            and self.universe == other.universe
            and self.exps == other.exps
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.exps.items()))

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for v in self.universe.all_vars:
            e = self.exps.get(v, 0)
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _same_universe(a: Monomial, b: Monomial) -> None:
    if a.universe != b.universe:
        raise ValueError("monomials live in different universes")


def variable(universe: VariableUniverse, name: str, power: int = 1) -> Monomial:
    return Monomial(universe, {name: power})


def product(universe: VariableUniverse, factors: Iterable[Monomial]) -> Monomial:
    out = universe.one()
    for f in factors:
        out = out * f
    return out


def colon(u: Monomial, v: Monomial) -> Monomial:
    """u : v as monomials, i.e. u / gcd(u, v)."""
    return u / u.gcd(v)


_FACTOR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$")


def parse_monomial(text: str, universe: VariableUniverse) -> Monomial:
    """Parse ``x1^2*x3^2`` / ``z1_2*y3`` / ``1`` against a universe."""
    text = text.strip()
    if text == "1":
        return universe.one()
    exps: dict[str, int] = {}
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise ValueError(f"bad monomial factor {factor!r}")
        name, e = m.group(1), int(m.group(2) or 1)
        universe.block_of(name)
        exps[name] = exps.get(name, 0) + e
    return Monomial(universe, exps)


# ---------------------------------------------------------------------------
# Orders


class MonomialOrder:
    """One of the four order kinds; totality holds on a universe whose
    variables are all visible to the kind (sharp needs no elimination
    variable, elim_sharp sees everything)."""

    __slots__ = ("kind",)

    KINDS = ("lex_on_s", "lex_on_y", "sharp", "elim_sharp")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind

    def key(self, m: Monomial):
        exps = m.exps
        u = m.universe
        if self.kind == "lex_on_s":
            return tuple(exps.get(v, 0) for v in u.s_vars)
        if self.kind == "lex_on_y":
            return tuple(exps.get(v, 0) for v in u.y_vars)
        s_key = tuple(exps.get(v, 0) for v in u.s_vars)
        y_key = tuple(exps.get(v, 0) for v in u.y_vars)
        if self.kind == "sharp":
            return (y_key, s_key)
        return (m.t_degree, y_key, s_key)

    def compare(self, u: Monomial, v: Monomial) -> int:
        _same_universe(u, v)
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self) -> int:
        return hash(self.kind)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind!r})"


LEX_ON_S = MonomialOrder("lex_on_s")
LEX_ON_Y = MonomialOrder("lex_on_y")
SHARP = MonomialOrder("sharp")
ELIM_SHARP = MonomialOrder("elim_sharp")


def compare(order: MonomialOrder, u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 for less / equal / greater under the order."""
    return order.compare(u, v)


def canonical_key(m: Monomial):
    """Universe-wide sort key (elimination degree, y-block lex, base lex)."""
    return ELIM_SHARP.key(m)


# ---------------------------------------------------------------------------
# Monomial ideals


class MonomialIdeal:
    """A monomial ideal held as its unique minimal generating set, sorted
    descending under the canonical key so equal ideals compare equal."""

    __slots__ = ("universe", "gens")

    def __init__(self, universe: VariableUniverse, gens: Iterable[Monomial]):
        gens = list(gens)
        for g in gens:
            if g.universe != universe:
                raise ValueError("generator outside the declared universe")
        gens = sorted(set(gens), key=canonical_key, reverse=True)
        for i, g in enumerate(gens):
            for h in gens:
                if h is not g and h.divides(g):
                    raise ValueError(f"generating set is not minimal: {h} divides {g}")
        self.universe = universe
        self.gens = tuple(gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def min_degree(self) -> int:
        return min(g.total_degree for g in self.gens)

    def max_degree(self) -> int:
        return max(g.total_degree for g in self.gens)

    def is_equigenerated(self) -> bool:
        return not self.is_zero and self.min_degree() == self.max_degree()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.universe == other.universe
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash(self.gens)

    def __repr__(self) -> str:
        inner = ", ".join(str(g) for g in self.gens)
        return f"MonomialIdeal({inner})"


def minimalize(gens: Iterable[Monomial], universe: VariableUniverse | None = None) -> MonomialIdeal:
    """Drop duplicates and divisible generators; keep the minimal set."""
    pool = list(gens)
    if universe is None:
        if not pool:
            raise ValueError("universe required for an empty generating set")
        universe = pool[0].universe
    distinct = sorted(set(pool), key=lambda m: (m.total_degree, canonical_key(m)))
    kept: list[Monomial] = []
    for m in distinct:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return MonomialIdeal(universe, kept)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k via k-fold products of generators, then minimalization."""
    if k < 1:
        raise ValueError("power expects k >= 1")
    if ideal.is_zero:
        return ideal
    prods = {
        product(ideal.universe, combo)
        for combo in combinations_with_replacement(ideal.gens, k)
    }
    return minimalize(prods, ideal.universe)


def monomials_of_degree(
    universe: VariableUniverse, d: int, variables: Sequence[str] | None = None
) -> Iterator[Monomial]:
    """All degree-d monomials in the given variables (default: the whole
    universe), in a deterministic enumeration order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    names = tuple(variables) if variables is not None else universe.all_vars
    for combo in combinations_with_replacement(names, d):
        exps: dict[str, int] = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + 1
        yield Monomial(universe, exps)


def component(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal generated by every degree-j monomial of the ideal."""
    if j < 0:
        raise ValueError("component degree must be nonnegative")
    universe = ideal.universe
    found: set[Monomial] = set()
    for g in ideal.gens:
        if g.total_degree > j:
            continue
        for m in monomials_of_degree(universe, j - g.total_degree):
            found.add(g * m)
    return MonomialIdeal(universe, found)


def cover_ideal(graph) -> MonomialIdeal:
    """The ideal generated by the minimal-vertex-cover monomials of a graph.

    The variable priority is the graph's vertex order.  An edgeless graph
    has the single empty cover, hence the unit ideal.
    """
    from .graphs import minimal_vertex_covers

    universe = VariableUniverse(s_vars=graph.labels)
    gens = [
        Monomial(universe, {v: 1 for v in cov.members})
        for cov in minimal_vertex_covers(graph)
    ]
    return minimalize(gens, universe)
