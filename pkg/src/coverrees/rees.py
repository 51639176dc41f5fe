"""Rees presentations of monomial ideals and the x-condition.

The Rees algebra of an ideal generated by monomials u_1, ..., u_q is
presented by adjoining y_1, ..., y_q with y_j mapping onto u_j times the
auxiliary variable; the defining ideal is the toric kernel of that map.
Generators are sorted so y_1 carries the lex-largest monomial.  The
x-condition asks every minimal generator of the initial ideal (under
``sharp``) to carry base degree at most one; when the initial ideal is
generated in total degree two, powers of the ideal are minimally
generated by the images of the standard monomials in the y-block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .binomial_gb import GBConfig, GroebnerBasis, initial_ideal, toric_kernel
from .monomials import (
    LEX_ON_Y,
    Monomial,
    MonomialIdeal,
    VariableUniverse,
    canonical_key,
    power,
    product,
)

__all__ = [
    "ReesPresentation",
    "XConditionReport",
    "StandardMonomialSet",
    "rees_presentation",
    "x_condition",
    "standard_monomials",
    "minimal_generation_check",
    "pi_image",
]


@dataclass(frozen=True)
class ReesPresentation:
    """A monomial ideal together with the reduced basis of its Rees kernel.

    ``generators[j-1]`` is the image monomial of ``y<j>``; ``universe`` is
    the presentation ring (base block plus y-block); ``degenerate`` flags
    the unit ideal, whose kernel is zero.
    """

    ideal: MonomialIdeal
    generators: tuple[Monomial, ...]
    universe: VariableUniverse
    basis: GroebnerBasis
    degenerate: bool

    @property
    def y_count(self) -> int:
        return len(self.generators)


def rees_presentation(ideal: MonomialIdeal, config: GBConfig | None = None) -> ReesPresentation:
    """Present the Rees algebra of a nonzero monomial ideal.

    Generators are sorted descending under lex on the base block, so the
    first adjoined variable maps to the lex-largest generator.  The unit
    ideal is allowed and flagged degenerate (single generator 1, empty
    kernel).
    """
    if ideal.is_zero:
        raise ValueError("the zero ideal has no Rees presentation")
    if ideal.universe.y_vars or ideal.universe.elim_var is not None:
        raise ValueError("the ideal must live in a base-block-only universe")
    gens = sorted(ideal.gens, key=canonical_key, reverse=True)
    for j in range(1, len(gens) + 1):
        name = f"y{j}"
        if name in ideal.universe.s_vars:
            raise ValueError(f"vertex label {name!r} collides with an adjoined variable")
    if "t" in ideal.universe.s_vars:
        raise ValueError("vertex label 't' collides with the elimination variable")
    with_t = VariableUniverse(ideal.universe.s_vars, (), "t")
    t = with_t.monomial({"t": 1})
    images = [g.restricted(with_t) * t for g in gens]
    basis = toric_kernel(images, config)
    return ReesPresentation(
        ideal=ideal,
        generators=tuple(gens),
        universe=basis.universe,
        basis=basis,
        degenerate=ideal.is_unit,
    )


@dataclass(frozen=True)
class XConditionReport:
    """Verdicts about the minimal generators of the initial ideal."""

    holds: bool
    offending_generators: tuple[Monomial, ...]
    quadratic: bool
    quadratic_offenders: tuple[Monomial, ...]
    initial_generators: tuple[Monomial, ...]


def x_condition(p: ReesPresentation) -> XConditionReport:
    """Check base degree <= 1 and total degree = 2 on the initial ideal."""
    in_gens = initial_ideal(p.basis).gens
    offenders = tuple(m for m in in_gens if m.s_degree > 1)
    quad_offenders = tuple(m for m in in_gens if m.total_degree != 2)
    return XConditionReport(
        holds=not offenders,
        offending_generators=offenders,
        quadratic=not quad_offenders,
        quadratic_offenders=quad_offenders,
        initial_generators=in_gens,
    )


@dataclass(frozen=True)
class StandardMonomialSet:
    """Degree-k monomials in the y-block outside the initial ideal.

    ``members`` are sorted ascending under lex on the y-block and
    ``mapped_generators[i]`` is the image of ``members[i]`` in the base
    ring.  The degenerate (unit ideal) case carries empty members and a
    flag instead of an error.
    """

    k: int
    members: tuple[Monomial, ...]
    mapped_generators: tuple[Monomial, ...]
    degenerate: bool = False


def standard_monomials(p: ReesPresentation, k: int) -> StandardMonomialSet:
    """Standard monomials of degree k in the y-block.

    Only the pure-y minimal generators of the initial ideal can divide a
    y-monomial, so they are the whole filter.
    """
    if k < 1:
        raise ValueError("standard_monomials expects k >= 1")
    if p.degenerate:
        return StandardMonomialSet(k=k, members=(), mapped_generators=(), degenerate=True)
    in_gens = initial_ideal(p.basis).gens
    pure_y = [m for m in in_gens if m.s_degree == 0]
    members = []
    q = p.y_count
    for combo in combinations_with_replacement(range(1, q + 1), k):
        exps: dict[str, int] = {}
        for j in combo:
            name = f"y{j}"
            exps[name] = exps.get(name, 0) + 1
        m = p.universe.monomial(exps)
        if not any(g.divides(m) for g in pure_y):
            members.append(m)
    members.sort(key=LEX_ON_Y.key)
    base = p.ideal.universe
    mapped = []
    for m in members:
        factors = []
        for name, e in m.exps.items():
            j = int(name[1:])
            factors.extend([p.generators[j - 1]] * e)
        mapped.append(product(base, factors))
    if len(set(mapped)) != len(mapped):
        raise AssertionError("distinct standard monomials mapped to equal generators")
    return StandardMonomialSet(k=k, members=tuple(members), mapped_generators=tuple(mapped))


def minimal_generation_check(p: ReesPresentation, k: int) -> bool:
    """Mapped standard monomials == minimal generators of the k-th power.

    Guaranteed to hold when the initial ideal is quadratic; callable (and
    recorded, not assumed) in every other case.  Degenerate presentations
    report False since the standard set is empty by convention.
    """
    sm = standard_monomials(p, k)
    if sm.degenerate:
        return False
    return set(sm.mapped_generators) == set(power(p.ideal, k).gens)


def pi_image(p: ReesPresentation, m: Monomial) -> Monomial:
    """Image of a presentation-ring monomial in the base ring with the
    auxiliary variable: x_i -> x_i, y_j -> generator_j * t."""
    with_t = VariableUniverse(p.ideal.universe.s_vars, (), "t")
    exps = {}
    y_total = 0
    factors = []
    for name, e in m.exps.items():
        if p.universe.block_of(name) == "y":
            j = int(name[1:])
            factors.extend([p.generators[j - 1].restricted(with_t)] * e)
            y_total += e
        else:
            exps[name] = e
    out = with_t.monomial(exps)
    for f in factors:
        out = out * f
    return out * with_t.monomial({"t": y_total})
